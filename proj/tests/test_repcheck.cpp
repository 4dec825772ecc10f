#include <doctest.h>

#include <stdexcept>

#include "twistkit/cocycle.hpp"
#include "twistkit/repcheck.hpp"

using namespace twistkit;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = Scalar::integer(rows[i][j]);
    return m;
}

MatrixModule hand_module(Matrix x, Matrix y, Matrix z) {
    MatrixModule m;
    m.family = "hand";
    m.dim = static_cast<unsigned>(z.rows());
    m.X = std::move(x);
    m.Y = std::move(y);
    m.Z = std::move(z);
    return m;
}

// Block-diagonal direct sum, for the reducible counterexamples.
MatrixModule direct_sum(const MatrixModule& a, const MatrixModule& b) {
    size_t d = a.dim + b.dim;
    Matrix x(d, d), y(d, d), z(d, d);
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            x.at(i, j) = a.X.at(i, j);
            y.at(i, j) = a.Y.at(i, j);
            z.at(i, j) = a.Z.at(i, j);
        }
    for (size_t i = 0; i < b.dim; ++i)
        for (size_t j = 0; j < b.dim; ++j) {
            x.at(a.dim + i, a.dim + j) = b.X.at(i, j);
            y.at(a.dim + i, a.dim + j) = b.Y.at(i, j);
            z.at(a.dim + i, a.dim + j) = b.Z.at(i, j);
        }
    return hand_module(std::move(x), std::move(y), std::move(z));
}

std::vector<MatrixModule> small_catalog(unsigned max_n) {
    std::vector<MatrixModule> out;
    for (unsigned n = 0; n <= max_n; ++n) out.push_back(build_E(n));
    for (unsigned n = 1; n <= max_n; ++n)
        for (int sign : {+1, -1}) out.push_back(build_A(n, sign));
    for (unsigned n = 0; n <= max_n; ++n)
        for (int sign : {+1, -1}) out.push_back(build_B(n, sign));
    return out;
}

}  // namespace

TEST_SUITE("repcheck") {

TEST_CASE("matrix arithmetic and rank") {
    Matrix id = Matrix::identity(3);
    CHECK(id * id == id);
    CHECK((id - id).is_zero());
    CHECK(id.trace() == Scalar::integer(3));
    Matrix a = from_rows({{1, 2}, {3, 4}});
    Matrix b = from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(a.scale(Scalar::integer(2)) == from_rows({{2, 4}, {6, 8}}));
    CHECK_THROWS_AS(a.at(2, 0), std::domain_error);
    CHECK_THROWS_AS(a * Matrix(3, 3), std::domain_error);

    CHECK(matrix_rank({{Scalar::integer(1), Scalar::integer(2)},
                       {Scalar::integer(2), Scalar::integer(4)}}) == 1);
    CHECK(matrix_rank({{Scalar::integer(2), Scalar::integer(3)},
                       {Scalar::integer(5), Scalar::integer(7)}}) == 2);
    // A rank-one grid whose entries live in the Laurent ring.
    Scalar q = Scalar::q_power(1);
    CHECK(matrix_rank({{Scalar::one(), q}, {q, q * q}}) == 1);
    CHECK(matrix_rank({{Scalar::one() + q, Scalar::one()}, {Scalar::one(), Scalar::one()}}) == 2);
    CHECK(matrix_rank({}) == 0);
}

TEST_CASE("the printed small modules are reproduced entry for entry") {
    MatrixModule e2 = build_E(2);
    CHECK(e2.dim == 5);
    CHECK(e2.label() == "E_2");
    CHECK(e2.Z == from_rows({{4, 0, 0, 0, 0},
                             {0, 2, 0, 0, 0},
                             {0, 0, 0, 0, 0},
                             {0, 0, 0, -2, 0},
                             {0, 0, 0, 0, -4}}));
    CHECK(e2.X == from_rows({{0, 0, 0, 4, 0},
                             {0, 0, 1, 0, 0},
                             {0, 6, 0, 0, 0},
                             {1, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0}}));
    CHECK(e2.Y == from_rows({{0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 4},
                             {0, 0, 0, 1, 0},
                             {0, 0, 6, 0, 0},
                             {0, 1, 0, 0, 0}}));

    for (int sign : {+1, -1}) {
        MatrixModule a2 = build_A(2, sign);
        CHECK(a2.X == from_rows({{0, 3}, {1, 0}}));
        CHECK(a2.Y == from_rows({{0, 0}, {0, 2L * sign}}));
        CHECK(a2.Z == from_rows({{3, 0}, {0, -1}}));

        MatrixModule b1 = build_B(1, sign);
        CHECK(b1.X == from_rows({{2L * sign, 0}, {0, 0}}));
        CHECK(b1.Y == from_rows({{0, 3}, {1, 0}}));
        CHECK(b1.Z == from_rows({{1, 0}, {0, -3}}));

        MatrixModule b2 = build_B(2, sign);
        CHECK(b2.X == from_rows({{0, 8, 0}, {1, 0, 0}, {0, 0, 0}}));
        CHECK(b2.Y == from_rows({{0, 0, 5}, {0, 3L * sign, 0}, {1, 0, 0}}));
        CHECK(b2.Z == from_rows({{3, 0, 0}, {0, -1, 0}, {0, 0, -5}}));
    }
    CHECK(build_A(2, +1).label() == "A_2^+");
    CHECK(build_B(2, -1).label() == "B_2^-");
}

TEST_CASE("the defining relations hold across the families") {
    for (unsigned n = 0; n <= 10; ++n) CHECK(verify_relations(build_E(n)));
    for (unsigned n = 1; n <= 10; ++n)
        for (int sign : {+1, -1}) CHECK(verify_relations(build_A(n, sign)));
    for (unsigned n = 0; n <= 10; ++n)
        for (int sign : {+1, -1}) CHECK(verify_relations(build_B(n, sign)));
}

TEST_CASE("tampered modules fail the relation check") {
    MatrixModule bad = build_A(2, +1);
    bad.Z = bad.Z.scale(Scalar::integer(-1));
    CHECK(!verify_relations(bad));
    MatrixModule bent = build_E(3);
    bent.X.at(0, 1) += Scalar::one();
    CHECK(!verify_relations(bent));
}

TEST_CASE("invalid build parameters are rejected") {
    CHECK_THROWS_AS(build_A(0, +1), std::domain_error);
    CHECK_THROWS_AS(build_A(2, 0), std::domain_error);
    CHECK_THROWS_AS(build_A(2, 2), std::domain_error);
    CHECK_THROWS_AS(build_B(1, 5), std::domain_error);
}

TEST_CASE("simplicity via the span of words in the action") {
    for (const MatrixModule& m : small_catalog(6)) {
        CAPTURE(m.label());
        CHECK(is_simple(m));
    }
    CHECK(!is_simple(direct_sum(build_E(0), build_E(0))));
    CHECK(!is_simple(direct_sum(build_E(1), build_E(1))));
    // A sum of non-isomorphic simples is also not the full matrix algebra.
    CHECK(!is_simple(direct_sum(build_A(1, +1), build_B(0, -1))));
}

TEST_CASE("z spectra with traces separate the family members") {
    CHECK(z_spectra_distinct(small_catalog(6)));
    CHECK(!z_spectra_distinct({build_A(2, +1), build_A(2, +1)}));
    CHECK(z_spectra_distinct({build_A(2, +1), build_A(2, -1)}));
    CHECK(z_spectra_distinct({build_B(3, +1), build_B(3, -1)}));
}

TEST_CASE("ladder data carries the squared spectra") {
    LadderData e2 = ladder(build_E(2));
    CHECK(e2.lambda0 == 4);
    CHECK(e2.ladder_case == 1);
    CHECK(e2.first_k == 1);
    REQUIRE(e2.c.size() == 2);
    CHECK(e2.c[0] == 6);
    CHECK(e2.c[1] == 4);

    LadderData b1 = ladder(build_B(1, +1));
    CHECK(b1.lambda0 == 1);
    CHECK(b1.ladder_case == 2);
    CHECK(b1.first_k == 0);
    REQUIRE(b1.c.size() == 2);
    CHECK(b1.c[0] == 3);
    CHECK(b1.c[1] == 3);

    LadderData a3 = ladder(build_A(3, -1));
    CHECK(a3.lambda0 == 5);
    CHECK(a3.ladder_case == 1);
    CHECK(a3.first_k == 1);
    REQUIRE(a3.c.size() == 3);
    CHECK(a3.c[0] == 8);
    CHECK(a3.c[1] == 8);
    CHECK(a3.c[2] == 0);

    // The one-point modules sit at the case boundaries already.
    CHECK(ladder(build_B(0, +1)).ladder_case == 2);
    CHECK(ladder(build_A(1, -1)).c == std::vector<mpq_class>{0});
    CHECK(ladder(build_E(0)).c.empty());

    // The extraction itself verifies the base identity, the recurrence
    // and the closed forms, so a clean pass over the catalog is the test.
    for (const MatrixModule& m : small_catalog(6)) {
        CAPTURE(m.label());
        CHECK_NOTHROW(ladder(m));
    }
}

TEST_CASE("ladder rejects degenerate spectra") {
    Matrix zero2 = Matrix(2, 2);
    CHECK_THROWS_WITH_AS(ladder(hand_module(zero2, zero2, Matrix::identity(2))),
                         "ladder: a Z eigenvalue has multiplicity greater than one",
                         std::domain_error);
    Matrix offdiag = from_rows({{0, 1}, {0, 0}});
    CHECK_THROWS_WITH_AS(ladder(hand_module(zero2, zero2, offdiag)),
                         "ladder: Z is not diagonal in the stored basis", std::domain_error);
    // X^2 - Y^2 = Z fails on the second eigenvector.
    Matrix z = from_rows({{1, 0}, {0, -1}});
    CHECK_THROWS_WITH_AS(ladder(hand_module(Matrix::identity(2), zero2, z)),
                         "ladder: x2 - y2 = lambda fails on an eigenvector", std::domain_error);
}

TEST_CASE("omnibus identities hold for every built module") {
    for (const MatrixModule& m : small_catalog(6)) {
        CAPTURE(m.label());
        OmnibusReport r = check_omnibus(m);
        CHECK(r.shift_identities);
        CHECK(r.multiplicity_free);
        CHECK(r.top_vector_moves);
        CHECK(r.all_pass());
    }
    // Below dimension 3 the top-vector clause is vacuous.
    CHECK(check_omnibus(build_A(2, +1)).top_vector_moves);
    Matrix zero2 = Matrix(2, 2);
    OmnibusReport degenerate = check_omnibus(hand_module(zero2, zero2, Matrix::identity(2)));
    CHECK(!degenerate.multiplicity_free);
    CHECK(!degenerate.all_pass());
}

TEST_CASE("exactly five one dimensional modules exist") {
    std::vector<MatrixModule> all = classify_dim1();
    REQUIRE(all.size() == 5);
    CHECK(all[0].label() == "A_1^+");
    CHECK(all[1].label() == "A_1^-");
    CHECK(all[2].label() == "B_0^+");
    CHECK(all[3].label() == "B_0^-");
    CHECK(all[4].label() == "E_0");
    for (const MatrixModule& m : all) {
        CHECK(m.dim == 1);
        CHECK(verify_relations(m));
        CHECK(is_simple(m));
    }
    CHECK(z_spectra_distinct(all));
    CHECK(all[2].Y == from_rows({{1}}));
    CHECK(all[3].Y == from_rows({{-1}}));
    CHECK(all[4].X.is_zero());
}

TEST_CASE("twisted group algebras of the four group") {
    GradingGroup V(0, {2, 2});
    GroupAlgebra plain = twisted_group_algebra(V, TwoCocycle::trivial(V));
    CHECK(plain.dim == 4);
    CHECK(is_semisimple(plain));
    CHECK(trace_form_rank(plain) == 4);
    CHECK(center_dimension(plain) == 4);

    GroupAlgebra twisted = twisted_group_algebra(V, TwoCocycle::sigma_v());
    CHECK(is_semisimple(twisted));
    CHECK(trace_form_rank(twisted) == 4);
    CHECK(center_dimension(twisted) == 1);

    // Left multiplication by the identity is the identity matrix.
    CHECK(twisted.left_mult(0) == Matrix::identity(4));
    // e_g * e_g = sigma(g, g) e_0 = -e_0 away from the identity.
    Matrix lg = twisted.left_mult(1);
    CHECK(lg.at(0, 1) == Scalar::integer(-1));

    GradingGroup Z2(0, {2});
    GroupAlgebra line = twisted_group_algebra(Z2, TwoCocycle::trivial(Z2));
    CHECK(is_semisimple(line));
    CHECK(center_dimension(line) == 2);

    GradingGroup free_part(1, {});
    CHECK_THROWS_AS(twisted_group_algebra(free_part, TwoCocycle::trivial(free_part)),
                    std::domain_error);
    CHECK_THROWS_AS(twisted_group_algebra(Z2, TwoCocycle::sigma_v()), std::domain_error);
}

TEST_CASE("a nilpotent toy algebra is caught by the trace form") {
    // The dual numbers k[x]/(x^2) as structure constants on Z/2: the
    // trace form has rank one, so the radical is visible.
    GradingGroup Z2(0, {2});
    GroupAlgebra dual;
    dual.group = Z2;
    dual.dim = 2;
    dual.basis = Z2.enumerate();
    dual.product_coeff = {{Scalar::one(), Scalar::one()}, {Scalar::one(), Scalar::zero()}};
    CHECK(trace_form_rank(dual) == 1);
    CHECK(!is_semisimple(dual));
    CHECK(center_dimension(dual) == 2);
}

TEST_CASE("module reports carry the documented fields") {
    nlohmann::json r = module_report(build_E(2));
    CHECK(r["family"] == "E");
    CHECK(r["n"] == 2);
    CHECK(!r.contains("sign"));
    CHECK(r["label"] == "E_2");
    CHECK(r["dim"] == 5);
    CHECK(r["relations_ok"] == true);
    CHECK(r["simple"] == true);
    CHECK(r["spectrum"] == nlohmann::json({4, 2, 0, -2, -4}));
    CHECK(r["ladder"]["lambda0"] == 4);
    CHECK(r["ladder"]["case"] == 1);
    CHECK(r["ladder"]["first_k"] == 1);
    CHECK(r["ladder"]["c"] == nlohmann::json({6, 4}));
    CHECK(r["omnibus"]["shift_identities"] == true);
    CHECK(r["omnibus"]["multiplicity_free"] == true);
    CHECK(r["omnibus"]["top_vector_moves"] == true);

    nlohmann::json b = module_report(build_B(2, +1));
    CHECK(b["sign"] == "+");
    CHECK(b["label"] == "B_2^+");
    CHECK(b["ladder"]["case"] == 2);
    CHECK(b["ladder"]["first_k"] == 0);
    CHECK(b["ladder"]["c"] == nlohmann::json({5, 9, 5}));
}

}
