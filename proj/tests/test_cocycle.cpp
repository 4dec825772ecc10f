#include <doctest.h>

#include "twistkit/cocycle.hpp"

using namespace twistkit;

namespace {

GradingGroup klein() { return GradingGroup(0, {2, 2}); }

// Characters labelled by the elements whose pairing kernel contains the
// corresponding vector: hat_1 = (0,1), hat_2 = (1,0), hat_3 = (1,1).
const GroupElement kZero{0, 0}, kHat1{0, 1}, kHat2{1, 0}, kHat3{1, 1};

CoboundaryForm sample_lambda() {
    // lambda(hat_1) = i, else 1.
    return CoboundaryForm(klein(),
                          {Scalar::one(), Scalar::zeta(4), Scalar::one(), Scalar::one()}, 4);
}

}  // namespace

TEST_SUITE("cocycle") {

TEST_CASE("the distinguished table is a cocycle") {
    TwoCocycle sigma = TwoCocycle::sigma_v();
    CHECK(sigma(kHat1, kHat1) == Scalar::integer(-1));
    CHECK(sigma(kHat1, kHat2).is_one());
    CHECK(sigma(kHat2, kHat1) == Scalar::integer(-1));
    CHECK(sigma(kHat3, kHat1).is_one());
    CHECK(sigma(kHat1, kHat3) == Scalar::integer(-1));
    CHECK(sigma(kZero, kHat3).is_one());
    auto report = check_cocycle(sigma);
    CHECK(report.valid);
    CHECK(report.details == "exhaustive over all triples");
}

TEST_CASE("a corrupted table fails with a witness") {
    TwoCocycle sigma = TwoCocycle::sigma_v();
    auto values = std::vector<std::vector<Scalar>>(4, std::vector<Scalar>(4, Scalar::one()));
    GradingGroup G = klein();
    for (const auto& g : G.enumerate())
        for (const auto& h : G.enumerate())
            values[G.element_index(g)][G.element_index(h)] = sigma(g, h);
    values[G.element_index(kHat1)][G.element_index(kHat3)] = Scalar::one();
    TwoCocycle bad = TwoCocycle::table(G, values, 4);
    auto report = check_cocycle(bad);
    CHECK(!report.valid);
    CHECK(report.witness.has_value());
    // The witness triple really does violate the identity.
    auto [g, h, k] = *report.witness;
    CHECK(bad(g, h) * bad(G.add(g, h), k) != bad(h, k) * bad(g, G.add(h, k)));
}

TEST_CASE("trivial cocycles pass on finite and free groups") {
    CHECK(check_cocycle(TwoCocycle::trivial(klein())).valid);
    CHECK(check_cocycle(TwoCocycle::trivial(GradingGroup(3, {}))).valid);
}

TEST_CASE("bilinear q-form cocycles validate symbolically") {
    GradingGroup Z3(3, {});
    CHECK(check_cocycle(TwoCocycle::bilinear_q(Z3, {{0, 1, 2}, {0, 0, -1}, {0, 0, 0}})).valid);
    TwoCocycle sigma = TwoCocycle::bilinear_q(Z3, {{0, 5, 0}, {0, 0, 3}, {0, 0, 0}});
    CHECK(sigma({1, 0, 0}, {0, 1, 0}) == Scalar::q_power(5));
    CHECK(sigma({0, 1, 0}, {1, 0, 0}).is_one());
    CHECK(sigma({1, 1, 0}, {0, 1, 1}) == Scalar::q_power(5 + 3));
}

TEST_CASE("derived bicharacter is alternating") {
    TwoCocycle sigma = TwoCocycle::sigma_v();
    Bicharacter b = derived_bicharacter(sigma);
    CHECK(b.is_alternating());
    CHECK(b.value(kHat1, kHat2) == Scalar::integer(-1));
    GradingGroup G = klein();
    for (const auto& g : G.enumerate()) {
        CHECK(b.value(g, g).is_one());
        for (const auto& h : G.enumerate()) {
            CHECK(b.value(g, h) == sigma.braiding(g, h));
            // bimultiplicative in the first slot
            for (const auto& k : G.enumerate())
                CHECK(b.value(G.add(g, k), h) == b.value(g, h) * b.value(k, h));
        }
    }
}

TEST_CASE("bilinear braiding matches the exponent difference") {
    GradingGroup Z2(2, {});
    long alpha = 7;
    TwoCocycle sigma = TwoCocycle::bilinear_q(Z2, {{0, -alpha}, {0, 0}});
    CHECK(sigma.braiding({1, 0}, {0, 1}) == Scalar::q_power(alpha));
}

TEST_CASE("bicharacter section recovers its bicharacter") {
    GradingGroup G = klein();
    auto b = Bicharacter::alternating(G, {{{0, 1}, Scalar::integer(-1)}}, 4);
    TwoCocycle sigma = cocycle_from_bicharacter(b);
    CHECK(check_cocycle(sigma).valid);
    Bicharacter rb = derived_bicharacter(sigma);
    for (const auto& g : G.enumerate())
        for (const auto& h : G.enumerate()) CHECK(rb.value(g, h) == b.value(g, h));

    GradingGroup Z3(3, {});
    auto qb = Bicharacter::alternating(
        Z3,
        {{{0, 1}, Scalar::q_power(-2)}, {{0, 2}, Scalar::q_power(1)}, {{1, 2}, Scalar::q_power(4)}},
        4);
    TwoCocycle qs = cocycle_from_bicharacter(qb);
    CHECK(check_cocycle(qs).valid);
    Bicharacter rqb = derived_bicharacter(qs);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(rqb.generator_value(i, j) == qb.generator_value(i, j));
}

TEST_CASE("coboundaries have trivial braiding") {
    TwoCocycle dl = coboundary(sample_lambda());
    CHECK(dl(kHat1, kHat1) == Scalar::integer(-1));
    CHECK(check_cocycle(dl).valid);
    GradingGroup G = klein();
    for (const auto& g : G.enumerate())
        for (const auto& h : G.enumerate()) CHECK(dl.braiding(g, h).is_one());
}

TEST_CASE("convolution multiplies pointwise") {
    TwoCocycle sigma = TwoCocycle::sigma_v();
    TwoCocycle square = convolve(sigma, sigma);
    GradingGroup G = klein();
    for (const auto& g : G.enumerate())
        for (const auto& h : G.enumerate()) CHECK(square(g, h).is_one());
    TwoCocycle dl = coboundary(sample_lambda());
    TwoCocycle mixed = convolve(sigma, dl);
    CHECK(check_cocycle(mixed).valid);
    CHECK(mixed(kHat1, kHat1) == Scalar::one());  // (-1) * (-1)
}

TEST_CASE("equivalence recovers a coboundary witness") {
    TwoCocycle sigma = TwoCocycle::sigma_v();
    TwoCocycle tau = convolve(sigma, coboundary(sample_lambda()));
    auto witness = are_equivalent(sigma, tau);
    REQUIRE(witness.has_value());
    GradingGroup G = klein();
    for (const auto& g : G.enumerate()) {
        for (const auto& h : G.enumerate()) {
            Scalar expected = witness->value(g) * witness->value(h) *
                              witness->value(G.add(g, h)).unit_inverse() * sigma(g, h);
            CHECK(expected == tau(g, h));
        }
    }
    CHECK(are_equivalent(sigma, sigma).has_value());
    CHECK(!are_equivalent(TwoCocycle::trivial(klein()), sigma).has_value());
}

TEST_CASE("fourier expansion of the distinguished table") {
    GroupAlgebraTensor F = cocycle_to_twist(TwoCocycle::sigma_v());
    // Rows follow enumerate order (0,0), (0,1), (1,0), (1,1); entries are 4F.
    long expected[4][4] = {
        {1, 1, 1, 1},
        {1, -1, -1, 1},
        {1, 1, -1, -1},
        {1, -1, 1, -1},
    };
    Scalar quarter = Scalar::rational(mpq_class(1, 4));
    for (size_t g = 0; g < 4; ++g)
        for (size_t h = 0; h < 4; ++h)
            CHECK(F.coefficients[g][h] == Scalar::integer(expected[g][h]) * quarter);
    CHECK(twist_is_lazy(F));
}

TEST_CASE("trivial cocycle twists to the unit tensor") {
    GroupAlgebraTensor F = cocycle_to_twist(TwoCocycle::trivial(klein()));
    for (size_t g = 0; g < 4; ++g)
        for (size_t h = 0; h < 4; ++h)
            CHECK(F.coefficients[g][h] == (g == 0 && h == 0 ? Scalar::one() : Scalar::zero()));
    CHECK(twist_is_lazy(F));
}

TEST_CASE("coboundary twist factors through the grouplike expansion") {
    // F for a coboundary equals (a x a) * Delta(a^-1) where a has
    // idempotent coefficients lambda(chi).
    GradingGroup G = klein();
    CoboundaryForm lambda = sample_lambda();
    GroupAlgebraTensor F = cocycle_to_twist(coboundary(lambda));
    auto elements = G.enumerate();
    size_t n = elements.size();
    Scalar inv_n = Scalar::rational(mpq_class(1, static_cast<long>(n)));
    // a and a^-1 in the group basis
    std::vector<Scalar> a(n, Scalar::zero()), ainv(n, Scalar::zero());
    for (size_t g = 0; g < n; ++g) {
        for (size_t c = 0; c < n; ++c) {
            Scalar chi_g = G.pairing(elements[c], elements[g], 4).unit_inverse();
            a[g] += lambda.value(elements[c]) * chi_g * inv_n;
            ainv[g] += lambda.value(elements[c]).unit_inverse() * chi_g * inv_n;
        }
    }
    std::vector<std::vector<Scalar>> expect(n, std::vector<Scalar>(n, Scalar::zero()));
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t g = 0; g < n; ++g) {
                size_t xg = G.element_index(G.add(elements[x], elements[g]));
                size_t yg = G.element_index(G.add(elements[y], elements[g]));
                expect[xg][yg] += a[x] * a[y] * ainv[g];
            }
    CHECK(F.coefficients == expect);
}

TEST_CASE("json descriptors round through construction") {
    GradingGroup G = klein();
    TwoCocycle sigma = TwoCocycle::sigma_v();
    TwoCocycle again = TwoCocycle::from_json(sigma.descriptor(), G, 4);
    for (const auto& g : G.enumerate())
        for (const auto& h : G.enumerate()) CHECK(sigma(g, h) == again(g, h));

    auto bl = TwoCocycle::from_json(
        nlohmann::json{{"kind", "bilinear_q"}, {"matrix", {{0, 2}, {0, 0}}}},
        GradingGroup(2, {}), 4);
    CHECK(bl({1, 0}, {0, 1}) == Scalar::q_power(2));

    auto split = TwoCocycle::from_json(
        nlohmann::json{{"kind", "bicharacter_split"}, {"gen_pairs", {{"0,1", "-1"}}}}, G, 4);
    CHECK(check_cocycle(split).valid);

    auto prod = TwoCocycle::from_json(
        nlohmann::json{{"kind", "product"},
                       {"factors", {sigma.descriptor(), sigma.descriptor()}}},
        G, 4);
    for (const auto& g : G.enumerate())
        for (const auto& h : G.enumerate()) CHECK(prod(g, h).is_one());

    CHECK_THROWS_AS(
        TwoCocycle::from_json(nlohmann::json{{"kind", "mystery"}}, G, 4),
        std::domain_error);
}

}
