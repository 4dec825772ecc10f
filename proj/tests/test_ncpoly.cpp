#include <doctest.h>

#include <random>

#include "twistkit/ncpoly.hpp"
#include "twistkit/parse.hpp"

using namespace twistkit;

namespace {

const GroupElement kHat1{0, 1}, kHat2{1, 0}, kHat3{1, 1};

GenSet tetra_gens() {
    return GenSet(GradingGroup(0, {2, 2}),
                  {{"x", kHat1}, {"y", kHat3}, {"z", kHat2}});
}

GenSet sl2_gens() {
    return GenSet(GradingGroup(0, {2, 2}),
                  {{"x", {0, 0}}, {"y", kHat2}, {"z", kHat1}, {"t", kHat3}});
}

GenSet usl2_gens() {
    return GenSet(GradingGroup(0, {2, 2}),
                  {{"a", kHat2}, {"b", kHat3}, {"h", kHat1}});
}

// One randomly chosen rewrite step; nullopt when p is already normal.
std::optional<NcPoly> random_step(const NcPoly& p, const RewriteSystem& R, std::mt19937& rng) {
    std::vector<std::pair<Word, size_t>> redexes;
    for (const auto& [w, c] : p.terms())
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (R.rule_for(w[i], w[i + 1])) redexes.push_back({w, i});
    if (redexes.empty()) return std::nullopt;
    auto [w, i] = redexes[rng() % redexes.size()];
    const RewriteRule* rule = R.rule_for(w[i], w[i + 1]);
    Scalar c = p.coefficient(w);
    NcPoly replacement = NcPoly::monomial(Scalar::one(), Word(w.begin(), w.begin() + i)) *
                         rule->rhs *
                         NcPoly::monomial(Scalar::one(), Word(w.begin() + i + 2, w.end()));
    NcPoly out = p;
    out.add_term(-c, w);
    out += replacement.scale(c);
    return out;
}

NcPoly random_normalize(NcPoly p, const RewriteSystem& R, std::mt19937& rng) {
    while (auto next = random_step(p, R, rng)) p = *next;
    return p;
}

}  // namespace

TEST_SUITE("ncpoly") {

TEST_CASE("generator sets validate names") {
    GradingGroup G(0, {2});
    CHECK_THROWS_AS(GenSet(G, {{"x", {0}}, {"x", {1}}}), std::domain_error);
    CHECK_THROWS_AS(GenSet(G, {{"q", {0}}}), std::domain_error);
    CHECK_THROWS_AS(GenSet(G, {{"2x", {0}}}), std::domain_error);
    GenSet primed(G, {{"x", {0}}, {"x'", {1}}});
    CHECK(primed.find("x'") == size_t{1});
    CHECK(primed.find("y") == std::nullopt);
}

TEST_CASE("word order is graded lexicographic") {
    WordOrder less;
    CHECK(less(Word{2}, Word{0, 0}));
    CHECK(less(Word{0, 1}, Word{1, 0}));
    CHECK(!less(Word{1, 0}, Word{0, 1}));
    CHECK(!less(Word{}, Word{}));
}

TEST_CASE("products concatenate words") {
    NcPoly x = NcPoly::generator(0), y = NcPoly::generator(1);
    NcPoly square = (x + y) * (x + y);
    CHECK(square.term_count() == 4);
    CHECK(square.coefficient({0, 1}).is_one());
    CHECK(square.coefficient({1, 0}).is_one());
    NcPoly zero = square - square;
    CHECK(zero.is_zero());
    CHECK((x * y) != (y * x));
    CHECK(x.pow(3).coefficient({0, 0, 0}).is_one());
}

TEST_CASE("printing and parsing agree") {
    GenSet gens = tetra_gens();
    NcPoly p = parse_poly("x^2*y - 2*z + 1/2", gens);
    CHECK(p.coefficient({0, 0, 1}).is_one());
    CHECK(p.coefficient({2}) == Scalar::integer(-2));
    CHECK(p.coefficient({}) == Scalar::rational(mpq_class(1, 2)));
    CHECK(parse_poly(p.str(gens), gens) == p);
    NcPoly q = parse_poly("(1 + i)*x*y - y*x", gens);
    CHECK(parse_poly(q.str(gens), gens) == q);
    CHECK(parse_poly("-x*y", gens) == -(NcPoly::generator(0) * NcPoly::generator(1)));
    CHECK_THROWS_AS(parse_poly("x^-1", gens), ParseError);
    CHECK_THROWS_AS(parse_poly("w", gens), ParseError);
    CHECK(NcPoly().str(gens) == "0");
    CHECK(parse_poly("x*x*x*x", gens).str(gens) == "x^4");
}

TEST_CASE("homogeneity tracks word degrees") {
    GenSet gens = tetra_gens();
    auto d = homogeneous_degree(parse_poly("x*y - 3*z", gens), gens);
    REQUIRE(d.has_value());
    CHECK(*d == kHat2);  // hat1 + hat3 = hat2
    CHECK(!homogeneous_degree(parse_poly("x + y", gens), gens).has_value());
    CHECK(homogeneous_degree(NcPoly(), gens) == GroupElement{0, 0});
}

TEST_CASE("substitution expands images") {
    GenSet gens = tetra_gens();
    NcPoly p = parse_poly("x*y + z", gens);
    std::vector<NcPoly> images = {parse_poly("y", gens), parse_poly("x - 1", gens),
                                  parse_poly("z^2", gens)};
    CHECK(substitute(p, images) == parse_poly("y*x - y + z^2", gens));
    CHECK_THROWS_AS(substitute(p, {parse_poly("y", gens)}), std::domain_error);
}

TEST_CASE("rewrite systems validate rules") {
    GenSet gens = usl2_gens();
    // rhs not smaller
    CHECK_THROWS_AS(RewriteSystem(gens, {{Word{1, 0}, parse_poly("h*b", gens)}}),
                    std::domain_error);
    // duplicate left sides
    CHECK_THROWS_AS(RewriteSystem(gens, {{Word{1, 0}, parse_poly("a*b", gens)},
                                         {Word{1, 0}, parse_poly("h", gens)}}),
                    std::domain_error);
    // three-letter left side
    CHECK_THROWS_AS(RewriteSystem(gens, {{Word{1, 0, 0}, parse_poly("h", gens)}}),
                    std::domain_error);
}

TEST_CASE("normalization reaches unique normal forms") {
    GenSet gens = usl2_gens();
    // Twisted enveloping relations oriented toward sorted words.
    RewriteSystem R(gens, {
        {Word{1, 0}, parse_poly("-a*b - 2*h", gens)},   // ba
        {Word{2, 0}, parse_poly("-a*h + 2*b", gens)},   // ha
        {Word{2, 1}, parse_poly("-b*h - 2*a", gens)},   // hb
    });
    CHECK(R.normalize(parse_poly("b*a", gens)) == parse_poly("-a*b - 2*h", gens));
    CHECK(R.normalize(parse_poly("a*b", gens)) == parse_poly("a*b", gens));
    auto report = R.check_local_confluence();
    CHECK(report.confluent);
    // The one nontrivial overlap resolves to the same normal form both ways.
    NcPoly via1 = R.normalize(parse_poly("(-b*h - 2*a)*a", gens));
    NcPoly via2 = R.normalize(parse_poly("h*(-a*b - 2*h)", gens));
    CHECK(via1 == via2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        NcPoly p = parse_poly("h*b*a - 3*b*a*h + h^3*a", gens);
        CHECK(random_normalize(p, R, rng) == R.normalize(p));
    }
}

TEST_CASE("non-confluent systems produce a witness") {
    GenSet gens(GradingGroup(0, {}), {{"a", {}}, {"b", {}}, {"c", {}}});
    RewriteSystem R(gens, {
        {Word{1, 0}, parse_poly("a", gens)},  // ba -> a
        {Word{2, 1}, parse_poly("b", gens)},  // cb -> b
    });
    auto report = R.check_local_confluence();
    CHECK(!report.confluent);
    CHECK(report.details.find("c*b*a") != std::string::npos);
}

TEST_CASE("normalization budget is enforced") {
    GenSet gens(GradingGroup(0, {}), {{"a", {}}, {"b", {}}});
    RewriteSystem R(gens, {{Word{1, 0}, parse_poly("a*b", gens)}});
    NcPoly p = parse_poly("b^3*a^3", gens);
    CHECK_THROWS_AS(R.normalize(p, 2), std::domain_error);
    CHECK(R.normalize(p).leading_word() == Word{0, 0, 0, 1, 1, 1});
}

TEST_CASE("kappa scalars follow the accumulated cocycle") {
    TwoCocycle sigma = TwoCocycle::sigma_v();
    CHECK(kappa_scalar({}, sigma).is_one());
    CHECK(kappa_scalar({kHat1}, sigma).is_one());
    CHECK(kappa_scalar({kHat1, kHat1}, sigma) == Scalar::integer(-1));
    // sigma(hat1,hat3)^-1 * sigma(hat1+hat3, hat2)^-1 = (-1)(-1)
    CHECK(kappa_scalar({kHat1, kHat3, kHat2}, sigma).is_one());
}

TEST_CASE("twisting the quadric flips three signs") {
    GenSet gens = sl2_gens();
    TwoCocycle sigma = TwoCocycle::sigma_v();
    NcPoly p = parse_poly("x^2 - y^2 - z^2 + t^2 - 1", gens);
    CHECK(twist_relation(p, gens, sigma) == parse_poly("x^2 + y^2 + z^2 - t^2 - 1", gens));
}

TEST_CASE("twisting the enveloping bracket symmetrizes it") {
    GenSet gens = usl2_gens();
    TwoCocycle sigma = TwoCocycle::sigma_v();
    NcPoly p = parse_poly("a*b - b*a + 2*h", gens);
    CHECK(twist_relation(p, gens, sigma) == parse_poly("a*b + b*a + 2*h", gens));
}

TEST_CASE("quantum plane relation from a bilinear form") {
    GenSet gens(GradingGroup(2, {}), {{"x1", {1, 0}}, {"x2", {0, 1}}});
    long alpha = 3;
    TwoCocycle sigma = TwoCocycle::bilinear_q(GradingGroup(2, {}), {{0, alpha}, {0, 0}});
    NcPoly p = parse_poly("x1*x2 - x2*x1", gens);
    NcPoly twisted = twist_relation(p, gens, sigma);
    // A unit multiple of x1*x2 - q^alpha * x2*x1.
    Scalar unit = twisted.coefficient({0, 1});
    CHECK(unit.is_unit());
    CHECK(twisted.scale(unit.unit_inverse()) ==
          parse_poly("x1*x2 - q^3*x2*x1", gens));
}

TEST_CASE("twisted eval inverts twisting") {
    GenSet gens = tetra_gens();
    TwoCocycle sigma = TwoCocycle::sigma_v();
    for (const char* text : {"x*y", "x*y - y*x + z^2", "1 + x", "x*y*z - 4"}) {
        NcPoly p = parse_poly(text, gens);
        CHECK(twisted_eval(twist_relation(p, gens, sigma), gens, sigma) == p);
        CHECK(twist_relation(twisted_eval(p, gens, sigma), gens, sigma) == p);
    }
    // A single word x*y evaluates to sigma(hat1, hat3) * xy = -xy.
    NcPoly xy = parse_poly("x*y", gens);
    CHECK(twisted_eval(xy, gens, sigma) == -xy);
}

TEST_CASE("twisted products scale homogeneous components") {
    GenSet gens = tetra_gens();
    TwoCocycle sigma = TwoCocycle::sigma_v();
    NcPoly x = parse_poly("x", gens), y = parse_poly("y", gens);
    CHECK(twisted_product(x + y, x, gens, sigma) == parse_poly("-x^2 + y*x", gens));
    TwoCocycle triv = TwoCocycle::trivial(GradingGroup(0, {2, 2}));
    CHECK(twisted_product(x + y, x, gens, triv) == parse_poly("x^2 + y*x", gens));
    // The twisted unit of a normalized cocycle is the ordinary unit.
    NcPoly one = NcPoly::constant(Scalar::one());
    CHECK(twisted_product(one, x + y, gens, sigma) == x + y);
}

TEST_CASE("twisted product is associative exactly for cocycles") {
    GradingGroup G(0, {2, 2});
    GenSet gens = tetra_gens();
    auto associative_on_generators = [&](const TwoCocycle& s) {
        for (unsigned i = 0; i < gens.size(); ++i)
            for (unsigned j = 0; j < gens.size(); ++j)
                for (unsigned k = 0; k < gens.size(); ++k) {
                    NcPoly a = NcPoly::generator(i), b = NcPoly::generator(j),
                           c = NcPoly::generator(k);
                    NcPoly left = twisted_product(twisted_product(a, b, gens, s), c, gens, s);
                    NcPoly right = twisted_product(a, twisted_product(b, c, gens, s), gens, s);
                    if (left != right) return false;
                }
        return true;
    };
    TwoCocycle sigma = TwoCocycle::sigma_v();
    CHECK(check_cocycle(sigma).valid);
    CHECK(associative_on_generators(sigma));
    // Corrupt one table entry; the identity and associativity fail together.
    std::vector<std::vector<Scalar>> values(4, std::vector<Scalar>(4, Scalar::one()));
    for (const auto& g : G.enumerate())
        for (const auto& h : G.enumerate())
            values[G.element_index(g)][G.element_index(h)] = sigma(g, h);
    values[1][3] = Scalar::one();
    TwoCocycle bad = TwoCocycle::table(G, values, 4);
    CHECK(!check_cocycle(bad).valid);
    CHECK(!associative_on_generators(bad));
}

TEST_CASE("braided commutativity holds after sorting words") {
    GenSet gens = tetra_gens();
    TwoCocycle sigma = TwoCocycle::sigma_v();
    Bicharacter triv_b = derived_bicharacter(TwoCocycle::trivial(GradingGroup(0, {2, 2})));
    RewriteSystem sorter = commutation_rules(gens, triv_b);
    for (const char* a1 : {"x", "y", "z", "x*y", "y*z^2"}) {
        for (const char* a2 : {"x", "z", "x*z", "y*y"}) {
            NcPoly p1 = parse_poly(a1, gens), p2 = parse_poly(a2, gens);
            GroupElement g1 = *homogeneous_degree(p1, gens);
            GroupElement g2 = *homogeneous_degree(p2, gens);
            NcPoly diff = twisted_product(p2, p1, gens, sigma) -
                          twisted_product(p1, p2, gens, sigma)
                              .scale(sigma.braiding(g1, g2));
            CHECK(sorter.normalize(diff).is_zero());
        }
    }
}

TEST_CASE("twisting twice by the table returns the original") {
    GenSet gens = tetra_gens();
    TwoCocycle sigma = TwoCocycle::sigma_v();
    NcPoly p = parse_poly("x*y - 2*y*x + z^2 - 5", gens);
    NcPoly twice = twist_relation(twist_relation(p, gens, sigma), gens, sigma);
    CHECK(twice == p);
    CHECK(twist_relation(p, gens, convolve(sigma, sigma)) == p);
    // And the double twist agrees with the convolution twist in general.
    CoboundaryForm lambda(GradingGroup(0, {2, 2}),
                          {Scalar::one(), Scalar::zeta(4), Scalar::one(), Scalar::integer(-1)},
                          4);
    TwoCocycle dl = coboundary(lambda);
    CHECK(twist_relation(twist_relation(p, gens, sigma), gens, dl) ==
          twist_relation(p, gens, convolve(dl, sigma)));
}

TEST_CASE("coboundary twists rescale generators") {
    GenSet gens = tetra_gens();
    TwoCocycle sigma = TwoCocycle::sigma_v();
    CoboundaryForm lambda(GradingGroup(0, {2, 2}),
                          {Scalar::one(), Scalar::zeta(4), Scalar::integer(-1), Scalar::one()},
                          4);
    NcPoly p = parse_poly("x*y - y*x + 3*z", gens);  // homogeneous of degree hat2
    auto degree = homogeneous_degree(p, gens);
    REQUIRE(degree.has_value());
    GroupElement D = *degree;
    std::vector<NcPoly> rescaled;
    for (unsigned i = 0; i < gens.size(); ++i)
        rescaled.push_back(NcPoly::generator(i).scale(lambda.value(gens.at(i).degree)));
    NcPoly lhs = substitute(twist_relation(p, gens, convolve(sigma, coboundary(lambda))),
                            rescaled);
    NcPoly rhs = twist_relation(p, gens, sigma).scale(lambda.value(D));
    CHECK(lhs == rhs);
}

}
