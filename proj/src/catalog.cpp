#include "twistkit/catalog.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "twistkit/parse.hpp"

namespace twistkit {

namespace {

unsigned param_unsigned(const nlohmann::json& params, const char* key, unsigned fallback) {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_number_integer() || params[key].get<long long>() <= 0)
        throw std::domain_error(std::string("catalog: parameter '") + key +
                                "' must be a positive integer");
    return static_cast<unsigned>(params[key].get<long long>());
}

GroupElement unit_vector(size_t n, size_t i) {
    GroupElement e(n, 0);
    e[i] = 1;
    return e;
}

NcPoly commutator(unsigned i, unsigned j) {
    Scalar one = Scalar::one();
    return NcPoly::monomial(one, {i, j}) - NcPoly::monomial(one, {j, i});
}

GradedPresentation poly_ring(const nlohmann::json& params) {
    unsigned n = param_unsigned(params, "n", 3);
    GradingGroup group(n, {});
    std::vector<Generator> gens;
    for (unsigned i = 0; i < n; ++i)
        gens.push_back({"x" + std::to_string(i + 1), unit_vector(n, i)});
    GradedPresentation p;
    p.gens = GenSet(std::move(group), std::move(gens));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) p.relations.push_back(commutator(i, j));
    return p;
}

GradedPresentation torus(const nlohmann::json& params) {
    unsigned n = param_unsigned(params, "n", 2);
    GradingGroup group(n, {});
    std::vector<Generator> gens;
    for (unsigned i = 0; i < n; ++i)
        gens.push_back({"x" + std::to_string(i + 1), unit_vector(n, i)});
    for (unsigned i = 0; i < n; ++i) {
        GroupElement degree = unit_vector(n, i);
        degree[i] = -1;
        gens.push_back({"y" + std::to_string(i + 1), std::move(degree)});
    }
    GradedPresentation p;
    p.gens = GenSet(std::move(group), std::move(gens));
    for (unsigned i = 0; i < 2 * n; ++i)
        for (unsigned j = i + 1; j < 2 * n; ++j) p.relations.push_back(commutator(i, j));
    Scalar one = Scalar::one();
    for (unsigned i = 0; i < n; ++i)
        p.relations.push_back(NcPoly::monomial(one, {i, n + i}) - NcPoly::constant(one));
    return p;
}

GradedPresentation tetrahedron() {
    GradingGroup klein(0, {2, 2});
    GenSet gens(klein, {{"x", {0, 1}}, {"y", {1, 1}}, {"z", {1, 0}}});
    NcPoly x = NcPoly::generator(0), y = NcPoly::generator(1), z = NcPoly::generator(2);
    NcPoly one = NcPoly::constant(Scalar::one());
    std::vector<NcPoly> faces = {x + y + z - one, x - y - z - one, -x - y + z - one,
                                 -x + y - z - one};
    NcPoly product = faces[0] * faces[1] * faces[2] * faces[3];
    RewriteSystem sorter =
        commutation_rules(gens, Bicharacter::alternating(klein, {}, Scalar::default_order));
    GradedPresentation p;
    p.gens = gens;
    p.relations = {commutator(0, 1), commutator(0, 2), commutator(1, 2),
                   sorter.normalize(product)};
    p.cocycle = TwoCocycle::sigma_v();
    return p;
}

GradedPresentation sl2_coord() {
    GradingGroup klein(0, {2, 2});
    GradedPresentation p;
    p.gens = GenSet(klein, {{"x", {0, 0}}, {"y", {1, 0}}, {"z", {0, 1}}, {"t", {1, 1}}});
    for (const char* text : {"x*y - y*x", "x*z - z*x", "x*t - t*x", "y*z - z*y", "y*t - t*y",
                             "z*t - t*z", "x^2 - y^2 - z^2 + t^2 - 1"})
        p.relations.push_back(parse_poly(text, p.gens));
    p.cocycle = TwoCocycle::sigma_v();
    CoproductSpec delta;
    delta.doubled = doubled_gens(p.gens);
    for (const char* text : {"x*x' + y*y' + z*z' - t*t'", "x*y' + y*x' - z*t' + t*z'",
                             "x*z' + y*t' + z*x' - t*y'", "x*t' + y*z' - z*y' + t*x'"})
        delta.images.push_back(parse_poly(text, delta.doubled));
    p.coproduct = std::move(delta);
    return p;
}

GradedPresentation u_sl2() {
    GradingGroup klein(0, {2, 2});
    GradedPresentation p;
    p.gens = GenSet(klein, {{"a", {1, 0}}, {"b", {1, 1}}, {"h", {0, 1}}});
    for (const char* text : {"a*b - b*a + 2*h", "a*h - h*a + 2*b", "b*h - h*b + 2*a"})
        p.relations.push_back(parse_poly(text, p.gens));
    p.cocycle = TwoCocycle::sigma_v();
    CoproductSpec delta;
    delta.doubled = doubled_gens(p.gens);
    for (const char* text : {"a + a'", "b + b'", "h + h'"})
        delta.images.push_back(parse_poly(text, delta.doubled));
    p.coproduct = std::move(delta);
    return p;
}

GradedPresentation u_sl2_xyz() {
    GradingGroup trivial(0, {});
    GradedPresentation p;
    p.gens = GenSet(trivial, {{"X", {}}, {"Y", {}}, {"Z", {}}});
    for (const char* text : {"X*Z + Z*X - 2*X", "Y*Z + Z*Y + 2*Y", "X^2 - Y^2 - Z"})
        p.relations.push_back(parse_poly(text, p.gens));
    CoproductSpec delta;
    delta.doubled = doubled_gens(p.gens);
    for (const char* text : {"X + X'", "Y + Y'", "Z + Z'"})
        delta.images.push_back(parse_poly(text, delta.doubled));
    p.coproduct = std::move(delta);
    return p;
}

GradedPresentation poly_ring_root_of_unity(const nlohmann::json& params) {
    unsigned r = param_unsigned(params, "r", 4);
    unsigned n = param_unsigned(params, "n", 2);
    std::vector<std::vector<long>> alpha(n, std::vector<long>(n, 0));
    if (params.contains("alpha")) {
        auto given = params["alpha"].get<std::vector<std::vector<long>>>();
        if (given.size() != n)
            throw std::domain_error("catalog: alpha must be an n x n integer matrix");
        for (const auto& row : given)
            if (row.size() != n)
                throw std::domain_error("catalog: alpha must be an n x n integer matrix");
        alpha = std::move(given);
    }
    GradingGroup group(0, std::vector<unsigned>(n, r));
    if (group.order() > 4096)
        throw std::domain_error("catalog: poly_ring_root_of_unity grading group is too large");
    GradedPresentation p;
    p.scalar_order = r;
    std::vector<Generator> gens;
    for (unsigned i = 0; i < n; ++i)
        gens.push_back({"x" + std::to_string(i + 1), unit_vector(n, i)});
    p.gens = GenSet(group, std::move(gens));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            Scalar one = Scalar::one(r);
            p.relations.push_back(NcPoly::monomial(one, {i, j}) -
                                  NcPoly::monomial(one, {j, i}));
        }
    std::vector<GroupElement> elements = group.enumerate();
    std::vector<std::vector<Scalar>> values;
    for (const GroupElement& g : elements) {
        std::vector<Scalar> row;
        for (const GroupElement& h : elements) {
            long exponent = 0;
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j) exponent += alpha[i][j] * g[i] * h[j];
            row.push_back(Scalar::zeta_power(exponent, r));
        }
        values.push_back(std::move(row));
    }
    p.cocycle = TwoCocycle::table(std::move(group), std::move(values), r);
    return p;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "poly_ring", "torus",     "tetrahedron", "sl2_coord",
        "u_sl2",     "u_sl2_xyz", "poly_ring_root_of_unity"};
    return names;
}

GradedPresentation catalog(const std::string& name, const nlohmann::json& params) {
    if (name == "poly_ring") return poly_ring(params);
    if (name == "torus") return torus(params);
    if (name == "tetrahedron") return tetrahedron();
    if (name == "sl2_coord") return sl2_coord();
    if (name == "u_sl2") return u_sl2();
    if (name == "u_sl2_xyz") return u_sl2_xyz();
    if (name == "poly_ring_root_of_unity") return poly_ring_root_of_unity(params);
    throw std::domain_error("catalog: unknown presentation '" + name + "'");
}

}  // namespace twistkit
