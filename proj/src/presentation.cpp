#include "twistkit/presentation.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "twistkit/parse.hpp"

namespace twistkit {

namespace {

unsigned merged_order(unsigned a, unsigned b, const char* where) {
    if (a == b || a % b == 0) return a;
    if (b % a == 0) return b;
    std::ostringstream msg;
    msg << where << ": scalar orders " << a << " and " << b << " are incompatible";
    throw std::domain_error(msg.str());
}

std::string twisted_name(const std::string& name) {
    std::string out = name;
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

GenSet renamed_gens(const GenSet& gens) {
    std::vector<Generator> out;
    std::set<std::string> seen;
    for (size_t i = 0; i < gens.size(); ++i) {
        const Generator& g = gens.at(i);
        std::string name = twisted_name(g.name);
        if (!seen.insert(name).second)
            throw std::domain_error("twist_presentation: renaming collides on '" + name + "'");
        out.push_back({name, g.degree});
    }
    return GenSet(gens.group(), std::move(out));
}

NcPoly shift_indices(const NcPoly& p, unsigned offset) {
    NcPoly out;
    for (const auto& [word, coeff] : p.terms()) {
        Word shifted = word;
        for (unsigned& letter : shifted) letter += offset;
        out.add_term(coeff, shifted);
    }
    return out;
}

}  // namespace

GenSet doubled_gens(const GenSet& gens) {
    std::vector<Generator> out;
    for (size_t i = 0; i < gens.size(); ++i) out.push_back(gens.at(i));
    for (size_t i = 0; i < gens.size(); ++i) {
        const Generator& g = gens.at(i);
        out.push_back({g.name + "'", g.degree});
    }
    return GenSet(gens.group(), std::move(out));
}

GradedPresentation GradedPresentation::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::domain_error("GradedPresentation: expected a JSON object");
    GradedPresentation p;
    if (j.contains("scalar")) {
        const auto& scalar = j["scalar"];
        if (!scalar.is_object() || !scalar.contains("cyclotomic_order") ||
            !scalar["cyclotomic_order"].is_number_integer() ||
            scalar["cyclotomic_order"].get<long long>() <= 0)
            throw std::domain_error(
                "GradedPresentation: scalar needs a positive cyclotomic_order");
        p.scalar_order = static_cast<unsigned>(scalar["cyclotomic_order"].get<long long>());
    }
    if (!j.contains("grading"))
        throw std::domain_error("GradedPresentation: missing grading");
    GradingGroup group = GradingGroup::from_json(j["grading"]);
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::domain_error("GradedPresentation: missing generators array");
    std::vector<Generator> generators;
    for (const auto& entry : j["generators"]) {
        if (!entry.is_object() || !entry.contains("name") || !entry.contains("degree"))
            throw std::domain_error("GradedPresentation: generators need a name and a degree");
        generators.push_back({entry["name"].get<std::string>(),
                              group.reduce(entry["degree"].get<GroupElement>())});
    }
    p.gens = GenSet(std::move(group), std::move(generators));
    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw std::domain_error("GradedPresentation: relations must be an array");
        for (const auto& entry : j["relations"])
            p.relations.push_back(parse_poly(entry.get<std::string>(), p.gens, p.scalar_order));
    }
    if (j.contains("cocycle") && !j["cocycle"].is_null())
        p.cocycle = TwoCocycle::from_json(j["cocycle"], p.gens.group(), p.scalar_order);
    if (j.contains("coproduct") && !j["coproduct"].is_null()) {
        if (!j["coproduct"].is_object())
            throw std::domain_error("GradedPresentation: coproduct must be an object");
        CoproductSpec spec;
        spec.doubled = doubled_gens(p.gens);
        for (size_t i = 0; i < p.gens.size(); ++i) {
            const std::string& name = p.gens.at(i).name;
            if (!j["coproduct"].contains(name))
                throw std::domain_error("GradedPresentation: coproduct is missing '" + name +
                                        "'");
            spec.images.push_back(
                parse_poly(j["coproduct"][name].get<std::string>(), spec.doubled,
                           p.scalar_order));
        }
        p.coproduct = std::move(spec);
    }
    p.no_split = j.value("no_split", false);
    if (j.contains("provenance")) p.provenance = j["provenance"];
    return p;
}

nlohmann::json GradedPresentation::to_json() const {
    nlohmann::json j;
    j["scalar"] = {{"cyclotomic_order", scalar_order}};
    j["grading"] = gens.group().to_json();
    nlohmann::json generators = nlohmann::json::array();
    for (size_t i = 0; i < gens.size(); ++i) {
        const Generator& g = gens.at(i);
        generators.push_back({{"name", g.name}, {"degree", g.degree}});
    }
    j["generators"] = std::move(generators);
    nlohmann::json rels = nlohmann::json::array();
    for (const NcPoly& r : relations) rels.push_back(r.str(gens));
    j["relations"] = std::move(rels);
    if (cocycle) j["cocycle"] = cocycle->descriptor();
    if (coproduct) {
        nlohmann::json delta = nlohmann::json::object();
        for (size_t i = 0; i < gens.size(); ++i)
            delta[gens.at(i).name] = coproduct->images[i].str(coproduct->doubled);
        j["coproduct"] = std::move(delta);
    }
    if (no_split) j["no_split"] = true;
    if (!provenance.empty()) j["provenance"] = provenance;
    return j;
}

GradedPresentation twist_presentation(const GradedPresentation& p, const TwoCocycle& sigma) {
    if (sigma.group() != p.gens.group())
        throw std::domain_error("twist_presentation: cocycle group does not match the grading");
    GradedPresentation out;
    out.scalar_order = merged_order(p.scalar_order, sigma.scalar_order(), "twist_presentation");
    out.gens = renamed_gens(p.gens);
    for (const NcPoly& r : p.relations) {
        if (p.no_split && !homogeneous_degree(r, p.gens))
            throw std::domain_error(
                "twist_presentation: inhomogeneous relation in a no-split presentation: " +
                r.str(p.gens));
        out.relations.push_back(twist_relation(r, p.gens, sigma));
    }
    // Compose per twist-twice only onto a presentation that is itself the
    // output of a twist; a suggested cocycle on an untwisted entry is not
    // history, so the first twist replaces it.
    bool already_twisted = p.provenance.contains("cocycle_applied");
    out.cocycle = (p.cocycle && already_twisted) ? convolve(sigma, *p.cocycle) : sigma;
    if (p.coproduct) out.coproduct = twist_coproduct(*p.coproduct, sigma);
    out.no_split = p.no_split;
    out.provenance = p.provenance;
    out.provenance["cocycle_applied"] = sigma.descriptor();
    nlohmann::json renaming = nlohmann::json::object();
    for (size_t i = 0; i < p.gens.size(); ++i)
        renaming[p.gens.at(i).name] = out.gens.at(i).name;
    out.provenance["generator_renaming"] = std::move(renaming);
    return out;
}

GradedPresentation braided_tensor(const GradedPresentation& p, const GradedPresentation& q,
                                  const Bicharacter& b) {
    if (p.gens.group() != q.gens.group())
        throw std::domain_error("braided_tensor: factors are graded by different groups");
    if (b.group() != p.gens.group())
        throw std::domain_error("braided_tensor: bicharacter group does not match the grading");
    if (!b.is_alternating())
        throw std::domain_error("braided_tensor: bicharacter must be alternating");
    GradedPresentation out;
    out.scalar_order = merged_order(merged_order(p.scalar_order, q.scalar_order, "braided_tensor"),
                                    b.scalar_order(), "braided_tensor");
    std::vector<Generator> generators;
    for (size_t i = 0; i < p.gens.size(); ++i) generators.push_back(p.gens.at(i));
    for (size_t j = 0; j < q.gens.size(); ++j) {
        const Generator& g = q.gens.at(j);
        generators.push_back({g.name + "'", g.degree});
    }
    out.gens = GenSet(p.gens.group(), std::move(generators));
    unsigned offset = static_cast<unsigned>(p.gens.size());
    out.relations = p.relations;
    for (const NcPoly& r : q.relations) out.relations.push_back(shift_indices(r, offset));
    Scalar one = Scalar::one(out.scalar_order);
    for (unsigned i = 0; i < p.gens.size(); ++i) {
        for (unsigned j = 0; j < q.gens.size(); ++j) {
            Scalar cross = b.value(p.gens.at(i).degree, q.gens.at(j).degree);
            NcPoly rel = NcPoly::monomial(one, {offset + j, i}) -
                         NcPoly::monomial(cross, {i, offset + j});
            out.relations.push_back(std::move(rel));
        }
    }
    out.provenance["construction"] = "braided_tensor";
    return out;
}

CoproductSpec twist_coproduct(const CoproductSpec& delta, const TwoCocycle& sigma) {
    const GenSet& doubled = delta.doubled;
    if (doubled.size() != 2 * delta.images.size())
        throw std::domain_error("twist_coproduct: doubled set does not match the image count");
    if (sigma.group() != doubled.group())
        throw std::domain_error("twist_coproduct: cocycle group does not match the grading");
    const GradingGroup& group = doubled.group();
    size_t n = delta.images.size();
    CoproductSpec out;
    out.doubled = renamed_gens(doubled);
    for (const NcPoly& image : delta.images) {
        NcPoly twisted;
        for (const auto& [word, coeff] : image.terms()) {
            GroupElement g = group.zero(), h = group.zero();
            bool primed = false;
            for (unsigned letter : word) {
                if (letter >= n) {
                    primed = true;
                    h = group.add(h, doubled.at(letter).degree);
                } else {
                    if (primed)
                        throw std::domain_error(
                            "twist_coproduct: word is not an unprimed block followed by a "
                            "primed block: " +
                            NcPoly::monomial(Scalar::one(sigma.scalar_order()), word)
                                .str(doubled));
                    g = group.add(g, doubled.at(letter).degree);
                }
            }
            twisted.add_term(coeff * sigma(h, g).unit_inverse(), word);
        }
        out.images.push_back(std::move(twisted));
    }
    return out;
}

RewriteSystem rewrite_system(const GradedPresentation& p) {
    std::vector<RewriteRule> rules;
    for (const NcPoly& r : p.relations) {
        if (r.is_zero()) throw std::domain_error("rewrite_system: zero relation");
        const Word& lead = r.leading_word();
        if (lead.size() != 2)
            throw std::domain_error("rewrite_system: relation " + r.str(p.gens) +
                                    " has no two-letter leading word");
        Scalar c = r.coefficient(lead);
        if (!c.is_unit())
            throw std::domain_error("rewrite_system: leading coefficient of " + r.str(p.gens) +
                                    " is not a unit");
        NcPoly rhs = NcPoly::monomial(Scalar::one(p.scalar_order), lead) -
                     r.scale(c.unit_inverse());
        rules.push_back({lead, std::move(rhs)});
    }
    return RewriteSystem(p.gens, std::move(rules));
}

HomomorphismReport verify_homomorphism(const std::vector<NcPoly>& images,
                                       const GradedPresentation& source,
                                       const GradedPresentation& target) {
    if (images.size() != source.gens.size())
        throw std::domain_error("verify_homomorphism: one image per source generator required");
    RewriteSystem rs = rewrite_system(target);
    ConfluenceReport confluence = rs.check_local_confluence();
    if (!confluence.confluent)
        throw std::domain_error("verify_homomorphism: target rewrite system is not confluent: " +
                                confluence.details);
    HomomorphismReport report;
    for (const NcPoly& r : source.relations) {
        NcPoly residue = rs.normalize(substitute(r, images));
        if (residue.is_zero()) continue;
        report.holds = false;
        if (!report.details.empty()) report.details += "; ";
        report.details += "relation " + r.str(source.gens) + " maps to " + residue.str(target.gens);
    }
    return report;
}

GenSet point_symbols() {
    GradingGroup trivial(0, {});
    std::vector<Generator> symbols;
    for (const char* name : {"x", "y", "z", "t"}) symbols.push_back({name, {}});
    for (const char* name : {"x'", "y'", "z'", "t'"}) symbols.push_back({name, {}});
    return GenSet(std::move(trivial), std::move(symbols));
}

namespace {

// The coordinate coproduct of the function algebra of SL(2), twisted into
// the four composition formulas used by the partial group law.
CoproductSpec composition_formulas() {
    GradingGroup klein(0, {2, 2});
    GenSet coords(klein, {{"x", {0, 0}}, {"y", {1, 0}}, {"z", {0, 1}}, {"t", {1, 1}}});
    CoproductSpec delta;
    delta.doubled = doubled_gens(coords);
    for (const char* image : {"x*x' + y*y' + z*z' - t*t'", "x*y' + y*x' - z*t' + t*z'",
                              "x*z' + y*t' + z*x' - t*y'", "x*t' + y*z' - z*y' + t*x'"})
        delta.images.push_back(parse_poly(image, delta.doubled));
    return twist_coproduct(delta, TwoCocycle::sigma_v());
}

}  // namespace

Point group_law_points(Curve curve, const Point& p, const Point& q, const GenSet& symbols) {
    size_t zero_a = 0, zero_b = 0;
    switch (curve) {
        case Curve::C1: zero_a = 2; zero_b = 3; break;
        case Curve::C2: zero_a = 1; zero_b = 3; break;
        case Curve::H: zero_a = 1; zero_b = 2; break;
    }
    for (const Point* point : {&p, &q}) {
        if (!(*point)[zero_a].is_zero() || !(*point)[zero_b].is_zero())
            throw std::domain_error("group_law_points: point does not lie on the curve");
    }
    Bicharacter plain = Bicharacter::alternating(symbols.group(), {}, Scalar::default_order);
    RewriteSystem sorter = commutation_rules(symbols, plain);
    static const std::pair<size_t, size_t> kConditions[] = {{1, 2}, {1, 3}, {2, 3},
                                                            {2, 1}, {3, 1}, {3, 2}};
    for (const auto& [a, b] : kConditions) {
        if (!sorter.normalize(p[a] * q[b]).is_zero())
            throw std::domain_error("group_law_points: points are not composable");
    }
    CoproductSpec formulas = composition_formulas();
    std::vector<NcPoly> slots;
    for (size_t k = 0; k < 4; ++k) slots.push_back(p[k]);
    for (size_t k = 0; k < 4; ++k) slots.push_back(q[k]);
    Point out;
    for (size_t k = 0; k < 4; ++k)
        out[k] = sorter.normalize(substitute(formulas.images[k], slots));
    return out;
}

}  // namespace twistkit
