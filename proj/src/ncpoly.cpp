#include "twistkit/ncpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace twistkit {

namespace {

bool valid_generator_name(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    size_t i = 1;
    while (i < name.size() &&
           (std::isalnum(static_cast<unsigned char>(name[i])) || name[i] == '_'))
        ++i;
    while (i < name.size() && name[i] == '\'') ++i;
    return i == name.size();
}

}  // namespace

GenSet::GenSet(GradingGroup group, std::vector<Generator> generators)
    : group_(std::move(group)), generators_(std::move(generators)) {
    for (size_t i = 0; i < generators_.size(); ++i) {
        const Generator& g = generators_[i];
        if (!valid_generator_name(g.name))
            throw std::domain_error("GenSet: invalid generator name '" + g.name + "'");
        if (g.name == "q" || g.name == "zeta" || g.name == "i")
            throw std::domain_error("GenSet: generator name '" + g.name + "' is reserved");
        if (!index_.emplace(g.name, i).second)
            throw std::domain_error("GenSet: duplicate generator name '" + g.name + "'");
        generators_[i].degree = group_.reduce(generators_[i].degree);
    }
}

const Generator& GenSet::at(size_t index) const {
    if (index >= generators_.size())
        throw std::domain_error("GenSet::at: generator index out of range");
    return generators_[index];
}

std::optional<size_t> GenSet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

GroupElement GenSet::word_degree(const Word& w) const {
    GroupElement d = group_.zero();
    for (unsigned letter : w) d = group_.add(d, at(letter).degree);
    return d;
}

bool GenSet::operator==(const GenSet& other) const {
    if (group_ != other.group_ || generators_.size() != other.generators_.size())
        return false;
    for (size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name != other.generators_[i].name ||
            generators_[i].degree != other.generators_[i].degree)
            return false;
    }
    return true;
}

NcPoly NcPoly::constant(const Scalar& c) {
    NcPoly p;
    p.add_term(c, Word{});
    return p;
}

NcPoly NcPoly::monomial(const Scalar& c, Word w) {
    NcPoly p;
    p.add_term(c, std::move(w));
    return p;
}

NcPoly NcPoly::generator(unsigned index) {
    return monomial(Scalar::one(), Word{index});
}

const Word& NcPoly::leading_word() const {
    if (terms_.empty()) throw std::domain_error("NcPoly::leading_word: zero polynomial");
    return terms_.rbegin()->first;
}

Scalar NcPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    if (it == terms_.end()) return Scalar::zero();
    return it->second;
}

void NcPoly::add_term(const Scalar& c, const Word& w) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NcPoly NcPoly::operator-() const {
    NcPoly out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

NcPoly NcPoly::operator+(const NcPoly& other) const {
    NcPoly out = *this;
    for (const auto& [w, c] : other.terms_) out.add_term(c, w);
    return out;
}

NcPoly NcPoly::operator-(const NcPoly& other) const { return *this + (-other); }

NcPoly NcPoly::operator*(const NcPoly& other) const {
    NcPoly out;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : other.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(ca * cb, w);
        }
    }
    return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
    for (const auto& [w, c] : other.terms_) add_term(c, w);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) { return *this += -other; }
NcPoly& NcPoly::operator*=(const NcPoly& other) { return *this = *this * other; }

NcPoly NcPoly::scale(const Scalar& c) const {
    NcPoly out;
    for (const auto& [w, coeff] : terms_) out.add_term(coeff * c, w);
    return out;
}

NcPoly NcPoly::pow(unsigned exponent) const {
    NcPoly out = constant(Scalar::one());
    for (unsigned i = 0; i < exponent; ++i) out *= *this;
    return out;
}

std::string NcPoly::str(const GenSet& gens) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> parts;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        const Scalar& c = it->second;
        if (w.empty()) {
            parts.push_back(c.str());
            continue;
        }
        std::ostringstream ws;
        for (size_t i = 0; i < w.size();) {
            size_t run = 1;
            while (i + run < w.size() && w[i + run] == w[i]) ++run;
            if (i > 0) ws << "*";
            ws << gens.at(w[i]).name;
            if (run > 1) ws << "^" << run;
            i += run;
        }
        if (c.is_one()) {
            parts.push_back(ws.str());
        } else if ((-c).is_one()) {
            parts.push_back("-" + ws.str());
        } else if (c.is_unit()) {
            parts.push_back(c.str() + "*" + ws.str());
        } else {
            parts.push_back("(" + c.str() + ")*" + ws.str());
        }
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            out = parts[i];
        } else if (!parts[i].empty() && parts[i][0] == '-') {
            out += " - " + parts[i].substr(1);
        } else {
            out += " + " + parts[i];
        }
    }
    return out;
}

std::optional<GroupElement> homogeneous_degree(const NcPoly& p, const GenSet& gens) {
    if (p.is_zero()) return gens.group().zero();
    std::optional<GroupElement> degree;
    for (const auto& [w, c] : p.terms()) {
        GroupElement d = gens.word_degree(w);
        if (!degree) {
            degree = d;
        } else if (*degree != d) {
            return std::nullopt;
        }
    }
    return degree;
}

NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images) {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        NcPoly prod = NcPoly::constant(c);
        for (unsigned letter : w) {
            if (letter >= images.size())
                throw std::domain_error("substitute: no image for generator index " +
                                        std::to_string(letter));
            prod *= images[letter];
        }
        out += prod;
    }
    return out;
}

RewriteSystem::RewriteSystem(const GenSet& gens, std::vector<RewriteRule> rules)
    : rules_(std::move(rules)), gens_(gens) {
    WordOrder less;
    for (size_t r = 0; r < rules_.size(); ++r) {
        const RewriteRule& rule = rules_[r];
        if (rule.lhs.size() != 2)
            throw std::domain_error("RewriteSystem: left sides must have two letters");
        for (unsigned letter : rule.lhs) gens_.at(letter);
        for (const auto& [w, c] : rule.rhs.terms()) {
            for (unsigned letter : w) gens_.at(letter);
            if (!less(w, rule.lhs))
                throw std::domain_error(
                    "RewriteSystem: right side not strictly below the left side");
        }
        if (!by_lhs_.emplace(std::make_pair(rule.lhs[0], rule.lhs[1]), r).second)
            throw std::domain_error("RewriteSystem: duplicate left side");
    }
}

const RewriteRule* RewriteSystem::rule_for(unsigned a, unsigned b) const {
    auto it = by_lhs_.find({a, b});
    if (it == by_lhs_.end()) return nullptr;
    return &rules_[it->second];
}

NcPoly RewriteSystem::normalize(const NcPoly& p, size_t step_budget) const {
    NcPoly cur = p;
    size_t steps = 0;
    for (;;) {
        // Leftmost redex of the largest reducible word.
        const Word* redex_word = nullptr;
        size_t redex_pos = 0;
        const RewriteRule* rule = nullptr;
        for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
            const Word& w = it->first;
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                if (const RewriteRule* r = rule_for(w[i], w[i + 1])) {
                    redex_word = &w;
                    redex_pos = i;
                    rule = r;
                    break;
                }
            }
            if (rule) break;
        }
        if (!rule) return cur;
        if (++steps > step_budget)
            throw std::domain_error("RewriteSystem::normalize: step budget exceeded");
        Word w = *redex_word;
        Scalar c = cur.coefficient(w);
        NcPoly replacement =
            NcPoly::monomial(Scalar::one(), Word(w.begin(), w.begin() + redex_pos)) *
            rule->rhs *
            NcPoly::monomial(Scalar::one(), Word(w.begin() + redex_pos + 2, w.end()));
        cur.add_term(-c, w);
        cur += replacement.scale(c);
    }
}

Scalar kappa_scalar(const std::vector<GroupElement>& degrees, const TwoCocycle& sigma) {
    const GradingGroup& G = sigma.group();
    if (degrees.empty()) return sigma(G.zero(), G.zero());
    Scalar out = Scalar::one(sigma.scalar_order());
    GroupElement acc = G.reduce(degrees[0]);
    for (size_t t = 1; t < degrees.size(); ++t) {
        out *= sigma(acc, degrees[t]).unit_inverse();
        acc = G.add(acc, degrees[t]);
    }
    return out;
}

namespace {

std::vector<GroupElement> word_degrees(const Word& w, const GenSet& gens) {
    std::vector<GroupElement> degrees;
    degrees.reserve(w.size());
    for (unsigned letter : w) degrees.push_back(gens.at(letter).degree);
    return degrees;
}

}  // namespace

NcPoly twist_relation(const NcPoly& p, const GenSet& gens, const TwoCocycle& sigma) {
    NcPoly out;
    for (const auto& [w, c] : p.terms())
        out.add_term(c * kappa_scalar(word_degrees(w, gens), sigma), w);
    return out;
}

NcPoly twisted_eval(const NcPoly& p, const GenSet& gens, const TwoCocycle& sigma) {
    NcPoly out;
    for (const auto& [w, c] : p.terms())
        out.add_term(c * kappa_scalar(word_degrees(w, gens), sigma).unit_inverse(), w);
    return out;
}

NcPoly twisted_product(const NcPoly& p, const NcPoly& r, const GenSet& gens,
                       const TwoCocycle& sigma) {
    NcPoly out;
    for (const auto& [wp, cp] : p.terms()) {
        GroupElement dp = gens.word_degree(wp);
        for (const auto& [wr, cr] : r.terms()) {
            Word w = wp;
            w.insert(w.end(), wr.begin(), wr.end());
            out.add_term(sigma(dp, gens.word_degree(wr)) * cp * cr, w);
        }
    }
    return out;
}

RewriteSystem commutation_rules(const GenSet& gens, const Bicharacter& b) {
    std::vector<RewriteRule> rules;
    for (unsigned i = 0; i < gens.size(); ++i) {
        for (unsigned j = i + 1; j < gens.size(); ++j) {
            Scalar value = b.value(gens.at(i).degree, gens.at(j).degree);
            rules.push_back({Word{j, i}, NcPoly::monomial(value, Word{i, j})});
        }
    }
    return RewriteSystem(gens, std::move(rules));
}

ConfluenceReport RewriteSystem::check_local_confluence() const {
    for (const RewriteRule& r1 : rules_) {
        for (const RewriteRule& r2 : rules_) {
            if (r1.lhs[1] != r2.lhs[0]) continue;
            // Overlap word a b c with r1 on ab and r2 on bc.
            Word right{r2.lhs[1]};
            Word left{r1.lhs[0]};
            NcPoly via1 = normalize(r1.rhs * NcPoly::monomial(Scalar::one(), right));
            NcPoly via2 = normalize(NcPoly::monomial(Scalar::one(), left) * r2.rhs);
            if (via1 != via2) {
                ConfluenceReport report;
                report.confluent = false;
                std::ostringstream msg;
                msg << "overlap " << gens_.at(r1.lhs[0]).name << "*"
                    << gens_.at(r1.lhs[1]).name << "*" << gens_.at(r2.lhs[1]).name
                    << " resolves to " << via1.str(gens_) << " one way and to "
                    << via2.str(gens_) << " the other";
                report.details = msg.str();
                return report;
            }
        }
    }
    return ConfluenceReport{};
}

}  // namespace twistkit
