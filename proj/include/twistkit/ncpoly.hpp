#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistkit/cocycle.hpp"
#include "twistkit/grading.hpp"
#include "twistkit/scalar.hpp"

namespace twistkit {

// A word in the free monoid on the generators, as a list of generator
// indices.  The empty word is the unit.
using Word = std::vector<unsigned>;

// Graded lexicographic order: shorter words first, ties broken letter by
// letter in declaration order.  Monotone under concatenation on both sides,
// which is what makes rewriting terminate.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct Generator {
    std::string name;
    GroupElement degree;
};

// An ordered set of named generators graded by a fixed group.
class GenSet {
public:
    GenSet() = default;
    GenSet(GradingGroup group, std::vector<Generator> generators);

    const GradingGroup& group() const { return group_; }
    size_t size() const { return generators_.size(); }
    const Generator& at(size_t index) const;
    std::optional<size_t> find(const std::string& name) const;
    GroupElement word_degree(const Word& w) const;

    bool operator==(const GenSet& other) const;

private:
    GradingGroup group_;
    std::vector<Generator> generators_;
    std::map<std::string, size_t> index_;
};

// Noncommutative polynomial: a finite Scalar combination of words.
class NcPoly {
public:
    using TermMap = std::map<Word, Scalar, WordOrder>;

    NcPoly() = default;
    static NcPoly constant(const Scalar& c);
    static NcPoly monomial(const Scalar& c, Word w);
    static NcPoly generator(unsigned index);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    const Word& leading_word() const;
    Scalar coefficient(const Word& w) const;

    void add_term(const Scalar& c, const Word& w);

    NcPoly operator-() const;
    NcPoly operator+(const NcPoly& other) const;
    NcPoly operator-(const NcPoly& other) const;
    NcPoly operator*(const NcPoly& other) const;
    NcPoly& operator+=(const NcPoly& other);
    NcPoly& operator-=(const NcPoly& other);
    NcPoly& operator*=(const NcPoly& other);
    NcPoly scale(const Scalar& c) const;
    NcPoly pow(unsigned exponent) const;
    bool operator==(const NcPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const NcPoly& other) const { return !(*this == other); }

    std::string str(const GenSet& gens) const;

private:
    TermMap terms_;
};

// Degree of a homogeneous polynomial; nullopt when words of different
// degree are mixed.  The zero polynomial reports the zero degree.
std::optional<GroupElement> homogeneous_degree(const NcPoly& p, const GenSet& gens);

// Replace generator i by images[i] everywhere, multiplying images in
// word order.  The images live over whatever generator set the caller
// intends; only their count must cover the indices used.
NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images);

struct RewriteRule {
    Word lhs;    // exactly two letters
    NcPoly rhs;  // every word strictly below lhs in the word order
};

struct ConfluenceReport {
    bool confluent = true;
    std::string details;
};

// Terminating rewrite system with two-letter left sides.  Rules are indexed
// by their left side; declaring the same left side twice is an error.
class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(const GenSet& gens, std::vector<RewriteRule> rules);

    const std::vector<RewriteRule>& rules() const { return rules_;}
    const RewriteRule* rule_for(unsigned a, unsigned b) const;

    // Fully reduce p, replacing the leftmost redex of the largest reducible
    // word first.  Throws when the step budget is exhausted.
    NcPoly normalize(const NcPoly& p, size_t step_budget = 1000000) const;

    // Check every length-three overlap of left sides resolves to the same
    // normal form.
    ConfluenceReport check_local_confluence() const;

private:
    std::vector<RewriteRule> rules_;
    GenSet gens_;
    std::map<std::pair<unsigned, unsigned>, size_t> by_lhs_;
};

// The scalar attached to a word with the given letter degrees: the product
// of inverted cocycle values accumulated left to right,
// sigma(d_1, d_2)^-1 sigma(d_1+d_2, d_3)^-1 ...
// The empty list gives sigma(0,0) and a single degree gives 1.
Scalar kappa_scalar(const std::vector<GroupElement>& degrees, const TwoCocycle& sigma);

// Rescale each word of p by its kappa scalar.  Relations of a graded
// presentation become relations of the twisted presentation this way.
NcPoly twist_relation(const NcPoly& p, const GenSet& gens, const TwoCocycle& sigma);

// Interpret each word as an iterated twisted product, i.e. divide by the
// kappa scalar.  Inverse of twist_relation.
NcPoly twisted_eval(const NcPoly& p, const GenSet& gens, const TwoCocycle& sigma);

// The twisted product: on homogeneous pieces of degrees g, h it is
// sigma(g,h) times the plain product, extended bilinearly.
NcPoly twisted_product(const NcPoly& p, const NcPoly& r, const GenSet& gens,
                       const TwoCocycle& sigma);

// Rules X_j X_i -> b(g_i, g_j) X_i X_j for j > i, orienting products
// toward nondecreasing words.
RewriteSystem commutation_rules(const GenSet& gens, const Bicharacter& b);

}  // namespace twistkit
