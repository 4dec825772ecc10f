#pragma once

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistkit/grading.hpp"
#include "twistkit/scalar.hpp"

namespace twistkit {

// Bimultiplicative map G x G -> units, determined by its values on the
// coordinate generators.  Alternating means b(g,g) = 1 everywhere, which
// for a bicharacter is equivalent to b(e_i,e_i) = 1 and b(h,g) = b(g,h)^-1.
class Bicharacter {
public:
    Bicharacter(GradingGroup group, std::vector<std::vector<Scalar>> generator_values,
                unsigned scalar_order);

    // Build an alternating bicharacter from the values b(e_i, e_j) for i < j.
    static Bicharacter alternating(GradingGroup group,
                                   const std::map<std::pair<size_t, size_t>, Scalar>& upper,
                                   unsigned scalar_order);

    const GradingGroup& group() const { return group_; }
    unsigned scalar_order() const { return order_; }
    Scalar generator_value(size_t i, size_t j) const;
    Scalar value(const GroupElement& g, const GroupElement& h) const;
    bool is_alternating() const;

private:
    GradingGroup group_;
    unsigned order_;
    std::vector<std::vector<Scalar>> gen_values_;
};

// Unit-valued function on a finite group with lambda(0) = 1, the data of a
// coboundary two-cocycle.
class CoboundaryForm {
public:
    CoboundaryForm(GradingGroup group, std::vector<Scalar> values, unsigned scalar_order);

    const GradingGroup& group() const { return group_; }
    unsigned scalar_order() const { return order_; }
    const std::vector<Scalar>& values() const { return values_; }
    Scalar value(const GroupElement& g) const;

private:
    GradingGroup group_;
    unsigned order_;
    std::vector<Scalar> values_;  // enumerate order
};

enum class CocycleKind { Table, BilinearQ, BicharacterSplit, Coboundary, Product };

// A two-cocycle on the grading group with values in Scalar units.
class TwoCocycle {
public:
    static TwoCocycle trivial(GradingGroup group,
                              unsigned scalar_order = Scalar::default_order);
    static TwoCocycle table(GradingGroup group, std::vector<std::vector<Scalar>> values,
                            unsigned scalar_order = Scalar::default_order);
    static TwoCocycle bilinear_q(GradingGroup group, std::vector<std::vector<long>> matrix,
                                 unsigned scalar_order = Scalar::default_order);
    // The distinguished table on Z/2 x Z/2 whose twist produces the
    // anticommuting examples: sigma(g,g) = -1 off the identity, and the
    // cyclically ordered off-diagonal pairs take value +1.
    static TwoCocycle sigma_v(unsigned scalar_order = Scalar::default_order);

    static TwoCocycle from_json(const nlohmann::json& descriptor, const GradingGroup& group,
                                unsigned scalar_order = Scalar::default_order);

    CocycleKind kind() const { return kind_; }
    const GradingGroup& group() const { return group_; }
    unsigned scalar_order() const { return order_; }
    const nlohmann::json& descriptor() const { return descriptor_; }

    Scalar operator()(const GroupElement& g, const GroupElement& h) const;
    // b(g,h) = sigma(h,g) / sigma(g,h)
    Scalar braiding(const GroupElement& g, const GroupElement& h) const;

private:
    TwoCocycle() = default;

    CocycleKind kind_ = CocycleKind::Table;
    GradingGroup group_;
    unsigned order_ = Scalar::default_order;
    std::vector<std::vector<Scalar>> table_;
    std::vector<std::vector<long>> matrix_;
    std::vector<std::vector<Scalar>> split_values_;  // generator matrix of b
    std::vector<Scalar> lambda_;
    std::vector<TwoCocycle> factors_;
    nlohmann::json descriptor_;

    friend TwoCocycle cocycle_from_bicharacter(const Bicharacter& b);
    friend TwoCocycle coboundary(const CoboundaryForm& lambda);
    friend TwoCocycle convolve(const TwoCocycle& sigma, const TwoCocycle& tau);
};

struct CocycleCheck {
    bool valid = true;
    std::optional<std::array<GroupElement, 3>> witness;
    std::string details;
};

// Exhaustive on finite groups; bimultiplicative kinds on infinite groups
// hold identically and are spot-checked on a coordinate box.
CocycleCheck check_cocycle(const TwoCocycle& sigma);

Bicharacter derived_bicharacter(const TwoCocycle& sigma);

// A section of sigma -> b_sigma: picks the cocycle supported below the
// diagonal in coordinates, sigma(x,y) = prod_{i>j} b(e_j,e_i)^{x_i y_j}.
TwoCocycle cocycle_from_bicharacter(const Bicharacter& b);

TwoCocycle coboundary(const CoboundaryForm& lambda);

TwoCocycle convolve(const TwoCocycle& sigma, const TwoCocycle& tau);

// A witness lambda with tau = sigma * d(lambda), if the two cocycles are
// cohomologous.  Finite groups only; the search runs over values that are
// roots of unity times the q-powers already present in sigma and tau.
std::optional<CoboundaryForm> are_equivalent(const TwoCocycle& sigma, const TwoCocycle& tau);

// An element of k[G] tensor k[G] with exact coefficients on pairs of
// group basis elements.
struct GroupAlgebraTensor {
    GradingGroup group;
    unsigned scalar_order = Scalar::default_order;
    std::vector<std::vector<Scalar>> coefficients;  // enumerate order

    Scalar coefficient(const GroupElement& g, const GroupElement& h) const;
    bool operator==(const GroupAlgebraTensor& other) const;
};

// F = sum sigma(chi,psi) e_chi tensor e_psi expanded over the group basis,
// where e_chi are the character idempotents.
GroupAlgebraTensor cocycle_to_twist(const TwoCocycle& sigma);

// Whether F commutes with every coproduct image Delta(u_g); for group
// gradings this always holds.
bool twist_is_lazy(const GroupAlgebraTensor& twist);

}  // namespace twistkit
