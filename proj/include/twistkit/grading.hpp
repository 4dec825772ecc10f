#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "twistkit/scalar.hpp"

namespace twistkit {

// Element of a finitely generated abelian group, stored as one coordinate
// per factor: free coordinates first, then one coordinate per cyclic factor
// reduced into [0, n_i).
using GroupElement = std::vector<long>;

// Z^r x Z/n_1 x ... x Z/n_k, the degree group of a graded algebra.
class GradingGroup {
public:
    GradingGroup() = default;
    GradingGroup(unsigned free_rank, std::vector<unsigned> torsion);

    static GradingGroup from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    unsigned free_rank() const { return free_rank_; }
    const std::vector<unsigned>& torsion() const { return torsion_; }
    size_t rank() const { return free_rank_ + torsion_.size(); }

    GroupElement zero() const;
    GroupElement reduce(GroupElement g) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    bool is_zero(const GroupElement& a) const;

    bool is_finite() const { return free_rank_ == 0; }
    unsigned long order() const;

    // All elements of a finite group, last coordinate varying fastest.
    std::vector<GroupElement> enumerate() const;
    size_t element_index(const GroupElement& g) const;

    // Self-dual pairing of a finite group: the character labelled by g
    // evaluated at h, as a root of unity of the given cyclotomic order.
    // Every cyclic factor order must divide scalar_order.
    Scalar pairing(const GroupElement& g, const GroupElement& h,
                   unsigned scalar_order) const;

    bool operator==(const GradingGroup& other) const {
        return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
    }
    bool operator!=(const GradingGroup& other) const { return !(*this == other); }

    std::string describe() const;

private:
    unsigned free_rank_ = 0;
    std::vector<unsigned> torsion_;

    void check_size(const GroupElement& g) const;
};

}  // namespace twistkit
