#include "twistkit/grading.hpp"

#include <sstream>
#include <stdexcept>

namespace twistkit {

GradingGroup::GradingGroup(unsigned free_rank, std::vector<unsigned> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (unsigned n : torsion_) {
        if (n == 0) throw std::domain_error("GradingGroup: torsion order must be positive");
    }
}

GradingGroup GradingGroup::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::domain_error("GradingGroup: expected a JSON object");
    unsigned free_rank = 0;
    std::vector<unsigned> torsion;
    if (j.contains("free_rank")) {
        if (!j["free_rank"].is_number_integer() || j["free_rank"].get<long long>() < 0)
            throw std::domain_error("GradingGroup: free_rank must be a nonnegative integer");
        free_rank = static_cast<unsigned>(j["free_rank"].get<long long>());
    }
    if (j.contains("torsion")) {
        if (!j["torsion"].is_array())
            throw std::domain_error("GradingGroup: torsion must be an array");
        for (const auto& entry : j["torsion"]) {
            if (!entry.is_number_integer() || entry.get<long long>() <= 0)
                throw std::domain_error("GradingGroup: torsion orders must be positive integers");
            torsion.push_back(static_cast<unsigned>(entry.get<long long>()));
        }
    }
    return GradingGroup(free_rank, std::move(torsion));
}

nlohmann::json GradingGroup::to_json() const {
    return nlohmann::json{{"free_rank", free_rank_}, {"torsion", torsion_}};
}

GroupElement GradingGroup::zero() const { return GroupElement(rank(), 0); }

void GradingGroup::check_size(const GroupElement& g) const {
    if (g.size() != rank()) {
        std::ostringstream msg;
        msg << "GradingGroup: element has " << g.size() << " coordinates, expected " << rank();
        throw std::domain_error(msg.str());
    }
}

GroupElement GradingGroup::reduce(GroupElement g) const {
    check_size(g);
    for (size_t i = 0; i < torsion_.size(); ++i) {
        long n = static_cast<long>(torsion_[i]);
        long& c = g[free_rank_ + i];
        c %= n;
        if (c < 0) c += n;
    }
    return g;
}

GroupElement GradingGroup::add(const GroupElement& a, const GroupElement& b) const {
    check_size(a);
    check_size(b);
    GroupElement out(rank());
    for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return reduce(std::move(out));
}

GroupElement GradingGroup::neg(const GroupElement& a) const {
    check_size(a);
    GroupElement out(rank());
    for (size_t i = 0; i < out.size(); ++i) out[i] = -a[i];
    return reduce(std::move(out));
}

GroupElement GradingGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

bool GradingGroup::is_zero(const GroupElement& a) const {
    check_size(a);
    for (long c : a)
        if (c != 0) return false;
    return true;
}

unsigned long GradingGroup::order() const {
    if (!is_finite()) throw std::domain_error("GradingGroup::order: group is infinite");
    unsigned long n = 1;
    for (unsigned t : torsion_) n *= t;
    return n;
}

std::vector<GroupElement> GradingGroup::enumerate() const {
    unsigned long n = order();
    if (n > 1000000) throw std::domain_error("GradingGroup::enumerate: group too large");
    std::vector<GroupElement> out;
    out.reserve(n);
    GroupElement g = zero();
    for (unsigned long i = 0; i < n; ++i) {
        out.push_back(g);
        for (size_t j = torsion_.size(); j-- > 0;) {
            if (++g[j] < static_cast<long>(torsion_[j])) break;
            g[j] = 0;
        }
    }
    return out;
}

size_t GradingGroup::element_index(const GroupElement& g) const {
    if (!is_finite()) throw std::domain_error("GradingGroup::element_index: group is infinite");
    GroupElement r = reduce(g);
    size_t idx = 0;
    for (size_t i = 0; i < torsion_.size(); ++i) idx = idx * torsion_[i] + r[i];
    return idx;
}

Scalar GradingGroup::pairing(const GroupElement& g, const GroupElement& h,
                             unsigned scalar_order) const {
    if (!is_finite()) throw std::domain_error("GradingGroup::pairing: group is infinite");
    GroupElement a = reduce(g), b = reduce(h);
    long exponent = 0;
    for (size_t i = 0; i < torsion_.size(); ++i) {
        if (scalar_order % torsion_[i] != 0)
            throw std::domain_error(
                "GradingGroup::pairing: cyclotomic order not divisible by torsion order");
        long step = static_cast<long>(scalar_order / torsion_[i]);
        exponent += step * a[i] * b[i];
    }
    return Scalar::zeta_power(exponent, scalar_order);
}

std::string GradingGroup::describe() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned i = 0; i < free_rank_; ++i) {
        out << (first ? "" : " x ") << "Z";
        first = false;
    }
    for (unsigned n : torsion_) {
        out << (first ? "" : " x ") << "Z/" << n;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace twistkit
