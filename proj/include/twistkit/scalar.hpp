#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace twistkit {

// Exact elements of Q(zeta_N)[q, q^-1]: Laurent polynomials in a central
// parameter q whose coefficients live in the N-th cyclotomic field.  The
// order N travels with the value.  Mixing orders in arithmetic is an error,
// except that values free of zeta (rationals, zero, plain q-powers) adapt
// to the other operand.
class Scalar {
public:
    // Coefficient in Q(zeta_N) on the power basis 1, zeta, ..., zeta^{phi(N)-1}.
    using Cyclo = std::vector<mpq_class>;

    static constexpr unsigned default_order = 4;

    Scalar() : order_(default_order) {}
    explicit Scalar(unsigned cyclotomic_order);

    static Scalar zero(unsigned order = default_order);
    static Scalar one(unsigned order = default_order);
    static Scalar integer(long value, unsigned order = default_order);
    static Scalar rational(const mpq_class& value, unsigned order = default_order);
    static Scalar q_power(long exponent, unsigned order = default_order);
    static Scalar zeta(unsigned order = default_order);
    static Scalar zeta_power(long exponent, unsigned order = default_order);

    unsigned cyclotomic_order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_unit() const;
    bool is_rational() const;
    mpq_class rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    // Inverse of a unit, i.e. a single monomial c*q^k with c nonzero.
    Scalar unit_inverse() const;
    // The exponent k of a unit c*q^k.
    long unit_q_exponent() const;
    // Integer powers; negative exponents require a unit.
    Scalar pow(long exponent) const;
    // Exact quotient in Q(zeta_N)[q, q^-1]; throws when not divisible.
    Scalar exact_div(const Scalar& divisor) const;

    std::string str() const;

private:
    unsigned order_;
    // q-exponent -> coefficient; stored coefficients are never all-zero.
    std::map<long, Cyclo> terms_;

    bool is_cyclo_free() const;
    Scalar with_order(unsigned order) const;
    void insert_term(long exponent, Cyclo coeff);
    void strip_zeros();
};

// phi(N), the degree of Q(zeta_N) over Q.
unsigned cyclotomic_degree(unsigned order);

}  // namespace twistkit
