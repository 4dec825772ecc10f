#include "twistkit/scalar.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace twistkit {

namespace {

// Dense polynomials over Q, ascending powers, no trailing zeros.
using Poly = std::vector<mpq_class>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder for monic-or-field division; den must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    Poly quot;
    if (den.empty()) throw std::domain_error("Scalar: division by zero polynomial");
    if (num.size() >= den.size()) {
        quot.assign(num.size() - den.size() + 1, mpq_class(0));
        const mpq_class& lead = den.back();
        for (size_t s = quot.size(); s-- > 0;) {
            mpq_class c = num[s + den.size() - 1] / lead;
            quot[s] = c;
            if (c != 0) {
                for (size_t j = 0; j < den.size(); ++j) num[s + j] -= c * den[j];
            }
        }
    }
    poly_trim(num);
    return {std::move(quot), std::move(num)};
}

Poly cyclotomic_poly(unsigned order, std::map<unsigned, Poly>& cache) {
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    // x^order - 1 divided by the cyclotomic polynomials of all proper divisors.
    Poly p(order + 1, mpq_class(0));
    p[0] = -1;
    p[order] = 1;
    for (unsigned d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        auto [q, r] = poly_divmod(p, cyclotomic_poly(d, cache));
        if (!r.empty()) throw std::logic_error("Scalar: cyclotomic division not exact");
        p = std::move(q);
    }
    cache[order] = p;
    return p;
}

struct CycloContext {
    unsigned order = 0;
    unsigned degree = 0;
    Poly minpoly;  // monic, ascending, length degree + 1
};

const CycloContext& cyclo_context(unsigned order) {
    static std::mutex mutex;
    static std::map<unsigned, CycloContext> registry;
    static std::map<unsigned, Poly> poly_cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(order);
    if (it != registry.end()) return it->second;
    if (order == 0) throw std::domain_error("Scalar: cyclotomic order must be positive");
    CycloContext ctx;
    ctx.order = order;
    ctx.minpoly = cyclotomic_poly(order, poly_cache);
    ctx.degree = static_cast<unsigned>(ctx.minpoly.size() - 1);
    return registry.emplace(order, std::move(ctx)).first->second;
}

using Cyclo = Scalar::Cyclo;

bool cyclo_is_zero(const Cyclo& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

Cyclo cyclo_reduce(const CycloContext& ctx, Poly p) {
    auto [q, r] = poly_divmod(std::move(p), ctx.minpoly);
    (void)q;
    r.resize(ctx.degree, mpq_class(0));
    return r;
}

Cyclo cyclo_mul(const CycloContext& ctx, const Cyclo& a, const Cyclo& b) {
    Poly prod(a.size() + b.size(), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    poly_trim(prod);
    return cyclo_reduce(ctx, std::move(prod));
}

// Inverse in the field Q(zeta_N) by the extended Euclidean algorithm
// against the (irreducible) minimal polynomial.
Cyclo cyclo_inv(const CycloContext& ctx, const Cyclo& a) {
    if (cyclo_is_zero(a)) throw std::domain_error("Scalar: division by zero");
    Poly r0 = ctx.minpoly;
    Poly r1(a);
    poly_trim(r1);
    Poly s0, s1{mpq_class(1)};
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1);
        // s2 = s0 - q * s1
        Poly qs(q.size() + s1.size(), mpq_class(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        Poly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), mpq_class(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd, a nonzero constant since the minimal polynomial
    // is irreducible and a has smaller degree.
    if (r0.size() != 1) throw std::logic_error("Scalar: inverse gcd not constant");
    for (auto& c : s0) c /= r0[0];
    return cyclo_reduce(ctx, std::move(s0));
}

std::string rational_str(const mpq_class& v) {
    mpq_class c = v;
    c.canonicalize();
    return c.get_str();
}

// One basis monomial a * zeta^j of the coefficient field.
std::string cyclo_basis_str(unsigned order, size_t j, const mpq_class& a) {
    if (j == 0) return rational_str(a);
    std::string z = order == 4 ? "i" : "zeta";
    if (j > 1) z += "^" + std::to_string(j);
    if (a == 1) return z;
    if (a == -1) return "-" + z;
    return rational_str(a) + "*" + z;
}

std::string join_terms(const std::vector<std::string>& parts) {
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

}  // namespace

unsigned cyclotomic_degree(unsigned order) {
    return cyclo_context(order).degree;
}

Scalar::Scalar(unsigned cyclotomic_order) : order_(cyclotomic_order) {
    cyclo_context(order_);
}

Scalar Scalar::zero(unsigned order) { return Scalar(order); }

Scalar Scalar::one(unsigned order) { return integer(1, order); }

Scalar Scalar::integer(long value, unsigned order) {
    return rational(mpq_class(value), order);
}

Scalar Scalar::rational(const mpq_class& value, unsigned order) {
    Scalar s(order);
    if (value != 0) {
        Cyclo c(cyclo_context(order).degree, mpq_class(0));
        c[0] = value;
        c[0].canonicalize();
        s.terms_.emplace(0, std::move(c));
    }
    return s;
}

Scalar Scalar::q_power(long exponent, unsigned order) {
    Scalar s = one(order);
    if (exponent != 0) {
        auto node = s.terms_.extract(0);
        node.key() = exponent;
        s.terms_.insert(std::move(node));
    }
    return s;
}

Scalar Scalar::zeta(unsigned order) { return zeta_power(1, order); }

Scalar Scalar::zeta_power(long exponent, unsigned order) {
    const CycloContext& ctx = cyclo_context(order);
    long k = exponent % static_cast<long>(order);
    if (k < 0) k += order;
    Poly p(static_cast<size_t>(k) + 1, mpq_class(0));
    p.back() = 1;
    Scalar s(order);
    Cyclo c = cyclo_reduce(ctx, std::move(p));
    if (!cyclo_is_zero(c)) s.terms_.emplace(0, std::move(c));
    return s;
}

bool Scalar::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [k, c] = *terms_.begin();
    if (k != 0 || c[0] != 1) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

bool Scalar::is_unit() const {
    // Nonzero cyclotomic coefficients are invertible and q is a unit,
    // so units are exactly the single-term values.
    return terms_.size() == 1;
}

bool Scalar::is_rational() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& [k, c] = *terms_.begin();
    if (k != 0) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

mpq_class Scalar::rational_value() const {
    if (!is_rational()) throw std::domain_error("Scalar::rational_value: not rational");
    if (terms_.empty()) return mpq_class(0);
    return terms_.begin()->second[0];
}

bool Scalar::is_cyclo_free() const {
    for (const auto& [k, c] : terms_)
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return false;
    return true;
}

Scalar Scalar::with_order(unsigned order) const {
    if (order_ == order) return *this;
    if (!is_cyclo_free()) throw std::domain_error("Scalar: mixed cyclotomic orders");
    Scalar out(order);
    size_t degree = cyclo_context(order).degree;
    for (const auto& [k, c] : terms_) {
        Cyclo nc(degree, mpq_class(0));
        nc[0] = c[0];
        out.terms_.emplace(k, std::move(nc));
    }
    return out;
}

void Scalar::insert_term(long exponent, Cyclo coeff) {
    if (!cyclo_is_zero(coeff)) terms_.emplace(exponent, std::move(coeff));
}

void Scalar::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (cyclo_is_zero(it->second))
            it = terms_.erase(it);
        else
            ++it;
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& [k, c] : out.terms_)
        for (auto& v : c) v = -v;
    return out;
}

Scalar Scalar::operator+(const Scalar& other) const {
    Scalar a = *this, b = other;
    if (a.order_ != b.order_) {
        if (a.is_cyclo_free()) a = a.with_order(b.order_);
        else b = b.with_order(a.order_);
    }
    for (auto& [k, c] : b.terms_) {
        auto it = a.terms_.find(k);
        if (it == a.terms_.end()) {
            a.terms_.emplace(k, std::move(c));
        } else {
            for (size_t i = 0; i < c.size(); ++i) it->second[i] += c[i];
        }
    }
    a.strip_zeros();
    return a;
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
    Scalar a = *this, b = other;
    if (a.order_ != b.order_) {
        if (a.is_cyclo_free()) a = a.with_order(b.order_);
        else b = b.with_order(a.order_);
    }
    const CycloContext& ctx = cyclo_context(a.order_);
    Scalar out(a.order_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            Cyclo prod = cyclo_mul(ctx, ca, cb);
            auto it = out.terms_.find(ka + kb);
            if (it == out.terms_.end()) {
                out.terms_.emplace(ka + kb, std::move(prod));
            } else {
                for (size_t i = 0; i < prod.size(); ++i) it->second[i] += prod[i];
            }
        }
    }
    out.strip_zeros();
    return out;
}

Scalar& Scalar::operator+=(const Scalar& other) { return *this = *this + other; }
Scalar& Scalar::operator-=(const Scalar& other) { return *this = *this - other; }
Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

bool Scalar::operator==(const Scalar& other) const {
    if (order_ == other.order_) return terms_ == other.terms_;
    return with_order(other.order_).terms_ == other.terms_;
}

long Scalar::unit_q_exponent() const {
    if (!is_unit()) throw std::domain_error("Scalar::unit_q_exponent: not a unit");
    return terms_.begin()->first;
}

Scalar Scalar::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("Scalar::unit_inverse: not a unit");
    const auto& [k, c] = *terms_.begin();
    Scalar out(order_);
    out.terms_.emplace(-k, cyclo_inv(cyclo_context(order_), c));
    return out;
}

Scalar Scalar::pow(long exponent) const {
    if (exponent == 0) return one(order_);
    if (is_zero()) {
        if (exponent > 0) return zero(order_);
        throw std::domain_error("Scalar::pow: negative power of zero");
    }
    Scalar base = exponent < 0 ? unit_inverse() : *this;
    unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
    Scalar out = one(order_);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

Scalar Scalar::exact_div(const Scalar& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Scalar::exact_div: division by zero");
    if (is_zero()) return zero(order_);
    Scalar a = *this, b = divisor;
    if (a.order_ != b.order_) {
        if (a.is_cyclo_free()) a = a.with_order(b.order_);
        else b = b.with_order(a.order_);
    }
    if (b.is_unit()) return a * b.unit_inverse();
    const CycloContext& ctx = cyclo_context(a.order_);
    // Factor out the lowest q-powers and run polynomial long division
    // with coefficients in the field Q(zeta_N).
    long la = a.terms_.begin()->first;
    long lb = b.terms_.begin()->first;
    size_t da = static_cast<size_t>(a.terms_.rbegin()->first - la);
    size_t db = static_cast<size_t>(b.terms_.rbegin()->first - lb);
    if (da < db) throw std::domain_error("Scalar::exact_div: not divisible");
    Cyclo zero_c(ctx.degree, mpq_class(0));
    std::vector<Cyclo> num(da + 1, zero_c), den(db + 1, zero_c);
    for (const auto& [k, c] : a.terms_) num[static_cast<size_t>(k - la)] = c;
    for (const auto& [k, c] : b.terms_) den[static_cast<size_t>(k - lb)] = c;
    Cyclo lead_inv = cyclo_inv(ctx, den.back());
    std::vector<Cyclo> quot(da - db + 1, zero_c);
    for (size_t i = da + 1; i-- > db;) {
        if (cyclo_is_zero(num[i])) continue;
        Cyclo c = cyclo_mul(ctx, num[i], lead_inv);
        size_t shift = i - db;
        for (size_t j = 0; j <= db; ++j) {
            Cyclo sub = cyclo_mul(ctx, c, den[j]);
            for (size_t t = 0; t < sub.size(); ++t) num[shift + j][t] -= sub[t];
        }
        quot[shift] = std::move(c);
    }
    for (const auto& c : num)
        if (!cyclo_is_zero(c)) throw std::domain_error("Scalar::exact_div: not divisible");
    Scalar out(a.order_);
    for (size_t i = 0; i < quot.size(); ++i)
        out.insert_term(la - lb + static_cast<long>(i), std::move(quot[i]));
    return out;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::string> parts;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> basis;
        for (size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0) basis.push_back(cyclo_basis_str(order_, j, c[j]));
        std::string coeff = basis.size() == 1 ? basis[0] : "(" + join_terms(basis) + ")";
        std::string qpart;
        if (k == 1) qpart = "q";
        else if (k != 0) qpart = "q^" + std::to_string(k);
        if (qpart.empty()) {
            parts.push_back(coeff);
        } else if (coeff == "1") {
            parts.push_back(qpart);
        } else if (coeff == "-1") {
            parts.push_back("-" + qpart);
        } else {
            parts.push_back(coeff + "*" + qpart);
        }
    }
    return join_terms(parts);
}

}  // namespace twistkit
