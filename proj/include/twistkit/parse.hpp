#pragma once

#include <stdexcept>
#include <string>

#include "twistkit/ncpoly.hpp"
#include "twistkit/scalar.hpp"

namespace twistkit {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    size_t position() const { return position_; }

private:
    size_t position_;
};

// Parse an expression in the generators of gens.  Literals: integers,
// rationals a/b, q, zeta (and i for cyclotomic order 4).  '*' is the
// noncommutative product, '^' takes nonnegative powers of generators and
// arbitrary integer powers of unit scalars, unary minus binds to the
// factor after it.
NcPoly parse_poly(const std::string& text, const GenSet& gens,
                  unsigned scalar_order = Scalar::default_order);

// Parse a generator-free expression down to a single Scalar.
Scalar parse_scalar(const std::string& text,
                    unsigned scalar_order = Scalar::default_order);

}  // namespace twistkit
