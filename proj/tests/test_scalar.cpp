#include <doctest.h>

#include "twistkit/parse.hpp"
#include "twistkit/scalar.hpp"

using twistkit::ParseError;
using twistkit::Scalar;
using twistkit::cyclotomic_degree;
using twistkit::parse_scalar;

namespace {

Scalar roundtrip(const Scalar& s) { return parse_scalar(s.str(), s.cyclotomic_order()); }

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("fourth root of unity squares to minus one") {
    Scalar i = Scalar::zeta(4);
    CHECK(i * i == Scalar::integer(-1));
    CHECK(i.pow(4).is_one());
    CHECK(i.str() == "i");
}

TEST_CASE("q is invertible") {
    Scalar q = Scalar::q_power(1);
    CHECK((q * q.unit_inverse()).is_one());
    CHECK(q.pow(-3) == Scalar::q_power(-3));
}

TEST_CASE("laurent arithmetic is exact") {
    Scalar one = Scalar::one();
    Scalar q = Scalar::q_power(1);
    CHECK((one + q) * (one - q) == one - Scalar::q_power(2));
    CHECK(Scalar::rational(mpq_class(1, 3)) + Scalar::rational(mpq_class(1, 6)) ==
          Scalar::rational(mpq_class(1, 2)));
}

TEST_CASE("units are single monomials") {
    Scalar i = Scalar::zeta(4);
    Scalar u = i * Scalar::q_power(3);
    CHECK(u.is_unit());
    CHECK(u.unit_inverse() == -i * Scalar::q_power(-3));
    CHECK(u.unit_inverse().str() == "-i*q^-3");
    CHECK((u * u.unit_inverse()).is_one());
    Scalar nonunit = Scalar::one() + Scalar::q_power(1);
    CHECK(!nonunit.is_unit());
    CHECK_THROWS_AS(nonunit.unit_inverse(), std::domain_error);
}

TEST_CASE("cyclotomic coefficients invert") {
    Scalar c = Scalar::one() + Scalar::zeta(4);  // 1 + i
    CHECK(c.is_unit());
    CHECK((c * c.unit_inverse()).is_one());
    Scalar z3 = Scalar::zeta(3);
    Scalar d = Scalar::integer(2, 3) - z3;
    CHECK((d * d.unit_inverse()).is_one());
}

TEST_CASE("primitive roots have full order") {
    for (unsigned n : {1u, 2u, 3u, 4u, 8u, 12u}) {
        Scalar z = Scalar::zeta(n);
        for (unsigned m = 1; m < n; ++m) CHECK(!z.pow(m).is_one());
        CHECK(z.pow(n).is_one());
    }
    CHECK(cyclotomic_degree(1) == 1);
    CHECK(cyclotomic_degree(4) == 2);
    CHECK(cyclotomic_degree(8) == 4);
    CHECK(cyclotomic_degree(12) == 4);
}

TEST_CASE("third roots sum to zero") {
    Scalar z = Scalar::zeta(3);
    CHECK((Scalar::one(3) + z + z * z).is_zero());
}

TEST_CASE("eighth root powers reduce") {
    Scalar z = Scalar::zeta(8);
    CHECK(z.pow(4) == Scalar::integer(-1, 8));
    CHECK(z.pow(2) * z.pow(2) == Scalar::integer(-1, 8));
}

TEST_CASE("rational values adapt across cyclotomic orders") {
    CHECK(Scalar::one(4) == Scalar::one(8));
    CHECK(Scalar::integer(2, 3) * Scalar::q_power(1, 4) ==
          Scalar::integer(2, 4) * Scalar::q_power(1, 4));
    CHECK_THROWS_AS(Scalar::zeta(3) + Scalar::zeta(4), std::domain_error);
}

TEST_CASE("exact division of laurent polynomials") {
    Scalar one = Scalar::one();
    Scalar q = Scalar::q_power(1);
    Scalar num = one - Scalar::q_power(2);
    CHECK(num.exact_div(one - q) == one + q);
    CHECK(num.exact_div(one + q) == one - q);
    Scalar shifted = Scalar::q_power(-1) - q;  // q^-1 * (1 - q^2)
    CHECK(shifted.exact_div(one - q) == Scalar::q_power(-1) + one);
    CHECK_THROWS_AS((one + q).exact_div(one - q), std::domain_error);
    CHECK(Scalar::zero().exact_div(one + q).is_zero());
    CHECK_THROWS_AS(one.exact_div(Scalar::zero()), std::domain_error);
}

TEST_CASE("printing is canonical and parseable") {
    Scalar i = Scalar::zeta(4);
    Scalar q = Scalar::q_power(1);
    Scalar samples[] = {
        Scalar::zero(),
        Scalar::integer(-2),
        Scalar::rational(mpq_class(-3, 2)),
        i,
        -i,
        i * q,
        (Scalar::one() + i) * q,
        Scalar::q_power(-2) + Scalar::one() + q,
        Scalar::integer(3) * i * Scalar::q_power(5) - Scalar::rational(mpq_class(1, 2)),
        Scalar::zeta(8) + Scalar::zeta(8).pow(3) * Scalar::q_power(-1),
    };
    for (const Scalar& s : samples) CHECK(roundtrip(s) == s);
    CHECK(Scalar::zero().str() == "0");
    CHECK(Scalar::integer(-2).str() == "-2");
    CHECK((i * q).str() == "i*q");
    CHECK(((Scalar::one() + i) * q).str() == "(1 + i)*q");
    CHECK((Scalar::q_power(-2) + q).str() == "q^-2 + q");
}

TEST_CASE("parser reports positions") {
    CHECK_THROWS_AS(parse_scalar("1 + "), ParseError);
    CHECK_THROWS_AS(parse_scalar("(1 + q"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
    CHECK_THROWS_AS(parse_scalar("i", 8), ParseError);
    try {
        parse_scalar("1 + $");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK(parse_scalar("q^-1") == Scalar::q_power(-1));
    CHECK(parse_scalar("zeta^-1", 8) == Scalar::zeta(8).pow(7));
    CHECK(parse_scalar("-1/2*i*q^2") ==
          Scalar::rational(mpq_class(-1, 2)) * Scalar::zeta(4) * Scalar::q_power(2));
}

}
