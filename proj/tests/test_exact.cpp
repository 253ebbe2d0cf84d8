#include "qsu2/exact.hpp"
#include "qsu2/laurent.hpp"

#include <doctest.h>

using namespace qsu2;

TEST_SUITE("exact") {

TEST_CASE("exact scalar field operations") {
    Rational q(1, 2);
    auto one = ExactScalar::integer(1, q);
    auto i = ExactScalar::imaginary_unit(q);
    auto s = ExactScalar::q_power(1, q); // sqrt(q)
    CHECK((s * s == ExactScalar::rational(q, q)));
    CHECK((i * i == -one));
    auto z = one + i * s;
    auto w = z * z.inverse();
    CHECK((w == one));
    CHECK((z.conj().conj() == z));
    // q^{-3/2} = q^{-2} * s
    auto p = ExactScalar::q_power(-3, q);
    CHECK((p * ExactScalar::q_power(3, q) == one));
    CHECK(std::abs(p.to_complex() - std::complex<double>(2.8284271247461903, 0)) < 1e-12);
}

TEST_CASE("laurent arithmetic and evaluation") {
    Rational q(1, 2);
    auto s = LaurentScalar::s_power(1);
    auto x = s * s - LaurentScalar::integer(1);      // q - 1
    auto y = x * x;                                  // (q-1)^2
    QSqrtRat v = laurent_to_qs(y, q);
    CHECK(v.b == 0);
    CHECK(v.a == Rational(1, 4));
    // odd powers pick up the s part
    QSqrtRat w = laurent_to_qs(LaurentScalar::s_power(-3), q);
    CHECK(w.a == 0);
    CHECK(w.b == Rational(4)); // s^{-3} = q^{-2} s
    CHECK(qs_to_double(w, q) == doctest::Approx(2.8284271247461903));
    // cancellation to zero
    CHECK((x - x).is_zero());
}

TEST_CASE("qsqrt rational division") {
    Rational q(1, 2);
    QSqrtRat a{Rational(3), Rational(-2)};
    QSqrtRat b{Rational(1), Rational(1)};
    QSqrtRat c = qs_div(a, b, q);
    QSqrtRat back = qs_mul(c, b, q);
    CHECK(back == a);
    CHECK_THROWS_AS(qs_div(a, QSqrtRat{}, q), std::domain_error);
}

} // TEST_SUITE
