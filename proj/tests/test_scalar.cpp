#include "qsu2/scalar.hpp"

#include <doctest.h>

using namespace qsu2;

TEST_SUITE("scalar") {

TEST_CASE("half integers") {
    HalfInt a(3), b = HalfInt::whole(2);
    CHECK(a.value() == doctest::Approx(1.5));
    CHECK((a + b).twice == 7);
    CHECK((-a).twice == -3);
    CHECK(a.str() == "3/2");
    CHECK(b.str() == "2");
    CHECK(parse_half_int("7/2")->twice == 7);
    CHECK(parse_half_int("-1/2")->twice == -1);
    CHECK(parse_half_int("4")->twice == 8);
    CHECK(!parse_half_int("x"));
    CHECK(!parse_half_int("1/3"));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(QParam(1.5), std::invalid_argument);
    CHECK_THROWS_AS(QParam(0.0), std::invalid_argument);
    CHECK_THROWS_AS(PodlesC::value(-1.0), std::invalid_argument);
    CHECK(parse_podles_c("inf")->finite == false);
    CHECK(parse_podles_c("2.5")->c == doctest::Approx(2.5));
    CHECK(!parse_podles_c("-3"));
}

TEST_CASE("q-integer values") {
    CHECK(qint(0.0, 0.5) == doctest::Approx(0.0));
    CHECK(qint(1.0, 0.5) == doctest::Approx(1.0));
    CHECK(qint(3.0, 0.5) == doctest::Approx(5.25));
    // odd function
    for (double x : {0.5, 1.0, 2.5, 7.0})
        CHECK(qint(-x, 0.37) == doctest::Approx(-qint(x, 0.37)));
}

TEST_CASE("q powers of half integers") {
    CHECK(qpow_halfint(0.73, HalfInt(0)) == doctest::Approx(1.0));
    CHECK(qpow_halfint(0.25, HalfInt(1)) == doctest::Approx(0.5));
    CHECK(qpow_halfint(0.5, HalfInt(-3)) == doctest::Approx(2.8284271247461903));
}

TEST_CASE("[x+1][x-1] = [x]^2 - 1 over integers") {
    for (double q : {0.3, 0.5, 0.8})
        for (int x = -10; x <= 10; ++x) {
            double lhs = qint(x + 1.0, q) * qint(x - 1.0, q);
            double rhs = qint(double(x), q) * qint(double(x), q) - 1.0;
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
        }
}

TEST_CASE("[2j] = q^{-(j+m)}[j-m] + q^{j-m}[j+m]") {
    for (double q : {0.3, 0.5, 0.8})
        for (int tj = 0; tj <= 20; ++tj)
            for (int tm = -tj; tm <= tj; tm += 2) {
                HalfInt j(tj), m(tm);
                double lhs = qint(HalfInt(2 * tj), q);
                double rhs = qpow_halfint(q, -(j + m)) * qint(j - m, q) +
                             qpow_halfint(q, j - m) * qint(j + m, q);
                CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
            }
}

} // TEST_SUITE
