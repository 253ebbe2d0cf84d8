#ifndef QSU2_SCALAR_HPP
#define QSU2_SCALAR_HPP
//
// Project     : qsu2
// Module      : scalar
// Description : q-number arithmetic, half-integer indices and run parameters
//

#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qsu2 {

using complexd = std::complex<double>;

/// Exact half-integer (stores 2x).  All l, m, n, j indices use this type so
/// index arithmetic never touches floating point.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

    static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }
    static constexpr HalfInt half(int twice_value) { return HalfInt(twice_value); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr double value() const { return 0.5 * static_cast<double>(twice); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    constexpr HalfInt abs() const { return HalfInt(twice < 0 ? -twice : twice); }

    std::string str() const;
};

/// Parses "3", "-2", "7/2", "-1/2".
std::optional<HalfInt> parse_half_int(const std::string& text);

/// Podles family parameter: Finite(c >= 0) or Infinite.
struct PodlesC {
    bool finite = false;
    double c = 0.0;

    static PodlesC infinite() { return PodlesC{false, 0.0}; }
    static PodlesC value(double c);

    bool operator==(const PodlesC&) const = default;
    std::string str() const;
};

std::optional<PodlesC> parse_podles_c(const std::string& text);

/// Deformation parameter q in (0,1) together with the Podles parameter c.
struct QParam {
    double q;
    PodlesC c;

    explicit QParam(double q_value, PodlesC c_value = PodlesC::infinite());

    double sqrt_q() const { return std::sqrt(q); }
};

/// [x]_q = (q^x - q^{-x}) / (q - q^{-1})
double qint(double x, double q);
inline double qint(HalfInt x, double q) { return qint(x.value(), q); }

/// q^x for half-integer x, computed through sqrt(q) with an integer exponent.
double qpow_halfint(double q, HalfInt x);

} // namespace qsu2

#endif // QSU2_SCALAR_HPP
