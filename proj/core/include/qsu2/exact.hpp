#ifndef QSU2_EXACT_HPP
#define QSU2_EXACT_HPP
//
// Project     : qsu2
// Module      : exact
// Description : exact scalars over Q(sqrt(q), i) for the algebra relation suites
//
// q is a fixed positive rational; sqrt(q) is adjoined symbolically, so every
// scalar is a + b*s + i*(c + d*s) with s^2 = q and a,b,c,d rational.  Only the
// symbolic algebra layer (PBW rewriting, pairing, Haar solving at small degree)
// runs over this field; all spectra use doubles.
//

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace qsu2 {

using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(sqrt(q)): a + b*s with s^2 = q.
struct QSqrtExt {
    Rational a = 0;
    Rational b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const QSqrtExt&) const = default;
};

/// Element of Q(sqrt(q), i).
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(QSqrtExt re, QSqrtExt im, Rational q) : re_(std::move(re)), im_(std::move(im)), q_(std::move(q)) {}

    static ExactScalar integer(long n, const Rational& q) { return ExactScalar({Rational(n), 0}, {0, 0}, q); }
    static ExactScalar rational(const Rational& r, const Rational& q) { return ExactScalar({r, 0}, {0, 0}, q); }
    static ExactScalar imaginary_unit(const Rational& q) { return ExactScalar({0, 0}, {Rational(1), 0}, q); }
    /// q^{twice/2} as an exact element (even exponent stays rational, odd picks up s).
    static ExactScalar q_power(int twice, const Rational& q);

    const QSqrtExt& re() const { return re_; }
    const QSqrtExt& im() const { return im_; }
    const Rational& q() const { return q_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    ExactScalar operator-() const;
    ExactScalar conj() const;
    ExactScalar inverse() const;

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);
    friend bool operator==(const ExactScalar& x, const ExactScalar& y);

    std::complex<double> to_complex() const;
    std::string str() const;

private:
    QSqrtExt re_;
    QSqrtExt im_;
    Rational q_ = 0; // 0 in default-constructed zero; fixed on first arithmetic
};

} // namespace qsu2

#endif // QSU2_EXACT_HPP
