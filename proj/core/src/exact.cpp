//
// Project     : qsu2
// Module      : exact
//

#include "qsu2/exact.hpp"

#include <sstream>

namespace qsu2 {

namespace {

QSqrtExt ext_add(const QSqrtExt& x, const QSqrtExt& y) { return {x.a + y.a, x.b + y.b}; }
QSqrtExt ext_sub(const QSqrtExt& x, const QSqrtExt& y) { return {x.a - y.a, x.b - y.b}; }
QSqrtExt ext_neg(const QSqrtExt& x) { return {-x.a, -x.b}; }

QSqrtExt ext_mul(const QSqrtExt& x, const QSqrtExt& y, const Rational& q) {
    // (a + b s)(c + d s) = (ac + bd q) + (ad + bc) s
    return {x.a * y.a + x.b * y.b * q, x.a * y.b + x.b * y.a};
}

QSqrtExt ext_inv(const QSqrtExt& x, const Rational& q) {
    // 1/(a + b s) = (a - b s) / (a^2 - b^2 q); the norm vanishes only for x = 0
    // since q is not a square of a rational times ... (s is irrational by choice of q).
    Rational norm = x.a * x.a - x.b * x.b * q;
    if (norm == 0) {
        if (x.is_zero())
            throw std::domain_error("division by zero in Q(sqrt(q))");
        // a^2 = b^2 q means sqrt(q) rational; fall back to treating s = a/b exactly.
        Rational s = x.a / x.b;
        Rational denom = x.a + x.b * s; // = 2a
        return {1 / denom, 0};
    }
    return {x.a / norm, -x.b / norm};
}

Rational pick_q(const Rational& x, const Rational& y) {
    if (x == 0)
        return y;
    if (y != 0 && x != y)
        throw std::logic_error("exact scalars with different q mixed in one expression");
    return x;
}

} // namespace

ExactScalar ExactScalar::q_power(int twice, const Rational& q) {
    if (q <= 0)
        throw std::invalid_argument("exact q must be positive");
    bool odd = (twice % 2) != 0;
    int whole = odd ? (twice - (twice > 0 ? 1 : -1)) / 2 : twice / 2;
    Rational r = 1;
    if (whole >= 0)
        for (int i = 0; i < whole; ++i)
            r *= q;
    else
        for (int i = 0; i < -whole; ++i)
            r /= q;
    if (!odd)
        return ExactScalar({r, 0}, {0, 0}, q);
    if (twice > 0)
        return ExactScalar({0, r}, {0, 0}, q); // q^{whole} * s
    return ExactScalar({0, r / q}, {0, 0}, q); // q^{whole} * s^{-1} = q^{whole-1} s
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(ext_neg(re_), ext_neg(im_), q_); }

ExactScalar ExactScalar::conj() const { return ExactScalar(re_, ext_neg(im_), q_); }

ExactScalar ExactScalar::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero in Q(sqrt(q), i)");
    // 1/z = conj(z) / (z conj(z)); the denominator is real: re^2 + im^2 in Q(sqrt q).
    QSqrtExt denom = ext_add(ext_mul(re_, re_, q_), ext_mul(im_, im_, q_));
    QSqrtExt denom_inv = ext_inv(denom, q_);
    return ExactScalar(ext_mul(re_, denom_inv, q_), ext_mul(ext_neg(im_), denom_inv, q_), q_);
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    Rational q = pick_q(x.q_, y.q_);
    return ExactScalar(ext_add(x.re_, y.re_), ext_add(x.im_, y.im_), q);
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    Rational q = pick_q(x.q_, y.q_);
    return ExactScalar(ext_sub(x.re_, y.re_), ext_sub(x.im_, y.im_), q);
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    Rational q = pick_q(x.q_, y.q_);
    if (q == 0)
        return ExactScalar(); // 0 * 0 with no q context yet
    QSqrtExt re = ext_sub(ext_mul(x.re_, y.re_, q), ext_mul(x.im_, y.im_, q));
    QSqrtExt im = ext_add(ext_mul(x.re_, y.im_, q), ext_mul(x.im_, y.re_, q));
    return ExactScalar(re, im, q);
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) { return x * y.inverse(); }

bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
}

std::complex<double> ExactScalar::to_complex() const {
    double s = q_ == 0 ? 0.0 : std::sqrt(static_cast<double>(q_));
    auto ext = [&](const QSqrtExt& e) { return static_cast<double>(e.a) + static_cast<double>(e.b) * s; };
    return {ext(re_), ext(im_)};
}

std::string ExactScalar::str() const {
    std::ostringstream os;
    auto ext = [&](const QSqrtExt& e) {
        std::ostringstream t;
        t << e.a;
        if (e.b != 0)
            t << (e.b > 0 ? "+" : "") << e.b << "*s";
        return t.str();
    };
    os << "(" << ext(re_) << ")";
    if (!im_.is_zero())
        os << "+i(" << ext(im_) << ")";
    return os.str();
}

} // namespace qsu2
