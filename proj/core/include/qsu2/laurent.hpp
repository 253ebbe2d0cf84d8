#ifndef QSU2_LAURENT_HPP
#define QSU2_LAURENT_HPP
//
// Project     : qsu2
// Module      : laurent
// Description : exact scalars for the basis construction
//
// The ladder construction, the Haar pairing of basis vectors and every matrix
// element extracted from them are computed exactly and only then converted to
// doubles.  Double-precision monomial coordinates are useless here: the |lmn>
// vectors have q-binomial coefficient spreads, and the Haar Gram cancels those
// spreads squared, which already exceeds double precision at moderate levels.
//
// Two exact types:
//   LaurentScalar - element of Q[s, s^{-1}], s = sqrt(q); closed under every
//                   operation the coordinate algebra path performs (no division).
//   QSqrtRat      - element of Q(s) as a + b s; the value type of Haar pairings.
//

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>

namespace qsu2 {

using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Sparse Laurent polynomial in s with rational coefficients, stored as a
/// sorted flat vector of (exponent, coefficient) pairs.
class LaurentScalar {
public:
    using Terms = std::vector<std::pair<int, Rational>>;

    LaurentScalar() = default;

    static LaurentScalar integer(long n) {
        LaurentScalar x;
        if (n != 0)
            x.terms_.emplace_back(0, n);
        return x;
    }
    static LaurentScalar rational(const Rational& r) {
        LaurentScalar x;
        if (r != 0)
            x.terms_.emplace_back(0, r);
        return x;
    }
    static LaurentScalar s_power(int k) {
        LaurentScalar x;
        x.terms_.emplace_back(k, 1);
        return x;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    LaurentScalar operator-() const {
        LaurentScalar out;
        out.terms_.reserve(terms_.size());
        for (const auto& [k, c] : terms_)
            out.terms_.emplace_back(k, -c);
        return out;
    }

    friend LaurentScalar operator+(const LaurentScalar& x, const LaurentScalar& y) {
        LaurentScalar out;
        out.terms_.reserve(x.terms_.size() + y.terms_.size());
        auto ix = x.terms_.begin(), iy = y.terms_.begin();
        while (ix != x.terms_.end() && iy != y.terms_.end()) {
            if (ix->first < iy->first)
                out.terms_.push_back(*ix++);
            else if (iy->first < ix->first)
                out.terms_.push_back(*iy++);
            else {
                Rational c = ix->second + iy->second;
                if (c != 0)
                    out.terms_.emplace_back(ix->first, std::move(c));
                ++ix;
                ++iy;
            }
        }
        out.terms_.insert(out.terms_.end(), ix, x.terms_.end());
        out.terms_.insert(out.terms_.end(), iy, y.terms_.end());
        return out;
    }
    friend LaurentScalar operator-(const LaurentScalar& x, const LaurentScalar& y) { return x + (-y); }
    friend LaurentScalar operator*(const LaurentScalar& x, const LaurentScalar& y) {
        LaurentScalar out;
        if (x.terms_.empty() || y.terms_.empty())
            return out;
        if (y.terms_.size() == 1) { // the dominant case: multiplication by +-q^k
            out.terms_.reserve(x.terms_.size());
            for (const auto& [k, c] : x.terms_)
                out.terms_.emplace_back(k + y.terms_[0].first, c * y.terms_[0].second);
            return out;
        }
        if (x.terms_.size() == 1) {
            out.terms_.reserve(y.terms_.size());
            for (const auto& [k, c] : y.terms_)
                out.terms_.emplace_back(k + x.terms_[0].first, c * x.terms_[0].second);
            return out;
        }
        for (const auto& [kx, cx] : x.terms_) {
            LaurentScalar row;
            row.terms_.reserve(y.terms_.size());
            for (const auto& [ky, cy] : y.terms_)
                row.terms_.emplace_back(kx + ky, cx * cy);
            out = out + row;
        }
        return out;
    }
    friend bool operator==(const LaurentScalar& x, const LaurentScalar& y) { return x.terms_ == y.terms_; }

private:
    Terms terms_;
};

/// a + b s with s^2 = q; the field the Haar pairing values live in.
struct QSqrtRat {
    Rational a = 0;
    Rational b = 0;

    bool is_zero() const { return a == 0 && b == 0; }

    QSqrtRat operator-() const { return {-a, -b}; }
    friend QSqrtRat operator+(const QSqrtRat& x, const QSqrtRat& y) { return {x.a + y.a, x.b + y.b}; }
    friend QSqrtRat operator-(const QSqrtRat& x, const QSqrtRat& y) { return {x.a - y.a, x.b - y.b}; }
    friend bool operator==(const QSqrtRat& x, const QSqrtRat& y) { return x.a == y.a && x.b == y.b; }
};

inline QSqrtRat qs_mul(const QSqrtRat& x, const QSqrtRat& y, const Rational& q) {
    return {x.a * y.a + x.b * y.b * q, x.a * y.b + x.b * y.a};
}

inline QSqrtRat qs_scale(const Rational& r, const QSqrtRat& x) { return {r * x.a, r * x.b}; }

inline QSqrtRat qs_div(const QSqrtRat& x, const QSqrtRat& y, const Rational& q) {
    Rational norm = y.a * y.a - y.b * y.b * q;
    if (norm == 0)
        throw std::domain_error("division by zero in Q(sqrt q)");
    QSqrtRat conj{y.a, -y.b};
    QSqrtRat prod = qs_mul(x, conj, q);
    return {prod.a / norm, prod.b / norm};
}

/// Exact evaluation of q^k for integer k.
inline Rational rational_pow(const Rational& q, int k) {
    Rational r = 1;
    for (int i = 0; i < std::abs(k); ++i)
        r *= q;
    return k >= 0 ? r : Rational(1) / r;
}

inline QSqrtRat laurent_to_qs(const LaurentScalar& x, const Rational& q) {
    QSqrtRat out;
    for (const auto& [k, c] : x.terms()) {
        const int whole = (k >= 0 ? k : k - 1) / 2; // floor(k/2)
        const bool odd = (k % 2) != 0;
        Rational v = c * rational_pow(q, whole);
        if (odd)
            out.b += v;
        else
            out.a += v;
    }
    return out;
}

inline double qs_to_double(const QSqrtRat& x, const Rational& q) {
    // through a 50-digit float so that a + b sqrt(q) cancellation cannot reach
    // the double result
    BigFloat s = sqrt(BigFloat(q));
    BigFloat v = BigFloat(x.a) + BigFloat(x.b) * s;
    return static_cast<double>(v);
}

/// Scalar context running the coordinate algebra over Q[s, s^{-1}].
struct LadderCtx {
    using Scalar = LaurentScalar;

    Rational q;

    explicit LadderCtx(Rational q_value) : q(std::move(q_value)) {
        if (!(q > 0 && q < 1))
            throw std::invalid_argument("LadderCtx requires 0 < q < 1");
    }

    Scalar zero() const { return {}; }
    Scalar one() const { return LaurentScalar::integer(1); }
    Scalar integer(long n) const { return LaurentScalar::integer(n); }
    Scalar q_pow(int twice) const { return LaurentScalar::s_power(twice); }
    Scalar conj(const Scalar& s) const { return s; } // the ladder path is real
    Scalar inv(const Scalar&) const {
        throw std::logic_error("Q[s, s^{-1}] has no division; this path must not need one");
    }
    bool is_zero(const Scalar& s) const { return s.is_zero(); }
    bool negligible(const Scalar& s, double) const { return s.is_zero(); }
};

} // namespace qsu2

#endif // QSU2_LAURENT_HPP
