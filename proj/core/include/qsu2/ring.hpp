#ifndef QSU2_RING_HPP
#define QSU2_RING_HPP
//
// Project     : qsu2
// Module      : ring
// Description : scalar contexts shared by the symbolic algebra layer
//
// The algebra templates are written against a small context interface; the
// numeric context computes over complex<double>, the exact one over
// Q(sqrt(q), i) with rational q.  Everything spectral uses the numeric one.
//

#include "qsu2/exact.hpp"
#include "qsu2/scalar.hpp"

namespace qsu2 {

struct NumericCtx {
    using Scalar = complexd;

    double q;

    explicit NumericCtx(double q_value) : q(q_value) {
        if (!(q > 0.0 && q < 1.0))
            throw std::invalid_argument("NumericCtx requires 0 < q < 1");
    }

    Scalar zero() const { return {0.0, 0.0}; }
    Scalar one() const { return {1.0, 0.0}; }
    Scalar integer(long n) const { return {static_cast<double>(n), 0.0}; }
    /// q^{twice/2}
    Scalar q_pow(int twice) const { return {qpow_halfint(q, HalfInt(twice)), 0.0}; }
    Scalar conj(const Scalar& s) const { return std::conj(s); }
    Scalar inv(const Scalar& s) const { return 1.0 / s; }
    bool is_zero(const Scalar& s) const { return s == Scalar{0.0, 0.0}; }
    bool negligible(const Scalar& s, double tol) const { return std::abs(s) <= tol; }
    double abs(const Scalar& s) const { return std::abs(s); }
};

struct ExactCtx {
    using Scalar = ExactScalar;

    Rational q;

    explicit ExactCtx(Rational q_value) : q(std::move(q_value)) {
        if (!(q > 0 && q < 1))
            throw std::invalid_argument("ExactCtx requires 0 < q < 1");
    }

    Scalar zero() const { return ExactScalar::integer(0, q); }
    Scalar one() const { return ExactScalar::integer(1, q); }
    Scalar integer(long n) const { return ExactScalar::integer(n, q); }
    Scalar q_pow(int twice) const { return ExactScalar::q_power(twice, q); }
    Scalar conj(const Scalar& s) const { return s.conj(); }
    Scalar inv(const Scalar& s) const { return s.inverse(); }
    bool is_zero(const Scalar& s) const { return s.is_zero(); }
    bool negligible(const Scalar& s, double) const { return s.is_zero(); }
    double abs(const Scalar& s) const { return std::abs(s.to_complex()); }
};

} // namespace qsu2

#endif // QSU2_RING_HPP
