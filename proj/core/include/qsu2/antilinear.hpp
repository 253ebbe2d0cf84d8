#ifndef QSU2_ANTILINEAR_HPP
#define QSU2_ANTILINEAR_HPP
//
// Project     : qsu2
// Module      : antilinear
// Description : antilinear operator calculus: composition, adjoints, polar
//               decomposition through the SVD
//
// An antilinear operator is stored by its matrix M with action v -> M conj(v)
// in a fixed orthonormal basis.  Consequences used throughout:
//   (A o B) v      = M_A conj(M_B) v                   (linear)
//   (L o A) v      = L M_A conj(v),  (A o L) v = M_A conj(L) conj(v)
//   adjoint        = M^T          (defined by <A* x, y> = <A y, x>)
//   inverse        = conj(M)^{-1}
//   A X A^{-1}     = M conj(X) M^{-1}                   (linear)
//

#include "qsu2/operator.hpp"

namespace qsu2 {

struct AntilinearOperator {
    SpacePtr space;
    Matrix mat;

    int dim() const { return static_cast<int>(mat.rows()); }
};

void require_same_space(const AntilinearOperator& a, const AntilinearOperator& b);

/// L o A (apply A first).
AntilinearOperator compose(const TruncatedOperator& l, const AntilinearOperator& a);
/// A o L (apply L first).
AntilinearOperator compose(const AntilinearOperator& a, const TruncatedOperator& l);
/// A o B (antilinear twice = linear).
TruncatedOperator compose(const AntilinearOperator& a, const AntilinearOperator& b);

AntilinearOperator anti_adjoint(const AntilinearOperator& a);
AntilinearOperator anti_scale(const complexd& c, const AntilinearOperator& a);
AntilinearOperator anti_inverse(const AntilinearOperator& a);

/// A X A^{-1} for invertible antilinear A.
TruncatedOperator conjugate_by(const AntilinearOperator& a, const TruncatedOperator& x);

/// Largest deviation of A from antiunitarity (||M^dagger M - 1||).
double antiunitarity_defect(const AntilinearOperator& a);

struct PolarDecomposition {
    AntilinearOperator antiunitary; // J
    TruncatedOperator positive;     // |T|, self-adjoint positive
    double min_singular_value;
};

/// T = J |T| through the SVD of the matrix of T.  Fails on rank deficiency.
PolarDecomposition polar(const AntilinearOperator& t, double rank_tol = 1e-12);

/// Polar decomposition computed in a unitary column basis that diagonalizes
/// |T|: if T's columns in that basis are orthogonal (checked; defect is
/// reported), normalizing them yields the antiunitary part exactly, without
/// the SVD's absolute-error floor.  This keeps the decomposition accurate
/// where |T| has q-power eigenvalue spreads beyond double-precision SVD reach.
struct BasisPolar {
    AntilinearOperator antiunitary;
    TruncatedOperator positive;
    double min_singular_value;
    double orthogonality_defect;
};
BasisPolar polar_in_basis(const AntilinearOperator& t, const Matrix& basis);

} // namespace qsu2

#endif // QSU2_ANTILINEAR_HPP
