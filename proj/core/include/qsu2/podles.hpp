#ifndef QSU2_PODLES_HPP
#define QSU2_PODLES_HPP
//
// Project     : qsu2
// Module      : podles
// Description : irreducible integrable representations pi_j of the Podles
//               sphere crossed product, their coefficient families, and the
//               GNS cross-check of pi_0 inside O(SU_q(2))
//

#include "qsu2/heisenberg.hpp"

namespace qsu2 {

/// The coefficient families alpha_j(l), beta_j(l); branch chosen by c.
class PodlesCoeffs {
public:
    explicit PodlesCoeffs(const QParam& params) : params_(params) {}

    /// beta_j(l); requires l >= |j|.
    double beta(HalfInt j, HalfInt l) const;
    /// alpha_j(l); throws if the radicand goes negative.
    double alpha(HalfInt j, HalfInt l) const;

    const QParam& params() const { return params_; }

private:
    QParam params_;
};

/// Abstract orthonormal weight basis { v^l_{k,j} : l = |j|, |j|+1, ..., l_max }.
class PodlesBasis {
public:
    PodlesBasis(const QParam& params, HalfInt j, HalfInt l_max);

    const QParam& params() const { return params_; }
    HalfInt j() const { return j_; }
    HalfInt l_max() const { return l_max_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::pair<HalfInt, HalfInt>>& labels() const { return labels_; } // (l, k)
    int index_of(HalfInt l, HalfInt k) const;
    const SpacePtr& space() const { return space_; }

private:
    QParam params_;
    HalfInt j_, l_max_;
    std::vector<std::pair<HalfInt, HalfInt>> labels_;
    std::map<std::pair<int, int>, int> index_;
    SpacePtr space_;
};

enum class PodlesOp { X1, X0, Xm1, A, B, Bstar };

/// Matrices of the generators in the abstract basis; interior-exact for
/// l <= l_max - 1 (the generators move l by at most one).
TruncatedOperator pi_j_matrix(const PodlesBasis& basis, PodlesOp op);

/// Block-diagonal spin action on the abstract basis.
TruncatedOperator sigma_matrix(const PodlesBasis& basis, UqGen g);
TruncatedOperator sigma_matrix(const PodlesBasis& basis, const NUqElement& h);

/// h |> x on the linear span of {1, x_{-1}, x_0, x_1}: the spin 1 + spin 0
/// transformation law used by the equivariance checks.
struct PodlesVector {
    complexd one, xm1, x0, x1; // coefficients over {1, x_{-1}, x_0, x_1}
};
PodlesVector act_left_podles(const QParam& params, UqGen g, const PodlesVector& v);

/// Decomposition of A, B, B* over {1, x_{-1}, x_0, x_1} (c-dependent).
PodlesVector podles_generator_vector(const QParam& params, PodlesOp op);

/// The weight-adapted orthonormal basis of M_0 inside O(SU_q(2)), built from
/// v^0_{0,0} = 1 by pi_0(x_1)-raising and lambda(e)-lowering.  The ladder runs
/// exactly; c must have a rational square root (0, 1, 4, 2.25, ... or inf).
class GnsPodlesBasis {
public:
    GnsPodlesBasis(const LmnBasis& heis, const PodlesC& c, HalfInt l_max);

    const LmnBasis& heisenberg() const { return *heis_; }
    HalfInt l_max() const { return l_max_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::pair<HalfInt, HalfInt>>& labels() const { return labels_; } // (l, m)
    int index_of(HalfInt l, HalfInt m) const;
    const SpacePtr& space() const { return space_; }
    const PodlesC& c() const { return c_; }

    /// Unnormalized exact ladder vector and its norm.
    const LCoordElement& raw_vector(int i) const { return raw_[i]; }
    double norm(int i) const { return norms_[i]; }

    /// Coordinates of each normalized basis vector over |lmn> (column per vector).
    const Matrix& lmn_coordinates() const { return lmn_coords_; }

    /// Compression P^dagger M P of a Heisenberg-space operator to M_0.
    TruncatedOperator compress_heisenberg(const TruncatedOperator& op) const;

    /// The embedded Podles generator acting by left multiplication.
    TruncatedOperator generator_matrix(PodlesOp op) const;

    /// Matrix of the star map restricted to M_0 (an antilinear operator's matrix).
    Matrix star_matrix() const;

    /// lambda(g) compressed to M_0 (exact: M_0 is invariant under the action).
    TruncatedOperator lambda_gen(UqGen g) const;

private:
    const LmnBasis* heis_;
    PodlesC c_;
    HalfInt l_max_;
    std::vector<std::pair<HalfInt, HalfInt>> labels_;
    std::map<std::pair<int, int>, int> index_;
    std::vector<LCoordElement> raw_;
    std::vector<double> norms_;
    Matrix lmn_coords_;
    SpacePtr space_;
};

/// Exact embedding of a Podles generator (A, B, B*, X0 only; the x_{+-1}
/// rescalings involve sqrt(1+q^2) and stay numeric).
LCoordElement embed_podles_exact(const LadderCtx& ctx, PodlesGen g, const PodlesC& c);

struct CrossValidationReport {
    double max_deviation = 0.0;
    int compared_entries = 0;
};

/// Compares all matrix elements of A and B between the GNS realization and the
/// closed formulas, on columns with l <= l_max - 1.
CrossValidationReport cross_validate_pi0(const LmnBasis& heis, const PodlesC& c, HalfInt l_max);

/// Numeric square roots used by embed_podles in the double-precision context.
NCoordElement embed_podles_numeric(const NumericCtx& ctx, PodlesGen g, const PodlesC& c);

} // namespace qsu2

#endif // QSU2_PODLES_HPP
