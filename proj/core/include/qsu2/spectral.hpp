#ifndef QSU2_SPECTRAL_HPP
#define QSU2_SPECTRAL_HPP
//
// Project     : qsu2
// Module      : spectral
// Description : spinor spaces, Clebsch-Gordan bases, the Dirac operators on
//               quantum SU(2) and the Podles spheres, the grading at c = inf,
//               spectra and commutator diagnostics
//

#include "qsu2/podles.hpp"

namespace qsu2 {

/// C_{jm} = q^{-(j+m)/2} [j-m]^{1/2} [2j]^{-1/2},
/// S_{jm} = q^{(j-m)/2} [j+m]^{1/2} [2j]^{-1/2}  (so C^2 + S^2 = 1).
double spinor_coeff_C(double q, HalfInt j, HalfInt m);
double spinor_coeff_S(double q, HalfInt j, HalfInt m);

/// sigma_{1/2}(g) in the basis (|1/2,-1/2>, |1/2,+1/2>).
Matrix sigma_half(double q, UqGen g);

struct SpinorLabel {
    HalfInt j, m, n; // n is the nu (down) or mu (up) right index
    bool up;
    friend constexpr auto operator<=>(const SpinorLabel&, const SpinorLabel&) = default;
};

/// Clebsch-Gordan basis of W = V (x) V_{1/2} over an |lmn> basis.  Tensor
/// index t = 2 i + s with s = 0 for spin -1/2, s = 1 for spin +1/2.
class SpinorBasis {
public:
    explicit SpinorBasis(const LmnBasis& basis);

    const LmnBasis& lmn() const { return *basis_; }
    double q() const { return basis_->q(); }
    HalfInt level() const { return basis_->level(); }
    int dim() const { return 2 * basis_->dim(); }
    const SpacePtr& tensor_space() const { return space_; }
    const std::vector<SpinorLabel>& labels() const { return labels_; }
    int index_of(const SpinorLabel& lab) const;
    const SparseMatrix& isometry() const { return U_; }
    double eigenvalue(int column) const; // +-(j + 1/2) of that spinor vector

    /// D = sum_j (j+1/2) (P_j^up - P_j^dn), assembled on the tensor space.
    TruncatedOperator dirac() const;

    /// x (x) 1 and the tensor actions of U_q(su(2)).
    TruncatedOperator pi(const TruncatedOperator& pi_on_lmn) const;
    TruncatedOperator lambda(UqGen g) const;
    TruncatedOperator rho(UqGen g) const;

private:
    const LmnBasis* basis_;
    SpacePtr space_;
    std::vector<SpinorLabel> labels_;
    std::map<std::tuple<int, int, int, bool>, int> index_;
    SparseMatrix U_;
};

struct SpectrumRow {
    double eigenvalue = 0.0;
    int multiplicity = 0;
    HalfInt sector; // the spin j of the eigenspace
};

/// Spectrum of the truncated Dirac operator, computed blockwise over the
/// H_l (x) V_{1/2} sectors and grouped by eigenvalue.
std::vector<SpectrumRow> dirac_su2_spectrum(const SpinorBasis& sb);

/// Least-squares exponent of log N(Lambda) vs log Lambda using eigenvalue
/// magnitudes in [min_abs, max_abs]; N counts from the bottom of the spectrum.
double counting_exponent(const std::vector<SpectrumRow>& rows, double min_abs, double max_abs);

struct PodlesSpinorLabel {
    HalfInt l, m;
    bool up;
    friend constexpr auto operator<=>(const PodlesSpinorLabel&, const PodlesSpinorLabel&) = default;
};

/// Clebsch-Gordan basis of M_0 (x) V_{1/2}, over either the abstract pi_0
/// model or the GNS realization.  Base operators are materialized lazily.
class PodlesSpinorBasis {
public:
    static PodlesSpinorBasis from_abstract(const QParam& params, HalfInt l_max);
    static PodlesSpinorBasis from_gns(const GnsPodlesBasis& gns);

    const QParam& params() const { return params_; }
    HalfInt l_max() const { return l_max_; }
    int base_dim() const { return static_cast<int>(base_labels_.size()); }
    const std::vector<std::pair<HalfInt, HalfInt>>& base_labels() const { return base_labels_; }
    int base_index_of(HalfInt l, HalfInt m) const;

    int dim() const { return 2 * base_dim(); }
    const SpacePtr& tensor_space() const { return space_; }
    const std::vector<PodlesSpinorLabel>& labels() const { return labels_; }
    int index_of(const PodlesSpinorLabel& lab) const;
    const Matrix& isometry() const { return U_; }
    double eigenvalue(int column) const;

    /// Base-space matrices (lazy).
    const Matrix& base_pi(PodlesOp op) const;
    const Matrix& base_sigma(UqGen g) const;
    const Matrix base_star() const; // T~_psi matrix on the base (GNS backend only)

    /// Operators on the tensor space.
    TruncatedOperator pi(PodlesOp op) const;
    TruncatedOperator lambda(UqGen g) const;
    TruncatedOperator dirac() const;

    /// Grading: |lm dn> <-> |lm up> on paired sectors, zero on the unpaired
    /// top sector (which lies outside every interior mask).
    TruncatedOperator gamma() const;

    /// v^l_{m,+-1/2} = 2^{-1/2}(|lm dn> +- |lm up>), in tensor coordinates.
    Vector v_pm(HalfInt l, HalfInt m, int sign) const;

    bool is_gns() const { return gns_ != nullptr; }
    const GnsPodlesBasis& gns() const;

private:
    PodlesSpinorBasis() = default;
    void build_spinors();

    QParam params_{0.5};
    HalfInt l_max_;
    std::vector<std::pair<HalfInt, HalfInt>> base_labels_;
    std::map<std::pair<int, int>, int> base_index_;
    SpacePtr base_space_;
    std::vector<PodlesSpinorLabel> labels_;
    std::map<std::tuple<int, int, bool>, int> index_;
    Matrix U_;
    SpacePtr space_;
    // backends
    std::shared_ptr<PodlesBasis> abstract_;
    const GnsPodlesBasis* gns_ = nullptr;
    mutable std::map<PodlesOp, Matrix> pi_cache_;
    mutable std::map<UqGen, Matrix> sigma_cache_;
};

/// beta_{1/2}(1/2) + beta_{-1/2}(1/2): zero iff c = inf.
double grading_obstruction(const QParam& params);

/// Grading operator; refuses c < inf (the obstruction is nonzero).
TruncatedOperator build_grading(const PodlesSpinorBasis& sb);

/// The spectrum of a Podles-side Dirac-type operator (it is block diagonal
/// over the spinor sectors by construction).
std::vector<SpectrumRow> dirac_podles_spectrum(const PodlesSpinorBasis& sb, const TruncatedOperator& d);

/// Embedding of the GNS Podles spinor space into W = V (x) V_{1/2}:
/// E = (P (x) I_2) U_pod, an isometry.
Matrix podles_spinor_embedding(const SpinorBasis& su2, const PodlesSpinorBasis& pod);

struct RestrictedDirac {
    TruncatedOperator dtilde;  // E^dagger D E on the Podles spinor space
    double invariance_defect;  // || D E - E D~ ||_2
};

/// Restriction of the quantum SU(2) Dirac operator to M_0 (x) V_{1/2}.
RestrictedDirac dirac_podles_restricted(const SpinorBasis& su2, const PodlesSpinorBasis& pod);

/// Dimension of the commutant of { pi(A), pi(B), lambda(.) } among sector-wise
/// equivariant operators, measured on the interior.  The representation
/// pi_0 (x) sigma_{1/2} splits into two inequivalent irreducibles, so this is 2.
int equivariant_commutant_dimension(const PodlesSpinorBasis& sb, double tol = 1e-8);

} // namespace qsu2

#endif // QSU2_SPECTRAL_HPP
