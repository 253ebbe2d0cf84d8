#ifndef QSU2_REAL_STRUCTURE_HPP
#define QSU2_REAL_STRUCTURE_HPP
//
// Project     : qsu2
// Module      : real_structure
// Description : Tomita operators, the R-matrix operator, the composed
//               antilinear T and T~, their polar parts J and J~, and the
//               commutant decay diagnostics
//

#include "qsu2/antilinear.hpp"
#include "qsu2/spectral.hpp"

namespace qsu2 {

/// The star map x -> x* on the |lmn> basis (the Tomita operator of the Haar
/// state at truncation level L).
AntilinearOperator tomita_su2(const LmnBasis& basis);

/// J_psi = pi_psi(k) rho_psi(k^{-1}) T_psi.
AntilinearOperator modular_conjugation_su2(const LmnBasis& basis, const AntilinearOperator& t_psi);

/// T_{1/2} on V_{1/2}: T|1/2,+1/2> = i q^{1/2} |1/2,-1/2>,
/// T|1/2,-1/2> = -i q^{-1/2} |1/2,+1/2>.
Matrix t_half_matrix(double q);

/// The tensor action (pi_psi (x) sigma_{1/2})(h) of an arbitrary element.
TruncatedOperator tensor_action_su2(const SpinorBasis& sb, const NUqElement& h);

/// sigma_{1/2}(h) for an arbitrary element.
Matrix sigma_half_action(double q, const NUqElement& h);

/// Bundled Tomita data on the quantum SU(2) spinor space.
class TomitaSu2 {
public:
    explicit TomitaSu2(const SpinorBasis& sb);

    const SpinorBasis& spinor() const { return *sb_; }
    const AntilinearOperator& t_psi() const { return t_psi_; }     // on the |lmn> basis
    const Matrix& r_matrix() const { return r_; }                  // on V_{1/2} (x) V (spin-major)
    const Matrix& r_hat() const { return rhat_; }                  // tau o R, into W coordinates
    const AntilinearOperator& T() const { return T_; }             // on W
    const AntilinearOperator& J() const { return J_; }             // antiunitary part
    const TruncatedOperator& absT() const { return absT_; }        // |T|
    const AntilinearOperator& J0() const { return J0_; }           // T pi(k^{-1}) rho(k)
    double min_singular() const { return min_singular_; }

    /// q^{+-D} on W.
    TruncatedOperator q_power_dirac(int sign) const;

    /// pi(k^a) rho(k^b) on W.
    TruncatedOperator k_weights(int a, int b) const;

private:
    const SpinorBasis* sb_;
    AntilinearOperator t_psi_;
    Matrix r_, rhat_;
    AntilinearOperator T_, J_, J0_;
    TruncatedOperator absT_;
    double min_singular_ = 0.0;
};

/// Bundled Tomita data on the Podles spinor space.  The base Tomita operator
/// T~_psi is the star map for the GNS backend and the derived closed form
/// (-q)^m v^l_{-m} for the abstract backend (the two agree; tested).
class TomitaPodles {
public:
    explicit TomitaPodles(const PodlesSpinorBasis& sb);

    const PodlesSpinorBasis& spinor() const { return *sb_; }
    const AntilinearOperator& t_psi() const { return t_psi_; }     // on M_0
    const Matrix& r_hat() const { return rhat_; }
    const AntilinearOperator& T() const { return T_; }
    const AntilinearOperator& J() const { return J_; }
    const TruncatedOperator& absT() const { return absT_; }
    double min_singular() const { return min_singular_; }

    TruncatedOperator q_power_dirac(int sign) const;
    /// pi~(k^a) on the tensor space.
    TruncatedOperator k_weight(int a) const;

private:
    const PodlesSpinorBasis* sb_;
    AntilinearOperator t_psi_;
    Matrix rhat_;
    AntilinearOperator T_, J_;
    TruncatedOperator absT_;
    double min_singular_ = 0.0;
};

/// max_h || J pi(h) J^{-1} - pi(k S(h)* k^{-1}) || over h in {e, f, k}, interior.
double equivariance_defect_su2(const SpinorBasis& sb, const AntilinearOperator& j, int margin_twice);
double equivariance_defect_lmn(const LmnBasis& basis, const AntilinearOperator& j, int margin_twice);

/// max_h || T lambda(h) - lambda(S(h)*) T || over h in {e, f, k}, interior
/// (the defining property of an equivariant antilinear operator).
double antilinear_equivariance_defect_su2(const SpinorBasis& sb, const AntilinearOperator& t,
                                          int margin_twice);

struct DecayTable {
    std::vector<std::pair<HalfInt, double>> block_norms; // (spinor sector, ||P_l M P_l||)
    std::vector<int> cumulative_dims;                    // spinor dimension through each sector
    double fitted_ratio = 0.0;                           // geometric decay of the block norms
    Eigen::VectorXd singular_values;                     // of the interior compression
    double max_norm = 0.0;                               // over the diagonal sector blocks
    double interior_norm = 0.0;                          // ||P M P|| on the interior sectors
};

/// Per-sector block norms of [pi(x), J pi(y) J^{-1}] (or of
/// [[D, pi(x)], J pi(y) J^{-1}] when with_dirac is set) on the Podles side.
DecayTable commutant_decay(const PodlesSpinorBasis& sb, const AntilinearOperator& jlike, PodlesOp x,
                           PodlesOp y, bool with_dirac, bool with_singular_values = false);

/// Batched decay measurements.  The generator actions are sector-banded in
/// spinor coordinates, so after one dense change of basis per operator all
/// pair commutators are sparse products; this is what makes the deep
/// truncations affordable.
class DecayEngine {
public:
    DecayEngine(const PodlesSpinorBasis& sb, const AntilinearOperator& jlike);

    DecayTable table(PodlesOp x, PodlesOp y, bool with_dirac, bool with_singular_values = false);

private:
    const SparseMatrix& op_spinor(PodlesOp op);
    const SparseMatrix& conjugated(PodlesOp op);

    const PodlesSpinorBasis* sb_;
    Matrix jsp_;
    Eigen::VectorXd dirac_diag_;
    std::map<PodlesOp, SparseMatrix> ops_;
    std::map<PodlesOp, SparseMatrix> conj_;
};

/// Tail check for "n^p s_n -> 0": the singular values arrive in per-sector
/// plateaus, so the meaningful monotone quantity is N_l^p b_l with N_l the
/// cumulative dimension through sector l.  Checks that it decreases over the
/// tail sectors (above a noise floor).
bool tail_decreasing(const DecayTable& table, double power, double floor = 1e-12);

} // namespace qsu2

#endif // QSU2_REAL_STRUCTURE_HPP
