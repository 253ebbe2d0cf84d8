#ifndef QSU2_HEISENBERG_HPP
#define QSU2_HEISENBERG_HPP
//
// Project     : qsu2
// Module      : heisenberg
// Description : truncated Heisenberg representation of O(SU_q(2)) x| U_q(su(2)):
//               the orthonormal |lmn> basis and the matrices of pi_psi, lambda, rho
//
// The basis vectors are held exactly (unnormalized, over Q[s,s^{-1}]) together
// with their exact norms; every matrix element is an exact Haar pairing divided
// by two norms and only then becomes a double.
//

#include "qsu2/coord.hpp"
#include "qsu2/laurent.hpp"
#include "qsu2/operator.hpp"

#include <map>
#include <unordered_map>

namespace qsu2 {

using NCoordElement = CoordElement<NumericCtx>;
using NUqElement = UqElement<NumericCtx>;
using LCoordElement = CoordElement<LadderCtx>;

/// Index of all normal-form monomials of degree <= max_degree.
class MonomialIndex {
public:
    MonomialIndex() = default;
    explicit MonomialIndex(int max_degree);

    int size() const { return static_cast<int>(monos_.size()); }
    int max_degree() const { return max_degree_; }
    const CoordMono& mono(int i) const { return monos_[i]; }
    int index_of(const CoordMono& m) const; // -1 if outside the span

private:
    int max_degree_ = -1;
    std::vector<CoordMono> monos_;
    std::map<CoordMono, int> index_;
};

struct LmnLabel {
    HalfInt l, m, n;
    friend constexpr auto operator<=>(const LmnLabel&, const LmnLabel&) = default;
};

class LmnBasis {
public:
    LmnBasis(const QParam& params, HalfInt L, int max_twice_level = 12);

    const QParam& params() const { return params_; }
    const LadderCtx& exact_ctx() const { return lctx_; }
    double q() const { return params_.q; }
    HalfInt level() const { return L_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<LmnLabel>& labels() const { return labels_; }
    int index_of(HalfInt l, HalfInt m, HalfInt n) const; // -1 if absent
    const MonomialIndex& monomials() const { return monos_; }
    const SpacePtr& space() const { return space_; }

    /// Unnormalized exact ladder vector and its norm.
    const LCoordElement& raw_vector(int i) const { return raw_[i]; }
    double norm(int i) const { return norms_[i]; }

    /// The Haar state, exact, on elements of any degree.
    QSqrtRat haar_exact(const LCoordElement& x) const { return psi_exact(x); }

    /// psi(raw_i^* x), exact; x may stick out of the truncated span (its
    /// pairing against the basis is still the true one).
    QSqrtRat inner_raw(const LCoordElement& x, int i) const;

    /// Expansion of an exact element over the normalized basis.
    Vector project_exact(const LCoordElement& x) const;

    /// Expansion of a complex-coefficient element: exact per monomial, complex
    /// combination afterwards.
    Vector project(const NCoordElement& x) const;

    /// <x, y> = psi(y* x) for complex-coefficient elements (test convenience).
    complexd inner(const NCoordElement& x, const NCoordElement& y) const;

    /// Gram matrix of the normalized basis (identity up to conversion error).
    Matrix gram() const;

    /// Matrix of the star map in the normalized basis.
    Matrix star_matrix() const;

    /// Measured ladder signs relative to the star-map closed form, recorded
    /// before the diagonal sign normalization.
    const std::map<std::tuple<int, int, int>, double>& star_sign_pattern() const {
        return raw_star_signs_;
    }
    bool sign_adjusted() const { return sign_adjusted_; }

    /// Largest deviation of the exact basis Gram from the identity (always 0
    /// when construction succeeds; kept as a reportable quantity).
    double gram_deviation() const { return gram_deviation_; }

private:
    friend class ExactColumns;
    void build_monomial_gram();
    void build_ladder();
    void check_gram();
    void normalize_star_phases();
    void build_dual_rows();

    QParam params_;
    LadderCtx lctx_;
    HalfInt L_;
    MonomialIndex monos_;
    std::vector<LmnLabel> labels_;
    std::map<std::tuple<int, int, int>, int> label_index_;
    std::map<std::pair<int, int>, std::vector<int>> weight_index_; // (2m, 2n) -> basis indices
    std::vector<LCoordElement> raw_;
    std::vector<QSqrtRat> norms2_;
    std::vector<double> norms_;
    // exact monomial Gram, stored per weight block: key (mono_r, mono_c)
    mutable std::map<std::pair<int, int>, QSqrtRat> mono_gram_;
    mutable std::vector<Rational> haar_values_; // psi((b b*)^n)
    // dual rows: d_i[mu] = psi(raw_i^* mu)
    std::vector<std::map<int, QSqrtRat>> dual_;
    SpacePtr space_;
    std::map<std::tuple<int, int, int>, double> raw_star_signs_;
    bool sign_adjusted_ = false;
    double gram_deviation_ = 0.0;

    const Rational& haar_value(int n) const;
    QSqrtRat mono_gram_entry(int r, int c) const; // builds on demand
    QSqrtRat psi_exact(const LCoordElement& x) const;
};

/// pi_psi(x): left multiplication, compressed to the basis span.  Exact per
/// monomial of x; the complex coefficients of x enter only at matrix level.
TruncatedOperator pi_psi_matrix(const LmnBasis& basis, const NCoordElement& x);
TruncatedOperator pi_psi_matrix_exact(const LmnBasis& basis, const LCoordElement& x);

/// lambda(h): h |> . ;  rho(h): . <| S^{-1}(h).
TruncatedOperator lambda_matrix(const LmnBasis& basis, const NUqElement& h);
TruncatedOperator lambda_gen_matrix(const LmnBasis& basis, UqGen g);
TruncatedOperator rho_matrix(const LmnBasis& basis, const NUqElement& h);
TruncatedOperator rho_gen_matrix(const LmnBasis& basis, UqGen g);

NCoordElement coord_generator(const NumericCtx& ctx, CoordGen g);

} // namespace qsu2

#endif // QSU2_HEISENBERG_HPP
