//
// Project     : qsu2
// Module      : antilinear
//

#include "qsu2/antilinear.hpp"

#include <Eigen/SVD>

#include <stdexcept>

namespace qsu2 {

void require_same_space(const AntilinearOperator& a, const AntilinearOperator& b) {
    if (!a.space || !b.space || a.space->id != b.space->id)
        throw std::logic_error("antilinear arithmetic across different bases");
}

AntilinearOperator compose(const TruncatedOperator& l, const AntilinearOperator& a) {
    if (l.space->id != a.space->id)
        throw std::logic_error("operator composition across different bases");
    return {a.space, l.mat * a.mat};
}

AntilinearOperator compose(const AntilinearOperator& a, const TruncatedOperator& l) {
    if (l.space->id != a.space->id)
        throw std::logic_error("operator composition across different bases");
    return {a.space, a.mat * l.mat.conjugate()};
}

TruncatedOperator compose(const AntilinearOperator& a, const AntilinearOperator& b) {
    require_same_space(a, b);
    return {a.space, a.mat * b.mat.conjugate()};
}

AntilinearOperator anti_adjoint(const AntilinearOperator& a) {
    return {a.space, a.mat.transpose()};
}

AntilinearOperator anti_scale(const complexd& c, const AntilinearOperator& a) {
    return {a.space, c * a.mat};
}

AntilinearOperator anti_inverse(const AntilinearOperator& a) {
    return {a.space, a.mat.conjugate().inverse()};
}

TruncatedOperator conjugate_by(const AntilinearOperator& a, const TruncatedOperator& x) {
    if (a.space->id != x.space->id)
        throw std::logic_error("conjugation across different bases");
    // for antiunitary a the inverse is the adjoint, which costs nothing and
    // avoids amplifying noise through an ill-conditioned LU
    if (antiunitarity_defect(a) < 1e-8)
        return {x.space, a.mat * x.mat.conjugate() * a.mat.adjoint()};
    return {x.space, a.mat * x.mat.conjugate() * a.mat.inverse()};
}

double antiunitarity_defect(const AntilinearOperator& a) {
    Matrix g = a.mat.adjoint() * a.mat - Matrix::Identity(a.dim(), a.dim());
    return g.cwiseAbs().maxCoeff();
}

BasisPolar polar_in_basis(const AntilinearOperator& t, const Matrix& basis) {
    // T in the given coordinates (antilinear basis change)
    Matrix tsp = basis.adjoint() * t.mat * basis.conjugate();
    const int n = static_cast<int>(tsp.cols());
    Eigen::VectorXd norms(n);
    for (int c = 0; c < n; ++c)
        norms(c) = tsp.col(c).norm();
    double nmin = norms.minCoeff();
    if (!(nmin > 0))
        throw std::runtime_error("polar decomposition of a rank-deficient antilinear operator");
    Matrix jsp = tsp * norms.cwiseInverse().asDiagonal();
    Matrix gram = jsp.adjoint() * jsp - Matrix::Identity(n, n);
    double defect = gram.cwiseAbs().maxCoeff();
    if (defect > 1e-6)
        throw std::runtime_error("basis does not diagonalize |T|; column Gram defect " +
                                 std::to_string(defect));
    BasisPolar out;
    out.antiunitary = {t.space, basis * jsp * basis.transpose()};
    out.positive = {t.space, basis * norms.asDiagonal() * basis.adjoint()};
    out.min_singular_value = nmin;
    out.orthogonality_defect = defect;
    return out;
}

PolarDecomposition polar(const AntilinearOperator& t, double rank_tol) {
    Eigen::JacobiSVD<Matrix> svd(t.mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double smin = sv.size() ? sv(sv.size() - 1) : 0.0;
    double smax = sv.size() ? sv(0) : 0.0;
    if (smin <= rank_tol * std::max(smax, 1.0))
        throw std::runtime_error("polar decomposition of a rank-deficient antilinear operator");
    Matrix u = svd.matrixU(), v = svd.matrixV();
    // T = J |T| with J = U V^dagger (antilinear), |T| = conj(V) S V^T (linear, positive)
    AntilinearOperator j{t.space, u * v.adjoint()};
    TruncatedOperator p{t.space, v.conjugate() * sv.asDiagonal() * v.transpose()};
    return {std::move(j), std::move(p), smin};
}

} // namespace qsu2
