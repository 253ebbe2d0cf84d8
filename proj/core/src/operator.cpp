//
// Project     : qsu2
// Module      : operator
//

#include "qsu2/operator.hpp"

#include <Eigen/SVD>

#include <stdexcept>

namespace qsu2 {

namespace {
std::atomic<uint64_t> next_space_id{1};
}

SpacePtr make_space(std::string name, std::vector<int> sector_twice, int truncation_twice) {
    auto s = std::make_shared<OperatorSpace>();
    s->id = next_space_id.fetch_add(1);
    s->name = std::move(name);
    s->sector_twice = std::move(sector_twice);
    s->truncation_twice = truncation_twice;
    return s;
}

std::vector<int> interior_indices(const OperatorSpace& space, int margin_twice) {
    std::vector<int> idx;
    for (int i = 0; i < space.dim(); ++i)
        if (space.sector_twice[i] <= space.truncation_twice - margin_twice)
            idx.push_back(i);
    return idx;
}

void require_same_space(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (!a.space || !b.space || a.space->id != b.space->id)
        throw std::logic_error("operator arithmetic across different bases");
}

TruncatedOperator op_identity(const SpacePtr& space) {
    return {space, Matrix::Identity(space->dim(), space->dim())};
}

TruncatedOperator op_mul(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_space(a, b);
    return {a.space, a.mat * b.mat};
}

TruncatedOperator op_add(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_space(a, b);
    return {a.space, a.mat + b.mat};
}

TruncatedOperator op_sub(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_space(a, b);
    return {a.space, a.mat - b.mat};
}

TruncatedOperator op_scale(const complexd& c, const TruncatedOperator& a) {
    return {a.space, c * a.mat};
}

TruncatedOperator op_adjoint(const TruncatedOperator& a) {
    return {a.space, a.mat.adjoint()};
}

TruncatedOperator op_commutator(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_space(a, b);
    return {a.space, a.mat * b.mat - b.mat * a.mat};
}

Matrix submatrix(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix out(rows.size(), cols.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            out(r, c) = m(rows[r], cols[c]);
    return out;
}

double operator_norm(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return 0.0;
    if (std::min(m.rows(), m.cols()) <= 160) {
        // Hermitian square on the smaller side
        Matrix g = m.rows() <= m.cols() ? Matrix(m * m.adjoint()) : Matrix(m.adjoint() * m);
        Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
        double top = es.eigenvalues().maxCoeff();
        return top > 0 ? std::sqrt(top) : 0.0;
    }
    if (m.rows() != m.cols()) {
        Matrix g = m.rows() <= m.cols() ? Matrix(m * m.adjoint()) : Matrix(m.adjoint() * m);
        Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
        double top = es.eigenvalues().maxCoeff();
        return top > 0 ? std::sqrt(top) : 0.0;
    }
    // blocked power iteration on m^dagger m; deterministic start
    const int n = static_cast<int>(m.rows());
    const int k = 8;
    Matrix v(n, k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < n; ++r)
            v(r, c) = complexd(std::cos(0.7 * (r + 1) * (c + 1)), std::sin(0.3 * (r + 2) * (c + 1)));
    Eigen::HouseholderQR<Matrix> qr0(v);
    v = qr0.householderQ() * Matrix::Identity(n, k);
    double prev = 0.0;
    for (int it = 0; it < 150; ++it) {
        Matrix w = m.adjoint() * (m * v);
        // Rayleigh quotient in the current subspace, before reorthogonalizing
        Matrix h = v.adjoint() * w;
        Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
        double top = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
        Eigen::HouseholderQR<Matrix> qr(w);
        v = qr.householderQ() * Matrix::Identity(n, k);
        if (it > 3 && std::abs(top - prev) <= 1e-11 * std::max(1.0, top))
            return top;
        prev = top;
    }
    return prev;
}

double interior_norm(const Matrix& m, const OperatorSpace& space, int margin_twice) {
    auto idx = interior_indices(space, margin_twice);
    return operator_norm(submatrix(m, idx, idx));
}

double interior_norm(const TruncatedOperator& a, int margin_twice) {
    return interior_norm(a.mat, *a.space, margin_twice);
}

Eigen::VectorXd interior_singular_values(const Matrix& m, const OperatorSpace& space, int margin_twice) {
    auto idx = interior_indices(space, margin_twice);
    Matrix sub = submatrix(m, idx, idx);
    if (sub.rows() == 0)
        return Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Matrix> es(sub.adjoint() * sub, Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    // ascending from the solver; return descending
    return ev.reverse();
}

} // namespace qsu2
