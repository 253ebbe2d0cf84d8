#ifndef QSU2_OPERATOR_HPP
#define QSU2_OPERATOR_HPP
//
// Project     : qsu2
// Module      : operator
// Description : labeled operator spaces, truncated operators, interior masks
//

#include "qsu2/scalar.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <atomic>
#include <memory>
#include <string>
#include <vector>

namespace qsu2 {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<complexd>;

/// An ordered orthonormal basis with a spin-sector label (twice l) per index.
/// Operators carry a pointer to their space; mixing spaces is a logic error.
struct OperatorSpace {
    uint64_t id;
    std::string name;
    std::vector<int> sector_twice; // twice the l (or j) sector label per index
    int truncation_twice;          // twice the truncation level

    int dim() const { return static_cast<int>(sector_twice.size()); }
};

using SpacePtr = std::shared_ptr<const OperatorSpace>;

SpacePtr make_space(std::string name, std::vector<int> sector_twice, int truncation_twice);

/// Indices whose sector satisfies 2l <= 2*truncation - margin_twice.
std::vector<int> interior_indices(const OperatorSpace& space, int margin_twice);

struct TruncatedOperator {
    SpacePtr space;
    Matrix mat;

    int dim() const { return static_cast<int>(mat.rows()); }
};

void require_same_space(const TruncatedOperator& a, const TruncatedOperator& b);

TruncatedOperator op_identity(const SpacePtr& space);
TruncatedOperator op_mul(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator op_add(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator op_sub(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator op_scale(const complexd& c, const TruncatedOperator& a);
TruncatedOperator op_adjoint(const TruncatedOperator& a);
TruncatedOperator op_commutator(const TruncatedOperator& a, const TruncatedOperator& b);

/// Operator 2-norm of the compression P M P onto the interior indices.
double interior_norm(const TruncatedOperator& a, int margin_twice);
double interior_norm(const Matrix& m, const OperatorSpace& space, int margin_twice);

/// Largest singular value (2-norm).
double operator_norm(const Matrix& m);

/// Submatrix on the given row/column index set.
Matrix submatrix(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Singular values of the interior compression, descending.
Eigen::VectorXd interior_singular_values(const Matrix& m, const OperatorSpace& space, int margin_twice);

} // namespace qsu2

#endif // QSU2_OPERATOR_HPP
