#include "qsu2/antilinear.hpp"

#include <doctest.h>

#include <random>

using namespace qsu2;

namespace {

Matrix random_matrix(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = complexd(g(rng), g(rng));
    return m;
}

} // namespace

TEST_SUITE("antilinear") {

TEST_CASE("composition and adjoint") {
    std::mt19937_64 rng(11);
    const int n = 12;
    auto space = make_space("test", std::vector<int>(n, 0), 0);
    AntilinearOperator A{space, random_matrix(n, rng)};
    AntilinearOperator B{space, random_matrix(n, rng)};

    // (A o B) v = A(B v): antilinear twice is linear with matrix M_A conj(M_B)
    Vector v = random_matrix(n, rng).col(0);
    Vector direct = A.mat * (B.mat * v.conjugate()).conjugate();
    TruncatedOperator AB = compose(A, B);
    CHECK((AB.mat * v - direct).norm() < 1e-12);

    // adjoint: <A* x, y> = <A y, x> on random pairs
    AntilinearOperator Astar = anti_adjoint(A);
    for (int t = 0; t < 8; ++t) {
        Vector x = random_matrix(n, rng).col(0), y = random_matrix(n, rng).col(1);
        complexd lhs = (Astar.mat * x.conjugate()).dot(y); // <A*x, y> with Eigen's dot = (lhs)^dag y
        lhs = std::conj(lhs);
        complexd rhs = std::conj((A.mat * y.conjugate()).dot(x));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }

    // inverse
    AntilinearOperator Ainv = anti_inverse(A);
    TruncatedOperator id = compose(A, Ainv);
    CHECK((id.mat - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("polar decomposition via the SVD") {
    std::mt19937_64 rng(5);
    const int n = 16;
    auto space = make_space("test2", std::vector<int>(n, 0), 0);
    AntilinearOperator T{space, random_matrix(n, rng)};
    PolarDecomposition pd = polar(T);
    CHECK(antiunitarity_defect(pd.antiunitary) < 1e-12);
    // positivity
    Eigen::SelfAdjointEigenSolver<Matrix> es(pd.positive.mat);
    CHECK(es.eigenvalues().minCoeff() > 0);
    CHECK((pd.positive.mat - pd.positive.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    // T = J |T|
    Matrix recomposed = pd.antiunitary.mat * pd.positive.mat.conjugate();
    CHECK((recomposed - T.mat).cwiseAbs().maxCoeff() < 1e-11);
    // rank deficiency is rejected
    Matrix sing = Matrix::Zero(n, n);
    sing(0, 0) = 1.0;
    CHECK_THROWS_AS(polar(AntilinearOperator{space, sing}), std::runtime_error);
}

TEST_CASE("polar in a diagonalizing column basis agrees with the SVD route") {
    std::mt19937_64 rng(9);
    const int n = 10;
    auto space = make_space("test3", std::vector<int>(n, 0), 0);
    // build T = W P with W a random antiunitary and P positive diagonal in a
    // known unitary basis U
    Matrix u = random_matrix(n, rng);
    Eigen::HouseholderQR<Matrix> qr(u);
    u = qr.householderQ();
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i)
        d(i) = std::pow(0.5, i); // well separated scales
    Matrix p = u * d.asDiagonal() * u.adjoint();
    Matrix w = random_matrix(n, rng);
    Eigen::HouseholderQR<Matrix> qr2(w);
    w = qr2.householderQ();
    AntilinearOperator T{space, w * p.conjugate()};

    PolarDecomposition via_svd = polar(T);
    BasisPolar via_cols = polar_in_basis(T, u);
    CHECK(via_cols.orthogonality_defect < 1e-12);
    CHECK((via_cols.antiunitary.mat - via_svd.antiunitary.mat).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((via_cols.positive.mat - via_svd.positive.mat).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(via_cols.min_singular_value == doctest::Approx(std::pow(0.5, n - 1)));
}

TEST_CASE("conjugation by an antiunitary") {
    std::mt19937_64 rng(3);
    const int n = 8;
    auto space = make_space("test4", std::vector<int>(n, 0), 0);
    Matrix w = random_matrix(n, rng);
    Eigen::HouseholderQR<Matrix> qr(w);
    AntilinearOperator J{space, Matrix(qr.householderQ())};
    TruncatedOperator X{space, random_matrix(n, rng)};
    TruncatedOperator JXJ = conjugate_by(J, X);
    // action agrees with J(X(J^{-1} v))
    Vector v = random_matrix(n, rng).col(0);
    Vector jinv_v = (J.mat.conjugate().inverse()) * v.conjugate();
    Vector expect = J.mat * (X.mat * jinv_v).conjugate();
    CHECK((JXJ.mat * v - expect).norm() < 1e-11);
}

} // TEST_SUITE
