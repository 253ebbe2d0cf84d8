#include "qsu2/podles.hpp"

#include <doctest.h>

using namespace qsu2;

TEST_SUITE("podles") {

TEST_CASE("beta family") {
    QParam pinf(0.5, PodlesC::infinite());
    PodlesCoeffs cinf(pinf);
    for (int tl = 0; tl <= 12; tl += 2)
        CHECK(cinf.beta(HalfInt(0), HalfInt(tl)) == doctest::Approx(0.0));
    // sign antisymmetry at c = inf
    CHECK(cinf.beta(HalfInt(1), HalfInt(1)) + cinf.beta(HalfInt(-1), HalfInt(1)) ==
          doctest::Approx(0.0));
    CHECK(cinf.beta(HalfInt(1), HalfInt(3)) > 0.0);
    CHECK(cinf.beta(HalfInt(-1), HalfInt(3)) < 0.0);
    // the grading obstruction closed form [3]^{-1}(q^{-2}-1) for finite c
    for (double q : {0.3, 0.5, 0.8})
        for (double c : {0.0, 1.0, 10.0}) {
            QParam p(q, PodlesC::value(c));
            PodlesCoeffs pc(p);
            double sum = pc.beta(HalfInt(1), HalfInt(1)) + pc.beta(HalfInt(-1), HalfInt(1));
            double closed = (1.0 / (q * q) - 1.0) / qint(3.0, q);
            CHECK(std::abs(sum - closed) < 1e-12);
        }
    CHECK_THROWS_AS(cinf.beta(HalfInt(2), HalfInt(1)), std::invalid_argument);
}

TEST_CASE("pi_0 matrix structure") {
    QParam pinf(0.5, PodlesC::infinite());
    PodlesBasis basis(pinf, HalfInt(0), HalfInt::whole(3));
    PodlesCoeffs coeffs(pinf);
    auto x0 = pi_j_matrix(basis, PodlesOp::X0);
    auto x1 = pi_j_matrix(basis, PodlesOp::X1);
    auto xm1 = pi_j_matrix(basis, PodlesOp::Xm1);
    int i00 = basis.index_of(HalfInt(0), HalfInt(0));
    int i10 = basis.index_of(HalfInt::whole(1), HalfInt(0));
    // pi_0(x_0) v^0_{0,0} = alpha_0(0) v^1_{0,0}
    CHECK(std::abs(x0.mat(i10, i00) - complexd(coeffs.alpha(HalfInt(0), HalfInt(0)), 0)) < 1e-14);
    CHECK(std::abs(x0.mat(i00, i00)) < 1e-14); // beta_0 = 0 at c = inf
    // pure raising at k = l: pi_0(x_1) v^l_{l,0} = alpha_0(l) v^{l+1}_{l+1,0}
    for (int tl = 0; tl <= 4; tl += 2) {
        int from = basis.index_of(HalfInt(tl), HalfInt(tl));
        int to = basis.index_of(HalfInt(tl + 2), HalfInt(tl + 2));
        for (int r = 0; r < basis.dim(); ++r) {
            complexd expect =
                r == to ? complexd(coeffs.alpha(HalfInt(0), HalfInt(tl)), 0) : complexd(0, 0);
            CHECK(std::abs(x1.mat(r, from) - expect) < 1e-13);
        }
    }
    // x_{-1} = -q^{-1} x_1^dagger
    CHECK((xm1.mat + 2.0 * x1.mat.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("gns cross validation at the three pinned parameters") {
    QParam params(0.5, PodlesC::infinite());
    LmnBasis heis(params, HalfInt::whole(3));
    for (auto c : {PodlesC::value(0.0), PodlesC::value(1.0), PodlesC::infinite()}) {
        auto rep = cross_validate_pi0(heis, c, HalfInt::whole(3));
        CHECK(rep.max_deviation < 1e-10);
        CHECK(rep.compared_entries > 0);
    }
}

TEST_CASE("gns basis guards") {
    QParam params(0.5, PodlesC::infinite());
    LmnBasis heis(params, HalfInt::whole(2));
    // c without a rational square root cannot be embedded exactly
    CHECK_THROWS_AS(GnsPodlesBasis(heis, PodlesC::value(2.0), HalfInt::whole(2)),
                    std::invalid_argument);
    // but perfect rational squares work
    CHECK_NOTHROW(GnsPodlesBasis(heis, PodlesC::value(2.25), HalfInt::whole(2)));
    // level must not exceed the Heisenberg truncation
    CHECK_THROWS_AS(GnsPodlesBasis(heis, PodlesC::infinite(), HalfInt::whole(3)),
                    std::invalid_argument);
}

TEST_CASE("gns lambda action is the abstract sigma") {
    QParam params(0.5, PodlesC::infinite());
    LmnBasis heis(params, HalfInt::whole(2));
    GnsPodlesBasis gns(heis, PodlesC::infinite(), HalfInt::whole(2));
    PodlesBasis abstract(params, HalfInt(0), HalfInt::whole(2));
    for (UqGen g : {UqGen::E, UqGen::F, UqGen::K}) {
        Matrix mg = gns.lambda_gen(g).mat;
        Matrix ma = sigma_matrix(abstract, g).mat;
        CHECK((mg - ma).cwiseAbs().maxCoeff() < 1e-12);
    }
}

} // TEST_SUITE
