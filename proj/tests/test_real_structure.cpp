#include "qsu2/real_structure.hpp"

#include <doctest.h>

using namespace qsu2;

namespace {

struct Setup {
    QParam params{0.5, PodlesC::infinite()};
    LmnBasis basis{params, HalfInt::whole(2)};
    SpinorBasis sb{basis};
    TomitaSu2 tom{sb};
};

Setup& setup() {
    static Setup s;
    return s;
}

} // namespace

TEST_SUITE("real-structure") {

TEST_CASE("tomita operator on the gns space") {
    auto& s = setup();
    const double q = 0.5;
    auto tpsi = tomita_su2(s.basis);
    // T 1 = 1
    int i000 = s.basis.index_of(HalfInt(0), HalfInt(0), HalfInt(0));
    CHECK(std::abs(tpsi.mat(i000, i000) - complexd(1, 0)) < 1e-14);
    // T |1/2,1/2,1/2> = (-1)^{2l+m+n} q^{m+n} |1/2,-1/2,-1/2> = +q |...> here,
    // since 2l+m+n = 2 for l = m = n = 1/2
    int j = s.basis.index_of(HalfInt(1), HalfInt(1), HalfInt(1));
    int i = s.basis.index_of(HalfInt(1), HalfInt(-1), HalfInt(-1));
    CHECK(std::abs(tpsi.mat(i, j) - complexd(q, 0)) < 1e-13);
    // involution
    CHECK((tpsi.mat * tpsi.mat.conjugate() - Matrix::Identity(s.basis.dim(), s.basis.dim()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    // J_psi^2 = 1 and the adjoint relation T* = pi(k^2) rho(k^{-2}) T
    auto jpsi = modular_conjugation_su2(s.basis, tpsi);
    CHECK((jpsi.mat * jpsi.mat.conjugate() - Matrix::Identity(s.basis.dim(), s.basis.dim()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    Matrix k2 = lambda_gen_matrix(s.basis, UqGen::K).mat;
    k2 = k2 * k2;
    Matrix rk2 = rho_gen_matrix(s.basis, UqGen::Kinv).mat;
    rk2 = rk2 * rk2;
    CHECK((tpsi.mat.transpose() - k2 * rk2 * tpsi.mat).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(equivariance_defect_lmn(s.basis, jpsi, 2) < 1e-12);
}

TEST_CASE("spin one half tomita operator") {
    const double q = 0.5;
    Matrix th = t_half_matrix(q);
    CHECK(th(0, 1) == complexd(0, std::sqrt(q)));
    CHECK(th(1, 0) == complexd(0, -1.0 / std::sqrt(q)));
    Matrix jh = sigma_half(q, UqGen::K) * th;
    CHECK((jh * jh.conjugate() + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("r-matrix operator") {
    auto& s = setup();
    const double q = 0.5;
    const int n = s.basis.dim();
    // R(|1/2,+1/2> (x) |lmn>) = q^{1+m} |1/2,+1/2> (x) |lmn>
    for (int i : {s.basis.index_of(HalfInt(0), HalfInt(0), HalfInt(0)),
                  s.basis.index_of(HalfInt(1), HalfInt(1), HalfInt(1)),
                  s.basis.index_of(HalfInt(2), HalfInt(-2), HalfInt(0))}) {
        REQUIRE(i >= 0);
        Vector v = Vector::Zero(2 * n);
        v(n + i) = 1.0;
        Vector rv = s.tom.r_matrix() * v;
        double m = s.basis.labels()[i].m.value();
        CHECK(std::abs(rv(n + i) - complexd(std::pow(q, 1 + m), 0)) < 1e-13);
        rv(n + i) = 0;
        CHECK(rv.norm() < 1e-13);
    }
    // |R^*|^2 = R^ R^* equals q^{-2D}
    Matrix rr = s.tom.r_hat() * s.tom.r_hat().adjoint();
    Matrix qd = s.tom.q_power_dirac(-1).mat;
    CHECK((rr - qd * qd).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("composed tomita operator and its polar part") {
    auto& s = setup();
    const double q = 0.5;
    Matrix D = s.sb.dirac().mat;
    // TD = DT
    CHECK((s.tom.T().mat * D.conjugate() - D * s.tom.T().mat).cwiseAbs().maxCoeff() < 1e-12);
    // closed form on the spinor basis: T|l m nu dn> and the up branch
    Matrix tsp = Matrix(SparseMatrix(s.sb.isometry().adjoint())) * s.tom.T().mat *
                 Matrix(s.sb.isometry()).conjugate();
    for (int c = 0; c < s.sb.dim(); ++c) {
        SpinorLabel lab = s.sb.labels()[c];
        int r = s.sb.index_of({lab.j, -lab.m, -lab.n, lab.up});
        double jj = lab.j.value(), mm = lab.m.value(), nn = lab.n.value();
        complexd expect =
            lab.up ? std::pow(complexd(0, 1), 2 * (2 * jj + mm + nn)) * std::pow(q, -jj + mm + nn - 0.5)
                   : std::pow(complexd(0, 1), 2 * (2 * jj - mm - nn)) * std::pow(q, jj + mm + nn + 0.5);
        CHECK(std::abs(tsp(r, c) - expect) < 1e-12);
    }
    // J from the polar decomposition: the closed form, J^2 = -1, JD = DJ
    Matrix jsp = Matrix(SparseMatrix(s.sb.isometry().adjoint())) * s.tom.J().mat *
                 Matrix(s.sb.isometry()).conjugate();
    for (int c = 0; c < s.sb.dim(); ++c) {
        SpinorLabel lab = s.sb.labels()[c];
        int r = s.sb.index_of({lab.j, -lab.m, -lab.n, lab.up});
        double jj = lab.j.value(), mm = lab.m.value(), nn = lab.n.value();
        double phase = lab.up ? 2 * (2 * jj + mm + nn) : 2 * (2 * jj - mm - nn);
        CHECK(std::abs(jsp(r, c) - std::pow(complexd(0, 1), phase)) < 1e-12);
    }
    CHECK((s.tom.J().mat * s.tom.J().mat.conjugate() + Matrix::Identity(s.sb.dim(), s.sb.dim()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((s.tom.J().mat * D.conjugate() - D * s.tom.J().mat).cwiseAbs().maxCoeff() < 1e-12);
    // |T| = pi(k) rho(k^{-1}) q^{-D} and J = pi(k) rho(k^{-1}) q^D T
    CHECK((s.tom.absT().mat - s.tom.k_weights(1, -1).mat * s.tom.q_power_dirac(-1).mat)
              .cwiseAbs()
              .maxCoeff() < 1e-11);
    CHECK((s.tom.J().mat - s.tom.k_weights(1, -1).mat * s.tom.q_power_dirac(1).mat * s.tom.T().mat)
              .cwiseAbs()
              .maxCoeff() < 1e-11);
    // equivariance of T and the conjugation property of J
    CHECK(antilinear_equivariance_defect_su2(s.sb, s.tom.T(), 2) < 1e-12);
    CHECK(equivariance_defect_su2(s.sb, s.tom.J(), 2) < 1e-12);
}

TEST_CASE("commutant properties") {
    auto& s = setup();
    NumericCtx ctx(0.5);
    auto pa = s.sb.pi(pi_psi_matrix(s.basis, coord_gen(ctx, CoordGen::A)));
    auto pb = s.sb.pi(pi_psi_matrix(s.basis, coord_gen(ctx, CoordGen::B)));
    // T and J0 conjugations commute with the left action exactly
    for (const auto& px : {pa, pb})
        for (const auto& py : {pa, pb}) {
            CHECK(interior_norm(op_commutator(px, conjugate_by(s.tom.T(), py)), 2) < 1e-12);
            CHECK(interior_norm(op_commutator(px, conjugate_by(s.tom.J0(), py)), 2) < 1e-12);
        }
    // but J only up to a decaying error
    CHECK(interior_norm(op_commutator(pa, conjugate_by(s.tom.J(), pb)), 2) > 1e-3);
}

TEST_CASE("podles tomita operator, composed regime") {
    QParam pinf(0.5, PodlesC::infinite());
    const double q = 0.5;
    auto psb = PodlesSpinorBasis::from_abstract(pinf, HalfInt::whole(5));
    TomitaPodles tom(psb);
    Matrix tsp = psb.isometry().adjoint() * tom.T().mat * psb.isometry().conjugate();
    Matrix jsp = psb.isometry().adjoint() * tom.J().mat * psb.isometry().conjugate();
    for (int c = 0; c < psb.dim(); ++c) {
        auto lab = psb.labels()[c];
        int r = psb.index_of({lab.l, -lab.m, lab.up});
        double ll = lab.l.value(), mm = lab.m.value();
        complexd phase = std::pow(complexd(0, 1), 2 * mm);
        complexd texpect = lab.up ? -phase * std::pow(q, -ll + mm - 0.5)
                                  : phase * std::pow(q, ll + mm + 0.5);
        complexd jexpect = lab.up ? -phase : phase;
        for (int rr = 0; rr < psb.dim(); ++rr) {
            CHECK(std::abs(tsp(rr, c) - (rr == r ? texpect : complexd(0, 0))) < 1e-10);
            CHECK(std::abs(jsp(rr, c) - (rr == r ? jexpect : complexd(0, 0))) < 1e-10);
        }
    }
    // J~ v^l_{m,+-1/2} = i^{2m} v^l_{-m,-+1/2} and the gamma anticommutation
    TruncatedOperator gamma = psb.gamma();
    CHECK(interior_norm(tom.J().mat * gamma.mat.conjugate() + gamma.mat * tom.J().mat,
                        *psb.tensor_space(), 2) < 1e-11);
    // |T~| = pi~(k) q^{-D~}
    CHECK((tom.absT().mat - tom.k_weight(1).mat * tom.q_power_dirac(-1).mat).cwiseAbs().maxCoeff() <
          1e-11);
}

TEST_CASE("podles tomita operator agrees across the instantiation switch") {
    // l_max = 7 composes (just below the precision wall), l_max = 8 uses the
    // closed forms; both must satisfy the same entrywise formulas
    QParam pinf(0.5, PodlesC::infinite());
    for (int lmax : {7, 8}) {
        auto psb = PodlesSpinorBasis::from_abstract(pinf, HalfInt::whole(lmax));
        TomitaPodles tom(psb);
        Matrix jsp = psb.isometry().adjoint() * tom.J().mat * psb.isometry().conjugate();
        double worst = 0;
        for (int c = 0; c < psb.dim(); ++c) {
            auto lab = psb.labels()[c];
            int r = psb.index_of({lab.l, -lab.m, lab.up});
            complexd expect =
                (lab.up ? -1.0 : 1.0) * std::pow(complexd(0, 1), 2 * lab.m.value());
            for (int rr = 0; rr < psb.dim(); ++rr)
                worst = std::max(worst, std::abs(jsp(rr, c) - (rr == r ? expect : complexd(0, 0))));
        }
        CHECK(worst < 1e-7);
    }
    // finite c cannot use the deep-truncation closed forms
    CHECK_THROWS_AS(TomitaPodles(PodlesSpinorBasis::from_abstract(
                        QParam(0.5, PodlesC::value(1.0)), HalfInt::whole(12))),
                    std::invalid_argument);
}

TEST_CASE("gns star map matches the derived closed form") {
    QParam pinf(0.5, PodlesC::infinite());
    LmnBasis basis(pinf, HalfInt::whole(3));
    GnsPodlesBasis gns(basis, PodlesC::infinite(), HalfInt::whole(3));
    Matrix st = gns.star_matrix();
    for (int i = 0; i < gns.dim(); ++i) {
        auto [l, m] = gns.labels()[i];
        int j = gns.index_of(l, -m);
        double expect = std::pow(-0.5, m.value());
        for (int r = 0; r < gns.dim(); ++r)
            CHECK(std::abs(st(r, i) - (r == j ? complexd(expect, 0) : complexd(0, 0))) < 1e-12);
    }
}

TEST_CASE("restriction identities") {
    QParam pinf(0.5, PodlesC::infinite());
    LmnBasis basis(pinf, HalfInt::whole(3));
    SpinorBasis sb(basis);
    TomitaSu2 tom(sb);
    GnsPodlesBasis gns(basis, PodlesC::infinite(), HalfInt::whole(3));
    auto pod = PodlesSpinorBasis::from_gns(gns);
    TomitaPodles tomp(pod);
    Matrix E = podles_spinor_embedding(sb, pod);
    CHECK((E.adjoint() * E - Matrix::Identity(pod.dim(), pod.dim())).cwiseAbs().maxCoeff() < 1e-12);
    auto idx = interior_indices(*pod.tensor_space(), 2);
    Matrix tcomp = E.adjoint() * tom.T().mat * E.conjugate();
    CHECK(submatrix(tcomp - tomp.T().mat, idx, idx).cwiseAbs().maxCoeff() < 1e-12);
    Matrix jcomp = E.adjoint() * tom.J().mat * E.conjugate();
    CHECK(operator_norm(submatrix(jcomp - tomp.J().mat, idx, idx)) > 0.1);
}

TEST_CASE("decay tables") {
    QParam pinf(0.5, PodlesC::infinite());
    auto psb = PodlesSpinorBasis::from_abstract(pinf, HalfInt::whole(12));
    TomitaPodles tom(psb);
    DecayEngine engine(psb, tom.J());
    auto t = engine.table(PodlesOp::A, PodlesOp::B, false, true);
    CHECK(t.interior_norm > 1e-6);
    CHECK(t.fitted_ratio > 0.0);
    CHECK(t.fitted_ratio < 1.0);
    CHECK(tail_decreasing(t, 4.0));
    // block norms decay monotonically beyond the first sectors
    for (size_t k = 3; k + 2 < t.block_norms.size(); ++k)
        CHECK(t.block_norms[k + 1].second < t.block_norms[k].second);
    // conjugating with T~ instead gives an exact commutant
    auto psb4 = PodlesSpinorBasis::from_abstract(pinf, HalfInt::whole(4));
    TomitaPodles tom4(psb4);
    auto tz = commutant_decay(psb4, tom4.T(), PodlesOp::A, PodlesOp::B, false);
    CHECK(tz.interior_norm < 1e-11);
}

} // TEST_SUITE
