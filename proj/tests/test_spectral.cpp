#include "qsu2/spectral.hpp"

#include <doctest.h>

using namespace qsu2;

TEST_SUITE("spectral") {

TEST_CASE("clebsch-gordan coefficients") {
    const double q = 0.5;
    // C_{1,0}^2 = q^{-1}[1]/[2]
    double c10 = spinor_coeff_C(q, HalfInt::whole(1), HalfInt(0));
    CHECK(c10 * c10 == doctest::Approx((1.0 / q) / qint(2.0, q)));
    for (int tj = 1; tj <= 9; ++tj)
        for (int tm = -tj; tm <= tj; tm += 2) {
            double c = spinor_coeff_C(q, HalfInt(tj), HalfInt(tm));
            double s = spinor_coeff_S(q, HalfInt(tj), HalfInt(tm));
            CHECK(c * c + s * s == doctest::Approx(1.0));
        }
}

TEST_CASE("spinor family dimensions at level 2") {
    QParam params(0.5, PodlesC::infinite());
    LmnBasis basis(params, HalfInt::whole(2));
    SpinorBasis sb(basis);
    std::map<std::pair<int, bool>, int> counts;
    for (const auto& lab : sb.labels())
        counts[{lab.j.twice, lab.up}] += 1;
    CHECK(counts[{0, true}] == 2);   // dim W^up_0 = 2
    CHECK(counts[{1, false}] == 2);  // dim W^dn_{1/2} = 2
    CHECK(counts[{2, true}] == 12);  // (2l+1)(2l+2) at l = 1
    CHECK(counts[{2, false}] == 6);  // 2l(2l+1) at l = 1
    CHECK(sb.dim() == 2 * basis.dim());
}

TEST_CASE("dirac spectrum and bi-equivariance") {
    QParam params(0.5, PodlesC::infinite());
    LmnBasis basis(params, HalfInt::whole(2));
    SpinorBasis sb(basis);
    auto rows = dirac_su2_spectrum(sb);
    // +-(l+1/2) multiplicity pattern on complete sectors, and the difference
    // of up/dn multiplicities is 2(2l+1)
    for (const auto& r : rows) {
        double l = std::abs(r.eigenvalue) - 0.5;
        if (2 * l > basis.level().twice - 1)
            continue;
        int expect = r.eigenvalue > 0 ? int((2 * l + 1) * (2 * l + 2) + 0.5)
                                      : int(2 * l * (2 * l + 1) + 0.5);
        CHECK(r.multiplicity == expect);
    }
    TruncatedOperator D = sb.dirac();
    for (UqGen g : {UqGen::E, UqGen::F, UqGen::K}) {
        CHECK(interior_norm(op_commutator(D, sb.lambda(g)), 1) < 1e-12);
        CHECK(interior_norm(op_commutator(D, sb.rho(g)), 1) < 1e-12);
    }
}

TEST_CASE("restricted dirac operator") {
    QParam params(0.5, PodlesC::infinite());
    LmnBasis basis(params, HalfInt::whole(3));
    SpinorBasis sb(basis);
    GnsPodlesBasis gns(basis, PodlesC::infinite(), HalfInt::whole(3));
    auto pod = PodlesSpinorBasis::from_gns(gns);
    auto rd = dirac_podles_restricted(sb, pod);
    CHECK(rd.invariance_defect < 1e-12);
    auto rows = dirac_podles_spectrum(pod, rd.dtilde);
    std::map<int, int> mult;
    for (auto& r : rows)
        mult[int(std::llround(2 * r.eigenvalue))] = r.multiplicity;
    // +-(l+1/2) with multiplicity 2l+1 for l = 1/2, 3/2, 5/2 (complete sectors)
    CHECK(mult[2] == 2);
    CHECK(mult[-2] == 2);
    CHECK(mult[4] == 4);
    CHECK(mult[-4] == 4);
    // trace vanishes on each complete +- pair by construction
    for (auto& [twice, m] : mult)
        if (twice > 0 && -twice >= -5)
            CHECK(m == mult[-twice]);
}

TEST_CASE("grading obstruction and refusal at finite c") {
    for (double q : {0.3, 0.5, 0.8}) {
        CHECK(grading_obstruction(QParam(q, PodlesC::infinite())) == doctest::Approx(0.0));
        for (double c : {0.0, 1.0, 10.0}) {
            double closed = (1.0 / (q * q) - 1.0) / qint(3.0, q);
            CHECK(grading_obstruction(QParam(q, PodlesC::value(c))) ==
                  doctest::Approx(closed).epsilon(1e-12));
        }
    }
    auto psb = PodlesSpinorBasis::from_abstract(QParam(0.5, PodlesC::value(1.0)), HalfInt::whole(3));
    CHECK_THROWS_AS(build_grading(psb), std::invalid_argument);
}

TEST_CASE("grading operator at c = inf") {
    QParam pinf(0.5, PodlesC::infinite());
    auto psb = PodlesSpinorBasis::from_abstract(pinf, HalfInt::whole(4));
    TruncatedOperator gamma = build_grading(psb);
    // gamma |1/2,1/2,dn> = |1/2,1/2,up>
    int idn = psb.index_of({HalfInt(1), HalfInt(1), false});
    int iup = psb.index_of({HalfInt(1), HalfInt(1), true});
    Vector v = psb.isometry().col(idn);
    Vector got = gamma.mat * v;
    CHECK((got - psb.isometry().col(iup)).norm() < 1e-12);
    // gamma v^l_{m,-1/2} = -v^l_{m,-1/2}
    Vector vm = psb.v_pm(HalfInt(3), HalfInt(1), -1);
    CHECK((gamma.mat * vm + vm).norm() < 1e-12);
    // highest-weight criterion <w, pi(x0) w> = beta_{+-1/2}(l)
    PodlesCoeffs coeffs(pinf);
    Matrix x0 = psb.pi(PodlesOp::X0).mat;
    for (int tl = 1; tl <= 5; tl += 2)
        for (int sgn : {1, -1}) {
            Vector w = psb.v_pm(HalfInt(tl), HalfInt(tl), sgn);
            complexd val = w.dot(x0 * w);
            CHECK(std::abs(val - complexd(coeffs.beta(HalfInt(sgn), HalfInt(tl)), 0)) < 1e-12);
        }
}

TEST_CASE("highest weight spinors match the seed formulas") {
    // |ll dn> = v^{l-1/2}_{l-1/2} (x) |1/2,+1/2> and the printed |ll up> combo
    const double q = 0.5;
    QParam pinf(q, PodlesC::infinite());
    auto psb = PodlesSpinorBasis::from_abstract(pinf, HalfInt::whole(3));
    for (int tl = 1; tl <= 5; tl += 2) {
        HalfInt l(tl);
        Vector dn = psb.isometry().col(psb.index_of({l, l, false}));
        Vector expect_dn = Vector::Zero(psb.dim());
        expect_dn(2 * psb.base_index_of(HalfInt(tl - 1), HalfInt(tl - 1)) + 1) = 1.0;
        CHECK((dn - expect_dn).norm() < 1e-13);

        Vector up = psb.isometry().col(psb.index_of({l, l, true}));
        Vector expect_up = Vector::Zero(psb.dim());
        double pre = 1.0 / std::sqrt(qint(HalfInt(2 * tl + 4), q));
        expect_up(2 * psb.base_index_of(HalfInt(tl + 1), HalfInt(tl + 1)) + 0) =
            -pre * std::sqrt(q) * std::sqrt(qint(HalfInt(2 * tl + 2), q));
        expect_up(2 * psb.base_index_of(HalfInt(tl + 1), HalfInt(tl - 1)) + 1) =
            pre * qpow_halfint(q, HalfInt(-tl - 1));
        CHECK((up - expect_up).norm() < 1e-13);

        // lowering with the tensor action of e stays proportional to the next
        // basis spinor with a positive coefficient
        if (tl >= 3) {
            Matrix le = psb.lambda(UqGen::E).mat;
            Vector lowered = le * dn;
            Vector next = psb.isometry().col(psb.index_of({l, l - HalfInt(2), false}));
            double coeff = next.dot(lowered).real();
            CHECK(coeff > 0);
            CHECK((lowered - coeff * next).norm() < 1e-12);
        }
    }
}

TEST_CASE("counting exponent on a synthetic cubic-growth spectrum") {
    std::vector<SpectrumRow> rows;
    for (int tl = 0; tl <= 16; ++tl) {
        double l = tl / 2.0;
        rows.push_back({l + 0.5, int((2 * l + 1) * (2 * l + 2) + 0.5), HalfInt(tl)});
        if (tl > 0)
            rows.push_back({-(l + 0.5), int(2 * l * (2 * l + 1) + 0.5), HalfInt(tl)});
    }
    double e = counting_exponent(rows, 4.49, 8.01);
    CHECK(e > 2.8);
    CHECK(e < 3.2);
}

TEST_CASE("commutant dimension of the tensor representation") {
    for (auto c : {PodlesC::value(1.0), PodlesC::infinite()}) {
        auto psb = PodlesSpinorBasis::from_abstract(QParam(0.5, c), HalfInt::whole(4));
        CHECK(equivariant_commutant_dimension(psb) == 2);
    }
}

} // TEST_SUITE
