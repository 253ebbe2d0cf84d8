//
// Project     : qsu2
// Module      : podles
//

#include "qsu2/podles.hpp"

#include <sstream>

namespace qsu2 {

namespace {

int sign_of(HalfInt j) { return j.twice > 0 ? 1 : (j.twice < 0 ? -1 : 0); }

double checked_sqrt(double x, const char* what) {
    if (x < -1e-12)
        throw std::domain_error(std::string(what) + ": negative radicand " + std::to_string(x));
    return x > 0 ? std::sqrt(x) : 0.0;
}

} // namespace

double PodlesCoeffs::beta(HalfInt j, HalfInt l) const {
    if (l < j.abs())
        throw std::invalid_argument("beta_j(l) requires l >= |j|");
    const double q = params_.q;
    const double inv_2l2 = 1.0 / qint(HalfInt(2 * l.twice + 4), q); // [2l+2]^{-1}
    if (!params_.c.finite) {
        // sign(j) q^{-1} [2l+2]^{-1} [2] [2|j|]
        return sign_of(j) * (1.0 / q) * inv_2l2 * qint(2.0, q) * qint(HalfInt(2 * std::abs(j.twice)), q);
    }
    const double c = params_.c.c;
    const double lp = 0.5 + std::sqrt(c + 0.25);
    const double lm = 0.5 - std::sqrt(c + 0.25);
    double first, second;
    if (j.twice >= 0) { first = lp; second = lm; }
    else { first = lm; second = lp; }
    const double qm2 = 1.0 / (q * q);
    const double jabs = std::abs(j.twice) / 2.0;
    double val = qint(HalfInt(2 * std::abs(j.twice)), q) * (qm2 * first - second)
               + (1.0 - qm2) * qint(jabs, q) * qint(jabs + 1.0, q)
               - (1.0 - qm2) * qint(l, q) * qint(l + HalfInt::whole(1), q);
    return inv_2l2 * val;
}

double PodlesCoeffs::alpha(HalfInt j, HalfInt l) const {
    const double q = params_.q;
    const double b = beta(j, l);
    const double pre = (1.0 / std::sqrt(qint(2.0, q))) *
                       std::sqrt(qint(HalfInt(2 * l.twice + 4), q) / qint(HalfInt(2 * l.twice + 6), q));
    double radicand;
    if (params_.c.finite) {
        const double c = params_.c.c;
        radicand = 1.0 + qint(2.0, q) * qint(2.0, q) * c - (1.0 - q * q) * b - q * q * b * b;
    } else {
        radicand = qint(2.0, q) * qint(2.0, q) - q * q * b * b;
    }
    return pre * checked_sqrt(radicand, "alpha_j(l)");
}

PodlesBasis::PodlesBasis(const QParam& params, HalfInt j, HalfInt l_max)
    : params_(params), j_(j), l_max_(l_max) {
    if (l_max < j.abs())
        throw std::invalid_argument("PodlesBasis requires l_max >= |j|");
    std::vector<int> sector;
    for (int tl = j.abs().twice; tl <= l_max.twice; tl += 2)
        for (int tk = -tl; tk <= tl; tk += 2) {
            index_[{tl, tk}] = static_cast<int>(labels_.size());
            labels_.emplace_back(HalfInt(tl), HalfInt(tk));
            sector.push_back(tl);
        }
    std::ostringstream nm;
    nm << "podles(j=" << j.str() << ",lmax=" << l_max.str() << ",q=" << params.q << ",c=" << params.c.str()
       << ")";
    space_ = make_space(nm.str(), sector, l_max.twice);
}

int PodlesBasis::index_of(HalfInt l, HalfInt k) const {
    auto it = index_.find({l.twice, k.twice});
    return it == index_.end() ? -1 : it->second;
}

TruncatedOperator pi_j_matrix(const PodlesBasis& basis, PodlesOp op) {
    const QParam& params = basis.params();
    const double q = params.q;
    const HalfInt j = basis.j();
    PodlesCoeffs coeffs(params);

    auto qi = [&](int twice) { return qint(HalfInt(twice), q); };

    if (op == PodlesOp::Xm1) {
        TruncatedOperator x1 = pi_j_matrix(basis, PodlesOp::X1);
        return {basis.space(), (-1.0 / q) * x1.mat.adjoint()};
    }
    if (op == PodlesOp::A || op == PodlesOp::B || op == PodlesOp::Bstar) {
        const double s = std::sqrt(1.0 + q * q);
        if (op == PodlesOp::B) {
            TruncatedOperator xm1 = pi_j_matrix(basis, PodlesOp::Xm1);
            return {basis.space(), (q / s) * xm1.mat};
        }
        if (op == PodlesOp::Bstar) {
            TruncatedOperator x1 = pi_j_matrix(basis, PodlesOp::X1);
            return {basis.space(), (-1.0 / s) * x1.mat};
        }
        TruncatedOperator x0 = pi_j_matrix(basis, PodlesOp::X0);
        Matrix m = -x0.mat / (1.0 + q * q);
        if (params.c.finite)
            m += Matrix::Identity(basis.dim(), basis.dim()) / (1.0 + q * q);
        return {basis.space(), std::move(m)};
    }

    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    for (int col = 0; col < basis.dim(); ++col) {
        auto [l, k] = basis.labels()[col];
        const int tl = l.twice, tk = k.twice;
        if (op == PodlesOp::X1) {
            // raising to (l+1, k+1)
            if (tl + 2 <= basis.l_max().twice) {
                double craise = qpow_halfint(q, HalfInt(tk - tl)) *
                                checked_sqrt(qi(tl + tk + 2) * qi(tl + tk + 4) /
                                                 (qi(2 * tl + 2) * qi(2 * tl + 4)),
                                             "x1 raise") *
                                coeffs.alpha(j, l);
                m(basis.index_of(l + HalfInt::whole(1), k + HalfInt::whole(1)), col) += craise;
            }
            // same level to (l, k+1)
            if (tk + 2 <= tl && tl > 0) {
                double cmid = -qpow_halfint(q, HalfInt(tk + 4)) *
                              checked_sqrt(qi(tl - tk) * qi(tl + tk + 2) * qint(2.0, q), "x1 mid") /
                              qi(2 * tl) * coeffs.beta(j, l);
                m(basis.index_of(l, k + HalfInt::whole(1)), col) += cmid;
            }
            // lowering to (l-1, k+1)
            if (tl - 2 >= basis.j().abs().twice && std::abs(tk + 2) <= tl - 2) {
                double clow = -qpow_halfint(q, HalfInt(tl + tk + 2)) *
                              checked_sqrt(qi(tl - tk - 2) * qi(tl - tk) /
                                               (qi(2 * tl - 2) * qi(2 * tl)),
                                           "x1 lower") *
                              coeffs.alpha(j, l - HalfInt::whole(1));
                m(basis.index_of(l - HalfInt::whole(1), k + HalfInt::whole(1)), col) += clow;
            }
        } else if (op == PodlesOp::X0) {
            if (tl + 2 <= basis.l_max().twice) {
                double craise = qpow_halfint(q, k) *
                                checked_sqrt(qi(tl - tk + 2) * qi(tl + tk + 2) * qint(2.0, q) /
                                                 (qi(2 * tl + 2) * qi(2 * tl + 4)),
                                             "x0 raise") *
                                coeffs.alpha(j, l);
                m(basis.index_of(l + HalfInt::whole(1), k), col) += craise;
            }
            {
                double factor = 1.0;
                if (tl > 0)
                    factor = 1.0 - qpow_halfint(q, HalfInt(tl + tk + 2)) * qi(tl - tk) * qint(2.0, q) /
                                       qi(2 * tl);
                m(col, col) += factor * coeffs.beta(j, l);
            }
            if (tl - 2 >= basis.j().abs().twice && std::abs(tk) <= tl - 2) {
                double clow = qpow_halfint(q, k) *
                              checked_sqrt(qi(tl - tk) * qi(tl + tk) * qint(2.0, q) /
                                               (qi(2 * tl - 2) * qi(2 * tl)),
                                           "x0 lower") *
                              coeffs.alpha(j, l - HalfInt::whole(1));
                m(basis.index_of(l - HalfInt::whole(1), k), col) += clow;
            }
        }
    }
    return {basis.space(), std::move(m)};
}

TruncatedOperator sigma_matrix(const PodlesBasis& basis, UqGen g) {
    const double q = basis.params().q;
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    for (int col = 0; col < basis.dim(); ++col) {
        auto [l, k] = basis.labels()[col];
        switch (g) {
            case UqGen::K:
                m(col, col) = qpow_halfint(q, k);
                break;
            case UqGen::Kinv:
                m(col, col) = qpow_halfint(q, -k);
                break;
            case UqGen::F:
                if (k.twice + 2 <= l.twice)
                    m(basis.index_of(l, k + HalfInt::whole(1)), col) =
                        std::sqrt(qint(HalfInt(l.twice - k.twice), q) *
                                  qint(HalfInt(l.twice + k.twice + 2), q));
                break;
            case UqGen::E:
                if (k.twice - 2 >= -l.twice)
                    m(basis.index_of(l, k - HalfInt::whole(1)), col) =
                        std::sqrt(qint(HalfInt(l.twice - k.twice + 2), q) *
                                  qint(HalfInt(l.twice + k.twice), q));
                break;
        }
    }
    return {basis.space(), std::move(m)};
}

TruncatedOperator sigma_matrix(const PodlesBasis& basis, const NUqElement& h) {
    Matrix acc = Matrix::Zero(basis.dim(), basis.dim());
    for (const auto& [mono, c] : h) {
        Matrix term = Matrix::Identity(basis.dim(), basis.dim());
        for (int i = 0; i < mono.ej; ++i) term = sigma_matrix(basis, UqGen::E).mat * term;
        for (int i = 0; i < std::abs(mono.kn); ++i)
            term = sigma_matrix(basis, mono.kn > 0 ? UqGen::K : UqGen::Kinv).mat * term;
        for (int i = 0; i < mono.fi; ++i) term = sigma_matrix(basis, UqGen::F).mat * term;
        acc += c * term;
    }
    return {basis.space(), std::move(acc)};
}

PodlesVector act_left_podles(const QParam& params, UqGen g, const PodlesVector& v) {
    const double q = params.q;
    auto s2 = std::sqrt(qint(2.0, q)); // sqrt([2][1])
    PodlesVector out{0, 0, 0, 0};
    switch (g) {
        case UqGen::K:
        case UqGen::Kinv: {
            double sgn = (g == UqGen::K) ? 1.0 : -1.0;
            out.one = v.one;
            out.xm1 = v.xm1 * qpow_halfint(q, HalfInt(static_cast<int>(-2 * sgn)));
            out.x0 = v.x0;
            out.x1 = v.x1 * qpow_halfint(q, HalfInt(static_cast<int>(2 * sgn)));
            break;
        }
        case UqGen::E:
            // e |> x_i = sqrt([2-i][1+i]) x_{i-1}; e |> 1 = 0
            out.xm1 = v.x0 * s2;
            out.x0 = v.x1 * s2;
            break;
        case UqGen::F:
            out.x0 = v.xm1 * s2;
            out.x1 = v.x0 * s2;
            break;
    }
    return out;
}

PodlesVector podles_generator_vector(const QParam& params, PodlesOp op) {
    const double q = params.q;
    const double one_q2 = 1.0 + q * q;
    const double s = std::sqrt(one_q2);
    switch (op) {
        case PodlesOp::X1: return {0, 0, 0, 1};
        case PodlesOp::X0: return {0, 0, 1, 0};
        case PodlesOp::Xm1: return {0, 1, 0, 0};
        case PodlesOp::B: return {0, q / s, 0, 0};
        case PodlesOp::Bstar: return {0, 0, 0, -1.0 / s};
        case PodlesOp::A: {
            PodlesVector v{0, 0, -1.0 / one_q2, 0};
            if (params.c.finite)
                v.one = 1.0 / one_q2;
            return v;
        }
    }
    return {0, 0, 0, 0};
}

NCoordElement embed_podles_numeric(const NumericCtx& ctx, PodlesGen g, const PodlesC& c) {
    complexd sqrt_c(0.0, 0.0);
    if (c.finite)
        sqrt_c = std::sqrt(c.c);
    complexd sqrt_1q2 = std::sqrt(1.0 + ctx.q * ctx.q);
    return embed_podles(ctx, g, c, sqrt_c, sqrt_1q2);
}

namespace {

std::optional<Rational> exact_rational_sqrt(const Rational& r) {
    using boost::multiprecision::cpp_int;
    if (r < 0)
        return std::nullopt;
    cpp_int num = boost::multiprecision::numerator(r);
    cpp_int den = boost::multiprecision::denominator(r);
    cpp_int sn = boost::multiprecision::sqrt(num);
    cpp_int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den)
        return std::nullopt;
    return Rational(sn, sd);
}

} // namespace

LCoordElement embed_podles_exact(const LadderCtx& ctx, PodlesGen g, const PodlesC& c) {
    if (g == PodlesGen::X1 || g == PodlesGen::Xm1)
        throw std::invalid_argument("x_{+-1} embeddings are numeric (sqrt(1+q^2) scale)");
    LaurentScalar sqrt_c = LaurentScalar::integer(0);
    if (c.finite) {
        auto root = exact_rational_sqrt(Rational(c.c));
        if (!root)
            throw std::invalid_argument(
                "exact Podles embedding needs c with a rational square root; got c = " +
                std::to_string(c.c));
        sqrt_c = LaurentScalar::rational(*root);
    }
    return embed_podles(ctx, g, c, sqrt_c, LaurentScalar::integer(0));
}

namespace {

Rational exact_qint_rat(int twice, const Rational& q) {
    if (twice % 2 != 0)
        throw std::logic_error("exact q-integer needs an integer argument");
    int x = twice / 2;
    return (rational_pow(q, x) - rational_pow(q, -x)) / (q - Rational(1) / q);
}

/// alpha_0(l)^2 as an exact rational (both branches; j = 0 so beta_0 is rational).
Rational exact_alpha0_sq(int tl, const Rational& q, const PodlesC& c) {
    Rational two = exact_qint_rat(4, q);           // [2]
    Rational l2p2 = exact_qint_rat(2 * tl + 4, q); // [2l+2]
    Rational l2p3 = exact_qint_rat(2 * tl + 6, q); // [2l+3]
    Rational beta0;
    if (c.finite) // (q^{-2} - 1)[l][l+1] / [2l+2]
        beta0 = (Rational(1) / (q * q) - 1) * exact_qint_rat(tl, q) * exact_qint_rat(tl + 2, q) / l2p2;
    else
        beta0 = 0;
    Rational radicand;
    if (c.finite)
        radicand = 1 + two * two * Rational(c.c) - (1 - q * q) * beta0 - q * q * beta0 * beta0;
    else
        radicand = two * two - q * q * beta0 * beta0;
    return l2p2 / (two * l2p3) * radicand;
}

} // namespace

GnsPodlesBasis::GnsPodlesBasis(const LmnBasis& heis, const PodlesC& c, HalfInt l_max)
    : heis_(&heis), c_(c), l_max_(l_max) {
    if (!l_max.is_integer() || l_max.twice < 0)
        throw std::invalid_argument("GNS Podles basis is indexed by integer l >= 0");
    if (l_max > heis.level())
        throw std::invalid_argument("GNS Podles basis needs a Heisenberg basis of at least level l_max");
    const LadderCtx& ctx = heis.exact_ctx();
    const Rational& q = ctx.q;
    LCoordElement bstar = embed_podles_exact(ctx, PodlesGen::Bstar, c);

    // psi(u* u), exact; used to anchor the raising norms against the
    // alpha_0(l) closed form (one direct pairing per level)
    auto norm2_direct = [&](const LCoordElement& u) -> QSqrtRat {
        return heis.haar_exact(coord_mul(ctx, coord_star(ctx, u), u));
    };

    std::map<std::pair<int, int>, LCoordElement> built;
    std::map<std::pair<int, int>, QSqrtRat> built_norm2;
    built[{0, 0}] = coord_one(ctx);
    built_norm2[{0, 0}] = QSqrtRat{1, 0};

    const Rational one_q2 = 1 + q * q;
    for (int tl = 0; tl + 2 <= l_max.twice; tl += 2) {
        const auto& top = built[{tl, tl}];
        // pi_0(x_1) v^l_l = alpha_0(l) v^{l+1}_{l+1} and x_1 = -(1+q^2)^{1/2} B*,
        // so -B* v^l_l is a positive multiple of v^{l+1}_{l+1}.
        LCoordElement raised = coord_scale(ctx, LaurentScalar::integer(-1), coord_mul(ctx, bstar, top));
        QSqrtRat n2 = norm2_direct(raised);
        // ||B* v||^2 / ||v||^2 = alpha_0(l)^2 / (1+q^2), exactly
        Rational expected = exact_alpha0_sq(tl, q, c) / one_q2;
        QSqrtRat predicted = qs_scale(expected, built_norm2[{tl, tl}]);
        if (!(n2 == predicted))
            throw std::runtime_error("pi_0(x_1) raising norm does not match alpha_0(l) (exact check)");
        built[{tl + 2, tl + 2}] = std::move(raised);
        built_norm2[{tl + 2, tl + 2}] = n2;
    }
    // lambda(e) lowering: norms by the spin-l recursion, verified wholesale by
    // the Gram check on the |lmn> coordinates below
    for (int tl = 0; tl <= l_max.twice; tl += 2)
        for (int tm = tl; tm > -tl; tm -= 2) {
            const auto& cur = built[{tl, tm}];
            LCoordElement low = act_left_ef(ctx, cur, true);
            Rational ratio = exact_qint_rat(tl - tm + 2, q) * exact_qint_rat(tl + tm, q);
            built_norm2[{tl, tm - 2}] = qs_scale(ratio, built_norm2[{tl, tm}]);
            built[{tl, tm - 2}] = std::move(low);
        }

    std::vector<int> sector;
    for (auto& [key, vec] : built) {
        index_[key] = static_cast<int>(labels_.size());
        labels_.emplace_back(HalfInt(key.first), HalfInt(key.second));
        raw_.push_back(std::move(vec));
        norms_.push_back(std::sqrt(qs_to_double(built_norm2[key], q)));
        sector.push_back(key.first);
    }
    std::ostringstream nm;
    nm << "gns-podles(lmax=" << l_max.str() << ",q=" << heis.q() << ",c=" << c.str() << ")";
    space_ = make_space(nm.str(), sector, l_max.twice);

    lmn_coords_.resize(heis.dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        Vector col = heis.project_exact(raw_[j]);
        lmn_coords_.col(j) = col / norms_[j];
    }

    Matrix g = lmn_coords_.adjoint() * lmn_coords_;
    double dev = (g - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
    if (dev > 1e-12)
        throw std::runtime_error("GNS Podles basis Gram deviates from identity by " + std::to_string(dev));
}

int GnsPodlesBasis::index_of(HalfInt l, HalfInt m) const {
    auto it = index_.find({l.twice, m.twice});
    return it == index_.end() ? -1 : it->second;
}

TruncatedOperator GnsPodlesBasis::compress_heisenberg(const TruncatedOperator& op) const {
    if (!op.space || op.space->id != heis_->space()->id)
        throw std::logic_error("compress_heisenberg expects an operator on the |lmn> basis");
    return {space_, lmn_coords_.adjoint() * op.mat * lmn_coords_};
}

TruncatedOperator GnsPodlesBasis::generator_matrix(PodlesOp op) const {
    PodlesGen g;
    switch (op) {
        case PodlesOp::A: g = PodlesGen::A; break;
        case PodlesOp::B: g = PodlesGen::B; break;
        case PodlesOp::Bstar: g = PodlesGen::Bstar; break;
        case PodlesOp::X0: g = PodlesGen::X0; break;
        case PodlesOp::X1: g = PodlesGen::X1; break;
        case PodlesOp::Xm1: g = PodlesGen::Xm1; break;
    }
    NumericCtx nctx(heis_->q());
    TruncatedOperator pi = pi_psi_matrix(*heis_, embed_podles_numeric(nctx, g, c_));
    return compress_heisenberg(pi);
}

Matrix GnsPodlesBasis::star_matrix() const {
    // star is antilinear: column j holds the expansion of star(v_j)
    return lmn_coords_.adjoint() * heis_->star_matrix() * lmn_coords_.conjugate();
}

TruncatedOperator GnsPodlesBasis::lambda_gen(UqGen g) const {
    return compress_heisenberg(lambda_gen_matrix(*heis_, g));
}

CrossValidationReport cross_validate_pi0(const LmnBasis& heis, const PodlesC& c, HalfInt l_max) {
    GnsPodlesBasis gns(heis, c, l_max);
    QParam params(heis.q(), c);
    PodlesBasis abstract(params, HalfInt(0), l_max);
    if (abstract.dim() != gns.dim())
        throw std::logic_error("GNS and abstract Podles bases disagree in dimension");

    CrossValidationReport report;
    for (PodlesOp op : {PodlesOp::A, PodlesOp::B}) {
        Matrix ma = pi_j_matrix(abstract, op).mat;
        Matrix mg = gns.generator_matrix(op).mat;
        for (int colidx = 0; colidx < gns.dim(); ++colidx) {
            if (gns.labels()[colidx].first.twice > l_max.twice - 2)
                continue; // boundary columns are compressions, not exact
            for (int row = 0; row < gns.dim(); ++row) {
                report.max_deviation =
                    std::max(report.max_deviation, std::abs(ma(row, colidx) - mg(row, colidx)));
                ++report.compared_entries;
            }
        }
    }
    return report;
}

} // namespace qsu2
