//
// Project     : qsu2
// Module      : real_structure
//

#include "qsu2/real_structure.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace qsu2 {

namespace {

struct GenCache {
    Matrix E, F, K, Kinv;

    Matrix action(const UqMono& m) const {
        int n = static_cast<int>(E.rows());
        Matrix acc = Matrix::Identity(n, n);
        for (int i = 0; i < m.ej; ++i) acc = E * acc;
        for (int i = 0; i < std::abs(m.kn); ++i) acc = (m.kn > 0 ? K : Kinv) * acc;
        for (int i = 0; i < m.fi; ++i) acc = F * acc;
        return acc;
    }
};

GenCache lambda_cache(const LmnBasis& basis) {
    return {lambda_gen_matrix(basis, UqGen::E).mat, lambda_gen_matrix(basis, UqGen::F).mat,
            lambda_gen_matrix(basis, UqGen::K).mat, lambda_gen_matrix(basis, UqGen::Kinv).mat};
}

GenCache sigma_half_cache(double q) {
    return {sigma_half(q, UqGen::E), sigma_half(q, UqGen::F), sigma_half(q, UqGen::K),
            sigma_half(q, UqGen::Kinv)};
}

/// Sparse copy keeping the exact zero pattern (entries are exact-derived, so
/// structural zeros really are 0.0; pruning by magnitude would be wrong here).
SparseMatrix to_sparse_exact(const Matrix& m) {
    std::vector<Eigen::Triplet<complexd>> trip;
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            if (m(r, c) != complexd(0.0, 0.0))
                trip.emplace_back(r, c, m(r, c));
    SparseMatrix out(m.rows(), m.cols());
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

/// permutation V (x) V_{1/2} -> V_{1/2} (x) V:  (t = 2i+s) -> (u = s N + i)
SparseMatrix flip_to_spin_major(int n) {
    std::vector<Eigen::Triplet<complexd>> trip;
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 2; ++s)
            trip.emplace_back(s * n + i, 2 * i + s, complexd(1.0, 0.0));
    SparseMatrix q(2 * n, 2 * n);
    q.setFromTriplets(trip.begin(), trip.end());
    return q;
}

/// R = (sigma_{1/2} (x) lambda)(q fe (x) k + q ef (x) k^{-1} + (q - q^{-1}) q^{1/2} f (x) e)
/// on V_{1/2} (x) V in spin-major coordinates.  Built sparse: the q-power
/// scales in these operators would otherwise turn structural zeros into
/// dense-product dust that pollutes the small singular directions.
SparseMatrix r_matrix_spin_major(double q, const GenCache& lam, const GenCache& sig) {
    Matrix sfe = sig.F * sig.E; // projector onto +1/2
    Matrix sef = sig.E * sig.F; // projector onto -1/2
    SparseMatrix t1 = Eigen::kroneckerProduct(to_sparse_exact(sfe), to_sparse_exact(lam.K)).eval();
    SparseMatrix t2 = Eigen::kroneckerProduct(to_sparse_exact(sef), to_sparse_exact(lam.Kinv)).eval();
    SparseMatrix t3 = Eigen::kroneckerProduct(to_sparse_exact(sig.F), to_sparse_exact(lam.E)).eval();
    return SparseMatrix(q * t1 + q * t2 + (q - 1.0 / q) * std::sqrt(q) * t3);
}

} // namespace

AntilinearOperator tomita_su2(const LmnBasis& basis) {
    return {basis.space(), basis.star_matrix()};
}

AntilinearOperator modular_conjugation_su2(const LmnBasis& basis, const AntilinearOperator& t_psi) {
    Matrix w = lambda_gen_matrix(basis, UqGen::K).mat * rho_gen_matrix(basis, UqGen::Kinv).mat;
    return {basis.space(), w * t_psi.mat};
}

Matrix t_half_matrix(double q) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = complexd(0.0, 1.0) * std::sqrt(q);        //  T |+> =  i q^{1/2} |->
    m(1, 0) = complexd(0.0, -1.0) / std::sqrt(q);       //  T |-> = -i q^{-1/2} |+>
    return m;
}

Matrix sigma_half_action(double q, const NUqElement& h) {
    GenCache sig = sigma_half_cache(q);
    Matrix acc = Matrix::Zero(2, 2);
    for (const auto& [m, c] : h)
        acc += c * sig.action(m);
    return acc;
}

TruncatedOperator tensor_action_su2(const SpinorBasis& sb, const NUqElement& h) {
    const LmnBasis& basis = sb.lmn();
    NumericCtx ctx(basis.q());
    GenCache lam = lambda_cache(basis);
    GenCache sig = sigma_half_cache(basis.q());
    Matrix acc = Matrix::Zero(sb.dim(), sb.dim());
    for (const auto& [legs, c] : uq_coproduct(ctx, h))
        acc += c * Eigen::kroneckerProduct(lam.action(legs.first), sig.action(legs.second)).eval();
    return {sb.tensor_space(), std::move(acc)};
}

TomitaSu2::TomitaSu2(const SpinorBasis& sb) : sb_(&sb) {
    const LmnBasis& basis = sb.lmn();
    const double q = basis.q();
    const int n = basis.dim();

    t_psi_ = tomita_su2(basis);
    GenCache lam = lambda_cache(basis);
    GenCache sig = sigma_half_cache(q);
    SparseMatrix r = r_matrix_spin_major(q, lam, sig);
    r_ = Matrix(r);
    SparseMatrix flip = flip_to_spin_major(n);
    SparseMatrix rhat = SparseMatrix(flip.transpose()) * r;
    rhat_ = Matrix(rhat);

    SparseMatrix t0 =
        flip * SparseMatrix(Eigen::kroneckerProduct(to_sparse_exact(t_psi_.mat),
                                                    to_sparse_exact(t_half_matrix(q))));
    T_ = {sb.tensor_space(), Matrix(SparseMatrix(rhat * t0))};

    BasisPolar pd = polar_in_basis(T_, Matrix(sb.isometry()));
    J_ = pd.antiunitary;
    absT_ = pd.positive;
    min_singular_ = pd.min_singular_value;

    J0_ = compose(T_, k_weights(-1, 1));
}

TruncatedOperator TomitaSu2::q_power_dirac(int sign) const {
    const double q = sb_->q();
    Vector d(sb_->dim());
    for (int i = 0; i < sb_->dim(); ++i)
        d(i) = std::pow(q, sign * sb_->eigenvalue(i));
    Matrix m = Matrix(sb_->isometry() * d.asDiagonal() * SparseMatrix(sb_->isometry().adjoint()));
    return {sb_->tensor_space(), std::move(m)};
}

TruncatedOperator TomitaSu2::k_weights(int a, int b) const {
    const LmnBasis& basis = sb_->lmn();
    const double q = basis.q();
    GenCache lam = lambda_cache(basis);
    GenCache sig = sigma_half_cache(q);
    const int n = basis.dim();
    Matrix la = Matrix::Identity(n, n), rb = Matrix::Identity(n, n);
    for (int i = 0; i < std::abs(a); ++i) la = (a > 0 ? lam.K : lam.Kinv) * la;
    Matrix rk = rho_gen_matrix(basis, b > 0 ? UqGen::K : UqGen::Kinv).mat;
    for (int i = 0; i < std::abs(b); ++i) rb = rk * rb;
    Matrix sa = Matrix::Identity(2, 2);
    for (int i = 0; i < std::abs(a); ++i) sa = (a > 0 ? sig.K : sig.Kinv) * sa;
    Matrix larb = la * rb;
    Matrix m = Eigen::kroneckerProduct(larb, sa);
    return {sb_->tensor_space(), std::move(m)};
}

namespace {

complexd i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

} // namespace

TomitaPodles::TomitaPodles(const PodlesSpinorBasis& sb) : sb_(&sb) {
    const double q = sb.params().q;
    const int m = sb.base_dim();

    Matrix tpsi;
    if (sb.is_gns()) {
        tpsi = sb.base_star();
    } else {
        // closed form T~_psi v^l_m = (-q)^m v^l_{-m} (validated against the GNS
        // star map in the test suite)
        tpsi = Matrix::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            auto [l, mm] = sb.base_labels()[i];
            int target = sb.base_index_of(l, -mm);
            double mv = mm.value();
            tpsi(target, i) = std::pow(-q, mv);
        }
    }
    t_psi_ = {sb.is_gns() ? sb.gns().space() : nullptr, tpsi};
    // keep a valid space tag for the base operator
    if (!t_psi_.space)
        t_psi_.space = make_space("podles-base(tomita)", std::vector<int>(m, 0), 0);

    GenCache sig = sigma_half_cache(q);
    GenCache lam{sb.base_sigma(UqGen::E), sb.base_sigma(UqGen::F), sb.base_sigma(UqGen::K),
                 sb.base_sigma(UqGen::Kinv)};
    SparseMatrix r = r_matrix_spin_major(q, lam, sig);
    SparseMatrix flip = flip_to_spin_major(m);
    SparseMatrix rhat = SparseMatrix(flip.transpose()) * r;
    rhat_ = Matrix(rhat);

    // The composed T~ cancels intermediate terms down to columns of size
    // ~ q^{2 l}; past roughly 14 decimal digits of headroom that cancellation
    // is unresolvable in doubles, so deep truncations instantiate the closed
    // forms instead (which the composition route verifies at moderate levels).
    const double digits = (4.0 * sb.l_max().value() + 2.0) * std::log10(1.0 / q);
    if (digits < 10.0) {
        SparseMatrix t0 = flip * SparseMatrix(Eigen::kroneckerProduct(
                                     to_sparse_exact(tpsi), to_sparse_exact(t_half_matrix(q))));
        T_ = {sb.tensor_space(), Matrix(SparseMatrix(rhat * t0))};
        BasisPolar pd = polar_in_basis(T_, sb.isometry());
        J_ = pd.antiunitary;
        absT_ = pd.positive;
        min_singular_ = pd.min_singular_value;
        return;
    }
    if (sb.params().c.finite)
        throw std::invalid_argument(
            "deep-truncation Tomita operators use the c = inf closed forms; lower l_max for finite c");

    const int dim = sb.dim();
    Matrix tsp = Matrix::Zero(dim, dim);
    Matrix jsp = Matrix::Zero(dim, dim);
    Eigen::VectorXd norms(dim);
    for (int c = 0; c < dim; ++c) {
        const PodlesSpinorLabel& lab = sb.labels()[c];
        int rrow = sb.index_of(PodlesSpinorLabel{lab.l, -lab.m, lab.up});
        complexd phase = i_power(lab.m.twice);
        double ll = lab.l.value(), mm = lab.m.value();
        complexd tval, jval;
        if (!lab.up) {
            tval = phase * std::pow(q, ll + mm + 0.5);
            jval = phase;
        } else {
            tval = -phase * std::pow(q, -ll + mm - 0.5);
            jval = -phase;
        }
        tsp(rrow, c) = tval;
        jsp(rrow, c) = jval;
        norms(c) = std::abs(tval);
    }
    const Matrix& u = sb.isometry();
    T_ = {sb.tensor_space(), u * tsp * u.transpose()};
    J_ = {sb.tensor_space(), u * jsp * u.transpose()};
    absT_ = {sb.tensor_space(), u * norms.asDiagonal() * u.adjoint()};
    min_singular_ = norms.minCoeff();
}

TruncatedOperator TomitaPodles::q_power_dirac(int sign) const {
    const double q = sb_->params().q;
    Vector d(sb_->dim());
    for (int i = 0; i < sb_->dim(); ++i)
        d(i) = std::pow(q, sign * sb_->eigenvalue(i));
    Matrix m = sb_->isometry() * d.asDiagonal() * sb_->isometry().adjoint();
    return {sb_->tensor_space(), std::move(m)};
}

TruncatedOperator TomitaPodles::k_weight(int a) const {
    TruncatedOperator k = sb_->lambda(a >= 0 ? UqGen::K : UqGen::Kinv);
    Matrix m = Matrix::Identity(sb_->dim(), sb_->dim());
    for (int i = 0; i < std::abs(a); ++i)
        m = k.mat * m;
    return {sb_->tensor_space(), std::move(m)};
}

namespace {

NUqElement k_sandwich(const NumericCtx& ctx, UqGen g) {
    // k S(h)* k^{-1}
    auto h = uq_gen(ctx, g);
    auto shs = uq_star(ctx, uq_antipode(ctx, h));
    return uq_mul(ctx, uq_mul(ctx, uq_gen(ctx, UqGen::K), shs), uq_gen(ctx, UqGen::Kinv));
}

} // namespace

double equivariance_defect_su2(const SpinorBasis& sb, const AntilinearOperator& j, int margin_twice) {
    NumericCtx ctx(sb.q());
    double worst = 0.0;
    for (UqGen g : {UqGen::E, UqGen::F, UqGen::K}) {
        TruncatedOperator lhs = conjugate_by(j, tensor_action_su2(sb, uq_gen(ctx, g)));
        TruncatedOperator rhs = tensor_action_su2(sb, k_sandwich(ctx, g));
        worst = std::max(worst, interior_norm(op_sub(lhs, rhs), margin_twice));
    }
    return worst;
}

double equivariance_defect_lmn(const LmnBasis& basis, const AntilinearOperator& j, int margin_twice) {
    NumericCtx ctx(basis.q());
    double worst = 0.0;
    for (UqGen g : {UqGen::E, UqGen::F, UqGen::K}) {
        TruncatedOperator lam{basis.space(), lambda_gen_matrix(basis, g).mat};
        TruncatedOperator lhs = conjugate_by(j, lam);
        TruncatedOperator rhs = lambda_matrix(basis, k_sandwich(ctx, g));
        worst = std::max(worst, interior_norm(op_sub(lhs, rhs), margin_twice));
    }
    return worst;
}

double antilinear_equivariance_defect_su2(const SpinorBasis& sb, const AntilinearOperator& t,
                                          int margin_twice) {
    NumericCtx ctx(sb.q());
    double worst = 0.0;
    for (UqGen g : {UqGen::E, UqGen::F, UqGen::K}) {
        auto h = uq_gen(ctx, g);
        AntilinearOperator lhs = compose(t, tensor_action_su2(sb, h));
        AntilinearOperator rhs = compose(tensor_action_su2(sb, uq_star(ctx, uq_antipode(ctx, h))), t);
        Matrix diff = lhs.mat - rhs.mat;
        worst = std::max(worst, interior_norm(diff, *sb.tensor_space(), margin_twice));
    }
    return worst;
}

namespace {

DecayTable decay_table_from_spinor_matrix(const PodlesSpinorBasis& sb, const Matrix& msp,
                                          bool with_singular_values);

} // namespace

DecayTable commutant_decay(const PodlesSpinorBasis& sb, const AntilinearOperator& jlike, PodlesOp x,
                           PodlesOp y, bool with_dirac, bool with_singular_values) {
    if (antiunitarity_defect(jlike) < 1e-8) {
        DecayEngine engine(sb, jlike);
        return engine.table(x, y, with_dirac, with_singular_values);
    }
    // generic (non-antiunitary conjugator, e.g. T itself): dense route
    TruncatedOperator pix = sb.pi(x);
    TruncatedOperator jyj = conjugate_by(jlike, sb.pi(y));
    TruncatedOperator left = with_dirac ? op_commutator(sb.dirac(), pix) : pix;
    TruncatedOperator comm = op_commutator(left, jyj);
    Matrix msp = sb.isometry().adjoint() * comm.mat * sb.isometry();
    return decay_table_from_spinor_matrix(sb, msp, with_singular_values);
}

DecayEngine::DecayEngine(const PodlesSpinorBasis& sb, const AntilinearOperator& jlike) : sb_(&sb) {
    const Matrix& u = sb.isometry();
    jsp_ = u.adjoint() * jlike.mat * u.conjugate();
    if ((jsp_.adjoint() * jsp_ - Matrix::Identity(sb.dim(), sb.dim())).cwiseAbs().maxCoeff() > 1e-8)
        throw std::invalid_argument("DecayEngine expects an antiunitary conjugator");
    dirac_diag_.resize(sb.dim());
    for (int i = 0; i < sb.dim(); ++i)
        dirac_diag_(i) = sb.eigenvalue(i);
}

const SparseMatrix& DecayEngine::op_spinor(PodlesOp op) {
    auto it = ops_.find(op);
    if (it != ops_.end())
        return it->second;
    const Matrix& u = sb_->isometry();
    Matrix dense = u.adjoint() * sb_->pi(op).mat * u;
    double cap = dense.cwiseAbs().maxCoeff();
    std::vector<Eigen::Triplet<complexd>> trip;
    for (int c = 0; c < dense.cols(); ++c)
        for (int r = 0; r < dense.rows(); ++r)
            if (std::abs(dense(r, c)) > 1e-14 * cap)
                trip.emplace_back(r, c, dense(r, c));
    SparseMatrix sp(dense.rows(), dense.cols());
    sp.setFromTriplets(trip.begin(), trip.end());
    return ops_.emplace(op, std::move(sp)).first->second;
}

const SparseMatrix& DecayEngine::conjugated(PodlesOp op) {
    auto it = conj_.find(op);
    if (it != conj_.end())
        return it->second;
    const SparseMatrix& a = op_spinor(op);
    // J X J^{-1} in spinor coordinates; jsp_ is antiunitary
    Matrix dense = jsp_ * Matrix(a).conjugate() * jsp_.adjoint();
    double cap = dense.cwiseAbs().maxCoeff();
    std::vector<Eigen::Triplet<complexd>> trip;
    for (int c = 0; c < dense.cols(); ++c)
        for (int r = 0; r < dense.rows(); ++r)
            if (std::abs(dense(r, c)) > 1e-14 * cap)
                trip.emplace_back(r, c, dense(r, c));
    SparseMatrix sp(dense.rows(), dense.cols());
    sp.setFromTriplets(trip.begin(), trip.end());
    return conj_.emplace(op, std::move(sp)).first->second;
}

DecayTable DecayEngine::table(PodlesOp x, PodlesOp y, bool with_dirac, bool with_singular_values) {
    SparseMatrix a = op_spinor(x);
    const SparseMatrix& b = conjugated(y);
    if (with_dirac) {
        // [D, pi(x)] scales each entry by (d_r - d_c); D is diagonal here
        SparseMatrix scaled = a;
        for (int k = 0; k < scaled.outerSize(); ++k)
            for (SparseMatrix::InnerIterator itr(scaled, k); itr; ++itr)
                itr.valueRef() *= dirac_diag_(itr.row()) - dirac_diag_(itr.col());
        a = std::move(scaled);
    }
    SparseMatrix comm = SparseMatrix(a * b) - SparseMatrix(b * a);
    return decay_table_from_spinor_matrix(*sb_, Matrix(comm), with_singular_values);
}

namespace {

DecayTable decay_table_from_spinor_matrix(const PodlesSpinorBasis& sb, const Matrix& msp,
                                          bool with_singular_values) {
    DecayTable table;
    std::map<int, std::vector<int>> sectors;
    std::vector<int> interior_cols;
    for (int i = 0; i < sb.dim(); ++i) {
        sectors[sb.labels()[i].l.twice].push_back(i);
        if (sb.labels()[i].l.twice <= sb.l_max().twice - 2)
            interior_cols.push_back(i);
    }
    int cum = 0;
    for (auto& [tl, idx] : sectors) {
        // the sector-l slice of the commutator (its diagonal block can vanish
        // identically for symmetric pairs, so take the whole row block against
        // truncation-exact columns)
        double bn = operator_norm(submatrix(msp, idx, interior_cols));
        cum += static_cast<int>(idx.size());
        table.block_norms.emplace_back(HalfInt(tl), bn);
        table.cumulative_dims.push_back(cum);
    }
    table.max_norm = 0.0;
    for (auto& [l, b] : table.block_norms)
        table.max_norm = std::max(table.max_norm, b);

    // least squares of log b_l over the interior sector range l in [2, l_max-2]
    std::vector<std::pair<double, double>> pts;
    for (auto& [l, b] : table.block_norms)
        if (l.twice >= 4 && l.twice <= sb.l_max().twice - 4 && b > 1e-14 * std::max(1.0, table.max_norm))
            pts.emplace_back(l.value(), std::log(b));
    if (pts.size() >= 2) {
        double sx = 0, sy = 0;
        for (auto& [a, b] : pts) { sx += a; sy += b; }
        double mx = sx / pts.size(), my = sy / pts.size();
        double num = 0, den = 0;
        for (auto& [a, b] : pts) {
            num += (a - mx) * (b - my);
            den += (a - mx) * (a - mx);
        }
        table.fitted_ratio = std::exp(num / den);
    }

    std::vector<int> interior;
    for (int i = 0; i < sb.dim(); ++i)
        if (sb.labels()[i].l.twice <= sb.l_max().twice - 4)
            interior.push_back(i);
    Matrix sub = submatrix(msp, interior, interior);
    if (sub.rows() > 0) {
        if (with_singular_values) {
            Eigen::SelfAdjointEigenSolver<Matrix> es(sub.adjoint() * sub, Eigen::EigenvaluesOnly);
            table.singular_values = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().reverse();
            table.interior_norm = table.singular_values(0);
        } else {
            table.interior_norm = operator_norm(sub);
        }
    }
    return table;
}

} // namespace


bool tail_decreasing(const DecayTable& table, double power, double floor) {
    // t_l = N_l^p b_l with b_l ~ q^{c l} and N_l ~ l^2 turns over at moderate l
    // and must then decrease monotonically through the truncation tail
    std::vector<double> t;
    for (size_t k = 0; k < table.block_norms.size(); ++k)
        if (table.block_norms[k].second > floor)
            t.push_back(std::pow(static_cast<double>(table.cumulative_dims[k]), power) *
                        table.block_norms[k].second);
    if (t.size() < 4)
        return true;
    size_t peak = 0;
    for (size_t k = 1; k < t.size(); ++k)
        if (t[k] > t[peak])
            peak = k;
    if (peak + 2 >= t.size())
        return false; // has not turned over inside the truncation
    for (size_t k = peak; k + 1 < t.size(); ++k)
        if (t[k + 1] > t[k] * (1.0 + 1e-9))
            return false;
    return true;
}

} // namespace qsu2
