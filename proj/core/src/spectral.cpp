//
// Project     : qsu2
// Module      : spectral
//

#include "qsu2/spectral.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <numeric>
#include <sstream>

namespace qsu2 {

double spinor_coeff_C(double q, HalfInt j, HalfInt m) {
    if ((j - m).twice < 0 || (j + m).twice < 0)
        return 0.0;
    return qpow_halfint(q, HalfInt(-(j + m).twice / 2)) * std::sqrt(qint(j - m, q)) /
           std::sqrt(qint(HalfInt(2 * j.twice), q));
}

double spinor_coeff_S(double q, HalfInt j, HalfInt m) {
    if ((j - m).twice < 0 || (j + m).twice < 0)
        return 0.0;
    return qpow_halfint(q, HalfInt((j - m).twice / 2)) * std::sqrt(qint(j + m, q)) /
           std::sqrt(qint(HalfInt(2 * j.twice), q));
}

Matrix sigma_half(double q, UqGen g) {
    Matrix m = Matrix::Zero(2, 2);
    switch (g) {
        case UqGen::K:
            m(0, 0) = qpow_halfint(q, HalfInt(-1));
            m(1, 1) = qpow_halfint(q, HalfInt(1));
            break;
        case UqGen::Kinv:
            m(0, 0) = qpow_halfint(q, HalfInt(1));
            m(1, 1) = qpow_halfint(q, HalfInt(-1));
            break;
        case UqGen::E:
            m(0, 1) = 1.0; // e |1/2,+1/2> = |1/2,-1/2>
            break;
        case UqGen::F:
            m(1, 0) = 1.0;
            break;
    }
    return m;
}

// ---------------------------------------------------------------------------
// SpinorBasis (quantum SU(2) side)
// ---------------------------------------------------------------------------

SpinorBasis::SpinorBasis(const LmnBasis& basis) : basis_(&basis) {
    const double q = basis.q();
    const int N = basis.dim();
    const int tL = basis.level().twice;

    std::vector<int> sector(2 * N);
    for (int i = 0; i < N; ++i) {
        sector[2 * i] = basis.labels()[i].l.twice;
        sector[2 * i + 1] = basis.labels()[i].l.twice;
    }
    std::ostringstream nm;
    nm << "spinor(" << basis.space()->name << ")";
    space_ = make_space(nm.str(), sector, tL);

    std::vector<Eigen::Triplet<complexd>> trip;
    auto new_column = [&](SpinorLabel lab) {
        int col = static_cast<int>(labels_.size());
        labels_.push_back(lab);
        index_[{lab.j.twice, lab.m.twice, lab.n.twice, lab.up}] = col;
        return col;
    };

    // down family: legs at level j - 1/2, j = 1/2, 1, ..., L + 1/2
    for (int tj = 1; tj <= tL + 1; ++tj) {
        HalfInt j(tj);
        for (int tm = tj; tm >= -tj; tm -= 2) {
            HalfInt m(tm);
            double C = spinor_coeff_C(q, j, m);
            double S = spinor_coeff_S(q, j, m);
            int iup_valid = (std::abs(tm + 1) <= tj - 1);
            int idn_valid = (std::abs(tm - 1) <= tj - 1);
            if ((!iup_valid && std::abs(C) > 1e-15) || (!idn_valid && std::abs(S) > 1e-15))
                throw std::logic_error("C/S coefficient does not vanish at the multiplet edge");
            for (int tn = tj - 1; tn >= -(tj - 1); tn -= 2) {
                HalfInt n(tn);
                int col = new_column(SpinorLabel{j, m, n, false});
                if (iup_valid && C != 0.0)
                    trip.emplace_back(2 * basis.index_of(HalfInt(tj - 1), m + HalfInt(1), n) + 0, col,
                                      complexd(C, 0.0));
                if (idn_valid && S != 0.0)
                    trip.emplace_back(2 * basis.index_of(HalfInt(tj - 1), m - HalfInt(1), n) + 1, col,
                                      complexd(S, 0.0));
            }
        }
    }
    // up family: legs at level j + 1/2, j = 0, 1/2, ..., L - 1/2
    for (int tj = 0; tj + 1 <= tL; ++tj) {
        HalfInt j(tj);
        HalfInt j1 = j + HalfInt::whole(1);
        for (int tm = tj; tm >= -tj; tm -= 2) {
            HalfInt m(tm);
            double S = spinor_coeff_S(q, j1, m);
            double C = spinor_coeff_C(q, j1, m);
            for (int tn = tj + 1; tn >= -(tj + 1); tn -= 2) {
                HalfInt n(tn);
                int iup = basis.index_of(HalfInt(tj + 1), m + HalfInt(1), n);
                int idn = basis.index_of(HalfInt(tj + 1), m - HalfInt(1), n);
                if (iup < 0 || idn < 0)
                    throw std::logic_error("up spinor hits a missing basis vector");
                int col = new_column(SpinorLabel{j, m, n, true});
                trip.emplace_back(2 * iup + 0, col, complexd(-S, 0.0));
                trip.emplace_back(2 * idn + 1, col, complexd(C, 0.0));
            }
        }
    }

    if (static_cast<int>(labels_.size()) != 2 * N)
        throw std::logic_error("spinor basis does not have 2N vectors: " +
                               std::to_string(labels_.size()) + " vs " + std::to_string(2 * N));
    U_.resize(2 * N, 2 * N);
    U_.setFromTriplets(trip.begin(), trip.end());

    Matrix g = Matrix(SparseMatrix(U_.adjoint()) * U_) - Matrix::Identity(2 * N, 2 * N);
    double dev = g.cwiseAbs().maxCoeff();
    if (dev > 1e-10)
        throw std::runtime_error("spinor basis is not orthonormal; deviation " + std::to_string(dev));
}

int SpinorBasis::index_of(const SpinorLabel& lab) const {
    auto it = index_.find({lab.j.twice, lab.m.twice, lab.n.twice, lab.up});
    return it == index_.end() ? -1 : it->second;
}

double SpinorBasis::eigenvalue(int column) const {
    const SpinorLabel& lab = labels_[column];
    double v = lab.j.value() + 0.5;
    return lab.up ? v : -v;
}

TruncatedOperator SpinorBasis::dirac() const {
    Vector d(dim());
    for (int i = 0; i < dim(); ++i)
        d(i) = eigenvalue(i);
    Matrix m = Matrix(U_ * d.asDiagonal() * SparseMatrix(U_.adjoint()));
    return {space_, std::move(m)};
}

TruncatedOperator SpinorBasis::pi(const TruncatedOperator& pi_on_lmn) const {
    if (!pi_on_lmn.space || pi_on_lmn.space->id != basis_->space()->id)
        throw std::logic_error("pi expects an operator on the underlying |lmn> basis");
    Matrix m = Eigen::kroneckerProduct(pi_on_lmn.mat, Matrix::Identity(2, 2));
    return {space_, std::move(m)};
}

TruncatedOperator SpinorBasis::lambda(UqGen g) const {
    const double q = basis_->q();
    Matrix out;
    switch (g) {
        case UqGen::K:
            out = Eigen::kroneckerProduct(lambda_gen_matrix(*basis_, UqGen::K).mat, sigma_half(q, UqGen::K));
            break;
        case UqGen::Kinv:
            out = Eigen::kroneckerProduct(lambda_gen_matrix(*basis_, UqGen::Kinv).mat,
                                          sigma_half(q, UqGen::Kinv));
            break;
        case UqGen::E:
            out = Eigen::kroneckerProduct(lambda_gen_matrix(*basis_, UqGen::E).mat, sigma_half(q, UqGen::K)) +
                  Eigen::kroneckerProduct(lambda_gen_matrix(*basis_, UqGen::Kinv).mat,
                                          sigma_half(q, UqGen::E));
            break;
        case UqGen::F:
            out = Eigen::kroneckerProduct(lambda_gen_matrix(*basis_, UqGen::F).mat, sigma_half(q, UqGen::K)) +
                  Eigen::kroneckerProduct(lambda_gen_matrix(*basis_, UqGen::Kinv).mat,
                                          sigma_half(q, UqGen::F));
            break;
    }
    return {space_, std::move(out)};
}

TruncatedOperator SpinorBasis::rho(UqGen g) const {
    Matrix m = Eigen::kroneckerProduct(rho_gen_matrix(*basis_, g).mat, Matrix::Identity(2, 2));
    return {space_, std::move(m)};
}

std::vector<SpectrumRow> dirac_su2_spectrum(const SpinorBasis& sb) {
    const LmnBasis& basis = sb.lmn();
    std::map<int, int> counts; // twice the eigenvalue -> multiplicity
    for (int tl = 0; tl <= basis.level().twice; ++tl) {
        // tensor indices of the H_l (x) V_{1/2} block
        std::vector<int> block;
        for (int i = 0; i < basis.dim(); ++i)
            if (basis.labels()[i].l.twice == tl) {
                block.push_back(2 * i);
                block.push_back(2 * i + 1);
            }
        if (block.empty())
            continue;
        // columns supported on this block
        std::vector<int> cols;
        Vector d(sb.dim());
        for (int c = 0; c < sb.dim(); ++c) {
            const SpinorLabel& lab = sb.labels()[c];
            int leg = lab.up ? lab.j.twice + 1 : lab.j.twice - 1;
            if (leg == tl)
                cols.push_back(c);
            d(c) = sb.eigenvalue(c);
        }
        Matrix ublk = submatrix(Matrix(sb.isometry()), block, cols);
        Vector dblk(cols.size());
        for (size_t k = 0; k < cols.size(); ++k)
            dblk(k) = d(cols[k]);
        Matrix dm = ublk * dblk.asDiagonal() * ublk.adjoint();
        Eigen::SelfAdjointEigenSolver<Matrix> es(dm);
        for (int k = 0; k < es.eigenvalues().size(); ++k) {
            double ev = es.eigenvalues()(k);
            int twice = static_cast<int>(std::llround(2.0 * ev));
            if (std::abs(ev - 0.5 * twice) > 1e-9)
                throw std::runtime_error("Dirac eigenvalue is not a half-integer: " + std::to_string(ev));
            counts[twice] += 1;
        }
    }
    std::vector<SpectrumRow> rows;
    for (auto& [twice, mult] : counts) {
        SpectrumRow r;
        r.eigenvalue = 0.5 * twice;
        r.multiplicity = mult;
        r.sector = HalfInt(std::abs(twice) - 1);
        rows.push_back(r);
    }
    return rows;
}

double counting_exponent(const std::vector<SpectrumRow>& rows, double min_abs, double max_abs) {
    std::map<double, int> by_abs;
    for (const auto& r : rows)
        by_abs[std::abs(r.eigenvalue)] += r.multiplicity;
    std::vector<std::pair<double, double>> pts; // (log Lambda, log N)
    long long cumulative = 0;
    for (auto& [lam, mult] : by_abs) {
        cumulative += mult;
        if (lam >= min_abs - 1e-12 && lam <= max_abs + 1e-12 && cumulative > 0)
            pts.emplace_back(std::log(lam), std::log(static_cast<double>(cumulative)));
    }
    if (pts.size() < 2)
        throw std::invalid_argument("counting fit needs at least two points");
    double sx = 0, sy = 0;
    for (auto& [x, y] : pts) { sx += x; sy += y; }
    double mx = sx / pts.size(), my = sy / pts.size();
    double num = 0, den = 0;
    for (auto& [x, y] : pts) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    return num / den;
}

// ---------------------------------------------------------------------------
// PodlesSpinorBasis
// ---------------------------------------------------------------------------

PodlesSpinorBasis PodlesSpinorBasis::from_abstract(const QParam& params, HalfInt l_max) {
    PodlesSpinorBasis sb;
    sb.params_ = params;
    sb.l_max_ = l_max;
    sb.abstract_ = std::make_shared<PodlesBasis>(params, HalfInt(0), l_max);
    sb.base_labels_ = sb.abstract_->labels();
    for (int i = 0; i < sb.abstract_->dim(); ++i)
        sb.base_index_[{sb.base_labels_[i].first.twice, sb.base_labels_[i].second.twice}] = i;
    sb.base_space_ = sb.abstract_->space();
    sb.build_spinors();
    return sb;
}

PodlesSpinorBasis PodlesSpinorBasis::from_gns(const GnsPodlesBasis& gns) {
    PodlesSpinorBasis sb;
    sb.params_ = QParam(gns.heisenberg().q(), gns.c());
    sb.l_max_ = gns.l_max();
    sb.gns_ = &gns;
    sb.base_labels_ = gns.labels();
    for (int i = 0; i < gns.dim(); ++i)
        sb.base_index_[{sb.base_labels_[i].first.twice, sb.base_labels_[i].second.twice}] = i;
    sb.base_space_ = gns.space();
    sb.build_spinors();
    return sb;
}

const GnsPodlesBasis& PodlesSpinorBasis::gns() const {
    if (!gns_)
        throw std::logic_error("this Podles spinor basis has no GNS backend");
    return *gns_;
}

void PodlesSpinorBasis::build_spinors() {
    const double q = params_.q;
    const int M = base_dim();
    std::vector<int> sector(2 * M);
    for (int i = 0; i < M; ++i) {
        sector[2 * i] = base_labels_[i].first.twice;
        sector[2 * i + 1] = base_labels_[i].first.twice;
    }
    std::ostringstream nm;
    nm << "podles-spinor(" << base_space_->name << ")";
    space_ = make_space(nm.str(), sector, l_max_.twice);

    U_ = Matrix::Zero(2 * M, 2 * M);
    auto add = [&](PodlesSpinorLabel lab, int row, double val) {
        auto key = std::make_tuple(lab.l.twice, lab.m.twice, lab.up);
        auto it = index_.find(key);
        int col;
        if (it == index_.end()) {
            col = static_cast<int>(labels_.size());
            labels_.push_back(lab);
            index_[key] = col;
        } else {
            col = it->second;
        }
        if (row >= 0 && val != 0.0)
            U_(row, col) = val;
    };

    // down: legs at level l - 1/2;  up: legs at level l + 1/2
    for (int tl = 1; tl <= l_max_.twice + 1; tl += 2) {
        HalfInt l(tl);
        for (int tm = tl; tm >= -tl; tm -= 2) {
            HalfInt m(tm);
            double C = spinor_coeff_C(q, l, m);
            double S = spinor_coeff_S(q, l, m);
            int iup = base_index_of(HalfInt(tl - 1), m + HalfInt(1));
            int idn = base_index_of(HalfInt(tl - 1), m - HalfInt(1));
            PodlesSpinorLabel lab{l, m, false};
            add(lab, -1, 0.0);
            if (iup >= 0 && C != 0.0) add(lab, 2 * iup + 0, C);
            if (idn >= 0 && S != 0.0) add(lab, 2 * idn + 1, S);
        }
    }
    for (int tl = 1; tl + 1 <= l_max_.twice; tl += 2) {
        HalfInt l(tl);
        HalfInt l1 = l + HalfInt::whole(1);
        for (int tm = tl; tm >= -tl; tm -= 2) {
            HalfInt m(tm);
            double S = spinor_coeff_S(q, l1, m);
            double C = spinor_coeff_C(q, l1, m);
            int iup = base_index_of(HalfInt(tl + 1), m + HalfInt(1));
            int idn = base_index_of(HalfInt(tl + 1), m - HalfInt(1));
            if (iup < 0 || idn < 0)
                throw std::logic_error("up Podles spinor hits a missing base vector");
            PodlesSpinorLabel lab{l, m, true};
            add(lab, 2 * iup + 0, -S);
            add(lab, 2 * idn + 1, C);
        }
    }
    if (static_cast<int>(labels_.size()) != 2 * M)
        throw std::logic_error("Podles spinor basis does not have 2M vectors");

    Matrix g = U_.adjoint() * U_ - Matrix::Identity(2 * M, 2 * M);
    double dev = g.cwiseAbs().maxCoeff();
    if (dev > 1e-10)
        throw std::runtime_error("Podles spinor basis is not orthonormal; deviation " +
                                 std::to_string(dev));
}

int PodlesSpinorBasis::base_index_of(HalfInt l, HalfInt m) const {
    auto it = base_index_.find({l.twice, m.twice});
    return it == base_index_.end() ? -1 : it->second;
}

int PodlesSpinorBasis::index_of(const PodlesSpinorLabel& lab) const {
    auto it = index_.find({lab.l.twice, lab.m.twice, lab.up});
    return it == index_.end() ? -1 : it->second;
}

double PodlesSpinorBasis::eigenvalue(int column) const {
    const PodlesSpinorLabel& lab = labels_[column];
    double v = lab.l.value() + 0.5;
    return lab.up ? v : -v;
}

const Matrix& PodlesSpinorBasis::base_pi(PodlesOp op) const {
    auto it = pi_cache_.find(op);
    if (it != pi_cache_.end())
        return it->second;
    Matrix m = abstract_ ? pi_j_matrix(*abstract_, op).mat : gns_->generator_matrix(op).mat;
    return pi_cache_.emplace(op, std::move(m)).first->second;
}

const Matrix& PodlesSpinorBasis::base_sigma(UqGen g) const {
    auto it = sigma_cache_.find(g);
    if (it != sigma_cache_.end())
        return it->second;
    Matrix m = abstract_ ? sigma_matrix(*abstract_, g).mat : gns_->lambda_gen(g).mat;
    return sigma_cache_.emplace(g, std::move(m)).first->second;
}

const Matrix PodlesSpinorBasis::base_star() const { return gns().star_matrix(); }

TruncatedOperator PodlesSpinorBasis::pi(PodlesOp op) const {
    Matrix m = Eigen::kroneckerProduct(base_pi(op), Matrix::Identity(2, 2));
    return {space_, std::move(m)};
}

TruncatedOperator PodlesSpinorBasis::lambda(UqGen g) const {
    const double q = params_.q;
    Matrix out;
    switch (g) {
        case UqGen::K:
            out = Eigen::kroneckerProduct(base_sigma(UqGen::K), sigma_half(q, UqGen::K));
            break;
        case UqGen::Kinv:
            out = Eigen::kroneckerProduct(base_sigma(UqGen::Kinv), sigma_half(q, UqGen::Kinv));
            break;
        case UqGen::E:
            out = Eigen::kroneckerProduct(base_sigma(UqGen::E), sigma_half(q, UqGen::K)) +
                  Eigen::kroneckerProduct(base_sigma(UqGen::Kinv), sigma_half(q, UqGen::E));
            break;
        case UqGen::F:
            out = Eigen::kroneckerProduct(base_sigma(UqGen::F), sigma_half(q, UqGen::K)) +
                  Eigen::kroneckerProduct(base_sigma(UqGen::Kinv), sigma_half(q, UqGen::F));
            break;
    }
    return {space_, std::move(out)};
}

TruncatedOperator PodlesSpinorBasis::dirac() const {
    Vector d(dim());
    for (int i = 0; i < dim(); ++i)
        d(i) = eigenvalue(i);
    Matrix m = U_ * d.asDiagonal() * U_.adjoint();
    return {space_, std::move(m)};
}

TruncatedOperator PodlesSpinorBasis::gamma() const {
    Matrix perm = Matrix::Zero(dim(), dim());
    for (int c = 0; c < dim(); ++c) {
        const PodlesSpinorLabel& lab = labels_[c];
        PodlesSpinorLabel partner{lab.l, lab.m, !lab.up};
        int p = index_of(partner);
        if (p >= 0)
            perm(p, c) = 1.0; // unpaired top sector stays zero
    }
    Matrix m = U_ * perm * U_.adjoint();
    return {space_, std::move(m)};
}

Vector PodlesSpinorBasis::v_pm(HalfInt l, HalfInt m, int sign) const {
    int idn = index_of(PodlesSpinorLabel{l, m, false});
    int iup = index_of(PodlesSpinorLabel{l, m, true});
    if (idn < 0 || iup < 0)
        throw std::invalid_argument("v^l_{m,+-1/2} needs both spinor partners");
    return (U_.col(idn) + double(sign) * U_.col(iup)) / std::sqrt(2.0);
}

double grading_obstruction(const QParam& params) {
    PodlesCoeffs coeffs(params);
    return coeffs.beta(HalfInt(1), HalfInt(1)) + coeffs.beta(HalfInt(-1), HalfInt(1));
}

TruncatedOperator build_grading(const PodlesSpinorBasis& sb) {
    if (sb.params().c.finite) {
        double obstruction = grading_obstruction(sb.params());
        throw std::invalid_argument(
            "no equivariant grading for finite c: beta_{1/2}(1/2) + beta_{-1/2}(1/2) = " +
            std::to_string(obstruction));
    }
    return sb.gamma();
}

std::vector<SpectrumRow> dirac_podles_spectrum(const PodlesSpinorBasis& sb, const TruncatedOperator& d) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(d.mat);
    std::map<int, int> counts;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        double ev = es.eigenvalues()(k);
        int twice = static_cast<int>(std::llround(2.0 * ev));
        if (std::abs(ev - 0.5 * twice) > 1e-9)
            throw std::runtime_error("Dirac eigenvalue is not a half-integer: " + std::to_string(ev));
        counts[twice] += 1;
    }
    (void)sb;
    std::vector<SpectrumRow> rows;
    for (auto& [twice, mult] : counts) {
        if (twice == 0)
            throw std::runtime_error("unexpected zero mode in the Podles Dirac spectrum");
        SpectrumRow r;
        r.eigenvalue = 0.5 * twice;
        r.multiplicity = mult;
        r.sector = HalfInt(std::abs(twice) - 1);
        rows.push_back(r);
    }
    return rows;
}

Matrix podles_spinor_embedding(const SpinorBasis& su2, const PodlesSpinorBasis& pod) {
    const GnsPodlesBasis& gns = pod.gns();
    if (gns.heisenberg().space()->id != su2.lmn().space()->id)
        throw std::logic_error("embedding needs the Podles GNS basis over the same |lmn> basis");
    // maps the Podles tensor space (index 2 i_base + s) into W (index 2 i_lmn + s)
    return Eigen::kroneckerProduct(gns.lmn_coordinates(), Matrix::Identity(2, 2));
}

RestrictedDirac dirac_podles_restricted(const SpinorBasis& su2, const PodlesSpinorBasis& pod) {
    Matrix E = podles_spinor_embedding(su2, pod);
    TruncatedOperator D = su2.dirac();
    Matrix DE = D.mat * E;
    Matrix dt = E.adjoint() * DE;
    RestrictedDirac out{{pod.tensor_space(), dt}, operator_norm(DE - E * dt)};
    return out;
}

int equivariant_commutant_dimension(const PodlesSpinorBasis& sb, double tol) {
    // unknowns: a 2x2 block per paired sector l <= l_max - 1/2 acting on
    // (down, up); detected through [X, pi(x)] = 0 on columns whose transitions
    // stay truncation-exact
    const int tl_unknown_max = sb.l_max().twice - 1;
    struct Block { int tl; };
    std::vector<int> sectors;
    for (int tl = 1; tl <= tl_unknown_max; tl += 2)
        sectors.push_back(tl);
    const int nunk = 4 * static_cast<int>(sectors.size());

    // spinor-coordinate pi operators
    std::vector<Matrix> ops;
    for (PodlesOp op : {PodlesOp::A, PodlesOp::B, PodlesOp::Bstar})
        ops.push_back(sb.isometry().adjoint() * sb.pi(op).mat * sb.isometry());

    // interior spinor columns: sectors <= l_max - 3/2
    std::vector<int> interior;
    for (int c = 0; c < sb.dim(); ++c)
        if (sb.labels()[c].l.twice <= sb.l_max().twice - 3)
            interior.push_back(c);

    auto unknown_matrix = [&](int which) {
        int blk = which / 4, entry = which % 4;
        int tl = sectors[blk];
        bool row_up = (entry & 1) != 0, col_up = (entry & 2) != 0;
        Matrix x = Matrix::Zero(sb.dim(), sb.dim());
        for (int tm = -tl; tm <= tl; tm += 2) {
            int r = sb.index_of(PodlesSpinorLabel{HalfInt(tl), HalfInt(tm), row_up});
            int c = sb.index_of(PodlesSpinorLabel{HalfInt(tl), HalfInt(tm), col_up});
            if (r >= 0 && c >= 0)
                x(r, c) = 1.0;
        }
        return x;
    };

    const int rows_per = static_cast<int>(interior.size()) * sb.dim();
    Matrix T(static_cast<int>(ops.size()) * rows_per, nunk);
    for (int u = 0; u < nunk; ++u) {
        Matrix x = unknown_matrix(u);
        int roff = 0;
        for (const Matrix& p : ops) {
            Matrix comm = x * p - p * x;
            for (size_t ci = 0; ci < interior.size(); ++ci)
                T.block(roff + static_cast<int>(ci) * sb.dim(), u, sb.dim(), 1) =
                    comm.col(interior[ci]);
            roff += rows_per;
        }
    }
    Eigen::JacobiSVD<Matrix> svd(T);
    const auto& sv = svd.singularValues();
    double top = sv.size() ? sv(0) : 0.0;
    int null = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) <= tol * std::max(top, 1.0))
            ++null;
    return null;
}

} // namespace qsu2
