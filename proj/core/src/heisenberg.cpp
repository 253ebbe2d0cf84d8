//
// Project     : qsu2
// Module      : heisenberg
//

#include "qsu2/heisenberg.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace qsu2 {

MonomialIndex::MonomialIndex(int max_degree) : max_degree_(max_degree) {
    for (int d = 0; d <= max_degree; ++d)
        for (int p = -d; p <= d; ++p)
            for (int jb = 0; jb + std::abs(p) <= d; ++jb) {
                int kb = d - std::abs(p) - jb;
                monos_.push_back(CoordMono{p, jb, kb});
            }
    std::sort(monos_.begin(), monos_.end());
    for (int i = 0; i < static_cast<int>(monos_.size()); ++i)
        index_[monos_[i]] = i;
}

int MonomialIndex::index_of(const CoordMono& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

LmnBasis::LmnBasis(const QParam& params, HalfInt L, int max_twice_level)
    : params_(params), lctx_(Rational(params.q)), L_(L) {
    if (L.twice < 0)
        throw std::invalid_argument("truncation level must be >= 0");
    if (L.twice > max_twice_level)
        throw std::invalid_argument("truncation level " + L.str() + " exceeds the configured maximum " +
                                    HalfInt(max_twice_level).str());
    monos_ = MonomialIndex(L.twice);
    haar_values_.push_back(1);
#ifdef QSU2_PROFILE_BASIS
    auto tick = [start = std::chrono::steady_clock::now()]() mutable {
        auto now = std::chrono::steady_clock::now();
        double s = std::chrono::duration<double>(now - start).count();
        start = now;
        return s;
    };
    build_ladder();
    fprintf(stderr, "ladder: %.2f s\n", tick());
    build_dual_rows();
    fprintf(stderr, "dual rows: %.2f s\n", tick());
    check_gram();
    fprintf(stderr, "gram check: %.2f s\n", tick());
    normalize_star_phases();
    fprintf(stderr, "star phases: %.2f s\n", tick());
#else
    build_ladder();
    build_dual_rows();
    check_gram();
    normalize_star_phases();
#endif
}

const Rational& LmnBasis::haar_value(int n) const {
    // psi((b b*)^n) from left invariance: psi(e |> (a b^{n-1} b*^n)) = 0
    // couples (b b*)^n to (b b*)^{n-1}.
    while (static_cast<int>(haar_values_.size()) <= n) {
        int m = static_cast<int>(haar_values_.size());
        LCoordElement probe{{CoordMono{1, m - 1, m}, lctx_.one()}};
        LCoordElement y = act_left_ef(lctx_, probe, true);
        QSqrtRat c_high, c_low;
        for (const auto& [mm, cc] : y) {
            if (mm == CoordMono{0, m, m})
                c_high = c_high + laurent_to_qs(cc, lctx_.q);
            else if (mm == CoordMono{0, m - 1, m - 1})
                c_low = c_low + laurent_to_qs(cc, lctx_.q);
            else if (!cc.is_zero())
                throw std::logic_error("Haar invariance probe left the (b b*)^n line");
        }
        if (c_high.is_zero())
            throw std::logic_error("Haar invariance equation is degenerate");
        QSqrtRat value = qs_div(-qs_scale(haar_values_.back(), c_low), c_high, lctx_.q);
        if (value.b != 0)
            throw std::logic_error("Haar value acquired an irrational part");
        haar_values_.push_back(value.a);
    }
    return haar_values_[n];
}

QSqrtRat LmnBasis::psi_exact(const LCoordElement& x) const {
    QSqrtRat out;
    for (const auto& [m, c] : x)
        if (m.p == 0 && m.jb == m.kb)
            out = out + qs_scale(haar_value(m.jb), laurent_to_qs(c, lctx_.q));
    return out;
}

QSqrtRat LmnBasis::mono_gram_entry(int r, int c) const {
    auto key = std::make_pair(r, c);
    auto it = mono_gram_.find(key);
    if (it != mono_gram_.end())
        return it->second;
    auto sym = mono_gram_.find(std::make_pair(c, r));
    if (sym != mono_gram_.end()) // psi(nu* mu) is real and symmetric here
        return sym->second;
    LCoordElement rstar = coord_star(lctx_, LCoordElement{{monos_.mono(r), lctx_.one()}});
    LCoordElement prod = coord_mul(lctx_, rstar, LCoordElement{{monos_.mono(c), lctx_.one()}});
    QSqrtRat val = psi_exact(prod);
    mono_gram_.emplace(key, val);
    return val;
}

void LmnBasis::build_ladder() {
    std::map<std::tuple<int, int, int>, LCoordElement> built;
    std::map<std::tuple<int, int, int>, QSqrtRat> built_norm2;

    auto exact_qint = [&](int twice) -> Rational {
        // [x] for integer x = twice/2
        if (twice % 2 != 0)
            throw std::logic_error("exact q-integer needs an integer argument");
        int x = twice / 2;
        Rational num = rational_pow(lctx_.q, x) - rational_pow(lctx_.q, -x);
        Rational den = lctx_.q - Rational(1) / lctx_.q;
        return num / den;
    };

    // Ladder norms follow the spin-l recursion exactly (the actions implement
    // an honest *-representation); the values recorded here are verified
    // against independent Haar pairings in check_gram below.
    auto seed_norm2 = [&](const LCoordElement& u) -> QSqrtRat {
        LCoordElement prod = coord_mul(lctx_, coord_star(lctx_, u), u);
        return psi_exact(prod);
    };

    for (int tl = 0; tl <= L_.twice; ++tl) {
        LCoordElement seed{{CoordMono{tl, 0, 0}, lctx_.one()}};
        built[{tl, tl, tl}] = seed;
        built_norm2[{tl, tl, tl}] = seed_norm2(seed);

        // n-ladder at m = l: rho_psi(f) lowers n by 1, norm ratio [l+n][l-n+1]
        for (int tn = tl; tn > -tl; tn -= 2) {
            const auto& cur = built[{tl, tl, tn}];
            LCoordElement down = rho_psi_gen(lctx_, UqGen::F, cur);
            Rational ratio = exact_qint(tl + tn) * exact_qint(tl - tn + 2);
            built_norm2[{tl, tl, tn - 2}] = qs_scale(ratio, built_norm2[{tl, tl, tn}]);
            built[{tl, tl, tn - 2}] = std::move(down);
        }

        // m-ladder: lambda(e) lowers m by 1, norm ratio [l-m+1][l+m]
        for (int tn = tl; tn >= -tl; tn -= 2)
            for (int tm = tl; tm > -tl; tm -= 2) {
                const auto& cur = built[{tl, tm, tn}];
                LCoordElement down = act_left_ef(lctx_, cur, true);
                Rational ratio = exact_qint(tl - tm + 2) * exact_qint(tl + tm);
                built_norm2[{tl, tm - 2, tn}] = qs_scale(ratio, built_norm2[{tl, tm, tn}]);
                built[{tl, tm - 2, tn}] = std::move(down);
            }
    }

    labels_.clear();
    raw_.clear();
    norms2_.clear();
    for (auto& [key, vec] : built) {
        auto [tl, tm, tn] = key;
        label_index_[key] = static_cast<int>(labels_.size());
        labels_.push_back(LmnLabel{HalfInt(tl), HalfInt(tm), HalfInt(tn)});
        raw_.push_back(std::move(vec));
        norms2_.push_back(built_norm2[key]);
    }
    if (static_cast<int>(labels_.size()) != monos_.size())
        throw std::runtime_error("|lmn> family does not span the truncated polynomial space");

    norms_.resize(raw_.size());
    for (size_t i = 0; i < raw_.size(); ++i) {
        norms_[i] = std::sqrt(qs_to_double(norms2_[i], lctx_.q));
        if (!(norms_[i] > 0))
            throw std::runtime_error("ladder vector with nonpositive norm");
    }
    weight_index_.clear();
    for (size_t i = 0; i < labels_.size(); ++i)
        weight_index_[{labels_[i].m.twice, labels_[i].n.twice}].push_back(static_cast<int>(i));

    std::vector<int> sector(labels_.size());
    for (size_t i = 0; i < labels_.size(); ++i)
        sector[i] = labels_[i].l.twice;
    std::ostringstream nm;
    nm << "lmn(L=" << L_.str() << ",q=" << params_.q << ")";
    space_ = make_space(nm.str(), sector, L_.twice);
}

void LmnBasis::build_dual_rows() {
    dual_.assign(raw_.size(), {});
    // group monomials by weight; a basis vector pairs only within its block
    std::map<std::pair<int, int>, std::vector<int>> blocks;
    for (int i = 0; i < monos_.size(); ++i) {
        const CoordMono& m = monos_.mono(i);
        blocks[{m.twice_left_weight(), m.twice_right_weight()}].push_back(i);
    }
    for (size_t i = 0; i < raw_.size(); ++i) {
        const auto& lab = labels_[i];
        auto bit = blocks.find({lab.m.twice, lab.n.twice});
        if (bit == blocks.end())
            throw std::logic_error("missing weight block");
        for (int mu : bit->second) {
            QSqrtRat acc;
            for (const auto& [nu_mono, c] : raw_[i]) {
                int nu = monos_.index_of(nu_mono);
                QSqrtRat g = mono_gram_entry(nu, mu);
                if (g.is_zero())
                    continue;
                acc = acc + qs_mul(laurent_to_qs(c, lctx_.q), g, lctx_.q); // coefficients are real
            }
            if (!acc.is_zero())
                dual_[i][mu] = acc;
        }
    }
}

QSqrtRat LmnBasis::inner_raw(const LCoordElement& x, int i) const {
    QSqrtRat acc;
    const auto& row = dual_[i];
    const auto& lab = labels_[i];
    LCoordElement overflow;
    for (const auto& [m, c] : x) {
        int mu = monos_.index_of(m);
        if (mu < 0) {
            // beyond the indexed degree: pair directly below (the basis vector
            // is not orthogonal to high-degree monomials)
            if (m.twice_left_weight() == lab.m.twice && m.twice_right_weight() == lab.n.twice)
                overflow.emplace(m, c);
            continue;
        }
        auto it = row.find(mu);
        if (it == row.end())
            continue;
        acc = acc + qs_mul(laurent_to_qs(c, lctx_.q), it->second, lctx_.q);
    }
    if (!overflow.empty())
        acc = acc + psi_exact(coord_mul(lctx_, coord_star(lctx_, raw_[i]), overflow));
    return acc;
}

void LmnBasis::check_gram() {
    // exact orthogonality psi(raw_i^* raw_j) = 0 for i != j, and the ladder
    // norm recursion verified against an independent Haar pairing
    for (int j = 0; j < dim(); ++j) {
        const auto& lab = labels_[j];
        auto it = weight_index_.find({lab.m.twice, lab.n.twice});
        for (int i : it->second) {
            QSqrtRat v = inner_raw(raw_[j], i);
            if (i == j) {
                if (!(v == norms2_[i]))
                    throw std::runtime_error("ladder norm recursion contradicts the Haar pairing");
            } else if (!v.is_zero()) {
                throw std::runtime_error("|lmn> Gram is not diagonal (exact check)");
            }
        }
    }
    gram_deviation_ = 0.0;
}

void LmnBasis::normalize_star_phases() {
    const int n = dim();

    auto star_entry = [&](int i, int j) -> double {
        QSqrtRat v = inner_raw(coord_star(lctx_, raw_[j]), i);
        return qs_to_double(v, lctx_.q) / (norms_[i] * norms_[j]);
    };

    std::map<std::tuple<int, int, int>, double> eps;
    for (int j = 0; j < n; ++j) {
        const LmnLabel& lab = labels_[j];
        int i = index_of(lab.l, -lab.m, -lab.n);
        double mag = qpow_halfint(params_.q, lab.m + lab.n);
        double entry = star_entry(i, j);
        double sign = entry >= 0 ? 1.0 : -1.0;
        if (std::abs(entry - sign * mag) > 1e-12 * std::max(1.0, mag))
            throw std::runtime_error("star map entry deviates from +-q^{m+n}");
        eps[{lab.l.twice, lab.m.twice, lab.n.twice}] = sign;
    }
    raw_star_signs_ = eps;

    // want sigma(l,n) sigma(l,-n) eps = (-1)^{2l+m+n} with sigma = sigma(l,n)
    std::map<std::pair<int, int>, double> prod;
    for (const auto& [key, e] : eps) {
        auto [tl, tm, tn] = key;
        int par = ((tl + (tm + tn) / 2) % 2 + 2) % 2;
        double target = (par == 0 ? 1.0 : -1.0) * e;
        auto k = std::make_pair(tl, std::abs(tn));
        auto it = prod.find(k);
        if (it == prod.end())
            prod[k] = target;
        else if (it->second != target)
            throw std::runtime_error("star sign pattern not adjustable by a diagonal (l,n) sign");
    }
    for (const auto& [k, v] : prod)
        if (k.second == 0 && v != 1.0)
            throw std::runtime_error("star sign obstruction at n = 0");

    bool any = false;
    for (int j = 0; j < n; ++j) {
        const LmnLabel& lab = labels_[j];
        double sigma = lab.n.twice < 0 ? prod[{lab.l.twice, -lab.n.twice}] : 1.0;
        if (sigma == -1.0) {
            any = true;
            raw_[j] = coord_scale(lctx_, LaurentScalar::integer(-1), raw_[j]);
        }
    }
    sign_adjusted_ = any;
    if (any) {
        // the dual rows are linear in the (real) vectors: flip them in place
        for (int j = 0; j < n; ++j) {
            const LmnLabel& lab = labels_[j];
            double sigma = lab.n.twice < 0 ? prod[{lab.l.twice, -lab.n.twice}] : 1.0;
            if (sigma == -1.0)
                for (auto& [mu, val] : dual_[j])
                    val = -val;
        }
    }

    for (int j = 0; j < n; ++j) {
        const LmnLabel& lab = labels_[j];
        int i = index_of(lab.l, -lab.m, -lab.n);
        int par = ((lab.l.twice + (lab.m.twice + lab.n.twice) / 2) % 2 + 2) % 2;
        double expected = (par == 0 ? 1.0 : -1.0) * qpow_halfint(params_.q, lab.m + lab.n);
        if (std::abs(star_entry(i, j) - expected) > 1e-12 * std::max(1.0, std::abs(expected)))
            throw std::runtime_error("star map closed form fails after sign normalization");
    }
}

int LmnBasis::index_of(HalfInt l, HalfInt m, HalfInt n) const {
    auto it = label_index_.find({l.twice, m.twice, n.twice});
    return it == label_index_.end() ? -1 : it->second;
}

Vector LmnBasis::project_exact(const LCoordElement& x) const {
    Vector v = Vector::Zero(dim());
    // only basis vectors sharing a weight with some term of x can pair
    std::map<std::pair<int, int>, LCoordElement> by_weight;
    for (const auto& [m, c] : x)
        by_weight[{m.twice_left_weight(), m.twice_right_weight()}].emplace(m, c);
    for (const auto& [w, part] : by_weight) {
        auto it = weight_index_.find(w);
        if (it == weight_index_.end())
            continue;
        for (int i : it->second) {
            QSqrtRat val = inner_raw(part, i);
            if (!val.is_zero())
                v(i) += qs_to_double(val, lctx_.q) / norms_[i];
        }
    }
    return v;
}

Vector LmnBasis::project(const NCoordElement& x) const {
    Vector v = Vector::Zero(dim());
    for (const auto& [m, c] : x) {
        LCoordElement mono{{m, lctx_.one()}};
        auto it = weight_index_.find({m.twice_left_weight(), m.twice_right_weight()});
        if (it == weight_index_.end())
            continue;
        for (int i : it->second) {
            QSqrtRat val = inner_raw(mono, i);
            if (!val.is_zero())
                v(i) += c * (qs_to_double(val, lctx_.q) / norms_[i]);
        }
    }
    return v;
}

complexd LmnBasis::inner(const NCoordElement& x, const NCoordElement& y) const {
    Vector vx = project(x);
    Vector vy = project(y);
    return vy.dot(vx); // Eigen's dot conjugates the left argument
}

Matrix LmnBasis::gram() const {
    // by construction (exact check) this is the identity
    return Matrix::Identity(dim(), dim());
}

Matrix LmnBasis::star_matrix() const {
    const int n = dim();
    Matrix m = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        LCoordElement st = coord_star(lctx_, raw_[j]);
        for (int i = 0; i < n; ++i) {
            const LmnLabel& li = labels_[i];
            const LmnLabel& lj = labels_[j];
            if (li.m != -lj.m || li.n != -lj.n)
                continue;
            QSqrtRat v = inner_raw(st, i);
            if (!v.is_zero())
                m(i, j) = qs_to_double(v, lctx_.q) / (norms_[i] * norms_[j]);
        }
    }
    return m;
}

NCoordElement coord_generator(const NumericCtx& ctx, CoordGen g) { return coord_gen(ctx, g); }

namespace {

/// Builds the matrix with columns <.., normalized op(raw_j)> for an exact map.
Matrix exact_columns(const LmnBasis& basis,
                     const std::function<LCoordElement(const LCoordElement&)>& apply) {
    const int n = basis.dim();
    Matrix m = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        LCoordElement w = apply(basis.raw_vector(j));
        Vector col = basis.project_exact(w);
        m.col(j) = col / basis.norm(j);
    }
    return m;
}

} // namespace

TruncatedOperator pi_psi_matrix_exact(const LmnBasis& basis, const LCoordElement& x) {
    const auto& ctx = basis.exact_ctx();
    return {basis.space(), exact_columns(basis, [&](const LCoordElement& v) {
                return coord_mul(ctx, x, v);
            })};
}

TruncatedOperator pi_psi_matrix(const LmnBasis& basis, const NCoordElement& x) {
    const auto& ctx = basis.exact_ctx();
    Matrix acc = Matrix::Zero(basis.dim(), basis.dim());
    for (const auto& [mono, c] : x) {
        LCoordElement xm{{mono, ctx.one()}};
        acc += c * exact_columns(basis, [&](const LCoordElement& v) { return coord_mul(ctx, xm, v); });
    }
    return {basis.space(), std::move(acc)};
}

TruncatedOperator lambda_gen_matrix(const LmnBasis& basis, UqGen g) {
    const auto& ctx = basis.exact_ctx();
    switch (g) {
        case UqGen::E:
            return {basis.space(),
                    exact_columns(basis, [&](const LCoordElement& v) { return act_left_ef(ctx, v, true); })};
        case UqGen::F:
            return {basis.space(), exact_columns(basis, [&](const LCoordElement& v) {
                        return act_left_ef(ctx, v, false);
                    })};
        case UqGen::K:
            return {basis.space(), exact_columns(basis, [&](const LCoordElement& v) {
                        return act_left_k(ctx, v, false);
                    })};
        case UqGen::Kinv:
            return {basis.space(),
                    exact_columns(basis, [&](const LCoordElement& v) { return act_left_k(ctx, v, true); })};
    }
    throw std::logic_error("unreachable");
}

TruncatedOperator lambda_matrix(const LmnBasis& basis, const NUqElement& h) {
    const auto& ctx = basis.exact_ctx();
    Matrix acc = Matrix::Zero(basis.dim(), basis.dim());
    for (const auto& [mono, c] : h) {
        acc += c * exact_columns(basis, [&](const LCoordElement& v) {
            LCoordElement w = v;
            for (int i = 0; i < mono.ej; ++i) w = act_left_ef(ctx, w, true);
            for (int i = 0; i < std::abs(mono.kn); ++i) w = act_left_k(ctx, w, mono.kn < 0);
            for (int i = 0; i < mono.fi; ++i) w = act_left_ef(ctx, w, false);
            return w;
        });
    }
    return {basis.space(), std::move(acc)};
}

TruncatedOperator rho_gen_matrix(const LmnBasis& basis, UqGen g) {
    const auto& ctx = basis.exact_ctx();
    return {basis.space(),
            exact_columns(basis, [&](const LCoordElement& v) { return rho_psi_gen(ctx, g, v); })};
}

TruncatedOperator rho_matrix(const LmnBasis& basis, const NUqElement& h) {
    const auto& ctx = basis.exact_ctx();
    Matrix acc = Matrix::Zero(basis.dim(), basis.dim());
    for (const auto& [mono, c] : h) {
        // rho(f^i k^n e^j) = rho(f)^i rho(k)^n rho(e)^j
        acc += c * exact_columns(basis, [&](const LCoordElement& v) {
            LCoordElement w = v;
            for (int i = 0; i < mono.ej; ++i) w = rho_psi_gen(ctx, UqGen::E, w);
            for (int i = 0; i < std::abs(mono.kn); ++i)
                w = rho_psi_gen(ctx, mono.kn > 0 ? UqGen::K : UqGen::Kinv, w);
            for (int i = 0; i < mono.fi; ++i) w = rho_psi_gen(ctx, UqGen::F, w);
            return w;
        });
    }
    return {basis.space(), std::move(acc)};
}

} // namespace qsu2
