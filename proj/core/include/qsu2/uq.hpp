#ifndef QSU2_UQ_HPP
#define QSU2_UQ_HPP
//
// Project     : qsu2
// Module      : uq
// Description : the Hopf *-algebra U_q(su(2)) in PBW normal form
//
// Elements are sums of monomials f^i k^n e^j (i, j >= 0, n in Z).  The
// defining relations
//     k k^{-1} = 1,   e k = q k e,   k f = q f k,
//     f e - e f = (q - q^{-1})^{-1} (k^2 - k^{-2})
// rewrite any word into this order, so multiplication folds the right factor
// letter by letter through the rules below.
//

#include "qsu2/ring.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace qsu2 {

enum class UqGen { E, F, K, Kinv };

struct UqMono {
    int fi = 0; // power of f
    int kn = 0; // power of k (may be negative)
    int ej = 0; // power of e

    friend constexpr auto operator<=>(const UqMono&, const UqMono&) = default;
    bool is_one() const { return fi == 0 && kn == 0 && ej == 0; }
};

template <class Ctx>
using UqElement = std::map<UqMono, typename Ctx::Scalar>;

template <class Ctx>
using UqTensor = std::map<std::pair<UqMono, UqMono>, typename Ctx::Scalar>;

template <class Ctx>
void uq_add_term(const Ctx& ctx, UqElement<Ctx>& dst, const UqMono& m, const typename Ctx::Scalar& c) {
    if (ctx.is_zero(c))
        return;
    auto it = dst.find(m);
    if (it == dst.end()) {
        dst.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (ctx.is_zero(it->second))
        dst.erase(it);
}

template <class Ctx>
UqElement<Ctx> uq_one(const Ctx& ctx) {
    return {{UqMono{}, ctx.one()}};
}

template <class Ctx>
UqElement<Ctx> uq_gen(const Ctx& ctx, UqGen g) {
    UqMono m;
    switch (g) {
        case UqGen::E: m.ej = 1; break;
        case UqGen::F: m.fi = 1; break;
        case UqGen::K: m.kn = 1; break;
        case UqGen::Kinv: m.kn = -1; break;
    }
    return {{m, ctx.one()}};
}

template <class Ctx>
UqElement<Ctx> uq_scale(const Ctx& ctx, const typename Ctx::Scalar& c, const UqElement<Ctx>& x) {
    UqElement<Ctx> out;
    for (const auto& [m, s] : x)
        uq_add_term(ctx, out, m, c * s);
    return out;
}

template <class Ctx>
UqElement<Ctx> uq_sum(const Ctx& ctx, const UqElement<Ctx>& x, const UqElement<Ctx>& y) {
    UqElement<Ctx> out = x;
    for (const auto& [m, s] : y)
        uq_add_term(ctx, out, m, s);
    return out;
}

/// Multiply a canonical element by one generator on the right.
template <class Ctx>
UqElement<Ctx> uq_mul_gen_right(const Ctx& ctx, const UqElement<Ctx>& x, UqGen g) {
    using S = typename Ctx::Scalar;
    UqElement<Ctx> out;
    for (const auto& [m, c] : x) {
        switch (g) {
            case UqGen::E: {
                UqMono r{m.fi, m.kn, m.ej + 1};
                uq_add_term(ctx, out, r, c);
                break;
            }
            case UqGen::K: { // e^j k = q^j k e^j
                UqMono r{m.fi, m.kn + 1, m.ej};
                uq_add_term(ctx, out, r, c * ctx.q_pow(2 * m.ej));
                break;
            }
            case UqGen::Kinv: {
                UqMono r{m.fi, m.kn - 1, m.ej};
                uq_add_term(ctx, out, r, c * ctx.q_pow(-2 * m.ej));
                break;
            }
            case UqGen::F: {
                if (m.ej == 0) { // k^n f = q^n f k^n
                    UqMono r{m.fi + 1, m.kn, 0};
                    uq_add_term(ctx, out, r, c * ctx.q_pow(2 * m.kn));
                } else {
                    // e^j f = f e^j - C sum_{t<j} q^{2t} k^2 e^{j-1}
                    //               + C sum_{t<j} q^{-2t} k^{-2} e^{j-1},
                    // C = (q - q^{-1})^{-1}
                    const int j = m.ej;
                    S cplus = ctx.zero(), cminus = ctx.zero();
                    for (int t = 0; t < j; ++t) {
                        cplus = cplus + ctx.q_pow(4 * t);
                        cminus = cminus + ctx.q_pow(-4 * t);
                    }
                    S C = ctx.inv(ctx.q_pow(2) - ctx.q_pow(-2));
                    uq_add_term(ctx, out, UqMono{m.fi + 1, m.kn, j}, c * ctx.q_pow(2 * m.kn));
                    uq_add_term(ctx, out, UqMono{m.fi, m.kn + 2, j - 1}, ctx.zero() - c * C * cplus);
                    uq_add_term(ctx, out, UqMono{m.fi, m.kn - 2, j - 1}, c * C * cminus);
                }
                break;
            }
        }
    }
    return out;
}

template <class Ctx>
std::vector<UqGen> uq_mono_word(const UqMono& m) {
    std::vector<UqGen> w;
    for (int i = 0; i < m.fi; ++i) w.push_back(UqGen::F);
    for (int i = 0; i < std::abs(m.kn); ++i) w.push_back(m.kn > 0 ? UqGen::K : UqGen::Kinv);
    for (int i = 0; i < m.ej; ++i) w.push_back(UqGen::E);
    return w;
}

template <class Ctx>
UqElement<Ctx> uq_mul(const Ctx& ctx, const UqElement<Ctx>& x, const UqElement<Ctx>& y) {
    UqElement<Ctx> out;
    for (const auto& [my, cy] : y) {
        UqElement<Ctx> acc = uq_scale(ctx, cy, x);
        for (UqGen g : uq_mono_word<Ctx>(my))
            acc = uq_mul_gen_right(ctx, acc, g);
        for (const auto& [m, c] : acc)
            uq_add_term(ctx, out, m, c);
    }
    return out;
}

template <class Ctx>
UqElement<Ctx> uq_from_word(const Ctx& ctx, const std::vector<UqGen>& word) {
    UqElement<Ctx> acc = uq_one(ctx);
    for (UqGen g : word)
        acc = uq_mul_gen_right(ctx, acc, g);
    return acc;
}

template <class Ctx>
typename Ctx::Scalar uq_counit(const Ctx& ctx, const UqElement<Ctx>& x) {
    // eps(k^{pm1}) = 1, eps(e) = eps(f) = 0
    auto s = ctx.zero();
    for (const auto& [m, c] : x)
        if (m.fi == 0 && m.ej == 0)
            s = s + c;
    return s;
}

/// star: k* = k, e* = f, f* = e; antilinear antihomomorphism.  On a PBW
/// monomial (f^i k^n e^j)* = f^j k^n e^i, already canonical.
template <class Ctx>
UqElement<Ctx> uq_star(const Ctx& ctx, const UqElement<Ctx>& x) {
    UqElement<Ctx> out;
    for (const auto& [m, c] : x)
        uq_add_term(ctx, out, UqMono{m.ej, m.kn, m.fi}, ctx.conj(c));
    return out;
}

/// S(k) = k^{-1}, S(e) = -q^{-1} e, S(f) = -q f; algebra antihomomorphism.
template <class Ctx>
UqElement<Ctx> uq_antipode(const Ctx& ctx, const UqElement<Ctx>& x) {
    UqElement<Ctx> out;
    for (const auto& [m, c] : x) {
        std::vector<UqGen> w;
        for (int i = 0; i < m.ej; ++i) w.push_back(UqGen::E);
        for (int i = 0; i < std::abs(m.kn); ++i) w.push_back(m.kn > 0 ? UqGen::Kinv : UqGen::K);
        for (int i = 0; i < m.fi; ++i) w.push_back(UqGen::F);
        // (-q^{-1})^{ej} (-q)^{fi} = (-1)^{ej+fi} q^{fi-ej}
        auto coeff = c * ctx.q_pow(2 * (m.fi - m.ej));
        if ((m.ej + m.fi) % 2 != 0)
            coeff = ctx.zero() - coeff;
        auto term = uq_scale(ctx, coeff, uq_from_word(ctx, w));
        for (const auto& [mm, cc] : term)
            uq_add_term(ctx, out, mm, cc);
    }
    return out;
}

/// S^{-1}(k) = k^{-1}, S^{-1}(e) = -q e, S^{-1}(f) = -q^{-1} f.
template <class Ctx>
UqElement<Ctx> uq_antipode_inv(const Ctx& ctx, const UqElement<Ctx>& x) {
    UqElement<Ctx> out;
    for (const auto& [m, c] : x) {
        std::vector<UqGen> w;
        for (int i = 0; i < m.ej; ++i) w.push_back(UqGen::E);
        for (int i = 0; i < std::abs(m.kn); ++i) w.push_back(m.kn > 0 ? UqGen::Kinv : UqGen::K);
        for (int i = 0; i < m.fi; ++i) w.push_back(UqGen::F);
        auto coeff = c * ctx.q_pow(2 * (m.ej - m.fi));
        if ((m.ej + m.fi) % 2 != 0)
            coeff = ctx.zero() - coeff;
        auto term = uq_scale(ctx, coeff, uq_from_word(ctx, w));
        for (const auto& [mm, cc] : term)
            uq_add_term(ctx, out, mm, cc);
    }
    return out;
}

template <class Ctx>
void uq_tensor_add(const Ctx& ctx, UqTensor<Ctx>& dst, const UqMono& l, const UqMono& r,
                   const typename Ctx::Scalar& c) {
    if (ctx.is_zero(c))
        return;
    auto key = std::make_pair(l, r);
    auto it = dst.find(key);
    if (it == dst.end()) {
        dst.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (ctx.is_zero(it->second))
        dst.erase(it);
}

/// Coproduct: Delta k = k (x) k, Delta e = e (x) k + k^{-1} (x) e,
/// Delta f = f (x) k + k^{-1} (x) f; extended as an algebra homomorphism.
template <class Ctx>
UqTensor<Ctx> uq_coproduct(const Ctx& ctx, const UqElement<Ctx>& x) {
    UqTensor<Ctx> out;
    for (const auto& [m, c] : x) {
        // running tensor, multiplied letter by letter
        UqTensor<Ctx> acc;
        uq_tensor_add(ctx, acc, UqMono{}, UqMono{}, c);
        auto mul_tensor_gen = [&](const std::vector<std::pair<UqGen, UqGen>>& legs) {
            UqTensor<Ctx> next;
            for (const auto& [pair, cc] : acc) {
                for (const auto& [gl, gr] : legs) {
                    UqElement<Ctx> l = uq_mul_gen_right(ctx, UqElement<Ctx>{{pair.first, ctx.one()}}, gl);
                    UqElement<Ctx> r = uq_mul_gen_right(ctx, UqElement<Ctx>{{pair.second, ctx.one()}}, gr);
                    for (const auto& [lm, lc] : l)
                        for (const auto& [rm, rc] : r)
                            uq_tensor_add(ctx, next, lm, rm, cc * lc * rc);
                }
            }
            acc = std::move(next);
        };
        for (int i = 0; i < m.fi; ++i)
            mul_tensor_gen({{UqGen::F, UqGen::K}, {UqGen::Kinv, UqGen::F}});
        for (int i = 0; i < std::abs(m.kn); ++i) {
            UqGen g = m.kn > 0 ? UqGen::K : UqGen::Kinv;
            mul_tensor_gen({{g, g}});
        }
        for (int i = 0; i < m.ej; ++i)
            mul_tensor_gen({{UqGen::E, UqGen::K}, {UqGen::Kinv, UqGen::E}});
        for (const auto& [pair, cc] : acc)
            uq_tensor_add(ctx, out, pair.first, pair.second, cc);
    }
    return out;
}

} // namespace qsu2

#endif // QSU2_UQ_HPP
