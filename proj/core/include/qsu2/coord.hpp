#ifndef QSU2_COORD_HPP
#define QSU2_COORD_HPP
//
// Project     : qsu2
// Module      : coord
// Description : the coordinate *-algebra O(SU_q(2)) in normal form, with the
//               dual pairing, left/right U_q(su(2)) actions, Haar state and
//               the Podles sphere embeddings
//
// Normal-form monomials are a^p b^j b*^k with p in Z (p < 0 encodes (a*)^{-p})
// and j, k >= 0.  The relations
//     ba = q ab,  b*a = q a b*,  b b* = b* b,
//     a*a + q^2 b*b = 1,  a a* + b b* = 1
// eliminate any monomial containing both a and a*.
//

#include "qsu2/scalar.hpp"
#include "qsu2/uq.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

namespace qsu2 {

enum class CoordGen { A, B, Bstar, Astar };

struct CoordMono {
    int p = 0;  // a-power; negative means (a*)^{-p}
    int jb = 0; // b-power
    int kb = 0; // b*-power

    friend constexpr auto operator<=>(const CoordMono&, const CoordMono&) = default;

    int degree() const { return std::abs(p) + jb + kb; }
    bool is_one() const { return p == 0 && jb == 0 && kb == 0; }
    /// twice the lambda(k) weight: a,b* carry +1, a*,b carry -1 (in sqrt(q) units)
    int twice_left_weight() const { return p - jb + kb; }
    /// twice the rho(k)^{-1}-type weight: a,b carry +1, a*,b* carry -1
    int twice_right_weight() const { return p + jb - kb; }
};

template <class Ctx>
using CoordElement = std::map<CoordMono, typename Ctx::Scalar>;

template <class Ctx>
using CoordTensor = std::map<std::pair<CoordMono, CoordMono>, typename Ctx::Scalar>;

template <class Ctx>
void coord_add_term(const Ctx& ctx, CoordElement<Ctx>& dst, const CoordMono& m,
                    const typename Ctx::Scalar& c) {
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
CoordElement<Ctx> coord_one(const Ctx& ctx) {
    return {{CoordMono{}, ctx.one()}};
}

template <class Ctx>
CoordElement<Ctx> coord_gen(const Ctx& ctx, CoordGen g) {
    CoordMono m;
    switch (g) {
        case CoordGen::A: m.p = 1; break;
        case CoordGen::Astar: m.p = -1; break;
        case CoordGen::B: m.jb = 1; break;
        case CoordGen::Bstar: m.kb = 1; break;
    }
    return {{m, ctx.one()}};
}

template <class Ctx>
CoordElement<Ctx> coord_scale(const Ctx& ctx, const typename Ctx::Scalar& c, const CoordElement<Ctx>& x) {
    CoordElement<Ctx> out;
    for (const auto& [m, s] : x)
        coord_add_term(ctx, out, m, c * s);
    return out;
}

template <class Ctx>
CoordElement<Ctx> coord_sum(const Ctx& ctx, const CoordElement<Ctx>& x, const CoordElement<Ctx>& y) {
    CoordElement<Ctx> out = x;
    for (const auto& [m, s] : y)
        coord_add_term(ctx, out, m, s);
    return out;
}

template <class Ctx>
CoordElement<Ctx> coord_sub(const Ctx& ctx, const CoordElement<Ctx>& x, const CoordElement<Ctx>& y) {
    CoordElement<Ctx> out = x;
    for (const auto& [m, s] : y)
        coord_add_term(ctx, out, m, ctx.zero() - s);
    return out;
}

/// Multiply a normal-form element by one generator letter on the right.
template <class Ctx>
CoordElement<Ctx> coord_mul_letter(const Ctx& ctx, const CoordElement<Ctx>& x, CoordGen g) {
    CoordElement<Ctx> out;
    for (const auto& [m, c] : x) {
        switch (g) {
            case CoordGen::B:
                coord_add_term(ctx, out, CoordMono{m.p, m.jb + 1, m.kb}, c);
                break;
            case CoordGen::Bstar:
                coord_add_term(ctx, out, CoordMono{m.p, m.jb, m.kb + 1}, c);
                break;
            case CoordGen::A: {
                // b^j b*^k a = q^{j+k} a b^j b*^k
                auto w = c * ctx.q_pow(2 * (m.jb + m.kb));
                if (m.p >= 0) {
                    coord_add_term(ctx, out, CoordMono{m.p + 1, m.jb, m.kb}, w);
                } else {
                    // (a*)^s a = (a*)^{s-1} (1 - q^2 b b*)
                    coord_add_term(ctx, out, CoordMono{m.p + 1, m.jb, m.kb}, w);
                    coord_add_term(ctx, out, CoordMono{m.p + 1, m.jb + 1, m.kb + 1},
                                   ctx.zero() - w * ctx.q_pow(4));
                }
                break;
            }
            case CoordGen::Astar: {
                // b^j b*^k a* = q^{-(j+k)} a* b^j b*^k
                auto w = c * ctx.q_pow(-2 * (m.jb + m.kb));
                if (m.p <= 0) {
                    coord_add_term(ctx, out, CoordMono{m.p - 1, m.jb, m.kb}, w);
                } else {
                    // a^s a* = a^{s-1} (1 - b b*)
                    coord_add_term(ctx, out, CoordMono{m.p - 1, m.jb, m.kb}, w);
                    coord_add_term(ctx, out, CoordMono{m.p - 1, m.jb + 1, m.kb + 1}, ctx.zero() - w);
                }
                break;
            }
        }
    }
    return out;
}

inline std::vector<CoordGen> coord_mono_word(const CoordMono& m) {
    std::vector<CoordGen> w;
    for (int i = 0; i < std::abs(m.p); ++i) w.push_back(m.p > 0 ? CoordGen::A : CoordGen::Astar);
    for (int i = 0; i < m.jb; ++i) w.push_back(CoordGen::B);
    for (int i = 0; i < m.kb; ++i) w.push_back(CoordGen::Bstar);
    return w;
}

template <class Ctx>
CoordElement<Ctx> coord_mul(const Ctx& ctx, const CoordElement<Ctx>& x, const CoordElement<Ctx>& y) {
    CoordElement<Ctx> out;
    for (const auto& [my, cy] : y) {
        CoordElement<Ctx> acc = coord_scale(ctx, cy, x);
        for (CoordGen g : coord_mono_word(my))
            acc = coord_mul_letter(ctx, acc, g);
        for (const auto& [m, c] : acc)
            coord_add_term(ctx, out, m, c);
    }
    return out;
}

template <class Ctx>
CoordElement<Ctx> coord_from_word(const Ctx& ctx, const std::vector<CoordGen>& word) {
    CoordElement<Ctx> acc = coord_one(ctx);
    for (CoordGen g : word)
        acc = coord_mul_letter(ctx, acc, g);
    return acc;
}

/// star: (a^p b^j b*^k)* = q^{-p(j+k)} a^{-p} b^k b*^j with conjugated coefficient.
template <class Ctx>
CoordElement<Ctx> coord_star(const Ctx& ctx, const CoordElement<Ctx>& x) {
    CoordElement<Ctx> out;
    for (const auto& [m, c] : x)
        coord_add_term(ctx, out, CoordMono{-m.p, m.kb, m.jb},
                       ctx.conj(c) * ctx.q_pow(-2 * m.p * (m.jb + m.kb)));
    return out;
}

template <class Ctx>
typename Ctx::Scalar coord_counit(const Ctx& ctx, const CoordElement<Ctx>& x) {
    // eps(a) = eps(a*) = 1, eps(b) = eps(b*) = 0
    auto s = ctx.zero();
    for (const auto& [m, c] : x)
        if (m.jb == 0 && m.kb == 0)
            s = s + c;
    return s;
}

template <class Ctx>
int coord_degree(const CoordElement<Ctx>& x) {
    int d = 0;
    for (const auto& [m, c] : x)
        d = std::max(d, m.degree());
    return d;
}

/// Drop terms with |coefficient| <= tol (numeric dust after cancellations).
template <class Ctx>
CoordElement<Ctx> coord_chop(const Ctx& ctx, const CoordElement<Ctx>& x, double tol) {
    CoordElement<Ctx> out;
    for (const auto& [m, c] : x)
        if (!ctx.negligible(c, tol))
            out.emplace(m, c);
    return out;
}

// ---------------------------------------------------------------------------
// coproduct
// ---------------------------------------------------------------------------

template <class Ctx>
void coord_tensor_add(const Ctx& ctx, CoordTensor<Ctx>& dst, const CoordMono& l, const CoordMono& r,
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

/// Delta a = a(x)a - q b(x)b*,  Delta b = b(x)a* + a(x)b, and the starred
/// versions; extended multiplicatively over the letters of each monomial.
template <class Ctx>
CoordTensor<Ctx> coord_coproduct(const Ctx& ctx, const CoordElement<Ctx>& x) {
    using S = typename Ctx::Scalar;
    CoordTensor<Ctx> out;
    const S one = ctx.one();
    const S mq = ctx.zero() - ctx.q_pow(2);      // -q
    const S mqinv = ctx.zero() - ctx.q_pow(-2);  // -q^{-1} (unused; kept for clarity)
    (void)mqinv;
    for (const auto& [m, c] : x) {
        CoordTensor<Ctx> acc;
        coord_tensor_add(ctx, acc, CoordMono{}, CoordMono{}, c);
        auto mul_letter = [&](CoordGen g) {
            // legs of Delta(g)
            std::vector<std::tuple<CoordGen, CoordGen, S>> legs;
            switch (g) {
                case CoordGen::A:
                    legs = {{CoordGen::A, CoordGen::A, one}, {CoordGen::B, CoordGen::Bstar, mq}};
                    break;
                case CoordGen::B:
                    legs = {{CoordGen::B, CoordGen::Astar, one}, {CoordGen::A, CoordGen::B, one}};
                    break;
                case CoordGen::Astar:
                    legs = {{CoordGen::Astar, CoordGen::Astar, one}, {CoordGen::Bstar, CoordGen::B, mq}};
                    break;
                case CoordGen::Bstar:
                    legs = {{CoordGen::Bstar, CoordGen::A, one}, {CoordGen::Astar, CoordGen::Bstar, one}};
                    break;
            }
            CoordTensor<Ctx> next;
            for (const auto& [pair, cc] : acc) {
                for (const auto& [gl, gr, lc] : legs) {
                    CoordElement<Ctx> l =
                        coord_mul_letter(ctx, CoordElement<Ctx>{{pair.first, ctx.one()}}, gl);
                    CoordElement<Ctx> r =
                        coord_mul_letter(ctx, CoordElement<Ctx>{{pair.second, ctx.one()}}, gr);
                    for (const auto& [lm, lco] : l)
                        for (const auto& [rm, rco] : r)
                            coord_tensor_add(ctx, next, lm, rm, cc * lc * lco * rco);
                }
            }
            acc = std::move(next);
        };
        for (CoordGen g : coord_mono_word(m))
            mul_letter(g);
        for (const auto& [pair, cc] : acc)
            coord_tensor_add(ctx, out, pair.first, pair.second, cc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// dual pairing  <U_q(su(2)), O(SU_q(2))>
// ---------------------------------------------------------------------------

/// Pairing of a single generator letter with a single generator letter.
/// <k^{pm1}, a> = q^{pm 1/2}, <k^{pm1}, a*> = q^{mp 1/2}, <f, b> = 1,
/// <e, b*> = -q^{-1}, zero otherwise.
template <class Ctx>
typename Ctx::Scalar pair_letters(const Ctx& ctx, UqGen h, CoordGen x) {
    switch (h) {
        case UqGen::K:
            if (x == CoordGen::A) return ctx.q_pow(1);
            if (x == CoordGen::Astar) return ctx.q_pow(-1);
            return ctx.zero();
        case UqGen::Kinv:
            if (x == CoordGen::A) return ctx.q_pow(-1);
            if (x == CoordGen::Astar) return ctx.q_pow(1);
            return ctx.zero();
        case UqGen::F:
            return x == CoordGen::B ? ctx.one() : ctx.zero();
        case UqGen::E:
            return x == CoordGen::Bstar ? (ctx.zero() - ctx.q_pow(-2)) : ctx.zero();
    }
    return ctx.zero();
}

/// <generator letter, normal-form monomial> through Delta of the letter.
template <class Ctx>
typename Ctx::Scalar pair_letter_mono(const Ctx& ctx, UqGen h, const CoordMono& m) {
    using S = typename Ctx::Scalar;
    std::vector<CoordGen> w = coord_mono_word(m);
    if (w.empty()) // <h, 1> = eps(h)
        return (h == UqGen::K || h == UqGen::Kinv) ? ctx.one() : ctx.zero();
    // <k, x1...xd> multiplies; <e/f, .> expands over the position of the e/f leg.
    auto kweight = [&](CoordGen g, bool inverse) -> S {
        S v = pair_letters(ctx, inverse ? UqGen::Kinv : UqGen::K, g);
        return v; // zero kills the whole term (b, b* have no k-pairing)
    };
    if (h == UqGen::K || h == UqGen::Kinv) {
        S acc = ctx.one();
        for (CoordGen g : w) {
            S v = kweight(g, h == UqGen::Kinv);
            if (ctx.is_zero(v))
                return ctx.zero();
            acc = acc * v;
        }
        return acc;
    }
    // Delta^{(d)} h = sum_p k^{-1} (x) ... (x) h at p (x) k (x) ... (x) k
    S total = ctx.zero();
    for (size_t p = 0; p < w.size(); ++p) {
        S term = pair_letters(ctx, h, w[p]);
        if (ctx.is_zero(term))
            continue;
        bool dead = false;
        for (size_t i = 0; i < p && !dead; ++i) {
            S v = kweight(w[i], true);
            if (ctx.is_zero(v)) dead = true; else term = term * v;
        }
        for (size_t i = p + 1; i < w.size() && !dead; ++i) {
            S v = kweight(w[i], false);
            if (ctx.is_zero(v)) dead = true; else term = term * v;
        }
        if (!dead)
            total = total + term;
    }
    return total;
}

/// Full Hopf pairing <h, x>, extended by <gh, x> = <g, x_(1)><h, x_(2)>.
template <class Ctx>
typename Ctx::Scalar pair(const Ctx& ctx, const UqElement<Ctx>& h, const CoordElement<Ctx>& x) {
    using S = typename Ctx::Scalar;
    S total = ctx.zero();
    for (const auto& [hm, hc] : h) {
        for (const auto& [xm, xc] : x) {
            S factor = hc * xc;
            // peel generator letters off the U_q monomial from the left
            std::vector<UqGen> hw = uq_mono_word<Ctx>(hm);
            // recursive worker over (remaining uq word, coord monomial)
            auto rec = [&](auto&& self, std::span<const UqGen> word, const CoordMono& cm) -> S {
                if (word.empty()) { // <1, x> = eps(x)
                    return (cm.jb == 0 && cm.kb == 0) ? ctx.one() : ctx.zero();
                }
                if (word.size() == 1)
                    return pair_letter_mono(ctx, word[0], cm);
                // <g h', x> = sum <g, x_(1)> <h', x_(2)>
                UqGen g = word[0];
                auto rest = word.subspan(1);
                CoordTensor<Ctx> dx = coord_coproduct(ctx, CoordElement<Ctx>{{cm, ctx.one()}});
                S acc = ctx.zero();
                for (const auto& [pr, pc] : dx) {
                    S left = pair_letter_mono(ctx, g, pr.first);
                    if (ctx.is_zero(left))
                        continue;
                    S right = self(self, rest, pr.second);
                    acc = acc + pc * left * right;
                }
                return acc;
            };
            total = total + factor * rec(rec, std::span<const UqGen>(hw), xm);
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// left and right actions
// ---------------------------------------------------------------------------

namespace detail {

/// letter weights in sqrt(q) units for k acting from the left / right
inline int left_kweight(CoordGen g) {
    switch (g) {
        case CoordGen::A: return 1;
        case CoordGen::Astar: return -1;
        case CoordGen::B: return -1;
        case CoordGen::Bstar: return 1;
    }
    return 0;
}
inline int right_kweight(CoordGen g) {
    switch (g) {
        case CoordGen::A: return 1;
        case CoordGen::Astar: return -1;
        case CoordGen::B: return 1;
        case CoordGen::Bstar: return -1;
    }
    return 0;
}

} // namespace detail

/// k |> x for one normal-form monomial: q^{(left weight)/2} x.
template <class Ctx>
CoordElement<Ctx> act_left_k(const Ctx& ctx, const CoordElement<Ctx>& x, bool inverse) {
    CoordElement<Ctx> out;
    for (const auto& [m, c] : x) {
        int w = m.twice_left_weight();
        coord_add_term(ctx, out, m, c * ctx.q_pow(inverse ? -w : w));
    }
    return out;
}

/// e |> and f |> via the twisted-derivation expansion over letter positions
/// (reference implementation; the grouped fast path below must agree with it).
/// e: a -> b, b* -> -q^{-1} a*;  f: b -> a, a* -> -q b*.
template <class Ctx>
CoordElement<Ctx> act_left_ef_generic(const Ctx& ctx, const CoordElement<Ctx>& x, bool is_e) {
    using S = typename Ctx::Scalar;
    CoordElement<Ctx> out;
    for (const auto& [m, c] : x) {
        std::vector<CoordGen> w = coord_mono_word(m);
        for (size_t p = 0; p < w.size(); ++p) {
            CoordGen rep;
            S coeff = c;
            if (is_e) {
                if (w[p] == CoordGen::A) rep = CoordGen::B;
                else if (w[p] == CoordGen::Bstar) { rep = CoordGen::Astar; coeff = ctx.zero() - coeff * ctx.q_pow(-2); }
                else continue;
            } else {
                if (w[p] == CoordGen::B) rep = CoordGen::A;
                else if (w[p] == CoordGen::Astar) { rep = CoordGen::Bstar; coeff = ctx.zero() - coeff * ctx.q_pow(2); }
                else continue;
            }
            int tw = 0; // accumulated k-weights: k^{-1} before p, k after p
            for (size_t i = 0; i < p; ++i) tw -= detail::left_kweight(w[i]);
            for (size_t i = p + 1; i < w.size(); ++i) tw += detail::left_kweight(w[i]);
            coeff = coeff * ctx.q_pow(tw);
            std::vector<CoordGen> nw = w;
            nw[p] = rep;
            auto canon = coord_from_word(ctx, nw);
            for (const auto& [nm, nc] : canon)
                coord_add_term(ctx, out, nm, coeff * nc);
        }
    }
    return out;
}

/// x <| e and x <| f (reference implementation).
/// e: b* -> -q^{-1} a, a* -> b;  f: a -> -q b*, b -> a*.
template <class Ctx>
CoordElement<Ctx> act_right_ef_generic(const Ctx& ctx, const CoordElement<Ctx>& x, bool is_e) {
    using S = typename Ctx::Scalar;
    CoordElement<Ctx> out;
    for (const auto& [m, c] : x) {
        std::vector<CoordGen> w = coord_mono_word(m);
        for (size_t p = 0; p < w.size(); ++p) {
            CoordGen rep;
            S coeff = c;
            if (is_e) {
                if (w[p] == CoordGen::Bstar) { rep = CoordGen::A; coeff = ctx.zero() - coeff * ctx.q_pow(-2); }
                else if (w[p] == CoordGen::Astar) rep = CoordGen::B;
                else continue;
            } else {
                if (w[p] == CoordGen::A) { rep = CoordGen::Bstar; coeff = ctx.zero() - coeff * ctx.q_pow(2); }
                else if (w[p] == CoordGen::B) rep = CoordGen::Astar;
                else continue;
            }
            int tw = 0;
            for (size_t i = 0; i < p; ++i) tw -= detail::right_kweight(w[i]);
            for (size_t i = p + 1; i < w.size(); ++i) tw += detail::right_kweight(w[i]);
            coeff = coeff * ctx.q_pow(tw);
            std::vector<CoordGen> nw = w;
            nw[p] = rep;
            auto canon = coord_from_word(ctx, nw);
            for (const auto& [nm, nc] : canon)
                coord_add_term(ctx, out, nm, coeff * nc);
        }
    }
    return out;
}

/// Grouped fast paths for the generator actions on normal-form monomials.
/// Each replacement inserts one letter whose migration to canonical position
/// contributes a q-power, with the single a a* / a* a split at the a-group.
/// Exponents are in sqrt(q) units (twice-values), matching ctx.q_pow.
template <class Ctx>
CoordElement<Ctx> act_left_ef(const Ctx& ctx, const CoordElement<Ctx>& x, bool is_e) {
    using S = typename Ctx::Scalar;
    CoordElement<Ctx> out;
    for (const auto& [m, c] : x) {
        const int p = m.p, j = m.jb, k = m.kb;
        if (is_e) {
            // a -> b (p > 0 side)
            for (int i = 0; p > 0 && i < p; ++i) {
                int tw = (p - 1 - 2 * i - j + k) + 2 * (p - 1 - i);
                coord_add_term(ctx, out, CoordMono{p - 1, j + 1, k}, c * ctx.q_pow(tw));
            }
            // b* -> -q^{-1} a*
            for (int i = 0; i < k; ++i) {
                int tw = (k - 1 - 2 * i - p + j) - 2 * i - 2 * j;
                S cc = ctx.zero() - c * ctx.q_pow(tw - 2);
                if (p > 0) {
                    coord_add_term(ctx, out, CoordMono{p - 1, j, k - 1}, cc);
                    coord_add_term(ctx, out, CoordMono{p - 1, j + 1, k}, ctx.zero() - cc);
                } else {
                    coord_add_term(ctx, out, CoordMono{p - 1, j, k - 1}, cc);
                }
            }
        } else {
            // b -> a
            for (int i = 0; i < j; ++i) {
                int tw = (-(j - 1 - i) + k - p + i) + 2 * i;
                S cc = c * ctx.q_pow(tw);
                if (p < 0) {
                    coord_add_term(ctx, out, CoordMono{p + 1, j - 1, k}, cc);
                    coord_add_term(ctx, out, CoordMono{p + 1, j, k + 1}, ctx.zero() - cc * ctx.q_pow(4));
                } else {
                    coord_add_term(ctx, out, CoordMono{p + 1, j - 1, k}, cc);
                }
            }
            // a* -> -q b* (p < 0 side)
            const int ap = -p;
            for (int i = 0; p < 0 && i < ap; ++i) {
                int tw = (-(ap - 1 - i) - j + k + i) - 2 * (ap - 1 - i);
                coord_add_term(ctx, out, CoordMono{p + 1, j, k + 1}, ctx.zero() - c * ctx.q_pow(tw + 2));
            }
        }
    }
    return out;
}

template <class Ctx>
CoordElement<Ctx> act_right_ef(const Ctx& ctx, const CoordElement<Ctx>& x, bool is_e) {
    using S = typename Ctx::Scalar;
    CoordElement<Ctx> out;
    for (const auto& [m, c] : x) {
        const int p = m.p, j = m.jb, k = m.kb;
        if (is_e) {
            // b* -> -q^{-1} a
            for (int i = 0; i < k; ++i) {
                int tw = (-(k - 1 - i) - p - j + i) + 2 * i + 2 * j;
                S cc = ctx.zero() - c * ctx.q_pow(tw - 2);
                if (p < 0) {
                    coord_add_term(ctx, out, CoordMono{p + 1, j, k - 1}, cc);
                    coord_add_term(ctx, out, CoordMono{p + 1, j + 1, k}, ctx.zero() - cc * ctx.q_pow(4));
                } else {
                    coord_add_term(ctx, out, CoordMono{p + 1, j, k - 1}, cc);
                }
            }
            // a* -> b (p < 0 side)
            const int ap = -p;
            for (int i = 0; p < 0 && i < ap; ++i) {
                int tw = (-(ap - 1 - i) + j - k + i) - 2 * (ap - 1 - i);
                coord_add_term(ctx, out, CoordMono{p + 1, j + 1, k}, c * ctx.q_pow(tw));
            }
        } else {
            // a -> -q b* (p > 0 side)
            for (int i = 0; p > 0 && i < p; ++i) {
                int tw = (p - 1 - 2 * i + j - k) + 2 * (p - 1 - i);
                coord_add_term(ctx, out, CoordMono{p - 1, j, k + 1}, ctx.zero() - c * ctx.q_pow(tw + 2));
            }
            // b -> a*
            for (int i = 0; i < j; ++i) {
                int tw = (j - 1 - 2 * i - k - p) - 2 * i;
                S cc = c * ctx.q_pow(tw);
                if (p > 0) {
                    coord_add_term(ctx, out, CoordMono{p - 1, j - 1, k}, cc);
                    coord_add_term(ctx, out, CoordMono{p - 1, j, k + 1}, ctx.zero() - cc);
                } else {
                    coord_add_term(ctx, out, CoordMono{p - 1, j - 1, k}, cc);
                }
            }
        }
    }
    return out;
}

template <class Ctx>
CoordElement<Ctx> act_right_k(const Ctx& ctx, const CoordElement<Ctx>& x, bool inverse) {
    CoordElement<Ctx> out;
    for (const auto& [m, c] : x) {
        int w = m.twice_right_weight();
        coord_add_term(ctx, out, m, c * ctx.q_pow(inverse ? -w : w));
    }
    return out;
}

/// h |> x for an arbitrary PBW element h (module property: (gh) |> x = g |> (h |> x)).
template <class Ctx>
CoordElement<Ctx> act_left(const Ctx& ctx, const UqElement<Ctx>& h, const CoordElement<Ctx>& x) {
    CoordElement<Ctx> out;
    for (const auto& [m, c] : h) {
        CoordElement<Ctx> acc = x;
        for (int i = 0; i < m.ej; ++i) acc = act_left_ef(ctx, acc, true);
        for (int i = 0; i < std::abs(m.kn); ++i) acc = act_left_k(ctx, acc, m.kn < 0);
        for (int i = 0; i < m.fi; ++i) acc = act_left_ef(ctx, acc, false);
        for (const auto& [am, ac] : acc)
            coord_add_term(ctx, out, am, c * ac);
    }
    return out;
}

/// x <| h for an arbitrary PBW element ((xy) <| h folds the other way:
/// x <| (gh) = (x <| g) <| h).
template <class Ctx>
CoordElement<Ctx> act_right(const Ctx& ctx, const CoordElement<Ctx>& x, const UqElement<Ctx>& h) {
    CoordElement<Ctx> out;
    for (const auto& [m, c] : h) {
        CoordElement<Ctx> acc = x;
        for (int i = 0; i < m.fi; ++i) acc = act_right_ef(ctx, acc, false);
        for (int i = 0; i < std::abs(m.kn); ++i) acc = act_right_k(ctx, acc, m.kn < 0);
        for (int i = 0; i < m.ej; ++i) acc = act_right_ef(ctx, acc, true);
        for (const auto& [am, ac] : acc)
            coord_add_term(ctx, out, am, c * ac);
    }
    return out;
}

/// rho_psi(h) x = x <| S^{-1}(h); generator shortcuts keep the hot paths cheap.
template <class Ctx>
CoordElement<Ctx> rho_psi_gen(const Ctx& ctx, UqGen g, const CoordElement<Ctx>& x) {
    switch (g) {
        case UqGen::K: return act_right_k(ctx, x, true);
        case UqGen::Kinv: return act_right_k(ctx, x, false);
        case UqGen::E: return coord_scale(ctx, ctx.zero() - ctx.q_pow(2), act_right_ef(ctx, x, true));
        case UqGen::F: return coord_scale(ctx, ctx.zero() - ctx.q_pow(-2), act_right_ef(ctx, x, false));
    }
    return {};
}

// ---------------------------------------------------------------------------
// Haar state
// ---------------------------------------------------------------------------

/// Values psi((b b*)^n), derived incrementally from left invariance:
/// psi(e |> (a b^{n-1} b*^n)) = 0 couples (b b*)^n to (b b*)^{n-1}.
/// Nothing is taken from the literature; the derivation runs at construction.
template <class Ctx>
class HaarTable {
public:
    explicit HaarTable(const Ctx& ctx) : ctx_(ctx) { values_.push_back(ctx.one()); }

    const typename Ctx::Scalar& value(int n) {
        using S = typename Ctx::Scalar;
        while (static_cast<int>(values_.size()) <= n) {
            int m = static_cast<int>(values_.size());
            CoordElement<Ctx> probe{{CoordMono{1, m - 1, m}, ctx_.one()}};
            CoordElement<Ctx> y = act_left_ef(ctx_, probe, true);
            S c_high = ctx_.zero(), c_low = ctx_.zero();
            for (const auto& [mm, cc] : y) {
                if (mm == CoordMono{0, m, m}) c_high = c_high + cc;
                else if (mm == CoordMono{0, m - 1, m - 1}) c_low = c_low + cc;
                else if (!ctx_.negligible(cc, 1e-13))
                    throw std::logic_error("Haar invariance probe left the (b b*)^n line");
            }
            if (ctx_.is_zero(c_high))
                throw std::logic_error("Haar invariance equation is degenerate");
            values_.push_back((ctx_.zero() - c_low * values_.back()) / c_high);
        }
        return values_[n];
    }

private:
    Ctx ctx_;
    std::vector<typename Ctx::Scalar> values_;
};

/// psi(x): kills every normal-form monomial except (b b*)^n.
template <class Ctx>
typename Ctx::Scalar haar(const Ctx& ctx, const CoordElement<Ctx>& x, HaarTable<Ctx>& table) {
    auto s = ctx.zero();
    for (const auto& [m, c] : x)
        if (m.p == 0 && m.jb == m.kb)
            s = s + c * table.value(m.jb);
    return s;
}

/// <x, y> = psi(y* x)
template <class Ctx>
typename Ctx::Scalar inner_product(const Ctx& ctx, const CoordElement<Ctx>& x, const CoordElement<Ctx>& y,
                                   HaarTable<Ctx>& table) {
    return haar(ctx, coord_mul(ctx, coord_star(ctx, y), x), table);
}

// ---------------------------------------------------------------------------
// Podles sphere embeddings
// ---------------------------------------------------------------------------

enum class PodlesGen { A, B, Bstar, X1, X0, Xm1 };

/// Images of the Podles generators inside O(SU_q(2)).
/// c < inf:  B = c^{1/2} a*^2 + a* b - q c^{1/2} b^2,  A = c^{1/2} b* a* + b b* + c^{1/2} a b
/// c = inf:  B = a*^2 - q b^2,                         A = b* a* + a b
/// x_{-1} = q^{-1}(1+q^2)^{1/2} B,  x_1 = -(1+q^2)^{1/2} B*,
/// x_0 = 1 - (1+q^2) A (c < inf) or -(1+q^2) A (c = inf).
template <class Ctx>
CoordElement<Ctx> embed_podles(const Ctx& ctx, PodlesGen g, const PodlesC& c,
                               const typename Ctx::Scalar& sqrt_c, const typename Ctx::Scalar& sqrt_1q2) {
    using S = typename Ctx::Scalar;
    auto word = [&](std::vector<CoordGen> w) { return coord_from_word(ctx, w); };
    auto scaled = [&](const S& s, CoordElement<Ctx> el) { return coord_scale(ctx, s, el); };

    CoordElement<Ctx> B, A;
    if (c.finite) {
        B = coord_sum(ctx, scaled(sqrt_c, word({CoordGen::Astar, CoordGen::Astar})),
                      word({CoordGen::Astar, CoordGen::B}));
        B = coord_sum(ctx, B, scaled(ctx.zero() - ctx.q_pow(2) * sqrt_c, word({CoordGen::B, CoordGen::B})));
        A = coord_sum(ctx, scaled(sqrt_c, word({CoordGen::Bstar, CoordGen::Astar})),
                      word({CoordGen::B, CoordGen::Bstar}));
        A = coord_sum(ctx, A, scaled(sqrt_c, word({CoordGen::A, CoordGen::B})));
    } else {
        B = coord_sub(ctx, word({CoordGen::Astar, CoordGen::Astar}),
                      scaled(ctx.q_pow(2), word({CoordGen::B, CoordGen::B})));
        A = coord_sum(ctx, word({CoordGen::Bstar, CoordGen::Astar}), word({CoordGen::A, CoordGen::B}));
    }

    const S one_q2 = ctx.one() + ctx.q_pow(4); // 1 + q^2
    switch (g) {
        case PodlesGen::A: return A;
        case PodlesGen::B: return B;
        case PodlesGen::Bstar: return coord_star(ctx, B);
        case PodlesGen::Xm1: return scaled(ctx.q_pow(-2) * sqrt_1q2, B);
        case PodlesGen::X1: return scaled(ctx.zero() - sqrt_1q2, coord_star(ctx, B));
        case PodlesGen::X0: {
            auto scaledA = scaled(ctx.zero() - one_q2, A);
            if (c.finite)
                return coord_sum(ctx, coord_one(ctx), scaledA);
            return scaledA;
        }
    }
    return {};
}

} // namespace qsu2

#endif // QSU2_COORD_HPP
