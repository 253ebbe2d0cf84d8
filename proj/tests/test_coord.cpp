#include "qsu2/heisenberg.hpp"
#include "qsu2/suites.hpp"

#include <doctest.h>

#include <random>

using namespace qsu2;

namespace {

using LE = CoordElement<LadderCtx>;

bool same(const LadderCtx& ctx, const LE& x, const LE& y) {
    return coord_sub(ctx, x, y).empty();
}

} // namespace

TEST_SUITE("coord") {

TEST_CASE("normal form relations") {
    LadderCtx ctx((Rational(1, 2)));
    auto a = coord_gen(ctx, CoordGen::A), as = coord_gen(ctx, CoordGen::Astar),
         b = coord_gen(ctx, CoordGen::B), bs = coord_gen(ctx, CoordGen::Bstar);
    // b a = q a b
    CHECK(same(ctx, coord_mul(ctx, b, a), coord_scale(ctx, ctx.q_pow(2), coord_mul(ctx, a, b))));
    // a* a = 1 - q^2 b b*
    LE rhs = coord_sub(ctx, coord_one(ctx), coord_scale(ctx, ctx.q_pow(4), coord_mul(ctx, b, bs)));
    CHECK(same(ctx, coord_mul(ctx, as, a), rhs));
    // a a* = 1 - b b*
    CHECK(same(ctx, coord_mul(ctx, a, as),
               coord_sub(ctx, coord_one(ctx), coord_mul(ctx, b, bs))));
    // star is an involution on a mixed word
    LE w = coord_mul(ctx, coord_mul(ctx, as, b), coord_mul(ctx, a, bs));
    CHECK(same(ctx, coord_star(ctx, coord_star(ctx, w)), w));
}

TEST_CASE("grouped action fast paths equal the word-based reference") {
    LadderCtx ctx((Rational(2, 7)));
    for (int p = -5; p <= 5; ++p)
        for (int j = 0; j <= 4; ++j)
            for (int k = 0; k <= 4; ++k) {
                LE m{{CoordMono{p, j, k}, ctx.one()}};
                for (bool is_e : {true, false}) {
                    CHECK(same(ctx, act_left_ef(ctx, m, is_e), act_left_ef_generic(ctx, m, is_e)));
                    CHECK(same(ctx, act_right_ef(ctx, m, is_e), act_right_ef_generic(ctx, m, is_e)));
                }
            }
}

TEST_CASE("left action on generators") {
    LadderCtx ctx((Rational(1, 2)));
    auto a = coord_gen(ctx, CoordGen::A), b = coord_gen(ctx, CoordGen::B);
    // k |> a = q^{1/2} a
    CHECK(same(ctx, act_left_k(ctx, a, false), coord_scale(ctx, ctx.q_pow(1), a)));
    // e |> a = b
    CHECK(same(ctx, act_left_ef(ctx, a, true), b));
    // f |> b = a
    CHECK(same(ctx, act_left_ef(ctx, b, false), a));
    // k |> 1 = 1
    CHECK(same(ctx, act_left_k(ctx, coord_one(ctx), false), coord_one(ctx)));
    // e |> 1 = 0
    CHECK(act_left_ef(ctx, coord_one(ctx), true).empty());
}

TEST_CASE("haar against the invariance oracle and between routes") {
    for (double q : {0.4, 0.5}) {
        auto oracle = haar_brute_force(q, 3);
        LmnBasis tiny(QParam(q, PodlesC::infinite()), HalfInt::whole(1));
        LadderCtx ctx((Rational(q)));
        for (int n = 0; n <= 3; ++n) {
            LE mono{{CoordMono{0, n, n}, ctx.one()}};
            double mine = qs_to_double(tiny.haar_exact(mono), ctx.q);
            CHECK(mine == doctest::Approx(oracle[n]).epsilon(1e-10));
        }
        // frozen regression values at q = 1/2 from the invariance solve
        if (q == 0.5) {
            LE m1{{CoordMono{0, 1, 1}, ctx.one()}};
            LE m2{{CoordMono{0, 2, 2}, ctx.one()}};
            CHECK(qs_to_double(tiny.haar_exact(m1), ctx.q) == doctest::Approx(0.8).epsilon(1e-14));
            CHECK(qs_to_double(tiny.haar_exact(m2), ctx.q) ==
                  doctest::Approx(16.0 / 21.0).epsilon(1e-14));
        }
        // psi kills off-line monomials
        LE off{{CoordMono{1, 0, 0}, ctx.one()}};
        CHECK(qs_to_double(tiny.haar_exact(off), ctx.q) == 0.0);
    }
}

TEST_CASE("podles embeddings") {
    LadderCtx ctx((Rational(1, 2)));
    // B at c = inf is a*^2 - q b^2
    LE b_inf = embed_podles_exact(ctx, PodlesGen::B, PodlesC::infinite());
    LE expect{{CoordMono{-2, 0, 0}, ctx.one()}, {CoordMono{0, 2, 0}, -ctx.q_pow(2)}};
    CHECK(same(ctx, b_inf, expect));
    // A at c = 0 is b b*
    LE a0 = embed_podles_exact(ctx, PodlesGen::A, PodlesC::value(0.0));
    CHECK(same(ctx, a0, LE{{CoordMono{0, 1, 1}, ctx.one()}}));
    // exact embedding rejects c without a rational square root
    CHECK_THROWS_AS(embed_podles_exact(ctx, PodlesGen::B, PodlesC::value(2.0)), std::invalid_argument);
    // numeric x_{-1} at c = inf is q^{-1}(1+q^2)^{1/2} B
    NumericCtx nctx(0.5);
    auto xm1 = embed_podles_numeric(nctx, PodlesGen::Xm1, PodlesC::infinite());
    auto bi = embed_podles_numeric(nctx, PodlesGen::B, PodlesC::infinite());
    auto scaled = coord_scale(nctx, complexd(std::sqrt(1.25) / 0.5, 0.0), bi);
    double err = 0;
    auto d = coord_sub(nctx, xm1, scaled);
    for (auto& [m, c] : d)
        err = std::max(err, std::abs(c));
    CHECK(err < 1e-14);
}

TEST_CASE("monomial index and dimension law") {
    MonomialIndex m2(2);
    CHECK(m2.size() == 14); // sum of k^2, k = 1..3
    MonomialIndex m4(4);
    CHECK(m4.size() == 1 + 4 + 9 + 16 + 25);
    CHECK(m2.index_of(CoordMono{0, 0, 0}) >= 0);
    CHECK(m2.index_of(CoordMono{3, 0, 0}) == -1);
}

} // TEST_SUITE
