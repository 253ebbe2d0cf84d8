#include "qsu2/coord.hpp"

#include <doctest.h>

#include <random>

using namespace qsu2;

namespace {

using Ctx = ExactCtx;
using UE = UqElement<Ctx>;

bool is_zero(const Ctx& ctx, const UE& x) {
    for (const auto& [m, c] : x)
        if (!ctx.is_zero(c))
            return false;
    return true;
}

UE minus(const Ctx& ctx, UE x, const UE& y) {
    for (const auto& [m, c] : y)
        uq_add_term(ctx, x, m, ctx.zero() - c);
    return x;
}

} // namespace

TEST_SUITE("uq") {

TEST_CASE("defining relations in normal form") {
    Ctx ctx((Rational(2, 5)));
    auto e = uq_gen(ctx, UqGen::E), f = uq_gen(ctx, UqGen::F), k = uq_gen(ctx, UqGen::K),
         ki = uq_gen(ctx, UqGen::Kinv);
    CHECK(is_zero(ctx, minus(ctx, uq_mul(ctx, k, ki), uq_one(ctx))));
    CHECK(is_zero(ctx, minus(ctx, uq_mul(ctx, e, k), uq_scale(ctx, ctx.q_pow(2), uq_mul(ctx, k, e)))));
    CHECK(is_zero(ctx, minus(ctx, uq_mul(ctx, k, f), uq_scale(ctx, ctx.q_pow(2), uq_mul(ctx, f, k)))));
    // f e - e f = (q - q^{-1})^{-1} (k^2 - k^{-2})
    UE comm = minus(ctx, uq_mul(ctx, f, e), uq_mul(ctx, e, f));
    auto c = ctx.inv(ctx.q_pow(2) - ctx.q_pow(-2));
    UE rhs{{UqMono{0, 2, 0}, c}, {UqMono{0, -2, 0}, ctx.zero() - c}};
    CHECK(is_zero(ctx, minus(ctx, comm, rhs)));
}

TEST_CASE("antipode and star on generators") {
    Ctx ctx((Rational(1, 2)));
    auto e = uq_gen(ctx, UqGen::E), f = uq_gen(ctx, UqGen::F), k = uq_gen(ctx, UqGen::K);
    // S(f) = -q f, S(e) = -q^{-1} e, S(k) = k^{-1}
    CHECK(is_zero(ctx, minus(ctx, uq_antipode(ctx, f), uq_scale(ctx, ctx.zero() - ctx.q_pow(2), f))));
    CHECK(is_zero(ctx, minus(ctx, uq_antipode(ctx, e), uq_scale(ctx, ctx.zero() - ctx.q_pow(-2), e))));
    CHECK(is_zero(ctx, minus(ctx, uq_antipode(ctx, k), uq_gen(ctx, UqGen::Kinv))));
    // e* = f, k* = k
    CHECK(is_zero(ctx, minus(ctx, uq_star(ctx, e), f)));
    CHECK(is_zero(ctx, minus(ctx, uq_star(ctx, k), k)));
    // S^{-1} inverts S on a product
    UE x = uq_mul(ctx, uq_mul(ctx, f, k), e);
    CHECK(is_zero(ctx, minus(ctx, uq_antipode_inv(ctx, uq_antipode(ctx, x)), x)));
}

TEST_CASE("coproduct of k is group-like") {
    Ctx ctx((Rational(1, 2)));
    auto dk = uq_coproduct(ctx, uq_gen(ctx, UqGen::K));
    REQUIRE(dk.size() == 1);
    CHECK(dk.begin()->first.first == UqMono{0, 1, 0});
    CHECK(dk.begin()->first.second == UqMono{0, 1, 0});
}

TEST_CASE("pbw confluence on random words") {
    Ctx ctx((Rational(1, 2)));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(2, 8), gen(0, 3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = len(rng);
        std::vector<UqGen> word;
        for (int i = 0; i < n; ++i)
            word.push_back(static_cast<UqGen>(gen(rng)));
        UE left = uq_from_word(ctx, word);
        UE right = uq_one(ctx);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            right = uq_mul(ctx, uq_gen(ctx, *it), right);
        CHECK(is_zero(ctx, minus(ctx, left, right)));
    }
}

TEST_CASE("pairing table and duality") {
    Ctx ctx((Rational(1, 2)));
    auto k = uq_gen(ctx, UqGen::K), e = uq_gen(ctx, UqGen::E);
    auto a = coord_gen(ctx, CoordGen::A), bs = coord_gen(ctx, CoordGen::Bstar);
    CHECK((pair(ctx, k, a) == ctx.q_pow(1)));
    CHECK((pair(ctx, e, bs) == ctx.zero() - ctx.q_pow(-2)));
    CHECK((pair(ctx, k, coord_mul(ctx, a, a)) == ctx.q_pow(2)));
    // <h, 1> = eps(h)
    CHECK((pair(ctx, e, coord_one(ctx)) == ctx.zero()));
    CHECK((pair(ctx, k, coord_one(ctx)) == ctx.one()));
}

} // TEST_SUITE
