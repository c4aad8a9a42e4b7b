#include <random>

#include "doctest.h"
#include "supercong/errors.hpp"
#include "supercong/modular.hpp"

using namespace supercong;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Residue of a p-adic integer by brute force: smallest r >= 0 with den * r == num mod p^m.
std::uint64_t brute_residue(long num, long den, std::uint64_t mod) {
    for (std::uint64_t r = 0; r < mod; ++r) {
        __int128 lhs = static_cast<__int128>(den) * static_cast<__int128>(r) - num;
        if (lhs % static_cast<__int128>(mod) == 0) return r;
    }
    return mod;
}

}  // namespace

TEST_CASE("padic reduction examples") {
    PrimePowerCtx ctx(5, 2);
    PadicValue half = padic_reduce(BigRational(1, 2), ctx);
    CHECK(half.v() == 0);
    CHECK(half.u() == 13);
    PadicValue ten_thirds = padic_reduce(BigRational(10, 3), ctx);
    CHECK(ten_thirds.v() == 1);
    CHECK(ten_thirds.u() == 9);
    CHECK(ten_thirds.residue() == 5 * 9 % 25);
    PadicValue fifth = padic_reduce(BigRational(1, 5), ctx);
    CHECK(fifth.v() == -1);
    CHECK_THROWS_AS(fifth.residue(), NegativeValuation);
    CHECK(padic_reduce(0, ctx).is_zero());
}

TEST_CASE("modular inverse") {
    PrimePowerCtx ctx(5, 2);
    CHECK(inv_mod(BigInt(3), ctx) == 17);
    CHECK(inv_mod(Residue(2), ctx) == 13);
    CHECK_THROWS_AS(inv_mod(BigInt(10), ctx), NotInvertible);
    for (Residue a = 1; a < 125; ++a) {
        PrimePowerCtx c3(5, 3);
        if (a % 5 == 0) continue;
        CHECK(c3.mul(a, inv_mod(a, c3)) == 1);
    }
}

TEST_CASE("prime power context validation") {
    CHECK_THROWS(PrimePowerCtx(4, 2));
    CHECK_THROWS(PrimePowerCtx(3, 2));
    CHECK_THROWS(PrimePowerCtx(7, 0));
    CHECK_THROWS(PrimePowerCtx(7, 5));
    PrimePowerCtx ctx(199, 4);
    CHECK(ctx.modulus() == 199ULL * 199 * 199 * 199);
    CHECK(ctx.reduce(-1L) == ctx.modulus() - 1);
    CHECK(ctx.pow(2, 198ULL * 199 * 199 * 199) == 1);  // Euler's theorem
    CHECK(ctx.mul(ctx.modulus() - 1, ctx.modulus() - 1) == 1);
}

TEST_CASE("primality agrees with trial division") {
    for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    CHECK(is_prime(2305843009213693951ULL));    // 2^61 - 1
    CHECK_FALSE(is_prime(3215031751ULL));       // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(2305843009213693953ULL));
}

TEST_CASE("padic reduction matches brute-force residues") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
        PrimePowerCtx ctx(p, 2);
        for (int i = 0; i < 300; ++i) {
            long a = num(rng), b = den(rng);
            if (b % static_cast<long>(p) == 0) continue;
            PadicValue x = padic_reduce(BigRational(a, b), ctx);
            BigRational q(a, b);
            CHECK(x.residue() == brute_residue(q.num().get_si(), q.den().get_si(), ctx.modulus()));
        }
    }
}

TEST_CASE("padic reduction is a ring homomorphism") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    PrimePowerCtx ctx(7, 3);
    for (int i = 0; i < 500; ++i) {
        BigRational a(num(rng), den(rng)), b(num(rng), den(rng));
        PadicValue pa = padic_reduce(a, ctx), pb = padic_reduce(b, ctx);
        // Both sides may carry negative valuation; compare after scaling by p^6.
        PadicValue scale = padic_reduce(BigRational(117649), ctx);
        auto same = [&](const PadicValue& x, const BigRational& exact) {
            PadicValue lhs = x * scale;
            PadicValue rhs = padic_reduce(exact * BigRational(117649), ctx);
            if (lhs.precision() < ctx.m()) return true;  // not enough digits to say
            return padic_compare(lhs, rhs, ctx);
        };
        CHECK(same(pa + pb, a + b));
        CHECK(same(pa * pb, a * b));
        CHECK(same(pa - pb, a - b));
        if (!b.is_zero()) CHECK(same(pa / pb, a / b));
    }
}

TEST_CASE("comparison guards") {
    PrimePowerCtx ctx(5, 2);
    PadicValue fifth = padic_reduce(BigRational(1, 5), ctx);
    CHECK_THROWS_AS(padic_compare(fifth, fifth, ctx), NegativeValuation);
    PadicValue coarse = PadicValue::from_parts(5, 2, 0, 3, 1);  // known mod 5 only
    CHECK_THROWS_AS(padic_compare(coarse, coarse, ctx), PrecisionLoss);
    CHECK(padic_compare(padic_reduce(26, ctx), padic_reduce(1, ctx), ctx));
    CHECK_FALSE(padic_compare(padic_reduce(6, ctx), padic_reduce(1, ctx), ctx));
}

TEST_CASE("cancellation lowers precision instead of inventing digits") {
    PrimePowerCtx ctx(5, 2);
    PadicValue a = padic_reduce(BigRational(1, 5), ctx);   // v = -1, known mod 5
    PadicValue b = padic_reduce(BigRational(-1, 5), ctx);
    PadicValue s = a + b;
    CHECK(s.is_zero());
    CHECK(s.precision() == 1);
    CHECK(valuation(BigInt(250), 5) == 3);
}
