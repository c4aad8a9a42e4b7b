#include "doctest.h"
#include "supercong/errors.hpp"
#include "supercong/padic_gamma.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

TEST_CASE("Gamma_5 anchor values") {
    PrimePowerCtx ctx(5, 2);
    CHECK(gamma_p(BigRational(1, 2), ctx) == 18);
    CHECK(gamma_p(BigRational(1, 4), ctx) == 21);
    CHECK(ctx.pow(gamma_p(BigRational(1, 4), ctx), 4) == 6);
}

TEST_CASE("Gamma_p at positive integers is a signed factorial") {
    // Gamma_p(n) = (-1)^n (n-1)! for 1 <= n <= p.
    for (std::uint64_t p : {5ULL, 7ULL, 13ULL, 31ULL}) {
        PrimePowerCtx ctx(p, 3);
        for (long n = 1; n <= static_cast<long>(p); ++n) {
            BigInt f = factorial(n - 1);
            if (n % 2 == 1) f = -f;
            CHECK(gamma_p(BigRational(n), ctx) == ctx.reduce(f));
        }
    }
}

TEST_CASE("s_p and domain errors") {
    CHECK(s_p(BigRational(1, 4), 5) == 4);  // 1/4 = 4 mod 5
    CHECK(s_p(BigRational(0), 7) == 7);
    PrimePowerCtx ctx(5, 2);
    CHECK_THROWS_AS(gamma_p(BigRational(1, 5), ctx), NotPadicInteger);
    CHECK_THROWS_AS(check_cd10(13), OutOfDomain);
    CHECK_THROWS_AS(check_e05_quarter(5), OutOfDomain);
}

TEST_CASE("functional equation and reflection on sample arguments") {
    const BigRational xs[] = {BigRational(1, 2), BigRational(1, 4), BigRational(3, 4), BigRational(1, 3),
                              BigRational(2, 5), BigRational(7, 6), BigRational(-3, 8), BigRational(0),
                              BigRational(11), BigRational(-9, 2)};
    for (std::uint64_t p : primes_in(5, 67)) {
        PrimePowerCtx ctx(p, 2);
        for (const auto& x : xs) {
            if (x.den() % BigInt(static_cast<unsigned long>(p)) == 0) continue;
            CHECK(check_functional_eq(x, ctx));
            CHECK(check_reflection(x, ctx));
        }
    }
}

TEST_CASE("linear behaviour along a + bp") {
    for (std::uint64_t p : primes_in(5, 41)) {
        PrimePowerCtx ctx(p, 2);
        for (const auto& a : {BigRational(1, 4), BigRational(1, 2), BigRational(3, 4)}) {
            CHECK(check_gmod_all(a, ctx));
        }
    }
    CHECK_THROWS(g1_probe(BigRational(1, 2), PrimePowerCtx(7, 1)));
}

TEST_CASE("Gamma_p lemmas") {
    for (std::uint64_t p : primes_in(5, 101)) {
        CHECK(check_cd9(p).pass);
        CHECK(check_e05_half(p).pass);
        if (p % 4 == 3) {
            CHECK(check_cd10(p).pass);
            CHECK(check_e05_quarter(p).pass);
        }
    }
    GammaLemmaResult r = check_e05_half(5);
    CHECK(r.lhs.residue() == 24);  // (-1)^3 mod 25
}
