#include <vector>

#include "doctest.h"
#include "supercong/errors.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

namespace {

// Akiyama-Tanigawa: yields Bernoulli numbers with B_1 = +1/2.
std::vector<BigRational> akiyama_tanigawa(long n_max) {
    std::vector<BigRational> out;
    std::vector<BigRational> row;
    for (long m = 0; m <= n_max; ++m) {
        row.push_back(BigRational(1, m + 1));
        for (long j = m; j >= 1; --j) row[j - 1] = BigRational(j) * (row[j - 1] - row[j]);
        out.push_back(row[0]);
    }
    return out;
}

// Seidel boustrophedon for the zigzag numbers A000111; E_{2n} = (-1)^n A(2n).
std::vector<BigInt> zigzag(long n_max) {
    std::vector<BigInt> out{1};
    std::vector<BigInt> row{1};
    for (long n = 1; n <= n_max; ++n) {
        std::vector<BigInt> next(n + 1);
        next[0] = 0;
        for (long k = 1; k <= n; ++k) next[k] = next[k - 1] + row[n - k];
        out.push_back(next[n]);
        row = next;
    }
    return out;
}

}  // namespace

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == BigRational(0));
    CHECK(harmonic(4) == BigRational(25, 12));
    CHECK(harmonic(3, 2) == BigRational(49, 36));
    CHECK(odd_harmonic(2) == BigRational(4, 3));
    CHECK(odd_harmonic(2, 2) == BigRational(10, 9));
    HarmonicTable t(2, 40);
    for (long n = 0; n <= 40; ++n) {
        CHECK(t.h(n) == harmonic(n, 2));
        CHECK(t.o(n) == odd_harmonic(n, 2));
        // O_n = H_{2n} - H_n / 2
        CHECK(odd_harmonic(n) == harmonic(2 * n) - harmonic(n) / 2);
    }
}

TEST_CASE("shifted harmonic sums") {
    CHECK(shifted_harmonic(3, 1, BigRational(1)) == harmonic(3));
    CHECK(shifted_harmonic(2, 1, BigRational(1, 2)) == BigRational(2) + BigRational(2, 3));
    CHECK(shifted_harmonic(0, 1, BigRational(-3)) == BigRational(0));
    CHECK_THROWS_AS(shifted_harmonic(5, 1, BigRational(-2)), Pole);
}

TEST_CASE("binomials, factorials and rising factorials") {
    CHECK(central_binomial(5) == 252);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(factorial(10) == 3628800);
    CHECK(pochhammer(BigRational(1, 2), 3) == BigRational(15, 8));
    CHECK(pochhammer(BigRational(7), 0) == BigRational(1));
    for (long n = 0; n <= 60; ++n) {
        BigInt row = 0;
        for (long k = 0; k <= n; ++k) row += binomial(n, k);
        CHECK(row == pow(BigInt(2), static_cast<unsigned long>(n)));
        // C(2k,k) (1/2)_k relation: C(2k,k)/4^k = (1/2)_k / k!
        CHECK(BigRational(central_binomial(n), pow(BigInt(4), static_cast<unsigned long>(n))) ==
              pochhammer(BigRational(1, 2), n) / BigRational(factorial(n)));
    }
}

TEST_CASE("Bernoulli numbers against Akiyama-Tanigawa") {
    const auto oracle = akiyama_tanigawa(120);
    CHECK(bernoulli(1) == BigRational(-1, 2));
    CHECK(bernoulli(12) == BigRational(-691, 2730));
    for (long n = 0; n <= 120; ++n) {
        if (n == 1) continue;
        CHECK(bernoulli(n) == oracle[n]);
    }
}

TEST_CASE("Euler numbers against the boustrophedon") {
    const auto z = zigzag(200);
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(7) == 0);
    for (long n = 0; n <= 100; ++n) {
        BigInt expect = (n % 2 == 0) ? z[2 * n] : BigInt(-z[2 * n]);
        CHECK(euler_number(2 * n) == expect);
    }
}

TEST_CASE("Fermat quotients, c_m and prime lists") {
    CHECK(fermat_quotient(2, 5) == 3);
    CHECK(fermat_quotient(2, 7) == 9);
    CHECK_THROWS(fermat_quotient(10, 5));
    CHECK(c_m(0) == BigRational(6));
    CHECK(c_m(1) == BigRational(-70));
    CHECK(primes_in(1, 30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_in(14, 16).empty());
    CHECK(primes_in(5, 199).size() == 44);
}
