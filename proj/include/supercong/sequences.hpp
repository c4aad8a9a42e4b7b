#pragma once

#include <cstdint>
#include <vector>

#include "supercong/exact.hpp"

namespace supercong {

/// H_j^{(r)} and O_j^{(r)} for 0 <= j <= N, built incrementally in one pass.
class HarmonicTable {
public:
    HarmonicTable(int order, long n_max);

    int order() const { return order_; }
    long size() const { return static_cast<long>(h_.size()) - 1; }
    /// sum_{j=1}^{n} 1/j^r
    const BigRational& h(long n) const { return h_.at(static_cast<std::size_t>(n)); }
    /// sum_{j=1}^{n} 1/(2j-1)^r
    const BigRational& o(long n) const { return o_.at(static_cast<std::size_t>(n)); }

private:
    int order_;
    std::vector<BigRational> h_;
    std::vector<BigRational> o_;
};

BigRational harmonic(long n, int order = 1);
BigRational odd_harmonic(long n, int order = 1);

/// sum_{j=0}^{k-1} 1/(x+j)^r; Pole if some x + j vanishes.
BigRational shifted_harmonic(long k, int order, const BigRational& x);

/// C(n, k), zero outside 0 <= k <= n (and for negative n).
BigInt binomial(long n, long k);
BigInt central_binomial(long k);
BigInt factorial(long n);
/// x (x+1) ... (x+k-1), with (x)_0 = 1.
BigRational pochhammer(const BigRational& x, long k);

/// Bernoulli numbers with B_1 = -1/2, from sum_{k<=n} C(n+1,k) B_k = 0.
/// Values are memoised process-wide; safe to call from several threads.
BigRational bernoulli(long n);
/// Euler (secant) numbers E_0 = 1, E_2 = -1, E_4 = 5, ...; zero at odd n.
BigInt euler_number(long n);

/// (a^{p-1} - 1)/p; invalid_argument when p | a.
BigInt fermat_quotient(long a, std::uint64_t p);

/// (-1)^m (6m+3)! (m!)^3 / ((3m+1)! ((2m+1)!)^3)
BigRational c_m(long m);

/// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace supercong
