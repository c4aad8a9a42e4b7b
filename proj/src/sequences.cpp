#include "supercong/sequences.hpp"

#include <mutex>
#include <stdexcept>

#include "supercong/errors.hpp"

namespace supercong {

HarmonicTable::HarmonicTable(int order, long n_max) : order_(order) {
    if (order < 1 || n_max < 0) throw std::invalid_argument("harmonic table needs r >= 1, N >= 0");
    h_.reserve(static_cast<std::size_t>(n_max) + 1);
    o_.reserve(static_cast<std::size_t>(n_max) + 1);
    h_.emplace_back(0);
    o_.emplace_back(0);
    for (long j = 1; j <= n_max; ++j) {
        h_.push_back(h_.back() + BigRational(pow(BigInt(j), order)).inverse());
        o_.push_back(o_.back() + BigRational(pow(BigInt(2 * j - 1), order)).inverse());
    }
}

BigRational harmonic(long n, int order) {
    BigRational s;
    for (long j = 1; j <= n; ++j) s += BigRational(pow(BigInt(j), order)).inverse();
    return s;
}

BigRational odd_harmonic(long n, int order) {
    BigRational s;
    for (long j = 1; j <= n; ++j) s += BigRational(pow(BigInt(2 * j - 1), order)).inverse();
    return s;
}

BigRational shifted_harmonic(long k, int order, const BigRational& x) {
    BigRational s;
    for (long j = 0; j < k; ++j) {
        BigRational t = x + BigRational(j);
        if (t.is_zero()) throw Pole("shifted harmonic sum hits x + j = 0");
        s += t.pow(-order);
    }
    return s;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt central_binomial(long k) { return binomial(2 * k, k); }

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigRational pochhammer(const BigRational& x, long k) {
    BigRational r(1);
    for (long j = 0; j < k; ++j) r *= x + BigRational(j);
    return r;
}

namespace {

std::mutex g_table_mutex;
std::vector<BigRational> g_bernoulli{BigRational(1)};
std::vector<BigInt> g_euler_even{BigInt(1)};  // E_0, E_2, E_4, ...

}  // namespace

BigRational bernoulli(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli index must be >= 0");
    std::lock_guard lock(g_table_mutex);
    for (long m = static_cast<long>(g_bernoulli.size()); m <= n; ++m) {
        if (m > 1 && m % 2 == 1) {
            g_bernoulli.emplace_back(0);
            continue;
        }
        // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
        BigRational s;
        for (long k = 0; k < m; ++k) {
            if (g_bernoulli[k].is_zero()) continue;
            s += BigRational(binomial(m + 1, k)) * g_bernoulli[k];
        }
        g_bernoulli.push_back(-s / BigRational(m + 1));
    }
    return g_bernoulli[static_cast<std::size_t>(n)];
}

BigInt euler_number(long n) {
    if (n < 0) throw std::invalid_argument("euler index must be >= 0");
    if (n % 2 == 1) return 0;
    const long half = n / 2;
    std::lock_guard lock(g_table_mutex);
    for (long j = static_cast<long>(g_euler_even.size()); j <= half; ++j) {
        // E_{2j} = -sum_{k<j} C(2j,2k) E_{2k}
        BigInt s = 0;
        for (long k = 0; k < j; ++k) s += binomial(2 * j, 2 * k) * g_euler_even[k];
        g_euler_even.push_back(-s);
    }
    return g_euler_even[static_cast<std::size_t>(half)];
}

BigInt fermat_quotient(long a, std::uint64_t p) {
    BigInt prime(static_cast<unsigned long>(p));
    BigInt base(a);
    if (base % prime == 0) throw std::invalid_argument("fermat quotient needs p not dividing a");
    BigInt num = pow(base, p - 1) - 1;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t());
    return q;
}

BigRational c_m(long m) {
    if (m < 0) throw std::invalid_argument("c_m needs m >= 0");
    BigInt fm = factorial(m);
    BigInt f2 = factorial(2 * m + 1);
    BigInt num = factorial(6 * m + 3) * fm * fm * fm;
    BigInt den = factorial(3 * m + 1) * f2 * f2 * f2;
    if (m % 2 == 1) num = -num;
    return {num, den};
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty prime range");
    std::vector<bool> composite(hi + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= hi; ++i) {
        if (composite[i]) continue;
        if (i >= lo) out.push_back(i);
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace supercong
