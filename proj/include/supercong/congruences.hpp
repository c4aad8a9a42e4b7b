#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/exact.hpp"
#include "supercong/modular.hpp"

namespace supercong {

enum class PrimeClass { Any, OneMod4, ThreeMod4 };

/// Harmonic-type weight attached to each summand.
enum class Weight {
    One,
    H,          // H_k
    H2,         // H_k^(2)
    O,          // O_k
    O2,         // O_k^(2)
    H2k,        // H_{2k}
    H2kMinusH,  // H_{2k} - H_k
    InvK,       // 1/k
    FourK1,     // 4k+1
    PS3,        // 2 - 3(4k+1) H_k
    PS4,        // 2 - 4(4k+1) H_k
    PS5,        // 2 - 5(4k+1) H_k
};

enum class Upper { PMinus1, Half };

/// sum_{k=k_from}^{upper} (+-1)^k C(2k,k)^e / base^k * weight(k).
struct Summand {
    int e = 1;
    long base = 4;
    Weight weight = Weight::One;
    bool alternating = false;
    long k_from = 0;
    Upper upper = Upper::PMinus1;

    /// Exact k-th term as a rational.
    BigRational exact_term(long k) const;
    long last_index(std::uint64_t p) const { return upper == Upper::Half ? (long(p) - 1) / 2 : long(p) - 1; }
};

class EvalContext;

/// One supercongruence (or a pointwise family of them).
struct CongruenceCase {
    std::string id;
    std::string statement;
    std::string anchor;
    int power = 1;  // compared modulo p^power
    PrimeClass prime_class = PrimeClass::Any;
    std::optional<Summand> summand;
    /// Used when there is no summand recipe, and for family members.
    std::function<PadicValue(EvalContext&, long)> lhs;
    std::function<PadicValue(EvalContext&, long)> rhs;
    /// Families are checked at every point 0 <= k <= (p-1)/2; plain cases at k = 0 only.
    bool family = false;

    bool admits(std::uint64_t p) const;
};

/// Per-(p, m) cache of the quantities that right-hand sides are built from.
class EvalContext {
public:
    EvalContext(std::uint64_t p, int m);

    const PrimePowerCtx& ctx() const { return ctx_; }
    std::uint64_t p() const { return ctx_.p(); }
    long n() const { return static_cast<long>(ctx_.p() - 1) / 2; }
    bool one_mod_4() const { return ctx_.p() % 4 == 1; }

    PadicValue reduce(const BigRational& x) const { return padic_reduce(x, ctx_); }
    PadicValue reduce(long x) const { return padic_reduce(x, ctx_); }
    PadicValue p_value() const { return reduce(static_cast<long>(p())); }

    /// q_p(2)
    const PadicValue& q();
    /// B_{p-3}
    const PadicValue& bernoulli_b();
    /// E_{p-3} and E_{2p-4}
    const PadicValue& euler_e1();
    const PadicValue& euler_e2();
    /// Gamma_p(1/4)^4, Gamma_p(1/2) and Gamma_p(1/4) and Gamma_p(3/4).
    const PadicValue& gamma_quarter4();
    const PadicValue& gamma_half();
    const PadicValue& gamma_quarter();
    const PadicValue& gamma_three_quarter();

    /// H_j^(r) for 0 <= j <= 2p as p-adic values (negative valuation allowed).
    const PadicValue& h(long j, int r);
    const PadicValue& o(long j, int r);

private:
    PrimePowerCtx ctx_;
    std::optional<PadicValue> q_, b_, e1_, e2_, g4_, gh_, gq_, g3q_;
    std::vector<PadicValue> h1_, h2_, o1_, o2_;
    void build_harmonics();
};

/// Truncated sum evaluated incrementally in p-adic arithmetic modulo p^m.
PadicValue eval_summand(const Summand& s, const PrimePowerCtx& ctx);

const std::vector<CongruenceCase>& congruence_registry();
/// UnknownCase if absent.
const CongruenceCase& find_congruence(std::string_view id);

/// OutOfDomain when p is not an admissible prime for the case.
PadicValue eval_truncated_sum(const CongruenceCase& c, std::uint64_t p);
PadicValue eval_rhs(const CongruenceCase& c, std::uint64_t p);

struct VerificationReport {
    std::string id;
    std::uint64_t p = 0;
    int m = 0;
    PadicValue lhs;
    PadicValue rhs;
    bool pass = false;
    long points = 1;  // family members checked
    long failed_at = -1;  // first failing family index
    std::string error;  // evaluation error, if any (pass is false then)
    long micros = 0;
};

VerificationReport verify(const CongruenceCase& c, std::uint64_t p);
VerificationReport verify(std::string_view id, std::uint64_t p);

struct RangeResult {
    std::vector<VerificationReport> reports;  // ordered by case id, then p
    std::vector<std::pair<std::string, std::uint64_t>> skipped;  // inadmissible primes
};

/// Every admissible prime in [p_lo, p_hi] for each case, on `workers` threads.
RangeResult verify_range(const std::vector<std::string>& case_ids, std::uint64_t p_lo,
                         std::uint64_t p_hi, unsigned workers = 1);

}  // namespace supercong
