#include <set>

#include "doctest.h"
#include "supercong/congruences.hpp"
#include "supercong/errors.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

namespace {

// Oracle route: exact rational sum, reduced once at the end.
PadicValue exact_sum(const Summand& s, std::uint64_t p, const PrimePowerCtx& ctx) {
    BigRational total;
    for (long k = s.k_from; k <= s.last_index(p); ++k) total += s.exact_term(k);
    return padic_reduce(total, ctx);
}

BigRational alternating_h2(long n) {
    BigRational s;
    for (long k = 1; k <= n; ++k) s += BigRational(k % 2 == 0 ? 1 : -1, k * k);
    return s;
}

}  // namespace

TEST_CASE("hand-checked anchors at p = 5 and p = 7") {
    VerificationReport c321 = verify("C321", 5);
    CHECK(c321.pass);
    CHECK(c321.m == 2);
    CHECK(c321.lhs.residue() == 16);
    CHECK(c321.rhs.residue() == 16);

    PadicValue e09 = eval_truncated_sum(find_congruence("E09"), 5);
    CHECK(padic_compare(e09, PadicValue::zero(5, 2), PrimePowerCtx(5, 2)));
    CHECK(eval_rhs(find_congruence("E09"), 5).is_zero());

    VerificationReport e10 = verify("E10", 5);
    CHECK(e10.pass);
    CHECK(e10.lhs.residue() == 2);
    CHECK(e10.rhs.residue() == 2);

    VerificationReport e23 = verify("E23", 5);
    CHECK(e23.pass);
    CHECK(e23.lhs.residue() == 12);
    CHECK(e23.rhs.residue() == 12);

    VerificationReport vh = verify("VH_A2", 7);
    CHECK(vh.pass);
    CHECK(vh.lhs.residue() == 0);
}

TEST_CASE("incremental evaluation agrees with the exact rational sum") {
    for (std::uint64_t p : primes_in(5, 41)) {
        for (const auto& c : congruence_registry()) {
            if (!c.summand || !c.admits(p)) continue;
            PrimePowerCtx ctx(p, c.power);
            INFO(c.id << " p=" << p);
            CHECK(padic_compare(eval_summand(*c.summand, ctx), exact_sum(*c.summand, p, ctx), ctx));
        }
    }
}

TEST_CASE("every case passes for small primes") {
    for (const auto& c : congruence_registry()) {
        for (std::uint64_t p : primes_in(5, 61)) {
            if (!c.admits(p)) continue;
            VerificationReport r = verify(c, p);
            INFO(c.id << " p=" << p << " " << r.error);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("the doubled Euler constant in the alternating square sum is off by a factor of two") {
    for (std::uint64_t p : primes_in(5, 80)) {
        PrimePowerCtx ctx(p, 2);
        const long n = static_cast<long>(p - 1) / 2;
        const BigRational sign(n % 2 == 0 ? 1 : -1);
        const BigRational e1(euler_number(static_cast<long>(p) - 3));
        const BigRational e2(euler_number(2 * static_cast<long>(p) - 4));
        PadicValue lhs = padic_reduce(alternating_h2(n), ctx);
        PadicValue typeset = padic_reduce(sign * (e1 * 8 - e2 * 4), ctx);
        PadicValue halved = padic_reduce(sign * (e1 * 4 - e2 * 2), ctx);
        CHECK(padic_compare(lhs, halved, ctx));
        CHECK_FALSE(padic_compare(lhs, typeset, ctx));
        CHECK(padic_compare(lhs * padic_reduce(2, ctx), typeset, ctx));
    }
}

TEST_CASE("family cases check every point") {
    VerificationReport r = verify("fam_E01", 13);
    CHECK(r.pass);
    CHECK(r.points == 7);
}

TEST_CASE("admissibility and lookup") {
    const CongruenceCase& e25 = find_congruence("E25");
    CHECK_FALSE(e25.admits(13));
    CHECK(e25.admits(11));
    CHECK_FALSE(find_congruence("C321").admits(9));
    CHECK_THROWS_AS(verify(e25, 13), OutOfDomain);
    CHECK_THROWS_AS(eval_truncated_sum(e25, 5), OutOfDomain);
    CHECK_THROWS_AS(find_congruence("nope"), UnknownCase);

    std::set<std::string> ids;
    for (const auto& c : congruence_registry()) ids.insert(c.id);
    CHECK(ids.size() == congruence_registry().size());
    CHECK(ids.size() >= 25);
}

TEST_CASE("range verification is ordered, records skips and ignores the worker count") {
    const std::vector<std::string> ids = {"E25", "C321", "remark_0a"};
    RangeResult one = verify_range(ids, 5, 60, 1);
    RangeResult four = verify_range(ids, 5, 60, 4);
    REQUIRE(one.reports.size() == four.reports.size());
    for (std::size_t i = 0; i < one.reports.size(); ++i) {
        CHECK(one.reports[i].id == four.reports[i].id);
        CHECK(one.reports[i].p == four.reports[i].p);
        CHECK(one.reports[i].lhs == four.reports[i].lhs);
        CHECK(one.reports[i].rhs == four.reports[i].rhs);
        CHECK(one.reports[i].pass);
    }
    for (std::size_t i = 1; i < one.reports.size(); ++i) {
        const auto& a = one.reports[i - 1];
        const auto& b = one.reports[i];
        CHECK((a.id < b.id || (a.id == b.id && a.p < b.p)));
    }
    // E25 and remark_0a skip p = 1 mod 4: 5, 13, 17, 29, 37, 41, 53
    CHECK(one.skipped.size() == 14);
    CHECK(one.skipped == four.skipped);
}
