#include "supercong/padic_gamma.hpp"

#include "supercong/errors.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

namespace {

Residue representative(const BigRational& x, const PrimePowerCtx& ctx) {
    if (x.den() % BigInt(static_cast<unsigned long>(ctx.p())) == 0)
        throw NotPadicInteger("argument of Gamma_p is not a p-adic integer");
    return ctx.mul(ctx.reduce(x.num()), inv_mod(x.den(), ctx));
}

Residue gamma_of_integer(Residue a, const PrimePowerCtx& ctx) {
    const std::uint64_t p = ctx.p();
    Residue prod = 1;
    for (Residue k = 1; k < a; ++k) {
        if (k % p != 0) prod = ctx.mul(prod, k);
    }
    return (a % 2 == 1) ? ctx.sub(0, prod) : prod;
}

Residue neg_one_pow(std::uint64_t e, const PrimePowerCtx& ctx) {
    return (e % 2 == 0) ? 1 : ctx.modulus() - 1;
}

}  // namespace

Residue gamma_p(const BigRational& x, const PrimePowerCtx& ctx) {
    return gamma_of_integer(representative(x, ctx), ctx);
}

std::uint64_t s_p(const BigRational& x, std::uint64_t p) {
    PrimePowerCtx ctx(p, 1);
    Residue r = representative(x, ctx);
    return r == 0 ? p : r;
}

bool check_functional_eq(const BigRational& x, const PrimePowerCtx& ctx) {
    Residue lhs = gamma_p(x + BigRational(1), ctx);
    Residue gx = gamma_p(x, ctx);
    Residue a = representative(x, ctx);
    Residue rhs = (a % ctx.p() != 0) ? ctx.sub(0, ctx.mul(a, gx)) : ctx.sub(0, gx);
    return lhs == rhs;
}

bool check_reflection(const BigRational& x, const PrimePowerCtx& ctx) {
    Residue lhs = ctx.mul(gamma_p(x, ctx), gamma_p(BigRational(1) - x, ctx));
    return lhs == neg_one_pow(s_p(x, ctx.p()), ctx);
}

Residue g1_probe(const BigRational& a, const PrimePowerCtx& ctx) {
    if (ctx.m() < 2) throw std::invalid_argument("g1 probe needs precision p^2");
    PrimePowerCtx sq = ctx.with_exponent(2);
    const BigRational p(static_cast<long>(ctx.p()));
    Residue ratio = sq.mul(gamma_p(a + p, sq), inv_mod(gamma_p(a, sq), sq));
    Residue diff = sq.sub(ratio, 1);
    if (diff % ctx.p() != 0) throw std::logic_error("Gamma_p(a+p) differs from Gamma_p(a) mod p");
    return diff / ctx.p();
}

bool check_gmod(const BigRational& a, long b, const PrimePowerCtx& ctx) {
    PrimePowerCtx sq = ctx.with_exponent(2);
    const long p = static_cast<long>(ctx.p());
    Residue g = g1_probe(a, sq);
    Residue ratio = sq.mul(gamma_p(a + BigRational(b * p), sq), inv_mod(gamma_p(a, sq), sq));
    Residue expected = sq.add(1, sq.mul(sq.mul(g, sq.reduce(b)), ctx.p()));
    return ratio == expected;
}

bool check_gmod_all(const BigRational& a, const PrimePowerCtx& ctx) {
    for (long b = 0; b < static_cast<long>(ctx.p()); ++b) {
        if (!check_gmod(a, b, ctx)) return false;
    }
    return true;
}

GammaLemmaResult check_cd9(std::uint64_t p) {
    PrimePowerCtx ctx(p, 2);
    const long m = static_cast<long>(p / 4);
    BigRational lhs_q(central_binomial(m) * central_binomial(m), pow(BigInt(16), m));
    PadicValue lhs = padic_reduce(lhs_q, ctx);
    PadicValue g4 = PadicValue::unit(gamma_p(BigRational(1, 4), ctx), ctx).pow(4);
    PadicValue rhs = (p % 4 == 1)
        ? -g4
        : padic_reduce(16, ctx) * g4.inverse() * padic_reduce(1 + 2 * static_cast<long>(p), ctx);
    return {lhs, rhs, padic_compare(lhs, rhs, ctx)};
}

GammaLemmaResult check_cd10(std::uint64_t p) {
    if (p % 4 != 3) throw OutOfDomain("CD10 needs p = 3 mod 4");
    PrimePowerCtx ctx(p, 2);
    PadicValue lhs = padic_reduce(c_m(static_cast<long>(p / 4)), ctx);
    PadicValue g4 = PadicValue::unit(gamma_p(BigRational(1, 4), ctx), ctx).pow(4);
    PadicValue rhs = padic_reduce(BigRational(static_cast<long>(p), 2), ctx) * g4;
    return {lhs, rhs, padic_compare(lhs, rhs, ctx)};
}

GammaLemmaResult check_e05_half(std::uint64_t p) {
    PrimePowerCtx ctx(p, 2);
    PadicValue lhs = PadicValue::unit(gamma_p(BigRational(1, 2), ctx), ctx).pow(2);
    PadicValue rhs = padic_reduce(((p + 1) / 2) % 2 == 0 ? 1 : -1, ctx);
    return {lhs, rhs, padic_compare(lhs, rhs, ctx)};
}

GammaLemmaResult check_e05_quarter(std::uint64_t p) {
    if (p % 4 != 3) throw OutOfDomain("E05 quarter identity needs p = 3 mod 4");
    PrimePowerCtx ctx(p, 2);
    PadicValue lhs = PadicValue::unit(gamma_p(BigRational(1, 4), ctx), ctx) *
                     PadicValue::unit(gamma_p(BigRational(3, 4), ctx), ctx);
    PadicValue rhs = padic_reduce(((p + 1) / 4) % 2 == 0 ? 1 : -1, ctx);
    return {lhs, rhs, padic_compare(lhs, rhs, ctx)};
}

}  // namespace supercong
