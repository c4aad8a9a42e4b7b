#pragma once

#include <cstdint>

#include "supercong/exact.hpp"
#include "supercong/modular.hpp"

namespace supercong {

/// Morita's p-adic Gamma at a p-adic-integer rational, mod p^m.
///
/// Uses the integer representative a in [0, p^m) of x and the defining
/// product (-1)^a * prod_{0<k<a, p∤k} k; Gamma_p is 1-Lipschitz, so this is
/// exact to precision p^m. NotPadicInteger when p divides the denominator.
Residue gamma_p(const BigRational& x, const PrimePowerCtx& ctx);

/// s_p(x): the integer in {1, ..., p} congruent to x mod p.
std::uint64_t s_p(const BigRational& x, std::uint64_t p);

/// Gamma_p(x+1) == -x Gamma_p(x) (x a unit) or -Gamma_p(x) (p | x), mod p^m.
bool check_functional_eq(const BigRational& x, const PrimePowerCtx& ctx);

/// Gamma_p(x) Gamma_p(1-x) == (-1)^{s_p(x)} mod p^m.
bool check_reflection(const BigRational& x, const PrimePowerCtx& ctx);

/// (Gamma_p(a+p)/Gamma_p(a) - 1)/p mod p, the linear coefficient in
/// Gamma_p(a+bp) == Gamma_p(a)(1 + g b p) mod p^2. Needs ctx.m() >= 2.
Residue g1_probe(const BigRational& a, const PrimePowerCtx& ctx);

/// Gamma_p(a+bp) Gamma_p(a)^{-1} == 1 + g1_probe(a) b p mod p^2 for one b.
bool check_gmod(const BigRational& a, long b, const PrimePowerCtx& ctx);
/// The same for every b in 0..p-1.
bool check_gmod_all(const BigRational& a, const PrimePowerCtx& ctx);

struct GammaLemmaResult {
    PadicValue lhs;
    PadicValue rhs;
    bool pass = false;
};

/// C(2m,m)^2/16^m against -Gamma_p(1/4)^4 (p = 1 mod 4) or
/// 16 Gamma_p(1/4)^{-4} (1+2p) (p = 3 mod 4), m = floor(p/4), mod p^2.
GammaLemmaResult check_cd9(std::uint64_t p);

/// c_m == (p/2) Gamma_p(1/4)^4 mod p^2 with m = (p-3)/4. Requires p = 3 mod 4
/// (OutOfDomain otherwise).
GammaLemmaResult check_cd10(std::uint64_t p);

/// Gamma_p(1/2)^2 == (-1)^{(p+1)/2} mod p^2.
GammaLemmaResult check_e05_half(std::uint64_t p);
/// Gamma_p(1/4) Gamma_p(3/4) == (-1)^{(p+1)/4} mod p^2 for p = 3 mod 4.
GammaLemmaResult check_e05_quarter(std::uint64_t p);

}  // namespace supercong
