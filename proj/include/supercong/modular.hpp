#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "supercong/exact.hpp"

namespace supercong {

using Residue = std::uint64_t;

/// Deterministic primality test for 64-bit integers (Miller-Rabin with the
/// first twelve prime bases).
bool is_prime(std::uint64_t n);

/// Ambient modulus p^m of a congruence. p >= 5 prime, 1 <= m <= kMaxExponent,
/// and p^m < 2^62 so residues fit a machine word.
class PrimePowerCtx {
public:
    static constexpr int kMaxExponent = 4;

    PrimePowerCtx(std::uint64_t p, int m);

    std::uint64_t p() const { return p_; }
    int m() const { return m_; }
    std::uint64_t modulus() const { return pow_[m_]; }
    /// p^j for 0 <= j <= m.
    std::uint64_t power(int j) const { return pow_[j]; }

    PrimePowerCtx with_exponent(int m) const { return {p_, m}; }

    Residue reduce(long value) const;
    Residue reduce(const BigInt& value) const;
    Residue add(Residue a, Residue b) const;
    Residue sub(Residue a, Residue b) const;
    Residue mul(Residue a, Residue b) const;
    Residue pow(Residue a, std::uint64_t e) const;

    friend bool operator==(const PrimePowerCtx& a, const PrimePowerCtx& b) {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }

private:
    std::uint64_t p_;
    int m_;
    std::uint64_t pow_[kMaxExponent + 1]{};
};

/// a^{-1} mod p^m; NotInvertible when p | a.
Residue inv_mod(const BigInt& a, const PrimePowerCtx& ctx);
Residue inv_mod(Residue a, const PrimePowerCtx& ctx);

/// A rational reduced p-adically: p^v * u with u a unit, carried together
/// with the absolute precision N (the value is known modulo p^N).
///
/// u is stored modulo p^(N - v), so it has at most m digits. The canonical
/// zero has v = kInfinite and u = 0; its N says how far the vanishing is
/// known (kInfinite for an exact zero).
class PadicValue {
public:
    static constexpr int kInfinite = std::numeric_limits<int>::max();

    PadicValue() = default;

    static PadicValue zero(std::uint64_t p, int m, int abs_precision = kInfinite);
    /// Unit residue u (coprime to p) known to the full m digits.
    static PadicValue unit(Residue u, const PrimePowerCtx& ctx);
    /// p^v * u with u known to `digits` p-adic digits (u coprime to p).
    static PadicValue from_parts(std::uint64_t p, int m, int v, Residue u, int digits);

    std::uint64_t p() const { return p_; }
    int m() const { return m_; }
    bool is_zero() const { return v_ == kInfinite; }
    int v() const { return v_; }
    Residue u() const { return u_; }
    /// Absolute precision N.
    int precision() const { return n_; }
    /// Digits of u that are meaningful; 0 for zero.
    int unit_digits() const { return is_zero() ? 0 : n_ - v_; }

    /// p^v * u mod p^m; NegativeValuation if v < 0.
    Residue residue() const;

    PadicValue operator-() const;
    friend PadicValue operator+(const PadicValue& a, const PadicValue& b);
    friend PadicValue operator-(const PadicValue& a, const PadicValue& b) { return a + (-b); }
    friend PadicValue operator*(const PadicValue& a, const PadicValue& b);
    friend PadicValue operator/(const PadicValue& a, const PadicValue& b) { return a * b.inverse(); }
    PadicValue& operator+=(const PadicValue& o) { return *this = *this + o; }
    PadicValue& operator-=(const PadicValue& o) { return *this = *this - o; }
    PadicValue& operator*=(const PadicValue& o) { return *this = *this * o; }

    PadicValue inverse() const;
    PadicValue pow(long e) const;

    /// Representation equality (same v, u and precision), not congruence.
    friend bool operator==(const PadicValue&, const PadicValue&) = default;

    std::string to_string() const;

private:
    std::uint64_t p_ = 0;
    int m_ = 0;
    int v_ = kInfinite;
    Residue u_ = 0;
    int n_ = kInfinite;
};

/// v_p(num) - v_p(den) and the unit part mod p^m. Exact zero for q = 0.
PadicValue padic_reduce(const BigRational& q, const PrimePowerCtx& ctx);
PadicValue padic_reduce(long value, const PrimePowerCtx& ctx);

/// a == b mod p^m. Both sides must be p-adic integers (NegativeValuation)
/// known to at least m digits (PrecisionLoss).
bool padic_compare(const PadicValue& a, const PadicValue& b, const PrimePowerCtx& ctx);

/// v_p(n) for n != 0.
int valuation(const BigInt& n, std::uint64_t p);

}  // namespace supercong
