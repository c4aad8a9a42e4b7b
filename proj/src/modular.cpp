#include "supercong/modular.hpp"

#include <algorithm>
#include <stdexcept>

#include "supercong/errors.hpp"

namespace supercong {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod64(r, a, n);
        a = mulmod64(a, a, n);
        e >>= 1;
    }
    return r;
}

std::uint64_t ipow(std::uint64_t p, int j) {
    std::uint64_t r = 1;
    for (int i = 0; i < j; ++i) r *= p;
    return r;
}

// Saturating add for precisions that may be kInfinite.
int sat_add(int a, int b) {
    if (a == PadicValue::kInfinite || b == PadicValue::kInfinite) return PadicValue::kInfinite;
    return a + b;
}

void check_same_field(const PadicValue& a, const PadicValue& b) {
    if (a.p() != b.p() || a.m() != b.m())
        throw std::invalid_argument("p-adic values from different contexts");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : kBases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t b : kBases) {
        std::uint64_t x = powmod64(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimePowerCtx::PrimePowerCtx(std::uint64_t p, int m) : p_(p), m_(m) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("modulus base must be a prime >= 5");
    if (m < 1 || m > kMaxExponent) throw std::invalid_argument("exponent must be in [1, 4]");
    pow_[0] = 1;
    for (int j = 1; j <= m; ++j) {
        if (pow_[j - 1] > (std::uint64_t{1} << 62) / p)
            throw std::invalid_argument("p^m does not fit in 62 bits");
        pow_[j] = pow_[j - 1] * p;
    }
}

Residue PrimePowerCtx::reduce(long value) const {
    long r = value % static_cast<long>(modulus());
    return static_cast<Residue>(r < 0 ? r + static_cast<long>(modulus()) : r);
}

Residue PrimePowerCtx::reduce(const BigInt& value) const {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus());
    return r.get_ui();
}

Residue PrimePowerCtx::add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= modulus() ? s - modulus() : s;
}

Residue PrimePowerCtx::sub(Residue a, Residue b) const { return a >= b ? a - b : a + modulus() - b; }

Residue PrimePowerCtx::mul(Residue a, Residue b) const {
    if (modulus() <= 0xffffffffULL) return a * b % modulus();
    return mulmod64(a, b, modulus());
}

Residue PrimePowerCtx::pow(Residue a, std::uint64_t e) const { return powmod64(a, e, modulus()); }

namespace {

// Inverse of a unit modulo n by extended Euclid.
std::uint64_t inv_unit(std::uint64_t a, std::uint64_t n) {
    __int128 t = 0, new_t = 1;
    __int128 r = n, new_r = a % n;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw NotInvertible("value is not a unit");
    if (t < 0) t += n;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Residue inv_mod(Residue a, const PrimePowerCtx& ctx) {
    if (a % ctx.p() == 0) throw NotInvertible("p divides the value");
    return inv_unit(a % ctx.modulus(), ctx.modulus());
}

Residue inv_mod(const BigInt& a, const PrimePowerCtx& ctx) { return inv_mod(ctx.reduce(a), ctx); }

int valuation(const BigInt& n, std::uint64_t p) {
    if (n == 0) return PadicValue::kInfinite;
    BigInt rest;
    BigInt prime(static_cast<unsigned long>(p));
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

PadicValue PadicValue::zero(std::uint64_t p, int m, int abs_precision) {
    PadicValue z;
    z.p_ = p;
    z.m_ = m;
    z.n_ = abs_precision;
    return z;
}

PadicValue PadicValue::unit(Residue u, const PrimePowerCtx& ctx) {
    return from_parts(ctx.p(), ctx.m(), 0, u, ctx.m());
}

PadicValue PadicValue::from_parts(std::uint64_t p, int m, int v, Residue u, int digits) {
    digits = std::min(digits, m);
    if (digits <= 0) return zero(p, m, v);
    if (u % p == 0) throw std::invalid_argument("unit part divisible by p");
    PadicValue r;
    r.p_ = p;
    r.m_ = m;
    r.v_ = v;
    r.u_ = u % ipow(p, digits);
    r.n_ = v + digits;
    return r;
}

Residue PadicValue::residue() const {
    if (is_zero()) return 0;
    if (v_ < 0) throw NegativeValuation("residue of a value with negative valuation");
    if (v_ >= m_) return 0;
    std::uint64_t mod = ipow(p_, m_);
    return mulmod64(ipow(p_, v_), u_, mod);
}

PadicValue PadicValue::operator-() const {
    if (is_zero()) return *this;
    std::uint64_t mod = ipow(p_, unit_digits());
    PadicValue r = *this;
    r.u_ = (mod - u_) % mod;
    return r;
}

PadicValue operator+(const PadicValue& a, const PadicValue& b) {
    check_same_field(a, b);
    const int n = std::min(a.n_, b.n_);
    if (a.is_zero() && b.is_zero()) return PadicValue::zero(a.p_, a.m_, n);
    const int v0 = std::min(a.v_, b.v_);
    if (n <= v0) return PadicValue::zero(a.p_, a.m_, n);
    const int width = n - v0;  // digits known above p^v0, <= m
    const std::uint64_t mod = ipow(a.p_, width);
    auto shifted = [&](const PadicValue& x) -> std::uint64_t {
        if (x.is_zero() || x.v_ - v0 >= width) return 0;
        return mulmod64(x.u_ % mod, ipow(a.p_, x.v_ - v0), mod);
    };
    std::uint64_t s = (shifted(a) + shifted(b)) % mod;
    if (s == 0) return PadicValue::zero(a.p_, a.m_, n);
    int j = 0;
    while (s % a.p_ == 0) {
        s /= a.p_;
        ++j;
    }
    PadicValue r;
    r.p_ = a.p_;
    r.m_ = a.m_;
    r.v_ = v0 + j;
    r.u_ = s;
    r.n_ = n;
    return r;
}

PadicValue operator*(const PadicValue& a, const PadicValue& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) {
        int n;
        if (a.is_zero() && b.is_zero()) {
            n = sat_add(a.n_, b.n_);
        } else {
            const PadicValue& z = a.is_zero() ? a : b;
            const PadicValue& x = a.is_zero() ? b : a;
            n = sat_add(z.n_, x.v_);
        }
        return PadicValue::zero(a.p_, a.m_, n);
    }
    const int digits = std::min(a.unit_digits(), b.unit_digits());
    const std::uint64_t mod = ipow(a.p_, digits);
    PadicValue r;
    r.p_ = a.p_;
    r.m_ = a.m_;
    r.v_ = a.v_ + b.v_;
    r.u_ = mulmod64(a.u_ % mod, b.u_ % mod, mod);
    r.n_ = r.v_ + digits;
    return r;
}

PadicValue PadicValue::inverse() const {
    if (is_zero()) throw DivisionByZero("p-adic inverse of zero");
    const int digits = unit_digits();
    PadicValue r = *this;
    r.v_ = -v_;
    r.u_ = inv_unit(u_, ipow(p_, digits));
    r.n_ = r.v_ + digits;
    return r;
}

PadicValue PadicValue::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    PadicValue r = from_parts(p_, m_, 0, 1, m_);
    PadicValue base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string PadicValue::to_string() const {
    if (is_zero()) return "(v=inf,u=0)";
    return "(v=" + std::to_string(v_) + ",u=" + std::to_string(u_) + ")";
}

PadicValue padic_reduce(const BigRational& q, const PrimePowerCtx& ctx) {
    if (q.is_zero()) return PadicValue::zero(ctx.p(), ctx.m());
    BigInt prime(static_cast<unsigned long>(ctx.p()));
    BigInt num, den;
    long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), q.num().get_mpz_t(), prime.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), q.den().get_mpz_t(), prime.get_mpz_t()));
    Residue u = ctx.mul(ctx.reduce(num), inv_mod(den, ctx));
    return PadicValue::from_parts(ctx.p(), ctx.m(), static_cast<int>(vn - vd), u, ctx.m());
}

PadicValue padic_reduce(long value, const PrimePowerCtx& ctx) {
    if (value == 0) return PadicValue::zero(ctx.p(), ctx.m());
    int v = 0;
    const long p = static_cast<long>(ctx.p());
    while (value % p == 0) {
        value /= p;
        ++v;
    }
    return PadicValue::from_parts(ctx.p(), ctx.m(), v, ctx.reduce(value), ctx.m());
}

bool padic_compare(const PadicValue& a, const PadicValue& b, const PrimePowerCtx& ctx) {
    for (const PadicValue* x : {&a, &b}) {
        if (x->p() != ctx.p()) throw std::invalid_argument("p-adic value from another prime");
        if (!x->is_zero() && x->v() < 0)
            throw NegativeValuation("congruence side is not a p-adic integer");
        if (x->precision() < ctx.m())
            throw PrecisionLoss("value known only mod p^" + std::to_string(x->precision()));
    }
    auto residue = [&](const PadicValue& x) -> Residue {
        if (x.is_zero() || x.v() >= ctx.m()) return 0;
        return ctx.mul(ctx.power(x.v()), x.u() % ctx.power(ctx.m() - x.v()));
    };
    return residue(a) == residue(b);
}

}  // namespace supercong
