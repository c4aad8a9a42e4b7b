#include "supercong/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>

namespace supercong {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw())); }

// Re-precision in place without losing the current value.
void widen(mpfr_ptr x, mpfr_prec_t bits) {
    if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.mpq().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    widen(v_, wider(*this, o));
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    widen(v_, wider(*this, o));
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    widen(v_, wider(*this, o));
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    widen(v_, wider(*this, o));
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

std::string BigFloat::to_string(int digits) const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Re", std::max(digits, 1) - 1, v_) < 0) return "nan";
    std::unique_ptr<char, void (*)(char*)> guard(buf, mpfr_free_str);
    return buf;
}

BigFloat BigFloat::pi(long bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::ln2(long bits) {
    BigFloat r(bits);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::euler_gamma(long bits) {
    BigFloat r(bits);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.bits());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, long e) {
    BigFloat r(x.bits());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
    BigFloat r(std::max(x.bits(), y.bits()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigFloat agm(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.bits(), b.bits()));
    mpfr_agm(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat with_bits(const BigFloat& x, long bits) {
    BigFloat r(bits);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace supercong
