#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "supercong/exact.hpp"

namespace supercong {

/// Owning MPFR value. Binary operators round to nearest at the larger of the
/// two operand precisions.
class BigFloat {
public:
    explicit BigFloat(long bits = 256);
    BigFloat(long value, long bits);
    BigFloat(const BigRational& value, long bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    BigFloat& operator*=(long o);
    BigFloat& operator/=(long o);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, long b) { return a /= b; }
    BigFloat operator-() const;

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant decimal digits.
    std::string to_string(int digits = 20) const;

    static BigFloat pi(long bits);
    static BigFloat ln2(long bits);
    static BigFloat euler_gamma(long bits);

private:
    mpfr_t v_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat pow(const BigFloat& x, long e);
/// x^y for real y.
BigFloat pow(const BigFloat& x, const BigFloat& y);
/// Arithmetic-geometric mean.
BigFloat agm(const BigFloat& a, const BigFloat& b);
/// Same value rounded to another precision.
BigFloat with_bits(const BigFloat& x, long bits);

}  // namespace supercong
