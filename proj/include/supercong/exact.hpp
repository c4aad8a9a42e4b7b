#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace supercong {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq_class. Unlike mpq_class it refuses to
/// build or divide into a zero denominator (DivisionByZero) rather than
/// aborting the process.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
    BigRational(const BigInt& value) : q_(value) {}  // NOLINT
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    static BigRational from_mpq(mpq_class q);

    const BigInt& num() const { return q_.get_num(); }
    const BigInt& den() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

    BigRational inverse() const;
    BigRational abs() const;
    /// Integer power; negative exponents invert (DivisionByZero on 0).
    BigRational pow(long exponent) const;

    /// "a" for integers, "a/b" otherwise.
    std::string to_string() const;

private:
    mpq_class q_{0};
};

/// Exact arithmetic on the four field operations, dispatched by symbol.
enum class ArithOp { Add, Sub, Mul, Div };
BigRational rat_arith(const BigRational& a, const BigRational& b, ArithOp op);

BigInt pow(const BigInt& base, unsigned long exponent);
std::string to_string(const BigInt& value);

}  // namespace supercong
