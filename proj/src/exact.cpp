#include "supercong/exact.hpp"

#include "supercong/errors.hpp"

namespace supercong {

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_.canonicalize();
}

BigRational BigRational::from_mpq(mpq_class q) {
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
    BigRational r;
    r.q_ = std::move(q);
    return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
    q_ += o.q_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    q_ -= o.q_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    q_ *= o.q_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.q_ = -q_;
    return r;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    BigRational r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

BigRational BigRational::abs() const {
    BigRational r;
    r.q_ = ::abs(q_);
    return r;
}

BigRational BigRational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    BigRational r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.q_.get_den_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

std::string BigRational::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

BigRational rat_arith(const BigRational& a, const BigRational& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    return {};
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace supercong
