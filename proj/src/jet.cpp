#include "supercong/jet.hpp"

#include "supercong/errors.hpp"

namespace supercong {

Jet2& Jet2::operator+=(const Jet2& o) {
    c0_ += o.c0_;
    c1_ += o.c1_;
    c2_ += o.c2_;
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    c2_ -= o.c2_;
    return *this;
}

Jet2& Jet2::operator*=(const Jet2& o) {
    BigRational r2 = c0_ * o.c2_ + c1_ * o.c1_ + c2_ * o.c0_;
    BigRational r1 = c0_ * o.c1_ + c1_ * o.c0_;
    c0_ *= o.c0_;
    c1_ = std::move(r1);
    c2_ = std::move(r2);
    return *this;
}

Jet2 Jet2::inverse() const {
    if (c0_.is_zero()) throw NonInvertible("jet inverse with zero constant term");
    // 1/(a + b e + c e^2) = 1/a - b/a^2 e + (b^2/a^3 - c/a^2) e^2
    BigRational inv = c0_.inverse();
    BigRational inv2 = inv * inv;
    return {inv, -c1_ * inv2, c1_ * c1_ * inv2 * inv - c2_ * inv2};
}

Jet2& Jet2::operator/=(const Jet2& o) { return *this *= o.inverse(); }

Jet2 jet_arith(const Jet2& a, const Jet2& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    return {};
}

Jet2 pochhammer(const Jet2& x, long k) {
    Jet2 r(1);
    for (long j = 0; j < k; ++j) r *= x + Jet2(BigRational(j));
    return r;
}

}  // namespace supercong
