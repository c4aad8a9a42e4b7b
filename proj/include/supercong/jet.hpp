#pragma once

#include "supercong/exact.hpp"

namespace supercong {

/// c0 + c1*eps + c2*eps^2, arithmetic truncated at eps^3.
///
/// Enough to carry first and second derivatives of a hypergeometric term
/// with respect to one perturbed parameter.
class Jet2 {
public:
    Jet2() = default;
    Jet2(BigRational c0) : c0_(std::move(c0)) {}  // NOLINT(google-explicit-constructor)
    Jet2(BigRational c0, BigRational c1, BigRational c2)
        : c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)) {}

    /// x + eps: the parameter being differentiated, evaluated at x.
    static Jet2 variable(BigRational x) { return {std::move(x), 1, 0}; }

    const BigRational& c0() const { return c0_; }
    const BigRational& c1() const { return c1_; }
    const BigRational& c2() const { return c2_; }

    Jet2& operator+=(const Jet2& o);
    Jet2& operator-=(const Jet2& o);
    Jet2& operator*=(const Jet2& o);
    Jet2& operator/=(const Jet2& o);

    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
    friend Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
    Jet2 operator-() const { return {-c0_, -c1_, -c2_}; }

    friend bool operator==(const Jet2&, const Jet2&) = default;

    /// Series inverse; NonInvertible when c0 == 0.
    Jet2 inverse() const;

private:
    BigRational c0_, c1_, c2_;
};

Jet2 jet_arith(const Jet2& a, const Jet2& b, ArithOp op);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1) over jets.
Jet2 pochhammer(const Jet2& x, long k);

}  // namespace supercong
