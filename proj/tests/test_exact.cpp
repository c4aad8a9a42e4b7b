#include <random>

#include "doctest.h"
#include "supercong/errors.hpp"
#include "supercong/exact.hpp"
#include "supercong/jet.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

namespace {

BigRational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    return BigRational(num(rng), den(rng));
}

BigRational random_nonzero(std::mt19937_64& rng) {
    for (;;) {
        BigRational r = random_rational(rng);
        if (!r.is_zero()) return r;
    }
}

Jet2 random_jet(std::mt19937_64& rng) { return {random_nonzero(rng), random_rational(rng), random_rational(rng)}; }

}  // namespace

TEST_CASE("rational arithmetic examples") {
    CHECK(rat_arith(BigRational(1, 2), BigRational(1, 3), ArithOp::Add) == BigRational(5, 6));
    CHECK(rat_arith(BigRational(3, 2), BigRational(4, 3), ArithOp::Mul) == BigRational(2));
    CHECK(rat_arith(BigRational(1, 2), BigRational(1, 3), ArithOp::Sub) == BigRational(1, 6));
    CHECK(rat_arith(BigRational(1, 2), BigRational(1, 3), ArithOp::Div) == BigRational(3, 2));
    CHECK_THROWS_AS(rat_arith(BigRational(1), BigRational(0), ArithOp::Div), DivisionByZero);
    CHECK_THROWS_AS(BigRational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(BigRational(0).inverse(), DivisionByZero);
}

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
    BigRational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-3/2");
    BigRational z(0, -7);
    CHECK(z.num() == 0);
    CHECK(z.den() == 1);
    CHECK(z.to_string() == "0");
    CHECK(BigRational(10, 5).is_integer());
    CHECK(BigRational(2, 3).pow(-2) == BigRational(9, 4));
    CHECK(BigRational(-2, 3).abs() == BigRational(2, 3));
    CHECK(BigRational(1, 3) < BigRational(1, 2));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 500; ++i) {
        BigRational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == BigRational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == BigRational(1));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("jet arithmetic examples") {
    const Jet2 eps = Jet2::variable(0);
    Jet2 prod = jet_arith(Jet2(1) + eps, Jet2(1) - eps, ArithOp::Mul);
    CHECK(prod == Jet2(1, 0, -1));
    Jet2 q = jet_arith(Jet2(1), Jet2(1) + eps, ArithOp::Div);
    CHECK(q == Jet2(1, -1, 1));
    CHECK_THROWS_AS(jet_arith(eps, eps, ArithOp::Div), NonInvertible);
}

TEST_CASE("jets of products are products of jets") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Jet2 a = random_jet(rng), b = random_jet(rng), c = random_jet(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a / b) * b == a);
        CHECK(a * a.inverse() == Jet2(1));
    }
    // f(x) = x^3 at x = 2 + eps: 8 + 12 eps + 6 eps^2
    Jet2 x = Jet2::variable(2);
    CHECK(x * x * x == Jet2(8, 12, 6));
}

TEST_CASE("constant jets reduce to rational arithmetic") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        BigRational a = random_rational(rng), b = random_nonzero(rng);
        CHECK(Jet2(a) * Jet2(b) == Jet2(a * b));
        CHECK(Jet2(a) / Jet2(b) == Jet2(a / b));
        CHECK(Jet2(a) - Jet2(b) == Jet2(a - b));
    }
}

TEST_CASE("rising factorial jets carry logarithmic derivatives") {
    // d/de (x+e)_k = (x)_k sum 1/(x+j); second coefficient from the squared sum.
    for (long k = 0; k <= 12; ++k) {
        for (const BigRational& x : {BigRational(1, 2), BigRational(1), BigRational(3, 4)}) {
            Jet2 j = pochhammer(Jet2::variable(x), k);
            const BigRational base = pochhammer(x, k);
            const BigRational s1 = shifted_harmonic(k, 1, x);
            const BigRational s2 = shifted_harmonic(k, 2, x);
            CHECK(j.c0() == base);
            CHECK(j.c1() == base * s1);
            CHECK(j.c2() * 2 == base * (s1 * s1 - s2));
        }
    }
}
