#include <mpfr.h>

#include "doctest.h"
#include "supercong/errors.hpp"
#include "supercong/sequences.hpp"
#include "supercong/series.hpp"

using namespace supercong;

namespace {

// |a - b| <= ulps * 2^{-bits} * |b|
bool close_ulps(const BigFloat& a, const BigFloat& b, long bits, long ulps) {
    BigFloat bound = abs(b) * pow(BigFloat(2, bits + 8), -bits) * ulps;
    return abs(a - b) <= bound;
}

BigFloat mpfr_oracle_gamma(long num, long den, long bits) {
    BigFloat x(BigRational(num, den), bits + 64);
    BigFloat r(bits + 64);
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat mpfr_oracle_catalan(long bits) {
    BigFloat r(bits + 64);
    mpfr_const_catalan(r.raw(), MPFR_RNDN);
    return r;
}

double as_double(const BigFloat& x) { return x.to_double(); }

}  // namespace

TEST_CASE("constants against MPFR's own special functions") {
    for (long bits : {64L, 128L, 256L, 512L}) {
        Constants k = constants(bits);
        CHECK(close_ulps(k.catalan, mpfr_oracle_catalan(bits), bits, 2));
        CHECK(close_ulps(k.gamma_quarter, mpfr_oracle_gamma(1, 4, bits), bits, 2));
        CHECK(close_ulps(k.gamma_three_quarter, mpfr_oracle_gamma(3, 4, bits), bits, 2));
        CHECK(k.pi.bits() == bits);
    }
    Constants k = constants(128);
    CHECK(as_double(k.gamma_quarter) == doctest::Approx(3.6256099082).epsilon(1e-10));
    CHECK(as_double(k.gamma_three_quarter) == doctest::Approx(1.2254167024).epsilon(1e-10));
    CHECK(as_double(k.catalan) == doctest::Approx(0.9159655942).epsilon(1e-10));
    CHECK_THROWS_AS(constants(32), std::invalid_argument);
}

TEST_CASE("closed forms") {
    Constants k = constants(128);
    CHECK(as_double(find_series("E20").closed_form(k)) == doctest::Approx(1.39320).epsilon(1e-5));
    CHECK(as_double(find_series("S321_O").closed_form(k)) == doctest::Approx(0.72948).epsilon(1e-5));
    CHECK(as_double(find_series("E61").closed_form(k)) == doctest::Approx(2.64763).epsilon(1e-5));
    CHECK(series_registry().size() == 10);
}

TEST_CASE("exact terms match the direct binomial formula") {
    for (const auto& c : series_registry()) {
        for (long k = 0; k <= 30; ++k) {
            BigRational t(pow(central_binomial(k), static_cast<unsigned long>(c.e)),
                          pow(BigInt(c.base), static_cast<unsigned long>(k)));
            if (c.alternating && k % 2 == 1) t = -t;
            BigRational w(1);
            switch (c.weight) {
                case Weight::H: w = harmonic(k); break;
                case Weight::H2: w = harmonic(k, 2); break;
                case Weight::O: w = odd_harmonic(k); break;
                case Weight::O2: w = odd_harmonic(k, 2); break;
                case Weight::FourK1: w = 4 * k + 1; break;
                case Weight::PS3: w = BigRational(2) - BigRational(3 * (4 * k + 1)) * harmonic(k); break;
                case Weight::PS5: w = BigRational(2) - BigRational(5 * (4 * k + 1)) * harmonic(k); break;
                default: break;
            }
            INFO(c.id << " k=" << k);
            CHECK(c.exact_term(k) == t * w);
        }
    }
}

TEST_CASE("positive series bracket their limits and grow with N") {
    for (const char* id : {"E20", "E22", "S321_H", "S321_O", "S322_H2", "S322_O2"}) {
        SeriesResult small = evaluate_series(id, 100, 128);
        SeriesResult large = evaluate_series(id, 1000, 128);
        INFO(id);
        REQUIRE(small.bracket.has_value());
        CHECK(*small.bracket);
        CHECK(*large.bracket);
        CHECK(small.partial < large.partial);
        CHECK(large.pass);
    }
}

TEST_CASE("alternating series converge after averaging") {
    for (const char* id : {"E61", "E62", "VH_B1", "VH_A1"}) {
        SeriesResult r = evaluate_series(id, 2000, 128);
        INFO(id);
        CHECK_FALSE(r.bracket.has_value());
        CHECK(r.within_tolerance);
    }
}

TEST_CASE("infinite Clausen relation") {
    CHECK(as_double(clausen_numeric_gap(2000, 128)) < 1e-6);
}

TEST_CASE("digamma and trigamma special values") {
    CHECK(psi_value_checks(128));
    CHECK(psi_value_checks(256));
    for (const auto& c : psi_value_details(192)) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(evaluate_series("E99", 100, 128), UnknownCase);
    CHECK_THROWS_AS(evaluate_series("E20", 5, 128), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_series("E20", 100, 16), std::invalid_argument);
}
