#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/bigfloat.hpp"
#include "supercong/congruences.hpp"
#include "supercong/exact.hpp"

namespace supercong {

struct Constants {
    long bits = 0;
    BigFloat pi, ln2, catalan, gamma_quarter, gamma_three_quarter, euler_gamma;
};

/// invalid_argument below 64 bits.
Constants constants(long bits);

enum class TailModel {
    Positive,     // k^{-3/2} (log) decay, asymptotic integral tail
    Alternating,  // repeated averaging of partial sums
    Geometric,    // ratio -> 1/2
};

/// sum_{k>=0} (+-1)^k C(2k,k)^e / base^k * weight(k) with a closed form.
struct SeriesCase {
    std::string id;
    std::string statement;
    std::string anchor;
    std::string peer;  // congruence id sharing the summand
    int e = 3;
    long base = 64;
    Weight weight = Weight::One;
    bool alternating = false;
    TailModel tail = TailModel::Positive;
    double tolerance = 1e-6;  // relative
    std::function<BigFloat(const Constants&)> closed_form;

    /// Exact k-th term via the term-ratio recurrence.
    BigRational exact_term(long k) const;
};

const std::vector<SeriesCase>& series_registry();
/// UnknownCase if absent.
const SeriesCase& find_series(std::string_view id);

struct SeriesResult {
    std::string id;
    long terms = 0;  // partial sum covers 0 <= k <= terms
    long bits = 0;
    BigFloat partial, tail, closed, gap;
    /// Upper bound on the tail for positive series.
    std::optional<BigFloat> tail_upper;
    double tolerance = 0;
    bool within_tolerance = false;
    /// closed in [partial, partial + tail_upper]; positive series only.
    std::optional<bool> bracket;
    bool pass = false;
    long micros = 0;
};

/// invalid_argument for N < 10 or bits < 64.
SeriesResult evaluate_series(std::string_view id, long terms, long bits);

/// |E22^2 - E20| from the two tail-corrected evaluations.
BigFloat clausen_numeric_gap(long terms, long bits);

struct PsiCheck {
    std::string name;
    BigFloat residual;
    bool pass = false;
};

/// Digamma/trigamma special values at 1/4, 1/2, 3/4 against pi, ln 2, G,
/// each within 2^{1-bits/2}.
std::vector<PsiCheck> psi_value_details(long bits);
bool psi_value_checks(long bits);

}  // namespace supercong
