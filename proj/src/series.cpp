#include "supercong/series.hpp"

#include <chrono>
#include <stdexcept>

#include "supercong/errors.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

namespace {

constexpr long kGuardBits = 32;
constexpr int kAveragingRounds = 20;
constexpr int kTailOrder = 4;  // powers k^{-j}, j <= 4, in the asymptotic tail

void require_bits(long bits) {
    if (bits < 64) throw std::invalid_argument("precision below 64 bits");
}

BigFloat catalan_constant(const BigFloat& pi, long w) {
    // G = (pi/8) ln(2+sqrt 3) + (3/8) sum_k 1/((2k+1)^2 C(2k,k))
    BigFloat inv_binom(1, w);
    BigFloat sum(1, w);
    const BigFloat eps = pow(BigFloat(2, w), -(w + 4));
    for (long k = 1;; ++k) {
        inv_binom *= k;
        inv_binom /= 2 * (2 * k - 1);
        BigFloat term = inv_binom / ((2 * k + 1) * (2 * k + 1));
        sum += term;
        if (term < eps) break;
    }
    BigFloat root3 = sqrt(BigFloat(3, w));
    return pi / 8 * log(BigFloat(2, w) + root3) + sum * 3 / 8;
}

// Running harmonic-type sums shared by the exact and floating term generators.
template <class T>
struct Weights {
    T h, h2, o, o2;
    long k = 0;

    template <class One>
    void advance(const One& one) {
        ++k;
        h += one / k;
        h2 += one / (k * k);
        o += one / (2 * k - 1);
        o2 += one / ((2 * k - 1) * (2 * k - 1));
    }

    template <class One>
    T value(Weight w, const One& one) const {
        auto ps = [&](long d) { return one * 2 - h * (d * (4 * k + 1)); };
        switch (w) {
            case Weight::One: return one;
            case Weight::H: return h;
            case Weight::H2: return h2;
            case Weight::O: return o;
            case Weight::O2: return o2;
            case Weight::FourK1: return one * (4 * k + 1);
            case Weight::PS3: return ps(3);
            case Weight::PS4: return ps(4);
            case Weight::PS5: return ps(5);
            default: break;
        }
        throw std::invalid_argument("weight not used by any series");
    }
};

long ipow4(int e) { return 1L << (2 * e); }

// Asymptotic shape of a positive series term:
// pi^{-e/2} sum_j x^{-e/2-j} (alpha_j + beta_j ln x).
struct TailShape {
    double s0 = 0;  // e/2
    std::vector<BigFloat> alpha, beta;
    BigFloat scale;
};

std::vector<BigRational> central_binomial_expansion(int e) {
    // C(2k,k)/4^k = (pi k)^{-1/2} (1 - 1/8k + 1/128k^2 + 5/1024k^3 - 21/32768k^4 + ...)
    const std::vector<BigRational> base = {BigRational(1), BigRational(-1, 8), BigRational(1, 128),
                                           BigRational(5, 1024), BigRational(-21, 32768)};
    std::vector<BigRational> out(kTailOrder + 1, BigRational(0));
    out[0] = 1;
    for (int r = 0; r < e; ++r) {
        std::vector<BigRational> next(kTailOrder + 1, BigRational(0));
        for (int i = 0; i <= kTailOrder; ++i)
            for (int j = 0; i + j <= kTailOrder; ++j) next[i + j] += out[i] * base[j];
        out = std::move(next);
    }
    return out;
}

TailShape tail_shape(const SeriesCase& c, const Constants& k, long w) {
    const BigFloat one(1, w);
    // weight ~ lambda ln x + sum_j w_j x^{-j}
    BigRational lambda(0);
    std::vector<BigFloat> wj(kTailOrder + 1, BigFloat(0, w));
    const BigFloat zeta2 = k.pi * k.pi / 6;
    switch (c.weight) {
        case Weight::One:
            wj[0] = one;
            break;
        case Weight::H:
            lambda = 1;
            wj[0] = k.euler_gamma;
            wj[1] = BigFloat(BigRational(1, 2), w);
            wj[2] = BigFloat(BigRational(-1, 12), w);
            wj[4] = BigFloat(BigRational(1, 120), w);
            break;
        case Weight::O:
            lambda = BigRational(1, 2);
            wj[0] = k.ln2 + k.euler_gamma / 2;
            wj[2] = BigFloat(BigRational(1, 48), w);
            wj[4] = BigFloat(BigRational(-7, 1920), w);
            break;
        case Weight::H2:
            wj[0] = zeta2;
            wj[1] = BigFloat(-1, w);
            wj[2] = BigFloat(BigRational(1, 2), w);
            wj[3] = BigFloat(BigRational(-1, 6), w);
            break;
        case Weight::O2:
            wj[0] = zeta2 * 3 / 4;
            wj[1] = BigFloat(BigRational(-1, 4), w);
            wj[3] = BigFloat(BigRational(1, 48), w);
            break;
        default:
            throw std::invalid_argument("no asymptotic tail for this weight");
    }
    const auto a = central_binomial_expansion(c.e);
    TailShape t;
    t.s0 = c.e / 2.0;
    for (int j = 0; j <= kTailOrder; ++j) {
        BigFloat al(0, w);
        for (int i = 0; i <= j; ++i) al += BigFloat(a[i], w) * wj[j - i];
        t.alpha.push_back(al);
        t.beta.push_back(BigFloat(a[j] * lambda, w));
    }
    t.scale = pow(k.pi, BigFloat(BigRational(-c.e, 2), w));
    return t;
}

// int_X^inf of the asymptotic term.
BigFloat tail_integral(const TailShape& t, const BigFloat& x, long w) {
    BigFloat sum(0, w);
    const BigFloat lx = log(x);
    for (int j = 0; j <= kTailOrder; ++j) {
        const BigRational s = BigRational(static_cast<long>(2 * t.s0), 2) + BigRational(j);
        const BigFloat sm1(s - BigRational(1), w);
        const BigFloat xp = pow(x, BigFloat(BigRational(1) - s, w));
        sum += t.alpha[j] * xp / sm1;
        sum += t.beta[j] * xp * (lx / sm1 + BigFloat(1, w) / (sm1 * sm1));
    }
    return sum * t.scale;
}

// d/dx of the asymptotic term at x.
BigFloat tail_derivative(const TailShape& t, const BigFloat& x, long w) {
    BigFloat sum(0, w);
    const BigFloat lx = log(x);
    for (int j = 0; j <= kTailOrder; ++j) {
        const BigRational s = BigRational(static_cast<long>(2 * t.s0), 2) + BigRational(j);
        const BigFloat sf(s, w);
        const BigFloat xp = pow(x, BigFloat(-s - BigRational(1), w));
        sum += xp * (t.beta[j] * (BigFloat(1, w) - sf * lx) - sf * t.alpha[j]);
    }
    return sum * t.scale;
}

SeriesCase make(std::string id, std::string statement, std::string anchor, std::string peer, int e,
                long base, Weight w, bool alternating, TailModel tail, double tol,
                std::function<BigFloat(const Constants&)> closed) {
    SeriesCase c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.anchor = std::move(anchor);
    c.peer = std::move(peer);
    c.e = e;
    c.base = base;
    c.weight = w;
    c.alternating = alternating;
    c.tail = tail;
    c.tolerance = tol;
    c.closed_form = std::move(closed);
    return c;
}

BigFloat g34_4(const Constants& k) { return pow(k.gamma_three_quarter, 4); }

std::vector<SeriesCase> build_registry() {
    using TM = TailModel;
    std::vector<SeriesCase> r;
    r.push_back(make("E20", "sum C(2k,k)^3/64^k = pi/Gamma(3/4)^4", "cube series", "H2_improved", 3, 64,
                     Weight::One, false, TM::Positive, 1e-6,
                     [](const Constants& k) { return k.pi / g34_4(k); }));
    r.push_back(make("E22", "sum C(2k,k)^2/32^k = sqrt(pi)/Gamma(3/4)^2", "squared series with base 32",
                     "E23", 2, 32, Weight::One, false, TM::Geometric, 1e-6, [](const Constants& k) {
                         return sqrt(k.pi) / (k.gamma_three_quarter * k.gamma_three_quarter);
                     }));
    r.push_back(make("S321_H", "sum C(2k,k)^3 H_k/64^k = 2 pi (pi - 3 ln 2)/(3 Gamma(3/4)^4)",
                     "cube series, harmonic weight", "C321", 3, 64, Weight::H, false, TM::Positive, 1e-4,
                     [](const Constants& k) { return k.pi * 2 * (k.pi - k.ln2 * 3) / (g34_4(k) * 3); }));
    r.push_back(make("S321_O", "sum C(2k,k)^3 O_k/64^k = pi^2/(6 Gamma(3/4)^4)",
                     "cube series, odd harmonic weight", "E09", 3, 64, Weight::O, false, TM::Positive,
                     1e-4, [](const Constants& k) { return k.pi * k.pi / (g34_4(k) * 6); }));
    r.push_back(make("S322_H2", "sum C(2k,k)^3 H_k^(2)/64^k = pi (12 G - pi^2)/(3 Gamma(3/4)^4)",
                     "cube series, second-order harmonic weight", "C322", 3, 64, Weight::H2, false,
                     TM::Positive, 1e-4, [](const Constants& k) {
                         return k.pi * (k.catalan * 12 - k.pi * k.pi) / (g34_4(k) * 3);
                     }));
    r.push_back(make("S322_O2", "sum C(2k,k)^3 O_k^(2)/64^k = pi (pi^2 - 8 G)/(8 Gamma(3/4)^4)",
                     "cube series, second-order odd harmonic weight", "E10", 3, 64, Weight::O2, false,
                     TM::Positive, 1e-4, [](const Constants& k) {
                         return k.pi * (k.pi * k.pi - k.catalan * 8) / (g34_4(k) * 8);
                     }));
    r.push_back(make("E61", "sum (-1)^k C(2k,k)^3 (2 - 3(4k+1) H_k)/64^k = 12 ln 2/pi",
                     "harmonic Ramanujan-type series, cube", "E63", 3, 64, Weight::PS3, true,
                     TM::Alternating, 1e-4, [](const Constants& k) { return k.ln2 * 12 / k.pi; }));
    r.push_back(make("E62",
                     "sum (-1)^k C(2k,k)^5 (2 - 5(4k+1) H_k)/1024^k = 4 (15 ln 2 - 2 pi)/(3 Gamma(3/4)^4)",
                     "harmonic Ramanujan-type series, fifth power", "E65", 5, 1024, Weight::PS5, true,
                     TM::Alternating, 1e-4, [](const Constants& k) {
                         return (k.ln2 * 15 - k.pi * 2) * 4 / (g34_4(k) * 3);
                     }));
    r.push_back(make("VH_B1", "sum (-1)^k (4k+1) C(2k,k)^3/64^k = 2/pi", "Ramanujan-type series, cube",
                     "VH_B2", 3, 64, Weight::FourK1, true, TM::Alternating, 1e-6,
                     [](const Constants& k) { return BigFloat(2, k.pi.bits()) / k.pi; }));
    r.push_back(make("VH_A1", "sum (-1)^k (4k+1) C(2k,k)^5/1024^k = 2/Gamma(3/4)^4",
                     "Ramanujan-type series, fifth power", "VH_A2", 5, 1024, Weight::FourK1, true,
                     TM::Alternating, 1e-6,
                     [](const Constants& k) { return BigFloat(2, k.pi.bits()) / g34_4(k); }));
    return r;
}

BigFloat digamma(const BigRational& x, long w, long shift, long terms) {
    BigFloat y(x + BigRational(shift), w);
    BigFloat s = log(y) - BigFloat(1, w) / (y * 2);
    for (long k = 1; k <= terms; ++k)
        s -= BigFloat(bernoulli(2 * k), w) / (pow(y, 2 * k) * (2 * k));
    for (long j = 0; j < shift; ++j) s -= BigFloat(BigRational(1) / (x + BigRational(j)), w);
    return s;
}

BigFloat trigamma(const BigRational& x, long w, long shift, long terms) {
    BigFloat y(x + BigRational(shift), w);
    BigFloat s = BigFloat(1, w) / y + BigFloat(1, w) / (y * y * 2);
    for (long k = 1; k <= terms; ++k) s += BigFloat(bernoulli(2 * k), w) / pow(y, 2 * k + 1);
    for (long j = 0; j < shift; ++j) {
        BigFloat d(x + BigRational(j), w);
        s += BigFloat(1, w) / (d * d);
    }
    return s;
}

}  // namespace

Constants constants(long bits) {
    require_bits(bits);
    const long w = bits + kGuardBits;
    BigFloat pi = BigFloat::pi(w);
    BigFloat two(2, w);
    BigFloat g14 = sqrt(two * sqrt(two * pi) * pi / agm(BigFloat(1, w), sqrt(two)));
    BigFloat g34 = pi * sqrt(two) / g14;
    Constants c;
    c.bits = bits;
    c.pi = with_bits(pi, bits);
    c.ln2 = with_bits(BigFloat::ln2(w), bits);
    c.catalan = with_bits(catalan_constant(pi, w), bits);
    c.gamma_quarter = with_bits(g14, bits);
    c.gamma_three_quarter = with_bits(g34, bits);
    c.euler_gamma = with_bits(BigFloat::euler_gamma(w), bits);
    return c;
}

BigRational SeriesCase::exact_term(long k) const {
    const BigRational one(1);
    BigRational t(1);
    Weights<BigRational> wt;
    for (long j = 1; j <= k; ++j) {
        t *= BigRational(2 * (2 * j - 1), j).pow(e) / BigRational(base);
        if (alternating) t = -t;
        wt.advance(one);
    }
    return t * wt.value(weight, one);
}

const std::vector<SeriesCase>& series_registry() {
    static const std::vector<SeriesCase> registry = build_registry();
    return registry;
}

const SeriesCase& find_series(std::string_view id) {
    for (const auto& c : series_registry()) {
        if (c.id == id) return c;
    }
    throw UnknownCase("unknown series id: " + std::string(id));
}

SeriesResult evaluate_series(std::string_view id, long terms, long bits) {
    const SeriesCase& c = find_series(id);
    require_bits(bits);
    if (terms < 10) throw std::invalid_argument("series needs at least 10 terms");
    const auto start = std::chrono::steady_clock::now();
    const long w = bits + kGuardBits;
    const Constants k = constants(w);
    const BigFloat one(1, w);

    const long extra = c.tail == TailModel::Alternating ? kAveragingRounds : 1;
    BigFloat t(1, w);  // (+-1)^k C(2k,k)^e / base^k
    Weights<BigFloat> wt{BigFloat(0, w), BigFloat(0, w), BigFloat(0, w), BigFloat(0, w)};
    BigFloat sum = t * wt.value(c.weight, one);
    BigFloat partial(w), last_term(w), next_term(w);
    std::vector<BigFloat> sums;  // S_N, S_{N+1}, ...
    for (long n = 1; n <= terms + extra; ++n) {
        for (int r = 0; r < c.e; ++r) {
            t *= 2 * n - 1;
            t /= 2 * n;
        }
        t *= ipow4(c.e);
        t /= c.base;
        if (c.alternating) t = -t;
        wt.advance(one);
        BigFloat term = t * wt.value(c.weight, one);
        if (n <= terms) {
            sum += term;
            if (n == terms) {
                partial = sum;
                last_term = term;
                sums.push_back(sum);
            }
        } else {
            if (n == terms + 1) next_term = term;
            sum += term;
            sums.push_back(sum);
        }
    }

    SeriesResult res;
    res.id = c.id;
    res.terms = terms;
    res.bits = bits;
    res.tolerance = c.tolerance;
    switch (c.tail) {
        case TailModel::Positive: {
            TailShape shape = tail_shape(c, k, w);
            BigFloat x(BigRational(2 * terms + 1, 2), w);
            res.tail = tail_integral(shape, x, w) + tail_derivative(shape, x, w) / 24;
            res.tail_upper = with_bits(tail_integral(shape, BigFloat(terms, w), w), bits);
            break;
        }
        case TailModel::Geometric: {
            BigFloat ratio = next_term / last_term;
            res.tail = next_term / (one - ratio);
            res.tail_upper = with_bits(last_term, bits);  // term ratio stays below 1/2
            break;
        }
        case TailModel::Alternating: {
            for (int round = 0; round < kAveragingRounds; ++round) {
                for (std::size_t i = 0; i + 1 < sums.size(); ++i) sums[i] = (sums[i] + sums[i + 1]) / 2;
                sums.pop_back();
            }
            res.tail = sums.front() - partial;
            break;
        }
    }
    const BigFloat closed = c.closed_form(k);
    const BigFloat gap = abs(partial + res.tail - closed);
    BigFloat tol(w);
    mpfr_set_d(tol.raw(), c.tolerance, MPFR_RNDN);
    res.within_tolerance = gap <= abs(closed) * tol;
    if (res.tail_upper) {
        // Rounding slack: a few ulps per accumulated term, plus the closed form's own ulps.
        const BigFloat slack = pow(BigFloat(2, w), 1 - w) * (terms + 8) * (c.e + 4) * abs(partial);
        res.bracket = partial - slack <= closed && closed <= partial + *res.tail_upper + slack;
    }
    res.pass = res.within_tolerance || res.bracket.value_or(false);
    res.partial = with_bits(partial, bits);
    res.tail = with_bits(res.tail, bits);
    res.closed = with_bits(closed, bits);
    res.gap = with_bits(gap, bits);
    res.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return res;
}

BigFloat clausen_numeric_gap(long terms, long bits) {
    SeriesResult sq = evaluate_series("E22", terms, bits);
    SeriesResult cube = evaluate_series("E20", terms, bits);
    BigFloat a = sq.partial + sq.tail;
    BigFloat b = cube.partial + cube.tail;
    return abs(a * a - b);
}

std::vector<PsiCheck> psi_value_details(long bits) {
    require_bits(bits);
    const long w = bits + kGuardBits;
    const long shift = bits;
    const long terms = 30;
    const Constants k = constants(w);
    const BigFloat psi1 = digamma(1, w, shift, terms);
    auto d = [&](long num, long den) { return digamma(BigRational(num, den), w, shift, terms) - psi1; };
    auto t = [&](long num, long den) { return trigamma(BigRational(num, den), w, shift, terms); };
    const BigFloat pi2 = k.pi * k.pi;
    const BigFloat ln8 = k.ln2 * 3;

    std::vector<PsiCheck> out;
    out.push_back({"psi(1/2)-psi(1)+ln 4", d(1, 2) + k.ln2 * 2, false});
    out.push_back({"psi(1/4)-psi(1)+ln 8+pi/2", d(1, 4) + ln8 + k.pi / 2, false});
    out.push_back({"psi(3/4)-psi(1)+ln 8-pi/2", d(3, 4) + ln8 - k.pi / 2, false});
    out.push_back({"psi1(1/4)-pi^2-8G", t(1, 4) - pi2 - k.catalan * 8, false});
    out.push_back({"psi1(3/4)-pi^2+8G", t(3, 4) - pi2 + k.catalan * 8, false});
    out.push_back({"psi(3/4)-psi(1/4)-pi", d(3, 4) - d(1, 4) - k.pi, false});
    const BigFloat tol = pow(BigFloat(2, w), 1 - bits / 2);
    for (auto& c : out) {
        c.pass = abs(c.residual) <= tol;
        c.residual = with_bits(c.residual, bits);
    }
    return out;
}

bool psi_value_checks(long bits) {
    for (const auto& c : psi_value_details(bits)) {
        if (!c.pass) return false;
    }
    return true;
}

}  // namespace supercong
