#include "supercong/identities.hpp"

#include <algorithm>
#include <mutex>

#include "supercong/errors.hpp"

namespace supercong {

namespace {

BigRational rat(const BigInt& n) { return BigRational(n); }
BigRational pow4(long k) { return BigRational(pow(BigInt(4), static_cast<unsigned long>(k))); }
long sign(long e) { return (e % 2 == 0) ? 1 : -1; }

struct Tables {
    std::shared_ptr<const HarmonicTable> h1;
    std::shared_ptr<const HarmonicTable> h2;
    const BigRational& H(long k) const { return h1->h(k); }
    const BigRational& H2(long k) const { return h2->h(k); }
};

Tables tables(long n) { return {harmonic_table(1, n), harmonic_table(2, n)}; }

// sum_{k=1}^{n} (-1)^k / k^2
BigRational alternating_h2(long n) {
    BigRational s;
    for (long k = 1; k <= n; ++k) s += BigRational(sign(k), k * k);
    return s;
}

// C(n,k) C(n+k,k)
BigInt shifted_pair(long n, long k) { return binomial(n, k) * binomial(n + k, k); }

BigRational cube_weighted(long n, const std::function<BigRational(long)>& weight) {
    BigRational s;
    for (long k = 0; k <= n; ++k) {
        BigInt b = binomial(n, k);
        s += BigRational(sign(k) * b * b * b) * weight(k);
    }
    return s;
}

// sum_{k=0}^{n} C(n,k) C(n+k,k) C(2k,k) w_k / (-4)^k
BigRational lemma2_sum(long n, const std::function<BigRational(long)>& weight) {
    BigRational s;
    for (long k = 0; k <= n; ++k) {
        s += BigRational(sign(k) * shifted_pair(n, k) * central_binomial(k)) / pow4(k) * weight(k);
    }
    return s;
}

BigRational ps03_lhs(long n, int d) {
    Tables t = tables(n);
    BigRational s;
    for (long k = 0; k <= n; ++k) {
        BigRational w = BigRational(1) + BigRational(d * (n - 2 * k)) * t.H(k);
        s += rat(pow(binomial(n, k), static_cast<unsigned long>(d))) * w;
    }
    return s;
}

std::vector<IdentityCase> build_registry() {
    std::vector<IdentityCase> r;

    r.push_back({"I_deg1_H",
                 "sum_{k=1}^{n-1} C(2k,k) H_k/4^k = C(2n,n) 2n (H_{n-1}-2)/4^n + 2",
                 "lower degree, first identity", 1, Parity::Any,
                 [](long n) {
                     Tables t = tables(n);
                     BigRational s;
                     for (long k = 1; k < n; ++k) s += rat(central_binomial(k)) * t.H(k) / pow4(k);
                     return s;
                 },
                 [](long n) {
                     Tables t = tables(n);
                     return rat(central_binomial(n) * 2 * n) * (t.H(n - 1) - 2) / pow4(n) + 2;
                 }});

    r.push_back({"I_deg1_H2",
                 "sum_{k=1}^{n-1} C(2k,k) H_k^(2)/4^k = C(2n,n) 2n H_{n-1}^(2)/4^n "
                 "- 2 sum_{k=1}^{n-1} C(2k,k)/(k 4^k)",
                 "lower degree, second identity", 1, Parity::Any,
                 [](long n) {
                     Tables t = tables(n);
                     BigRational s;
                     for (long k = 1; k < n; ++k) s += rat(central_binomial(k)) * t.H2(k) / pow4(k);
                     return s;
                 },
                 [](long n) {
                     Tables t = tables(n);
                     BigRational tail;
                     for (long k = 1; k < n; ++k) tail += rat(central_binomial(k)) / (pow4(k) * k);
                     return rat(central_binomial(n) * 2 * n) * t.H2(n - 1) / pow4(n) - tail * 2;
                 }});

    r.push_back({"I_prod_H", "sum_{k=1}^{n} C(n,k) C(n+k,k) (-1)^k H_k = 2 (-1)^n H_n",
                 "squared case, H_k weight", 0, Parity::Any,
                 [](long n) {
                     Tables t = tables(n);
                     BigRational s;
                     for (long k = 1; k <= n; ++k) s += rat(sign(k) * shifted_pair(n, k)) * t.H(k);
                     return s;
                 },
                 [](long n) { return BigRational(2 * sign(n)) * harmonic(n); }});

    r.push_back({"I_prod_H2",
                 "sum_{k=1}^{n} C(n,k) C(n+k,k) (-1)^k H_k^(2) = 2 (-1)^{n+1} sum_{k=1}^{n} (-1)^k/k^2",
                 "squared case, H_k^(2) weight", 0, Parity::Any,
                 [](long n) {
                     Tables t = tables(n);
                     BigRational s;
                     for (long k = 1; k <= n; ++k) s += rat(sign(k) * shifted_pair(n, k)) * t.H2(k);
                     return s;
                 },
                 [](long n) { return BigRational(2 * sign(n + 1)) * alternating_h2(n); }});

    r.push_back({"I_E03_split", "sum_{k=1}^{n} (-1)^k/k^2 = H_{floor(n/2)}^(2)/2 - H_n^(2)",
                 "E03, exact part", 0, Parity::Any,
                 [](long n) { return alternating_h2(n); },
                 [](long n) {
                     Tables t = tables(n);
                     return t.H2(n / 2) / 2 - t.H2(n);
                 }});

    r.push_back({"CD4a", "sum_{k=0}^{n} (-1)^k C(n,k)^3 = 0 (n odd)", "CD4", 1, Parity::Odd,
                 [](long n) { return cube_weighted(n, [](long) { return BigRational(1); }); },
                 [](long) { return BigRational(0); }});

    r.push_back({"CD4b", "sum_{k=0}^{n} (-1)^k C(n,k)^3 H_k H_{n-k} = 0 (n odd)", "CD4", 1,
                 Parity::Odd,
                 [](long n) {
                     Tables t = tables(n);
                     return cube_weighted(n, [&](long k) { return t.H(k) * t.H(n - k); });
                 },
                 [](long) { return BigRational(0); }});

    r.push_back({"CD1", "sum_{k=0}^{n} (-1)^k C(n,k)^3 H_k = -c_m/6 (n = 2m+1)", "CD1", 1,
                 Parity::Odd,
                 [](long n) {
                     Tables t = tables(n);
                     return cube_weighted(n, [&](long k) { return t.H(k); });
                 },
                 [](long n) { return -c_m((n - 1) / 2) / 6; }});

    r.push_back({"CD2",
                 "sum_{k=0}^{n} (-1)^k C(n,k)^3 (3 H_k^2 + H_k^(2)) = "
                 "c_m/2 (H_m - 4 H_{2m+1} - H_{3m+2} + 2 H_{6m+4}) (n = 2m+1)",
                 "CD2", 1, Parity::Odd,
                 [](long n) {
                     Tables t = tables(n);
                     return cube_weighted(n, [&](long k) { return t.H(k) * t.H(k) * 3 + t.H2(k); });
                 },
                 [](long n) {
                     const long m = (n - 1) / 2;
                     Tables t = tables(6 * m + 4);
                     return c_m(m) / 2 *
                            (t.H(m) - t.H(2 * m + 1) * 4 - t.H(3 * m + 2) + t.H(6 * m + 4) * 2);
                 }});

    r.push_back({"CD7",
                 "sum_{k=0}^{n} C(n,k) C(n+k,k) C(2k,k) H_k^(2)/(-4)^k = "
                 "C(n,n/2)^2 sum_{k=1}^{n} (-1)^k/k^2 / 4^n (n even); "
                 "-4^{n-1} / (n^2 C(n-1,(n-1)/2)^2) (n odd)",
                 "CD7", 0, Parity::Any,
                 [](long n) {
                     Tables t = tables(n);
                     return lemma2_sum(n, [&](long k) { return t.H2(k); });
                 },
                 [](long n) {
                     if (n % 2 == 0) {
                         BigInt c = binomial(n, n / 2);
                         return rat(c * c) * alternating_h2(n) / pow4(n);
                     }
                     BigInt c = binomial(n - 1, (n - 1) / 2);
                     return -pow4(n - 1) / rat(c * c * n * n);
                 }});

    r.push_back({"CD5",
                 "sum_{k=0}^{n} C(n,k) C(n+k,k) C(2k,k) H_k/(-4)^k = C(n,n/2)^2 H_n/4^n (n even)",
                 "CD5", 0, Parity::Even,
                 [](long n) {
                     Tables t = tables(n);
                     return lemma2_sum(n, [&](long k) { return t.H(k); });
                 },
                 [](long n) {
                     BigInt c = binomial(n, n / 2);
                     return rat(c * c) * harmonic(n) / pow4(n);
                 }});

    r.push_back({"CD6",
                 "sum_{k=0}^{n} C(n,k) C(n+k,k) C(2k,k) H_{2k}/(-4)^k = C(n,n/2)^2 H_n/(2 4^n) (n even)",
                 "CD6", 0, Parity::Even,
                 [](long n) {
                     Tables t = tables(2 * n);
                     return lemma2_sum(n, [&](long k) { return t.H(2 * k); });
                 },
                 [](long n) {
                     BigInt c = binomial(n, n / 2);
                     return rat(c * c) * harmonic(n) / (pow4(n) * 2);
                 }});

    r.push_back({"I_E70",
                 "sum_{k=0}^{n} C(n,k) C(n+k,k) H_k/(-2)^k = C(n,n/2) (-1)^{n/2} H_n/2^n (n even); "
                 "(-1)^{(n+1)/2} 2^{n-1} / (n C(n-1,(n-1)/2)) (n odd)",
                 "E70 proof identity", 0, Parity::Any,
                 [](long n) {
                     Tables t = tables(n);
                     BigRational s;
                     for (long k = 0; k <= n; ++k) {
                         BigRational two_k(pow(BigInt(2), static_cast<unsigned long>(k)));
                         s += rat(sign(k) * shifted_pair(n, k)) * t.H(k) / two_k;
                     }
                     return s;
                 },
                 [](long n) {
                     BigRational two_n(pow(BigInt(2), static_cast<unsigned long>(n)));
                     if (n % 2 == 0)
                         return rat(sign(n / 2) * binomial(n, n / 2)) * harmonic(n) / two_n;
                     return BigRational(sign((n + 1) / 2)) * two_n / 2 /
                            rat(binomial(n - 1, (n - 1) / 2) * n);
                 }});

    r.push_back({"I_PS03_3", "sum_{k=0}^{n} C(n,k)^3 (1 + 3(n-2k) H_k) = (-1)^n",
                 "harmonic-weighted power sum, cube", 0, Parity::Any,
                 [](long n) { return ps03_lhs(n, 3); },
                 [](long n) { return BigRational(sign(n)); }});

    r.push_back({"I_PS03_4", "sum_{k=0}^{n} C(n,k)^4 (1 + 4(n-2k) H_k) = (-1)^n C(2n,n)",
                 "harmonic-weighted power sum, fourth power", 0, Parity::Any,
                 [](long n) { return ps03_lhs(n, 4); },
                 [](long n) { return rat(sign(n) * central_binomial(n)); }});

    r.push_back({"I_PS03_5",
                 "sum_{k=0}^{n} C(n,k)^5 (1 + 5(n-2k) H_k) = (-1)^n sum_{k=0}^{n} C(n,k)^2 C(n+k,k)",
                 "harmonic-weighted power sum, fifth power", 0, Parity::Any,
                 [](long n) { return ps03_lhs(n, 5); },
                 [](long n) {
                     BigInt s = 0;
                     for (long k = 0; k <= n; ++k) s += binomial(n, k) * shifted_pair(n, k);
                     return rat(sign(n) * s);
                 }});

    r.push_back({"I_aux_asym", "sum_{k=0}^{n} C(n,k)^3 (n-2k) H_k H_{n-k} = 0",
                 "antisymmetry under k -> n-k", 0, Parity::Any,
                 [](long n) {
                     Tables t = tables(n);
                     BigRational s;
                     for (long k = 0; k <= n; ++k) {
                         BigInt b = binomial(n, k);
                         s += rat(b * b * b * (n - 2 * k)) * t.H(k) * t.H(n - k);
                     }
                     return s;
                 },
                 [](long) { return BigRational(0); }});

    r.push_back({"WZ_cert",
                 "sum_{k=0}^{2n+3} |F(n+1,k) - F(n,k) - G(n,k+1) + G(n,k)| = 0 (n = m)",
                 "WZ pair F, G", 0, Parity::Any,
                 [](long m) {
                     BigRational s;
                     for (long k = 0; k <= 2 * m + 3; ++k) s += wz_certificate_check(m, k).abs();
                     return s;
                 },
                 [](long) { return BigRational(0); }});

    r.push_back({"WZ_telescope", "S(n+1) - S(n) = -1/(2n+1)^2 + 1/(2n+2)^2 (n = m)",
                 "summation by parts", 0, Parity::Any,
                 [](long m) { return wz_S(m + 1) - wz_S(m); },
                 [](long m) {
                     return -BigRational(1, (2 * m + 1) * (2 * m + 1)) +
                            BigRational(1, (2 * m + 2) * (2 * m + 2));
                 }});

    for (JetSeries s : {JetSeries::DixonDc, JetSeries::DixonDa, JetSeries::WhippleDee2,
                        JetSeries::WhippleDaa2}) {
        const bool second = s == JetSeries::WhippleDee2 || s == JetSeries::WhippleDaa2;
        r.push_back({"jet_" + std::string(jet_series_name(s)),
                     second ? "2 [eps^2] of the perturbed 3F2 term equals its harmonic weight (n = k)"
                            : "[eps^1] of the perturbed 3F2 term equals its harmonic weight (n = k)",
                     "parameter derivatives of Dixon/Whipple terms", 0, Parity::Any,
                     [s](long k) { return term_jet(s, k).got; },
                     [s](long k) { return term_jet(s, k).expected; }});
    }
    return r;
}

}  // namespace

bool IdentityCase::in_domain(long n) const {
    if (n < n_min) return false;
    if (parity == Parity::Even) return n % 2 == 0;
    if (parity == Parity::Odd) return n % 2 == 1;
    return true;
}

const std::vector<IdentityCase>& identity_registry() {
    static const std::vector<IdentityCase> registry = build_registry();
    return registry;
}

const IdentityCase& find_identity(std::string_view id) {
    for (const auto& c : identity_registry()) {
        if (c.id == id) return c;
    }
    throw UnknownCase("unknown identity id: " + std::string(id));
}

IdentityResult check_identity(std::string_view id, long n) {
    const IdentityCase& c = find_identity(id);
    if (!c.in_domain(n))
        throw OutOfDomain(c.id + " is not defined at n = " + std::to_string(n));
    IdentityResult r{c.id, n, c.lhs(n), c.rhs(n), false};
    r.pass = r.lhs == r.rhs;
    return r;
}

std::shared_ptr<const HarmonicTable> harmonic_table(int order, long n) {
    static std::mutex mutex;
    static std::shared_ptr<const HarmonicTable> cache[3];
    if (order < 1 || order > 2) return std::make_shared<HarmonicTable>(order, n);
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot || slot->size() < n) {
        long size = std::max<long>(n, slot ? 2 * slot->size() : 64);
        slot = std::make_shared<HarmonicTable>(order, size);
    }
    return slot;
}

BigRational wz_F(long m, long k) {
    if (k < 0) return 0;
    BigInt c = binomial(2 * m, m);
    // (-4)^{2m-k} = 16^m / (-4)^k
    return rat(sign(k) * binomial(2 * m, k) * binomial(2 * m + k, k) * central_binomial(k) *
               pow(BigInt(16), static_cast<unsigned long>(m))) /
           (rat(c * c) * pow4(k));
}

BigRational wz_G(long m, long k) {
    if (k < 0) return 0;
    BigInt c = binomial(2 * m, m);
    BigRational coeff(BigInt(-2 * (4 * m + 3) * k * k), pow(BigInt(2 * m + 1), 3));
    return coeff *
           rat(sign(k) * binomial(2 * m + 1, k - 1) * binomial(2 * m + k, k) * central_binomial(k) *
               pow(BigInt(16), static_cast<unsigned long>(m))) /
           (rat(c * c) * pow4(k));
}

BigRational wz_certificate_check(long m, long k) {
    return wz_F(m + 1, k) - wz_F(m, k) - wz_G(m, k + 1) + wz_G(m, k);
}

BigRational wz_S(long m) {
    auto t = harmonic_table(2, 2 * m);
    BigRational s;
    for (long k = 1; k <= 2 * m; ++k) s += wz_F(m, k) * t->h(k);
    return s;
}

bool wz_telescope_check(long m) {
    return wz_S(m + 1) - wz_S(m) ==
           -BigRational(1, (2 * m + 1) * (2 * m + 1)) + BigRational(1, (2 * m + 2) * (2 * m + 2));
}

JetSeries parse_jet_series(std::string_view id) {
    if (id == "dixon_dc") return JetSeries::DixonDc;
    if (id == "dixon_da") return JetSeries::DixonDa;
    if (id == "whipple_dee2") return JetSeries::WhippleDee2;
    if (id == "whipple_daa2") return JetSeries::WhippleDaa2;
    throw UnknownCase("unknown jet series id: " + std::string(id));
}

std::string_view jet_series_name(JetSeries s) {
    switch (s) {
        case JetSeries::DixonDc: return "dixon_dc";
        case JetSeries::DixonDa: return "dixon_da";
        case JetSeries::WhippleDee2: return "whipple_dee2";
        case JetSeries::WhippleDaa2: return "whipple_daa2";
    }
    return "";
}

JetCheck term_jet(JetSeries series, long k) {
    const BigRational half(1, 2);
    const Jet2 eps = Jet2::variable(0);
    std::vector<Jet2> top, bottom;
    switch (series) {
        case JetSeries::DixonDc:  // 3F2(1/2, 1/2, c; 1, 3/2-c), c = 1/2 + eps
            top = {half, half, Jet2(half) + eps};
            bottom = {BigRational(1), Jet2(1) - eps};
            break;
        case JetSeries::DixonDa:  // 3F2(a, 1/2, 1/2; 1/2+a, 1/2+a), a = 1/2 + eps
            top = {Jet2(half) + eps, half, half};
            bottom = {Jet2(1) + eps, Jet2(1) + eps};
            break;
        case JetSeries::WhippleDee2:  // 3F2(1/2, 1/2, 1/2; e, 2-e), e = 1 + eps
            top = {half, half, half};
            bottom = {Jet2(1) + eps, Jet2(1) - eps};
            break;
        case JetSeries::WhippleDaa2:  // 3F2(a, 1-a, 1/2; 1, 1), a = 1/2 + eps
            top = {Jet2(half) + eps, Jet2(half) - eps, half};
            bottom = {BigRational(1), BigRational(1)};
            break;
    }
    Jet2 term(BigRational(1) / rat(factorial(k)));
    for (const Jet2& a : top) term *= pochhammer(a, k);
    for (const Jet2& b : bottom) term /= pochhammer(b, k);

    Tables t = tables(k);
    const BigInt c = central_binomial(k);
    const BigRational base = rat(c * c * c) / pow4(3 * k);
    const BigRational odd1 = t.h1->o(k);
    const BigRational odd2 = t.h2->o(k);

    JetCheck out{term, {}, {}, false};
    switch (series) {
        case JetSeries::DixonDc:
            out.got = term.c1();
            out.expected = base * (odd1 * 2 + t.H(k));
            break;
        case JetSeries::DixonDa:
            out.got = term.c1();
            out.expected = base * (odd1 * 2 - t.H(k) * 2);
            break;
        case JetSeries::WhippleDee2:
            out.got = term.c2() * 2;
            out.expected = base * t.H2(k) * 2;
            break;
        case JetSeries::WhippleDaa2:
            out.got = term.c2() * 2;
            out.expected = base * odd2 * -8;
            break;
    }
    out.pass = term.c0() == base && out.got == out.expected;
    return out;
}

bool term_jet_check(std::string_view series_id, long k) {
    return term_jet(parse_jet_series(series_id), k).pass;
}

}  // namespace supercong
