#include "supercong/congruences.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "supercong/errors.hpp"
#include "supercong/padic_gamma.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

namespace {

long sign(long e) { return (e % 2 == 0) ? 1 : -1; }

BigRational weight_value(Weight w, long k) {
    switch (w) {
        case Weight::One: return 1;
        case Weight::H: return harmonic(k);
        case Weight::H2: return harmonic(k, 2);
        case Weight::O: return odd_harmonic(k);
        case Weight::O2: return odd_harmonic(k, 2);
        case Weight::H2k: return harmonic(2 * k);
        case Weight::H2kMinusH: return harmonic(2 * k) - harmonic(k);
        case Weight::InvK: return BigRational(1, k);
        case Weight::FourK1: return 4 * k + 1;
        case Weight::PS3: return BigRational(2) - BigRational(3 * (4 * k + 1)) * harmonic(k);
        case Weight::PS4: return BigRational(2) - BigRational(4 * (4 * k + 1)) * harmonic(k);
        case Weight::PS5: return BigRational(2) - BigRational(5 * (4 * k + 1)) * harmonic(k);
    }
    return 0;
}

// Running p-adic state of the harmonic-type weights, advanced one k at a time.
struct WeightState {
    const PrimePowerCtx& ctx;
    PadicValue h, h2, o, o2, h2k;
    long k = 0;

    explicit WeightState(const PrimePowerCtx& c)
        : ctx(c), h(zero()), h2(zero()), o(zero()), o2(zero()), h2k(zero()) {}

    PadicValue zero() const { return PadicValue::zero(ctx.p(), ctx.m()); }
    PadicValue recip(long j, int r) const {
        return padic_reduce(BigRational(1, r == 1 ? j : j * j), ctx);
    }

    void advance() {
        ++k;
        h += recip(k, 1);
        h2 += recip(k, 2);
        o += recip(2 * k - 1, 1);
        o2 += recip(2 * k - 1, 2);
        h2k += recip(2 * k - 1, 1) + recip(2 * k, 1);
    }

    PadicValue value(Weight w) const {
        auto ps = [&](long d) { return padic_reduce(2, ctx) - padic_reduce(d * (4 * k + 1), ctx) * h; };
        switch (w) {
            case Weight::One: return padic_reduce(1, ctx);
            case Weight::H: return h;
            case Weight::H2: return h2;
            case Weight::O: return o;
            case Weight::O2: return o2;
            case Weight::H2k: return h2k;
            case Weight::H2kMinusH: return h2k - h;
            case Weight::InvK: return recip(k, 1);
            case Weight::FourK1: return padic_reduce(4 * k + 1, ctx);
            case Weight::PS3: return ps(3);
            case Weight::PS4: return ps(4);
            case Weight::PS5: return ps(5);
        }
        return zero();
    }
};

PadicValue sgn(const EvalContext& ec, long e) { return ec.reduce(sign(e)); }
PadicValue rat(const EvalContext& ec, long a, long b = 1) { return ec.reduce(BigRational(a, b)); }
PadicValue zero_of(const EvalContext& ec) { return PadicValue::zero(ec.p(), ec.ctx().m()); }

using Side = std::function<PadicValue(EvalContext&, long)>;

// Branch on p mod 4.
Side by_class(Side one, Side three) {
    return [one, three](EvalContext& ec, long k) { return ec.one_mod_4() ? one(ec, k) : three(ec, k); };
}

Side summand_side(Summand s) {
    return [s](EvalContext& ec, long) { return eval_summand(s, ec.ctx()); };
}

Side zero_side() {
    return [](EvalContext& ec, long) { return zero_of(ec); };
}

CongruenceCase sum_case(std::string id, std::string statement, std::string anchor, int power,
                        PrimeClass cls, Summand s, Side rhs) {
    CongruenceCase c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.anchor = std::move(anchor);
    c.power = power;
    c.prime_class = cls;
    c.summand = s;
    c.lhs = summand_side(s);
    c.rhs = std::move(rhs);
    return c;
}

CongruenceCase plain_case(std::string id, std::string statement, std::string anchor, int power,
                          PrimeClass cls, Side lhs, Side rhs, bool family = false) {
    CongruenceCase c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.anchor = std::move(anchor);
    c.power = power;
    c.prime_class = cls;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.family = family;
    return c;
}

Summand cube(Weight w, long k_from = 1) { return {3, 64, w, false, k_from, Upper::PMinus1}; }

// 4E_{p-3} - 2E_{2p-4}
PadicValue euler_combo(EvalContext& ec) { return rat(ec, 4) * ec.euler_e1() - rat(ec, 2) * ec.euler_e2(); }

std::vector<CongruenceCase> build_registry() {
    using PC = PrimeClass;
    std::vector<CongruenceCase> r;

    r.push_back(sum_case(
        "H2_improved", "sum_{k=0}^{p-1} C(2k,k)^3/64^k = -G4 (p=1 mod 4), -(p^2/16) G4 (p=3 mod 4)",
        "cube sum, two-term p^3 form", 3, PC::Any, cube(Weight::One, 0),
        by_class([](EvalContext& ec, long) { return -ec.gamma_quarter4(); },
                 [](EvalContext& ec, long) {
                     return -rat(ec, 1, 16) * ec.p_value() * ec.p_value() * ec.gamma_quarter4();
                 })));

    r.push_back(sum_case("deg1_H",
                         "sum_{k=1}^{p-1} C(2k,k) H_k/4^k = 2 - 2p + 4p^2 q - 6p^3 q^2 - p^3 B_{p-3}/3",
                         "lower degree, harmonic weight", 4, PC::Any, {1, 4, Weight::H, false, 1},
                         [](EvalContext& ec, long) {
                             PadicValue p = ec.p_value(), q = ec.q();
                             return rat(ec, 2) - rat(ec, 2) * p + rat(ec, 4) * p * p * q -
                                    rat(ec, 6) * p * p * p * q * q -
                                    rat(ec, 1, 3) * p * p * p * ec.bernoulli_b();
                         }));

    r.push_back(sum_case(
        "deg1_H2", "sum_{k=1}^{p-1} C(2k,k) H_k^(2)/4^k = -4q + 2pq^2 - 4p^2 q^3/3 - p^2 B_{p-3}/2",
        "lower degree, second-order harmonic weight", 3, PC::Any, {1, 4, Weight::H2, false, 1},
        [](EvalContext& ec, long) {
            PadicValue p = ec.p_value(), q = ec.q();
            return -rat(ec, 4) * q + rat(ec, 2) * p * q * q - rat(ec, 4, 3) * p * p * q * q * q -
                   rat(ec, 1, 2) * p * p * ec.bernoulli_b();
        }));

    r.push_back(sum_case("aux_Ta10", "sum_{k=1}^{p-1} C(2k,k)/(k 4^k) = -H_{(p-1)/2}",
                         "auxiliary, reciprocal weight", 3, PC::Any, {1, 4, Weight::InvK, false, 1},
                         [](EvalContext& ec, long) { return -ec.h(ec.n(), 1); }));

    r.push_back(plain_case(
        "aux_E12a", "H_{p-1} = -p^2 B_{p-3}/3", "auxiliary, Wolstenholme-type", 3, PC::Any,
        [](EvalContext& ec, long) { return ec.h(long(ec.p()) - 1, 1); },
        [](EvalContext& ec, long) { return -rat(ec, 1, 3) * ec.p_value() * ec.p_value() * ec.bernoulli_b(); }));

    r.push_back(plain_case(
        "aux_E12b", "4^{p-1} = 1 + 2pq + p^2 q^2", "auxiliary, Fermat quotient square", 3, PC::Any,
        [](EvalContext& ec, long) { return ec.reduce(BigRational(pow(BigInt(4), ec.p() - 1))); },
        [](EvalContext& ec, long) {
            PadicValue p = ec.p_value(), q = ec.q();
            return rat(ec, 1) + rat(ec, 2) * p * q + p * p * q * q;
        }));

    r.push_back(plain_case(
        "aux_E13a", "H_{p-1}^(2) = 2p B_{p-3}/3", "auxiliary, second-order harmonic", 2, PC::Any,
        [](EvalContext& ec, long) { return ec.h(long(ec.p()) - 1, 2); },
        [](EvalContext& ec, long) { return rat(ec, 2, 3) * ec.p_value() * ec.bernoulli_b(); }));

    r.push_back(plain_case(
        "aux_E13b", "H_{(p-1)/2} = -2q + pq^2 - 2p^2 q^3/3 - 7p^2 B_{p-3}/12", "auxiliary, half harmonic",
        3, PC::Any, [](EvalContext& ec, long) { return ec.h(ec.n(), 1); },
        [](EvalContext& ec, long) {
            PadicValue p = ec.p_value(), q = ec.q();
            return -rat(ec, 2) * q + p * q * q - rat(ec, 2, 3) * p * p * q * q * q -
                   rat(ec, 7, 12) * p * p * ec.bernoulli_b();
        }));

    r.push_back(plain_case(
        "aux_E04a", "H_{(p-1)/2}^(2) = 7p B_{p-3}/3", "auxiliary, half second-order harmonic", 2, PC::Any,
        [](EvalContext& ec, long) { return ec.h(ec.n(), 2); },
        [](EvalContext& ec, long) { return rat(ec, 7, 3) * ec.p_value() * ec.bernoulli_b(); }));

    r.push_back(plain_case(
        "aux_E04b", "H_{floor(p/4)}^(2) = (-1)^{(p-1)/2} (8E_{p-3} - 4E_{2p-4}) + 14p B_{p-3}/3",
        "auxiliary, quarter second-order harmonic", 2, PC::Any,
        [](EvalContext& ec, long) { return ec.h(long(ec.p()) / 4, 2); },
        [](EvalContext& ec, long) {
            return sgn(ec, ec.n()) * rat(ec, 2) * euler_combo(ec) +
                   rat(ec, 14, 3) * ec.p_value() * ec.bernoulli_b();
        }));

    r.push_back(plain_case(
        "aux_E03", "sum_{k=1}^{(p-1)/2} (-1)^k/k^2 = (-1)^{(p-1)/2} (4E_{p-3} - 2E_{2p-4})",
        "auxiliary, alternating second-order harmonic", 2, PC::Any,
        [](EvalContext& ec, long) {
            PadicValue s = zero_of(ec);
            for (long k = 1; k <= ec.n(); ++k) s += rat(ec, sign(k), k * k);
            return s;
        },
        [](EvalContext& ec, long) { return sgn(ec, ec.n()) * euler_combo(ec); }));

    r.push_back(sum_case("deg2_H",
                         "sum_{k=1}^{p-1} C(2k,k)^2 H_k/16^k = (-1)^{(p+1)/2} (4q - 2pq^2)",
                         "squared case, harmonic weight", 2, PC::Any, {2, 16, Weight::H, false, 1},
                         [](EvalContext& ec, long) {
                             PadicValue q = ec.q();
                             return sgn(ec, (long(ec.p()) + 1) / 2) *
                                    (rat(ec, 4) * q - rat(ec, 2) * ec.p_value() * q * q);
                         }));

    r.push_back(sum_case("deg2_H2", "sum_{k=1}^{p-1} C(2k,k)^2 H_k^(2)/16^k = -8E_{p-3} + 4E_{2p-4}",
                         "squared case, second-order harmonic weight", 2, PC::Any,
                         {2, 16, Weight::H2, false, 1},
                         [](EvalContext& ec, long) { return -rat(ec, 2) * euler_combo(ec); }));

    r.push_back(sum_case(
        "C321", "sum_{k=1}^{p-1} C(2k,k)^3 H_k/64^k = G4 (2q - pq^2) (p=1 mod 4), -(p/12) G4 (p=3 mod 4)",
        "cube sum, harmonic weight", 2, PC::Any, cube(Weight::H),
        by_class(
            [](EvalContext& ec, long) {
                PadicValue q = ec.q();
                return ec.gamma_quarter4() * (rat(ec, 2) * q - ec.p_value() * q * q);
            },
            [](EvalContext& ec, long) { return -rat(ec, 1, 12) * ec.p_value() * ec.gamma_quarter4(); })));

    r.push_back(sum_case(
        "C322",
        "sum_{k=1}^{p-1} C(2k,k)^3 H_k^(2)/64^k = -G4 (4E_{p-3} - 2E_{2p-4}) (p=1 mod 4), -G4/4 (p=3 mod 4)",
        "cube sum, second-order harmonic weight", 2, PC::Any, cube(Weight::H2),
        by_class([](EvalContext& ec, long) { return -ec.gamma_quarter4() * euler_combo(ec); },
                 [](EvalContext& ec, long) { return -rat(ec, 1, 4) * ec.gamma_quarter4(); })));

    r.push_back(sum_case(
        "E09", "sum_{k=1}^{p-1} C(2k,k)^3 O_k/64^k = 0 (p=1 mod 4), -(p/12) G4 (p=3 mod 4)",
        "cube sum, odd harmonic weight", 2, PC::Any, cube(Weight::O),
        by_class([](EvalContext& ec, long) { return zero_of(ec); },
                 [](EvalContext& ec, long) { return -rat(ec, 1, 12) * ec.p_value() * ec.gamma_quarter4(); })));

    r.push_back(sum_case(
        "E10", "sum_{k=1}^{p-1} C(2k,k)^3 O_k^(2)/64^k = G4 E_{p-3}/2 (p=1 mod 4), -G4/16 (p=3 mod 4)",
        "cube sum, second-order odd harmonic weight", 1, PC::Any, cube(Weight::O2),
        by_class([](EvalContext& ec, long) { return rat(ec, 1, 2) * ec.gamma_quarter4() * ec.euler_e1(); },
                 [](EvalContext& ec, long) { return -rat(ec, 1, 16) * ec.gamma_quarter4(); })));

    r.push_back(sum_case("E25", "sum_{k=1}^{p-1} C(2k,k)^3 H_{2k}/64^k = -(p/8) G4 (p=3 mod 4)",
                         "cube sum, doubled-index harmonic weight", 2, PC::ThreeMod4, cube(Weight::H2k),
                         [](EvalContext& ec, long) {
                             return -rat(ec, 1, 8) * ec.p_value() * ec.gamma_quarter4();
                         }));

    r.push_back(plain_case(
        "E07sum",
        "sum_{k=1}^{n} (-1)^k C(n,k)^3 H_{2k} = -(p/4) sum_{k=0}^{n} (-1)^k C(n,k)^3 H_k^(2), n = (p-1)/2",
        "finite binomial cube relation", 2, PC::ThreeMod4,
        [](EvalContext& ec, long) {
            PadicValue s = zero_of(ec);
            const long n = ec.n();
            for (long k = 1; k <= n; ++k) {
                BigInt b = binomial(n, k);
                s += ec.reduce(BigRational(sign(k) * b * b * b)) * ec.h(2 * k, 1);
            }
            return s;
        },
        [](EvalContext& ec, long) {
            PadicValue s = zero_of(ec);
            const long n = ec.n();
            for (long k = 0; k <= n; ++k) {
                BigInt b = binomial(n, k);
                s += ec.reduce(BigRational(sign(k) * b * b * b)) * ec.h(k, 2);
            }
            return -rat(ec, 1, 4) * ec.p_value() * s;
        }));

    r.push_back(sum_case("remark_q",
                         "sum_{k=1}^{p-1} C(2k,k)^3 (H_{2k} - H_k)/64^k = q sum_{k=0}^{p-1} C(2k,k)^3/64^k",
                         "cube sum, Fermat quotient relation", 1, PC::Any, cube(Weight::H2kMinusH),
                         [](EvalContext& ec, long) {
                             return ec.q() * eval_summand(cube(Weight::One, 0), ec.ctx());
                         }));

    r.push_back(sum_case("remark_0a", "sum_{k=1}^{p-1} C(2k,k)^3 H_k/64^k = 0 (p=3 mod 4)",
                         "cube sum vanishing, harmonic weight", 1, PC::ThreeMod4, cube(Weight::H),
                         zero_side()));

    r.push_back(sum_case("remark_0b", "sum_{k=1}^{p-1} C(2k,k)^3 H_{2k}/64^k = 0 (p=3 mod 4)",
                         "cube sum vanishing, doubled-index harmonic weight", 1, PC::ThreeMod4,
                         cube(Weight::H2k), zero_side()));

    r.push_back(sum_case(
        "E23",
        "sum_{k=0}^{p-1} C(2k,k)^2/32^k = (-1)^{(p+1)/2} Gp(1/2) Gp(1/4)^2 (p=1 mod 4), 0 (p=3 mod 4)",
        "squared sum with base 32", 2, PC::Any, {2, 32, Weight::One, false, 0},
        by_class(
            [](EvalContext& ec, long) {
                return sgn(ec, (long(ec.p()) + 1) / 2) * ec.gamma_half() * ec.gamma_quarter() *
                       ec.gamma_quarter();
            },
            [](EvalContext& ec, long) { return zero_of(ec); })));

    r.push_back(plain_case(
        "clausen_trunc", "(sum_{k=0}^{p-1} C(2k,k)^2/32^k)^2 = sum_{k=0}^{p-1} C(2k,k)^3/64^k",
        "truncated Clausen relation", 2, PC::Any,
        [](EvalContext& ec, long) {
            PadicValue s = eval_summand({2, 32, Weight::One, false, 0}, ec.ctx());
            return s * s;
        },
        summand_side(cube(Weight::One, 0))));

    r.push_back(sum_case(
        "E70",
        "sum_{k=0}^{p-1} C(2k,k)^2 H_k/32^k = Gp(1/2) Gp(1/4)^2 (2q - pq^2) (p=1 mod 4), "
        "Gp(1/2) Gp(1/4)^2/2 (p=3 mod 4)",
        "squared sum with base 32, harmonic weight", 2, PC::Any, {2, 32, Weight::H, false, 0},
        by_class(
            [](EvalContext& ec, long) {
                PadicValue q = ec.q();
                return ec.gamma_half() * ec.gamma_quarter() * ec.gamma_quarter() *
                       (rat(ec, 2) * q - ec.p_value() * q * q);
            },
            [](EvalContext& ec, long) {
                return rat(ec, 1, 2) * ec.gamma_half() * ec.gamma_quarter() * ec.gamma_quarter();
            })));

    r.push_back(sum_case("VH_B2", "sum_{k=0}^{p-1} (4k+1) (-1)^k C(2k,k)^3/64^k = (-1)^{(p-1)/2} p",
                         "Van Hamme cube analog", 3, PC::Any, {3, 64, Weight::FourK1, true, 0},
                         [](EvalContext& ec, long) { return sgn(ec, ec.n()) * ec.p_value(); }));

    r.push_back(sum_case(
        "VH_A2", "sum_{k=0}^{p-1} (4k+1) (-1)^k C(2k,k)^5/1024^k = -p/Gp(3/4)^4 (p=1 mod 4), 0 (p=3 mod 4)",
        "Van Hamme fifth-power analog", 3, PC::Any, {5, 1024, Weight::FourK1, true, 0},
        by_class([](EvalContext& ec, long) { return -ec.p_value() * ec.gamma_three_quarter().pow(-4); },
                 [](EvalContext& ec, long) { return zero_of(ec); })));

    r.push_back(sum_case("E63",
                         "sum_{k=0}^{p-1} (-1)^k C(2k,k)^3 (2 - 3(4k+1) H_k)/64^k = (-1)^{(p-1)/2} (2 + 6pq)",
                         "harmonic Ramanujan-type analog, cube", 2, PC::Any, {3, 64, Weight::PS3, true, 0},
                         [](EvalContext& ec, long) {
                             return sgn(ec, ec.n()) * (rat(ec, 2) + rat(ec, 6) * ec.p_value() * ec.q());
                         }));

    r.push_back(sum_case("E64", "sum_{k=0}^{p-1} C(2k,k)^4 (2 - 4(4k+1) H_k)/256^k = 2 + 12pq",
                         "harmonic Ramanujan-type analog, fourth power", 2, PC::Any,
                         {4, 256, Weight::PS4, false, 0}, [](EvalContext& ec, long) {
                             return rat(ec, 2) + rat(ec, 12) * ec.p_value() * ec.q();
                         }));

    r.push_back(sum_case(
        "E65",
        "sum_{k=0}^{p-1} (-1)^k C(2k,k)^5 (2 - 5(4k+1) H_k)/1024^k = -(2 + 10pq) G4 (p=1 mod 4), 0 (p=3 mod 4)",
        "harmonic Ramanujan-type analog, fifth power", 2, PC::Any, {5, 1024, Weight::PS5, true, 0},
        by_class(
            [](EvalContext& ec, long) {
                return -(rat(ec, 2) + rat(ec, 10) * ec.p_value() * ec.q()) * ec.gamma_quarter4();
            },
            [](EvalContext& ec, long) { return zero_of(ec); })));

    r.push_back(plain_case(
        "fam_E01", "(-1)^k C(n,k) C(n+k,k) = C(2k,k)^2/16^k for 0 <= k <= n = (p-1)/2",
        "pointwise family, shifted binomial product", 2, PC::Any,
        [](EvalContext& ec, long k) {
            const long n = ec.n();
            return ec.reduce(BigRational(sign(k) * binomial(n, k) * binomial(n + k, k)));
        },
        [](EvalContext& ec, long k) {
            BigInt c = central_binomial(k);
            return ec.reduce(BigRational(c * c, pow(BigInt(16), static_cast<unsigned long>(k))));
        },
        true));

    r.push_back(plain_case(
        "fam_E02", "C(2k,k)/4^k = (-1)^k C(n,k) (1 - (p/2)(H_n - H_{n-k})) for 0 <= k <= n",
        "pointwise family, central binomial", 2, PC::Any,
        [](EvalContext& ec, long k) {
            return ec.reduce(BigRational(central_binomial(k), pow(BigInt(4), static_cast<unsigned long>(k))));
        },
        [](EvalContext& ec, long k) {
            const long n = ec.n();
            return ec.reduce(BigRational(sign(k) * binomial(n, k))) *
                   (rat(ec, 1) - rat(ec, 1, 2) * ec.p_value() * (ec.h(n, 1) - ec.h(n - k, 1)));
        },
        true));

    r.push_back(plain_case(
        "fam_E06", "H_{2k} = (H_k + H_{n-k} - H_n)/2 for 0 <= k <= n", "pointwise family, doubled index",
        1, PC::Any, [](EvalContext& ec, long k) { return ec.h(2 * k, 1); },
        [](EvalContext& ec, long k) {
            const long n = ec.n();
            return rat(ec, 1, 2) * (ec.h(k, 1) + ec.h(n - k, 1) - ec.h(n, 1));
        },
        true));

    r.push_back(plain_case(
        "fam_E11", "O_k^(2) = -H_{n-k}^(2)/4 for 0 <= k <= n", "pointwise family, odd second order", 1,
        PC::Any, [](EvalContext& ec, long k) { return ec.o(k, 2); },
        [](EvalContext& ec, long k) { return -rat(ec, 1, 4) * ec.h(ec.n() - k, 2); }, true));

    auto lemma = [](GammaLemmaResult (*f)(std::uint64_t), bool want_lhs) {
        return [f, want_lhs](EvalContext& ec, long) {
            GammaLemmaResult g = f(ec.p());
            return want_lhs ? g.lhs : g.rhs;
        };
    };
    r.push_back(plain_case(
        "CD9", "C(2m,m)^2/16^m = -G4 (p=1 mod 4), 16 (1+2p)/G4 (p=3 mod 4), m = floor(p/4)",
        "Gamma_p lemma, central binomial", 2, PC::Any, lemma(check_cd9, true), lemma(check_cd9, false)));
    r.push_back(plain_case("CD10", "c_m = (p/2) G4, m = (p-3)/4 (p=3 mod 4)", "Gamma_p lemma, c_m", 2,
                           PC::ThreeMod4, lemma(check_cd10, true), lemma(check_cd10, false)));
    r.push_back(plain_case("E05a", "Gp(1/2)^2 = (-1)^{(p+1)/2}", "Gamma_p at one half", 2, PC::Any,
                           lemma(check_e05_half, true), lemma(check_e05_half, false)));
    r.push_back(plain_case("E05b", "Gp(1/4) Gp(3/4) = (-1)^{(p+1)/4} (p=3 mod 4)", "Gamma_p at quarters",
                           2, PC::ThreeMod4, lemma(check_e05_quarter, true),
                           lemma(check_e05_quarter, false)));
    return r;
}

}  // namespace

BigRational Summand::exact_term(long k) const {
    BigInt c = central_binomial(k);
    BigRational t(pow(c, static_cast<unsigned long>(e)), pow(BigInt(base), static_cast<unsigned long>(k)));
    if (alternating && k % 2 == 1) t = -t;
    return t * weight_value(weight, k);
}

PadicValue eval_summand(const Summand& s, const PrimePowerCtx& ctx) {
    WeightState w(ctx);
    PadicValue c = padic_reduce(1, ctx);  // C(2k,k)
    PadicValue base_inv = padic_reduce(BigRational(1, s.base), ctx);
    PadicValue scale = padic_reduce(1, ctx);  // (+-1)^k / base^k
    PadicValue sum = PadicValue::zero(ctx.p(), ctx.m());
    const long last = s.last_index(ctx.p());
    for (long k = 0; k <= last; ++k) {
        if (k > 0) {
            w.advance();
            c = c * padic_reduce(BigRational(2 * (2 * k - 1), k), ctx);
            scale = scale * (s.alternating ? -base_inv : base_inv);
        }
        if (k < s.k_from) continue;
        sum += c.pow(s.e) * scale * w.value(s.weight);
    }
    return sum;
}

bool CongruenceCase::admits(std::uint64_t p) const {
    if (p < 5 || !is_prime(p)) return false;
    switch (prime_class) {
        case PrimeClass::Any: return true;
        case PrimeClass::OneMod4: return p % 4 == 1;
        case PrimeClass::ThreeMod4: return p % 4 == 3;
    }
    return false;
}

EvalContext::EvalContext(std::uint64_t p, int m) : ctx_(p, m) {}

const PadicValue& EvalContext::q() {
    if (!q_) q_ = reduce(BigRational(fermat_quotient(2, p())));
    return *q_;
}

const PadicValue& EvalContext::bernoulli_b() {
    if (!b_) b_ = reduce(bernoulli(long(p()) - 3));
    return *b_;
}

const PadicValue& EvalContext::euler_e1() {
    if (!e1_) e1_ = reduce(BigRational(euler_number(long(p()) - 3)));
    return *e1_;
}

const PadicValue& EvalContext::euler_e2() {
    if (!e2_) e2_ = reduce(BigRational(euler_number(2 * long(p()) - 4)));
    return *e2_;
}

const PadicValue& EvalContext::gamma_quarter() {
    if (!gq_) gq_ = PadicValue::unit(gamma_p(BigRational(1, 4), ctx_), ctx_);
    return *gq_;
}

const PadicValue& EvalContext::gamma_three_quarter() {
    if (!g3q_) g3q_ = PadicValue::unit(gamma_p(BigRational(3, 4), ctx_), ctx_);
    return *g3q_;
}

const PadicValue& EvalContext::gamma_half() {
    if (!gh_) gh_ = PadicValue::unit(gamma_p(BigRational(1, 2), ctx_), ctx_);
    return *gh_;
}

const PadicValue& EvalContext::gamma_quarter4() {
    if (!g4_) g4_ = gamma_quarter().pow(4);
    return *g4_;
}

void EvalContext::build_harmonics() {
    const long top = 2 * static_cast<long>(p());
    WeightState w(ctx_);
    h1_.assign(1, w.h);
    h2_.assign(1, w.h2);
    o1_.assign(1, w.o);
    o2_.assign(1, w.o2);
    for (long j = 1; j <= top; ++j) {
        w.advance();
        h1_.push_back(w.h);
        h2_.push_back(w.h2);
        o1_.push_back(w.o);
        o2_.push_back(w.o2);
    }
}

const PadicValue& EvalContext::h(long j, int r) {
    if (h1_.empty()) build_harmonics();
    return (r == 1 ? h1_ : h2_).at(static_cast<std::size_t>(j));
}

const PadicValue& EvalContext::o(long j, int r) {
    if (h1_.empty()) build_harmonics();
    return (r == 1 ? o1_ : o2_).at(static_cast<std::size_t>(j));
}

const std::vector<CongruenceCase>& congruence_registry() {
    static const std::vector<CongruenceCase> registry = build_registry();
    return registry;
}

const CongruenceCase& find_congruence(std::string_view id) {
    for (const auto& c : congruence_registry()) {
        if (c.id == id) return c;
    }
    throw UnknownCase("unknown congruence id: " + std::string(id));
}

namespace {

void require_admissible(const CongruenceCase& c, std::uint64_t p) {
    if (!c.admits(p))
        throw OutOfDomain(c.id + " is not stated for p = " + std::to_string(p));
}

}  // namespace

PadicValue eval_truncated_sum(const CongruenceCase& c, std::uint64_t p) {
    require_admissible(c, p);
    if (c.summand) return eval_summand(*c.summand, PrimePowerCtx(p, c.power));
    EvalContext ec(p, c.power);
    return c.lhs(ec, 0);
}

PadicValue eval_rhs(const CongruenceCase& c, std::uint64_t p) {
    require_admissible(c, p);
    EvalContext ec(p, c.power);
    return c.rhs(ec, 0);
}

VerificationReport verify(const CongruenceCase& c, std::uint64_t p) {
    require_admissible(c, p);
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = c.id;
    rep.p = p;
    rep.m = c.power;
    try {
        EvalContext ec(p, c.power);
        const long points = c.family ? ec.n() + 1 : 1;
        rep.points = points;
        rep.pass = true;
        for (long k = 0; k < points; ++k) {
            PadicValue lhs = c.lhs(ec, k);
            PadicValue rhs = c.rhs(ec, k);
            const bool ok = padic_compare(lhs, rhs, ec.ctx());
            if (k == 0 || (!ok && rep.pass)) {
                rep.lhs = lhs;
                rep.rhs = rhs;
            }
            if (!ok && rep.pass) {
                rep.pass = false;
                rep.failed_at = k;
            }
        }
    } catch (const std::exception& e) {
        rep.pass = false;
        rep.error = e.what();
    }
    rep.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
}

VerificationReport verify(std::string_view id, std::uint64_t p) { return verify(find_congruence(id), p); }

RangeResult verify_range(const std::vector<std::string>& case_ids, std::uint64_t p_lo,
                         std::uint64_t p_hi, unsigned workers) {
    std::vector<std::string> ids = case_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    RangeResult out;
    std::vector<std::pair<const CongruenceCase*, std::uint64_t>> jobs;
    const auto primes = primes_in(p_lo, p_hi);
    for (const auto& id : ids) {
        const CongruenceCase& c = find_congruence(id);
        for (std::uint64_t p : primes) {
            if (c.admits(p))
                jobs.emplace_back(&c, p);
            else
                out.skipped.emplace_back(c.id, p);
        }
    }

    out.reports.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
            out.reports[i] = verify(*jobs[i].first, jobs[i].second);
    };
    workers = std::max(1u, workers);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace supercong
