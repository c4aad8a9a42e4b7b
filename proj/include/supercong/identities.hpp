#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/exact.hpp"
#include "supercong/jet.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

enum class Parity { Any, Even, Odd };

/// One finite identity lhs(n) == rhs(n), exact over the rationals.
struct IdentityCase {
    std::string id;
    std::string statement;
    std::string anchor;
    long n_min = 0;
    Parity parity = Parity::Any;
    std::function<BigRational(long)> lhs;
    std::function<BigRational(long)> rhs;

    bool in_domain(long n) const;
};

struct IdentityResult {
    std::string id;
    long n = 0;
    BigRational lhs;
    BigRational rhs;
    bool pass = false;
};

const std::vector<IdentityCase>& identity_registry();
/// UnknownCase if absent.
const IdentityCase& find_identity(std::string_view id);

/// OutOfDomain when n is outside the case's declared domain.
IdentityResult check_identity(std::string_view id, long n);

/// Shared read-only harmonic tables of order r covering at least 0..n.
std::shared_ptr<const HarmonicTable> harmonic_table(int order, long n);

// WZ pair for the H^{(2)} identity at even n = 2m.
BigRational wz_F(long m, long k);
BigRational wz_G(long m, long k);
/// F(m+1,k) - F(m,k) - G(m,k+1) + G(m,k); zero for a valid certificate.
BigRational wz_certificate_check(long m, long k);
/// S(m) = sum_{k>=1} F(m,k) H_k^{(2)}.
BigRational wz_S(long m);
/// S(m+1) - S(m) == -1/(2m+1)^2 + 1/(2m+2)^2.
bool wz_telescope_check(long m);

enum class JetSeries { DixonDc, DixonDa, WhippleDee2, WhippleDaa2 };

/// "dixon_dc", "dixon_da", "whipple_dee2", "whipple_daa2"; UnknownCase otherwise.
JetSeries parse_jet_series(std::string_view id);
std::string_view jet_series_name(JetSeries s);

struct JetCheck {
    Jet2 term;              // k-th 3F2 term with the perturbed parameter
    BigRational got;        // eps^1 coefficient, or 2 * eps^2 coefficient
    BigRational expected;   // C(2k,k)^3/64^k times the harmonic weight
    bool pass = false;
};

JetCheck term_jet(JetSeries series, long k);
bool term_jet_check(std::string_view series_id, long k);

}  // namespace supercong
