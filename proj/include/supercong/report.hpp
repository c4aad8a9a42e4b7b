#pragma once

#include <optional>
#include <string>

#include "supercong/congruences.hpp"
#include "supercong/identities.hpp"
#include "supercong/series.hpp"

namespace supercong {

enum class Format { Human, JsonLines, Csv };

/// One emitted line, independent of which engine produced it.
struct ReportRecord {
    std::string kind;  // "congruence", "identity" or "series"
    std::string case_id;
    long param = 0;  // p, n or the number of series terms
    std::string lhs;
    std::string rhs;
    std::string modulus_or_tolerance;  // p^m as an integer, "0" for exact identities, relative tolerance
    bool pass = false;
    long micros = 0;
    std::string error;
    // series only
    std::string partial, tail, gap;
    std::optional<bool> bracket;
};

/// Residue mod p^m when the value is a p-adic integer, "(v=..,u=..)" otherwise.
std::string residue_string(const PadicValue& x, std::uint64_t modulus);

ReportRecord to_record(const VerificationReport& r);
ReportRecord to_record(const IdentityResult& r, long micros);
ReportRecord to_record(const SeriesResult& r);

std::string csv_header();
/// One line without the trailing newline. `canonical` zeroes the timing.
std::string format_record(const ReportRecord& r, Format f, bool canonical = false);
/// Inverse of the json-lines form; std::invalid_argument on malformed input.
ReportRecord parse_json_record(const std::string& line);

}  // namespace supercong
