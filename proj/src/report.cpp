#include "supercong/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace supercong {

namespace {

constexpr int kSeriesDigits = 30;

// Decimal digits a value carries at this precision, keeping two in reserve.
int printable_digits(long bits) {
    return std::max(1, std::min(kSeriesDigits, static_cast<int>(bits * 0.30103) - 2));
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string residue_string(const PadicValue& x, std::uint64_t modulus) {
    if (x.is_zero()) return "0";
    if (x.v() < 0) return x.to_string();
    return std::to_string(x.residue() % modulus);
}

ReportRecord to_record(const VerificationReport& r) {
    ReportRecord out;
    out.kind = "congruence";
    out.case_id = r.id;
    out.param = static_cast<long>(r.p);
    std::uint64_t modulus = 1;
    for (int i = 0; i < r.m; ++i) modulus *= r.p;
    out.modulus_or_tolerance = std::to_string(modulus);
    if (r.error.empty()) {
        out.lhs = residue_string(r.lhs, modulus);
        out.rhs = residue_string(r.rhs, modulus);
    }
    out.pass = r.pass;
    out.micros = r.micros;
    out.error = r.error;
    if (r.failed_at >= 0 && out.error.empty())
        out.error = "family member k = " + std::to_string(r.failed_at) + " differs";
    return out;
}

ReportRecord to_record(const IdentityResult& r, long micros) {
    ReportRecord out;
    out.kind = "identity";
    out.case_id = r.id;
    out.param = r.n;
    out.lhs = r.lhs.to_string();
    out.rhs = r.rhs.to_string();
    out.modulus_or_tolerance = "0";
    out.pass = r.pass;
    out.micros = micros;
    return out;
}

ReportRecord to_record(const SeriesResult& r) {
    ReportRecord out;
    out.kind = "series";
    out.case_id = r.id;
    out.param = r.terms;
    const int digits = printable_digits(r.bits);
    out.lhs = (r.partial + r.tail).to_string(digits);
    out.rhs = r.closed.to_string(digits);
    std::ostringstream tol;
    tol << r.tolerance;
    out.modulus_or_tolerance = tol.str();
    out.pass = r.pass;
    out.micros = r.micros;
    out.partial = r.partial.to_string(digits);
    out.tail = r.tail.to_string(digits);
    out.gap = r.gap.to_string(6);
    out.bracket = r.bracket;
    return out;
}

std::string csv_header() {
    return "kind,case,param,lhs,rhs,modulus_or_tolerance,pass,micros,partial,tail,gap,bracket,error";
}

std::string format_record(const ReportRecord& r, Format f, bool canonical) {
    const long micros = canonical ? 0 : r.micros;
    switch (f) {
        case Format::JsonLines: {
            nlohmann::ordered_json j;
            j["kind"] = r.kind;
            j["case"] = r.case_id;
            j["param"] = r.param;
            j["lhs"] = r.lhs;
            j["rhs"] = r.rhs;
            j["modulus_or_tolerance"] = r.modulus_or_tolerance;
            j["pass"] = r.pass;
            j["micros"] = micros;
            if (r.kind == "series") {
                j["partial"] = r.partial;
                j["tail"] = r.tail;
                j["gap"] = r.gap;
                if (r.bracket) j["bracket"] = *r.bracket;
            }
            if (!r.error.empty()) j["error"] = r.error;
            return j.dump();
        }
        case Format::Csv: {
            std::ostringstream os;
            os << csv_field(r.kind) << ',' << csv_field(r.case_id) << ',' << r.param << ','
               << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << csv_field(r.modulus_or_tolerance)
               << ',' << (r.pass ? "true" : "false") << ',' << micros << ',' << csv_field(r.partial) << ','
               << csv_field(r.tail) << ',' << csv_field(r.gap) << ','
               << (r.bracket ? (*r.bracket ? "true" : "false") : "") << ',' << csv_field(r.error);
            return os.str();
        }
        case Format::Human: {
            std::ostringstream os;
            os << (r.pass ? "PASS " : "FAIL ") << r.case_id;
            if (r.kind == "congruence") {
                os << " p=" << r.param << "  " << r.lhs << " vs " << r.rhs << " mod " << r.modulus_or_tolerance;
            } else if (r.kind == "identity") {
                os << " n=" << r.param << "  " << r.lhs;
                if (r.lhs != r.rhs) os << " vs " << r.rhs;
            } else {
                os << " N=" << r.param << "  value " << r.lhs << " closed " << r.rhs << " gap " << r.gap
                   << " tol " << r.modulus_or_tolerance;
                if (r.bracket) os << " bracket " << (*r.bracket ? "ok" : "broken");
            }
            if (!r.error.empty()) os << "  [" << r.error << "]";
            os << "  (" << micros << " us)";
            return os.str();
        }
    }
    return {};
}

ReportRecord parse_json_record(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(e.what());
    }
    try {
        ReportRecord r;
        r.kind = j.at("kind").get<std::string>();
        r.case_id = j.at("case").get<std::string>();
        r.param = j.at("param").get<long>();
        r.lhs = j.at("lhs").get<std::string>();
        r.rhs = j.at("rhs").get<std::string>();
        r.modulus_or_tolerance = j.at("modulus_or_tolerance").get<std::string>();
        r.pass = j.at("pass").get<bool>();
        r.micros = j.at("micros").get<long>();
        r.partial = j.value("partial", "");
        r.tail = j.value("tail", "");
        r.gap = j.value("gap", "");
        if (j.contains("bracket")) r.bracket = j["bracket"].get<bool>();
        r.error = j.value("error", "");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(e.what());
    }
}

}  // namespace supercong
