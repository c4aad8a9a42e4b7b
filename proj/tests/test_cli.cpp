#include <sstream>
#include <vector>

#include "doctest.h"
#include "supercong/cli.hpp"
#include "supercong/report.hpp"

using namespace supercong;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<const char*> args) {
    args.insert(args.begin(), "supercong");
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("range and glob parsing") {
    CHECK(parse_range("5..50") == std::pair<long, long>{5, 50});
    CHECK(parse_range("7") == std::pair<long, long>{7, 7});
    CHECK_THROWS(parse_range("50..5"));
    CHECK_THROWS(parse_range("a..b"));
    CHECK_THROWS(parse_range("-3..4"));
    CHECK(matches_any({"CD*"}, "CD10"));
    CHECK(matches_any({"E2?", "C321"}, "C321"));
    CHECK_FALSE(matches_any({"E2?"}, "E200"));
}

TEST_CASE("list") {
    Run c = run({"list", "--kind", "congruence"});
    CHECK(c.code == 0);
    auto cl = lines(c.out);
    CHECK(cl.size() >= 25);
    for (const char* id : {"  C321  ", "  E10  ", "  VH_A2  "}) CHECK(c.out.find(id) != std::string::npos);

    Run i = run({"list", "--kind", "identity", "--format", "json-lines"});
    for (const char* id : {"\"CD1\"", "\"CD2\"", "\"CD4a\"", "\"CD5\"", "\"CD6\"", "\"CD7\"", "\"I_PS03_5\""})
        CHECK(i.out.find(id) != std::string::npos);

    Run s = run({"list", "--kind", "series"});
    CHECK(lines(s.out).size() == 10);
}

TEST_CASE("verify a congruence over a prime range") {
    Run r = run({"verify", "--cases", "C321", "--primes", "5..50", "--workers", "2"});
    CHECK(r.code == 0);
    auto l = lines(r.out);
    REQUIRE(l.size() == 14);  // 13 primes plus the summary
    CHECK(l[0].find("PASS C321 p=5  16 vs 16 mod 25") == 0);
    CHECK(l.back() == "13 reports, 0 failed");
}

TEST_CASE("json-lines records round-trip") {
    Run r = run({"verify", "--cases", "E10", "--primes", "5..5", "--format", "json-lines"});
    CHECK(r.code == 0);
    auto l = lines(r.out);
    REQUIRE(l.size() == 1);
    ReportRecord rec = parse_json_record(l[0]);
    CHECK(rec.kind == "congruence");
    CHECK(rec.case_id == "E10");
    CHECK(rec.param == 5);
    CHECK(rec.lhs == "2");
    CHECK(rec.rhs == "2");
    CHECK(rec.modulus_or_tolerance == "5");
    CHECK(rec.pass);

    Run mixed = run({"verify", "--cases", "CD*,E2?", "--primes", "5..40", "--n", "0..12", "--format",
                     "json-lines", "--canonical"});
    CHECK(mixed.code == 0);
    for (const auto& line : lines(mixed.out)) {
        ReportRecord x = parse_json_record(line);
        CHECK(format_record(x, Format::JsonLines, true) == line);
    }
    CHECK_THROWS_AS(parse_json_record("{\"kind\": 3}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json_record("not json"), std::invalid_argument);
}

TEST_CASE("identity selection respects parity domains") {
    Run r = run({"verify", "--cases", "CD*", "--n", "0..40", "--format", "csv"});
    CHECK(r.code == 0);
    auto l = lines(r.out);
    CHECK(l[0] == csv_header());
    long cd1 = 0, cd5 = 0;
    for (const auto& line : l) {
        if (line.rfind("identity,CD1,", 0) == 0) {
            ++cd1;
            long n = std::stol(line.substr(13));
            CHECK(n % 2 == 1);
        }
        if (line.rfind("identity,CD5,", 0) == 0) ++cd5;
    }
    CHECK(cd1 == 20);
    CHECK(cd5 == 21);
}

TEST_CASE("series command") {
    Run r = run({"series", "--cases", "E61", "--terms", "100000", "--bits", "256"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS E61 N=100000") == 0);
    Run b = run({"series", "--cases", "E20", "--terms", "100", "--format", "json-lines"});
    CHECK(b.code == 0);
    ReportRecord rec = parse_json_record(lines(b.out).at(0));
    REQUIRE(rec.bracket.has_value());
    CHECK(*rec.bracket);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"series", "--cases", "E99"}).code == 2);
    CHECK(run({"verify", "--cases", "nothing*", "--primes", "5..7"}).code == 2);
    CHECK(run({"verify", "--primes", "9..3"}).code == 2);
    CHECK(run({"verify", "--format", "xml"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"series", "--terms", "3"}).code == 2);
    CHECK(run({"list", "--help"}).code == 0);
}

TEST_CASE("failing reports are flagged in every format") {
    VerificationReport v;
    v.id = "C321";
    v.p = 7;
    v.m = 2;
    v.lhs = PadicValue::from_parts(7, 2, 0, 3, 2);
    v.rhs = PadicValue::from_parts(7, 2, 0, 4, 2);
    v.pass = false;
    v.micros = 12;
    ReportRecord r = to_record(v);
    CHECK(r.lhs == "3");
    CHECK(r.rhs == "4");
    CHECK(r.modulus_or_tolerance == "49");
    CHECK(format_record(r, Format::Human).rfind("FAIL C321 p=7  3 vs 4 mod 49", 0) == 0);
    CHECK(format_record(r, Format::Csv, true) == "congruence,C321,7,3,4,49,false,0,,,,,");
    ReportRecord back = parse_json_record(format_record(r, Format::JsonLines));
    CHECK_FALSE(back.pass);
    CHECK(back.micros == 12);
}

TEST_CASE("series values are printed only to the digits the precision supports") {
    Run r = run({"series", "--cases", "E20", "--terms", "100", "--bits", "64", "--format", "json-lines"});
    ReportRecord rec = parse_json_record(lines(r.out).at(0));
    // 64 bits carry about 19 decimal digits; 17 are printed.
    CHECK(rec.rhs == "1.3932039296856769e+00");
}
