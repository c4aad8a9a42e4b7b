#include "supercong/cli.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "supercong/congruences.hpp"
#include "supercong/identities.hpp"
#include "supercong/report.hpp"
#include "supercong/sequences.hpp"
#include "supercong/series.hpp"

namespace supercong {

namespace {

struct RunConfig {
    std::string command;
    std::string kind = "all";
    std::string cases = "*";
    std::string primes;
    std::string n_range;
    long terms = 100000;
    long bits = 256;
    std::string format = "human";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    bool fail_fast = false;
    bool canonical = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& f) {
    if (f == "json-lines") return Format::JsonLines;
    if (f == "csv") return Format::Csv;
    return Format::Human;
}

std::vector<std::string> split_globs(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    if (out.empty()) throw UsageError("empty --cases selection");
    return out;
}

bool glob_match(const std::string& glob, const std::string& id) {
    return fnmatch(glob.c_str(), id.c_str(), 0) == 0;
}

// Every glob must select at least one id; returns the selected ids in order.
std::vector<std::string> select_ids(const std::vector<std::string>& globs,
                                    const std::vector<std::string>& ids) {
    for (const auto& g : globs) {
        bool hit = false;
        for (const auto& id : ids) hit = hit || glob_match(g, id);
        if (!hit) throw UsageError("no case matches '" + g + "'");
    }
    std::vector<std::string> out;
    for (const auto& id : ids) {
        if (matches_any(globs, id)) out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

using Job = std::function<ReportRecord()>;

ReportRecord failed_record(std::string kind, std::string id, long param, const std::string& what) {
    ReportRecord r;
    r.kind = std::move(kind);
    r.case_id = std::move(id);
    r.param = param;
    r.error = what;
    return r;
}

struct Totals {
    long reports = 0;
    long failed = 0;
};

// Runs jobs on a pool and emits their records in job order as soon as each
// prefix is complete.
Totals run_jobs(const std::vector<Job>& jobs, const RunConfig& cfg, std::ostream& out) {
    const Format fmt = parse_format(cfg.format);
    std::vector<std::optional<ReportRecord>> results(jobs.size());
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto work = [&] {
        for (;;) {
            if (stop) return;
            const std::size_t i = next++;
            if (i >= jobs.size()) return;
            ReportRecord r = jobs[i]();
            std::lock_guard lock(mutex);
            if (!r.pass && cfg.fail_fast) stop = true;
            results[i] = std::move(r);
            ready.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::max(1u, cfg.workers); ++w) pool.emplace_back(work);

    Totals t;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        ReportRecord r;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return results[i].has_value(); });
            r = std::move(*results[i]);
        }
        out << format_record(r, fmt, cfg.canonical) << '\n';
        ++t.reports;
        if (!r.pass) {
            ++t.failed;
            if (cfg.fail_fast) break;
        }
    }
    out.flush();
    stop = true;
    for (auto& th : pool) th.join();
    return t;
}

void print_header(const RunConfig& cfg, std::ostream& out) {
    if (parse_format(cfg.format) == Format::Csv) out << csv_header() << '\n';
}

void print_summary(const RunConfig& cfg, const Totals& t, long skipped, std::ostream& out) {
    if (parse_format(cfg.format) != Format::Human) return;
    out << t.reports << " reports, " << t.failed << " failed";
    if (skipped > 0) out << ", " << skipped << " inadmissible (case, prime) pairs skipped";
    out << '\n';
}

std::string power_text(int m) { return m == 1 ? "p" : "p^" + std::to_string(m); }

std::string class_text(PrimeClass c) {
    switch (c) {
        case PrimeClass::Any: return "p >= 5";
        case PrimeClass::OneMod4: return "p = 1 mod 4";
        case PrimeClass::ThreeMod4: return "p = 3 mod 4";
    }
    return "";
}

std::string parity_text(const IdentityCase& c) {
    std::string s = "n >= " + std::to_string(c.n_min);
    if (c.parity == Parity::Even) s += ", n even";
    if (c.parity == Parity::Odd) s += ", n odd";
    return s;
}

int cmd_list(const RunConfig& cfg, std::ostream& out) {
    const Format fmt = parse_format(cfg.format);
    auto emit = [&](const std::string& kind, const std::string& id, const std::string& statement,
                    const std::string& anchor, const std::string& modulus, const std::string& domain) {
        if (fmt == Format::JsonLines) {
            nlohmann::ordered_json j{{"kind", kind},     {"case", id},         {"statement", statement},
                                     {"anchor", anchor}, {"modulus", modulus}, {"domain", domain}};
            out << j.dump() << '\n';
        } else if (fmt == Format::Csv) {
            auto q = [](const std::string& s) {
                std::string r = "\"";
                for (char c : s) r += (c == '"') ? std::string("\"\"") : std::string(1, c);
                return r + "\"";
            };
            out << kind << ',' << id << ',' << q(statement) << ',' << q(anchor) << ',' << q(modulus) << ','
                << q(domain) << '\n';
        } else {
            out << kind << "  " << id << "  [" << modulus << "; " << domain << "]  " << statement << "  ("
                << anchor << ")\n";
        }
    };
    if (fmt == Format::Csv) out << "kind,case,statement,anchor,modulus,domain\n";
    const bool all = cfg.kind == "all";
    if (all || cfg.kind == "congruence") {
        for (const auto& c : congruence_registry())
            emit("congruence", c.id, c.statement, c.anchor, "mod " + power_text(c.power),
                 class_text(c.prime_class) + (c.family ? ", each 0 <= k <= (p-1)/2" : ""));
    }
    if (all || cfg.kind == "identity") {
        for (const auto& c : identity_registry())
            emit("identity", c.id, c.statement, c.anchor, "exact", parity_text(c));
    }
    if (all || cfg.kind == "series") {
        for (const auto& c : series_registry()) {
            std::ostringstream tol;
            tol << "relative " << c.tolerance;
            emit("series", c.id, c.statement, c.anchor, tol.str(), "k >= 0");
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto globs = split_globs(cfg.cases);
    bool run_congruences = !cfg.primes.empty() || cfg.n_range.empty();
    bool run_identities = !cfg.n_range.empty() || cfg.primes.empty();
    auto [p_lo, p_hi] = parse_range(cfg.primes.empty() ? "5..199" : cfg.primes);
    auto [n_lo, n_hi] = parse_range(cfg.n_range.empty() ? "0..100" : cfg.n_range);

    std::vector<std::string> cong_ids, ident_ids;
    for (const auto& c : congruence_registry()) cong_ids.push_back(c.id);
    for (const auto& c : identity_registry()) ident_ids.push_back(c.id);
    std::vector<std::string> pool;
    if (run_congruences) pool.insert(pool.end(), cong_ids.begin(), cong_ids.end());
    if (run_identities) pool.insert(pool.end(), ident_ids.begin(), ident_ids.end());
    const auto selected = select_ids(globs, pool);

    std::vector<Job> jobs;
    long skipped = 0;
    if (run_congruences) {
        const auto primes = primes_in(static_cast<std::uint64_t>(p_lo), static_cast<std::uint64_t>(p_hi));
        for (const auto& id : selected) {
            if (std::find(cong_ids.begin(), cong_ids.end(), id) == cong_ids.end()) continue;
            const CongruenceCase& c = find_congruence(id);
            for (std::uint64_t p : primes) {
                if (!c.admits(p)) {
                    ++skipped;
                    continue;
                }
                jobs.push_back([&c, p] {
                    try {
                        return to_record(verify(c, p));
                    } catch (const std::exception& e) {
                        return failed_record("congruence", c.id, static_cast<long>(p), e.what());
                    }
                });
            }
        }
    }
    if (run_identities) {
        for (const auto& id : selected) {
            if (std::find(ident_ids.begin(), ident_ids.end(), id) == ident_ids.end()) continue;
            const IdentityCase& c = find_identity(id);
            for (long n = n_lo; n <= n_hi; ++n) {
                if (!c.in_domain(n)) continue;
                jobs.push_back([&c, n] {
                    const auto start = std::chrono::steady_clock::now();
                    try {
                        IdentityResult r = check_identity(c.id, n);
                        const long us = std::chrono::duration_cast<std::chrono::microseconds>(
                                            std::chrono::steady_clock::now() - start)
                                            .count();
                        return to_record(r, us);
                    } catch (const std::exception& e) {
                        return failed_record("identity", c.id, n, e.what());
                    }
                });
            }
        }
    }

    print_header(cfg, out);
    Totals t = run_jobs(jobs, cfg, out);
    print_summary(cfg, t, skipped, out);
    return t.failed == 0 ? 0 : 1;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
    const auto globs = split_globs(cfg.cases);
    if (cfg.terms < 10) throw UsageError("--terms must be at least 10");
    if (cfg.bits < 64) throw UsageError("--bits must be at least 64");
    std::vector<std::string> ids;
    for (const auto& c : series_registry()) ids.push_back(c.id);
    const auto selected = select_ids(globs, ids);

    std::vector<Job> jobs;
    for (const auto& id : selected) {
        jobs.push_back([id, &cfg] {
            try {
                return to_record(evaluate_series(id, cfg.terms, cfg.bits));
            } catch (const std::exception& e) {
                return failed_record("series", id, cfg.terms, e.what());
            }
        });
    }
    print_header(cfg, out);
    Totals t = run_jobs(jobs, cfg, out);
    print_summary(cfg, t, 0, out);
    return t.failed == 0 ? 0 : 1;
}

}  // namespace

std::pair<long, long> parse_range(std::string_view text) {
    auto to_long = [&](std::string_view s) {
        if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("bad range '" + std::string(text) + "'");
        return std::stol(std::string(s));
    };
    const auto dots = text.find("..");
    long lo, hi;
    if (dots == std::string_view::npos) {
        lo = hi = to_long(text);
    } else {
        lo = to_long(text.substr(0, dots));
        hi = to_long(text.substr(dots + 2));
    }
    if (lo > hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return {lo, hi};
}

bool matches_any(const std::vector<std::string>& globs, const std::string& id) {
    for (const auto& g : globs) {
        if (glob_match(g, id)) return true;
    }
    return false;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact verification of supercongruences, finite identities and series evaluations",
                 "supercong"};
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"human", "json-lines", "csv"};

    auto* list = app.add_subcommand("list", "Print the congruence, identity and series registries");
    list->add_option("--kind", cfg.kind, "congruence, identity, series or all")
        ->check(CLI::IsMember({"congruence", "identity", "series", "all"}));
    list->add_option("--format", cfg.format, "human, json-lines or csv")->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Check congruences over a prime range and identities over an n range");
    verify->add_option("--cases", cfg.cases, "Comma-separated globs over case ids");
    verify->add_option("--primes", cfg.primes, "Prime range lo..hi (default 5..199)");
    verify->add_option("--n", cfg.n_range, "Identity parameter range lo..hi (default 0..100)");
    verify->add_option("--format", cfg.format, "human, json-lines or csv")->check(CLI::IsMember(formats));
    verify->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    verify->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first failing report");
    verify->add_flag("--canonical", cfg.canonical, "Report 0 for all timings");

    auto* series = app.add_subcommand("series", "Evaluate infinite series against their closed forms");
    series->add_option("--cases", cfg.cases, "Comma-separated globs over series ids");
    series->add_option("--terms", cfg.terms, "Exact terms summed before the tail (default 100000)");
    series->add_option("--bits", cfg.bits, "Working precision in bits (default 256)");
    series->add_option("--format", cfg.format, "human, json-lines or csv")->check(CLI::IsMember(formats));
    series->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    series->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first failing report");
    series->add_flag("--canonical", cfg.canonical, "Report 0 for all timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_list(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        return cmd_series(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace supercong
