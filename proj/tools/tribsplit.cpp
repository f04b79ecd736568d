/**
 * @file tribsplit.cpp
 * @brief Command-line front end: verdicts, range scans, representations,
 *        Tribonacci values and splitting types.
 *
 * Usage:
 *   tribsplit verdict <p> [--format table|csv|jsonl]
 *   tribsplit scan --from <lo> --to <hi> [--workers N] [--format ...] [--out <path>]
 *   tribsplit represent <n>
 *   tribsplit trib <n> [--mod <m>]
 *   tribsplit splitting <p>
 *
 * Exit codes: 0 success / consistent, 1 usage or I/O error, 2 exceptional
 * prime (verdict) or a violation outside {11, 19} (scan).
 * TRIB_LOG=quiet|info|debug sets the diagnostic verbosity on stderr.
 */

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "tribsplit/error.hpp"
#include "tribsplit/gfext.hpp"
#include "tribsplit/modmath.hpp"
#include "tribsplit/quadform.hpp"
#include "tribsplit/report_format.hpp"
#include "tribsplit/tribonacci.hpp"
#include "tribsplit/verifier.hpp"

namespace {

using namespace tribsplit;
using modmath::u64;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitExceptional = 2;

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("tribsplit");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    std::string level = "info";
    if (const char* env = std::getenv("TRIB_LOG")) level = env;
    if (level == "quiet") {
        spdlog::set_level(spdlog::level::err);
    } else if (level == "debug") {
        spdlog::set_level(spdlog::level::debug);
    } else {
        if (level != "info") spdlog::warn("unknown TRIB_LOG value '{}', using info", level);
        spdlog::set_level(spdlog::level::info);
    }
}

report::OutputFormat to_format(const std::string& name) {
    // Validated by CLI::IsMember before we get here.
    return *report::parse_format(name);
}

int cmd_verdict(u64 p, const std::string& format) {
    modmath::ModPrime mp = modmath::ModPrime::prime(p);
    verifier::VerdictRecord r = verifier::verdict(mp);
    report::write_records(std::cout, std::span(&r, 1), to_format(format));
    return r.exceptional ? kExitExceptional : kExitOk;
}

int cmd_scan(u64 lo, u64 hi, unsigned workers, const std::string& format, const std::string& out_path) {
    if (lo > hi) throw CLI::ValidationError("--from must not exceed --to");
    auto start = std::chrono::steady_clock::now();
    verifier::ScanReport rep = verifier::scan(lo, hi, workers);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    spdlog::info("scanned {} primes in [{}, {}) with {} worker(s) in {} ms", rep.records.size(), lo, hi, workers,
                 ms.count());
    spdlog::debug("class counts: identity={} transposition={} three_cycle={} ramified={}",
                  rep.count(gfext::FrobeniusClass::Identity), rep.count(gfext::FrobeniusClass::Transposition),
                  rep.count(gfext::FrobeniusClass::ThreeCycle), rep.count(gfext::FrobeniusClass::Ramified));

    if (out_path.empty()) {
        report::write_records(std::cout, rep.records, to_format(format));
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            spdlog::error("cannot open '{}' for writing", out_path);
            return kExitError;
        }
        report::write_records(out, rep.records, to_format(format));
        out.close();
        if (!out) {
            spdlog::error("failed writing '{}'", out_path);
            return kExitError;
        }
    }
    std::cout << report::summary_line(rep) << '\n';
    if (!rep.passed()) {
        spdlog::error("FAILED: {} violation(s) outside {{11, 19}}", rep.unexpected_violations.size());
        return kExitExceptional;
    }
    return kExitOk;
}

int cmd_represent(u64 n) {
    modmath::ModPrime mp(n);
    quadform::Representation r =
        mp.is_prime() ? quadform::represent(mp) : quadform::represent_bruteforce(n);
    if (r.exists) {
        std::cout << r.x << ' ' << r.y << '\n';
    } else {
        std::cout << "none\n";
    }
    return kExitOk;
}

int cmd_trib(u64 n, std::optional<u64> mod) {
    if (mod) {
        std::cout << trib::trib_mod(n, *mod) << '\n';
    } else {
        std::cout << trib::trib_exact(n).get_str() << '\n';
    }
    return kExitOk;
}

int cmd_splitting(u64 p) {
    modmath::ModPrime mp = modmath::ModPrime::prime(p);
    std::cout << report::describe(p, gfext::splitting_type(mp));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    setup_logging();

    CLI::App app{"Tribonacci divisibility and x^2 + 11y^2 verifier"};
    app.require_subcommand(1);

    const auto formats = CLI::IsMember({"table", "csv", "jsonl"});
    const auto below_2_63 = CLI::Range(u64{0}, modmath::kMaxModulus - 1);

    u64 prime = 0;
    std::string format = "table";
    auto* verdict = app.add_subcommand("verdict", "Verdict for a single prime");
    verdict->add_option("p", prime, "Prime to examine")->required()->check(below_2_63);
    verdict->add_option("--format", format, "Output format")->check(formats);

    u64 from = 0, to = 0;
    unsigned workers = 1;
    std::string out_path;
    auto* scan = app.add_subcommand("scan", "Verdicts for every prime in [from, to)");
    scan->add_option("--from", from, "Inclusive lower bound")->required()->check(below_2_63);
    scan->add_option("--to", to, "Exclusive upper bound")->required()->check(below_2_63);
    scan->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    scan->add_option("--format", format, "Output format")->check(formats);
    scan->add_option("--out", out_path, "Write records to this file instead of stdout");

    u64 number = 0;
    auto* represent = app.add_subcommand("represent", "Solve n = x^2 + 11y^2");
    represent->add_option("n", number, "Integer to represent")->required()->check(CLI::Range(u64{2}, modmath::kMaxModulus - 1));

    u64 index = 0;
    std::optional<u64> mod;
    auto* trib = app.add_subcommand("trib", "Tribonacci number T_n");
    trib->add_option("n", index, "Index")->required();
    trib->add_option("--mod", mod, "Reduce modulo m")->check(CLI::Range(u64{2}, modmath::kMaxModulus - 1));

    auto* splitting = app.add_subcommand("splitting", "Splitting type of x^3 - x^2 - x - 1 mod p");
    splitting->add_option("p", prime, "Prime")->required()->check(below_2_63);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*verdict) return cmd_verdict(prime, format);
        if (*scan) return cmd_scan(from, to, workers, format, out_path);
        if (*represent) return cmd_represent(number);
        if (*trib) return cmd_trib(index, mod);
        if (*splitting) return cmd_splitting(prime);
    } catch (const tribsplit::Error& e) {
        spdlog::error("{}: {}", tribsplit::to_string(e.code()), e.what());
        return kExitError;
    } catch (const CLI::ValidationError& e) {
        spdlog::error("{}", e.what());
        return kExitError;
    }
    return kExitError;
}
