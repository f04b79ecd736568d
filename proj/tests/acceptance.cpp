// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [path-to-tribsplit-cli]
//
// With the CLI path given, criterion 10 additionally runs the real binary
// with --workers 1 and --workers 8 and compares the files byte for byte.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracles.hpp"
#include "tribsplit/gfext.hpp"
#include "tribsplit/modmath.hpp"
#include "tribsplit/quadform.hpp"
#include "tribsplit/report_format.hpp"
#include "tribsplit/tribonacci.hpp"
#include "tribsplit/verifier.hpp"

namespace {

using namespace tribsplit;
using modmath::ModPrime;
using modmath::u64;

constexpr u64 kScanHi = 1'000'000;
constexpr double kDensityTolerance = 0.02;

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %-44s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
}

std::string join(const std::vector<u64>& v) {
    std::string s;
    for (u64 x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "{" + s + "}";
}

std::string serialize(const verifier::ScanReport& rep, report::OutputFormat fmt) {
    std::ostringstream os;
    report::write_records(os, rep.records, fmt);
    os << report::summary_line(rep) << '\n';
    return os.str();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "exact fixtures T_10, T_18", [] {
        bool ok = trib::trib_exact(10) == 149 && trib::trib_exact(18) == 19513 && trib::trib_exact(18) == 19 * 1027 &&
                  trib::trib_mod(10, 11) == 6 && trib::trib_mod(18, 19) == 0;
        return Outcome{ok, "T_10=" + trib::trib_exact(10).get_str() + " T_18=" + trib::trib_exact(18).get_str() +
                               " T_10 mod 11=" + std::to_string(trib::trib_mod(10, 11)) +
                               " T_18 mod 19=" + std::to_string(trib::trib_mod(18, 19))};
    });

    verifier::ScanReport full;
    criterion(2, "divisibility <=> x^2+11y^2 on [2, 10^6)", [&] {
        full = verifier::scan(2, kScanHi, 1);
        bool ok = full.records.size() == 78498 && full.violations == std::vector<u64>{11, 19} && full.passed();
        for (const auto& r : full.records) {
            if (r.p != 11 && r.p != 19 && r.divisible != r.representable) ok = false;
        }
        return Outcome{ok, std::to_string(full.records.size()) + " primes, violations " + join(full.violations)};
    });

    criterion(3, "representable <=> three distinct roots, p<10^5", [] {
        std::size_t checked = 0, split = 0;
        std::vector<u64> bad;
        for (u64 q : modmath::primes_in_range(2, 100'000)) {
            if (q == 11) continue;
            ModPrime p(q);
            bool rep = quadform::represent(p).exists;
            bool three = gfext::splitting_type(p).shape == gfext::Shape::ThreeDistinctRoots;
            ++checked;
            split += three;
            if (rep != three) bad.push_back(q);
        }
        return Outcome{bad.empty(), std::to_string(checked) + " primes, " + std::to_string(split) +
                                        " split, mismatches " + join(bad)};
    });

    criterion(4, "closed form = matrix power, n<=200, 3<=p<=500", [] {
        std::size_t checked = 0;
        std::vector<u64> bad;
        bool shapes[3] = {false, false, false};
        for (u64 q : modmath::primes_in_range(3, 501)) {
            if (q == 11) continue;
            ModPrime p(q);
            trib::RootFormulaContext ctx = trib::build_root_context(p);
            shapes[static_cast<int>(ctx.shape)] = true;
            for (u64 n = 0; n <= 200; ++n) {
                ++checked;
                if (trib::trib_via_roots(n, ctx) != trib::trib_mod(n, q)) {
                    bad.push_back(q);
                    break;
                }
            }
        }
        bool ok = bad.empty() && shapes[0] && shapes[1] && shapes[2];
        return Outcome{ok, std::to_string(checked) + " (p, n) pairs, all three shapes covered=" +
                               (shapes[0] && shapes[1] && shapes[2] ? "yes" : "no") + ", mismatches " + join(bad)};
    });

    criterion(5, "Frobenius reduction lhs = rhs, 3<=p<10^4", [] {
        std::size_t checked = 0;
        std::vector<u64> bad;
        for (u64 q : modmath::primes_in_range(3, 10'000)) {
            if (q == 11) continue;
            ++checked;
            if (!trib::frobenius_reduction_check(ModPrime(q)).holds()) bad.push_back(q);
        }
        return Outcome{bad.empty(), std::to_string(checked) + " primes, failures " + join(bad)};
    });

    criterion(6, "Frobenius-class obstructions on [2, 10^6)", [&] {
        verifier::ObstructionReport o = verifier::obstruction_check(full);
        std::vector<u64> bad;
        for (const auto& f : o.failures) bad.push_back(f.p);
        bool ok = o.passed() && o.identity_checked > 0 && o.transposition_divisible == std::vector<u64>{19};
        return Outcome{ok, "identity=" + std::to_string(o.identity_checked) +
                               " transposition=" + std::to_string(o.transposition_checked) +
                               " three_cycle=" + std::to_string(o.three_cycle_checked) +
                               " transposition with p|T=" + join(o.transposition_divisible) + " failures " +
                               join(bad)};
    });

    criterion(7, "Cornacchia = brute force, p<10^5", [] {
        std::size_t checked = 0, found = 0;
        std::vector<u64> bad;
        for (u64 q : modmath::primes_in_range(2, 100'000)) {
            ++checked;
            quadform::Representation a = quadform::represent(ModPrime(q));
            found += a.exists;
            if (!(a == quadform::represent_bruteforce(q))) bad.push_back(q);
        }
        return Outcome{bad.empty(), std::to_string(checked) + " primes, " + std::to_string(found) +
                                        " representable, mismatches " + join(bad)};
    });

    criterion(8, "modular arithmetic suite", [] {
        std::vector<std::string> problems;
        for (u64 n = 0; n < 1'000'000; ++n) {
            if (modmath::is_prime(n) != oracle::is_prime_trial(n)) {
                problems.push_back("is_prime(" + std::to_string(n) + ")");
                break;
            }
        }
        std::mt19937_64 rng(2024);
        std::size_t roots = 0;
        for (u64 q : modmath::primes_in_range(3, 2000)) {
            for (u64 a = 0; a < q; ++a) {
                auto r = modmath::sqrt_mod(a, q);
                bool residue = a == 0 || modmath::jacobi(static_cast<std::int64_t>(a), q) == 1;
                if (r.has_value() != residue || (r && modmath::mul_mod(*r, *r, q) != a)) {
                    problems.push_back("sqrt_mod(" + std::to_string(a) + ", " + std::to_string(q) + ")");
                }
                roots += r.has_value();
            }
        }
        for (int i = 0; i < 2000; ++i) {
            u64 q = (rng() >> 1) | 1;
            while (!modmath::is_prime(q)) q += 2;
            u64 a = rng() % q;
            auto r = modmath::sqrt_mod(a, q);
            if (r && modmath::mul_mod(*r, *r, q) != a) problems.push_back("sqrt_mod large");
            roots += r.has_value();
        }
        std::vector<mpz_class> exact;
        exact.reserve(10'001);
        for (u64 n = 0; n <= 10'000; ++n) exact.push_back(n < 3 ? mpz_class(n == 0 ? 0 : 1) : exact[n - 1] + exact[n - 2] + exact[n - 3]);
        if (exact[10'000] != trib::trib_exact(10'000)) problems.push_back("trib_exact(10^4)");
        for (int i = 0; i < 100; ++i) {
            u64 m = 2 + rng() % ((u64{1} << 32) - 2);
            for (u64 n = 0; n <= 10'000; ++n) {
                if (trib::trib_mod(n, m) != mpz_fdiv_ui(exact[n].get_mpz_t(), m)) {
                    problems.push_back("trib_mod(" + std::to_string(n) + ", " + std::to_string(m) + ")");
                    break;
                }
            }
        }
        std::string detail = problems.empty() ? "is_prime<10^6, " + std::to_string(roots) +
                                                    " square roots, 100 moduli x 10001 indices"
                                              : "first problem: " + problems.front();
        return Outcome{problems.empty(), detail};
    });

    criterion(9, "Frobenius class densities within 0.02", [&] {
        double id = full.density(gfext::FrobeniusClass::Identity);
        double tr = full.density(gfext::FrobeniusClass::Transposition);
        double tc = full.density(gfext::FrobeniusClass::ThreeCycle);
        bool ok = std::abs(id - 1.0 / 6) <= kDensityTolerance && std::abs(tr - 1.0 / 2) <= kDensityTolerance &&
                  std::abs(tc - 1.0 / 3) <= kDensityTolerance && full.unramified_count() > 0;
        char buf[128];
        std::snprintf(buf, sizeof buf, "identity=%.4f transposition=%.4f three_cycle=%.4f", id, tr, tc);
        return Outcome{ok, buf};
    });

    criterion(10, "scan output identical for 1 and 8 workers", [&] {
        verifier::ScanReport eight = verifier::scan(2, kScanHi, 8);
        bool ok = true;
        for (auto fmt : {report::OutputFormat::Csv, report::OutputFormat::JsonLines, report::OutputFormat::Table}) {
            ok = ok && serialize(full, fmt) == serialize(eight, fmt);
        }
        std::string detail = "library serialisation identical=" + std::string(ok ? "yes" : "no");
        if (!cli.empty()) {
            auto dir = std::filesystem::temp_directory_path() / ("tribsplit_accept_" + std::to_string(::getpid()));
            std::filesystem::create_directories(dir);
            auto f1 = dir / "w1.csv", f8 = dir / "w8.csv";
            std::string base = "TRIB_LOG=quiet \"" + cli + "\" scan --from 2 --to " + std::to_string(kScanHi) +
                               " --format csv";
            int s1 = std::system((base + " --workers 1 --out \"" + f1.string() + "\" > /dev/null").c_str());
            int s8 = std::system((base + " --workers 8 --out \"" + f8.string() + "\" > /dev/null").c_str());
            std::string a = slurp(f1), b = slurp(f8);
            bool same = s1 == 0 && s8 == 0 && !a.empty() && a == b;
            ok = ok && same;
            detail += ", CLI files identical=" + std::string(same ? "yes" : "no") + " (" + std::to_string(a.size()) +
                      " bytes)";
            std::filesystem::remove_all(dir);
        }
        return Outcome{ok, detail};
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
