#include "tribsplit/verifier.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "tribsplit/error.hpp"
#include "tribsplit/quadform.hpp"
#include "tribsplit/tribonacci.hpp"

namespace tribsplit::verifier {

VerdictRecord verdict(const ModPrime& p) {
    if (!p.is_prime()) throw Error(ErrorCode::NotPrime, std::to_string(p.value()) + " is not prime");
    const u64 q = p.value();
    VerdictRecord r;
    r.p = q;
    r.trib_residue = trib::trib_mod(q - 1, q);
    r.divisible = r.trib_residue == 0;

    quadform::Representation rep = quadform::represent(p);
    r.representable = rep.exists;
    if (rep.exists) {
        r.rep_x = rep.x;
        r.rep_y = rep.y;
    }

    gfext::SplittingType st = gfext::splitting_type(p);
    r.splitting = st.shape;
    r.frobenius = st.frobenius_class;

    r.consistent = r.divisible == r.representable;
    r.exceptional = !r.consistent;
    return r;
}

std::size_t ScanReport::unramified_count() const {
    return records.size() - count(FrobeniusClass::Ramified);
}

double ScanReport::density(FrobeniusClass c) const {
    std::size_t n = unramified_count();
    return n == 0 ? 0.0 : static_cast<double>(count(c)) / static_cast<double>(n);
}

namespace {

std::vector<VerdictRecord> scan_chunk(u64 lo, u64 hi) {
    std::vector<VerdictRecord> out;
    modmath::PrimeStream primes(lo, hi);
    while (auto q = primes.next()) out.push_back(verdict(ModPrime(*q)));
    return out;
}

} // namespace

ScanReport scan(u64 lo, u64 hi, unsigned workers) {
    ScanReport report;
    report.lo = lo;
    report.hi = hi;
    if (hi <= lo) return report;

    workers = std::max(1u, workers);
    const u64 span = hi - lo;
    const u64 chunks = std::min<u64>(workers, span);
    std::vector<std::future<std::vector<VerdictRecord>>> parts;
    for (u64 i = 0; i < chunks; ++i) {
        u64 a = lo + span / chunks * i;
        u64 b = i + 1 == chunks ? hi : lo + span / chunks * (i + 1);
        parts.push_back(std::async(chunks == 1 ? std::launch::deferred : std::launch::async, scan_chunk, a, b));
    }
    for (auto& part : parts) {
        std::vector<VerdictRecord> rs = part.get();
        report.records.insert(report.records.end(), rs.begin(), rs.end());
    }

    for (const VerdictRecord& r : report.records) {
        ++report.class_counts[static_cast<std::size_t>(r.frobenius)];
        if (!r.consistent) {
            report.violations.push_back(r.p);
            if (std::find(kExpectedExceptions.begin(), kExpectedExceptions.end(), r.p) ==
                kExpectedExceptions.end()) {
                report.unexpected_violations.push_back(r.p);
            }
        }
    }
    return report;
}

ObstructionReport obstruction_check(const ScanReport& scan) {
    ObstructionReport out;
    for (const VerdictRecord& r : scan.records) {
        switch (r.frobenius) {
        case FrobeniusClass::Identity:
            ++out.identity_checked;
            if (!r.divisible) out.failures.push_back({r.p, "Identity class but p does not divide T_{p-1}"});
            break;
        case FrobeniusClass::Transposition:
            ++out.transposition_checked;
            if (r.divisible) {
                out.transposition_divisible.push_back(r.p);
                if (38 % r.p != 0) {
                    out.failures.push_back({r.p, "Transposition class with p | T_{p-1} but p does not divide 38"});
                }
            }
            break;
        case FrobeniusClass::ThreeCycle:
            ++out.three_cycle_checked;
            if (r.p > 2 && r.divisible) out.failures.push_back({r.p, "ThreeCycle class but p divides T_{p-1}"});
            break;
        case FrobeniusClass::Ramified:
            break;
        }
    }
    return out;
}

ObstructionReport obstruction_check(u64 lo, u64 hi, unsigned workers) {
    return obstruction_check(scan(lo, hi, workers));
}

} // namespace tribsplit::verifier
