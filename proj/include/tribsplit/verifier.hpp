#pragma once

/**
 * @file verifier.hpp
 * @brief Per-prime verdicts joining T_{p-1} mod p, representability by
 *        x^2 + 11 y^2 and the splitting of f, plus range scans over them.
 *
 * A prime is consistent when p | T_{p-1} exactly when p = x^2 + 11 y^2.
 * Inconsistent primes are recorded as violations; the only ones expected
 * anywhere are 11 and 19. Nothing here special-cases those two on input.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tribsplit/gfext.hpp"
#include "tribsplit/modmath.hpp"

namespace tribsplit::verifier {

using gfext::FrobeniusClass;
using gfext::Shape;
using modmath::ModPrime;
using modmath::u64;

inline constexpr std::array<u64, 2> kExpectedExceptions{11, 19};

struct VerdictRecord {
    u64 p = 0;
    u64 trib_residue = 0;  // T_{p-1} mod p
    bool divisible = false;
    bool representable = false;
    std::optional<u64> rep_x;
    std::optional<u64> rep_y;
    Shape splitting = Shape::Irreducible;
    FrobeniusClass frobenius = FrobeniusClass::ThreeCycle;
    bool consistent = false;
    bool exceptional = false;

    friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

/// Throws Error(NotPrime) for composite p.
VerdictRecord verdict(const ModPrime& p);

struct ScanReport {
    u64 lo = 0;
    u64 hi = 0;
    std::vector<VerdictRecord> records;        // ascending p
    std::array<std::size_t, 4> class_counts{};  // indexed by FrobeniusClass
    std::vector<u64> violations;               // every inconsistent prime
    std::vector<u64> unexpected_violations;    // violations outside {11, 19}

    bool passed() const { return unexpected_violations.empty(); }
    std::size_t count(FrobeniusClass c) const { return class_counts[static_cast<std::size_t>(c)]; }
    std::size_t unramified_count() const;
    /// Share of unramified primes in class c; 0 when there are none.
    double density(FrobeniusClass c) const;
};

/// Verdicts for every prime in [lo, hi), computed on `workers` threads over
/// disjoint sub-ranges and merged in ascending order.
ScanReport scan(u64 lo, u64 hi, unsigned workers = 1);

struct ObstructionFailure {
    u64 p;
    std::string reason;
};

struct ObstructionReport {
    std::size_t identity_checked = 0;
    std::size_t transposition_checked = 0;
    std::size_t three_cycle_checked = 0;
    std::vector<u64> transposition_divisible;  // Transposition primes with p | T_{p-1}
    std::vector<ObstructionFailure> failures;

    bool passed() const { return failures.empty(); }
};

/**
 * Checks the Frobenius-class constraints behind the divisibility theorem:
 *  - Identity:      p | T_{p-1};
 *  - Transposition: p | T_{p-1} only if p | 38;
 *  - ThreeCycle:    p does not divide T_{p-1} (p > 2).
 * Ramified primes are skipped.
 */
ObstructionReport obstruction_check(const ScanReport& scan);
ObstructionReport obstruction_check(u64 lo, u64 hi, unsigned workers = 1);

} // namespace tribsplit::verifier
