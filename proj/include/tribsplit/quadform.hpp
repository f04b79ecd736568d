#pragma once

// Representations of primes by the form x^2 + 11 y^2.

#include <cstdint>

#include "tribsplit/modmath.hpp"

namespace tribsplit::quadform {

using modmath::ModPrime;
using modmath::u64;

inline constexpr u64 kFormD = 11;

struct Representation {
    u64 p = 0;
    u64 x = 0;  // x, y >= 0; meaningful only when exists
    u64 y = 0;
    bool exists = false;

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// Cornacchia's algorithm for p = x^2 + 11 y^2. Throws Error(NotPrime) for composite p.
Representation represent(const ModPrime& p);

/// Exhaustive scan over y, smallest y first. Valid for any p >= 1.
Representation represent_bruteforce(u64 p);

} // namespace tribsplit::quadform
