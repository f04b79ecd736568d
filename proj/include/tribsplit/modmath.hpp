#pragma once

/**
 * @file modmath.hpp
 * @brief Modular arithmetic for 64-bit moduli.
 *
 * Residues are plain std::uint64_t values in canonical form [0, p).
 * Moduli are bounded by 2^63 so that sums of two residues never wrap and
 * products fit in an unsigned __int128 scratch value. The exception is
 * is_prime(), which accepts the full 64-bit range.
 */

#include <cstdint>
#include <optional>
#include <vector>

namespace tribsplit::modmath {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMaxModulus = u64{1} << 63;

/// (a * b) mod p with a 128-bit intermediate.
constexpr u64 mul_mod(u64 a, u64 b, u64 p) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % p);
}

constexpr u64 add_mod(u64 a, u64 b, u64 p) noexcept {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

constexpr u64 sub_mod(u64 a, u64 b, u64 p) noexcept {
    return a >= b ? a - b : a + (p - b);
}

constexpr u64 neg_mod(u64 a, u64 p) noexcept { return a == 0 ? 0 : p - a; }

/// Reduces a signed integer into [0, p).
constexpr u64 reduce(std::int64_t a, u64 p) noexcept {
    if (a >= 0) return static_cast<u64>(a) % p;
    u64 r = static_cast<u64>(-(a + 1)) % p;  // -(a+1) avoids overflow at INT64_MIN
    return p - 1 - r;
}

/// base^exp mod p by square-and-multiply. pow_mod(b, 0, p) == 1 % p for every b, including 0.
constexpr u64 pow_mod(u64 base, u64 exp, u64 p) noexcept {
    u64 result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

/// Inverse of a modulo p. Throws Error(NotInvertible) when gcd(a, p) != 1.
u64 inv_mod(u64 a, u64 p);

/// Jacobi symbol (a/n) for odd n >= 1. Throws Error(InvalidModulus) for even or zero n.
int jacobi(std::int64_t a, u64 n);

/// A square root of a modulo the odd prime p, the smaller of {r, p - r};
/// std::nullopt when a is a quadratic non-residue.
std::optional<u64> sqrt_mod(u64 a, u64 p);

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(u64 n) noexcept;

/// floor(sqrt(n)).
u64 isqrt(u64 n) noexcept;

/// Whether n is a perfect square; writes the root when it is.
bool is_square(u64 n, u64* root = nullptr) noexcept;

/// A modulus 2 <= p < 2^63 together with its primality certificate.
class ModPrime {
public:
    /// Throws Error(InvalidModulus) when p is outside [2, 2^63).
    explicit ModPrime(u64 p);

    /// As the constructor, and additionally throws Error(NotPrime) for composite p.
    static ModPrime prime(u64 p);

    u64 value() const noexcept { return p_; }
    bool is_prime() const noexcept { return is_prime_; }

    u64 mul(u64 a, u64 b) const noexcept { return mul_mod(a, b, p_); }
    u64 add(u64 a, u64 b) const noexcept { return add_mod(a, b, p_); }
    u64 sub(u64 a, u64 b) const noexcept { return sub_mod(a, b, p_); }
    u64 neg(u64 a) const noexcept { return neg_mod(a, p_); }
    u64 pow(u64 a, u64 e) const noexcept { return pow_mod(a, e, p_); }
    u64 inv(u64 a) const { return inv_mod(a, p_); }
    u64 reduce(std::int64_t a) const noexcept { return modmath::reduce(a, p_); }

    friend bool operator==(const ModPrime&, const ModPrime&) = default;

private:
    u64 p_;
    bool is_prime_;
};

/**
 * Ascending stream of the primes in [lo, hi), produced by a segmented sieve
 * of Eratosthenes. Memory is O(sqrt(hi) + segment size).
 *
 *     PrimeStream s(10, 20);
 *     while (auto q = s.next()) use(*q);
 */
class PrimeStream {
public:
    static constexpr u64 kDefaultSegment = u64{1} << 18;

    PrimeStream(u64 lo, u64 hi, u64 segment_size = kDefaultSegment);

    std::optional<u64> next();

private:
    void fill_segment();

    u64 hi_;
    u64 segment_size_;
    u64 seg_lo_;       // start of the segment held in sieve_
    u64 seg_hi_;
    std::size_t pos_;  // next index to inspect in sieve_
    std::vector<std::uint32_t> base_primes_;  // sqrt(2^63) < 2^32
    std::vector<unsigned char> sieve_;
};

/// All primes in [lo, hi), ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

} // namespace tribsplit::modmath
