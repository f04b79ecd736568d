#include "tribsplit/modmath.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "tribsplit/error.hpp"

namespace tribsplit {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::RamifiedPrime: return "RamifiedPrime";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotInPrimeField: return "NotInPrimeField";
    }
    return "Unknown";
}

} // namespace tribsplit

namespace tribsplit::modmath {

u64 inv_mod(u64 a, u64 p) {
    a %= p;
    // Extended Euclid on signed 128-bit values; |coefficients| stay below p.
    __int128 old_r = a, r = p;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) {
        throw Error(ErrorCode::NotInvertible,
                    std::to_string(a) + " is not invertible modulo " + std::to_string(p));
    }
    if (old_s < 0) old_s += p;
    return static_cast<u64>(old_s % p);
}

int jacobi(std::int64_t a_signed, u64 n) {
    if (n == 0 || (n & 1) == 0) {
        throw Error(ErrorCode::InvalidModulus,
                    "Jacobi symbol needs an odd positive modulus, got " + std::to_string(n));
    }
    u64 a = reduce(a_signed, n);
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u64 r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (jacobi(static_cast<std::int64_t>(a), p) != 1) return std::nullopt;

    u64 r;
    if ((p & 3) == 3) {
        r = pow_mod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
        u64 q = p - 1;
        unsigned s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (jacobi(static_cast<std::int64_t>(z), p) != -1) ++z;

        u64 c = pow_mod(z, q, p);
        u64 t = pow_mod(a, q, p);
        r = pow_mod(a, (q + 1) / 2, p);
        unsigned m = s;
        while (t != 1) {
            unsigned i = 0;
            u64 t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (unsigned j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
            r = mul_mod(r, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
    }
    return std::min(r, p - r);
}

namespace {

bool miller_rabin_witness(u64 n, u64 d, unsigned s, u64 a) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(u64 n) noexcept {
    // The first twelve primes as bases are exact below 3.3 * 10^24.
    static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (u64 b : kBases) {
        if (n % b == 0) return n == b;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kBases) {
        if (miller_rabin_witness(n, d, s, a)) return false;
    }
    return true;
}

u64 isqrt(u64 n) noexcept {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(u64 n, u64* root) noexcept {
    u64 r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

ModPrime::ModPrime(u64 p) : p_(p), is_prime_(false) {
    if (p < 2 || p >= kMaxModulus) {
        throw Error(ErrorCode::InvalidModulus,
                    "modulus must lie in [2, 2^63), got " + std::to_string(p));
    }
    is_prime_ = modmath::is_prime(p);
}

ModPrime ModPrime::prime(u64 p) {
    ModPrime m(p);
    if (!m.is_prime()) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
    return m;
}

} // namespace tribsplit::modmath
