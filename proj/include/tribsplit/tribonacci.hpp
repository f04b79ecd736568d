#pragma once

/**
 * @file tribonacci.hpp
 * @brief Tribonacci numbers T_0 = 0, T_1 = T_2 = 1, T_{n+3} = T_{n+2} + T_{n+1} + T_n.
 *
 * Three independent routes:
 *  - trib_exact:      big-integer iteration, the reference oracle;
 *  - trib_mod:        powers of the 3x3 companion matrix over Z/mZ;
 *  - trib_via_roots:  the closed form through the three roots of
 *                     f = x^3 - x^2 - x - 1 in F_p, F_{p^2} or F_{p^3}.
 */

#include <array>
#include <cstdint>

#include <gmpxx.h>

#include "tribsplit/gfext.hpp"
#include "tribsplit/modmath.hpp"

namespace tribsplit::trib {

using gfext::PolyModP;
using modmath::ModPrime;
using modmath::u64;

inline constexpr u64 kMaxExactIndex = 1'000'000;

/// Exact T_n. Throws Error(IndexOutOfRange) for n > kMaxExactIndex.
mpz_class trib_exact(u64 n);

/// Powers of the companion matrix [[1,1,1],[1,0,0],[0,1,0]] over Z/mZ.
class TribMatrix {
public:
    /// Throws Error(InvalidModulus) unless 2 <= m < 2^63.
    static TribMatrix companion(u64 m);
    static TribMatrix identity(u64 m);

    TribMatrix operator*(const TribMatrix& o) const;
    TribMatrix pow(u64 exp) const;

    /// M * (a, b, c)^T.
    std::array<u64, 3> apply(const std::array<u64, 3>& state) const;

    u64 at(int row, int col) const { return e_[3 * row + col]; }
    u64 modulus() const { return m_; }
    u64 determinant() const;

    friend bool operator==(const TribMatrix&, const TribMatrix&) = default;

private:
    TribMatrix(u64 m, std::array<u64, 9> e) : m_(m), e_(e) {}

    u64 m_;
    std::array<u64, 9> e_;
};

/// T_n mod m in O(log n) matrix products. Throws Error(InvalidModulus) if m < 2.
u64 trib_mod(u64 n, u64 m);

/// The roots of f and their Vandermonde product, all in one ambient field.
struct RootFormulaContext {
    ModPrime p;
    gfext::Shape shape;
    PolyModP alpha;
    PolyModP beta;
    PolyModP gamma;
    PolyModP delta;  // (alpha - beta)(alpha - gamma)(beta - gamma); delta^2 = -44
};

/// Throws Error(RamifiedPrime) for primes where f has a repeated root.
RootFormulaContext build_root_context(const ModPrime& p);

/// T_n mod p from delta * T_n = a^(n+1)(b - c) - b^(n+1)(a - c) + c^(n+1)(a - b).
/// Throws Error(NotInPrimeField) if the value does not land in F_p.
u64 trib_via_roots(u64 n, const RootFormulaContext& ctx);

struct FrobeniusCheck {
    PolyModP lhs;  // delta * (T_{p-1} mod p)
    PolyModP rhs;  // a^p (b - c) - b^p (a - c) + c^p (a - b)

    bool holds() const { return lhs == rhs; }
};

/// Both sides of the Frobenius reduction of the closed form at n = p - 1.
FrobeniusCheck frobenius_reduction_check(const ModPrime& p);

} // namespace tribsplit::trib
