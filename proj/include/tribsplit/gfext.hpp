#pragma once

/**
 * @file gfext.hpp
 * @brief Arithmetic in F_p[x]/(m) for small monic m, and the splitting
 *        behaviour of the Tribonacci cubic f = x^3 - x^2 - x - 1 mod p.
 *
 * The quotient ring F_p[x]/(f) carries a root of f as the class of x.
 * When f has a single root mod p, the quadratic cofactor g gives the
 * ring F_p[x]/(g) = F_{p^2} holding the two conjugate roots; both rings are
 * modelled by QuotientRing with a monic modulus of degree 1, 2 or 3.
 */

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tribsplit/modmath.hpp"

namespace tribsplit::gfext {

using modmath::ModPrime;
using modmath::u64;

/// The defining cubic f = x^3 - x^2 - x - 1 (coefficients from the constant term up).
struct TribPoly {
    static constexpr std::array<std::int64_t, 4> coeffs{-1, -1, -1, 1};

    /// Generic cubic discriminant 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2.
    static constexpr std::int64_t discriminant() {
        const std::int64_t d = coeffs[0], c = coeffs[1], b = coeffs[2], a = coeffs[3];
        return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
               27 * a * a * d * d;
    }

    /// f(r) mod p.
    static u64 eval(u64 r, const ModPrime& p);
};

static_assert(TribPoly::discriminant() == -44);

/// True when p divides the discriminant of f, i.e. f has a repeated factor mod p.
bool is_ramified(const ModPrime& p);

class PolyModP;

/// F_p[x]/(m) for a monic m = x^d + low[d-1] x^(d-1) + ... + low[0], 1 <= d <= 3.
class QuotientRing {
public:
    QuotientRing(const ModPrime& p, std::span<const u64> monic_low);

    /// F_p[x]/(f) for the Tribonacci cubic.
    static QuotientRing tribonacci(const ModPrime& p);
    /// F_p itself, presented as F_p[x]/(x).
    static QuotientRing prime_field(const ModPrime& p);

    const ModPrime& modulus() const noexcept { return p_; }
    int degree() const noexcept { return degree_; }
    const std::array<u64, 3>& low() const noexcept { return low_; }

    PolyModP zero() const;
    PolyModP one() const;
    PolyModP x() const;
    PolyModP constant(u64 c) const;
    PolyModP element(std::array<u64, 3> coeffs) const;

    friend bool operator==(const QuotientRing&, const QuotientRing&) = default;

private:
    ModPrime p_;
    int degree_;
    std::array<u64, 3> low_{};
};

/// c0 + c1 x + c2 x^2 in a QuotientRing, always fully reduced.
class PolyModP {
public:
    const QuotientRing& ring() const noexcept { return ring_; }
    const std::array<u64, 3>& coeffs() const noexcept { return c_; }
    u64 operator[](std::size_t i) const noexcept { return c_[i]; }

    bool is_constant() const noexcept { return c_[1] == 0 && c_[2] == 0; }

    // Binary operations throw Error(ModulusMismatch) on operands from different rings.
    PolyModP operator+(const PolyModP& o) const;
    PolyModP operator-(const PolyModP& o) const;
    PolyModP operator*(const PolyModP& o) const;
    PolyModP operator-() const;
    PolyModP scale(u64 k) const;

    friend bool operator==(const PolyModP&, const PolyModP&) = default;

private:
    friend class QuotientRing;
    PolyModP(const QuotientRing& ring, std::array<u64, 3> c) : ring_(ring), c_(c) {}

    QuotientRing ring_;
    std::array<u64, 3> c_;
};

PolyModP poly_mul(const PolyModP& a, const PolyModP& b);

/// a^exp by square-and-multiply; poly_pow(a, 0) is the ring's one.
PolyModP poly_pow(const PolyModP& a, u64 exp);

enum class Shape {
    ThreeDistinctRoots,
    OneRootPlusIrreducibleQuadratic,
    Irreducible,
    RamifiedTriple,
    RamifiedDouble,
};

enum class FrobeniusClass { Identity, Transposition, ThreeCycle, Ramified };

std::string_view to_string(Shape s);
std::string_view to_string(FrobeniusClass c);

struct SplittingType {
    Shape shape;
    std::vector<u64> roots;  // distinct roots in F_p, ascending
    FrobeniusClass frobenius_class;
};

/// Full factorisation shape of f mod the prime p. Ramified primes get their own shapes.
SplittingType splitting_type(const ModPrime& p);

/// Distinct roots of f in F_p, ascending.
std::vector<u64> distinct_roots(const ModPrime& p);

/// Orbit length (1, 2 or 3) of x under a -> a^p in F_p[x]/(f).
/// Throws Error(RamifiedPrime) when f has a repeated factor mod p.
int frobenius_orbit(const ModPrime& p);

/// Monic quadratic cofactor (c0, c1) of f / (x - root) mod p: x^2 + c1 x + c0.
std::array<u64, 2> quadratic_cofactor(const ModPrime& p, u64 root);

} // namespace tribsplit::gfext
