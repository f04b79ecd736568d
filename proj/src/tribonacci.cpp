#include "tribsplit/tribonacci.hpp"

#include <string>

#include "tribsplit/error.hpp"

namespace tribsplit::trib {

using gfext::QuotientRing;
using gfext::Shape;

mpz_class trib_exact(u64 n) {
    if (n > kMaxExactIndex) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "exact Tribonacci index " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxExactIndex));
    }
    mpz_class a = 0, b = 1, c = 1;  // T_k, T_{k+1}, T_{k+2}
    for (u64 k = 0; k < n; ++k) {
        mpz_class next = a + b + c;
        a.swap(b);
        b.swap(c);
        c.swap(next);
    }
    return a;
}

TribMatrix TribMatrix::companion(u64 m) {
    if (m < 2 || m >= modmath::kMaxModulus) {
        throw Error(ErrorCode::InvalidModulus, "Tribonacci modulus must lie in [2, 2^63)");
    }
    return TribMatrix(m, {1, 1, 1, 1, 0, 0, 0, 1, 0});
}

TribMatrix TribMatrix::identity(u64 m) {
    TribMatrix c = companion(m);
    c.e_ = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return c;
}

TribMatrix TribMatrix::operator*(const TribMatrix& o) const {
    if (m_ != o.m_) throw Error(ErrorCode::ModulusMismatch, "matrix moduli differ");
    std::array<u64, 9> r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            modmath::u128 acc = 0;
            for (int k = 0; k < 3; ++k) acc += static_cast<modmath::u128>(e_[3 * i + k]) * o.e_[3 * k + j];
            r[3 * i + j] = static_cast<u64>(acc % m_);
        }
    }
    return TribMatrix(m_, r);
}

TribMatrix TribMatrix::pow(u64 exp) const {
    TribMatrix result = identity(m_);
    TribMatrix base = *this;
    while (exp > 0) {
        if (exp & 1) result = result * base;
        exp >>= 1;
        if (exp) base = base * base;
    }
    return result;
}

std::array<u64, 3> TribMatrix::apply(const std::array<u64, 3>& s) const {
    std::array<u64, 3> out{};
    for (int i = 0; i < 3; ++i) {
        modmath::u128 acc = 0;
        for (int k = 0; k < 3; ++k) acc += static_cast<modmath::u128>(e_[3 * i + k]) * (s[k] % m_);
        out[i] = static_cast<u64>(acc % m_);
    }
    return out;
}

u64 TribMatrix::determinant() const {
    auto minor = [&](int a, int b, int c, int d) {
        return modmath::sub_mod(modmath::mul_mod(e_[a], e_[d], m_), modmath::mul_mod(e_[b], e_[c], m_), m_);
    };
    u64 t0 = modmath::mul_mod(e_[0], minor(4, 5, 7, 8), m_);
    u64 t1 = modmath::mul_mod(e_[1], minor(3, 5, 6, 8), m_);
    u64 t2 = modmath::mul_mod(e_[2], minor(3, 4, 6, 7), m_);
    return modmath::add_mod(modmath::sub_mod(t0, t1, m_), t2, m_);
}

u64 trib_mod(u64 n, u64 m) {
    // M^n (T_2, T_1, T_0) = (T_{n+2}, T_{n+1}, T_n).
    TribMatrix mn = TribMatrix::companion(m).pow(n);
    return mn.apply({1, 1, 0})[2];
}

namespace {

void require_unramified(const ModPrime& p) {
    if (!p.is_prime()) throw Error(ErrorCode::NotPrime, std::to_string(p.value()) + " is not prime");
    if (gfext::is_ramified(p)) {
        throw Error(ErrorCode::RamifiedPrime, std::to_string(p.value()) + " ramifies in Q(alpha)");
    }
}

// Right side of delta * T_n: a^k (b - c) - b^k (a - c) + c^k (a - b).
PolyModP alternating_sum(const RootFormulaContext& ctx, const PolyModP& ak, const PolyModP& bk,
                         const PolyModP& ck) {
    const PolyModP& a = ctx.alpha;
    const PolyModP& b = ctx.beta;
    const PolyModP& c = ctx.gamma;
    return ak * (b - c) - bk * (a - c) + ck * (a - b);
}

} // namespace

RootFormulaContext build_root_context(const ModPrime& p) {
    require_unramified(p);
    gfext::SplittingType st = gfext::splitting_type(p);
    const u64 q = p.value();

    auto finish = [&](PolyModP a, PolyModP b, PolyModP c) {
        PolyModP delta = (a - b) * (a - c) * (b - c);
        return RootFormulaContext{p, st.shape, std::move(a), std::move(b), std::move(c), std::move(delta)};
    };

    switch (st.shape) {
    case Shape::ThreeDistinctRoots: {
        QuotientRing fp = QuotientRing::prime_field(p);
        return finish(fp.constant(st.roots[0]), fp.constant(st.roots[1]), fp.constant(st.roots[2]));
    }
    case Shape::OneRootPlusIrreducibleQuadratic: {
        auto g = gfext::quadratic_cofactor(p, st.roots[0]);
        QuotientRing fp2(p, g);
        PolyModP x = fp2.x();
        return finish(fp2.constant(st.roots[0]), x, gfext::poly_pow(x, q));
    }
    case Shape::Irreducible: {
        QuotientRing fp3 = QuotientRing::tribonacci(p);
        PolyModP x = fp3.x();
        PolyModP xp = gfext::poly_pow(x, q);
        return finish(x, xp, gfext::poly_pow(xp, q));
    }
    default:
        throw Error(ErrorCode::RamifiedPrime, std::to_string(q) + " ramifies in Q(alpha)");
    }
}

u64 trib_via_roots(u64 n, const RootFormulaContext& ctx) {
    require_unramified(ctx.p);
    const ModPrime& p = ctx.p;
    const u64 k = n + 1;
    PolyModP numer = alternating_sum(ctx, gfext::poly_pow(ctx.alpha, k), gfext::poly_pow(ctx.beta, k),
                                     gfext::poly_pow(ctx.gamma, k));
    // delta^2 = disc(f), so 1/delta = delta / disc(f).
    u64 inv_disc = p.inv(p.reduce(gfext::TribPoly::discriminant()));
    PolyModP value = (numer * ctx.delta).scale(inv_disc);
    if (!value.is_constant()) {
        throw Error(ErrorCode::NotInPrimeField,
                    "closed form for T_" + std::to_string(n) + " mod " + std::to_string(p.value()) +
                        " is not Frobenius-invariant");
    }
    return value[0];
}

FrobeniusCheck frobenius_reduction_check(const ModPrime& p) {
    RootFormulaContext ctx = build_root_context(p);
    const u64 q = p.value();
    PolyModP lhs = ctx.delta.scale(trib_mod(q - 1, q));
    PolyModP rhs = alternating_sum(ctx, gfext::poly_pow(ctx.alpha, q), gfext::poly_pow(ctx.beta, q),
                                   gfext::poly_pow(ctx.gamma, q));
    return FrobeniusCheck{std::move(lhs), std::move(rhs)};
}

} // namespace tribsplit::trib
