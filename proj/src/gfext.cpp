#include "tribsplit/gfext.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "tribsplit/error.hpp"

namespace tribsplit::gfext {

namespace {

// Dense polynomial over F_p, lowest coefficient first, no trailing zeros.
using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly make_monic(Poly a, const ModPrime& p) {
    trim(a);
    if (a.empty()) return a;
    u64 inv = p.inv(a.back());
    for (u64& c : a) c = p.mul(c, inv);
    return a;
}

Poly poly_rem(Poly a, const Poly& b, const ModPrime& p) {
    trim(a);
    u64 lead_inv = p.inv(b.back());
    while (deg(a) >= deg(b)) {
        u64 q = p.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = p.sub(a[shift + i], p.mul(q, b[i]));
        trim(a);
    }
    return a;
}

Poly poly_div(Poly a, const Poly& b, const ModPrime& p) {
    trim(a);
    if (deg(a) < deg(b)) return {};
    Poly q(a.size() - b.size() + 1, 0);
    u64 lead_inv = p.inv(b.back());
    while (deg(a) >= deg(b)) {
        u64 c = p.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = p.sub(a[shift + i], p.mul(c, b[i]));
        trim(a);
    }
    return q;
}

Poly poly_gcd(Poly a, Poly b, const ModPrime& p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

Poly trib_poly(const ModPrime& p) {
    Poly f;
    for (std::int64_t c : TribPoly::coeffs) f.push_back(p.reduce(c));
    return f;
}

Poly derivative(const Poly& a, const ModPrime& p) {
    Poly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(p.mul(a[i], i % p.value()));
    trim(d);
    return d;
}

Poly to_poly(const PolyModP& e) {
    Poly a(e.coeffs().begin(), e.coeffs().end());
    trim(a);
    return a;
}

// Roots of a monic squarefree polynomial that splits into linear factors over F_p.
void split_roots(const Poly& g, const ModPrime& p, std::mt19937_64& rng, std::vector<u64>& out) {
    const u64 q = p.value();
    switch (deg(g)) {
    case 0:
        return;
    case 1:
        out.push_back(p.neg(g[0]));
        return;
    case 2:
        if (q == 2) {
            for (u64 r = 0; r < 2; ++r) {
                if (p.add(g[0], p.mul(r, p.add(g[1], r))) == 0) out.push_back(r);
            }
            return;
        } else {
            // x^2 + b x + c: roots (-b +- sqrt(b^2 - 4c)) / 2.
            u64 b = g[1], c = g[0];
            u64 disc = p.sub(p.mul(b, b), p.mul(4 % q, c));
            auto s = modmath::sqrt_mod(disc, q);
            if (!s) throw Error(ErrorCode::NotInPrimeField, "split_roots: quadratic has no roots");
            u64 inv2 = p.inv(2);
            out.push_back(p.mul(p.add(p.neg(b), *s), inv2));
            out.push_back(p.mul(p.sub(p.neg(b), *s), inv2));
            return;
        }
    default:
        break;
    }
    // Cubic: equal-degree splitting. gcd(g, (x + a)^((p-1)/2) - 1) is a proper
    // factor for about half of all shifts a.
    std::array<u64, 3> low{g[0], g[1], g[2]};
    QuotientRing ring(p, low);
    std::uniform_int_distribution<u64> pick(0, q - 1);
    for (;;) {
        PolyModP t = ring.x() + ring.constant(pick(rng));
        PolyModP h = poly_pow(t, (q - 1) / 2) - ring.one();
        Poly d = poly_gcd(g, to_poly(h), p);
        if (deg(d) >= 1 && deg(d) < deg(g)) {
            split_roots(d, p, rng, out);
            split_roots(poly_div(g, d, p), p, rng, out);
            return;
        }
    }
}

// Distinct F_p-roots of f together with whether f is squarefree mod p.
struct RootScan {
    std::vector<u64> roots;
    bool squarefree;
};

RootScan scan_roots(const ModPrime& p) {
    const Poly f = trib_poly(p);
    RootScan result;
    result.squarefree = deg(poly_gcd(f, derivative(f, p), p)) == 0;

    if (p.value() <= 3) {
        for (u64 r = 0; r < p.value(); ++r) {
            if (TribPoly::eval(r, p) == 0) result.roots.push_back(r);
        }
        return result;
    }
    QuotientRing ring = QuotientRing::tribonacci(p);
    PolyModP h = poly_pow(ring.x(), p.value()) - ring.x();
    Poly g = h.is_constant() && h[0] == 0 ? f : poly_gcd(f, to_poly(h), p);

    std::mt19937_64 rng(0x7269626f6e616363ULL);
    split_roots(g, p, rng, result.roots);
    std::sort(result.roots.begin(), result.roots.end());
    return result;
}

} // namespace

u64 TribPoly::eval(u64 r, const ModPrime& p) {
    u64 acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = p.add(p.mul(acc, r), p.reduce(*it));
    return acc;
}

bool is_ramified(const ModPrime& p) { return p.reduce(TribPoly::discriminant()) == 0; }

QuotientRing::QuotientRing(const ModPrime& p, std::span<const u64> monic_low)
    : p_(p), degree_(static_cast<int>(monic_low.size())) {
    if (degree_ < 1 || degree_ > 3) {
        throw Error(ErrorCode::InvalidModulus, "quotient ring modulus must have degree 1, 2 or 3");
    }
    for (int i = 0; i < degree_; ++i) low_[i] = monic_low[i] % p.value();
}

QuotientRing QuotientRing::tribonacci(const ModPrime& p) {
    std::array<u64, 3> low{};
    for (int i = 0; i < 3; ++i) low[i] = p.reduce(TribPoly::coeffs[i]);
    return QuotientRing(p, low);
}

QuotientRing QuotientRing::prime_field(const ModPrime& p) {
    std::array<u64, 1> low{0};
    return QuotientRing(p, low);
}

PolyModP QuotientRing::zero() const { return PolyModP(*this, {0, 0, 0}); }
PolyModP QuotientRing::one() const { return constant(1); }
PolyModP QuotientRing::x() const { return element({0, 1, 0}); }
PolyModP QuotientRing::constant(u64 c) const { return PolyModP(*this, {c % p_.value(), 0, 0}); }

PolyModP QuotientRing::element(std::array<u64, 3> coeffs) const {
    // Reduce x^k for k >= degree via x^d = -(low[d-1] x^(d-1) + ... + low[0]).
    std::array<u64, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = coeffs[i] % p_.value();
    for (int k = 2; k >= degree_; --k) {
        u64 t = c[k];
        c[k] = 0;
        for (int i = 0; i < degree_; ++i) c[k - degree_ + i] = p_.sub(c[k - degree_ + i], p_.mul(t, low_[i]));
    }
    return PolyModP(*this, c);
}

namespace {

void require_same_ring(const PolyModP& a, const PolyModP& b) {
    if (!(a.ring() == b.ring())) {
        throw Error(ErrorCode::ModulusMismatch, "operands belong to different quotient rings");
    }
}

} // namespace

PolyModP PolyModP::operator+(const PolyModP& o) const {
    require_same_ring(*this, o);
    const ModPrime& p = ring_.modulus();
    return PolyModP(ring_, {p.add(c_[0], o.c_[0]), p.add(c_[1], o.c_[1]), p.add(c_[2], o.c_[2])});
}

PolyModP PolyModP::operator-(const PolyModP& o) const {
    require_same_ring(*this, o);
    const ModPrime& p = ring_.modulus();
    return PolyModP(ring_, {p.sub(c_[0], o.c_[0]), p.sub(c_[1], o.c_[1]), p.sub(c_[2], o.c_[2])});
}

PolyModP PolyModP::operator-() const {
    const ModPrime& p = ring_.modulus();
    return PolyModP(ring_, {p.neg(c_[0]), p.neg(c_[1]), p.neg(c_[2])});
}

PolyModP PolyModP::scale(u64 k) const {
    const ModPrime& p = ring_.modulus();
    k %= p.value();
    return PolyModP(ring_, {p.mul(c_[0], k), p.mul(c_[1], k), p.mul(c_[2], k)});
}

PolyModP PolyModP::operator*(const PolyModP& o) const {
    require_same_ring(*this, o);
    const ModPrime& p = ring_.modulus();
    const int d = ring_.degree();
    const auto& low = ring_.low();
    std::array<u64, 5> prod{};
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[i + j] = p.add(prod[i + j], p.mul(c_[i], o.c_[j]));
    }
    for (int k = 2 * d - 2; k >= d; --k) {
        u64 t = prod[k];
        if (t == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < d; ++i) prod[k - d + i] = p.sub(prod[k - d + i], p.mul(t, low[i]));
    }
    return PolyModP(ring_, {prod[0], prod[1], prod[2]});
}

PolyModP poly_mul(const PolyModP& a, const PolyModP& b) { return a * b; }

PolyModP poly_pow(const PolyModP& a, u64 exp) {
    PolyModP result = a.ring().one();
    PolyModP base = a;
    while (exp > 0) {
        if (exp & 1) result = result * base;
        exp >>= 1;
        if (exp) base = base * base;
    }
    return result;
}

std::string_view to_string(Shape s) {
    switch (s) {
    case Shape::ThreeDistinctRoots: return "ThreeDistinctRoots";
    case Shape::OneRootPlusIrreducibleQuadratic: return "OneRootPlusIrreducibleQuadratic";
    case Shape::Irreducible: return "Irreducible";
    case Shape::RamifiedTriple: return "RamifiedTriple";
    case Shape::RamifiedDouble: return "RamifiedDouble";
    }
    return "?";
}

std::string_view to_string(FrobeniusClass c) {
    switch (c) {
    case FrobeniusClass::Identity: return "Identity";
    case FrobeniusClass::Transposition: return "Transposition";
    case FrobeniusClass::ThreeCycle: return "ThreeCycle";
    case FrobeniusClass::Ramified: return "Ramified";
    }
    return "?";
}

SplittingType splitting_type(const ModPrime& p) {
    if (!p.is_prime()) throw Error(ErrorCode::NotPrime, std::to_string(p.value()) + " is not prime");
    RootScan scan = scan_roots(p);
    SplittingType st{Shape::Irreducible, std::move(scan.roots), FrobeniusClass::ThreeCycle};
    const std::size_t n = st.roots.size();
    if (!scan.squarefree) {
        // A repeated factor of a cubic is linear, so every root lies in F_p.
        st.shape = n == 1 ? Shape::RamifiedTriple : Shape::RamifiedDouble;
        st.frobenius_class = FrobeniusClass::Ramified;
    } else if (n == 3) {
        st.shape = Shape::ThreeDistinctRoots;
        st.frobenius_class = FrobeniusClass::Identity;
    } else if (n == 1) {
        st.shape = Shape::OneRootPlusIrreducibleQuadratic;
        st.frobenius_class = FrobeniusClass::Transposition;
    }
    return st;
}

std::vector<u64> distinct_roots(const ModPrime& p) { return splitting_type(p).roots; }

int frobenius_orbit(const ModPrime& p) {
    if (!p.is_prime()) throw Error(ErrorCode::NotPrime, std::to_string(p.value()) + " is not prime");
    if (is_ramified(p)) {
        throw Error(ErrorCode::RamifiedPrime, std::to_string(p.value()) + " ramifies in Q(alpha)");
    }
    QuotientRing ring = QuotientRing::tribonacci(p);
    PolyModP x = ring.x();
    PolyModP image = x;
    for (int k = 1; k <= 3; ++k) {
        image = poly_pow(image, p.value());
        if (image == x) return k;
    }
    throw Error(ErrorCode::InvalidModulus, "Frobenius orbit of x exceeds 3");
}

std::array<u64, 2> quadratic_cofactor(const ModPrime& p, u64 root) {
    Poly q = poly_div(trib_poly(p), Poly{p.neg(root % p.value()), 1}, p);
    q.resize(3, 0);
    return {q[0], q[1]};
}

} // namespace tribsplit::gfext
