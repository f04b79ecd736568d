#include "tribsplit/quadform.hpp"

#include <string>

#include "tribsplit/error.hpp"

namespace tribsplit::quadform {

namespace {

// x^2 + d y^2 = p for prime p with a known root r of r^2 = -d mod p.
Representation cornacchia(u64 p, u64 d, u64 r) {
    Representation rep{p, 0, 0, false};
    const u64 limit = modmath::isqrt(p);
    u64 a = p, b = r;
    while (b > limit) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    const u64 rest = p - b * b;
    u64 y;
    if (rest % d == 0 && modmath::is_square(rest / d, &y)) {
        rep.x = b;
        rep.y = y;
        rep.exists = true;
    }
    return rep;
}

} // namespace

Representation represent(const ModPrime& p) {
    if (!p.is_prime()) throw Error(ErrorCode::NotPrime, std::to_string(p.value()) + " is not prime");
    const u64 q = p.value();
    if (q < kFormD) return represent_bruteforce(q);
    auto r = modmath::sqrt_mod(p.reduce(-static_cast<std::int64_t>(kFormD)), q);
    if (!r) return Representation{q, 0, 0, false};
    return cornacchia(q, kFormD, *r);
}

Representation represent_bruteforce(u64 p) {
    for (u64 y = 0; kFormD * y * y <= p; ++y) {
        u64 x;
        if (modmath::is_square(p - kFormD * y * y, &x)) return Representation{p, x, y, true};
    }
    return Representation{p, 0, 0, false};
}

} // namespace tribsplit::quadform
