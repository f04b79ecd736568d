#include <algorithm>

#include "tribsplit/error.hpp"
#include "tribsplit/modmath.hpp"

namespace tribsplit::modmath {

namespace {

std::vector<std::uint32_t> simple_sieve(u64 limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

} // namespace

PrimeStream::PrimeStream(u64 lo, u64 hi, u64 segment_size)
    : hi_(hi), segment_size_(std::max<u64>(segment_size, 64)), seg_lo_(lo), seg_hi_(lo), pos_(0) {
    if (lo > hi || hi > kMaxModulus) {
        throw Error(ErrorCode::IndexOutOfRange, "prime range must satisfy 0 <= lo <= hi <= 2^63");
    }
    if (hi > 2) base_primes_ = simple_sieve(isqrt(hi - 1));
}

void PrimeStream::fill_segment() {
    seg_lo_ = seg_hi_;
    seg_hi_ = seg_lo_ + std::min(segment_size_, hi_ - seg_lo_);
    sieve_.assign(seg_hi_ - seg_lo_, 1);
    pos_ = 0;
    for (u64 v = seg_lo_; v < std::min<u64>(seg_hi_, 2); ++v) sieve_[v - seg_lo_] = 0;
    for (u64 q : base_primes_) {
        if (q * q >= seg_hi_) break;
        u64 start = std::max(q * q, (seg_lo_ + q - 1) / q * q);
        for (u64 m = start; m < seg_hi_; m += q) sieve_[m - seg_lo_] = 0;
    }
}

std::optional<u64> PrimeStream::next() {
    for (;;) {
        while (pos_ < sieve_.size()) {
            std::size_t i = pos_++;
            if (sieve_[i]) return seg_lo_ + i;
        }
        if (seg_hi_ >= hi_) return std::nullopt;
        fill_segment();
    }
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    PrimeStream stream(lo, hi);
    while (auto q = stream.next()) out.push_back(*q);
    return out;
}

} // namespace tribsplit::modmath
