#pragma once

#include <algorithm>
#include <cmath>

namespace maxgal {

namespace detail {
/// Base primes up to sqrt(hi) used by the segmented sieve.
std::vector<std::uint64_t> sieve_base(std::uint64_t limit);
std::uint64_t isqrt(std::uint64_t n);
} // namespace detail

template <class Visit>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
    if (hi < 2 || lo > hi) return;
    lo = std::max<std::uint64_t>(lo, 2);
    const std::vector<std::uint64_t> base = detail::sieve_base(detail::isqrt(hi));
    constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;
    std::vector<char> composite(kSegment);
    for (std::uint64_t start = lo; start <= hi; start += kSegment) {
        std::uint64_t end = std::min(hi, start + kSegment - 1);
        std::fill(composite.begin(), composite.end(), 0);
        for (std::uint64_t p : base) {
            if (p * p > end) break;
            std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
            for (std::uint64_t m = first; m <= end; m += p) composite[m - start] = 1;
        }
        for (std::uint64_t n = start; n <= end; ++n) {
            if (!composite[n - start]) visit(n);
        }
        if (end == hi) break;
    }
}

} // namespace maxgal
