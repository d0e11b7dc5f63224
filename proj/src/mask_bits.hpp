#pragma once

// single-word bitmask model of subsets of Z_p for p <= 63; shared by the
// exhaustive scanners, which stay allocation-free in their hot loops
#include <bit>
#include <cstdint>

namespace tsl::detail {

using Mask = std::uint64_t;

inline Mask full_mask(long p) { return (1ull << p) - 1; }

inline Mask mask_translate(Mask m, long t, long p) {
    t %= p;
    if (t < 0) t += p;
    if (t == 0) return m;
    return ((m << t) | (m >> (p - t))) & full_mask(p);
}

inline Mask mask_dilate(Mask m, long n, long p) {
    n %= p;
    if (n < 0) n += p;
    Mask out = 0;
    for (Mask bits = m; bits; bits &= bits - 1)
        out |= 1ull << ((n * std::countr_zero(bits)) % p);
    return out;
}

inline Mask mask_sum(Mask a, Mask b, long p) {
    if (a == 0 || b == 0) return 0;
    Mask out = 0;
    for (Mask bits = a; bits; bits &= bits - 1)
        out |= mask_translate(b, std::countr_zero(bits), p);
    return out;
}

}  // namespace tsl::detail
