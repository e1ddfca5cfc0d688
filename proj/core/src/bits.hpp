#pragma once

#include <bit>
#include <cstdint>

namespace cauchon::detail {

// Mask of the lowest k bits, 0 <= k <= 64.
constexpr std::uint64_t low_bits(int k) noexcept {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// Reverses the lowest n bits of x; higher bits are dropped.
constexpr std::uint64_t reverse_bits(std::uint64_t x, int n) noexcept {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        r = (r << 1) | (x & 1);
        x >>= 1;
    }
    return r;
}

} // namespace cauchon::detail
