#pragma once

#include <cstdint>
#include <limits>

namespace fdrc {

/// base^exp, saturating at the uint64 maximum instead of wrapping.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    while (exp-- > 0) {
        if (base != 0 && r > cap / base) return cap;
        r *= base;
    }
    return r;
}

}  // namespace fdrc
