#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace jaco {

inline constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_add_u64(std::uint64_t a, std::uint64_t b) {
    return a > kU64Max - b ? kU64Max : a + b;
}

inline std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b,
                                     const char* what = "count") {
    if (a > kU64Max - b)
        throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    return a + b;
}

}  // namespace jaco
