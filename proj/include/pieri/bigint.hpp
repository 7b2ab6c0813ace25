#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>

namespace pieri {

// Exact integer for multiplicities and dimensions; dimensions blow up
// combinatorially even at moderate rank. cpp_int keeps small values on a
// 64-bit fast path and promotes on overflow.
using Int = boost::multiprecision::cpp_int;

inline bool fits_int64(const Int& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

} // namespace pieri
