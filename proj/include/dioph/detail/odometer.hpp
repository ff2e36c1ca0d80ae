#pragma once

#include <vector>

namespace dioph::detail {

// Steps a vector of counters in [lo, hi] lexicographically (last index fastest).
// Returns false after wrapping past the final state.
inline bool advance(std::vector<long>& digits, long lo, long hi) {
    for (auto i = digits.size(); i > 0; --i) {
        if (digits[i - 1] < hi) {
            ++digits[i - 1];
            return true;
        }
        digits[i - 1] = lo;
    }
    return false;
}

}  // namespace dioph::detail
