#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace arcshare {

// Visits every k-subset of {0..n-1} in lexicographic order; stops early
// (returning false) when fn returns false.
inline bool for_each_subset(size_t n, size_t k,
                            const std::function<bool(const std::vector<size_t>&)>& fn) {
    if (k > n) return true;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        if (k == 0) return true;
        size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

} // namespace arcshare
