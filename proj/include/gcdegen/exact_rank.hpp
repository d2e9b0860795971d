#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gcdegen/bigint.hpp"

namespace gcdegen {

/// Rank over Q of an integer matrix (rows of equal length), by fraction-free
/// Gaussian elimination. Entries stay integral throughout.
template <typename Int>
int exact_rank(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<BigInt>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
    const std::size_t cols = m.front().size();

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const BigInt a = m[rank][col];
            const BigInt b = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] * a - m[rank][c] * b;
            // keep entries small
            BigInt g = 0;
            for (std::size_t c = col; c < cols; ++c) g = gcd(g, m[r][c]);
            if (g > 1)
                for (std::size_t c = col; c < cols; ++c) m[r][c] /= g;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace gcdegen
