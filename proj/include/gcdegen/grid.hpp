#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gcdegen/error.hpp"
#include "gcdegen/permutation.hpp"

namespace gcdegen {

/// Grid cell (row from top, column from left), 1-indexed.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A finite set of cells of the n x n grid, kept sorted and duplicate free.
class Diagram {
public:
    Diagram() = default;

    Diagram(int n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {
        if (n < 1) throw DomainError("diagram size must be positive");
        std::sort(cells_.begin(), cells_.end());
        if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
            throw DomainError("duplicate cell in diagram");
        for (const auto& c : cells_)
            if (c.row < 1 || c.row > n || c.col < 1 || c.col > n)
                throw DomainError("cell outside the " + std::to_string(n) + "x" + std::to_string(n) + " grid");
    }

    int n() const { return n_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    int n_ = 1;
    std::vector<Cell> cells_;
};

/// The staircase {(i, j) : i + j <= n} in row-major order.
inline std::vector<Cell> staircase(int n) {
    std::vector<Cell> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j) out.push_back({i, j});
    return out;
}

namespace detail {

struct TraceResult {
    std::vector<int> exits; // exits[i-1] = exit column of the pipe entering row i
    bool reduced = true;
};

// Pipes enter on the west edge of every row of a square of side 2n, which is
// wide enough that no pipe leaves through the east edge: each crossing (i, j)
// acts as the transposition s_{i+j-1} with i + j - 1 <= 2n - 1.
inline TraceResult trace(const Diagram& d) {
    const int m = 2 * d.n();
    const auto idx = [m](int r, int c) { return static_cast<std::size_t>(r * (m + 2) + c); };
    std::vector<int> from_west(static_cast<std::size_t>((m + 2) * (m + 2)), 0);
    std::vector<int> from_south(from_west.size(), 0);
    std::vector<bool> met(static_cast<std::size_t>((m + 1) * (m + 1)), false);

    TraceResult result;
    result.exits.assign(static_cast<std::size_t>(m), 0);
    for (int r = 1; r <= m; ++r) from_west[idx(r, 1)] = r;

    for (int r = m; r >= 1; --r) {
        for (int c = 1; c <= m; ++c) {
            const int west = from_west[idx(r, c)];
            const int south = from_south[idx(r, c)];
            const bool crossing = r <= d.n() && c <= d.n() && d.contains({r, c});
            int north_out, east_out;
            if (crossing) {
                north_out = south;
                east_out = west;
                if (west != 0 && south != 0) {
                    auto key = static_cast<std::size_t>(std::min(west, south) * (m + 1) + std::max(west, south));
                    if (met[key]) result.reduced = false;
                    met[key] = true;
                }
            } else {
                north_out = west;
                east_out = south;
            }
            if (r == 1) {
                if (north_out != 0) result.exits[north_out - 1] = c;
            } else {
                from_south[idx(r - 1, c)] = north_out;
            }
            if (c == m) {
                if (east_out != 0) throw Error("pipe left the east edge during tracing");
            } else {
                from_west[idx(r, c + 1)] = east_out;
            }
        }
    }
    return result;
}

} // namespace detail

/// The permutation w_D with w_D(i) = column where the pipe entering row i exits.
///
/// Crossings are cells of D; every other cell is a pair of elbows (west->north,
/// south->east). A diagram using cells off the staircase can send pipes beyond
/// column n; the result then lives in S_m for the smallest m >= n containing it.
inline Permutation trace_pipes(const Diagram& d) {
    auto exits = detail::trace(d).exits;
    int m = static_cast<int>(exits.size());
    while (m > d.n() && exits[m - 1] == m) --m;
    exits.resize(static_cast<std::size_t>(m));
    return Permutation(std::move(exits));
}

/// No two pipes cross more than once.
inline bool is_reduced(const Diagram& d) { return detail::trace(d).reduced; }

/// A reduced diagram (rc-graph).
class PipeDream {
public:
    explicit PipeDream(Diagram d) : diagram_(std::move(d)) {
        if (!is_reduced(diagram_)) throw DomainError("diagram is not reduced");
    }

    const Diagram& diagram() const { return diagram_; }
    int n() const { return diagram_.n(); }
    const std::vector<Cell>& cells() const { return diagram_.cells(); }
    std::size_t size() const { return diagram_.size(); }

    friend bool operator==(const PipeDream&, const PipeDream&) = default;
    friend auto operator<=>(const PipeDream&, const PipeDream&) = default;

private:
    Diagram diagram_;
};

inline constexpr int kDefaultPipeDreamBound = 7;

/// All reduced pipe dreams R with w_R = w, lexicographic on sorted cell lists.
///
/// Exhaustive over the l(w)-subsets of the staircase.
inline std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w, int bound = kDefaultPipeDreamBound) {
    const int n = w.n();
    if (n > bound)
        throw BoundExceeded("pipe dream enumeration limited to n <= " + std::to_string(bound));
    const auto cells = staircase(n);
    const int k = length(w);
    const int total = static_cast<int>(cells.size());

    std::vector<PipeDream> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<Cell> chosen;
        chosen.reserve(pick.size());
        for (int i : pick) chosen.push_back(cells[i]);
        Diagram d(n, std::move(chosen));
        auto t = detail::trace(d);
        if (t.reduced) {
            bool match = true;
            for (int i = 1; i <= n && match; ++i) match = t.exits[i - 1] == w(i);
            if (match) out.emplace_back(std::move(d));
        }
        // next k-combination of {0..total-1}
        int i = k - 1;
        while (i >= 0 && pick[i] == total - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

/// w_qp = #{i <= q : w(i) <= p}.
inline int rank_fn(const Permutation& w, int q, int p) {
    if (q < 1 || q > w.n() || p < 1 || p > w.n())
        throw DomainError("rank_fn: (q, p) out of range");
    int count = 0;
    for (int i = 1; i <= q; ++i)
        if (w(i) <= p) ++count;
    return count;
}

} // namespace gcdegen
