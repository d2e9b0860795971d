#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "gcdegen/bigint.hpp"
#include "gcdegen/error.hpp"
#include "gcdegen/exact_rank.hpp"
#include "gcdegen/grid.hpp"
#include "gcdegen/polyalg.hpp"
#include "gcdegen/sagbi.hpp"

namespace gcdegen {

namespace detail {

// Row i (1-indexed) of a size-n triangle has n + 1 - i entries.
inline std::vector<std::vector<long long>> check_triangle(int n, std::vector<std::vector<long long>> rows) {
    if (n < 1) throw DomainError("triangle needs n >= 1");
    if (static_cast<int>(rows.size()) != n) throw DomainError("triangle must have n rows");
    for (int i = 1; i <= n; ++i)
        if (static_cast<int>(rows[i - 1].size()) != n + 1 - i)
            throw DomainError("row " + std::to_string(i) + " of the triangle must have " + std::to_string(n + 1 - i) +
                              " entries");
    return rows;
}

inline std::vector<std::vector<long long>> zero_triangle(int n) {
    std::vector<std::vector<long long>> rows(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) rows[i - 1].assign(static_cast<std::size_t>(n + 1 - i), 0);
    return rows;
}

} // namespace detail

/// Triangular array lambda_{i,j}, i + j <= n + 1. Column 1 carries the highest weight.
class GCPattern {
public:
    explicit GCPattern(int n = 1) : n_(n), rows_(detail::zero_triangle(n)) {}
    GCPattern(int n, std::vector<std::vector<long long>> rows) : n_(n), rows_(detail::check_triangle(n, std::move(rows))) {}

    int n() const { return n_; }
    long long at(int i, int j) const { return rows_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)); }
    void set(int i, int j, long long v) { rows_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)) = v; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }
    bool is_zero() const {
        for (const auto& r : rows_)
            for (long long v : r)
                if (v != 0) return false;
        return true;
    }

    friend bool operator==(const GCPattern&, const GCPattern&) = default;
    friend auto operator<=>(const GCPattern&, const GCPattern&) = default;

private:
    int n_;
    std::vector<std::vector<long long>> rows_;
};

/// Triangular array a_{i,j} >= 0, i + j <= n + 1.
class ExponentArray {
public:
    explicit ExponentArray(int n = 1) : n_(n), rows_(detail::zero_triangle(n)) {}
    ExponentArray(int n, std::vector<std::vector<long long>> rows) : n_(n), rows_(detail::check_triangle(n, std::move(rows))) {
        for (const auto& r : rows_)
            for (long long v : r)
                if (v < 0) throw DomainError("exponent array entries must be nonnegative");
    }

    /// The triangular part of an n x n exponent vector; cells below the main
    /// antidiagonal must vanish.
    static ExponentArray from_exponents(const ExponentVector& e) {
        const int n = e.n();
        ExponentArray a(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i + j <= n + 1) a.rows_[i - 1][j - 1] = e.at(i, j);
                else if (e.at(i, j) != 0) throw DomainError("exponent vector has support below the antidiagonal");
            }
        return a;
    }

    ExponentVector to_exponents() const {
        ExponentVector e(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; i + j <= n_ + 1; ++j) e.set(i, j, static_cast<int>(at(i, j)));
        return e;
    }

    int n() const { return n_; }
    long long at(int i, int j) const { return rows_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)); }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

    friend bool operator==(const ExponentArray&, const ExponentArray&) = default;
    friend auto operator<=>(const ExponentArray&, const ExponentArray&) = default;

private:
    int n_;
    std::vector<std::vector<long long>> rows_;
};

/// lambda_{i,j} >= lambda_{i,j+1} >= lambda_{i+1,j} wherever defined, and column 1 = lambda.
inline bool is_pattern(const GCPattern& p, const HighestWeight& lambda) {
    if (p.n() != lambda.n()) throw DomainError("pattern and weight sizes differ");
    const int n = p.n();
    for (int i = 1; i <= n; ++i)
        if (p.at(i, 1) != lambda.part(i)) return false;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; i + j <= n; ++j) {
            if (p.at(i, j) < p.at(i, j + 1)) return false;
            if (p.at(i, j + 1) < p.at(i + 1, j)) return false;
        }
    }
    return true;
}

/// lambda_i >= mu_i >= lambda_{i+1} for all i.
inline bool interlaces(const HighestWeight& mu, const HighestWeight& lambda) {
    if (mu.n() + 1 != lambda.n()) throw DomainError("interlacing needs lengths n-1 and n");
    for (int i = 1; i <= mu.n(); ++i)
        if (mu.part(i) > lambda.part(i) || mu.part(i) < lambda.part(i + 1)) return false;
    return true;
}

inline constexpr long long kDefaultPatternLimit = 10'000'000;

/// prod over free entries (i, j), j >= 2, of the width of [lambda_{i+j-1}, lambda_i].
inline BigInt pattern_candidate_bound(const HighestWeight& lambda) {
    BigInt bound = 1;
    const int n = lambda.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 2; i + j <= n + 1; ++j) bound *= lambda.part(i) - lambda.part(i + j - 1) + 1;
    return bound;
}

/// Integer GC patterns for lambda, built column by column: column j + 1 interlaces column j.
inline std::vector<GCPattern> enumerate_patterns(const HighestWeight& lambda, long long limit = kDefaultPatternLimit) {
    if (pattern_candidate_bound(lambda) > limit)
        throw BoundExceeded("pattern enumeration for " + lambda.to_string() + " exceeds limit " + std::to_string(limit));
    const int n = lambda.n();
    GCPattern cur(n);
    for (int i = 1; i <= n; ++i) cur.set(i, 1, lambda.part(i));
    std::vector<GCPattern> out;

    // Visit free cells column-major: (1,2),(2,2),...,(1,3),...
    std::vector<Cell> order;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i + j <= n + 1; ++i) order.push_back({i, j});

    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == order.size()) {
            out.push_back(cur);
            return;
        }
        const auto [i, j] = order[pos];
        const long long hi = cur.at(i, j - 1);
        const long long lo = cur.at(i + 1, j - 1);
        for (long long v = lo; v <= hi; ++v) {
            cur.set(i, j, v);
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// lambda_{i,j} = sum_{j' >= j} a_{i,j'}.
inline GCPattern phi(const ExponentArray& a) {
    const int n = a.n();
    GCPattern p(n);
    for (int i = 1; i <= n; ++i) {
        long long run = 0;
        for (int j = n + 1 - i; j >= 1; --j) {
            run += a.at(i, j);
            p.set(i, j, run);
        }
    }
    return p;
}

/// a_{i,j} = lambda_{i,j} - lambda_{i,j+1}, with lambda_{i,n+2-i} = 0; the inverse of phi.
/// Throws DomainError if a row of the pattern increases.
inline ExponentArray psi(const GCPattern& p) {
    const int n = p.n();
    auto rows = detail::zero_triangle(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; i + j <= n + 1; ++j) {
            const long long next = (i + j <= n) ? p.at(i, j + 1) : 0;
            rows[i - 1][j - 1] = p.at(i, j) - next;
        }
    }
    return ExponentArray(n, std::move(rows));
}

/// Peels subsets I off a pattern: each round finds the last nonzero entry of every
/// nonzero row, records its column i_k, and lowers that row's entries in columns
/// 1..i_k by one, i.e. subtracts phi(alpha_I). The alpha_I of the emitted subsets
/// sum to psi(p), and every intermediate array is again a pattern.
inline std::vector<ColumnSet> greedy_decompose(const GCPattern& start) {
    GCPattern p = start;
    const int n = p.n();
    std::vector<ColumnSet> out;
    while (!p.is_zero()) {
        std::vector<int> cols;
        std::vector<Cell> hits;
        for (int k = 1; k <= n; ++k) {
            int last = 0;
            for (int j = n + 1 - k; j >= 1; --j) {
                if (p.at(k, j) != 0) {
                    last = j;
                    break;
                }
            }
            if (last == 0) break;
            cols.push_back(last);
            hits.push_back({k, last});
        }
        // Strictly decreasing columns are what valid patterns guarantee.
        for (std::size_t t = 1; t < cols.size(); ++t)
            if (cols[t] >= cols[t - 1]) throw DomainError("greedy decomposition needs a valid pattern");
        for (int k = static_cast<int>(hits.size()) + 1; k <= n; ++k)
            for (int j = 1; k + j <= n + 1; ++j)
                if (p.at(k, j) != 0) throw DomainError("greedy decomposition needs a valid pattern");
        for (const auto& h : hits)
            for (int j = 1; j <= h.col; ++j) p.set(h.row, j, p.at(h.row, j) - 1);
        out.emplace_back(std::move(cols));
    }
    return out;
}

/// x^{wt(p)} where wt_m = (sum of column n+1-m) - (sum of column n+2-m), column n+1 empty.
inline Exponents pattern_weight(const GCPattern& p) {
    const int n = p.n();
    std::vector<long long> colsum(static_cast<std::size_t>(n + 2), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n + 1; ++j) colsum[j] += p.at(i, j);
    Exponents e(static_cast<std::size_t>(n), 0);
    for (int m = 1; m <= n; ++m) {
        const long long v = colsum[n + 1 - m] - colsum[n + 2 - m];
        if (v < 0) throw DomainError("pattern weight is negative; not a GC pattern");
        e[m - 1] = static_cast<int>(v);
    }
    return e;
}

/// sum over integer patterns of x^{wt}.
inline MultiPolynomial pattern_character(const HighestWeight& lambda, long long limit = kDefaultPatternLimit) {
    MultiPolynomial out(lambda.n());
    for (const auto& p : enumerate_patterns(lambda, limit)) out.add_term(pattern_weight(p), 1);
    return out;
}

/// Which pair of entries a crossing (i, j) ties together.
enum class FaceConvention {
    RowAdjacent,    // lambda_{i,j} = lambda_{i,j+1}, i.e. a_{i,j} = 0 under psi
    ColumnAdjacent, // lambda_{i,j} = lambda_{i+1,j}, the literal reading kept for comparison
};

/// Face of the GC polytope cut out by one equality per cell.
struct GCFace {
    HighestWeight lambda;
    std::vector<Cell> equalities;
    FaceConvention convention = FaceConvention::RowAdjacent;
};

inline GCFace face_from_pipe_dream(const Diagram& r, const HighestWeight& lambda,
                                   FaceConvention convention = FaceConvention::RowAdjacent) {
    if (r.n() != lambda.n()) throw DomainError("pipe dream and weight sizes differ");
    for (const auto& c : r.cells())
        if (c.row + c.col > r.n()) throw DomainError("crossing outside the staircase");
    return GCFace{lambda, r.cells(), convention};
}

inline GCFace face_from_pipe_dream(const PipeDream& r, const HighestWeight& lambda,
                                   FaceConvention convention = FaceConvention::RowAdjacent) {
    return face_from_pipe_dream(r.diagram(), lambda, convention);
}

inline bool satisfies(const GCPattern& p, const GCFace& f) {
    for (const auto& c : f.equalities) {
        const long long other =
            f.convention == FaceConvention::RowAdjacent ? p.at(c.row, c.col + 1) : p.at(c.row + 1, c.col);
        if (p.at(c.row, c.col) != other) return false;
    }
    return true;
}

inline std::vector<GCPattern> face_lattice_points(const GCFace& f, long long limit = kDefaultPatternLimit) {
    std::vector<GCPattern> out;
    for (auto& p : enumerate_patterns(f.lambda, limit))
        if (satisfies(p, f)) out.push_back(std::move(p));
    return out;
}

/// Affine dimension of the real face, or -1 when empty.
///
/// Every GC inequality and face equality compares two coordinates or one coordinate
/// with an integer, so the constraint matrix is totally unimodular and every face is
/// a lattice polytope. Its affine hull is therefore spanned by its lattice points.
inline int face_dimension(const GCFace& f, long long limit = kDefaultPatternLimit) {
    const auto points = face_lattice_points(f, limit);
    if (points.empty()) return -1;
    const int n = f.lambda.n();
    std::vector<std::vector<long long>> diffs;
    for (std::size_t t = 1; t < points.size(); ++t) {
        std::vector<long long> row;
        for (int i = 1; i <= n; ++i)
            for (int j = 2; i + j <= n + 1; ++j) row.push_back(points[t].at(i, j) - points[0].at(i, j));
        diffs.push_back(std::move(row));
    }
    return exact_rank(diffs);
}

/// |union over pipe dreams R of w of the lattice points of F_R|.
inline BigInt union_face_count(const Permutation& w, const HighestWeight& lambda,
                               FaceConvention convention = FaceConvention::RowAdjacent,
                               long long limit = kDefaultPatternLimit) {
    std::vector<GCFace> faces;
    for (const auto& r : enumerate_pipe_dreams(w)) faces.push_back(face_from_pipe_dream(r, lambda, convention));
    BigInt count = 0;
    for (const auto& p : enumerate_patterns(lambda, limit)) {
        for (const auto& f : faces) {
            if (satisfies(p, f)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

/// Candidate relabelings between a permutation indexing rc-faces and the
/// permutation indexing the matching Demazure module.
enum class Orientation { Same, Inverse, LongestTimes, TimesLongest };

inline constexpr Orientation kAllOrientations[] = {Orientation::Same, Orientation::Inverse,
                                                   Orientation::LongestTimes, Orientation::TimesLongest};

inline std::string to_string(Orientation o) {
    switch (o) {
    case Orientation::Same: return "w";
    case Orientation::Inverse: return "w^-1";
    case Orientation::LongestTimes: return "w0*w";
    case Orientation::TimesLongest: return "w*w0";
    }
    return "?";
}

inline Permutation orient(const Permutation& w, Orientation o) {
    const auto w0 = Permutation::longest(w.n());
    switch (o) {
    case Orientation::Same: return w;
    case Orientation::Inverse: return w.inverse();
    case Orientation::LongestTimes: return w0.compose(w);
    case Orientation::TimesLongest: return w.compose(w0);
    }
    return w;
}

/// The orientation under which union_face_count(w, lambda) = demazure_dim(orient(w), lambda).
/// Sweeping S_2 and S_3 at the staircase weight, both w0*w and w*w0 match on
/// dimensions; only w0*w also matches the full character, which fixes the choice.
inline constexpr Orientation kFaceOrientation = Orientation::LongestTimes;

/// Orientations o with union_face_count(w, lambda) = demazure_dim(o(w), lambda) for
/// every w in S_n at the staircase weight. With `by_character` the weight
/// generating function of the union must equal the Demazure character instead.
inline std::vector<Orientation> matching_orientations(int n, bool by_character = false) {
    const auto lambda = HighestWeight::staircase(n);
    const auto perms = all_permutations(n);
    const auto patterns = enumerate_patterns(lambda);
    std::vector<MultiPolynomial> unions;
    for (const auto& w : perms) {
        std::vector<GCFace> faces;
        for (const auto& r : enumerate_pipe_dreams(w)) faces.push_back(face_from_pipe_dream(r, lambda));
        MultiPolynomial ch(n);
        for (const auto& p : patterns)
            if (std::any_of(faces.begin(), faces.end(), [&](const GCFace& f) { return satisfies(p, f); }))
                ch.add_term(by_character ? pattern_weight(p) : Exponents(static_cast<std::size_t>(n), 0), 1);
        unions.push_back(std::move(ch));
    }
    std::vector<Orientation> out;
    for (auto o : kAllOrientations) {
        bool ok = true;
        for (std::size_t t = 0; t < perms.size() && ok; ++t) {
            const auto target = orient(perms[t], o);
            ok = by_character ? unions[t] == demazure_character(target, lambda)
                              : unions[t].evaluate_at_ones() == demazure_dim(target, lambda);
        }
        if (ok) out.push_back(o);
    }
    return out;
}

/// A system A x <= b over the free coordinates (entries with j >= 2, row-major).
struct HRepresentation {
    std::vector<Cell> variables;
    std::vector<std::vector<long long>> a;
    std::vector<long long> b;
};

/// The inequalities lambda_{i,j} >= lambda_{i,j+1} and lambda_{i,j+1} >= lambda_{i+1,j},
/// with first-column entries moved to the right-hand side.
inline HRepresentation h_representation(const HighestWeight& lambda) {
    const int n = lambda.n();
    HRepresentation h;
    for (int i = 1; i <= n; ++i)
        for (int j = 2; i + j <= n + 1; ++j) h.variables.push_back({i, j});
    auto var = [&](int i, int j) -> int {
        if (j == 1) return -1;
        return static_cast<int>(std::find(h.variables.begin(), h.variables.end(), Cell{i, j}) - h.variables.begin());
    };
    // Emits hi - lo >= 0 as lo - hi <= 0.
    auto emit = [&](Cell hi, Cell lo) {
        std::vector<long long> row(h.variables.size(), 0);
        long long rhs = 0;
        if (int v = var(lo.row, lo.col); v >= 0) row[v] += 1;
        else rhs -= lambda.part(lo.row);
        if (int v = var(hi.row, hi.col); v >= 0) row[v] -= 1;
        else rhs += lambda.part(hi.row);
        h.a.push_back(std::move(row));
        h.b.push_back(rhs);
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; i + j <= n; ++j) {
            emit({i, j}, {i, j + 1});
            emit({i, j + 1}, {i + 1, j});
        }
    }
    return h;
}

} // namespace gcdegen
