#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gcdegen/error.hpp"
#include "gcdegen/grid.hpp"
#include "gcdegen/permutation.hpp"
#include "gcdegen/sagbi.hpp"

namespace gcdegen {

/// Squarefree monomial in z_{ij}, 1 <= i, j <= n <= 8, as a bit mask over
/// positions (i-1)*n + (j-1).
class SqfMonomial {
public:
    explicit SqfMonomial(int n = 1, std::uint64_t mask = 0) : n_(n), mask_(mask) {
        if (n < 1 || n > 8) throw DomainError("squarefree monomials support 1 <= n <= 8");
        if (n < 8 && (mask >> (n * n)) != 0) throw DomainError("monomial support outside the grid");
    }

    static SqfMonomial from_cells(int n, const std::vector<Cell>& cells) {
        SqfMonomial m(n);
        for (const auto& c : cells) m.mask_ |= bit(n, c);
        return m;
    }

    static std::uint64_t bit(int n, Cell c) {
        if (c.row < 1 || c.row > n || c.col < 1 || c.col > n) throw DomainError("cell outside the grid");
        return std::uint64_t{1} << ((c.row - 1) * n + (c.col - 1));
    }

    int n() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    int degree() const { return std::popcount(mask_); }

    std::vector<Cell> support() const {
        std::vector<Cell> out;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (mask_ & bit(n_, {i, j})) out.push_back({i, j});
        return out;
    }

    bool divides(const SqfMonomial& other) const { return (mask_ & ~other.mask_) == 0; }

    SqfMonomial lcm(const SqfMonomial& other) const { return SqfMonomial(n_, mask_ | other.mask_); }

    /// "z11*z12", or "1" for the empty product.
    std::string to_string() const {
        std::string out;
        for (const auto& c : support()) {
            if (!out.empty()) out += '*';
            out += "z" + std::to_string(c.row) + std::to_string(c.col);
        }
        return out.empty() ? "1" : out;
    }

    friend bool operator==(const SqfMonomial&, const SqfMonomial&) = default;
    friend auto operator<=>(const SqfMonomial&, const SqfMonomial&) = default;

private:
    int n_;
    std::uint64_t mask_;
};

/// Squarefree monomial ideal held by its minimal generators.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int n = 1) : n_(n) {}

    MonomialIdeal(int n, std::vector<SqfMonomial> gens) : n_(n) {
        std::vector<std::uint64_t> masks;
        for (const auto& g : gens) {
            if (g.n() != n) throw DomainError("generator size mismatch");
            masks.push_back(g.mask());
        }
        gens_ = minimalize(std::move(masks));
    }

    int n() const { return n_; }
    bool is_zero() const { return gens_.empty(); }
    std::size_t size() const { return gens_.size(); }
    const std::vector<std::uint64_t>& masks() const { return gens_; }

    std::vector<SqfMonomial> generators() const {
        std::vector<SqfMonomial> out;
        for (auto m : gens_) out.emplace_back(n_, m);
        return out;
    }

    bool contains(const SqfMonomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](std::uint64_t g) { return (g & ~m.mask()) == 0; });
    }

    bool contained_in(const MonomialIdeal& other) const {
        return std::all_of(gens_.begin(), gens_.end(), [&](std::uint64_t g) { return other.contains(SqfMonomial(n_, g)); });
    }

    /// Removes generators divisible by another; result sorted by (degree, mask).
    static std::vector<std::uint64_t> minimalize(std::vector<std::uint64_t> masks) {
        std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
            const int da = std::popcount(a), db = std::popcount(b);
            return da != db ? da < db : a < b;
        });
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
        std::vector<std::uint64_t> kept;
        for (auto m : masks) {
            bool redundant = false;
            for (auto k : kept) {
                if ((k & ~m) == 0) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(m);
        }
        return kept;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_;
    std::vector<std::uint64_t> gens_;
};

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n() != b.n()) throw DomainError("ideal size mismatch");
    std::vector<std::uint64_t> lcms;
    lcms.reserve(a.size() * b.size());
    for (auto g : a.masks())
        for (auto h : b.masks()) lcms.push_back(g | h);
    std::vector<SqfMonomial> gens;
    for (auto m : MonomialIdeal::minimalize(std::move(lcms))) gens.emplace_back(a.n(), m);
    return MonomialIdeal(a.n(), std::move(gens));
}

/// Folds pairwise intersections, smallest generator sets first. The intersection
/// of no ideals is the unit ideal.
inline MonomialIdeal intersect_all(std::vector<MonomialIdeal> ideals, int n) {
    if (ideals.empty()) return MonomialIdeal(n, {SqfMonomial(n)});
    std::stable_sort(ideals.begin(), ideals.end(),
                     [](const MonomialIdeal& x, const MonomialIdeal& y) { return x.size() < y.size(); });
    MonomialIdeal acc = ideals.front();
    for (std::size_t t = 1; t < ideals.size(); ++t) acc = intersect(acc, ideals[t]);
    return acc;
}

inline bool ideal_equals(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n() != b.n()) throw DomainError("ideal size mismatch");
    return a.contained_in(b) && b.contained_in(a);
}

inline constexpr int kDefaultIdealBound = 6;

/// Cells (q, p) of the Rothe diagram that are south-east corners: Fulton's essential set.
inline std::vector<Cell> essential_set(const Permutation& w) {
    const int n = w.n();
    const auto inv = w.inverse();
    auto in_diagram = [&](int q, int p) { return q <= n && p <= n && w(q) > p && inv(p) > q; };
    std::vector<Cell> out;
    for (int q = 1; q <= n; ++q)
        for (int p = 1; p <= n; ++p)
            if (in_diagram(q, p) && !in_diagram(q + 1, p) && !in_diagram(q, p + 1)) out.push_back({q, p});
    return out;
}

namespace detail {

inline void subsets_of_size(int universe, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == universe - k + i + 1) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

} // namespace detail

/// All minors of size 1 + w_qp in the top-left q x p corner, over every (q, p)
/// or only the essential set. Sorted, duplicates removed.
inline std::vector<MinorSpec> fulton_generators(const Permutation& w, bool essential_only = false,
                                                int bound = kDefaultIdealBound) {
    const int n = w.n();
    if (n > bound) throw BoundExceeded("Fulton generators limited to n <= " + std::to_string(bound));
    std::vector<Cell> corners;
    if (essential_only) {
        corners = essential_set(w);
    } else {
        for (int q = 1; q <= n; ++q)
            for (int p = 1; p <= n; ++p) corners.push_back({q, p});
    }
    std::set<MinorSpec> out;
    for (const auto& [q, p] : corners) {
        const int k = 1 + rank_fn(w, q, p);
        if (k > std::min(q, p)) continue;
        std::vector<std::vector<int>> rows, cols;
        detail::subsets_of_size(q, k, rows);
        detail::subsets_of_size(p, k, cols);
        for (const auto& r : rows)
            for (const auto& c : cols) out.emplace(r, c);
    }
    return {out.begin(), out.end()};
}

/// Product of the entries (i_s, j_{k+1-s}).
inline SqfMonomial antidiag_monomial(const MinorSpec& m, int n) {
    m.check_within(n);
    return SqfMonomial::from_cells(n, m.antidiagonal());
}

/// The ideal generated by the antidiagonals of the Fulton minors; these minors
/// form a Groebner basis for antidiagonal term orders, so this is in(I_w).
inline MonomialIdeal initial_ideal(const Permutation& w, bool essential_only = false, int bound = kDefaultIdealBound) {
    std::vector<SqfMonomial> gens;
    for (const auto& m : fulton_generators(w, essential_only, bound)) gens.push_back(antidiag_monomial(m, w.n()));
    return MonomialIdeal(w.n(), std::move(gens));
}

/// <z_ij : (i, j) in R>.
inline MonomialIdeal pipe_dream_prime(const Diagram& r) {
    const int n = r.n();
    std::vector<SqfMonomial> gens;
    for (const auto& c : r.cells()) gens.push_back(SqfMonomial::from_cells(n, {c}));
    return MonomialIdeal(n, std::move(gens));
}

inline MonomialIdeal pipe_dream_prime(const PipeDream& r) { return pipe_dream_prime(r.diagram()); }

struct DegenerationReport {
    Permutation w;
    bool equal = false;
    MonomialIdeal initial;
    MonomialIdeal intersection;
    int pipe_dream_count = 0;
    long long millis = 0;
};

inline constexpr int kDefaultDegenerationBound = 5;

/// Compares in(I_w) with the intersection of the pipe-dream primes of w.
inline DegenerationReport verify_degeneration(const Permutation& w, int bound = kDefaultDegenerationBound) {
    if (bound > kDefaultIdealBound) throw BoundExceeded("degeneration check never exceeds n = 6");
    if (w.n() > bound)
        throw BoundExceeded("degeneration check limited to n <= " + std::to_string(bound) + " (override up to " +
                            std::to_string(kDefaultIdealBound) + ")");
    const auto start = std::chrono::steady_clock::now();
    DegenerationReport rep;
    rep.w = w;
    rep.initial = initial_ideal(w, false, bound);
    const auto dreams = enumerate_pipe_dreams(w, bound);
    rep.pipe_dream_count = static_cast<int>(dreams.size());
    std::vector<MonomialIdeal> primes;
    for (const auto& r : dreams) primes.push_back(pipe_dream_prime(r));
    rep.intersection = intersect_all(std::move(primes), w.n());
    rep.equal = ideal_equals(rep.initial, rep.intersection);
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

enum class VanishingRule {
    Bruhat,   // some s <= k has s > w_{k, i_s}
    TopIndex, // k > w_{k, i_k} only
};

/// Pluecker coordinates p_I vanishing on the Schubert variety X_w.
///
/// With the default rule p_I vanishes iff the sorted I fails to dominate the
/// sorted w({1..k}) entrywise, i.e. s > w_{k,i_s} for some s. TopIndex keeps
/// only the s = k test.
inline std::vector<ColumnSet> vanishing_pluckers(const Permutation& w, VanishingRule rule = VanishingRule::Bruhat) {
    std::vector<ColumnSet> out;
    for (const auto& set : all_column_sets(w.n())) {
        const int k = set.size();
        bool vanish = false;
        if (rule == VanishingRule::TopIndex) {
            vanish = k > rank_fn(w, k, set.max());
        } else {
            for (int s = 1; s <= k && !vanish; ++s) vanish = s > rank_fn(w, k, set.at(s));
        }
        if (vanish) out.push_back(set);
    }
    return out;
}

} // namespace gcdegen
