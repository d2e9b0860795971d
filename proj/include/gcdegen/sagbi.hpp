#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gcdegen/bigint.hpp"
#include "gcdegen/error.hpp"
#include "gcdegen/exact_rank.hpp"
#include "gcdegen/grid.hpp"
#include "gcdegen/polyalg.hpp"

namespace gcdegen {

/// omega_{ij} = 3^{n-i-j} if i + j <= n, else 0.
class WeightMatrix {
public:
    explicit WeightMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        if (n < 1) throw DomainError("weight matrix needs n >= 1");
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                BigInt v = 0;
                if (i + j <= n) v = pow(BigInt(3), static_cast<unsigned>(n - i - j));
                entries_[index(i, j)] = v;
            }
        }
    }

    int n() const { return n_; }
    const BigInt& at(int i, int j) const { return entries_.at(index(i, j)); }

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw DomainError("weight matrix index out of range");
        return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
    }

    int n_;
    std::vector<BigInt> entries_;
};

inline WeightMatrix omega(int n) { return WeightMatrix(n); }

/// Nonnegative integer exponents on the n x n grid of variables z_{ij}.
class ExponentVector {
public:
    explicit ExponentVector(int n = 1) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
        if (n < 1) throw DomainError("exponent vector needs n >= 1");
    }

    int n() const { return n_; }
    int at(int i, int j) const { return entries_.at(index(i, j)); }
    void set(int i, int j, int v) {
        if (v < 0) throw DomainError("exponents must be nonnegative");
        entries_.at(index(i, j)) = v;
    }
    void increment(int i, int j, int by = 1) { set(i, j, at(i, j) + by); }
    const std::vector<int>& flat() const { return entries_; }

    /// Cells with nonzero exponent, row-major.
    std::vector<Cell> support() const {
        std::vector<Cell> out;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (at(i, j) != 0) out.push_back({i, j});
        return out;
    }

    ExponentVector& operator+=(const ExponentVector& o) {
        if (o.n_ != n_) throw DomainError("exponent vector size mismatch");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw DomainError("exponent index out of range");
        return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
    }

    int n_;
    std::vector<int> entries_;
};

/// A nonempty subset of {1..n}, sorted ascending.
class ColumnSet {
public:
    ColumnSet() = default;

    explicit ColumnSet(std::vector<int> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        if (elems_.empty()) throw DomainError("column set must be nonempty");
        if (elems_.front() < 1) throw DomainError("column indices start at 1");
        if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
            throw DomainError("column set has repeated elements");
    }

    /// Parses "124" or "1,2,4".
    static ColumnSet parse(std::string_view text) {
        std::vector<int> v;
        if (text.find(',') != std::string_view::npos) {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                auto next = text.find(',', pos);
                if (next == std::string_view::npos) next = text.size();
                auto token = text.substr(pos, next - pos);
                if (token.empty()) throw DomainError("empty column entry");
                int x = 0;
                for (char ch : token) {
                    if (ch < '0' || ch > '9') throw DomainError("bad column entry");
                    x = x * 10 + (ch - '0');
                }
                v.push_back(x);
                pos = next + 1;
            }
        } else {
            for (char ch : text) {
                if (ch < '1' || ch > '9') throw DomainError("bad column digit");
                v.push_back(ch - '0');
            }
        }
        return ColumnSet(std::move(v));
    }

    int size() const { return static_cast<int>(elems_.size()); }
    /// s-th smallest element, 1-indexed.
    int at(int s) const { return elems_.at(static_cast<std::size_t>(s - 1)); }
    int max() const { return elems_.back(); }
    const std::vector<int>& elements() const { return elems_; }

    void check_within(int n) const {
        if (elems_.back() > n) throw DomainError("column set not contained in 1.." + std::to_string(n));
    }

    std::string to_string() const {
        std::string out;
        bool commas = elems_.back() > 9;
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (commas && i > 0) out += ',';
            out += std::to_string(elems_[i]);
        }
        return out;
    }

    friend bool operator==(const ColumnSet&, const ColumnSet&) = default;
    friend auto operator<=>(const ColumnSet&, const ColumnSet&) = default;

private:
    std::vector<int> elems_;
};

/// Every nonempty subset of {1..n}, ordered by size then lexicographically.
inline std::vector<ColumnSet> all_column_sets(int n) {
    std::vector<ColumnSet> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(i + 1);
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), [](const ColumnSet& a, const ColumnSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

/// Rows I and columns J of a square minor, both sorted ascending.
class MinorSpec {
public:
    MinorSpec() = default;

    MinorSpec(std::vector<int> rows, std::vector<int> cols) : rows_(std::move(rows)), cols_(std::move(cols)) {
        if (rows_.size() != cols_.size()) throw DomainError("minor needs as many rows as columns");
        if (rows_.empty()) throw DomainError("minor must be nonempty");
        for (const auto* v : {&rows_, &cols_}) {
            if (!std::is_sorted(v->begin(), v->end()) || std::adjacent_find(v->begin(), v->end()) != v->end())
                throw DomainError("minor indices must be strictly increasing");
            if (v->front() < 1) throw DomainError("minor indices start at 1");
        }
    }

    /// The Pluecker coordinate p_J: rows 1..|J|, columns J.
    static MinorSpec pluecker(const ColumnSet& j) {
        std::vector<int> rows(static_cast<std::size_t>(j.size()));
        std::iota(rows.begin(), rows.end(), 1);
        return MinorSpec(std::move(rows), j.elements());
    }

    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }

    void check_within(int n) const {
        if (rows_.back() > n || cols_.back() > n) throw DomainError("minor exceeds the n x n grid");
    }

    /// Cells (i_s, j_{k+1-s}).
    std::vector<Cell> antidiagonal() const {
        std::vector<Cell> out;
        const int k = size();
        for (int s = 1; s <= k; ++s) out.push_back({rows_[s - 1], cols_[k - s]});
        return out;
    }

    /// Cells (i_s, j_s).
    std::vector<Cell> diagonal() const {
        std::vector<Cell> out;
        for (int s = 1; s <= size(); ++s) out.push_back({rows_[s - 1], cols_[s - 1]});
        return out;
    }

    friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
    friend auto operator<=>(const MinorSpec&, const MinorSpec&) = default;

private:
    std::vector<int> rows_;
    std::vector<int> cols_;
};

/// Exponent vector of the antidiagonal term of p_J: support {(s, j_{k+1-s})}.
inline ExponentVector alpha(const ColumnSet& j, int n) {
    j.check_within(n);
    ExponentVector e(n);
    for (const auto& c : MinorSpec::pluecker(j).antidiagonal()) e.set(c.row, c.col, 1);
    return e;
}

/// Exponent vector of the diagonal term of p_J: support {(s, j_s)}.
inline ExponentVector delta(const ColumnSet& j, int n) {
    j.check_within(n);
    ExponentVector e(n);
    for (const auto& c : MinorSpec::pluecker(j).diagonal()) e.set(c.row, c.col, 1);
    return e;
}

inline BigInt omega_weight(const ExponentVector& e, const WeightMatrix& w) {
    if (w.n() != e.n()) throw DomainError("weight matrix size mismatch");
    BigInt sum = 0;
    for (int i = 1; i <= e.n(); ++i)
        for (int j = 1; j <= e.n(); ++j)
            if (e.at(i, j) != 0) sum += w.at(i, j) * e.at(i, j);
    return sum;
}

inline BigInt omega_weight(const ExponentVector& e) { return omega_weight(e, omega(e.n())); }

/// Weight of the antidiagonal of the top-justified submatrix on columns J.
inline BigInt omega_J(const ColumnSet& j, int n) { return omega_weight(alpha(j, n)); }

struct SignedTerm {
    ExponentVector exponents;
    int sign = 1;
    friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

inline constexpr int kDefaultMinorBound = 8;

/// Leibniz expansion of a minor: k! monomials with their signs, generated in
/// lexicographic order of the column permutation (the first is the diagonal).
inline std::vector<SignedTerm> minor_terms(const MinorSpec& m, int n, int bound = kDefaultMinorBound) {
    m.check_within(n);
    const int k = m.size();
    if (k > bound) throw BoundExceeded("minor size above " + std::to_string(bound));
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedTerm> out;
    do {
        int inversions = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[a] > perm[b]) ++inversions;
        SignedTerm t{ExponentVector(n), inversions % 2 == 0 ? 1 : -1};
        for (int s = 0; s < k; ++s) t.exponents.increment(m.rows()[s], m.cols()[perm[s]]);
        out.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline ExponentVector exponent_of(const std::vector<Cell>& cells, int n) {
    ExponentVector e(n);
    for (const auto& c : cells) e.increment(c.row, c.col);
    return e;
}

struct ValuedTerm {
    SignedTerm term;
    BigInt valuation;
};

/// For each term m of p_J: the t-exponent omega(m) - omega_J it carries in q_J.
inline std::vector<ValuedTerm> t_valuations(const ColumnSet& j, int n, int bound = kDefaultMinorBound) {
    const BigInt shift = omega_J(j, n);
    std::vector<ValuedTerm> out;
    for (auto& t : minor_terms(MinorSpec::pluecker(j), n, bound)) {
        BigInt v = omega_weight(t.exponents) - shift;
        out.push_back({std::move(t), std::move(v)});
    }
    return out;
}

/// Every antidiagonal cell lies on or above the main antidiagonal (row + col <= n + 1).
inline bool antidiagonal_above_main(const MinorSpec& m, int n) {
    m.check_within(n);
    for (const auto& c : m.antidiagonal())
        if (c.row + c.col > n + 1) return false;
    return true;
}

/// The antidiagonal term is the strict unique omega-minimum among all Leibniz terms.
/// Throws PreconditionViolated when some antidiagonal cell lies below the main antidiagonal.
inline bool antidiagonal_is_min(const MinorSpec& m, int n, int bound = kDefaultMinorBound) {
    if (!antidiagonal_above_main(m, n))
        throw PreconditionViolated("antidiagonal of the minor dips below the main antidiagonal");
    const auto w = omega(n);
    const auto anti = exponent_of(m.antidiagonal(), n);
    const BigInt anti_weight = omega_weight(anti, w);
    for (const auto& t : minor_terms(m, n, bound)) {
        if (t.exponents == anti) continue;
        if (omega_weight(t.exponents, w) <= anti_weight) return false;
    }
    return true;
}

// Lattice of subsets (GL96 order): I >= J iff |I| <= |J| and i_s >= j_s for s <= |I|.

inline bool lattice_geq(const ColumnSet& i, const ColumnSet& j) {
    if (i.size() > j.size()) return false;
    for (int s = 1; s <= i.size(); ++s)
        if (i.at(s) < j.at(s)) return false;
    return true;
}

inline bool lattice_leq(const ColumnSet& i, const ColumnSet& j) { return lattice_geq(j, i); }

inline ColumnSet lattice_meet(const ColumnSet& i, const ColumnSet& j) {
    const ColumnSet& shorter = i.size() <= j.size() ? i : j;
    const ColumnSet& longer = i.size() <= j.size() ? j : i;
    std::vector<int> out;
    for (int s = 1; s <= shorter.size(); ++s) out.push_back(std::min(shorter.at(s), longer.at(s)));
    for (int s = shorter.size() + 1; s <= longer.size(); ++s) out.push_back(longer.at(s));
    return ColumnSet(std::move(out));
}

inline ColumnSet lattice_join(const ColumnSet& i, const ColumnSet& j) {
    const ColumnSet& shorter = i.size() <= j.size() ? i : j;
    const ColumnSet& longer = i.size() <= j.size() ? j : i;
    std::vector<int> out;
    for (int s = 1; s <= shorter.size(); ++s) out.push_back(std::max(shorter.at(s), longer.at(s)));
    return ColumnSet(std::move(out));
}

/// The column reflection i -> n + 1 - i.
inline ColumnSet reflect(const ColumnSet& i, int n) {
    i.check_within(n);
    std::vector<int> out;
    for (int v : i.elements()) out.push_back(n + 1 - v);
    return ColumnSet(std::move(out));
}

enum class RelationVariant {
    Diagonal,               // delta with the plain meet/join
    ReflectedAntidiagonal,  // alpha with meet/join conjugated by the reflection
    MixedAntidiagonal,      // alpha with the plain meet/join; not an identity in general
};

/// Checks x_I x_J = x_{I meet J} x_{I join J} on exponent vectors.
inline bool binomial_relation_holds(const ColumnSet& i, const ColumnSet& j, int n,
                                    RelationVariant variant = RelationVariant::Diagonal) {
    switch (variant) {
    case RelationVariant::Diagonal:
        return delta(i, n) + delta(j, n) == delta(lattice_meet(i, j), n) + delta(lattice_join(i, j), n);
    case RelationVariant::ReflectedAntidiagonal: {
        const auto ri = reflect(i, n);
        const auto rj = reflect(j, n);
        const auto meet = reflect(lattice_meet(ri, rj), n);
        const auto join = reflect(lattice_join(ri, rj), n);
        return alpha(i, n) + alpha(j, n) == alpha(meet, n) + alpha(join, n);
    }
    case RelationVariant::MixedAntidiagonal:
        return alpha(i, n) + alpha(j, n) == alpha(lattice_meet(i, j), n) + alpha(lattice_join(i, j), n);
    }
    return false;
}

inline constexpr long long kDefaultUpsilonLimit = 10'000'000;

/// Sums of alpha_I with exactly a_k indices of size k, duplicates removed.
inline std::set<ExponentVector> upsilon(const HighestWeight& lambda, long long limit = kDefaultUpsilonLimit) {
    const int n = lambda.n();
    std::vector<std::vector<ExponentVector>> by_size(static_cast<std::size_t>(n + 1));
    for (const auto& j : all_column_sets(n)) by_size[j.size()].push_back(alpha(j, n));

    // Multisets are built in nondecreasing index order so each is visited once.
    std::set<ExponentVector> out;
    long long visited = 0;
    ExponentVector acc(n);
    std::vector<std::pair<int, int>> slots; // (size k, count a_k)
    for (int k = 1; k <= n; ++k)
        if (lambda.multiplicity(k) > 0) slots.emplace_back(k, lambda.multiplicity(k));

    auto rec = [&](auto&& self, std::size_t slot, int remaining, std::size_t from) -> void {
        if (slot == slots.size()) {
            if (++visited > limit) throw BoundExceeded("upsilon enumeration limit exceeded");
            out.insert(acc);
            return;
        }
        if (remaining == 0) {
            std::size_t next = slot + 1;
            self(self, next, next < slots.size() ? slots[next].second : 0, 0);
            return;
        }
        const auto& pool = by_size[static_cast<std::size_t>(slots[slot].first)];
        for (std::size_t t = from; t < pool.size(); ++t) {
            const auto saved = acc;
            acc += pool[t];
            self(self, slot, remaining - 1, t);
            acc = saved;
        }
    };
    rec(rec, 0, slots.empty() ? 0 : slots[0].second, 0);
    return out;
}

/// Rank over Z of span{alpha_I : I nonempty}.
inline int semigroup_rank(int n) {
    if (n < 1 || n > 8) throw DomainError("semigroup_rank supports 1 <= n <= 8");
    std::vector<std::vector<int>> rows;
    for (const auto& j : all_column_sets(n)) rows.push_back(alpha(j, n).flat());
    return exact_rank(rows);
}

/// tau-exponent picked up by entry (i, k) of the j-th component under conjugation
/// by T(omega): omega_{k,j} - omega_{i,j}.
inline BigInt conjugation_t_exponent(int i, int k, int j, int n) {
    if (n < 1 || j < 1 || j > n || k < 1 || i > n || k > i)
        throw DomainError("conjugation exponent needs 1 <= k <= i <= n and 1 <= j <= n");
    const auto w = omega(n);
    return w.at(k, j) - w.at(i, j);
}

} // namespace gcdegen
