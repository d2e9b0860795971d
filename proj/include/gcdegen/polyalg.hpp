#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gcdegen/bigint.hpp"
#include "gcdegen/error.hpp"
#include "gcdegen/grid.hpp"
#include "gcdegen/permutation.hpp"
#include "gcdegen/polynomial.hpp"

namespace gcdegen {

/// A weakly decreasing sequence of n nonnegative integers lambda_1 >= ... >= lambda_n.
class HighestWeight {
public:
    HighestWeight() = default;

    explicit HighestWeight(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw DomainError("highest weight needs n >= 1 parts");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw DomainError("highest weight parts must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("highest weight must be weakly decreasing");
        }
    }

    /// "2,1,0"
    static HighestWeight parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            auto token = text.substr(pos, next - pos);
            if (token.empty()) throw DomainError("empty part in weight");
            int v = 0;
            for (char ch : token) {
                if (ch < '0' || ch > '9') throw DomainError("bad weight part");
                v = v * 10 + (ch - '0');
            }
            parts.push_back(v);
            pos = next + 1;
        }
        return HighestWeight(std::move(parts));
    }

    /// The staircase weight (n-1, ..., 1, 0).
    static HighestWeight staircase(int n) {
        std::vector<int> parts(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) parts[i] = n - 1 - i;
        return HighestWeight(std::move(parts));
    }

    int n() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& parts() const { return parts_; }

    /// a_k = lambda_k - lambda_{k+1}, with lambda_{n+1} = 0.
    int multiplicity(int k) const { return part(k) - (k < n() ? part(k + 1) : 0); }

    bool strictly_decreasing() const {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] == parts_[i - 1]) return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
    friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

private:
    std::vector<int> parts_;
};

/// All weakly decreasing weights of length n with parts in [0, max_part].
inline std::vector<HighestWeight> weights_up_to(int n, int max_part) {
    std::vector<HighestWeight> out;
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int cap) -> void {
        if (pos == n) {
            out.emplace_back(parts);
            return;
        }
        for (int v = cap; v >= 0; --v) {
            parts[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, max_part);
    return out;
}

/// (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.
inline MultiPolynomial divided_difference(const MultiPolynomial& f, int i) {
    f.check_index(i);
    MultiPolynomial out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        const int p = e[i - 1];
        const int q = e[i];
        if (p == q) continue;
        const int hi = p > q ? p : q;
        const int lo = p > q ? q : p;
        const BigInt sign = p > q ? BigInt(1) : BigInt(-1);
        // x_i^hi x_{i+1}^lo - x_i^lo x_{i+1}^hi = (x_i - x_{i+1}) sum_k x_i^{hi-1-k} x_{i+1}^{lo+k}
        for (int k = 0; k < hi - lo; ++k) {
            Exponents t(e);
            t[i - 1] = hi - 1 - k;
            t[i] = lo + k;
            out.add_term(std::move(t), sign * c);
        }
    }
    return out;
}

/// Isobaric divided difference pi_i f = d_i(x_i f).
inline MultiPolynomial demazure_operator(const MultiPolynomial& f, int i) {
    f.check_index(i);
    return divided_difference(f * MultiPolynomial::variable(f.nvars(), i), i);
}

/// Schubert polynomial by the recursion S_{w0} = x_1^{n-1} ... x_{n-1}, S_{w s_i} = d_i S_w.
///
/// Climbs from w to w0 through ascents chosen by `rule`, then applies the divided
/// differences back down.
inline MultiPolynomial schubert_divided_difference(const Permutation& w, DescentRule rule = DescentRule::Leftmost) {
    const int n = w.n();
    std::vector<int> path;
    Permutation cur = w;
    const Permutation top = Permutation::longest(n);
    while (cur != top) {
        int pick = 0;
        for (int i = 1; i < n; ++i) {
            if (cur(i) < cur(i + 1)) {
                pick = i;
                if (rule == DescentRule::Leftmost) break;
            }
        }
        path.push_back(pick);
        cur = cur.times_simple(pick);
    }
    Exponents base(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) base[i - 1] = n - i;
    auto poly = MultiPolynomial::monomial(std::move(base));
    for (auto it = path.rbegin(); it != path.rend(); ++it) poly = divided_difference(poly, *it);
    return poly;
}

/// Sum over reduced pipe dreams of w of prod_{(i,j) in R} x_i.
inline MultiPolynomial schubert_pipedreams(const Permutation& w, int bound = kDefaultPipeDreamBound) {
    MultiPolynomial out(w.n());
    for (const auto& r : enumerate_pipe_dreams(w, bound)) {
        Exponents e(static_cast<std::size_t>(w.n()), 0);
        for (const auto& c : r.cells()) ++e[c.row - 1];
        out.add_term(std::move(e), 1);
    }
    return out;
}

/// pi_{i_1} ... pi_{i_l} (x^lambda) over a reduced word of w.
inline MultiPolynomial demazure_character(const Permutation& w, const HighestWeight& lambda,
                                          DescentRule rule = DescentRule::Leftmost) {
    if (w.n() != lambda.n()) throw DomainError("permutation and weight sizes differ");
    Exponents e(lambda.parts().begin(), lambda.parts().end());
    auto poly = MultiPolynomial::monomial(std::move(e));
    const auto word = reduced_word(w, rule);
    for (auto it = word.rbegin(); it != word.rend(); ++it) poly = demazure_operator(poly, *it);
    return poly;
}

inline BigInt demazure_dim(const Permutation& w, const HighestWeight& lambda) {
    return demazure_character(w, lambda).evaluate_at_ones();
}

/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
inline BigInt weyl_dim(const HighestWeight& lambda) {
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 1; i <= lambda.n(); ++i) {
        for (int j = i + 1; j <= lambda.n(); ++j) {
            num *= lambda.part(i) - lambda.part(j) + j - i;
            den *= j - i;
        }
    }
    return num / den;
}

inline constexpr long long kDefaultTableauLimit = 10'000'000;

/// Schur polynomial as the content generating function of semistandard tableaux
/// of shape lambda with entries in 1..n.
inline MultiPolynomial schur_ssyt(const HighestWeight& lambda, long long limit = kDefaultTableauLimit) {
    const int n = lambda.n();
    std::vector<int> rows;
    for (int p : lambda.parts())
        if (p > 0) rows.push_back(p);

    std::vector<std::vector<int>> tab(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) tab[r].assign(static_cast<std::size_t>(rows[r]), 0);
    Exponents content(static_cast<std::size_t>(n), 0);
    MultiPolynomial out(n);
    long long count = 0;

    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows.size()) {
            if (++count > limit) throw BoundExceeded("tableau enumeration limit exceeded");
            out.add_term(content, 1);
            return;
        }
        if (c == tab[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = tab[r][c - 1];
        if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            tab[r][c] = v;
            ++content[v - 1];
            self(self, r, c + 1);
            --content[v - 1];
        }
    };
    fill(fill, 0, 0);
    return out;
}

} // namespace gcdegen
