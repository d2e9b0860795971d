#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "gcdegen/error.hpp"

namespace gcdegen {

/// An element of S_n in one-line notation, 1-indexed: at(i) = w(i).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        if (word_.empty())
            throw DomainError("permutation must have n >= 1");
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
                throw DomainError("not a permutation of 1.." + std::to_string(word_.size()));
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    /// The longest element w0 = n ... 2 1.
    static Permutation longest(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[i] = n - i;
        return Permutation(std::move(w));
    }

    /// Accepts "15423" (digits, n <= 9) or "1,5,4,2,3".
    static Permutation parse(std::string_view text) {
        std::vector<int> w;
        if (text.find(',') != std::string_view::npos) {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                auto next = text.find(',', pos);
                if (next == std::string_view::npos) next = text.size();
                auto token = text.substr(pos, next - pos);
                if (token.empty()) throw DomainError("empty entry in permutation");
                int v = 0;
                for (char ch : token) {
                    if (ch < '0' || ch > '9') throw DomainError("bad permutation entry");
                    v = v * 10 + (ch - '0');
                }
                w.push_back(v);
                pos = next + 1;
            }
        } else {
            for (char ch : text) {
                if (ch < '1' || ch > '9') throw DomainError("bad permutation digit");
                w.push_back(ch - '0');
            }
        }
        return Permutation(std::move(w));
    }

    int n() const { return static_cast<int>(word_.size()); }
    int at(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    int operator()(int i) const { return at(i); }
    const std::vector<int>& word() const { return word_; }

    /// Digit string for n <= 9, comma-separated beyond.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (n() > 9 && i > 0) out += ',';
            out += std::to_string(word_[i]);
        }
        return out;
    }

    Permutation inverse() const {
        std::vector<int> inv(word_.size());
        for (int i = 1; i <= n(); ++i) inv[at(i) - 1] = i;
        return Permutation(std::move(inv));
    }

    /// (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const {
        if (other.n() != n()) throw DomainError("permutation size mismatch");
        std::vector<int> w(word_.size());
        for (int i = 1; i <= n(); ++i) w[i - 1] = at(other.at(i));
        return Permutation(std::move(w));
    }

    /// w * s_i: swaps positions i and i+1.
    Permutation times_simple(int i) const {
        check_simple(i);
        auto w = word_;
        std::swap(w[i - 1], w[i]);
        return Permutation(std::move(w));
    }

    /// s_i * w: swaps values i and i+1.
    Permutation simple_times(int i) const {
        check_simple(i);
        auto w = word_;
        for (int& v : w) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
        return Permutation(std::move(w));
    }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if (at(i) != i) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    void check_simple(int i) const {
        if (i < 1 || i >= n()) throw DomainError("simple reflection index out of range");
    }

    std::vector<int> word_;
};

/// Inversion count.
inline int length(const Permutation& w) {
    int count = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

/// All of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
    if (n < 1) throw DomainError("n must be positive");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

enum class DescentRule { Leftmost, Rightmost };

/// A reduced word i_1 ... i_l with w = s_{i_1} ... s_{i_l}, built by peeling right
/// descents off w.
inline std::vector<int> reduced_word(const Permutation& w, DescentRule rule = DescentRule::Leftmost) {
    std::vector<int> word;
    Permutation cur = w;
    while (!cur.is_identity()) {
        int pick = 0;
        for (int i = 1; i < cur.n(); ++i) {
            if (cur(i) > cur(i + 1)) {
                pick = i;
                if (rule == DescentRule::Leftmost) break;
            }
        }
        word.push_back(pick);
        cur = cur.times_simple(pick);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

} // namespace gcdegen
