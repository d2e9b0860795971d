#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcdegen/bigint.hpp"
#include "gcdegen/error.hpp"

namespace gcdegen {

using Exponents = std::vector<int>;

/// Sparse polynomial in x_1..x_n with arbitrary-precision integer coefficients.
/// Terms are kept in a map keyed by exponent tuple; zero coefficients are never stored.
class MultiPolynomial {
public:
    using Terms = std::map<Exponents, BigInt>;

    explicit MultiPolynomial(int nvars = 0) : nvars_(nvars) {
        if (nvars < 0) throw DomainError("negative variable count");
    }

    static MultiPolynomial constant(int nvars, const BigInt& c) {
        MultiPolynomial p(nvars);
        p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    static MultiPolynomial monomial(Exponents e, const BigInt& c = 1) {
        MultiPolynomial p(static_cast<int>(e.size()));
        p.add_term(std::move(e), c);
        return p;
    }

    /// x_i, 1-indexed.
    static MultiPolynomial variable(int nvars, int i) {
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(i - 1)) = 1;
        return monomial(std::move(e));
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BigInt coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(Exponents e, const BigInt& c) {
        if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent length mismatch");
        for (int x : e)
            if (x < 0) throw DomainError("negative exponent");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPolynomial& operator+=(const MultiPolynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultiPolynomial& operator-=(const MultiPolynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }

    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
        a.check(b);
        MultiPolynomial out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }

    /// Value at x_1 = ... = x_n = 1.
    BigInt evaluate_at_ones() const {
        BigInt sum = 0;
        for (const auto& [e, c] : terms_) sum += c;
        return sum;
    }

    /// The polynomial with x_i and x_{i+1} exchanged.
    MultiPolynomial swap_variables(int i) const {
        check_index(i);
        MultiPolynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents s(e);
            std::swap(s[i - 1], s[i]);
            out.add_term(std::move(s), c);
        }
        return out;
    }

    friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

    /// Human-readable form, e.g. "x1^2*x2 + 3*x3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        // Highest exponent tuple first reads more naturally.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            std::string mono;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(k + 1);
                if (e[k] > 1) mono += "^" + std::to_string(e[k]);
            }
            if (mono.empty()) out += mag.str();
            else if (mag == 1) out += mono;
            else out += mag.str() + "*" + mono;
        }
        return out;
    }

    void check_index(int i) const {
        if (i < 1 || i >= nvars_) throw DomainError("variable pair index out of range");
    }

private:
    void check(const MultiPolynomial& o) const {
        if (o.nvars_ != nvars_) throw DomainError("polynomial variable count mismatch");
    }

    int nvars_ = 0;
    Terms terms_;
};

} // namespace gcdegen
