#pragma once

// A deliberately small Buchberger-criterion check, used only as an independent
// spot check of the antidiagonal Groebner basis claim for n <= 3.

#include <cstddef>
#include <map>
#include <vector>

#include "gcdegen/bigint.hpp"
#include "gcdegen/error.hpp"
#include "gcdegen/ideals.hpp"
#include "gcdegen/sagbi.hpp"

namespace gcdegen {

/// Monomial order on z_{ij}: total degree, then smaller omega-weight first, then
/// lex with z_{1n} > z_{1,n-1} > ... > z_{11} > z_{2n} > ... . Every Leibniz
/// monomial of a minor has the same degree, so the omega-weight refined by the
/// antidiagonal lex order decides the lead term.
class AntidiagonalOrder {
public:
    explicit AntidiagonalOrder(int n) : n_(n), weights_(static_cast<std::size_t>(n * n)) {
        const auto w = omega(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) weights_[(i - 1) * n + (j - 1)] = w.at(i, j);
        for (int i = 1; i <= n; ++i)
            for (int j = n; j >= 1; --j) priority_.push_back((i - 1) * n + (j - 1));
    }

    /// a < b in the order.
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        BigInt wa = 0, wb = 0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            da += a[k];
            db += b[k];
            wa += weights_[k] * a[k];
            wb += weights_[k] * b[k];
        }
        if (da != db) return da < db;
        if (wa != wb) return wa > wb;
        for (int k : priority_)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }

    int n() const { return n_; }

private:
    int n_;
    std::vector<BigInt> weights_;
    std::vector<int> priority_;
};

class OrderedPolynomial {
public:
    using Terms = std::map<std::vector<int>, BigRational, AntidiagonalOrder>;

    explicit OrderedPolynomial(const AntidiagonalOrder& order) : terms_(order) {}

    static OrderedPolynomial from_minor(const MinorSpec& m, const AntidiagonalOrder& order) {
        OrderedPolynomial p(order);
        for (const auto& t : minor_terms(m, order.n())) p.add(t.exponents.flat(), BigRational(t.sign));
        return p;
    }

    void add(const std::vector<int>& e, const BigRational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<int>& lead_monomial() const { return terms_.rbegin()->first; }
    const BigRational& lead_coefficient() const { return terms_.rbegin()->second; }
    const Terms& terms() const { return terms_; }

    /// this += c * x^shift * other
    void add_multiple(const OrderedPolynomial& other, const std::vector<int>& shift, const BigRational& c) {
        for (const auto& [e, k] : other.terms_) {
            std::vector<int> s(e);
            for (std::size_t t = 0; t < s.size(); ++t) s[t] += shift[t];
            add(s, c * k);
        }
    }

private:
    Terms terms_;
};

namespace detail {

inline bool monomial_divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

inline bool reduces_to_zero(OrderedPolynomial p, const std::vector<OrderedPolynomial>& basis) {
    while (!p.is_zero()) {
        const auto lead = p.lead_monomial();
        const auto coeff = p.lead_coefficient();
        const OrderedPolynomial* divisor = nullptr;
        for (const auto& g : basis) {
            if (monomial_divides(g.lead_monomial(), lead)) {
                divisor = &g;
                break;
            }
        }
        if (!divisor) return false;
        std::vector<int> shift(lead);
        for (std::size_t k = 0; k < shift.size(); ++k) shift[k] -= divisor->lead_monomial()[k];
        p.add_multiple(*divisor, shift, -coeff / divisor->lead_coefficient());
    }
    return true;
}

} // namespace detail

struct GroebnerCheck {
    bool leads_are_antidiagonals = true;
    bool s_pairs_reduce = true;
    int generators = 0;
    int s_pairs = 0;
};

/// Checks that the Fulton minors of w are a Groebner basis whose lead terms are
/// their antidiagonals.
inline GroebnerCheck check_fulton_groebner(const Permutation& w, int bound = 3) {
    const int n = w.n();
    if (n > bound) throw BoundExceeded("Buchberger spot check limited to n <= " + std::to_string(bound));
    const AntidiagonalOrder order(n);
    std::vector<OrderedPolynomial> basis;
    GroebnerCheck out;
    for (const auto& m : fulton_generators(w)) {
        basis.push_back(OrderedPolynomial::from_minor(m, order));
        const auto lead = basis.back().lead_monomial();
        if (lead != exponent_of(m.antidiagonal(), n).flat()) out.leads_are_antidiagonals = false;
    }
    out.generators = static_cast<int>(basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            const auto& la = basis[a].lead_monomial();
            const auto& lb = basis[b].lead_monomial();
            std::vector<int> lcm(la.size());
            bool coprime = true;
            for (std::size_t k = 0; k < la.size(); ++k) {
                lcm[k] = std::max(la[k], lb[k]);
                if (la[k] > 0 && lb[k] > 0) coprime = false;
            }
            if (coprime) continue; // Buchberger's first criterion
            ++out.s_pairs;
            std::vector<int> sa(lcm), sb(lcm);
            for (std::size_t k = 0; k < lcm.size(); ++k) {
                sa[k] -= la[k];
                sb[k] -= lb[k];
            }
            OrderedPolynomial s(order);
            s.add_multiple(basis[a], sa, 1 / basis[a].lead_coefficient());
            s.add_multiple(basis[b], sb, -1 / basis[b].lead_coefficient());
            if (!detail::reduces_to_zero(std::move(s), basis)) out.s_pairs_reduce = false;
        }
    }
    return out;
}

} // namespace gcdegen
