#include <gtest/gtest.h>

#include <random>

#include "gcdegen/ideals.hpp"

using namespace gcdegen;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

SqfMonomial M(int n, std::vector<Cell> cells) { return SqfMonomial::from_cells(n, cells); }

MonomialIdeal I(int n, std::vector<std::vector<Cell>> gens) {
    std::vector<SqfMonomial> ms;
    for (auto& g : gens) ms.push_back(M(n, g));
    return MonomialIdeal(n, ms);
}

// Membership of the squarefree monomial `mask` in the intersection.
bool brute_member(const MonomialIdeal& a, const MonomialIdeal& b, std::uint64_t mask) {
    const SqfMonomial m(a.n(), mask);
    return a.contains(m) && b.contains(m);
}

MonomialIdeal random_ideal(std::mt19937& rng, int n, int vars) {
    std::vector<SqfMonomial> gens;
    const int k = static_cast<int>(rng() % 4);
    for (int t = 0; t < k; ++t) {
        std::uint64_t mask = 0;
        for (int b = 0; b < vars; ++b)
            if (rng() % 3 == 0) mask |= std::uint64_t{1} << b;
        if (mask == 0) mask = std::uint64_t{1} << (rng() % static_cast<unsigned>(vars));
        gens.emplace_back(n, mask);
    }
    return MonomialIdeal(n, gens);
}

} // namespace

TEST(Monomials, Basics) {
    const auto m = M(3, {{1, 1}, {1, 2}});
    EXPECT_EQ(m.degree(), 2);
    EXPECT_EQ(m.to_string(), "z11*z12");
    EXPECT_TRUE(M(3, {{1, 1}}).divides(m));
    EXPECT_FALSE(m.divides(M(3, {{1, 1}})));
    EXPECT_EQ(M(3, {{1, 1}}).lcm(M(3, {{1, 2}})), m);
    EXPECT_THROW(SqfMonomial(9), DomainError);
}

TEST(Ideals, IntersectExamples) {
    const int n = 2;
    const auto zero = MonomialIdeal(n);
    EXPECT_TRUE(intersect(I(n, {{{1, 1}}}), zero).is_zero());
    EXPECT_TRUE(ideal_equals(intersect(I(n, {{{1, 1}}}), I(n, {{{1, 2}}})), I(n, {{{1, 1}, {1, 2}}})));
    EXPECT_TRUE(ideal_equals(intersect(I(n, {{{1, 1}}, {{1, 2}}}), I(n, {{{1, 1}}, {{2, 1}}})),
                             I(n, {{{1, 1}}, {{1, 2}, {2, 1}}})));
}

TEST(Ideals, EqualsExamples) {
    const auto a = I(2, {{{1, 1}}});
    EXPECT_TRUE(ideal_equals(a, a));
    EXPECT_TRUE(ideal_equals(a, I(2, {{{1, 1}}, {{1, 1}, {1, 2}}})));
    EXPECT_FALSE(ideal_equals(a, I(2, {{{1, 2}}})));
    EXPECT_EQ(I(2, {{{1, 1}}, {{1, 1}, {1, 2}}}).size(), 1u);
}

TEST(Ideals, IntersectMatchesMembershipExhaustive) {
    std::mt19937 rng(3);
    for (int n = 2; n <= 3; ++n) {
        const int vars = n * n;
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_ideal(rng, n, vars);
            const auto b = random_ideal(rng, n, vars);
            const auto c = intersect(a, b);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars); ++mask)
                EXPECT_EQ(c.contains(SqfMonomial(n, mask)), brute_member(a, b, mask));
        }
    }
}

TEST(Ideals, IntersectMatchesMembershipRandomN5) {
    std::mt19937 rng(5);
    const int n = 5;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_ideal(rng, n, 25);
        const auto b = random_ideal(rng, n, 25);
        const auto c = intersect(a, b);
        for (int probe = 0; probe < 20; ++probe) {
            const std::uint64_t mask = rng() & ((std::uint64_t{1} << 25) - 1);
            EXPECT_EQ(c.contains(SqfMonomial(n, mask)), brute_member(a, b, mask));
        }
        EXPECT_TRUE(c.contained_in(a) && c.contained_in(b));
    }
}

TEST(Ideals, EmptyIntersectionIsUnit) {
    const auto unit = intersect_all({}, 3);
    EXPECT_TRUE(unit.contains(SqfMonomial(3)));
}

TEST(Fulton, Examples) {
    EXPECT_TRUE(fulton_generators(Permutation::identity(4)).empty());
    const auto g21 = fulton_generators(P("21"));
    ASSERT_EQ(g21.size(), 1u);
    EXPECT_EQ(g21[0].rows(), std::vector<int>{1});
    EXPECT_EQ(g21[0].cols(), std::vector<int>{1});

    const auto g321 = fulton_generators(P("321"));
    ASSERT_EQ(g321.size(), 4u);
    EXPECT_NE(std::find(g321.begin(), g321.end(), MinorSpec({1, 2}, {1, 2})), g321.end());
    EXPECT_NE(std::find(g321.begin(), g321.end(), MinorSpec({2}, {1})), g321.end());
    EXPECT_THROW(fulton_generators(Permutation::identity(7)), BoundExceeded);
}

TEST(Fulton, EssentialSetGivesSameInitialIdeal) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_permutations(n))
            EXPECT_TRUE(ideal_equals(initial_ideal(w, true), initial_ideal(w, false))) << w.to_string();
}

TEST(Ideals, AntidiagonalMonomial) {
    EXPECT_EQ(antidiag_monomial(MinorSpec({1}, {1}), 4), M(4, {{1, 1}}));
    EXPECT_EQ(antidiag_monomial(MinorSpec({1, 2}, {1, 2}), 4), M(4, {{1, 2}, {2, 1}}));
    EXPECT_EQ(antidiag_monomial(MinorSpec({1, 2, 3}, {1, 3, 4}), 4), M(4, {{1, 4}, {2, 3}, {3, 1}}));
}

TEST(Ideals, InitialIdealExamples) {
    EXPECT_TRUE(initial_ideal(Permutation::identity(3)).is_zero());
    EXPECT_TRUE(ideal_equals(initial_ideal(P("21")), I(2, {{{1, 1}}})));
    EXPECT_TRUE(ideal_equals(initial_ideal(P("321")), I(3, {{{1, 1}}, {{1, 2}}, {{2, 1}}})));
}

TEST(Ideals, PipeDreamPrimeExamples) {
    EXPECT_TRUE(pipe_dream_prime(Diagram(3, {})).is_zero());
    EXPECT_TRUE(ideal_equals(pipe_dream_prime(Diagram(3, {{1, 1}})), I(3, {{{1, 1}}})));
    EXPECT_TRUE(ideal_equals(pipe_dream_prime(Diagram(3, {{1, 1}, {1, 2}, {2, 1}})),
                             I(3, {{{1, 1}}, {{1, 2}}, {{2, 1}}})));
}

TEST(Degeneration, Examples) {
    for (const char* w : {"21", "321", "123", "1"}) {
        const auto rep = verify_degeneration(P(w));
        EXPECT_TRUE(rep.equal) << w;
    }
    const auto rep = verify_degeneration(P("321"));
    EXPECT_EQ(rep.pipe_dream_count, 1);
    EXPECT_EQ(rep.initial.size(), 3u);
    EXPECT_TRUE(verify_degeneration(Permutation::identity(3)).initial.is_zero());
}

TEST(Degeneration, Bounds) {
    EXPECT_THROW(verify_degeneration(Permutation::identity(6)), BoundExceeded);
    EXPECT_THROW(verify_degeneration(Permutation::identity(3), 7), BoundExceeded);
}

TEST(Vanishing, Examples) {
    EXPECT_TRUE(vanishing_pluckers(Permutation::identity(4)).empty());
    EXPECT_EQ(vanishing_pluckers(P("21")), std::vector<ColumnSet>{ColumnSet({1})});
    const std::vector<ColumnSet> w0{ColumnSet({1}), ColumnSet({2}), ColumnSet({1, 2}), ColumnSet({1, 3})};
    EXPECT_EQ(vanishing_pluckers(P("321")), w0);
    // The top-index-only test misses {1,3}.
    const auto top = vanishing_pluckers(P("321"), VanishingRule::TopIndex);
    EXPECT_EQ(std::find(top.begin(), top.end(), ColumnSet({1, 3})), top.end());
}

TEST(Vanishing, TopIndexIsWeakerThanBruhat) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_permutations(n)) {
            const auto b = vanishing_pluckers(w);
            for (const auto& s : vanishing_pluckers(w, VanishingRule::TopIndex))
                EXPECT_NE(std::find(b.begin(), b.end(), s), b.end());
        }
}

TEST(Vanishing, NonvanishingCountsShrinkUpTheChain) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_permutations(n))
            for (int i = 1; i < n; ++i) {
                if (w(i) > w(i + 1)) continue;
                const auto up = w.times_simple(i);
                const auto lo = vanishing_pluckers(w);
                const auto hi = vanishing_pluckers(up);
                for (int k = 1; k <= n; ++k) {
                    auto count = [k](const std::vector<ColumnSet>& v) {
                        return std::count_if(v.begin(), v.end(), [k](const ColumnSet& c) { return c.size() == k; });
                    };
                    EXPECT_GE(count(hi), count(lo)) << w.to_string() << " k=" << k;
                }
            }
}
