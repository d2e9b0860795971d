#include <gtest/gtest.h>

#include <random>

#include "gcdegen/polyalg.hpp"

using namespace gcdegen;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

MultiPolynomial mono(Exponents e, long long c = 1) { return MultiPolynomial::monomial(std::move(e), BigInt(c)); }

MultiPolynomial random_poly(std::mt19937& rng, int nvars) {
    MultiPolynomial f(nvars);
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = static_cast<int>(rng() % 4);
        f.add_term(e, BigInt(static_cast<long long>(rng() % 11) - 5));
    }
    return f;
}

} // namespace

TEST(Polynomial, Arithmetic) {
    const auto x1 = MultiPolynomial::variable(2, 1);
    const auto x2 = MultiPolynomial::variable(2, 2);
    const auto sq = (x1 + x2) * (x1 - x2);
    EXPECT_EQ(sq, mono({2, 0}) - mono({0, 2}));
    EXPECT_TRUE((x1 - x1).is_zero());
    EXPECT_EQ(sq.evaluate_at_ones(), 0);
    EXPECT_EQ(x1.swap_variables(1), x2);
    EXPECT_THROW(x1 + MultiPolynomial::variable(3, 1), DomainError);
    EXPECT_THROW(x1.swap_variables(2), DomainError);
}

TEST(Polynomial, BigCoefficients) {
    auto f = MultiPolynomial::constant(1, BigInt(1));
    const auto two = MultiPolynomial::constant(1, BigInt(2));
    for (int i = 0; i < 200; ++i) f = f * two;
    EXPECT_EQ(f.evaluate_at_ones(), BigInt(1) << 200);
}

TEST(DividedDifference, Examples) {
    EXPECT_EQ(divided_difference(mono({2, 0}), 1), mono({1, 0}) + mono({0, 1}));
    EXPECT_TRUE(divided_difference(mono({1, 1}), 1).is_zero());
    EXPECT_EQ(divided_difference(mono({2, 1, 0}), 2), mono({2, 0, 0}));
}

TEST(DividedDifference, RandomIdentities) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int nvars = 2 + static_cast<int>(rng() % 3);
        const auto f = random_poly(rng, nvars);
        const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(nvars - 1));
        EXPECT_TRUE(divided_difference(divided_difference(f, i), i).is_zero());
        const auto pf = demazure_operator(f, i);
        EXPECT_EQ(demazure_operator(pf, i), pf);
        // (x_i - x_{i+1}) * d_i f = f - s_i f
        const auto diff = MultiPolynomial::variable(nvars, i) - MultiPolynomial::variable(nvars, i + 1);
        EXPECT_EQ(diff * divided_difference(f, i), f - f.swap_variables(i));
    }
}

TEST(DividedDifference, BraidRelations) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_poly(rng, 4);
        auto d = [](const MultiPolynomial& g, int i) { return divided_difference(g, i); };
        EXPECT_EQ(d(d(d(f, 1), 2), 1), d(d(d(f, 2), 1), 2));
        EXPECT_EQ(d(d(f, 1), 3), d(d(f, 3), 1));
    }
}

TEST(Schubert, DividedDifferenceExamples) {
    EXPECT_EQ(schubert_divided_difference(P("123")), MultiPolynomial::constant(3, 1));
    EXPECT_EQ(schubert_divided_difference(P("321")), mono({2, 1, 0}));
    EXPECT_EQ(schubert_divided_difference(P("132")), mono({1, 0, 0}) + mono({0, 1, 0}));
}

TEST(Schubert, PipeDreamExamples) {
    EXPECT_EQ(schubert_pipedreams(P("123")), MultiPolynomial::constant(3, 1));
    EXPECT_EQ(schubert_pipedreams(P("21")), mono({1, 0}));
    EXPECT_EQ(schubert_pipedreams(P("132")), mono({1, 0, 0}) + mono({0, 1, 0}));
}

TEST(Schubert, MethodsAgreeThroughS5) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n)) {
            const auto dd = schubert_divided_difference(w);
            EXPECT_EQ(dd, schubert_pipedreams(w)) << w.to_string();
            EXPECT_EQ(dd, schubert_divided_difference(w, DescentRule::Rightmost));
        }
}

TEST(Schubert, NonnegativeCoefficientsAndRecursion) {
    for (const auto& w : all_permutations(4)) {
        const auto s = schubert_pipedreams(w);
        for (const auto& [e, c] : s.terms()) EXPECT_GT(c, 0);
        for (int i = 1; i < 4; ++i) {
            if (w(i) > w(i + 1)) {
                EXPECT_EQ(divided_difference(s, i), schubert_pipedreams(w.times_simple(i)));
            } else {
                EXPECT_TRUE(divided_difference(s, i).is_zero());
            }
        }
    }
}

TEST(HighestWeight, ParseAndValidate) {
    EXPECT_EQ(HighestWeight::parse("2,1,0").parts(), (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(HighestWeight::staircase(4).to_string(), "3,2,1,0");
    EXPECT_THROW(HighestWeight::parse("1,2"), DomainError);
    EXPECT_THROW(HighestWeight::parse("1,-1"), DomainError);
    EXPECT_THROW(HighestWeight::parse("x"), DomainError);
    const HighestWeight l({3, 1, 1});
    EXPECT_EQ(l.multiplicity(1), 2);
    EXPECT_EQ(l.multiplicity(2), 0);
    EXPECT_EQ(l.multiplicity(3), 1);
    EXPECT_EQ(weights_up_to(3, 2).size(), 10u);
}

TEST(Demazure, Examples) {
    const HighestWeight l({2, 1, 0});
    EXPECT_EQ(demazure_character(P("123"), l), mono({2, 1, 0}));
    EXPECT_EQ(demazure_dim(P("123"), l), 1);
    EXPECT_EQ(demazure_dim(P("321"), l), weyl_dim(l));
    EXPECT_EQ(demazure_character(P("21"), HighestWeight({1, 0})), mono({1, 0}) + mono({0, 1}));
}

TEST(Demazure, LongestElementGivesSchur) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : weights_up_to(n, 2)) {
            EXPECT_EQ(demazure_character(Permutation::longest(n), l), schur_ssyt(l)) << l.to_string();
            EXPECT_EQ(demazure_character(Permutation::longest(n), l, DescentRule::Rightmost), schur_ssyt(l));
        }
}

TEST(Demazure, DimensionsAreMonotoneInBruhatSteps) {
    const HighestWeight l = HighestWeight::staircase(4);
    for (const auto& w : all_permutations(4))
        for (int i = 1; i < 4; ++i)
            if (w(i) < w(i + 1)) {
                EXPECT_LE(demazure_dim(w, l), demazure_dim(w.times_simple(i), l));
            }
}

TEST(Weyl, Examples) {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> parts(static_cast<std::size_t>(n), 0);
        parts[0] = 1;
        EXPECT_EQ(weyl_dim(HighestWeight(parts)), n);
    }
    EXPECT_EQ(weyl_dim(HighestWeight({1, 1})), 1);
    EXPECT_EQ(weyl_dim(HighestWeight({2, 1, 0})), 8);
    EXPECT_EQ(weyl_dim(HighestWeight::staircase(4)), 64);
}

TEST(Schur, Examples) {
    EXPECT_EQ(schur_ssyt(HighestWeight({1, 0})), mono({1, 0}) + mono({0, 1}));
    EXPECT_EQ(schur_ssyt(HighestWeight({1, 1})), mono({1, 1}));
    EXPECT_EQ(schur_ssyt(HighestWeight({2, 1, 0})).evaluate_at_ones(), 8);
    EXPECT_EQ(schur_ssyt(HighestWeight({0, 0})), MultiPolynomial::constant(2, 1));
}

TEST(Schur, SymmetricAndMatchesWeyl) {
    for (const auto& l : weights_up_to(4, 3)) {
        const auto s = schur_ssyt(l);
        EXPECT_EQ(s.evaluate_at_ones(), weyl_dim(l));
        for (int i = 1; i < 4; ++i) EXPECT_EQ(s.swap_variables(i), s);
    }
}

TEST(Schur, TableauLimit) { EXPECT_THROW(schur_ssyt(HighestWeight({3, 2, 1, 0}), 10), BoundExceeded); }
