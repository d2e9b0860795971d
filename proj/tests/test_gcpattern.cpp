#include <gtest/gtest.h>

#include <set>

#include "gcdegen/gcpattern.hpp"
#include "gcdegen/polyalg.hpp"

using namespace gcdegen;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

GCPattern pattern(int n, std::vector<std::vector<long long>> rows) { return GCPattern(n, std::move(rows)); }

} // namespace

TEST(Pattern, IsPatternExamples) {
    const HighestWeight l10({1, 0});
    EXPECT_TRUE(is_pattern(pattern(2, {{1, 1}, {0}}), l10));
    EXPECT_FALSE(is_pattern(pattern(2, {{1, 2}, {0}}), l10));
    EXPECT_TRUE(is_pattern(pattern(3, {{2, 2, 1}, {1, 1}, {0}}), HighestWeight({2, 1, 0})));
    EXPECT_FALSE(is_pattern(pattern(2, {{0, 0}, {1}}), l10)); // first column must be lambda
}

TEST(Pattern, EnumerateExamples) {
    EXPECT_EQ(enumerate_patterns(HighestWeight({1, 0})).size(), 2u);
    EXPECT_EQ(enumerate_patterns(HighestWeight({1, 1})).size(), 1u);
    EXPECT_EQ(enumerate_patterns(HighestWeight({2, 1, 0})).size(), 8u);
}

TEST(Pattern, EnumerationIsSoundCompleteAndSorted) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : weights_up_to(n, 2)) {
            const auto ps = enumerate_patterns(l);
            EXPECT_EQ(BigInt(ps.size()), weyl_dim(l)) << l.to_string();
            EXPECT_EQ(std::set<GCPattern>(ps.begin(), ps.end()).size(), ps.size());
            for (const auto& p : ps) EXPECT_TRUE(is_pattern(p, l));
        }
}

TEST(Pattern, EnumerationLimit) {
    EXPECT_THROW(enumerate_patterns(HighestWeight({9, 5, 3, 1, 0}), 1000), BoundExceeded);
}

TEST(Pattern, Interlaces) {
    EXPECT_TRUE(interlaces(HighestWeight({2, 0}), HighestWeight({2, 1, 0})));
    EXPECT_FALSE(interlaces(HighestWeight({3, 0}), HighestWeight({2, 1, 0})));
    EXPECT_TRUE(interlaces(HighestWeight({2}), HighestWeight({3, 1})));
    EXPECT_THROW(interlaces(HighestWeight({2}), HighestWeight({3, 1, 0})), DomainError);
}

TEST(PhiPsi, Examples) {
    EXPECT_TRUE(phi(ExponentArray(3)).is_zero());
    EXPECT_EQ(phi(ExponentArray(2, {{0, 1}, {1}})), pattern(2, {{1, 1}, {1}}));
    EXPECT_EQ(phi(ExponentArray(3, {{1, 1, 0}, {0, 0}, {0}})), pattern(3, {{2, 1, 0}, {0, 0}, {0}}));

    EXPECT_EQ(psi(GCPattern(3)), ExponentArray(3));
    EXPECT_EQ(psi(pattern(2, {{1, 1}, {0}})), ExponentArray(2, {{0, 1}, {0}}));
    EXPECT_EQ(psi(pattern(2, {{1, 1}, {1}})), ExponentArray(2, {{0, 1}, {1}}));
}

TEST(PhiPsi, MutualInverses) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : weights_up_to(n, 2))
            for (const auto& p : enumerate_patterns(l)) EXPECT_EQ(phi(psi(p)), p);
    EXPECT_THROW(psi(pattern(2, {{0, 1}, {0}})), DomainError);
    EXPECT_THROW(ExponentArray(2, {{0, -1}, {0}}), DomainError);
}

TEST(Greedy, Examples) {
    EXPECT_TRUE(greedy_decompose(GCPattern(3)).empty());
    EXPECT_EQ(greedy_decompose(pattern(2, {{1, 1}, {0}})), (std::vector<ColumnSet>{ColumnSet({2})}));
    EXPECT_EQ(greedy_decompose(pattern(2, {{1, 1}, {1}})), (std::vector<ColumnSet>{ColumnSet({1, 2})}));
}

TEST(Greedy, SumsToPsiWithMultiplicities) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : weights_up_to(n, 2))
            for (const auto& p : enumerate_patterns(l)) {
                const auto parts = greedy_decompose(p);
                ExponentVector sum(n);
                std::vector<int> sizes(static_cast<std::size_t>(n + 1), 0);
                for (const auto& s : parts) {
                    sum += alpha(s, n);
                    ++sizes[s.size()];
                }
                EXPECT_EQ(sum, psi(p).to_exponents());
                for (int k = 1; k <= n; ++k) EXPECT_EQ(sizes[k], l.multiplicity(k));
            }
}

TEST(Character, WeightOfExtremePatterns) {
    const HighestWeight l({2, 1, 0});
    const auto ps = enumerate_patterns(l);
    std::set<Exponents> weights;
    for (const auto& p : ps) weights.insert(pattern_weight(p));
    EXPECT_TRUE(weights.count({2, 1, 0}));
    EXPECT_TRUE(weights.count({0, 1, 2}));
    EXPECT_EQ(pattern_character(l), schur_ssyt(l));
}

TEST(Face, FromPipeDreamExamples) {
    const HighestWeight l10({1, 0});
    const auto whole = face_from_pipe_dream(Diagram(2, {}), l10);
    EXPECT_TRUE(whole.equalities.empty());
    EXPECT_EQ(face_lattice_points(whole).size(), 2u);

    const auto vertex = face_from_pipe_dream(PipeDream(Diagram(2, {{1, 1}})), l10);
    const auto pts = face_lattice_points(vertex);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_EQ(pts[0].at(1, 2), 1);
    EXPECT_EQ(face_dimension(vertex), 0);

    const auto full = face_from_pipe_dream(Diagram(3, {{1, 1}, {1, 2}, {2, 1}}), HighestWeight({2, 1, 0}));
    EXPECT_EQ(full.equalities.size(), 3u);
    EXPECT_EQ(face_lattice_points(full).size(), 1u);

    EXPECT_THROW(face_from_pipe_dream(Diagram(2, {{2, 1}}), l10), DomainError);
    EXPECT_THROW(face_from_pipe_dream(Diagram(3, {}), l10), DomainError);
}

TEST(Face, EmptyFace) {
    // Tying column-1 entries (1,1) = (2,1) forces lambda_1 = lambda_2.
    const GCFace f{HighestWeight({1, 0}), {{1, 1}}, FaceConvention::ColumnAdjacent};
    EXPECT_TRUE(face_lattice_points(f).empty());
    EXPECT_EQ(face_dimension(f), -1);
}

TEST(Face, RowAdjacentFacesContainTheHighestPattern) {
    // All entries lambda_{i,j} = lambda_i satisfy every row equality.
    const auto l = HighestWeight::staircase(4);
    for (const auto& w : all_permutations(4))
        for (const auto& r : enumerate_pipe_dreams(w)) EXPECT_GE(face_dimension(face_from_pipe_dream(r, l)), 0);
}

TEST(Face, FullPolytopeDimension) {
    for (int n = 1; n <= 4; ++n) {
        const GCFace f{HighestWeight::staircase(n), {}, FaceConvention::RowAdjacent};
        EXPECT_EQ(face_dimension(f), n * (n - 1) / 2);
    }
}

TEST(Face, UnionCountExamples) {
    const HighestWeight l = HighestWeight::staircase(3);
    EXPECT_EQ(union_face_count(Permutation::identity(3), l), BigInt(enumerate_patterns(l).size()));
    EXPECT_EQ(union_face_count(Permutation::longest(3), l), 1);
    EXPECT_EQ(union_face_count(P("21"), HighestWeight({1, 0})), 1);
}

TEST(Face, CharacterMatchesDemazureUnderFrozenOrientation) {
    for (int n = 2; n <= 4; ++n) {
        const auto l = HighestWeight::staircase(n);
        const auto pts = enumerate_patterns(l);
        for (const auto& w : all_permutations(n)) {
            std::vector<GCFace> faces;
            for (const auto& r : enumerate_pipe_dreams(w)) faces.push_back(face_from_pipe_dream(r, l));
            MultiPolynomial ch(n);
            for (const auto& p : pts)
                for (const auto& f : faces)
                    if (satisfies(p, f)) {
                        ch.add_term(pattern_weight(p), 1);
                        break;
                    }
            EXPECT_EQ(ch, demazure_character(orient(w, kFaceOrientation), l)) << w.to_string();
        }
    }
}

TEST(Face, OrientationSearch) {
    const auto by_dims = matching_orientations(3);
    EXPECT_NE(std::find(by_dims.begin(), by_dims.end(), Orientation::LongestTimes), by_dims.end());
    EXPECT_EQ(matching_orientations(3, true), std::vector<Orientation>{Orientation::LongestTimes});
}

TEST(Face, LiteralColumnConventionDisagrees) {
    const auto l = HighestWeight::staircase(3);
    int mismatches = 0;
    for (const auto& w : all_permutations(3))
        if (union_face_count(w, l, FaceConvention::ColumnAdjacent) != demazure_dim(orient(w, kFaceOrientation), l))
            ++mismatches;
    EXPECT_GT(mismatches, 0);
}

TEST(HRep, SmallExamples) {
    const auto h10 = h_representation(HighestWeight({1, 0}));
    ASSERT_EQ(h10.variables, (std::vector<Cell>{{1, 2}}));
    ASSERT_EQ(h10.a.size(), 2u);
    // x <= 1 and -x <= 0
    EXPECT_EQ(h10.a[0], (std::vector<long long>{1}));
    EXPECT_EQ(h10.b[0], 1);
    EXPECT_EQ(h10.a[1], (std::vector<long long>{-1}));
    EXPECT_EQ(h10.b[1], 0);

    const auto h11 = h_representation(HighestWeight({1, 1}));
    EXPECT_EQ(h11.b, (std::vector<long long>{1, -1}));
}

TEST(HRep, IntegerPointsAreThePatterns) {
    for (const auto& l : {HighestWeight({2, 1, 0}), HighestWeight({2, 2, 1, 0}), HighestWeight({3, 1, 0})}) {
        const auto h = h_representation(l);
        const int n = l.n();
        EXPECT_EQ(h.a.size(), static_cast<std::size_t>(n * (n - 1)));
        std::size_t inside = 0;
        // Every point of the bounding box satisfying A x <= b is a pattern.
        const auto box = h.variables.size();
        std::vector<long long> x(box, 0);
        const long long top = l.part(1);
        while (true) {
            bool ok = true;
            for (std::size_t r = 0; r < h.a.size() && ok; ++r) {
                long long lhs = 0;
                for (std::size_t v = 0; v < box; ++v) lhs += h.a[r][v] * x[v];
                ok = lhs <= h.b[r];
            }
            if (ok) ++inside;
            std::size_t v = 0;
            while (v < box && x[v] == top) x[v++] = 0;
            if (v == box) break;
            ++x[v];
        }
        EXPECT_EQ(inside, enumerate_patterns(l).size()) << l.to_string();
    }
}
