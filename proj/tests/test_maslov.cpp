#include "meander/maslov.hpp"
#include "meander/meander.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace meander;

namespace {

MeanderShape S(std::vector<int> perm, Side s0) { return {static_cast<int>(perm.size()), std::move(perm), s0}; }

std::vector<MeanderShape> shapes_up_to(int max_n) {
    std::vector<MeanderShape> out;
    for (int n = 1; n <= max_n; ++n)
        for (Side s0 : {Side::Up, Side::Down}) {
            auto v = enumerate_shapes(n, s0);
            out.insert(out.end(), v.begin(), v.end());
        }
    return out;
}

} // namespace

TEST(Maslov, HandExamples) {
    auto a = maslov_indices(S({1, 2, 3}, Side::Up));
    EXPECT_EQ(a.mu, (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(a.gap, 1);
    auto b = maslov_indices(S({3, 2, 1}, Side::Up));
    EXPECT_EQ(b.mu, (std::vector<int>{0, -1, 0}));
    EXPECT_EQ(b.gap, 1);
    EXPECT_EQ(b.mu_min, -1);
    EXPECT_EQ(b.mu_max, 0);
    for (Side s : {Side::Up, Side::Down}) {
        auto c = maslov_indices(S({1}, s));
        EXPECT_EQ(c.mu, (std::vector<int>{0}));
        EXPECT_EQ(c.gap, 0);
    }
    auto d = maslov_indices(S({1, 4, 3, 2}, Side::Up));
    EXPECT_EQ(d.mu, (std::vector<int>{0, 1, 2, 1}));
    EXPECT_EQ(d.gap, 2);
}

TEST(Maslov, OracleHandExamples) {
    EXPECT_EQ(winding_gap_oracle(S({3, 2, 1}, Side::Up), 1, 2), -1);
    EXPECT_EQ(winding_gap_oracle(S({1, 2, 3}, Side::Up), 1, 3), 0);
    auto s = S({1, 4, 3, 2}, Side::Up);
    for (int k = 1; k <= 4; ++k)
        EXPECT_EQ(winding_gap_oracle(s, k, k), 0);
    EXPECT_EQ(winding_gap_oracle(s, 1, 3), 2);
    EXPECT_EQ(winding_gap_oracle(s, 3, 1), -2);
}

TEST(Maslov, OracleAgreesWithTable) {
    for (const auto &s : shapes_up_to(6)) {
        auto t = maslov_indices(s);
        for (int i = 1; i <= s.n; ++i)
            for (int j = 1; j <= s.n; ++j)
                ASSERT_EQ(winding_gap_oracle(s, i, j), t.at(j) - t.at(i)) << describe(s) << " " << i << "," << j;
    }
}

TEST(Maslov, TableInvariants) {
    for (const auto &s : shapes_up_to(8)) {
        auto t = maslov_indices(s);
        ASSERT_EQ(static_cast<int>(t.mu.size()), s.n);
        EXPECT_EQ(t.mu[0], 0);
        for (int i = 1; i < s.n; ++i)
            EXPECT_EQ(std::abs(t.mu[i] - t.mu[i - 1]), 1);
        EXPECT_LE(t.mu_min, 0);
        EXPECT_GE(t.mu_max, 0);
        EXPECT_EQ(t.gap, t.mu_max - t.mu_min);
        EXPECT_EQ(t.mu_max, *std::max_element(t.mu.begin(), t.mu.end()));
        EXPECT_EQ(t.mu_min, *std::min_element(t.mu.begin(), t.mu.end()));
    }
}

TEST(Maslov, NeighboursOnL0DifferByOne) {
    for (const auto &s : shapes_up_to(8)) {
        auto t = maslov_indices(s);
        auto at = s.crossing_at_position();
        for (int p = 1; p < s.n; ++p)
            EXPECT_EQ(std::abs(t.at(at[p + 1]) - t.at(at[p])), 1) << describe(s);
    }
}

TEST(Maslov, CardinalityAndGapZero) {
    for (const auto &s : shapes_up_to(8)) {
        auto t = maslov_indices(s);
        EXPECT_LE(2 * t.gap, s.n + 1) << describe(s);
        EXPECT_EQ(t.gap == 0, s.n == 1) << describe(s);
    }
}

TEST(Maslov, BoundaryArcsUp) {
    int checked = 0;
    for (const auto &s : shapes_up_to(8)) {
        if (s.s0 != Side::Up || s.last_side() != Side::Up)
            continue;
        auto t = maslov_indices(s);
        EXPECT_EQ(t.at(s.n) - t.at(1), 1) << describe(s);
        ++checked;
    }
    EXPECT_GT(checked, 0);
}

TEST(Maslov, EndSidesOppositeGiveZero) {
    // odd N: the first and last arcs lie on the same side; even N: opposite
    // sides, and then the end indices agree.
    for (const auto &s : shapes_up_to(8)) {
        if (s.s0 == s.last_side())
            continue;
        auto t = maslov_indices(s);
        EXPECT_EQ(t.at(s.n), t.at(1)) << describe(s);
    }
}

TEST(Maslov, SymmetryLaws) {
    for (const auto &s : shapes_up_to(7)) {
        const int n = s.n;
        auto t = maslov_indices(s);
        auto v = maslov_indices(apply_symmetry(s, SymmetryTransform::VFlip));
        auto h = maslov_indices(apply_symmetry(s, SymmetryTransform::HFlip));
        auto r = maslov_indices(apply_symmetry(s, SymmetryTransform::RotPi));
        for (int k = 1; k <= n; ++k) {
            EXPECT_EQ(v.at(k), -t.at(k));
            EXPECT_EQ(h.at(k), t.at(n) - t.at(n + 1 - k));
            EXPECT_EQ(r.at(k), -(t.at(n) - t.at(n + 1 - k))); // VFlip after HFlip
        }
        EXPECT_EQ(v.gap, t.gap);
        EXPECT_EQ(h.gap, t.gap);
        EXPECT_EQ(r.gap, t.gap);
    }
}
