#include "meander/engine.hpp"
#include "meander/regions.hpp"

#include <gtest/gtest.h>

using namespace meander;

namespace {

MeanderShape S(std::vector<int> perm, Side s0) { return {static_cast<int>(perm.size()), std::move(perm), s0}; }
Rational R(long p, long q) { return Rational(p, q); }

Meander three_two_one() {
    return {S({3, 2, 1}, Side::Up), {R(1, 8), R(1, 16), R(1, 8), R(1, 8), R(1, 4), R(5, 16)}};
}

/// Normalized meanders with areas, the inputs the classification is meant for.
std::vector<Meander> normalized_instances(int max_n) {
    std::vector<Meander> out;
    for (int n = 1; n <= max_n; ++n)
        for (Side s0 : {Side::Up, Side::Down})
            for (const auto &s : enumerate_shapes(n, s0))
                for (std::uint64_t seed : {0u, 5u})
                    out.push_back(normalize(assign_areas(s, seed, 500)));
    return out;
}

bool interval_nested(const Interval &inner, const Interval &outer) {
    return outer.left <= inner.left && inner.right <= outer.right;
}

} // namespace

TEST(Regions, FacesOfSingleCrossing) {
    auto fs = build_faces(S({1}, Side::Up));
    ASSERT_EQ(fs.faces.size(), 4u);
    EXPECT_TRUE(fs.faces[0].below_curve);  // Arc(0)
    EXPECT_FALSE(fs.faces[1].below_curve); // Arc(1)
    EXPECT_FALSE(fs.faces[2].below_curve); // Outer(+)
    EXPECT_TRUE(fs.faces[3].below_curve);  // Outer(-)
}

TEST(Regions, RegionIsRoofPlusNestedFaces) {
    auto m = three_two_one();
    auto fs = build_faces(m.shape);
    auto up = region_of_arc(m, fs, 0); // Up (0,3) encloses Up (1,2)
    EXPECT_EQ(up.faces, (std::vector<int>{0, 2}));
    EXPECT_EQ(up.area, R(1, 4));
    auto down = region_of_arc(m, fs, 3); // Down (1,4) encloses Down (2,3)
    EXPECT_EQ(down.faces, (std::vector<int>{1, 3}));
    EXPECT_TRUE(down.contains(region_of_arc(m, fs, 1)));
    EXPECT_FALSE(up.contains(region_of_arc(m, fs, 1)));
    EXPECT_TRUE(region_of_arc(m, fs, 1).left_of(4));
    EXPECT_FALSE(region_of_arc(m, fs, 1).left_of(3));
}

TEST(Regions, WorkedFixture) {
    auto cls = classify_extremal(three_two_one(), Extremum::AtMin);
    EXPECT_EQ(cls.target_index, -1);
    ASSERT_EQ(cls.points.size(), 1u);
    const auto &x = cls.points[0];
    EXPECT_EQ(x.crossing, 2);
    EXPECT_EQ(x.position, 2);
    EXPECT_EQ(x.small.faces, (std::vector<int>{1}));
    EXPECT_EQ(x.small.side, Side::Down);
    EXPECT_EQ(x.large.faces, (std::vector<int>{2}));
    EXPECT_EQ(x.large.area, R(1, 8));
    EXPECT_EQ(x.weight, R(1, 16));
    EXPECT_EQ(x.side_class, SideClass::Minus);
    EXPECT_EQ(cls.m_minus.size(), 1u);
    EXPECT_TRUE(cls.m_plus.empty());
}

TEST(Regions, GraphLikeMaximum) {
    // (1,2,3;Up): x2 has index 1, flanked by Down Arc(1) and Up Arc(2)
    Meander m{S({1, 2, 3}, Side::Up), {R(1, 10), R(1, 10), R(1, 20), R(1, 20), R(7, 20), R(7, 20)}};
    auto cls = classify_extremal(m, Extremum::AtMax);
    ASSERT_EQ(cls.points.size(), 1u);
    EXPECT_EQ(cls.points[0].crossing, 2);
    EXPECT_EQ(cls.points[0].small.arc, 2); // 1/20 < 1/10
    EXPECT_EQ(cls.points[0].side_class, SideClass::Plus);
}

TEST(Regions, TieGoesToDown) {
    Meander m{S({3, 2, 1}, Side::Up), {R(1, 8), R(1, 8), R(1, 8), R(1, 8), R(1, 4), R(1, 4)}};
    ASSERT_TRUE(check_meander(m).ok);
    auto cls = classify_extremal(m, Extremum::AtMin);
    ASSERT_EQ(cls.points.size(), 1u);
    EXPECT_EQ(cls.points[0].small.side, Side::Down);
    EXPECT_EQ(cls.points[0].small.area, cls.points[0].large.area);
}

TEST(Regions, EndpointsHaveNoNeighbour) {
    // (1,2;Up) has mu = (0,1): its maximum sits at x_N
    Meander m{S({1, 2}, Side::Up), {R(1, 8), R(1, 4), R(1, 8), R(1, 4), R(1, 4)}};
    ASSERT_TRUE(check_meander(m).ok);
    EXPECT_THROW(classify_extremal(m, Extremum::AtMax), NeighborMissing);
}

TEST(Regions, ExtremalPointProperties) {
    for (const auto &m : normalized_instances(7)) {
        for (auto which : {Extremum::AtMin, Extremum::AtMax}) {
            auto t = maslov_indices(m);
            if ((which == Extremum::AtMin ? t.mu_min : t.mu_max) == 0)
                continue;
            auto cls = classify_extremal(m, which);
            for (std::size_t i = 0; i < cls.points.size(); ++i) {
                const auto &x = cls.points[i];
                if (i)
                    EXPECT_LT(cls.points[i - 1].position, x.position);
                EXPECT_NE(x.crossing, 1);
                EXPECT_NE(x.crossing, m.n());
                EXPECT_EQ(x.weight, x.small.area);
                EXPECT_LE(x.small.area, x.large.area);
                EXPECT_NE(x.small.side, x.large.side);
                EXPECT_LT(x.weight, half());
                EXPECT_GT(x.weight, 0);
                EXPECT_TRUE(x.small.disjoint(x.large));
                EXPECT_EQ(x.side_class == SideClass::Minus, x.small.side == Side::Down);
                for (const auto *r : {&x.small, &x.large})
                    EXPECT_TRUE(r->interval.left == x.position || r->interval.right == x.position);
                // the two neighbours lie on opposite sides of x along L0
                EXPECT_TRUE((x.small.interval.left == x.position) != (x.large.interval.left == x.position));
            }
        }
    }
}

TEST(Regions, SmallRegionsOfMinusAreLaminarAndNestedRightToLeft) {
    for (const auto &m : normalized_instances(7)) {
        if (maslov_indices(m).mu_min == 0)
            continue;
        auto cls = classify_extremal(m, Extremum::AtMin);
        for (const auto &x : cls.m_minus)
            for (const auto &y : cls.m_minus) {
                if (x.position == y.position)
                    continue;
                const bool nested = x.small.contains(y.small) || y.small.contains(x.small);
                EXPECT_TRUE(nested || x.small.disjoint(y.small)) << describe(m.shape);
                EXPECT_EQ(x.small.contains(y.small), interval_nested(y.small.interval, x.small.interval));
                if (y.small.contains(x.small))
                    EXPECT_LT(y.position, x.position) << describe(m.shape); // r(x) in r(y) => y before x
            }
    }
}
