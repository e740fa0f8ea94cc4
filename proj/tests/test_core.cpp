#include "meander/meander.hpp"
#include "meander/text_format.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace meander;

namespace {

MeanderShape S(std::vector<int> perm, Side s0) { return {static_cast<int>(perm.size()), std::move(perm), s0}; }

Rational R(long p, long q) { return Rational(p, q); }

} // namespace

TEST(Shape, ValidExamples) {
    EXPECT_TRUE(validate(S({1}, Side::Up)).ok);
    EXPECT_TRUE(validate(S({3, 2, 1}, Side::Up)).ok);
    EXPECT_TRUE(validate(S({1, 2, 3}, Side::Down)).ok);
}

TEST(Shape, InterleavingIsReported) {
    auto report = validate(S({2, 1}, Side::Up));
    ASSERT_FALSE(report.ok);
    EXPECT_NE(report.violations.front().find("interleave"), std::string::npos);
}

TEST(Shape, NotAPermutation) {
    EXPECT_FALSE(validate(S({1, 1}, Side::Up)).ok);
    EXPECT_FALSE(validate(S({0}, Side::Up)).ok);
    EXPECT_FALSE(validate(MeanderShape{2, {1}, Side::Up}).ok);
}

TEST(Shape, ChordsFollowTheCurve) {
    auto s = S({3, 2, 1}, Side::Up);
    EXPECT_EQ(s.chord(0).span, (Interval{0, 3}));
    EXPECT_EQ(s.chord(0).side, Side::Up);
    EXPECT_EQ(s.chord(1).span, (Interval{2, 3}));
    EXPECT_EQ(s.chord(1).side, Side::Down);
    EXPECT_EQ(s.chord(3).span, (Interval{1, 4}));
    EXPECT_EQ(s.last_side(), Side::Down);
}

TEST(Enumeration, SmallCounts) {
    EXPECT_EQ(enumerate_shapes(1, Side::Up).size(), 1u);
    EXPECT_EQ(enumerate_shapes(2, Side::Up).size(), 1u);
    EXPECT_EQ(enumerate_shapes(3, Side::Up).size(), 2u);
    auto three = enumerate_shapes(3, Side::Up);
    EXPECT_EQ(three[0].perm, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(three[1].perm, (std::vector<int>{3, 2, 1}));
}

TEST(Enumeration, EveryShapeValidAndDistinct) {
    for (int n = 1; n <= 7; ++n)
        for (Side s0 : {Side::Up, Side::Down}) {
            auto v = enumerate_shapes(n, s0);
            for (std::size_t i = 0; i < v.size(); ++i) {
                EXPECT_TRUE(validate(v[i]).ok);
                if (i)
                    EXPECT_LT(v[i - 1].perm, v[i].perm); // lexicographic, hence distinct
            }
        }
}

TEST(Enumeration, RespectsLimit) {
    EXPECT_THROW(enumerate_shapes(5, Side::Up, 4), ResourceLimit);
    ::setenv("MEANDER_MAX_N", "3", 1);
    EXPECT_EQ(enumeration_limit(), 3);
    EXPECT_THROW(enumerate_shapes(4, Side::Up), ResourceLimit);
    ::unsetenv("MEANDER_MAX_N");
    EXPECT_EQ(enumeration_limit(), 12);
}

TEST(Faces, CountAndSegments) {
    for (int n = 1; n <= 6; ++n)
        for (const auto &s : enumerate_shapes(n, Side::Up)) {
            auto fs = build_faces(s);
            ASSERT_EQ(static_cast<int>(fs.faces.size()), n + 3);
            for (int k = 0; k <= n; ++k) {
                EXPECT_EQ(fs.faces[fs.up_face[k]].side, Side::Up);
                EXPECT_EQ(fs.faces[fs.down_face[k]].side, Side::Down);
            }
            for (const auto &f : fs.faces)
                EXPECT_FALSE(f.segments.empty()); // every face touches L0
        }
}

TEST(Faces, BelowCurveOfThreeTwoOne) {
    auto fs = build_faces(S({3, 2, 1}, Side::Up));
    std::vector<std::string> below;
    for (const auto &f : fs.faces)
        if (f.below_curve)
            below.push_back(to_string(f.id));
    EXPECT_EQ(below, (std::vector<std::string>{"arc:0", "arc:1", "outer:-"}));
}

TEST(Faces, DepthCountsEnclosingArcs) {
    auto fs = build_faces(S({3, 2, 1}, Side::Up));
    EXPECT_EQ(fs.faces[0].depth, 1); // Up (0,3)
    EXPECT_EQ(fs.faces[2].depth, 2); // Up (1,2) inside (0,3)
    EXPECT_EQ(fs.faces[2].parent, 0);
    EXPECT_EQ(fs.faces[4].depth, 0); // outer:+
}

TEST(Meander, AssignAreasSatisfiesInvariants) {
    for (int n = 1; n <= 6; ++n)
        for (Side s0 : {Side::Up, Side::Down})
            for (const auto &s : enumerate_shapes(n, s0))
                for (std::uint64_t seed : {0u, 1u, 7u}) {
                    auto m = assign_areas(s, seed, 1000);
                    auto report = check_meander(m);
                    EXPECT_TRUE(report.ok) << describe(s) << ": " << report.violations.front();
                }
}

TEST(Meander, AssignAreasIsDeterministic) {
    auto s = S({3, 2, 1}, Side::Up);
    EXPECT_EQ(assign_areas(s, 42, 100), assign_areas(s, 42, 100));
}

TEST(Meander, SingleCrossingHasEqualBumps) {
    for (std::uint64_t seed : {0u, 1u, 2u, 3u}) {
        auto m = assign_areas(S({1}, Side::Up), seed, 50);
        EXPECT_EQ(m.area(FaceId::of_arc(0)), m.area(FaceId::of_arc(1)));
    }
}

TEST(Meander, InvariantViolationsAreReported) {
    Meander m{S({1}, Side::Up), {R(1, 4), R(1, 4), R(1, 4), R(1, 4)}};
    EXPECT_TRUE(check_meander(m).ok);
    m.areas[0] = R(1, 8);
    EXPECT_FALSE(check_meander(m).ok);
    m.areas = {R(0, 1), R(0, 1), R(1, 2), R(1, 2)};
    EXPECT_FALSE(check_meander(m).ok); // positivity
}

TEST(Symmetry, HFlipOfOneTwoIsItself) {
    auto s = S({1, 2}, Side::Up);
    EXPECT_EQ(apply_symmetry(s, SymmetryTransform::HFlip), s);
}

TEST(Symmetry, VFlipOnlyFlipsTheSide) {
    auto s = S({3, 2, 1}, Side::Up);
    EXPECT_EQ(apply_symmetry(s, SymmetryTransform::VFlip), S({3, 2, 1}, Side::Down));
}

TEST(Symmetry, HFlipReflectsPositions) {
    // p'_k = N+1 - p_{N+1-k}, s0' = side of the last arc
    auto s = S({1, 4, 3, 2}, Side::Up);
    auto h = apply_symmetry(s, SymmetryTransform::HFlip);
    EXPECT_EQ(h.perm, (std::vector<int>{3, 2, 1, 4}));
    EXPECT_EQ(h.s0, s.last_side());
}

TEST(Symmetry, MeanderInvariantsSurvive) {
    for (int n = 1; n <= 6; ++n)
        for (const auto &s : enumerate_shapes(n, Side::Down)) {
            auto m = assign_areas(s, 3, 97);
            for (auto t : {SymmetryTransform::VFlip, SymmetryTransform::HFlip, SymmetryTransform::RotPi}) {
                auto img = apply_symmetry(m, t);
                EXPECT_TRUE(check_meander(img).ok);
                EXPECT_EQ(apply_symmetry(img, t), m);
                // each face's area follows its image
                for (int f = 0; f < face_count(n); ++f)
                    EXPECT_EQ(img.areas[symmetry_face_image(f, n, t)], m.areas[f]);
            }
        }
}

TEST(Serialization, RoundTrip) {
    for (int n = 1; n <= 5; ++n)
        for (const auto &s : enumerate_shapes(n, Side::Up)) {
            auto m = assign_areas(s, 11, 1000);
            auto text = serialize(m);
            EXPECT_EQ(parse(text), m);
            EXPECT_EQ(serialize(parse(text)), text);
        }
}

TEST(Serialization, CanonicalForm) {
    Meander m{S({1}, Side::Up), {R(1, 4), R(2, 8), R(1, 4), R(1, 4)}};
    EXPECT_EQ(serialize(m), "meander v1\nn 1\ns0 +\nperm 1\nface arc:0 1/4\nface arc:1 1/4\n"
                            "face outer:+ 1/4\nface outer:- 1/4\n");
}

TEST(Serialization, FaceOrderAndCommentsAreFree) {
    auto m = parse("# comment\nmeander v1\nn 1\ns0 -\nperm 1\nface outer:- 1/4\nface arc:1 1/4  # trailing\n"
                   "face outer:+ 1/4\nface arc:0 1/4\n");
    EXPECT_EQ(m.shape.s0, Side::Down);
    EXPECT_EQ(m.areas[3], R(1, 4));
}

TEST(Serialization, Errors) {
    auto kind_of = [](const std::string &text) {
        try {
            parse(text);
        } catch (const ParseError &e) {
            return std::make_pair(e.kind(), e.line());
        }
        return std::make_pair(ParseError::Kind::Syntax, -1);
    };
    const std::string head = "meander v1\nn 1\ns0 +\nperm 1\n";
    EXPECT_EQ(kind_of("meander v2\n"), std::make_pair(ParseError::Kind::Syntax, 1));
    EXPECT_EQ(kind_of("meander v1\nn x\n").second, 2);
    EXPECT_EQ(kind_of(head + "face arc:0 1/4\n").first, ParseError::Kind::Syntax); // missing faces
    EXPECT_EQ(kind_of(head + "face arc:0 0.25\nface arc:1 1/4\nface outer:+ 1/4\nface outer:- 1/4\n"),
              std::make_pair(ParseError::Kind::Syntax, 5));
    EXPECT_EQ(kind_of(head + "face arc:0 1/4\nface arc:1 1/4\nface outer:+ 1/4\nface outer:- 1/8\n").first,
              ParseError::Kind::Invariant);
    EXPECT_EQ(kind_of("meander v1\nn 2\ns0 +\nperm 2 1\nface arc:0 1/4\nface arc:1 1/4\nface arc:2 1/4\n"
                      "face outer:+ 1/8\nface outer:- 1/8\n")
                  .first,
              ParseError::Kind::Invariant);
}

TEST(Serialization, ShapeOnlyFiles) {
    EXPECT_EQ(parse_shape("meander v1\nn 3\ns0 +\nperm 3 2 1\n"), S({3, 2, 1}, Side::Up));
    EXPECT_THROW(parse_shape("meander v1\nn 2\ns0 +\nperm 2 1\n"), ParseError);
}

TEST(Rational, TextForm) {
    EXPECT_EQ(to_string(R(2, 4)), "1/2");
    EXPECT_EQ(to_string(Rational(3)), "3/1");
    EXPECT_EQ(to_string(R(-1, 3)), "-1/3");
    EXPECT_EQ(parse_rational("6/8"), R(3, 4));
    EXPECT_FALSE(parse_rational("1/0"));
    EXPECT_FALSE(parse_rational("1.5"));
    EXPECT_FALSE(parse_rational("3"));
}
