#pragma once

#include "meander/faces.hpp"
#include "meander/rational.hpp"
#include "meander/shape.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace meander {

/// A combinatorial diameter: shape plus the exact area of every face.
/// Areas are indexed densely by FaceId::index.
struct Meander {
    MeanderShape shape;
    std::vector<Rational> areas;

    int n() const { return shape.n; }
    const Rational &area(const FaceId &f) const { return areas[f.index(shape.n)]; }
    Rational &area(const FaceId &f) { return areas[f.index(shape.n)]; }

    friend bool operator==(const Meander &, const Meander &) = default;
};

inline const Rational &half() {
    static const Rational h(1, 2);
    return h;
}

/// Checks shape validity and the area invariants: positivity, total 1,
/// each half-disk 1/2, and area below L equal to 1/2.
inline ValidationReport check_meander(const Meander &m) {
    ValidationReport report = validate(m.shape);
    if (!report.ok)
        return report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    if (static_cast<int>(m.areas.size()) != face_count(m.n())) {
        fail("expected " + std::to_string(face_count(m.n())) + " face areas");
        return report;
    }
    auto fs = build_faces(m.shape);
    Rational total, up, below;
    for (int i = 0; i < face_count(m.n()); ++i) {
        const auto &a = m.areas[i];
        if (a <= 0)
            fail("face " + to_string(fs.faces[i].id) + " has non-positive area " + to_string(a));
        total += a;
        if (fs.faces[i].side == Side::Up)
            up += a;
        if (fs.faces[i].below_curve)
            below += a;
    }
    if (total != 1)
        fail("total area is " + to_string(total) + ", expected 1/1");
    if (up != half())
        fail("Up faces sum to " + to_string(up) + ", expected 1/2");
    if (total - up != half())
        fail("Down faces sum to " + to_string(total - up) + ", expected 1/2");
    if (below != half())
        fail("faces below L sum to " + to_string(below) + ", expected 1/2");
    return report;
}

/// Deterministic random area assignment. Raw weights are drawn in
/// 1..granularity; the four (half-disk x L-side) groups are rescaled to
/// masses t, 1/2-t, 1/2-t, t so that every area invariant holds.
inline Meander assign_areas(const MeanderShape &shape, std::uint64_t seed, std::int64_t granularity) {
    if (granularity < 1)
        throw PreconditionViolated("assign_areas: granularity must be positive");
    auto report = validate(shape);
    if (!report.ok)
        throw PreconditionViolated("assign_areas: invalid shape: " + report.violations.front());

    auto fs = build_faces(shape);
    const int count = face_count(shape.n);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Rational> raw(count);
    for (int i = 0; i < count; ++i)
        raw[i] = Rational(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(granularity)),
                          granularity);

    // group: 0 Up-below, 1 Up-above, 2 Down-below, 3 Down-above
    auto group_of = [&](int i) {
        const auto &f = fs.faces[i];
        return (f.side == Side::Up ? 0 : 2) + (f.below_curve ? 0 : 1);
    };
    Rational sums[4];
    for (int i = 0; i < count; ++i)
        sums[group_of(i)] += raw[i];
    for (const auto &s : sums)
        if (s == 0)
            throw PreconditionViolated("assign_areas: an area group is empty");

    Rational all = sums[0] + sums[1] + sums[2] + sums[3];
    Rational t = (sums[0] + sums[3]) / (2 * all);
    const Rational target[4] = {t, half() - t, half() - t, t};

    Meander m{shape, std::vector<Rational>(count)};
    for (int i = 0; i < count; ++i) {
        int g = group_of(i);
        m.areas[i] = raw[i] * target[g] / sums[g];
    }
    return m;
}

enum class SymmetryTransform { VFlip, HFlip, RotPi };

inline MeanderShape apply_symmetry(const MeanderShape &s, SymmetryTransform t) {
    switch (t) {
    case SymmetryTransform::VFlip:
        return {s.n, s.perm, opposite(s.s0)};
    case SymmetryTransform::HFlip: {
        MeanderShape out{s.n, std::vector<int>(s.n), s.last_side()};
        for (int k = 1; k <= s.n; ++k)
            out.perm[k - 1] = s.n + 1 - s.perm[s.n - k];
        return out;
    }
    case SymmetryTransform::RotPi:
        return apply_symmetry(apply_symmetry(s, SymmetryTransform::HFlip), SymmetryTransform::VFlip);
    }
    return s;
}

/// Where face `idx` of the source goes under transform t.
inline int symmetry_face_image(int idx, int n, SymmetryTransform t) {
    auto f = FaceId::from_index(idx, n);
    bool flip_sides = t != SymmetryTransform::HFlip;
    bool reverse = t != SymmetryTransform::VFlip;
    if (f.kind == FaceId::Kind::Arc)
        return reverse ? n - f.arc : f.arc;
    return FaceId::outer(flip_sides ? opposite(f.side) : f.side).index(n);
}

/// Reflections of the disk: VFlip swaps the half-disks, HFlip reverses L0
/// and the traversal of L, RotPi is their composition. Areas are carried
/// with the faces.
inline Meander apply_symmetry(const Meander &m, SymmetryTransform t) {
    Meander out{apply_symmetry(m.shape, t), std::vector<Rational>(m.areas.size())};
    for (int i = 0; i < face_count(m.n()); ++i)
        out.areas[symmetry_face_image(i, m.n(), t)] = m.areas[i];
    return out;
}

/// Image of an L0 position under a transform (anchors swap under HFlip).
inline int symmetry_position_image(int pos, int n, SymmetryTransform t) {
    return t == SymmetryTransform::VFlip ? pos : n + 1 - pos;
}

} // namespace meander
