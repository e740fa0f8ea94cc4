#pragma once

#include "meander/errors.hpp"
#include "meander/meander.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace meander {

/// What became of an old face after a rewrite.
struct FaceFate {
    enum class Kind { Kept, Merged, Transported };
    Kind kind = Kind::Kept;
    int new_face = -1;
};

inline const char *fate_name(FaceFate::Kind k) {
    switch (k) {
    case FaceFate::Kind::Kept:
        return "kept";
    case FaceFate::Kind::Merged:
        return "merged";
    case FaceFate::Kind::Transported:
        return "transported";
    }
    return "?";
}

/// Area moved across L0 segment `segment`, out of `face` into the face on
/// the other side of that segment.
struct Flux {
    int face = -1;
    int segment = -1;
    Rational amount;
};

/// Result of a combinatorial rewrite plus the bookkeeping needed to relate
/// old and new faces and positions.
struct Rewrite {
    Meander result;
    std::vector<FaceFate> audit;     // old face -> fate
    std::vector<int> position_map;   // old position -> new position, -1 if removed
    std::vector<int> removed;        // removed old positions, ascending
};

inline Rewrite identity_rewrite(const Meander &m) {
    Rewrite r;
    r.result = m;
    r.audit.resize(face_count(m.n()));
    for (int i = 0; i < face_count(m.n()); ++i)
        r.audit[i] = {FaceFate::Kind::Kept, i};
    r.position_map.resize(m.n() + 2);
    std::iota(r.position_map.begin(), r.position_map.end(), 0);
    return r;
}

/// second after first.
inline Rewrite compose(const Rewrite &first, const Rewrite &second) {
    Rewrite r;
    r.result = second.result;
    r.audit.resize(first.audit.size());
    for (std::size_t i = 0; i < first.audit.size(); ++i) {
        const auto &a = first.audit[i];
        const auto &b = second.audit[a.new_face];
        bool ta = a.kind == FaceFate::Kind::Transported;
        bool tb = b.kind == FaceFate::Kind::Transported;
        FaceFate::Kind kind = FaceFate::Kind::Kept;
        if (ta != tb)
            kind = FaceFate::Kind::Transported;
        else if (ta || a.kind == FaceFate::Kind::Merged || b.kind == FaceFate::Kind::Merged)
            kind = FaceFate::Kind::Merged;
        r.audit[i] = {kind, b.new_face};
    }
    r.position_map.resize(first.position_map.size());
    for (std::size_t p = 0; p < first.position_map.size(); ++p) {
        int mid = first.position_map[p];
        r.position_map[p] = mid < 0 ? -1 : second.position_map[mid];
        if (r.position_map[p] < 0 && p != 0)
            r.removed.push_back(static_cast<int>(p));
    }
    return r;
}

/// Moves area across L0. Each flux must leave its source face positive.
inline Meander apply_fluxes(const Meander &m, const FaceStructure &fs, const std::vector<Flux> &fluxes) {
    Meander out = m;
    for (const auto &f : fluxes) {
        Side s = fs.faces[f.face].side;
        if (fs.face_on(s, f.segment) != f.face)
            throw AssertionFailure("flux: face " + to_string(fs.faces[f.face].id) +
                                   " does not touch segment " + std::to_string(f.segment));
        int target = fs.face_on(opposite(s), f.segment);
        out.areas[f.face] -= f.amount;
        out.areas[target] += f.amount;
    }
    for (std::size_t i = 0; i < out.areas.size(); ++i)
        if (out.areas[i] <= 0)
            throw AssertionFailure("flux leaves face " + to_string(fs.faces[i].id) +
                                   " with non-positive area " + to_string(out.areas[i]));
    return out;
}

/// Splits `total` over `faces` in proportion to their current areas; each
/// share crosses L0 at the first segment its face touches.
inline std::vector<Flux> proportional_fluxes(const Meander &m, const FaceStructure &fs,
                                             const std::vector<int> &faces, const Rational &total) {
    Rational pool;
    for (int f : faces)
        pool += m.areas[f];
    if (total >= pool)
        throw AssertionFailure("flux of " + to_string(total) + " exceeds available area " +
                               to_string(pool));
    std::vector<Flux> out;
    for (int f : faces)
        out.push_back({f, fs.faces[f].segments.front(), total * m.areas[f] / pool});
    return out;
}

namespace detail {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};
} // namespace detail

/// Pushes the region under `arc` whole into the opposite half-disk. Every
/// crossing inside the region's footprint disappears; L0 segments strictly
/// inside the footprint stop separating faces, and the two segments flanking
/// it become one. Areas are carried by the merged face classes.
inline Rewrite transport_region(const Meander &m, int arc) {
    const int n = m.n();
    const auto fs = build_faces(m.shape);
    const Interval span = fs.faces[arc].span;
    if (span.left < 1 || span.right > n)
        throw AssertionFailure("cannot transport a region touching an anchor");

    std::vector<bool> gone(n + 2, false);
    for (int p = span.left; p <= span.right; ++p)
        gone[p] = true;

    // survivors along L; removed runs between survivors must be even
    std::vector<int> survivors;
    int run = 0;
    for (int i = 1; i <= n; ++i) {
        if (gone[m.shape.perm[i - 1]]) {
            ++run;
            continue;
        }
        if (run % 2)
            throw AssertionFailure("odd run of removed crossings along L");
        run = 0;
        survivors.push_back(i);
    }
    if (run % 2)
        throw AssertionFailure("odd run of removed crossings at the end of L");
    if (survivors.empty())
        throw AssertionFailure("transport would remove every crossing");

    Rewrite rw;
    rw.position_map.assign(n + 2, -1);
    int next = 0;
    rw.position_map[0] = 0;
    for (int p = 1; p <= n; ++p) {
        if (gone[p])
            rw.removed.push_back(p);
        else
            rw.position_map[p] = ++next;
    }
    const int n2 = next;
    rw.position_map[n + 1] = n2 + 1;

    MeanderShape shape2{n2, {}, m.shape.s0};
    for (int i : survivors)
        shape2.perm.push_back(rw.position_map[m.shape.perm[i - 1]]);
    auto report = validate(shape2);
    if (!report.ok)
        throw AssertionFailure("spliced shape is not planar: " + report.violations.front());

    auto new_segment = [&](int k) {
        int c = 0;
        for (int p = 1; p <= k; ++p)
            c += gone[p] ? 0 : 1;
        return c;
    };
    auto erased = [&](int k) { return span.left <= k && k < span.right; };

    detail::UnionFind uf(face_count(n));
    std::map<int, std::vector<int>> by_new_segment;
    for (int k = 0; k <= n; ++k) {
        if (erased(k))
            uf.unite(fs.up_face[k], fs.down_face[k]);
        else
            by_new_segment[new_segment(k)].push_back(k);
    }
    for (const auto &[j, olds] : by_new_segment)
        for (std::size_t t = 1; t < olds.size(); ++t) {
            uf.unite(fs.up_face[olds[0]], fs.up_face[olds[t]]);
            uf.unite(fs.down_face[olds[0]], fs.down_face[olds[t]]);
        }

    const auto fs2 = build_faces(shape2);
    std::map<int, int> class_to_new;
    for (int f2 = 0; f2 < face_count(n2); ++f2) {
        int cls = -1;
        for (int j : fs2.faces[f2].segments) {
            for (int k : by_new_segment[j]) {
                int c = uf.find(fs.face_on(fs2.faces[f2].side, k));
                if (cls >= 0 && c != cls)
                    throw AssertionFailure("new face " + to_string(fs2.faces[f2].id) +
                                           " collects two old face classes");
                cls = c;
            }
        }
        if (cls < 0 || class_to_new.count(cls))
            throw AssertionFailure("face correspondence is not a bijection");
        class_to_new[cls] = f2;
    }

    std::vector<int> class_size(face_count(n), 0);
    for (int f = 0; f < face_count(n); ++f)
        ++class_size[uf.find(f)];

    rw.result.shape = shape2;
    rw.result.areas.assign(face_count(n2), Rational(0));
    rw.audit.resize(face_count(n));
    for (int f = 0; f < face_count(n); ++f) {
        auto it = class_to_new.find(uf.find(f));
        if (it == class_to_new.end())
            throw AssertionFailure("old face " + to_string(fs.faces[f].id) + " has no image");
        int f2 = it->second;
        FaceFate::Kind kind = FaceFate::Kind::Merged;
        if (fs.faces[f].side != fs2.faces[f2].side)
            kind = FaceFate::Kind::Transported;
        else if (class_size[uf.find(f)] == 1)
            kind = FaceFate::Kind::Kept;
        rw.audit[f] = {kind, f2};
        rw.result.areas[f2] += m.areas[f];
    }
    return rw;
}

/// Arc of `shape` whose chord is exactly `span` on side `side`, or -1.
inline int find_arc(const MeanderShape &shape, const Interval &span, Side side) {
    for (int i = 0; i <= shape.n; ++i) {
        auto c = shape.chord(i);
        if (c.side == side && c.span == span)
            return i;
    }
    return -1;
}

} // namespace meander
