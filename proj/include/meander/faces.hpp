#pragma once

#include "meander/shape.hpp"

#include <compare>
#include <string>
#include <vector>

namespace meander {

/// Name of a component of D minus (L union L0). Arc(i) is the face roofed by
/// arc i; the two outer faces touch the boundary circle.
struct FaceId {
    enum class Kind { Arc, Outer };
    Kind kind = Kind::Arc;
    int arc = 0;             // for Arc
    Side side = Side::Up;    // for Outer

    static FaceId of_arc(int i) { return {Kind::Arc, i, Side::Up}; }
    static FaceId outer(Side s) { return {Kind::Outer, 0, s}; }

    /// Dense index in canonical order: arcs 0..N, then Outer(+), Outer(-).
    int index(int n) const {
        if (kind == Kind::Arc)
            return arc;
        return side == Side::Up ? n + 1 : n + 2;
    }

    static FaceId from_index(int idx, int n) {
        if (idx <= n)
            return of_arc(idx);
        return outer(idx == n + 1 ? Side::Up : Side::Down);
    }

    friend bool operator==(const FaceId &a, const FaceId &b) {
        return a.kind == b.kind && (a.kind == Kind::Arc ? a.arc == b.arc : a.side == b.side);
    }
};

inline std::string to_string(const FaceId &f) {
    if (f.kind == FaceId::Kind::Arc)
        return "arc:" + std::to_string(f.arc);
    return std::string("outer:") + side_char(f.side);
}

inline int face_count(int n) { return n + 3; }

struct FaceInfo {
    FaceId id;
    Side side = Side::Up;
    int depth = 0;          // 1 + number of same-side arcs enclosing the roof; outer faces 0
    bool below_curve = false;
    int parent = -1;        // dense index of the enclosing face, -1 for outer faces
    Interval span;          // roof chord; [0, N+1] for outer faces
    std::vector<int> segments; // L0 unit segments (k, k+1) this face touches
};

/// Face decomposition of a shape. Segment k is the piece of L0 between
/// positions k and k+1, for k = 0..N; it has one face above and one below.
struct FaceStructure {
    int n = 0;
    std::vector<FaceInfo> faces;
    std::vector<int> up_face;   // per segment
    std::vector<int> down_face; // per segment

    const FaceInfo &face(int idx) const { return faces[idx]; }
    int face_on(Side s, int segment) const {
        return s == Side::Up ? up_face[segment] : down_face[segment];
    }

    /// Faces of the region under arc `arc`: its roof plus everything nested inside.
    std::vector<int> region_faces(int arc) const {
        const auto &roof = faces[arc];
        std::vector<int> out;
        for (int i = 0; i <= n; ++i)
            if (faces[i].side == roof.side && roof.span.contains(faces[i].span))
                out.push_back(i);
        return out;
    }
};

/// Builds the face structure: nesting, depth, below-L side and L0 contacts.
/// A face is below L iff it is Up with odd depth or Down with even depth.
inline FaceStructure build_faces(const MeanderShape &shape) {
    const int n = shape.n;
    FaceStructure fs;
    fs.n = n;
    fs.faces.resize(face_count(n));
    auto chords = shape.chords();

    for (int i = 0; i <= n; ++i) {
        auto &f = fs.faces[i];
        f.id = FaceId::of_arc(i);
        f.side = chords[i].side;
        f.span = chords[i].span;
        f.depth = 1;
        int best = -1;
        for (int j = 0; j <= n; ++j) {
            if (j == i || chords[j].side != f.side)
                continue;
            const auto &o = chords[j].span;
            if (o.left < f.span.left && f.span.right < o.right) {
                ++f.depth;
                if (best < 0 || chords[best].span.contains(o))
                    best = j;
            }
        }
        f.parent = best >= 0 ? best : FaceId::outer(f.side).index(n);
    }
    for (Side s : {Side::Up, Side::Down}) {
        auto &f = fs.faces[FaceId::outer(s).index(n)];
        f.id = FaceId::outer(s);
        f.side = s;
        f.depth = 0;
        f.parent = -1;
        f.span = {0, n + 1};
    }
    for (auto &f : fs.faces)
        f.below_curve = f.side == Side::Up ? (f.depth % 2 == 1) : (f.depth % 2 == 0);

    fs.up_face.assign(n + 1, -1);
    fs.down_face.assign(n + 1, -1);
    for (int k = 0; k <= n; ++k) {
        for (Side s : {Side::Up, Side::Down}) {
            int best = FaceId::outer(s).index(n);
            for (int j = 0; j <= n; ++j) {
                if (chords[j].side != s)
                    continue;
                const auto &c = chords[j].span;
                if (c.left <= k && k + 1 <= c.right &&
                    (best > n || chords[best].span.contains(c)))
                    best = j;
            }
            (s == Side::Up ? fs.up_face : fs.down_face)[k] = best;
            fs.faces[best].segments.push_back(k);
        }
    }
    return fs;
}

} // namespace meander
