#pragma once

#include "meander/maslov.hpp"
#include "meander/meander.hpp"

#include <algorithm>
#include <vector>

namespace meander {

/// Half-disk region cut out by one arc and L0: the arc's roof face and all
/// faces nested inside it.
struct Region {
    int arc = -1;
    std::vector<int> faces; // dense face indices, ascending
    Interval interval;
    Side side = Side::Up;
    Rational area;

    bool contains_point(int position) const { return interval.contains(position); }
    /// Both delimiting points strictly left of `position`.
    bool left_of(int position) const { return interval.right < position; }

    bool contains(const Region &o) const {
        return side == o.side && std::includes(faces.begin(), faces.end(), o.faces.begin(), o.faces.end());
    }
    bool disjoint(const Region &o) const {
        for (int f : o.faces)
            if (std::binary_search(faces.begin(), faces.end(), f))
                return false;
        return true;
    }
};

inline Region region_of_arc(const Meander &m, const FaceStructure &fs, int arc) {
    Region r;
    r.arc = arc;
    r.faces = fs.region_faces(arc);
    r.interval = fs.faces[arc].span;
    r.side = fs.faces[arc].side;
    for (int f : r.faces)
        r.area += m.areas[f];
    return r;
}

enum class SideClass { Minus, Plus };
enum class Extremum { AtMin, AtMax };

/// An intersection point of extremal index together with its two flanking
/// regions. The small one (ties go to the Down region) carries the weight.
struct ExtremalPointInfo {
    int crossing = 0; // index along L
    int position = 0; // position on L0
    Region small;
    Region large;
    Rational weight;
    SideClass side_class = SideClass::Minus;
};

struct ExtremalClassification {
    int target_index = 0;
    std::vector<ExtremalPointInfo> points; // sorted left to right on L0
    std::vector<ExtremalPointInfo> m_minus;
    std::vector<ExtremalPointInfo> m_plus;
};

inline ExtremalPointInfo describe_extremal_point(const Meander &m, const FaceStructure &fs, int crossing) {
    const int n = m.n();
    if (crossing <= 1 || crossing >= n)
        throw NeighborMissing("extremal point x_" + std::to_string(crossing) +
                              " has no neighbor on L (input is not normalized)");
    ExtremalPointInfo info;
    info.crossing = crossing;
    info.position = m.shape.perm[crossing - 1];
    Region before = region_of_arc(m, fs, crossing - 1);
    Region after = region_of_arc(m, fs, crossing);
    const Region &down = before.side == Side::Down ? before : after;
    const Region &up = before.side == Side::Down ? after : before;
    if (up.area < down.area) {
        info.small = up;
        info.large = down;
    } else {
        info.small = down;
        info.large = up;
    }
    info.weight = info.small.area;
    info.side_class = info.small.side == Side::Down ? SideClass::Minus : SideClass::Plus;
    return info;
}

/// Classifies every crossing whose index equals `level`.
inline ExtremalClassification classify_at_level(const Meander &m, int level) {
    auto table = maslov_indices(m);
    auto fs = build_faces(m.shape);
    ExtremalClassification out;
    out.target_index = level;
    auto at = m.shape.crossing_at_position();
    for (int pos = 1; pos <= m.n(); ++pos) {
        int c = at[pos];
        if (table.at(c) != level)
            continue;
        auto info = describe_extremal_point(m, fs, c);
        out.points.push_back(info);
        (info.side_class == SideClass::Minus ? out.m_minus : out.m_plus).push_back(info);
    }
    return out;
}

inline ExtremalClassification classify_extremal(const Meander &m, Extremum which) {
    auto table = maslov_indices(m);
    return classify_at_level(m, which == Extremum::AtMin ? table.mu_min : table.mu_max);
}

} // namespace meander
