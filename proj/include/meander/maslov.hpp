#pragma once

#include "meander/meander.hpp"

#include <algorithm>
#include <vector>

namespace meander {

/// Maslov indices of x_1..x_N with the convention mu(x_1) = 0.
struct IndexTable {
    std::vector<int> mu;
    int mu_max = 0;
    int mu_min = 0;
    int gap = 0;

    int at(int crossing) const { return mu[crossing - 1]; }
};

/// Index step across arc i (1 <= i < N), from x_i to x_{i+1}:
/// +1 if the arc lies in D- and moves right, or lies in D+ and moves left.
inline int index_step(const MeanderShape &s, int arc) {
    bool rightward = s.perm[arc - 1] < s.perm[arc];
    bool down = s.arc_side(arc) == Side::Down;
    return (down == rightward) ? 1 : -1;
}

inline IndexTable maslov_indices(const MeanderShape &s) {
    IndexTable t;
    t.mu.resize(s.n);
    t.mu[0] = 0;
    for (int i = 1; i < s.n; ++i)
        t.mu[i] = t.mu[i - 1] + index_step(s, i);
    auto [lo, hi] = std::minmax_element(t.mu.begin(), t.mu.end());
    t.mu_min = *lo;
    t.mu_max = *hi;
    t.gap = t.mu_max - t.mu_min;
    return t;
}

inline IndexTable maslov_indices(const Meander &m) { return maslov_indices(m.shape); }

/// Index gap mu(x_j) - mu(x_i) from the lift of the tangent-line loop.
///
/// Each arc is realized as a semicircle over its chord, so L is vertical at
/// every crossing and the closing path of lines transverse to L0 can be the
/// constant vertical line. The tangent line turns by exactly half a turn on
/// each semicircle; its sign is the orientation of the traversal around the
/// semicircle's center, read off the cross product of (start - center) with
/// (apex - center). Everything is done in integers (coordinates doubled).
inline int winding_gap_oracle(const MeanderShape &s, int i, int j) {
    auto half_turns = [&](int arc, bool forward) {
        int from = s.point_position(forward ? arc : arc + 1);
        int to = s.point_position(forward ? arc + 1 : arc);
        long twice_center = static_cast<long>(from) + to;
        long radius2 = std::abs(static_cast<long>(to) - from); // doubled radius
        long apex_y = s.arc_side(arc) == Side::Up ? radius2 : -radius2;
        long start_x = 2L * from - twice_center;
        // cross((start_x, 0), (0, apex_y)) = start_x * apex_y
        long cross = start_x * apex_y;
        return cross > 0 ? 1 : -1;
    };
    int total = 0;
    if (j >= i) {
        for (int arc = i; arc < j; ++arc)
            total += half_turns(arc, true);
    } else {
        for (int arc = i - 1; arc >= j; --arc)
            total += half_turns(arc, false);
    }
    return total;
}

} // namespace meander
