#pragma once

#include "meander/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace meander {

/// Half-disk: Up is D+, Down is D-.
enum class Side { Up, Down };

constexpr Side opposite(Side s) noexcept { return s == Side::Up ? Side::Down : Side::Up; }
constexpr char side_char(Side s) noexcept { return s == Side::Up ? '+' : '-'; }
inline const char *side_name(Side s) noexcept { return s == Side::Up ? "Up" : "Down"; }

/// Closed interval of L0 positions; anchors are 0 and N+1.
struct Interval {
    int left = 0;
    int right = 0;

    bool contains(int p) const noexcept { return left <= p && p <= right; }
    bool strictly_contains(int p) const noexcept { return left < p && p < right; }
    bool contains(const Interval &o) const noexcept { return left <= o.left && o.right <= right; }
    friend bool operator==(const Interval &, const Interval &) = default;
};

/// Chord of arc i, the piece of L between the i-th and (i+1)-th point (anchors included).
struct Chord {
    int arc = 0;
    Side side = Side::Up;
    Interval span;
};

/// Combinatorial type of a diameter transverse to L0: the L0 position of
/// each crossing in the order met along L, plus the side of the first arc.
struct MeanderShape {
    int n = 0;
    std::vector<int> perm; // perm[i-1] = L0 position of crossing x_i
    Side s0 = Side::Up;

    friend bool operator==(const MeanderShape &, const MeanderShape &) = default;

    /// Position of the i-th point along L, with i = 0 and i = N+1 the anchors.
    int point_position(int i) const { return i == 0 ? 0 : (i == n + 1 ? n + 1 : perm[i - 1]); }

    Side arc_side(int arc) const { return arc % 2 == 0 ? s0 : opposite(s0); }
    Side last_side() const { return arc_side(n); }

    Chord chord(int arc) const {
        int a = point_position(arc);
        int b = point_position(arc + 1);
        return {arc, arc_side(arc), {std::min(a, b), std::max(a, b)}};
    }

    std::vector<Chord> chords() const {
        std::vector<Chord> out;
        out.reserve(n + 1);
        for (int i = 0; i <= n; ++i)
            out.push_back(chord(i));
        return out;
    }

    /// Index along L (1..N) of the crossing at each L0 position; slot 0 unused.
    std::vector<int> crossing_at_position() const {
        std::vector<int> at(n + 2, 0);
        for (int i = 1; i <= n; ++i)
            at[perm[i - 1]] = i;
        return at;
    }
};

inline std::string describe(const MeanderShape &s) {
    std::string out = "(";
    for (int i = 0; i < s.n; ++i) {
        if (i)
            out += ",";
        out += std::to_string(s.perm[i]);
    }
    out += ";";
    out += side_name(s.s0);
    out += ")";
    return out;
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

namespace detail {
constexpr bool interleave(const Interval &a, const Interval &b) noexcept {
    return (a.left < b.left && b.left < a.right && a.right < b.right) ||
           (b.left < a.left && a.left < b.right && b.right < a.right);
}

inline std::string chord_text(const Interval &c) {
    return "(" + std::to_string(c.left) + "," + std::to_string(c.right) + ")";
}
} // namespace detail

/// Checks that the crossing data is realizable by a simple curve: perm is a
/// permutation and the chords on each side are pairwise non-interleaving.
inline ValidationReport validate(const MeanderShape &shape) {
    ValidationReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    if (shape.n < 1) {
        fail("crossing count must be at least 1");
        return report;
    }
    if (static_cast<int>(shape.perm.size()) != shape.n) {
        fail("perm has " + std::to_string(shape.perm.size()) + " entries, expected " +
             std::to_string(shape.n));
        return report;
    }
    std::vector<bool> seen(shape.n + 1, false);
    for (int p : shape.perm) {
        if (p < 1 || p > shape.n || seen[p]) {
            fail("perm is not a permutation of 1.." + std::to_string(shape.n));
            return report;
        }
        seen[p] = true;
    }
    auto chords = shape.chords();
    for (std::size_t i = 0; i < chords.size() && report.ok; ++i) {
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            if (chords[i].side == chords[j].side &&
                detail::interleave(chords[i].span, chords[j].span)) {
                fail(std::string(side_name(chords[i].side)) + " chords " +
                     detail::chord_text(chords[i].span) + "," + detail::chord_text(chords[j].span) +
                     " interleave");
                break;
            }
        }
    }
    return report;
}

/// Default cap for enumerate_shapes; overridable with MEANDER_MAX_N.
inline int enumeration_limit() {
    if (const char *env = std::getenv("MEANDER_MAX_N")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 64)
            return static_cast<int>(v);
    }
    return 12;
}

/// All valid shapes with n crossings and first-arc side s0, in lexicographic
/// perm order. Backtracks over prefixes, pruning on chord interleaving.
inline std::vector<MeanderShape> enumerate_shapes(int n, Side s0, int limit = enumeration_limit()) {
    if (n < 1)
        throw PreconditionViolated("enumerate_shapes: n must be at least 1");
    if (n > limit)
        throw ResourceLimit("enumerate_shapes: n=" + std::to_string(n) + " exceeds limit " +
                            std::to_string(limit));
    std::vector<MeanderShape> out;
    MeanderShape cur{n, std::vector<int>(n, 0), s0};
    std::vector<bool> used(n + 2, false);
    std::vector<Interval> up, down;

    auto fits = [&](const Interval &c, Side side) {
        const auto &list = side == Side::Up ? up : down;
        return std::none_of(list.begin(), list.end(),
                            [&](const Interval &o) { return detail::interleave(o, c); });
    };
    auto push = [&](const Interval &c, Side side) { (side == Side::Up ? up : down).push_back(c); };
    auto pop = [&](Side side) { (side == Side::Up ? up : down).pop_back(); };

    auto rec = [&](auto &&self, int depth, int prev) -> void {
        if (depth == n) {
            Side side = cur.arc_side(n);
            Interval last{std::min(prev, n + 1), std::max(prev, n + 1)};
            if (fits(last, side))
                out.push_back(cur);
            return;
        }
        Side side = cur.arc_side(depth);
        for (int p = 1; p <= n; ++p) {
            if (used[p])
                continue;
            Interval c{std::min(prev, p), std::max(prev, p)};
            if (!fits(c, side))
                continue;
            used[p] = true;
            cur.perm[depth] = p;
            push(c, side);
            self(self, depth + 1, p);
            pop(side);
            used[p] = false;
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace meander
