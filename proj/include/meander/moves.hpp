#pragma once

#include "meander/regions.hpp"
#include "meander/rewrite.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace meander {

enum class MoveKind { FullRemoval, PartialRemoval, RefinedRemoval };

inline const char *move_kind_name(MoveKind k) {
    switch (k) {
    case MoveKind::FullRemoval:
        return "full";
    case MoveKind::PartialRemoval:
        return "partial";
    case MoveKind::RefinedRemoval:
        return "refined";
    }
    return "?";
}

/// Combinatorial effect of the rectangle-swap isotopy: `flux` leaves the
/// source region through L0 and the same amount re-enters the other
/// half-disk inside `target_interval`; `transported` regions cross whole.
struct Circulation {
    Region source;
    Interval target_interval;
    std::vector<Region> transported;
    Rational flux;
};

struct MoveRecord {
    MoveKind kind = MoveKind::FullRemoval;
    int point = 0;                 // L0 position of the processed point before the move
    Rational cost;
    std::vector<int> removed_crossings; // L0 positions before the move
    std::vector<FaceFate> face_audit;
    std::vector<int> position_map;
    Circulation circulation;
    Meander result;
};

/// The four classes produced by the selection algorithm, each in the order
/// points were assigned.
struct CPartition {
    std::vector<ExtremalPointInfo> c1, c2, c3, c4;
};

/// Points q of M+ lying inside R(x0) whose large region contains r(x0).
inline std::vector<ExtremalPointInfo> candidate_set(const ExtremalClassification &cls,
                                                    const ExtremalPointInfo &x0) {
    std::vector<ExtremalPointInfo> out;
    for (const auto &q : cls.m_plus)
        if (x0.large.interval.strictly_contains(q.position) && q.large.contains(x0.small))
            out.push_back(q);
    return out;
}

/// Splits a candidate set C (sorted left to right) into C1..C4. q is always
/// the rightmost remaining point of E; a budget tie goes to rule (1).
inline CPartition classify_C(const std::vector<ExtremalPointInfo> &candidates, const Rational &w0) {
    CPartition out;
    std::vector<ExtremalPointInfo> e = candidates;
    std::set<int> c4;
    for (const auto &q : candidates)
        c4.insert(q.position);
    Rational budget = 0;
    while (!e.empty()) {
        auto qit = std::max_element(e.begin(), e.end(), [](const auto &a, const auto &b) {
            return a.position < b.position;
        });
        const ExtremalPointInfo q = *qit;
        if (budget + q.weight <= w0) {
            out.c1.push_back(q);
            std::vector<ExtremalPointInfo> rest;
            for (const auto &p : e) {
                if (q.small.contains_point(p.position)) {
                    if (p.position != q.position)
                        out.c3.push_back(p);
                    c4.erase(p.position);
                } else {
                    rest.push_back(p);
                }
            }
            budget += q.weight;
            e = std::move(rest);
        } else {
            out.c2.push_back(q);
            c4.erase(q.position);
            std::vector<ExtremalPointInfo> rest;
            for (const auto &p : e)
                if (p.position != q.position && q.small.contains(p.small))
                    rest.push_back(p);
            e = std::move(rest);
        }
    }
    for (const auto &q : candidates)
        if (c4.count(q.position))
            out.c4.push_back(q);
    return out;
}

/// Convenience overload computing C from the current meander.
inline CPartition classify_C(const Meander &m, const ExtremalPointInfo &x0) {
    auto level = maslov_indices(m).at(x0.crossing);
    auto cls = classify_at_level(m, level);
    return classify_C(candidate_set(cls, x0), x0.weight);
}

namespace detail {

inline MoveRecord make_record(MoveKind kind, int point, const Rational &cost, const Rewrite &rw,
                              Circulation circ) {
    MoveRecord rec;
    rec.kind = kind;
    rec.point = point;
    rec.cost = cost;
    rec.removed_crossings = rw.removed;
    rec.face_audit = rw.audit;
    rec.position_map = rw.position_map;
    rec.circulation = std::move(circ);
    rec.result = rw.result;
    return rec;
}

/// Fluxes first, then the transports, as one rewrite.
inline Rewrite circulate(const Meander &m, const std::vector<Flux> &fluxes,
                         const std::vector<Region> &transported) {
    auto fs = build_faces(m.shape);
    Rewrite acc = identity_rewrite(apply_fluxes(m, fs, fluxes));
    for (const auto &r : transported) {
        Interval span = r.interval;
        for (int *p : {&span.left, &span.right})
            *p = acc.position_map[*p];
        int arc = find_arc(acc.result.shape, span, r.side);
        if (arc < 0)
            throw AssertionFailure("transported region no longer present");
        acc = compose(acc, transport_region(acc.result, arc));
    }
    return acc;
}

inline Interval map_interval(const std::vector<int> &pm, const Interval &iv) {
    return {pm[iv.left], pm[iv.right]};
}

/// Region under the chord `span` (old coordinates) in the current meander.
inline Region track_region(const Meander &cur, const std::vector<int> &pm, const Interval &span, Side side,
                           const char *what) {
    Interval now = map_interval(pm, span);
    int arc = (now.left < 0 || now.right < 0) ? -1 : find_arc(cur.shape, now, side);
    if (arc < 0)
        throw AssertionFailure(std::string(what) + " region no longer present");
    return region_of_arc(cur, build_faces(cur.shape), arc);
}

} // namespace detail

/// Partial removing of x0 associated to `a`: `a` is pushed whole into the
/// half-disk of r(x0), and r(x0) gives up a.area through L0 in return.
inline std::pair<Meander, MoveRecord> partial_remove(const Meander &m, const ExtremalPointInfo &x0,
                                                     const Region &a) {
    auto fs = build_faces(m.shape);
    auto fresh = describe_extremal_point(m, fs, x0.crossing);
    if (fresh.small.faces != x0.small.faces || fresh.weight != x0.weight)
        throw PreconditionViolated("partial_remove: point info does not match the meander");
    if (a.side == x0.small.side)
        throw PreconditionViolated("partial_remove: region lies on the side of the small region");
    if (!(a.area < x0.weight))
        throw PreconditionViolated("partial_remove: region area " + to_string(a.area) +
                                   " is not below the weight " + to_string(x0.weight));
    if (!x0.large.contains(a) || !(x0.large.interval.left < a.interval.left &&
                                   a.interval.right < x0.large.interval.right))
        throw PreconditionViolated("partial_remove: region is not inside the large region");

    auto fluxes = proportional_fluxes(m, fs, x0.small.faces, a.area);
    auto rw = detail::circulate(m, fluxes, {a});
    Circulation circ{x0.small, a.interval, {a}, a.area};
    auto rec = detail::make_record(MoveKind::PartialRemoval, x0.position, a.area, rw, std::move(circ));
    return {rw.result, std::move(rec)};
}

namespace detail {

/// The postconditions of a complete point removal.
inline void check_removal(const Meander &before, const ExtremalPointInfo &x0, int level,
                          const ExtremalClassification &cls_before, const CPartition &parts,
                          const Rewrite &total, const Rational &cost) {
    const Meander &after = total.result;
    const auto &pm = total.position_map;
    auto fail = [&](const std::string &msg) {
        throw AssertionFailure("removal of point at position " + std::to_string(x0.position) + " in " +
                               describe(before.shape) + ": " + msg);
    };

    auto report = check_meander(after);
    if (!report.ok)
        fail(report.violations.front());
    if (cost != x0.weight)
        fail("total cost " + to_string(cost) + " differs from the weight " + to_string(x0.weight));
    if (pm[x0.small.interval.left] >= 0 || pm[x0.small.interval.right] >= 0)
        fail("x0 or its neighbor survived");
    if (after.n() >= before.n())
        fail("crossing count did not decrease");

    // index gaps of survivors
    auto mu0 = maslov_indices(before);
    auto mu1 = maslov_indices(after);
    auto at0 = before.shape.crossing_at_position();
    auto at1 = after.shape.crossing_at_position();
    int offset = 0;
    bool first = true;
    for (int p = 1; p <= before.n(); ++p) {
        if (pm[p] < 0)
            continue;
        int d = mu1.at(at1[pm[p]]) - mu0.at(at0[p]);
        if (first) {
            offset = d;
            first = false;
        } else if (d != offset) {
            fail("index gap between survivors changed");
        }
    }

    // equal decrease for C2 points
    for (const auto &q : parts.c2) {
        auto s = track_region(after, pm, q.small.interval, q.small.side, "C2 small");
        auto l = track_region(after, pm, q.large.interval, q.large.side, "C2 large");
        if (q.small.area - s.area != q.large.area - l.area)
            fail("C2 point at " + std::to_string(q.position) + " lost unequal areas");
    }

    // classification after the move, at the same level
    int level_after = level + offset;
    bool any = false;
    for (int c = 1; c <= after.n(); ++c)
        any = any || mu1.at(c) == level_after;
    ExtremalClassification cls_after;
    if (any) {
        try {
            cls_after = classify_at_level(after, level_after);
        } catch (const NeighborMissing &e) {
            fail(e.what());
        }
    }
    std::vector<int> back(after.n() + 2, -1);
    for (int p = 0; p <= before.n() + 1; ++p)
        if (pm[p] >= 0)
            back[pm[p]] = p;
    std::set<int> m_before, plus_before;
    for (const auto &p : cls_before.points)
        m_before.insert(p.position);
    for (const auto &p : cls_before.m_plus)
        plus_before.insert(p.position);
    std::set<int> m_after;
    for (const auto &p : cls_after.points) {
        int orig = back[p.position];
        m_after.insert(orig);
        if (!m_before.count(orig))
            fail("new point of extremal index at old position " + std::to_string(orig));
        if (p.side_class == SideClass::Minus && orig <= x0.position)
            fail("point at old position " + std::to_string(orig) + " is in M- but not right of x0");
        if (p.side_class == SideClass::Plus && !plus_before.count(orig))
            fail("point at old position " + std::to_string(orig) + " joined M+");
    }
    if (m_after.size() >= m_before.size())
        fail("extremal set did not shrink");

    // Down regions of survivors lying right of r(x0) are untouched
    for (const auto &p : cls_before.points) {
        if (pm[p.position] < 0)
            continue;
        const Region &down = p.small.side == Side::Down ? p.small : p.large;
        if (down.interval.left <= x0.small.interval.right)
            continue;
        auto now = track_region(after, pm, down.interval, Side::Down, "untouched");
        if (now.area != down.area)
            fail("Down region of point at " + std::to_string(p.position) + " was touched");
    }
}

} // namespace detail

/// Removes x0, the leftmost point of M-, together with every crossing in its
/// small region, for total energy exactly w(x0). Candidates of C1 are pushed
/// down first (partial removings, right to left); the last step lifts the
/// rest of r(x0) against a flux drawn from the innermost C2 region, or from
/// R(x0) when C2 is empty.
inline std::pair<Meander, std::vector<MoveRecord>> remove_point(const Meander &m, const ExtremalPointInfo &x0) {
    const int level = maslov_indices(m).at(x0.crossing);
    const auto cls = classify_at_level(m, level);
    if (cls.m_minus.empty() || cls.m_minus.front().position != x0.position)
        throw PreconditionViolated("remove_point: x0 is not the leftmost point of M-");
    const auto &x = cls.m_minus.front();
    const auto parts = classify_C(candidate_set(cls, x), x.weight);

    Meander cur = m;
    Rewrite total = identity_rewrite(m);
    std::vector<MoveRecord> records;
    Rational spent = 0;
    bool done = false;

    auto push = [&](MoveKind kind, const Rational &cost, const Rewrite &rw, Circulation circ) {
        int point = total.position_map[x.position];
        records.push_back(detail::make_record(kind, point, cost, rw, std::move(circ)));
        total = compose(total, rw);
        cur = rw.result;
        spent += cost;
    };

    for (const auto &q : parts.c1) {
        auto small = detail::track_region(cur, total.position_map, x.small.interval, x.small.side, "r(x0)");
        auto a = detail::track_region(cur, total.position_map, q.small.interval, q.small.side, "C1");
        if (a.area < small.area) {
            auto at = cur.shape.crossing_at_position();
            auto fs = build_faces(cur.shape);
            auto info = describe_extremal_point(cur, fs, at[total.position_map[x.position]]);
            auto [next, rec] = partial_remove(cur, info, a);
            Rewrite rw{next, rec.face_audit, rec.position_map, rec.removed_crossings};
            push(MoveKind::PartialRemoval, a.area, rw, rec.circulation);
        } else if (a.area == small.area) {
            auto rw = detail::circulate(cur, {}, {a, small});
            push(MoveKind::RefinedRemoval, small.area, rw, Circulation{small, a.interval, {a}, small.area});
            done = true;
            break;
        } else {
            throw AssertionFailure("C1 region exceeds the remaining weight");
        }
    }

    if (!done) {
        auto small = detail::track_region(cur, total.position_map, x.small.interval, x.small.side, "r(x0)");
        auto fs = build_faces(cur.shape);
        const Rational c = small.area;
        std::vector<int> pool;
        Interval target;
        if (!parts.c2.empty()) {
            const auto &inner = parts.c2.back();
            auto a = detail::track_region(cur, total.position_map, inner.small.interval, inner.small.side, "C2");
            if (!(c < a.area))
                throw AssertionFailure("residual weight does not fit in the innermost C2 region");
            pool = a.faces;
            target = a.interval;
        } else {
            auto large = detail::track_region(cur, total.position_map, x.large.interval, x.large.side, "R(x0)");
            pool = large.faces;
            target = large.interval;
            if (!(c < large.area)) {
                // equal areas: the support also reaches just past the far end of R(x0)
                int here = total.position_map[x.position];
                int segment = large.interval.left == here ? large.interval.right : large.interval.left - 1;
                pool.push_back(fs.face_on(large.side, segment));
                if (segment < large.interval.left)
                    target.left = segment;
                else
                    target.right = segment + 1;
            }
        }
        auto fluxes = proportional_fluxes(cur, fs, pool, c);
        auto rw = detail::circulate(cur, fluxes, {small});
        MoveKind kind = (parts.c1.empty() && parts.c2.empty() && parts.c3.empty() && parts.c4.empty())
                            ? MoveKind::FullRemoval
                            : MoveKind::RefinedRemoval;
        push(kind, c, rw, Circulation{small, target, {}, c});
    }

    detail::check_removal(m, x, level, cls, parts, total, spent);
    return {cur, std::move(records)};
}

} // namespace meander
