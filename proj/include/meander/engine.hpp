#pragma once

#include "meander/moves.hpp"
#include "meander/text_format.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace meander {

enum class SweepMode { MinusSweep, PlusSweep, BaseCase };

inline const char *sweep_mode_name(SweepMode m) {
    switch (m) {
    case SweepMode::MinusSweep:
        return "minus";
    case SweepMode::PlusSweep:
        return "plus";
    case SweepMode::BaseCase:
        return "base";
    }
    return "?";
}

struct SweepRecord {
    SweepMode mode = SweepMode::MinusSweep;
    std::vector<MoveRecord> moves;
    Rational subtotal;
    int final_level = 0;            // index level of the sweep, in the output's frame
    bool disjoint = true;           // small regions pairwise disjoint at sweep start
    std::vector<Meander> trace;     // meander after every move
};

struct EnergyLedger {
    std::vector<SweepRecord> sweeps;
    Rational total;

    void add(SweepRecord s) {
        total += s.subtotal;
        sweeps.push_back(std::move(s));
    }
};

namespace detail {

inline Rational min_area(const Meander &m) { return *std::min_element(m.areas.begin(), m.areas.end()); }

/// Adds a crossing next to the right anchor; the last arc now lands on it
/// and a bump of area `carve` appears on the other side.
inline Meander peel_right(const Meander &m, const Rational &carve) {
    const int n = m.n();
    Side s = m.shape.last_side();
    Meander out;
    out.shape = {n + 1, m.shape.perm, m.shape.s0};
    out.shape.perm.push_back(n + 1);
    out.areas.assign(face_count(n + 1), Rational(0));
    for (int i = 0; i <= n; ++i)
        out.areas[i] = m.areas[i];
    out.areas[FaceId::outer(Side::Up).index(n + 1)] = m.area(FaceId::outer(Side::Up));
    out.areas[FaceId::outer(Side::Down).index(n + 1)] = m.area(FaceId::outer(Side::Down));
    out.areas[n + 1] = carve;
    out.areas[FaceId::outer(opposite(s)).index(n + 1)] -= carve;
    out.areas[n] += carve;
    out.areas[FaceId::outer(s).index(n + 1)] -= carve;
    return out;
}

/// Mirror of peel_right at the left anchor; positions shift by one.
inline Meander peel_left(const Meander &m, const Rational &carve) {
    const int n = m.n();
    Side s = m.shape.s0;
    Meander out;
    out.shape = {n + 1, {1}, opposite(s)};
    for (int p : m.shape.perm)
        out.shape.perm.push_back(p + 1);
    out.areas.assign(face_count(n + 1), Rational(0));
    for (int i = 0; i <= n; ++i)
        out.areas[i + 1] = m.areas[i];
    out.areas[FaceId::outer(Side::Up).index(n + 1)] = m.area(FaceId::outer(Side::Up));
    out.areas[FaceId::outer(Side::Down).index(n + 1)] = m.area(FaceId::outer(Side::Down));
    out.areas[0] = carve;
    out.areas[FaceId::outer(opposite(s)).index(n + 1)] -= carve;
    out.areas[1] += carve;
    out.areas[FaceId::outer(s).index(n + 1)] -= carve;
    return out;
}

inline bool ends_balanced(const Meander &m) {
    auto t = maslov_indices(m);
    return t.at(1) == t.at(m.n());
}

} // namespace detail

/// Adds crossings next to the anchors until mu(x_1) = mu(x_N). Zero energy.
/// New faces get area `carve` (default: a quarter of the smallest face).
inline Meander normalize(const Meander &m, std::optional<Rational> carve = std::nullopt) {
    Rational c = carve ? *carve : detail::min_area(m) / 4;
    if (!(c > 0 && c < detail::min_area(m)))
        throw PreconditionViolated("normalize: carve must lie strictly between 0 and the smallest face area");
    Meander cur = m;
    for (int step = 0; step < 3 && !detail::ends_balanced(cur); ++step) {
        if (cur.shape.s0 == Side::Down)
            cur = detail::peel_left(cur, c);
        else
            cur = detail::peel_right(cur, c);
    }
    if (!detail::ends_balanced(cur))
        throw AssertionFailure("normalize: end indices still differ");
    auto report = check_meander(cur);
    if (!report.ok)
        throw AssertionFailure("normalize: " + report.violations.front());
    return cur;
}

namespace detail {

/// Removes every M- point at `level` (leftmost first) until M- is empty.
inline std::pair<Meander, SweepRecord> sweep_at_level(const Meander &m, int level, SweepMode mode) {
    SweepRecord rec;
    rec.mode = mode;
    Meander cur = m;
    int lvl = level;
    // each current face -> faces of the sweep-start meander it carries
    std::vector<std::set<int>> pull(face_count(m.n()));
    for (int f = 0; f < face_count(m.n()); ++f)
        pull[f] = {f};
    // current position -> sweep-start position
    std::vector<int> origin(m.n() + 2);
    for (int p = 0; p <= m.n() + 1; ++p)
        origin[p] = p;
    std::vector<std::set<int>> taken;
    int last_origin = -1;

    for (;;) {
        auto table = maslov_indices(cur);
        if (std::find(table.mu.begin(), table.mu.end(), lvl) == table.mu.end())
            break;
        auto cls = classify_at_level(cur, lvl);
        if (cls.m_minus.empty())
            break;
        const auto x0 = cls.m_minus.front();
        if (origin[x0.position] <= last_origin)
            throw AssertionFailure("sweep: processed points are not increasing along L0");
        last_origin = origin[x0.position];

        std::set<int> region;
        for (int f : x0.small.faces)
            region.insert(pull[f].begin(), pull[f].end());
        taken.push_back(std::move(region));

        const int before_n = cur.n();
        auto [next, moves] = remove_point(cur, x0);
        if (next.n() >= before_n)
            throw AssertionFailure("sweep: crossing count did not decrease");

        Rewrite acc = identity_rewrite(cur);
        for (auto &mv : moves) {
            acc = compose(acc, Rewrite{mv.result, mv.face_audit, mv.position_map, mv.removed_crossings});
            rec.subtotal += mv.cost;
            rec.trace.push_back(mv.result);
            rec.moves.push_back(std::move(mv));
        }
        std::vector<std::set<int>> pull2(face_count(next.n()));
        for (int f = 0; f < face_count(cur.n()); ++f)
            pull2[acc.audit[f].new_face].insert(pull[f].begin(), pull[f].end());
        std::vector<int> origin2(next.n() + 2, -1);
        for (int p = 0; p <= cur.n() + 1; ++p)
            if (acc.position_map[p] >= 0)
                origin2[acc.position_map[p]] = origin[p];

        // level in the new frame: gaps between survivors are preserved
        auto t2 = maslov_indices(next);
        auto at0 = cur.shape.crossing_at_position();
        auto at1 = next.shape.crossing_at_position();
        for (int p = 1; p <= cur.n(); ++p)
            if (acc.position_map[p] >= 0) {
                lvl += t2.at(at1[acc.position_map[p]]) - table.at(at0[p]);
                break;
            }
        cur = std::move(next);
        pull = std::move(pull2);
        origin = std::move(origin2);
    }

    for (std::size_t i = 0; i < taken.size(); ++i)
        for (std::size_t j = i + 1; j < taken.size(); ++j)
            for (int f : taken[i])
                if (taken[j].count(f))
                    rec.disjoint = false;
    if (!rec.disjoint)
        throw AssertionFailure("sweep: small regions of processed points overlap");
    if (rec.subtotal > half())
        throw AssertionFailure("sweep: subtotal " + to_string(rec.subtotal) + " exceeds 1/2");
    rec.final_level = lvl;
    return {cur, std::move(rec)};
}

/// Rewrites records made on T(m) so they describe moves on m.
inline void conjugate_record(SweepRecord &rec, SymmetryTransform t) {
    for (auto &mv : rec.moves) {
        int n_before = static_cast<int>(mv.position_map.size()) - 2;
        mv.point = symmetry_position_image(mv.point, n_before, t);
        for (auto &p : mv.removed_crossings)
            p = symmetry_position_image(p, n_before, t);
        std::sort(mv.removed_crossings.begin(), mv.removed_crossings.end());
        mv.result = apply_symmetry(mv.result, t);
    }
    for (auto &m : rec.trace)
        m = apply_symmetry(m, t);
}

inline void require_balanced(const Meander &m, const char *op) {
    if (!ends_balanced(m))
        throw PreconditionViolated(std::string(op) + ": requires mu(x_1) = mu(x_N)");
}

} // namespace detail

/// Empties M- at the minimal index. Requires mu(x_1) = mu(x_N) = 0 > mu_min.
inline std::pair<Meander, SweepRecord> sweep_min(const Meander &m) {
    detail::require_balanced(m, "sweep_min");
    auto t = maslov_indices(m);
    if (t.mu_min >= 0)
        throw PreconditionViolated("sweep_min: requires mu_min < 0");
    return detail::sweep_at_level(m, t.mu_min, SweepMode::MinusSweep);
}

namespace detail {

/// M- sweep then the M+ sweep (conjugated by RotPi) at `level`.
inline std::tuple<Meander, SweepRecord, SweepRecord> double_sweep(const Meander &m, int level) {
    auto [m1, minus] = sweep_at_level(m, level, SweepMode::MinusSweep);
    auto t1 = maslov_indices(m1);
    int rotated_level = minus.final_level - t1.at(m1.n());
    auto [r2, plus] = sweep_at_level(apply_symmetry(m1, SymmetryTransform::RotPi), rotated_level,
                                     SweepMode::PlusSweep);
    conjugate_record(plus, SymmetryTransform::RotPi);
    Meander m2 = apply_symmetry(r2, SymmetryTransform::RotPi);
    auto t2 = maslov_indices(m2);
    plus.final_level = plus.final_level + t2.at(m2.n());
    if (std::find(t2.mu.begin(), t2.mu.end(), plus.final_level) != t2.mu.end())
        throw AssertionFailure("double sweep left points at the processed index");
    if (minus.subtotal + plus.subtotal > 1)
        throw AssertionFailure("double sweep costs more than 1");
    return {m2, std::move(minus), std::move(plus)};
}

} // namespace detail

/// Reduces the index gap by at least one with energy at most 1. When
/// mu_min = 0 the mirrored problem at mu_max is solved under VFlip.
inline std::tuple<Meander, SweepRecord, SweepRecord> reduce_gap_once(const Meander &m) {
    detail::require_balanced(m, "reduce_gap_once");
    auto t = maslov_indices(m);
    if (t.gap <= 1)
        throw PreconditionViolated("reduce_gap_once: requires gap > 1");
    std::tuple<Meander, SweepRecord, SweepRecord> out;
    if (t.mu_min < 0) {
        out = detail::double_sweep(m, t.mu_min);
    } else {
        auto flipped = apply_symmetry(m, SymmetryTransform::VFlip);
        auto [f2, minus, plus] = detail::double_sweep(flipped, -t.mu_max);
        detail::conjugate_record(minus, SymmetryTransform::VFlip);
        detail::conjugate_record(plus, SymmetryTransform::VFlip);
        out = {apply_symmetry(f2, SymmetryTransform::VFlip), std::move(minus), std::move(plus)};
    }
    auto t2 = maslov_indices(std::get<0>(out));
    if (t2.gap > t.gap - 1)
        throw AssertionFailure("reduce_gap_once: gap did not decrease");
    return out;
}

/// Energy of the final graph-like configuration. For the identity perm
/// this is max S - min S, S being the running signed area of the bumps;
/// otherwise the constant 1/2.
inline Rational base_energy(const Meander &m) {
    auto t = maslov_indices(m);
    if (t.gap > 1)
        throw PreconditionViolated("base_energy: requires gap <= 1");
    for (int i = 0; i < m.n(); ++i)
        if (m.shape.perm[i] != i + 1)
            return half();
    Rational s = 0, lo = 0, hi = 0;
    for (int i = 0; i <= m.n(); ++i) {
        const Rational &a = m.areas[i];
        s += m.shape.arc_side(i) == Side::Up ? a : Rational(-a);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (s != 0)
        throw AssertionFailure("base_energy: signed bump areas do not cancel");
    return hi - lo;
}

struct Certificate {
    Meander input;
    Meander normalized;
    IndexTable initial_table;
    EnergyLedger ledger;
    Rational bound;
    bool pass = false;
    std::string failure; // first failed check, empty on pass
    int rounds = 0;
    std::vector<std::string> trace; // serialized meanders: normalized, after each move
};

/// Runs the full untangling and checks the energy bound.
inline Certificate untangle(const Meander &m) {
    Certificate cert;
    cert.input = m;
    cert.initial_table = maslov_indices(m);
    const int gap0 = cert.initial_table.gap;
    cert.bound = m.n() >= 2 ? Rational(gap0) - half() : half();

    auto fail = [&](const std::string &why) {
        if (cert.failure.empty())
            cert.failure = why;
    };
    try {
        Meander cur = normalize(m);
        cert.normalized = cur;
        cert.trace.push_back(serialize(cur));
        if (maslov_indices(cur).gap != gap0)
            throw AssertionFailure("normalize changed the index gap");
        while (maslov_indices(cur).gap > 1) {
            if (cert.rounds >= gap0)
                throw AssertionFailure("untangle: too many gap reductions");
            cur = normalize(cur);
            auto [next, minus, plus] = reduce_gap_once(cur);
            ++cert.rounds;
            for (const auto *s : {&minus, &plus})
                for (const auto &mv : s->moves)
                    cert.trace.push_back(serialize(mv.result));
            cert.ledger.add(std::move(minus));
            cert.ledger.add(std::move(plus));
            cur = std::move(next);
        }
        SweepRecord base;
        base.mode = SweepMode::BaseCase;
        base.subtotal = base_energy(cur);
        cert.ledger.add(std::move(base));
    } catch (const Error &e) {
        fail(e.what());
    }

    if (cert.failure.empty()) {
        const auto &sw = cert.ledger.sweeps;
        for (std::size_t i = 0; i < sw.size(); ++i) {
            if (sw[i].subtotal > half())
                fail("sweep subtotal exceeds 1/2");
            if (sw[i].mode == SweepMode::MinusSweep && i + 1 < sw.size() &&
                sw[i].subtotal + sw[i + 1].subtotal > 1)
                fail("double sweep exceeds 1");
            if (!sw[i].disjoint)
                fail("disjointness audit failed");
        }
        if (cert.rounds > std::max(0, gap0 - 1))
            fail("more gap reductions than gap - 1");
        if (cert.ledger.total > cert.bound)
            fail("total " + to_string(cert.ledger.total) + " exceeds bound " + to_string(cert.bound));
        if (cert.ledger.total > Rational(m.n(), 2))
            fail("total exceeds N/2");
    }
    cert.pass = cert.failure.empty();
    return cert;
}

} // namespace meander
