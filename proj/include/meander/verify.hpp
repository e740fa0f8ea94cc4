#pragma once

#include "meander/certificate.hpp"
#include "meander/engine.hpp"
#include "meander/maslov.hpp"
#include "meander/text_format.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace meander {

/// Outcome of one acceptance criterion.
struct CriterionResult {
    int id = 0;
    std::string name;
    long shapes = 0;
    long instances = 0;
    long failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
    void fail(const std::string &why) {
        if (failures++ == 0)
            first_failure = why;
    }
};

struct VerifyOptions {
    int enumeration_n = 9;
    int index_n = 8;
    int oracle_n = 6;
    int symmetry_n = 7;
    int theorem_n = 7;
    int areas_per_shape = 3;
    std::uint64_t seed = 1;
    std::int64_t granularity = 1000;

    /// Every size set to `k`, except the N! brute-force enumeration check,
    /// which stops at 9.
    static VerifyOptions up_to(int k, int areas_per_shape, std::uint64_t seed) {
        VerifyOptions o;
        for (int *n : {&o.index_n, &o.oracle_n, &o.symmetry_n, &o.theorem_n})
            *n = k;
        o.enumeration_n = std::min(k, 9);
        o.areas_per_shape = areas_per_shape;
        o.seed = seed;
        return o;
    }
};

namespace detail {

inline std::vector<MeanderShape> all_shapes(int max_n) {
    std::vector<MeanderShape> out;
    for (int n = 1; n <= max_n; ++n)
        for (Side s0 : {Side::Up, Side::Down}) {
            auto v = enumerate_shapes(n, s0, std::max(max_n, n));
            out.insert(out.end(), v.begin(), v.end());
        }
    return out;
}

/// Brute-force meander filter: every permutation of 1..n, kept iff no two
/// chords on the same side cross. Written independently of the shape code.
inline std::set<std::vector<int>> brute_force_meanders(int n, bool first_up) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::vector<int>> out;
    do {
        std::vector<int> pts;
        pts.push_back(0);
        pts.insert(pts.end(), perm.begin(), perm.end());
        pts.push_back(n + 1);
        bool ok = true;
        for (int a = 0; a <= n && ok; ++a)
            for (int b = a + 2; b <= n && ok; b += 2) {
                int a1 = std::min(pts[a], pts[a + 1]), a2 = std::max(pts[a], pts[a + 1]);
                int b1 = std::min(pts[b], pts[b + 1]), b2 = std::max(pts[b], pts[b + 1]);
                bool cross = (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
                if (cross)
                    ok = false;
            }
        if (ok)
            out.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)first_up; // planarity does not depend on which side comes first
    return out;
}

inline std::string shape_text(const MeanderShape &s) { return describe(s); }

} // namespace detail

inline CriterionResult check_enumeration(const VerifyOptions &o) {
    CriterionResult r{1, "enumeration oracle", 0, 0, 0, {}};
    const long expected[] = {1, 1, 2};
    for (int n = 1; n <= std::min(3, o.enumeration_n); ++n)
        if (static_cast<long>(enumerate_shapes(n, Side::Up, std::max(n, o.enumeration_n)).size()) != expected[n - 1])
            r.fail("count for N=" + std::to_string(n) + " differs from the hand count");
    for (int n = 1; n <= o.enumeration_n; ++n) {
        auto oracle = detail::brute_force_meanders(n, true);
        for (Side s0 : {Side::Up, Side::Down}) {
            auto shapes = enumerate_shapes(n, s0, std::max(n, o.enumeration_n));
            r.shapes += static_cast<long>(shapes.size());
            ++r.instances;
            std::set<std::vector<int>> got;
            for (const auto &s : shapes)
                got.insert(s.perm);
            if (got.size() != shapes.size())
                r.fail("duplicate shapes for N=" + std::to_string(n));
            if (got != oracle)
                r.fail("N=" + std::to_string(n) + " s0=" + side_name(s0) + ": " + std::to_string(shapes.size()) +
                       " shapes vs " + std::to_string(oracle.size()) + " from the filter");
        }
    }
    return r;
}

inline CriterionResult check_index_laws(const VerifyOptions &o) {
    CriterionResult r{2, "index laws", 0, 0, 0, {}};
    for (const auto &s : detail::all_shapes(o.index_n)) {
        ++r.shapes;
        ++r.instances;
        auto t = maslov_indices(s);
        auto at = s.crossing_at_position();
        const std::string tag = detail::shape_text(s);
        for (int p = 1; p < s.n; ++p)
            if (std::abs(t.at(at[p + 1]) - t.at(at[p])) != 1)
                r.fail(tag + ": L0-neighbours at " + std::to_string(p) + " differ by more than 1");
        if (2 * t.gap > s.n + 1)
            r.fail(tag + ": 2*gap > N+1");
        if ((t.gap == 0) != (s.n == 1))
            r.fail(tag + ": gap = 0 does not match N = 1");
        if (s.s0 == Side::Up && s.last_side() == Side::Up && t.at(s.n) - t.at(1) != 1)
            r.fail(tag + ": both boundary arcs Up but mu(x_N) - mu(x_1) != 1");
    }
    return r;
}

inline CriterionResult check_oracle(const VerifyOptions &o) {
    CriterionResult r{3, "oracle equivalence", 0, 0, 0, {}};
    for (const auto &s : detail::all_shapes(o.oracle_n)) {
        ++r.shapes;
        auto t = maslov_indices(s);
        for (int i = 1; i <= s.n; ++i)
            for (int j = 1; j <= s.n; ++j) {
                ++r.instances;
                if (winding_gap_oracle(s, i, j) != t.at(j) - t.at(i))
                    r.fail(detail::shape_text(s) + ": oracle disagrees on (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
            }
    }
    return r;
}

inline CriterionResult check_symmetries(const VerifyOptions &o) {
    CriterionResult r{4, "symmetry laws", 0, 0, 0, {}};
    using T = SymmetryTransform;
    for (const auto &s : detail::all_shapes(o.symmetry_n)) {
        ++r.shapes;
        const int n = s.n;
        const auto t = maslov_indices(s);
        const std::string tag = detail::shape_text(s);
        for (T tr : {T::VFlip, T::HFlip, T::RotPi}) {
            ++r.instances;
            auto img = apply_symmetry(s, tr);
            if (!validate(img).ok) {
                r.fail(tag + ": symmetry image is not a meander");
                continue;
            }
            if (apply_symmetry(img, tr) != s)
                r.fail(tag + ": symmetry is not an involution");
            auto ti = maslov_indices(img);
            for (int k = 1; k <= n; ++k) {
                int expect = 0;
                switch (tr) {
                case T::VFlip:
                    expect = -t.at(k);
                    break;
                case T::HFlip:
                    expect = t.at(n) - t.at(n + 1 - k);
                    break;
                case T::RotPi:
                    expect = t.at(n + 1 - k) - t.at(n);
                    break;
                }
                if (ti.at(k) != expect) {
                    r.fail(tag + ": index identity fails at crossing " + std::to_string(k));
                    break;
                }
            }
            if (ti.gap != t.gap)
                r.fail(tag + ": symmetry changed the gap");
        }
        if (apply_symmetry(apply_symmetry(s, T::HFlip), T::VFlip) != apply_symmetry(s, T::RotPi))
            r.fail(tag + ": RotPi differs from VFlip after HFlip");
    }
    return r;
}

/// Seeded area assignments used by the theorem and serialization checks.
inline std::vector<Meander> generated_instances(int max_n, int per_shape, std::uint64_t seed,
                                                std::int64_t granularity) {
    std::vector<Meander> out;
    for (const auto &s : detail::all_shapes(max_n))
        for (int k = 0; k < per_shape; ++k)
            out.push_back(assign_areas(s, seed + static_cast<std::uint64_t>(k), granularity));
    return out;
}

inline CriterionResult check_theorem(const VerifyOptions &o) {
    CriterionResult r{5, "theorem certificate", 0, 0, 0, {}};
    r.shapes = static_cast<long>(detail::all_shapes(o.theorem_n).size());
    for (const auto &m : generated_instances(o.theorem_n, o.areas_per_shape, o.seed, o.granularity)) {
        ++r.instances;
        auto cert = untangle(m);
        const std::string tag = detail::shape_text(m.shape);
        if (!cert.pass) {
            r.fail(tag + ": " + cert.failure);
            continue;
        }
        try {
            for (const auto &text : cert.trace)
                parse(text); // every intermediate meander satisfies the invariants
        } catch (const Error &e) {
            r.fail(tag + ": trace entry invalid: " + e.what());
        }
    }
    return r;
}

inline CriterionResult check_fixtures(const VerifyOptions &) {
    CriterionResult r{6, "worked fixtures", 0, 0, 0, {}};
    auto R = [](int p, int q) { return Rational(p, q); };
    try {
        ++r.instances;
        Meander m{{3, {3, 2, 1}, Side::Up}, {R(1, 8), R(1, 16), R(1, 8), R(1, 8), R(1, 4), R(5, 16)}};
        auto cls = classify_extremal(m, Extremum::AtMin);
        if (cls.m_minus.size() != 1 || cls.m_minus[0].crossing != 2)
            r.fail("(3,2,1;Up): x_2 is not the only point of M-");
        else {
            auto [after, recs] = remove_point(m, cls.m_minus[0]);
            Rational cost = 0;
            for (const auto &rec : recs)
                cost += rec.cost;
            if (cost != R(1, 16) || after.shape != MeanderShape{1, {1}, Side::Up})
                r.fail("(3,2,1;Up): removal does not end at (1;Up) with cost 1/16");
        }

        ++r.instances;
        Meander g{{3, {1, 2, 3}, Side::Up}, {R(1, 10), R(1, 10), R(1, 20), R(1, 20), R(0, 1), R(0, 1)}};
        // remaining area split so both halves and the below-L part are 1/2
        g.area(FaceId::outer(Side::Up)) = half() - R(1, 10) - R(1, 20);
        g.area(FaceId::outer(Side::Down)) = half() - R(1, 10) - R(1, 20);
        if (!check_meander(g).ok)
            r.fail("(1,2,3;Up) fixture is not a valid meander");
        else if (base_energy(g) != R(1, 10))
            r.fail("(1,2,3;Up): base energy is " + to_string(base_energy(g)) + ", expected 1/10");

        ++r.instances;
        auto point = [](int pos, int lo, int hi, int face, Rational w) {
            ExtremalPointInfo q;
            q.position = pos;
            q.weight = w;
            q.small.interval = {lo, hi};
            q.small.side = Side::Up;
            q.small.faces = {face};
            q.small.area = w;
            q.side_class = SideClass::Plus;
            return q;
        };
        std::vector<ExtremalPointInfo> c{point(2, 2, 3, 1, R(3, 100)), point(5, 5, 6, 2, R(4, 100)),
                                         point(8, 8, 9, 3, R(5, 100))};
        auto parts = classify_C(c, R(10, 100));
        auto positions = [](const std::vector<ExtremalPointInfo> &v) {
            std::vector<int> p;
            for (const auto &q : v)
                p.push_back(q.position);
            return p;
        };
        if (positions(parts.c1) != std::vector<int>{8, 5} || positions(parts.c2) != std::vector<int>{2} ||
            !parts.c3.empty() || !parts.c4.empty())
            r.fail("classify_C hand instance: expected C1={q1,q2}, C2={q3}");
    } catch (const Error &e) {
        r.fail(std::string("fixture raised: ") + e.what());
    }
    r.shapes = 2;
    return r;
}

inline CriterionResult check_serialization(const VerifyOptions &o) {
    CriterionResult r{7, "serialization", 0, 0, 0, {}};
    r.shapes = static_cast<long>(detail::all_shapes(o.theorem_n).size());
    for (const auto &m : generated_instances(o.theorem_n, o.areas_per_shape, o.seed, o.granularity)) {
        ++r.instances;
        const std::string tag = detail::shape_text(m.shape);
        try {
            if (parse(serialize(m)) != m)
                r.fail(tag + ": parse(serialize(m)) != m");
            auto cert = untangle(m);
            auto text = format_certificate(cert);
            auto parsed = parse_certificate(text);
            if (parsed.pass != cert.pass || parsed.input != m || !replay(text))
                r.fail(tag + ": certificate does not replay");
        } catch (const Error &e) {
            r.fail(tag + ": " + e.what());
        }
    }
    return r;
}

inline std::vector<CriterionResult> run_acceptance(const VerifyOptions &o) {
    return {check_enumeration(o), check_index_laws(o), check_oracle(o), check_symmetries(o),
            check_theorem(o),     check_fixtures(o),   check_serialization(o)};
}

inline void print_summary(std::ostream &os, const std::vector<CriterionResult> &results) {
    os << std::left << std::setw(4) << "id" << std::setw(22) << "criterion" << std::right << std::setw(8) << "shapes"
       << std::setw(11) << "instances" << std::setw(10) << "failures" << "\n";
    for (const auto &r : results) {
        os << std::left << std::setw(4) << r.id << std::setw(22) << r.name << std::right << std::setw(8) << r.shapes
           << std::setw(11) << r.instances << std::setw(10) << r.failures << "\n";
        if (!r.ok())
            os << "    first failure: " << r.first_failure << "\n";
    }
}

} // namespace meander
