#pragma once

#include "meander/engine.hpp"
#include "meander/text_format.hpp"

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace meander {

/// certificate v1
/// <input meander>
/// move <kind> point=<pos> cost=<p>/<q>     (per move, then its sweep line)
/// sweep <mode> subtotal=<p>/<q>
/// total <p>/<q>
/// bound <p>/<q>
/// verdict pass|fail
inline std::string format_certificate(const Certificate &c) {
    std::ostringstream os;
    os << "certificate v1\n";
    os << serialize(c.input);
    for (const auto &s : c.ledger.sweeps) {
        for (const auto &mv : s.moves)
            os << "move " << move_kind_name(mv.kind) << " point=" << mv.point << " cost=" << to_string(mv.cost)
               << "\n";
        os << "sweep " << sweep_mode_name(s.mode) << " subtotal=" << to_string(s.subtotal) << "\n";
    }
    os << "total " << to_string(c.ledger.total) << "\n";
    os << "bound " << to_string(c.bound) << "\n";
    if (!c.pass)
        os << "# failure: " << c.failure << "\n";
    os << "verdict " << (c.pass ? "pass" : "fail") << "\n";
    return os.str();
}

struct ParsedMove {
    std::string kind;
    int point = 0;
    Rational cost;
};

struct ParsedSweep {
    std::string mode;
    std::vector<ParsedMove> moves;
    Rational subtotal;
};

struct ParsedCertificate {
    Meander input;
    std::vector<ParsedSweep> sweeps;
    Rational total;
    Rational bound;
    bool pass = false;
};

namespace detail {
inline std::string_view after_prefix(const std::string &word, std::string_view prefix, int line) {
    if (word.rfind(prefix, 0) != 0)
        throw ParseError(ParseError::Kind::Syntax, line, "expected '" + std::string(prefix) + "...'");
    return std::string_view(word).substr(prefix.size());
}

inline Rational need_rational(std::string_view s, int line) {
    auto r = parse_rational(s);
    if (!r)
        throw ParseError(ParseError::Kind::Syntax, line, "'" + std::string(s) + "' is not of the form p/q");
    return *r;
}
} // namespace detail

/// Parses a certificate and checks its arithmetic (subtotals and total).
inline ParsedCertificate parse_certificate(std::string_view text) {
    using K = ParseError::Kind;
    auto lines = detail::tokenize_lines(text);
    if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "certificate" ||
        lines[0].words[1] != "v1")
        throw ParseError(K::Syntax, lines.empty() ? 1 : lines[0].number, "expected 'certificate v1'");
    std::size_t pos = 1;
    ParsedCertificate out;
    out.input = parse_meander_lines(lines, pos);

    ParsedSweep pending;
    bool have_total = false, have_bound = false, have_verdict = false;
    for (; pos < lines.size(); ++pos) {
        const auto &l = lines[pos];
        const auto &w = l.words;
        if (have_verdict)
            throw ParseError(K::Syntax, l.number, "content after verdict");
        if (w[0] == "move" && w.size() == 4) {
            ParsedMove mv;
            mv.kind = w[1];
            if (mv.kind != "full" && mv.kind != "partial" && mv.kind != "refined")
                throw ParseError(K::Syntax, l.number, "unknown move kind '" + mv.kind + "'");
            auto p = detail::parse_int(std::string(detail::after_prefix(w[2], "point=", l.number)));
            if (!p)
                throw ParseError(K::Syntax, l.number, "bad point");
            mv.point = *p;
            mv.cost = detail::need_rational(detail::after_prefix(w[3], "cost=", l.number), l.number);
            pending.moves.push_back(std::move(mv));
        } else if (w[0] == "sweep" && w.size() == 3) {
            pending.mode = w[1];
            if (pending.mode != "minus" && pending.mode != "plus" && pending.mode != "base")
                throw ParseError(K::Syntax, l.number, "unknown sweep mode '" + pending.mode + "'");
            pending.subtotal = detail::need_rational(detail::after_prefix(w[2], "subtotal=", l.number), l.number);
            Rational sum = 0;
            for (const auto &mv : pending.moves)
                sum += mv.cost;
            if (pending.mode != "base" && sum != pending.subtotal)
                throw ParseError(K::Invariant, l.number, "sweep subtotal differs from the sum of its moves");
            out.sweeps.push_back(std::move(pending));
            pending = {};
        } else if (w[0] == "total" && w.size() == 2) {
            out.total = detail::need_rational(w[1], l.number);
            Rational sum = 0;
            for (const auto &s : out.sweeps)
                sum += s.subtotal;
            if (sum != out.total)
                throw ParseError(K::Invariant, l.number, "total differs from the sum of sweep subtotals");
            have_total = true;
        } else if (w[0] == "bound" && w.size() == 2) {
            out.bound = detail::need_rational(w[1], l.number);
            have_bound = true;
        } else if (w[0] == "verdict" && w.size() == 2 && (w[1] == "pass" || w[1] == "fail")) {
            out.pass = w[1] == "pass";
            have_verdict = true;
        } else {
            throw ParseError(K::Syntax, l.number, "unexpected line '" + w[0] + "'");
        }
    }
    if (!pending.moves.empty() || !have_total || !have_bound || !have_verdict)
        throw ParseError(K::Syntax, lines.back().number, "incomplete certificate");
    return out;
}

/// Re-runs the untangling on the certificate's input; true iff the
/// regenerated certificate is byte-identical.
inline bool replay(std::string_view text) {
    auto parsed = parse_certificate(text);
    auto again = untangle(parsed.input);
    return again.pass == parsed.pass && format_certificate(again) == text;
}

} // namespace meander
