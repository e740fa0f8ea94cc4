#pragma once

#include "meander/errors.hpp"
#include "meander/meander.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace meander {

/// Canonical text form:
///
///   meander v1
///   n <N>
///   s0 <+|->
///   perm <p1> ... <pN>
///   face arc:<i> <p>/<q>      (i ascending)
///   face outer:+ <p>/<q>
///   face outer:- <p>/<q>
inline std::string serialize(const Meander &m) {
    std::ostringstream os;
    os << "meander v1\n";
    os << "n " << m.n() << "\n";
    os << "s0 " << side_char(m.shape.s0) << "\n";
    os << "perm";
    for (int p : m.shape.perm)
        os << ' ' << p;
    os << "\n";
    for (int i = 0; i < face_count(m.n()); ++i)
        os << "face " << to_string(FaceId::from_index(i, m.n())) << ' ' << to_string(m.areas[i])
           << "\n";
    return os.str();
}

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream is{std::string(line)};
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

inline std::optional<int> parse_int(const std::string &s) {
    if (!is_integer_literal(s, true) || s.size() > 9)
        return std::nullopt;
    return std::stoi(s);
}

struct Line {
    int number;
    std::vector<std::string> words;
};

/// Strips comments and blank lines, keeping 1-based line numbers.
inline std::vector<Line> tokenize_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto words = split_words(line);
        if (!words.empty())
            out.push_back({number, std::move(words)});
        if (end == text.size())
            break;
        start = end + 1;
    }
    return out;
}

} // namespace detail

/// Parses the meander section of `lines` starting at `pos`, advancing it
/// past the last face line. Shared by the meander and certificate parsers.
namespace detail {
/// Reads the header, n, s0 and perm lines; returns the shape (unvalidated)
/// and the line number of the perm line.
inline std::pair<MeanderShape, int> parse_shape_lines(const std::vector<Line> &lines, std::size_t &pos) {
    using K = ParseError::Kind;
    auto syntax = [](int line, const std::string &msg) { return ParseError(K::Syntax, line, msg); };
    int last_line = lines.empty() ? 1 : lines.back().number;
    auto expect = [&](const char *key, std::size_t min_words) -> const detail::Line & {
        if (pos >= lines.size())
            throw syntax(last_line, std::string("unexpected end of input, expected '") + key + "'");
        const auto &l = lines[pos];
        if (l.words[0] != key || l.words.size() < min_words)
            throw syntax(l.number, std::string("expected '") + key + "'");
        ++pos;
        return l;
    };

    const auto &header = expect("meander", 2);
    if (header.words.size() != 2 || header.words[1] != "v1")
        throw syntax(header.number, "unsupported header, expected 'meander v1'");

    const auto &nl = expect("n", 2);
    auto n = detail::parse_int(nl.words[1]);
    if (nl.words.size() != 2 || !n || *n < 1)
        throw syntax(nl.number, "crossing count must be a positive integer");

    const auto &sl = expect("s0", 2);
    if (sl.words.size() != 2 || (sl.words[1] != "+" && sl.words[1] != "-"))
        throw syntax(sl.number, "s0 must be '+' or '-'");

    const auto &pl = expect("perm", 1);
    if (static_cast<int>(pl.words.size()) != *n + 1)
        throw syntax(pl.number, "perm must list exactly " + std::to_string(*n) + " positions");

    MeanderShape shape;
    shape.n = *n;
    shape.s0 = sl.words[1] == "+" ? Side::Up : Side::Down;
    for (int i = 1; i <= *n; ++i) {
        auto p = detail::parse_int(pl.words[i]);
        if (!p)
            throw syntax(pl.number, "perm entry '" + pl.words[i] + "' is not an integer");
        shape.perm.push_back(*p);
    }
    return {shape, pl.number};
}
} // namespace detail

inline Meander parse_meander_lines(const std::vector<detail::Line> &lines, std::size_t &pos) {
    using K = ParseError::Kind;
    auto syntax = [](int line, const std::string &msg) { return ParseError(K::Syntax, line, msg); };
    auto [shape, perm_line] = detail::parse_shape_lines(lines, pos);
    Meander m;
    m.shape = shape;

    const int count = face_count(shape.n);
    std::vector<std::optional<Rational>> areas(count);
    int face_line = perm_line;
    while (pos < lines.size() && lines[pos].words[0] == "face") {
        const auto &fl = lines[pos++];
        face_line = fl.number;
        if (fl.words.size() != 3)
            throw syntax(fl.number, "face line must be 'face <id> <p>/<q>'");
        const auto &id = fl.words[1];
        int idx = -1;
        if (id == "outer:+")
            idx = shape.n + 1;
        else if (id == "outer:-")
            idx = shape.n + 2;
        else if (id.rfind("arc:", 0) == 0) {
            auto a = detail::parse_int(id.substr(4));
            if (!a || *a < 0 || *a > shape.n)
                throw syntax(fl.number, "face id '" + id + "' out of range");
            idx = *a;
        } else
            throw syntax(fl.number, "unknown face id '" + id + "'");
        if (areas[idx])
            throw syntax(fl.number, "duplicate face '" + id + "'");
        auto r = parse_rational(fl.words[2]);
        if (!r)
            throw syntax(fl.number, "area '" + fl.words[2] + "' is not of the form p/q");
        areas[idx] = *r;
    }
    for (int i = 0; i < count; ++i)
        if (!areas[i])
            throw syntax(face_line, "missing face " + to_string(FaceId::from_index(i, shape.n)));
    for (auto &a : areas)
        m.areas.push_back(*a);

    auto report = check_meander(m);
    if (!report.ok) {
        std::string kind = validate(m.shape).ok ? "area invariant: " : "planarity violation: ";
        throw ParseError(K::Invariant, perm_line, kind + report.violations.front());
    }
    return m;
}

/// Parses a meander file. Face lines may appear in any order. Throws
/// ParseError with Kind::Syntax or Kind::Invariant and a line number.
inline Meander parse(std::string_view text) {
    auto lines = detail::tokenize_lines(text);
    std::size_t pos = 0;
    Meander m = parse_meander_lines(lines, pos);
    if (pos != lines.size())
        throw ParseError(ParseError::Kind::Syntax, lines[pos].number,
                         "unexpected line '" + lines[pos].words[0] + "'");
    return m;
}

/// Parses a meander file whose face lines may be omitted; only the shape is
/// returned. When faces are present the full meander is checked.
inline MeanderShape parse_shape(std::string_view text) {
    auto lines = detail::tokenize_lines(text);
    std::size_t pos = 0;
    auto [shape, perm_line] = detail::parse_shape_lines(lines, pos);
    if (pos < lines.size())
        return parse(text).shape;
    auto report = validate(shape);
    if (!report.ok)
        throw ParseError(ParseError::Kind::Invariant, perm_line, "planarity violation: " + report.violations.front());
    return shape;
}

} // namespace meander
