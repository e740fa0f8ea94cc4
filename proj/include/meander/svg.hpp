#pragma once

#include "meander/maslov.hpp"
#include "meander/meander.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace meander {

/// Static SVG 1.1 diagram: L0 horizontal, one semicircular <path> per arc,
/// one <text class="mu"> per crossing and one <text class="area"> per face.
inline std::string render_svg(const Meander &m) {
    const int n = m.n();
    const double dx = 60.0, margin = 40.0;
    const double width = 2 * margin + dx * (n + 1);
    const double maxr = dx * (n + 1) / 2.0;
    const double y0 = margin + maxr + 20.0;
    const double height = 2 * y0;
    auto x_of = [&](int p) { return margin + dx * p; };
    const auto fs = build_faces(m.shape);
    const auto table = maslov_indices(m);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<title>" << describe(m.shape) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<line class=\"L0\" x1=\"" << x_of(0) << "\" y1=\"" << y0 << "\" x2=\"" << x_of(n + 1) << "\" y2=\"" << y0
       << "\" stroke=\"#888\" stroke-width=\"1.5\"/>\n";

    for (int i = 0; i <= n; ++i) {
        const auto c = m.shape.chord(i);
        const double r = dx * (c.span.right - c.span.left) / 2.0;
        const int from = m.shape.point_position(i), to = m.shape.point_position(i + 1);
        // the arc bulges up for Up and down for Down whichever way it runs
        const bool rightward = to > from;
        const int sweep = (c.side == Side::Up) == rightward ? 1 : 0;
        os << "<path class=\"arc\" d=\"M " << x_of(from) << ' ' << y0 << " A " << r << ' ' << r << " 0 0 " << sweep
           << ' ' << x_of(to) << ' ' << y0 << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
    }

    const auto at = m.shape.crossing_at_position();
    for (int p = 1; p <= n; ++p)
        os << "<text class=\"mu\" x=\"" << x_of(p) + 3 << "\" y=\"" << y0 + 14
           << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#b00\">" << table.at(at[p]) << "</text>\n";

    for (int f = 0; f < face_count(n); ++f) {
        const auto &info = fs.faces[f];
        const double sign = info.side == Side::Up ? -1.0 : 1.0;
        double x, dist;
        if (info.id.kind == FaceId::Kind::Outer) {
            x = margin;
            dist = maxr + 10.0;
        } else {
            const double lo = x_of(info.span.left), hi = x_of(info.span.right);
            x = (lo + hi) / 2.0;
            const double r = (hi - lo) / 2.0;
            // stay above the tallest child arc passing under the label
            double inner = 0.0;
            for (int g = 0; g < face_count(n); ++g)
                if (fs.faces[g].parent == f && x_of(fs.faces[g].span.left) <= x && x <= x_of(fs.faces[g].span.right))
                    inner = std::max(inner, dx * (fs.faces[g].span.right - fs.faces[g].span.left) / 2.0);
            dist = (r + inner) / 2.0;
        }
        os << "<text class=\"area\" x=\"" << x << "\" y=\"" << y0 + sign * dist + 4
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << to_string(m.areas[f])
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace meander
