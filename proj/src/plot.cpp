#include "reeb/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace reeb {

namespace {

constexpr double size = 400.0;
constexpr double margin = 40.0;

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

const char* color(PointClass cls)
{
    switch (cls) {
    case PointClass::ordinary0_up:
        return "#1f77b4";
    case PointClass::ordinary0_down:
        return "#d62728";
    case PointClass::essential0:
        return "#7f7f7f";
    case PointClass::extended1:
        return "#2ca02c";
    }
    return "#000000";
}

}  // namespace

std::string export_plot(const PersistenceDiagram& diagram)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& p : diagram.points) {
        for (double v : {p.birth, p.death}) {
            if (std::isfinite(v)) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    if (lo > hi) {
        lo = 0.0;
        hi = 1.0;
    }
    if (lo == hi)
        hi = lo + 1.0;
    const double pad = (hi - lo) * 0.05;
    lo -= pad;
    hi += pad;

    const double inner = size - 2 * margin;
    auto sx = [&](double v) { return margin + (v - lo) / (hi - lo) * inner; };
    auto sy = [&](double v) { return size - margin - (v - lo) / (hi - lo) * inner; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(size) << "\" height=\"" << num(size)
        << "\" viewBox=\"0 0 " << num(size) << ' ' << num(size) << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << num(size) << "\" height=\"" << num(size) << "\" fill=\"white\"/>\n";
    // Axes
    svg << "<line x1=\"" << num(margin) << "\" y1=\"" << num(size - margin) << "\" x2=\"" << num(size - margin)
        << "\" y2=\"" << num(size - margin) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << num(margin) << "\" y1=\"" << num(size - margin) << "\" x2=\"" << num(margin)
        << "\" y2=\"" << num(margin) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(size / 2) << "\" y=\"" << num(size - 10) << "\" text-anchor=\"middle\">birth</text>\n";
    svg << "<text x=\"12\" y=\"" << num(size / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 12 "
        << num(size / 2) << ")\">death</text>\n";
    svg << "<text x=\"" << num(margin) << "\" y=\"" << num(size - margin + 14) << "\" text-anchor=\"middle\">"
        << num(lo) << "</text>\n";
    svg << "<text x=\"" << num(size - margin) << "\" y=\"" << num(size - margin + 14) << "\" text-anchor=\"middle\">"
        << num(hi) << "</text>\n";
    svg << "<line class=\"diagonal\" x1=\"" << num(sx(lo)) << "\" y1=\"" << num(sy(lo)) << "\" x2=\"" << num(sx(hi))
        << "\" y2=\"" << num(sy(hi)) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";

    for (const auto& p : diagram.points) {
        const double x = sx(p.birth);
        const bool infinite = !std::isfinite(p.death);
        const double y = infinite ? margin / 2 : sy(p.death);
        svg << "<circle class=\"" << to_string(p.cls) << "\" cx=\"" << num(x) << "\" cy=\"" << num(y)
            << "\" r=\"4\" fill=\"" << color(p.cls) << "\"/>\n";
        if (infinite)
            svg << "<text x=\"" << num(x + 6) << "\" y=\"" << num(y + 4) << "\" font-size=\"10\">inf</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace reeb
