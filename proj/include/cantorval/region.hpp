#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "cantorval/classify.hpp"

namespace cantorval {

// Rational grid axis start:end:steps; nodes are exact rationals so the
// membership predicate never sees float drift.
struct GridAxis {
    Rat start, end;
    long steps = 0;

    Rat node(long i) const { return start + (end - start) * Rat(i, steps); }
};

// Accepts "p/q", integers, or decimal literals like "0.06" (exact: 6/100).
inline Rat parse_decimal_or_rat(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rat(text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long frac = static_cast<long>(text.size() - dot - 1);
    Int den(1);
    for (long i = 0; i < frac; ++i) den *= 10;
    if (digits.empty() || digits == "-")
        throw ParseError("bad-rational", "cannot parse '" + text + "'");
    return Rat(parse_int_literal(digits), den);
}

inline GridAxis parse_grid_axis(const std::string& spec) {
    auto c1 = spec.find(':');
    auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ParseError("bad-grid", "grid axis must be start:end:steps, got '" + spec + "'");
    GridAxis ax;
    ax.start = parse_decimal_or_rat(spec.substr(0, c1));
    ax.end = parse_decimal_or_rat(spec.substr(c1 + 1, c2 - c1 - 1));
    ax.steps = std::stol(spec.substr(c2 + 1));
    if (ax.steps < 1) throw ParseError("bad-grid", "steps must be positive");
    return ax;
}

struct RegionPoint {
    Rat a1, a2;
    bool in_region = false;
};

struct RegionScan {
    GridAxis a1, a2;
    std::vector<RegionPoint> points;  // row-major, a1 outer
};

// Exact membership on every grid node; nodes outside the domain
// a1 < 1/3 < a2 are simply not in the region.
inline RegionScan region_scan(const GridAxis& a1, const GridAxis& a2) {
    RegionScan scan;
    scan.a1 = a1;
    scan.a2 = a2;
    scan.points.reserve(static_cast<size_t>((a1.steps + 1) * (a2.steps + 1)));
    const Rat third(1, 3);
    for (long i = 0; i <= a1.steps; ++i) {
        Rat x = a1.node(i);
        for (long j = 0; j <= a2.steps; ++j) {
            Rat y = a2.node(j);
            bool in = false;
            if (x > 0 && x < third && y > third && y < 1) in = corollary_region(x, y);
            scan.points.push_back({x, y, in});
        }
    }
    return scan;
}

// Closed-form boundary curves (plot emission only; doubles are fine here).
// First branch, valid for a1 <= 1/35.
inline double boundary_first_branch(double a1) {
    return (-a1 - 5 + std::sqrt(a1 * a1 + 34 * a1 + 33)) / (2 - 2 * a1);
}
// Second branch, valid for a1 in (1/35, (6*sqrt(5)-13)/11).
inline double boundary_second_branch(double a1) {
    return (3 * a1 + 1 - 4 * std::sqrt(a1 * a1 + a1)) / (1 - a1);
}

inline void emit_region_csv(const RegionScan& scan, std::ostream& os) {
    os << "a1,a2,inRegion\n";
    for (const RegionPoint& p : scan.points)
        os << rat_to_string(p.a1) << "," << rat_to_string(p.a2) << "," << (p.in_region ? 1 : 0) << "\n";
}

// SVG: filled region cells, the two boundary polylines, and the apex
// marker at (1/35, 7/17).
inline void emit_region_svg(const RegionScan& scan, std::ostream& os, int width = 640,
                            int height = 480) {
    double x0 = rat_to_double(scan.a1.start), x1 = rat_to_double(scan.a1.end);
    double y0 = rat_to_double(scan.a2.start), y1 = rat_to_double(scan.a2.end);
    auto px = [&](double x) { return (x - x0) / (x1 - x0) * width; };
    auto py = [&](double y) { return height - (y - y0) / (y1 - y0) * height; };
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
       << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
    double cw = static_cast<double>(width) / scan.a1.steps;
    double ch = static_cast<double>(height) / scan.a2.steps;
    for (const RegionPoint& p : scan.points) {
        if (!p.in_region) continue;
        double cx = px(rat_to_double(p.a1));
        double cy = py(rat_to_double(p.a2));
        os << "<rect x='" << cx - cw / 2 << "' y='" << cy - ch / 2 << "' width='" << cw
           << "' height='" << ch << "' fill='#bbbbbb'/>\n";
    }
    auto polyline = [&](double lo, double hi, double (*f)(double), const char* color) {
        os << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
        const int samples = 256;
        for (int i = 0; i <= samples; ++i) {
            double a1v = lo + (hi - lo) * i / samples;
            double a2v = f(a1v);
            os << px(a1v) << "," << py(a2v) << " ";
        }
        os << "'/>\n";
    };
    double apex_a1 = 1.0 / 35.0;
    double branch2_end = (6 * std::sqrt(5.0) - 13) / 11;
    polyline(std::max(x0, 1e-9), std::min(x1, apex_a1), &boundary_first_branch, "#d00000");
    polyline(apex_a1, std::min(x1, branch2_end), &boundary_second_branch, "#0000d0");
    os << "<circle cx='" << px(apex_a1) << "' cy='" << py(7.0 / 17.0)
       << "' r='4' fill='black'/>\n";
    os << "</svg>\n";
}

}  // namespace cantorval
