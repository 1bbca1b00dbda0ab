#pragma once

#include "uca/representation.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace uca {

namespace svg_detail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

/// Smallest lane such that no earlier overlapping arc shares it; keeps
/// intersecting arcs visually separated. Processes vertices in canonical
/// order, so the layout is deterministic.
inline std::vector<int> assign_lanes(const std::vector<std::string>& order,
                                     const std::map<std::string, Rat>& starts,
                                     const Domain& domain) {
    std::vector<int> lanes(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (;;) {
            bool clash = false;
            for (std::size_t j = 0; j < i && !clash; ++j)
                clash = lanes[j] == lanes[i] &&
                        intersects(starts.at(order[i]), starts.at(order[j]), domain);
            if (!clash) break;
            ++lanes[i];
        }
    }
    return lanes;
}

} // namespace svg_detail

/// Deterministic SVG 1.1 rendering: the domain (circle or segment), integer
/// ticks on reduction-style circles, pinned arcs in a distinct style, and one
/// labelled arc per drawn vertex. With no witness only the pinned arcs are
/// drawn.
inline std::string render_svg(const SolveInstance& inst,
                              const std::optional<Representation>& witness) {
    using svg_detail::num;
    if (witness) {
        auto report = validate_rep(inst.graph, *witness, inst.domain);
        if (!report.ok || !extends(*witness, inst.partial))
            throw std::invalid_argument("render_svg: witness does not validate");
    }

    std::map<std::string, Rat> starts;
    std::vector<std::string> order; // canonical order, drawn back to front
    if (witness) {
        for (const auto& v : inst.graph.vertices()) {
            order.push_back(v);
            starts[v] = witness->starts.at(v);
        }
    } else {
        for (const auto& v : inst.graph.vertices())
            if (inst.partial.fixed.count(v)) {
                order.push_back(v);
                starts[v] = inst.partial.fixed.at(v);
            }
    }
    auto lanes = svg_detail::assign_lanes(order, starts, inst.domain);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"0 0 560 560\">\n";
    out += "<style>.domain{fill:none;stroke:#888;stroke-width:1}"
           ".tick{stroke:#bbb;stroke-width:1}"
           ".arc{fill:none;stroke:#1f77b4;stroke-width:3;stroke-linecap:round}"
           ".pinned{stroke:#d62728}"
           ".label{font:10px sans-serif;fill:#333}</style>\n";

    if (inst.domain.is_circle()) {
        const Rat& C = inst.domain.circumference();
        double c = C.to_double();
        double cx = 280, cy = 280, r0 = 180;
        out += "<circle class=\"domain\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
               "\" r=\"" + num(r0) + "\"/>\n";
        // Polygon-point ticks when the circumference is a small integer
        // (always the case for reduction instances).
        if (C.is_integer() && C.num() <= 200) {
            long ticks = static_cast<long>(C.num());
            for (long t = 0; t < ticks; ++t) {
                double a = 2.0 * M_PI * t / c - M_PI / 2.0;
                out += "<line class=\"tick\" x1=\"" + num(cx + (r0 - 4) * std::cos(a)) +
                       "\" y1=\"" + num(cy + (r0 - 4) * std::sin(a)) + "\" x2=\"" +
                       num(cx + (r0 + 4) * std::cos(a)) + "\" y2=\"" +
                       num(cy + (r0 + 4) * std::sin(a)) + "\"/>\n";
            }
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
            double s = starts.at(order[i]).to_double();
            double a0 = 2.0 * M_PI * s / c - M_PI / 2.0;
            double a1 = 2.0 * M_PI * (s + 1.0) / c - M_PI / 2.0;
            double r = r0 + 10.0 + 7.0 * lanes[i];
            bool pinned = inst.partial.fixed.count(order[i]) != 0;
            out += "<path class=\"arc" + std::string(pinned ? " pinned" : "") +
                   "\" d=\"M " + num(cx + r * std::cos(a0)) + " " +
                   num(cy + r * std::sin(a0)) + " A " + num(r) + " " + num(r) +
                   " 0 " + (1.0 / c > 0.5 ? "1" : "0") + " 1 " +
                   num(cx + r * std::cos(a1)) + " " + num(cy + r * std::sin(a1)) +
                   "\"/>\n";
            double am = (a0 + a1) / 2.0;
            out += "<text class=\"label\" x=\"" + num(cx + (r + 9) * std::cos(am)) +
                   "\" y=\"" + num(cy + (r + 9) * std::sin(am)) + "\">" + order[i] +
                   "</text>\n";
        }
    } else {
        double w = inst.domain.window().to_double();
        double x0 = 30, span = 500, y0 = 520;
        double unit = span / w;
        out += "<line class=\"domain\" x1=\"" + num(x0) + "\" y1=\"" + num(y0) +
               "\" x2=\"" + num(x0 + span) + "\" y2=\"" + num(y0) + "\"/>\n";
        if (inst.domain.window().is_integer() && inst.domain.window().num() <= 200) {
            long ticks = static_cast<long>(inst.domain.window().num());
            for (long t = 0; t <= ticks; ++t)
                out += "<line class=\"tick\" x1=\"" + num(x0 + unit * t) + "\" y1=\"" +
                       num(y0 - 4) + "\" x2=\"" + num(x0 + unit * t) + "\" y2=\"" +
                       num(y0 + 4) + "\"/>\n";
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
            double s = starts.at(order[i]).to_double();
            double y = y0 - 18.0 - 16.0 * lanes[i];
            bool pinned = inst.partial.fixed.count(order[i]) != 0;
            out += "<line class=\"arc" + std::string(pinned ? " pinned" : "") +
                   "\" x1=\"" + num(x0 + unit * s) + "\" y1=\"" + num(y) + "\" x2=\"" +
                   num(x0 + unit * (s + 1.0)) + "\" y2=\"" + num(y) + "\"/>\n";
            out += "<text class=\"label\" x=\"" + num(x0 + unit * (s + 0.5)) +
                   "\" y=\"" + num(y - 4) + "\">" + order[i] + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace uca
