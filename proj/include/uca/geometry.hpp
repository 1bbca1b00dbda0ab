#pragma once

#include "uca/rational.hpp"

#include <stdexcept>

namespace uca {

/// Where arcs live: a circle of given circumference, or a line segment
/// ("window") of given length. All arcs have length exactly 1; callers with a
/// different unit length scale their inputs.
class Domain {
public:
    enum class Kind { Circle, Line };

    /// Circles with C <= 2 are rejected: every two unit arcs would intersect
    /// and the model collapses to complete graphs.
    static Domain circle(Rat circumference) {
        if (circumference <= Rat(2))
            throw std::invalid_argument("Domain: circle circumference must exceed 2");
        return Domain(Kind::Circle, std::move(circumference));
    }

    /// A window shorter than one unit cannot hold any arc.
    static Domain line(Rat window) {
        if (window < Rat(1))
            throw std::invalid_argument("Domain: line window must be at least 1");
        return Domain(Kind::Line, std::move(window));
    }

    Kind kind() const { return kind_; }
    bool is_circle() const { return kind_ == Kind::Circle; }

    const Rat& circumference() const {
        if (!is_circle()) throw std::logic_error("Domain: not a circle");
        return extent_;
    }
    const Rat& window() const {
        if (is_circle()) throw std::logic_error("Domain: not a line");
        return extent_;
    }

    /// Valid start positions: [0, C) on the circle, [0, W-1] on the line.
    bool start_in_range(const Rat& s) const {
        if (is_circle()) return s >= Rat(0) && s < extent_;
        return s >= Rat(0) && s <= extent_ - Rat(1);
    }

    friend bool operator==(const Domain& a, const Domain& b) {
        return a.kind_ == b.kind_ && a.extent_ == b.extent_;
    }

private:
    Domain(Kind k, Rat e) : kind_(k), extent_(std::move(e)) {}

    Kind kind_;
    Rat extent_;
};

/// Circular distance between two points, min of the two directed arcs.
/// Symmetric, range [0, C/2].
inline Rat circ_dist(const Rat& a, const Rat& b, const Rat& circumference) {
    Rat d1 = rat_mod(a - b, circumference);
    Rat d2 = circumference - d1;
    return d1 <= d2 ? d1 : d2;
}

/// Two closed unit arcs intersect iff their start points are at distance at
/// most 1; touching at a single endpoint counts.
inline bool intersects(const Rat& start_u, const Rat& start_v, const Domain& domain) {
    if (domain.is_circle())
        return circ_dist(start_u, start_v, domain.circumference()) <= Rat(1);
    Rat d = start_u >= start_v ? start_u - start_v : start_v - start_u;
    return d <= Rat(1);
}

} // namespace uca
