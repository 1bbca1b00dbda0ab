#pragma once

#include "uca/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace uca {

/// Rational plus an integer multiple of a formal positive infinitesimal,
/// ordered lexicographically. A strict geometric constraint "d > 1" is
/// carried through the solver as "d >= 1 + iota"; the coefficient stays an
/// integer because every strict constraint contributes exactly +-1 iota.
struct EpsRat {
    Rat real;
    std::int64_t inf = 0;

    EpsRat() = default;
    EpsRat(Rat r) : real(std::move(r)) {}
    EpsRat(Rat r, std::int64_t m) : real(std::move(r)), inf(m) {}

    static EpsRat iota(std::int64_t m = 1) { return EpsRat(Rat(0), m); }

    friend EpsRat operator+(const EpsRat& a, const EpsRat& b) {
        return EpsRat(a.real + b.real, a.inf + b.inf);
    }
    friend EpsRat operator-(const EpsRat& a, const EpsRat& b) {
        return EpsRat(a.real - b.real, a.inf - b.inf);
    }
    EpsRat operator-() const { return EpsRat(-real, -inf); }
    EpsRat& operator+=(const EpsRat& o) { return *this = *this + o; }
    EpsRat& operator-=(const EpsRat& o) { return *this = *this - o; }

    friend bool operator==(const EpsRat& a, const EpsRat& b) {
        return a.real == b.real && a.inf == b.inf;
    }
    friend std::strong_ordering operator<=>(const EpsRat& a, const EpsRat& b) {
        auto c = a.real <=> b.real;
        if (c != std::strong_ordering::equal) return c;
        return a.inf <=> b.inf;
    }

    /// Substitutes a concrete positive rational for iota.
    Rat substitute(const Rat& iota_value) const {
        return real + Rat(inf) * iota_value;
    }

    std::string str() const {
        if (inf == 0) return real.str();
        return real.str() + (inf > 0 ? "+" : "") + std::to_string(inf) + "i";
    }
};

} // namespace uca
