#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uca {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in canonical form: denominator > 0,
/// gcd(|num|, den) = 1. This is the coordinate type for every arc position;
/// there is no floating-point fallback anywhere in the library.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}

    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0)
            throw std::invalid_argument("Rat: zero denominator");
        normalize();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Textual form "p/q"; integers render with an explicit "/1".
    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

    /// Parses "p/q" or a bare integer "p"; optional leading sign.
    /// Non-canonical input ("2/4", "3/-6") is normalized; q = 0 is rejected.
    static std::optional<Rat> parse(std::string_view s) {
        if (s.empty()) return std::nullopt;
        auto slash = s.find('/');
        std::string_view ns = s.substr(0, slash);
        std::string_view ds = slash == std::string_view::npos
                                  ? std::string_view("1")
                                  : s.substr(slash + 1);
        auto read_int = [](std::string_view t) -> std::optional<Int> {
            if (t.empty()) return std::nullopt;
            std::size_t i = 0;
            if (t[0] == '+' || t[0] == '-') i = 1;
            if (i == t.size()) return std::nullopt;
            for (std::size_t j = i; j < t.size(); ++j)
                if (t[j] < '0' || t[j] > '9') return std::nullopt;
            Int v(std::string(t.substr(i)));
            return t[0] == '-' ? Int(-v) : v;
        };
        auto n = read_int(ns);
        auto d = read_int(ds);
        if (!n || !d || *d == 0) return std::nullopt;
        return Rat(*n, *d);
    }

    /// Lossy; used only for SVG coordinates.
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

/// x mod m, result in [0, m); m > 0.
inline Rat rat_mod(const Rat& x, const Rat& m) {
    if (m.sign() <= 0)
        throw std::invalid_argument("rat_mod: modulus must be positive");
    // floor(x / m) without a division operator on Rat.
    Int n = x.num() * m.den();
    Int d = x.den() * m.num();
    Int q = n / d;
    if (n % d != 0 && (n < 0) != (d < 0)) --q;
    return x - Rat(q) * m;
}

/// 2^(-t) as an exact rational.
inline Rat rat_pow2_inv(unsigned t) {
    Int d = 1;
    d <<= t;
    return Rat(1, d);
}

} // namespace uca
