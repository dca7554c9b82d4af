#pragma once

// Certified enclosures of natural logarithms. Every bound chain in the
// solvers compares heights and moduli through these intervals; refinement
// is monotone, so a comparison that is ever decisive stays decisive.

#include "reach/rational.hpp"

namespace reach {

struct LogInterval {
    Rational lo, hi;

    LogInterval() : lo(0), hi(0) {}
    LogInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("inverted log interval");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    LogInterval operator+(const LogInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    LogInterval operator-(const LogInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    LogInterval operator-() const { return {-hi, -lo}; }
    LogInterval operator*(const Rational& s) const {
        return sgn(s) >= 0 ? LogInterval{lo * s, hi * s} : LogInterval{hi * s, lo * s};
    }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool overlaps(const LogInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

// Interval of width <= precision containing ln(x). Requires x > 0.
LogInterval certified_log(const Rational& x, const Rational& precision);

}  // namespace reach
