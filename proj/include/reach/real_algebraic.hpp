#pragma once

// Real algebraic numbers as (squarefree polynomial, isolating interval).
// Intervals refine by bisection; equality and zero tests go through
// polynomial gcds, never through epsilon comparisons.

#include <optional>
#include <vector>

#include "reach/upoly.hpp"

namespace reach {

class RealAlgebraic {
  public:
    // A rational value.
    RealAlgebraic(const Rational& v);  // NOLINT: implicit by design
    RealAlgebraic() : RealAlgebraic(Rational(0)) {}
    // Root of p (made squarefree internally) isolated by (lo, hi).
    // The interval must contain exactly one root; endpoints must not be roots.
    RealAlgebraic(const UPoly& p, Rational lo, Rational hi);

    const UPoly& minpoly() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_rational() const { return rational_.has_value(); }
    const Rational& rational_value() const;

    // Shrinks the isolating interval to width <= w.
    void refine_to(const Rational& w) const;
    void refine_step() const;

    int sign() const;
    // Sign of q at this number, exact.
    int sign_of(const UPoly& q) const;

    double approx() const;
    Rational midpoint() const { return (lo_ + hi_) / 2; }

    static int compare(const RealAlgebraic& a, const RealAlgebraic& b);
    bool operator<(const RealAlgebraic& o) const { return compare(*this, o) < 0; }
    bool operator==(const RealAlgebraic& o) const { return compare(*this, o) == 0; }

    std::string str() const;

  private:
    UPoly poly_;                         // squarefree, primitive
    mutable Rational lo_, hi_;           // isolating interval, endpoints not roots
    std::optional<Rational> rational_;   // set when the value is rational
};

// All real roots of p, in increasing order, with disjoint isolating intervals.
// p must be nonzero; multiple roots are collapsed (squarefree part is used).
std::vector<RealAlgebraic> isolate_real_roots(const UPoly& p);

// Roots of p inside (lo, hi) only.
std::vector<RealAlgebraic> isolate_real_roots_in(const UPoly& p, const Rational& lo,
                                                 const Rational& hi);

}  // namespace reach
