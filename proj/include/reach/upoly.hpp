#pragma once

// Dense univariate polynomials over the rationals: the substrate for
// Sturm sequences, real root isolation, and resultant computations.

#include <optional>
#include <vector>

#include "reach/rational.hpp"

namespace reach {

class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rational& v) { return UPoly({v}); }
    // x - r
    static UPoly linear_root(const Rational& r) { return UPoly({-r, Rational(1)}); }
    static UPoly monomial(int degree, const Rational& coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    Rational eval(const Rational& x) const;
    UPoly derivative() const;

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    // Exact division; throws std::domain_error if the remainder is nonzero.
    UPoly exact_div(const UPoly& d) const;

    // Monic gcd.
    static UPoly gcd(UPoly a, UPoly b);
    // p / gcd(p, p'), normalized primitive with positive leading coefficient.
    UPoly squarefree_part() const;

    // Scales to integer coefficients with content 1 and positive leading coefficient.
    UPoly primitive() const;

    // Substitutes x -> a*x + b (used for interval transforms).
    UPoly compose_affine(const Rational& a, const Rational& b) const;
    // x -> x^k
    UPoly inflate(int k) const;
    // Reverses the coefficients (x -> 1/x up to a power of x).
    UPoly reversed() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;  // c_[i] multiplies x^i
};

// Sturm chain of p (squarefree not required; chain uses p, p').
std::vector<UPoly> sturm_chain(const UPoly& p);

// Number of distinct real roots of p in (lo, hi], by Sturm sign variations.
// Requires p(lo) != 0 and p(hi) != 0 when counting half-open intervals; the
// implementation works with the standard variation-difference convention.
int sturm_count(const std::vector<UPoly>& chain, const Rational& lo, const Rational& hi);

// A bound B such that all real roots of p lie in (-B, B).
Rational root_bound(const UPoly& p);

}  // namespace reach
