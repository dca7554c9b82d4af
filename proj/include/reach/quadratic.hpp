#pragma once

// Elements a + b*sqrt(d) of a quadratic extension of Q. d is a squarefree
// integer; d = 1 encodes a plain rational and d < 0 an imaginary field.
// All eigen-data of 2x2 rational matrices lives here.

#include <string>

#include "reach/rational.hpp"
#include "reach/upoly.hpp"

namespace reach {

class QuadraticNumber {
  public:
    QuadraticNumber() : a_(0), b_(0), d_(1) {}
    QuadraticNumber(Rational a) : a_(std::move(a)), b_(0), d_(1) {}  // NOLINT
    QuadraticNumber(Rational a, Rational b, Int d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return sgn(b_) == 0 || d_ == 1; }
    Rational rational_value() const;
    bool is_zero() const { return sgn(a_) == 0 && (sgn(b_) == 0 || d_ == 1); }
    bool is_real() const { return sgn(d_) > 0 || is_rational(); }

    QuadraticNumber conjugate() const;
    // a^2 - d b^2  (= x * conjugate(x))
    Rational norm() const;
    // 2a
    Rational trace() const { return 2 * a_; }
    // For d < 0: squared complex modulus a^2 + |d| b^2.
    Rational modulus_squared() const;

    QuadraticNumber operator+(const QuadraticNumber& o) const;
    QuadraticNumber operator-(const QuadraticNumber& o) const;
    QuadraticNumber operator-() const;
    QuadraticNumber operator*(const QuadraticNumber& o) const;
    QuadraticNumber operator/(const QuadraticNumber& o) const;
    QuadraticNumber inverse() const;
    QuadraticNumber pow(long e) const;
    bool operator==(const QuadraticNumber& o) const;
    bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }

    // Sign of the real value; requires a real field (d > 0 or rational).
    int sign() const;
    int compare(const QuadraticNumber& o) const { return (*this - o).sign(); }

    // Primitive integer minimal polynomial with positive leading coefficient
    // (degree 1 when rational, else the exact degree-2 polynomial).
    UPoly min_poly() const;

    // Rational lower/upper bounds at tolerance; requires a real value.
    std::pair<Rational, Rational> bounds(const Rational& tol) const;

    std::string str() const;

  private:
    void check_same_field(const QuadraticNumber& o) const;
    Rational a_, b_;
    Int d_;
};

// Squarefree factorization helper: writes n = s^2 * f with f squarefree,
// returns {f, s}. n may be negative (sign stays on f).
std::pair<Int, Int> squarefree_decompose(const Int& n);

}  // namespace reach
