#include "reach/quadratic.hpp"

#include <sstream>

namespace reach {

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (sgn(n) == 0) return {Int(0), Int(1)};
    Int f = n, s(1);
    // Strip small square factors by trial division. Square factors with a
    // prime above the bound survive; that keeps arithmetic exact (sqrt(f)
    // stays irrational unless f is a perfect square, handled below) at the
    // cost of a non-canonical d in pathological inputs.
    for (Int p(2); p <= 10000; ++p) {
        Int p2 = p * p;
        if (p2 > ::abs(f)) break;
        while (f % p2 == 0) {
            f /= p2;
            s *= p;
        }
    }
    // Remaining f may itself be a perfect square.
    Int r, af = ::abs(f);
    mpz_sqrt(r.get_mpz_t(), af.get_mpz_t());
    if (r * r == af) {
        s *= r;
        f = sgn(f) < 0 ? Int(-1) : Int(1);
    }
    return {f, s};
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Int d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (sgn(d_) == 0) throw std::invalid_argument("d must be nonzero");
    auto [f, s] = squarefree_decompose(d_);
    if (s != 1) {  // normalize to squarefree d
        b_ *= Rational(s);
        d_ = f;
    }
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (sgn(b_) == 0) d_ = 1;
}

Rational QuadraticNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational value");
    return a_;
}

void QuadraticNumber::check_same_field(const QuadraticNumber& o) const {
    if (d_ != o.d_ && !is_rational() && !o.is_rational())
        throw std::invalid_argument("mixed quadratic fields");
}

QuadraticNumber QuadraticNumber::conjugate() const { return {a_, -b_, d_}; }

Rational QuadraticNumber::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

Rational QuadraticNumber::modulus_squared() const {
    if (sgn(d_) < 0) return a_ * a_ - Rational(d_) * b_ * b_;
    if (is_rational()) return a_ * a_;
    throw std::domain_error("modulus_squared needs an imaginary field or a rational");
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
    check_same_field(o);
    Int d = is_rational() ? o.d_ : d_;
    return {a_ + o.a_, b_ + o.b_, d};
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
    check_same_field(o);
    Int d = is_rational() ? o.d_ : d_;
    return {a_ - o.a_, b_ - o.b_, d};
}

QuadraticNumber QuadraticNumber::operator-() const { return {-a_, -b_, d_}; }

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
    check_same_field(o);
    Int d = is_rational() ? o.d_ : d_;
    return {a_ * o.a_ + Rational(d) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d};
}

QuadraticNumber QuadraticNumber::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero quadratic number");
    return {a_ / n, -b_ / n, d_};
}

QuadraticNumber QuadraticNumber::operator/(const QuadraticNumber& o) const {
    return *this * o.inverse();
}

QuadraticNumber QuadraticNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadraticNumber acc(Rational(1)), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool QuadraticNumber::operator==(const QuadraticNumber& o) const {
    if (is_rational() && o.is_rational()) return a_ == o.a_;
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

int QuadraticNumber::sign() const {
    if (is_rational()) return sgn(a_);
    if (sgn(d_) < 0) throw std::domain_error("sign of a non-real quadratic number");
    // sign(a + b sqrt(d)) with b != 0, d > 1 squarefree (so sqrt(d) irrational).
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with d b^2.
    int c = cmp(a_ * a_, Rational(d_) * b_ * b_);
    if (c == 0) return 0;  // unreachable for irrational sqrt(d), kept for safety
    return c > 0 ? sa : sb;
}

UPoly QuadraticNumber::min_poly() const {
    if (is_rational()) return UPoly::linear_root(a_).primitive();
    // x^2 - 2a x + (a^2 - d b^2)
    return UPoly({norm(), -trace(), Rational(1)}).primitive();
}

std::pair<Rational, Rational> QuadraticNumber::bounds(const Rational& tol) const {
    if (is_rational()) return {a_, a_};
    if (sgn(d_) < 0) throw std::domain_error("bounds of a non-real quadratic number");
    // Bracket sqrt(d) by bisection to tolerance tol / (2|b|).
    Rational lo(0), hi = Rational(d_) + 1;
    Rational target = tol / (2 * ::abs(b_));
    while (hi - lo > target) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= Rational(d_)) lo = mid;
        else hi = mid;
    }
    Rational vlo, vhi;
    if (sgn(b_) >= 0) {
        vlo = a_ + b_ * lo;
        vhi = a_ + b_ * hi;
    } else {
        vlo = a_ + b_ * hi;
        vhi = a_ + b_ * lo;
    }
    return {vlo, vhi};
}

std::string QuadraticNumber::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << a_.get_str();
        return os.str();
    }
    os << a_.get_str();
    if (sgn(b_) >= 0) os << "+" << b_.get_str();
    else os << b_.get_str();
    os << "*sqrt(" << d_.get_str() << ")";
    return os.str();
}

}  // namespace reach
