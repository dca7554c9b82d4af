#include "reach/height.hpp"

namespace reach {

// Certified log of a positive quadratic irrational via rational bracketing.
static LogInterval log_of_quadratic(const QuadraticNumber& v, const Rational& precision) {
    Rational tol(1, 16);
    while (true) {
        auto [lo, hi] = v.bounds(tol);
        if (sgn(lo) > 0) {
            LogInterval a = certified_log(lo, precision / 4);
            LogInterval b = certified_log(hi, precision / 4);
            LogInterval out(a.lo, b.hi);
            if (out.width() <= precision) return out;
        }
        tol /= 16;
    }
}

LogInterval weil_height(const QuadraticNumber& x, const Rational& precision) {
    if (x.is_zero()) throw std::domain_error("height of zero");
    UPoly p = x.min_poly();  // primitive, positive leading coefficient
    if (p.degree() == 1) {
        // x = p/q in lowest terms; h = log max(|p|, |q|).
        Rational m = std::max(::abs(p[0]), ::abs(p[1]));
        return certified_log(m, precision);
    }
    // Degree 2: p2 x^2 + p1 x + p0 with integer coefficients.
    Rational p2 = p[2], p1 = p[1], p0 = p[0];
    Rational disc = p1 * p1 - 4 * p0 * p2;
    Rational half = precision;  // final h = log(M)/2, so log(M) needs width 2*precision
    if (sgn(disc) < 0) {
        // Conjugate complex roots of equal modulus rho, rho^2 = p0/p2.
        // M = |p2| * max(1, rho)^2 = max(|p2|, |p0|).
        Rational m = std::max(::abs(p2), ::abs(p0));
        LogInterval lm = certified_log(m, 2 * half);
        return lm * Rational(1, 2);
    }
    // Real roots r = (-p1 +- sqrt(disc)) / (2 p2).
    Int dsf = disc.get_num() * disc.get_den();  // sqrt(disc) = sqrt(dsf)/den
    QuadraticNumber sq(Rational(0), Rational(1) / Rational(disc.get_den()), dsf);
    QuadraticNumber r1 = (QuadraticNumber(-p1) + sq) / QuadraticNumber(2 * p2);
    QuadraticNumber r2 = (QuadraticNumber(-p1) - sq) / QuadraticNumber(2 * p2);
    auto outside = [](const QuadraticNumber& r) {
        // |r| > 1  <=>  r^2 - 1 > 0
        return (r * r - QuadraticNumber(Rational(1))).sign() > 0;
    };
    bool o1 = outside(r1), o2 = outside(r2);
    if (o1 && o2) {
        Rational m = ::abs(p0);
        return certified_log(m, 2 * half) * Rational(1, 2);
    }
    if (!o1 && !o2) {
        Rational m = ::abs(p2);
        return certified_log(m, 2 * half) * Rational(1, 2);
    }
    // Exactly one root outside: M = |p2 * r_out|, a quadratic irrational
    // (or rational if disc is a perfect square).
    QuadraticNumber m = QuadraticNumber(p2) * (o1 ? r1 : r2);
    if (m.sign() < 0) m = -m;
    if (m.is_rational()) return certified_log(m.rational_value(), 2 * half) * Rational(1, 2);
    return log_of_quadratic(m, 2 * half) * Rational(1, 2);
}

}  // namespace reach
