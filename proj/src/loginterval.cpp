#include "reach/loginterval.hpp"

namespace reach {

// ln((1+t)/(1-t)) = 2*atanh(t) = 2*sum t^(2i+1)/(2i+1); for 0 <= t < 1 the
// tail after the i-th term is bounded by t^(2i+3)/((2i+3)(1-t^2)).
static LogInterval atanh2_interval(const Rational& t, const Rational& precision) {
    Rational sum(0), term = t, t2 = t * t;
    long k = 1;
    Rational tail_den = (1 - t2);
    while (true) {
        sum += term / k;
        Rational tail = 2 * term * t2 / ((k + 2) * tail_den);
        if (tail <= precision) return {2 * sum, 2 * sum + tail};
        term *= t2;
        k += 2;
    }
}

LogInterval certified_log(const Rational& x, const Rational& precision) {
    if (sgn(x) <= 0) throw std::domain_error("certified_log of nonpositive value");
    if (precision <= 0) throw std::invalid_argument("nonpositive precision");
    if (x == 1) return {Rational(0), Rational(0)};
    if (x < 1) return -certified_log(1 / x, precision);

    // Reduce x = y * 2^k with y in [1, 2); ln x = k ln 2 + ln y.
    Rational y = x;
    long k = 0;
    while (y >= 2) {
        y /= 2;
        ++k;
    }
    Rational sub = precision / (2 * (k + 1));
    LogInterval acc(Rational(0), Rational(0));
    if (k > 0) {
        // ln 2 = 2*atanh(1/3)
        acc = atanh2_interval(Rational(1, 3), sub) * Rational(k);
    }
    if (y != 1) {
        // ln y = 2*atanh((y-1)/(y+1)),  t in [0, 1/3) for y in [1, 2)
        acc = acc + atanh2_interval((y - 1) / (y + 1), sub);
    }
    return acc;
}

}  // namespace reach
