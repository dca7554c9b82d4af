#pragma once

// Exact arithmetic base types. All higher layers build on these; no
// floating point is used anywhere in a decision path.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reach {

using Int = mpz_class;       // arbitrary-precision integer
using Rational = mpq_class;  // arbitrary-precision rational, always canonical

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a", "-a", or "a/b". Throws std::invalid_argument on junk.
inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

inline Rational abs(const Rational& r) { return ::abs(r); }

inline Int pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rational pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 raised to negative power");
        return Rational(0);
    }
    Rational out;
    unsigned long ue = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), ue);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), ue);
    if (e < 0) {
        if (sgn(out) == 0) throw std::domain_error("inversion of zero");
        out = 1 / out;
    }
    return out;
}

inline Int floor(const Rational& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int ceil(const Rational& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return z.get_si();
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace reach
