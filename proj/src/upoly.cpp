#include "reach/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace reach {

void UPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::monomial(int degree, const Rational& coeff) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = coeff;
    return UPoly(std::move(v));
}

const Rational& UPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return UPoly(std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(std::move(v));
}

UPoly UPoly::operator*(const Rational& s) const {
    if (sgn(s) == 0) return UPoly();
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= s;
    return UPoly(std::move(v));
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    UPoly r = *this;
    std::vector<Rational> q(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rational f = r.leading() / d.leading();
        int shift = r.degree() - d.degree();
        q[static_cast<size_t>(shift)] = f;
        // r -= f * x^shift * d
        std::vector<Rational> rc = r.c_;
        for (int i = 0; i <= d.degree(); ++i)
            rc[static_cast<size_t>(i + shift)] -= f * d[i];
        r = UPoly(std::move(rc));
    }
    return {UPoly(std::move(q)), r};
}

UPoly UPoly::exact_div(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (1 / a.leading());
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    Int den(1);
    for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    Int g(0);
    for (const auto& x : c_) {
        Int n = x.get_num() * den / x.get_den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale = Rational(den) / Rational(g);
    if (sgn(leading()) < 0) scale = -scale;
    return *this * scale;
}

UPoly UPoly::squarefree_part() const {
    if (is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (degree() == 0) return UPoly::constant(Rational(1));
    UPoly g = gcd(*this, derivative());
    return exact_div(g).primitive();
}

UPoly UPoly::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in (a*x + b)
    UPoly lin({b, a});
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
}

UPoly UPoly::inflate(int k) const {
    if (is_zero()) return UPoly();
    std::vector<Rational> v(static_cast<size_t>(degree() * k) + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i * static_cast<size_t>(k)] = c_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::reversed() const {
    std::vector<Rational> v(c_.rbegin(), c_.rend());
    return UPoly(std::move(v));
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& x = c_[static_cast<size_t>(i)];
        if (sgn(x) == 0) continue;
        if (!first) os << (sgn(x) > 0 ? " + " : " - ");
        else if (sgn(x) < 0) os << "-";
        first = false;
        Rational a = ::abs(x);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    UPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const UPoly& a = chain[chain.size() - 2];
        const UPoly& b = chain[chain.size() - 1];
        UPoly r = a.divmod(b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

static int variations(const std::vector<UPoly>& chain, const Rational& x) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int sturm_count(const std::vector<UPoly>& chain, const Rational& lo, const Rational& hi) {
    if (chain.empty()) return 0;
    return variations(chain, lo) - variations(chain, hi);
}

Rational root_bound(const UPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = ::abs(p[i] / p.leading());
        if (a > m) m = a;
    }
    return m + 1;
}

}  // namespace reach
