#include "reach/real_algebraic.hpp"

#include <sstream>

namespace reach {

RealAlgebraic::RealAlgebraic(const Rational& v)
    : poly_(UPoly::linear_root(v)), lo_(v - 1), hi_(v + 1), rational_(v) {}

RealAlgebraic::RealAlgebraic(const UPoly& p, Rational lo, Rational hi)
    : poly_(p.squarefree_part()), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ >= hi_) throw std::invalid_argument("empty isolating interval");
    if (sgn(poly_.eval(lo_)) == 0 || sgn(poly_.eval(hi_)) == 0)
        throw std::invalid_argument("isolating interval endpoint is a root");
    if (sgn(poly_.eval(lo_)) == sgn(poly_.eval(hi_)))
        throw std::invalid_argument("interval does not isolate a sign change");
    if (poly_.degree() == 1) rational_ = -poly_[0] / poly_[1];
}

const Rational& RealAlgebraic::rational_value() const {
    if (!rational_) throw std::domain_error("not a rational value");
    return *rational_;
}

void RealAlgebraic::refine_step() const {
    if (rational_) {
        Rational w = (hi_ - lo_) / 4;
        lo_ = *rational_ - w;
        hi_ = *rational_ + w;
        return;
    }
    Rational mid = (lo_ + hi_) / 2;
    int sm = sgn(poly_.eval(mid));
    if (sm == 0) {
        // Landed exactly on the root: it is rational.
        const_cast<RealAlgebraic*>(this)->rational_ = mid;
        Rational w = (hi_ - lo_) / 4;
        lo_ = mid - w;
        hi_ = mid + w;
        return;
    }
    if (sm == sgn(poly_.eval(lo_))) lo_ = mid;
    else hi_ = mid;
}

void RealAlgebraic::refine_to(const Rational& w) const {
    while (hi_ - lo_ > w) refine_step();
}

int RealAlgebraic::sign() const {
    if (rational_) return sgn(*rational_);
    if (lo_ < 0 && hi_ > 0 && sgn(poly_.eval(Rational(0))) == 0) {
        // 0 is a root inside the isolating interval, hence the root.
        const_cast<RealAlgebraic*>(this)->rational_ = Rational(0);
        return 0;
    }
    while (true) {
        if (sgn(lo_) >= 0) return 1;   // root lies strictly above lo_ >= 0
        if (sgn(hi_) <= 0) return -1;  // root lies strictly below hi_ <= 0
        refine_step();
        if (rational_) return sgn(*rational_);
    }
}

int RealAlgebraic::sign_of(const UPoly& q) const {
    if (q.is_zero()) return 0;
    if (rational_) return sgn(q.eval(*rational_));
    if (q.degree() == 0) return sgn(q.leading());
    // q(alpha) == 0 iff alpha is a root of gcd(q, minpoly).
    UPoly g = UPoly::gcd(q, poly_);
    if (!g.is_zero() && g.degree() >= 1) {
        auto gchain = sturm_chain(g);
        if (sturm_count(gchain, lo_, hi_) > 0) return 0;
    }
    // Nonzero value: shrink until the interval is free of roots of q.
    auto qchain = sturm_chain(q);
    while (true) {
        if (sturm_count(qchain, lo_, hi_) == 0 && sgn(q.eval(lo_)) != 0) {
            int s = sgn(q.eval(midpoint()));
            if (s != 0) return s;
        }
        refine_step();
        if (rational_) return sgn(q.eval(*rational_));
    }
}

double RealAlgebraic::approx() const {
    refine_to(Rational(1, 1000000000));
    return to_double((lo_ + hi_) / 2);
}

int RealAlgebraic::compare(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.rational_ && b.rational_) return cmp(*a.rational_, *b.rational_);
    if (a.rational_) return -b.sign_of(UPoly::linear_root(*a.rational_));
    if (b.rational_) return a.sign_of(UPoly::linear_root(*b.rational_));
    // Equal iff gcd of the minimal polynomials has a root in both intervals'
    // intersection (that root is then the isolated root of each).
    UPoly g = UPoly::gcd(a.poly_, b.poly_);
    if (!g.is_zero() && g.degree() >= 1) {
        Rational lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
        if (lo < hi) {
            auto chain = sturm_chain(g);
            if (sturm_count(chain, lo, hi) > 0) return 0;
        }
    }
    while (true) {
        if (a.hi_ <= b.lo_) return -1;
        if (b.hi_ <= a.lo_) return 1;
        a.refine_step();
        b.refine_step();
        if (a.rational_ && b.rational_) return cmp(*a.rational_, *b.rational_);
    }
}

std::string RealAlgebraic::str() const {
    std::ostringstream os;
    if (rational_) {
        os << rational_->get_str();
    } else {
        refine_to(Rational(1, 100000000));
        os << "root(" << poly_.str() << ") ~ " << to_double(midpoint());
    }
    return os.str();
}

// Recursive bisection; p squarefree, p(lo) != 0, p(hi) != 0.
static void isolate_rec(const UPoly& p, const std::vector<UPoly>& chain, const Rational& lo,
                        const Rational& hi, std::vector<RealAlgebraic>& out) {
    int n = sturm_count(chain, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        out.emplace_back(p, lo, hi);
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (sgn(p.eval(mid)) == 0) {
        out.emplace_back(mid);
        Rational eps = (hi - lo) / 4;
        while (sgn(p.eval(mid - eps)) == 0 || sgn(p.eval(mid + eps)) == 0 ||
               sturm_count(chain, mid - eps, mid + eps) != 1)
            eps /= 2;
        isolate_rec(p, chain, lo, mid - eps, out);
        isolate_rec(p, chain, mid + eps, hi, out);
        return;
    }
    isolate_rec(p, chain, lo, mid, out);
    isolate_rec(p, chain, mid, hi, out);
}

std::vector<RealAlgebraic> isolate_real_roots_in(const UPoly& p, const Rational& lo,
                                                 const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of zero polynomial");
    UPoly sf = p.squarefree_part();
    std::vector<RealAlgebraic> out;
    if (sf.degree() < 1) return out;
    Rational a = lo, b = hi;
    Rational nudge = (hi - lo) / 1000000 + Rational(1, 1000000);
    while (sgn(sf.eval(a)) == 0) a -= nudge;
    while (sgn(sf.eval(b)) == 0) b += nudge;
    auto chain = sturm_chain(sf);
    isolate_rec(sf, chain, a, b, out);
    std::sort(out.begin(), out.end(),
              [](const RealAlgebraic& x, const RealAlgebraic& y) { return x < y; });
    // Drop roots the endpoint nudges let in.
    std::vector<RealAlgebraic> clipped;
    RealAlgebraic L(lo), H(hi);
    for (auto& r : out)
        if (RealAlgebraic::compare(r, L) >= 0 && RealAlgebraic::compare(r, H) <= 0)
            clipped.push_back(r);
    return clipped;
}

std::vector<RealAlgebraic> isolate_real_roots(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of zero polynomial");
    UPoly sf = p.squarefree_part();
    std::vector<RealAlgebraic> out;
    if (sf.degree() < 1) return out;
    Rational b = root_bound(sf);
    auto chain = sturm_chain(sf);
    isolate_rec(sf, chain, -b, b, out);
    std::sort(out.begin(), out.end(),
              [](const RealAlgebraic& x, const RealAlgebraic& y) { return x < y; });
    return out;
}

}  // namespace reach
