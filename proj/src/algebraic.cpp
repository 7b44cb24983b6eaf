#include "trip/algebraic.hpp"

#include <algorithm>
#include <cmath>

namespace trip {

SturmChain::SturmChain(const Poly& p) {
    seq_.push_back(p);
    seq_.push_back(p.derivative());
    while (!seq_.back().is_zero()) {
        Poly r = -(seq_[seq_.size() - 2] % seq_.back());
        if (r.is_zero()) break;
        // Positive rescaling keeps coefficients small without changing signs.
        const Rational& lc = r.lead();
        seq_.push_back(r * (Rational(1) / abs_value(lc)));
    }
    if (seq_.back().is_zero()) seq_.pop_back();
}

int SturmChain::variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
}

AlgebraicReal::AlgebraicReal(IntPolynomial poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)),
      chain_(std::make_shared<SturmChain>(poly_.to_poly())) {}

AlgebraicReal AlgebraicReal::from_rational(const Rational& q) {
    // b x - a
    IntPolynomial p({Integer(-q.get_num()), q.get_den()});
    return AlgebraicReal(p, q - 1, q + 1);
}

Rational AlgebraicReal::rational_value() const {
    return Rational(-poly_.coeffs()[0], poly_.coeffs()[1]);
}

AlgebraicReal AlgebraicReal::bisected() const {
    AlgebraicReal r = *this;
    if (is_rational()) {
        Rational v = rational_value();
        Rational w = (hi_ - lo_) / 4;
        r.lo_ = v - w;
        r.hi_ = v + w;
        return r;
    }
    Poly p = poly_.to_poly();
    Rational mid = (lo_ + hi_) / 2;
    int sm = p.sign_at(mid);
    if (sm == 0) {
        // The isolated root is rational and sits exactly at mid; step off it.
        mid = (lo_ + 2 * hi_) / 3;
        sm = p.sign_at(mid);
    }
    if (sm == p.sign_at(lo_)) r.lo_ = mid;
    else r.hi_ = mid;
    return r;
}

AlgebraicReal AlgebraicReal::refined(const Rational& w) const {
    AlgebraicReal r = *this;
    while (r.hi_ - r.lo_ > w) r = r.bisected();
    return r;
}

AlgebraicReal AlgebraicReal::negated() const {
    IntPolynomial q = IntPolynomial::primitive_of(poly_.to_poly().reflect());
    return AlgebraicReal(q, -hi_, -lo_);
}

int AlgebraicReal::sign() const { return algebraic_compare(*this, Rational(0)); }

double AlgebraicReal::to_double() const {
    if (is_rational()) return rational_value().get_d();
    AlgebraicReal r = refined(Rational(1, Integer(1) << 60));
    return Rational((r.lo_ + r.hi_) / 2).get_d();
}

std::string AlgebraicReal::decimal(int digits) const {
    if (is_rational()) return to_decimal(rational_value(), digits);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
    AlgebraicReal r = refined(Rational(1, scale));
    return to_decimal((r.lo_ + r.hi_) / 2, digits);
}

std::string AlgebraicReal::str() const {
    if (is_rational()) return rational_value().get_str();
    return "root of " + poly_.str() + " in (" + lo_.get_str() + "," + hi_.get_str() + ")";
}

bool rational_root_in(const IntPolynomial& p, const Rational& lo, const Rational& hi, Rational& root) {
    const Integer lc = abs(p.lead());
    Integer k0 = ceil_div(lo * lc), k1 = floor_div(hi * lc);
    Poly q = p.to_poly();
    for (Integer k = k0; k <= k1; ++k) {
        Rational c(k, lc);
        c.canonicalize();
        if (q.eval(c) == 0) {
            root = c;
            return true;
        }
    }
    return false;
}

namespace {

Rational cauchy_bound(const Poly& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_value(p.coeff(i) / p.lead()));
    return m + 1;
}

void isolate(const Poly& p, const SturmChain& sc, Rational a, Rational b, int n,
             std::vector<std::pair<Rational, Rational>>& out) {
    if (n == 0) return;
    if (n == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rational m = (a + b) / 2;
    for (int t = 3; p.sign_at(m) == 0; ++t) m = a + (b - a) / t;
    int left = sc.count(a, m);
    isolate(p, sc, a, m, left, out);
    isolate(p, sc, m, b, n - left, out);
}

}  // namespace

std::vector<AlgebraicReal> isolate_real_roots(const Poly& p0) {
    if (p0.is_zero()) throw ZeroPolynomial();
    Poly p = squarefree_part(p0);
    if (p.degree() == 0) return {};
    SturmChain sc(p);
    Rational bound = cauchy_bound(p);
    Rational a = -bound, b = bound;
    while (p.sign_at(a) == 0) a -= 1;
    while (p.sign_at(b) == 0) b += 1;
    std::vector<std::pair<Rational, Rational>> ivs;
    isolate(p, sc, a, b, sc.count(a, b), ivs);

    // Split off rational roots so that what remains has none.
    IntPolynomial ip = IntPolynomial::primitive_of(p);
    Rational tiny(1, abs(ip.lead()) + 1);
    std::vector<std::pair<bool, Rational>> rational(ivs.size(), {false, Rational(0)});
    Poly rest = p;
    for (size_t i = 0; i < ivs.size(); ++i) {
        AlgebraicReal r(ip, ivs[i].first, ivs[i].second);
        AlgebraicReal f = r.refined(tiny / 2);
        Rational q;
        if (rational_root_in(ip, f.lo(), f.hi(), q)) {
            rational[i] = {true, q};
            rest = rest / (Poly::x() - Poly::constant(q));
        }
    }
    IntPolynomial irr = IntPolynomial::primitive_of(rest);
    std::vector<AlgebraicReal> out;
    for (size_t i = 0; i < ivs.size(); ++i) {
        if (rational[i].first) {
            Rational q = rational[i].second;
            IntPolynomial lin({Integer(-q.get_num()), q.get_den()});
            out.push_back(AlgebraicReal(lin, ivs[i].first, ivs[i].second).refined(Rational(1, 2)));
        } else {
            // Narrow until the interval sits between consecutive integers.
            AlgebraicReal r(irr, ivs[i].first, ivs[i].second);
            while (ceil_div(r.hi()) - floor_div(r.lo()) > 1) r = r.bisected();
            out.push_back(r);
        }
    }
    return out;
}

std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p) {
    if (p.degree() < 0) throw ZeroPolynomial();
    return isolate_real_roots(p.to_poly());
}

int algebraic_compare(const AlgebraicReal& a0, const Rational& b) {
    if (a0.is_rational()) {
        Rational v = a0.rational_value();
        return v < b ? -1 : (v > b ? 1 : 0);
    }
    AlgebraicReal a = a0;
    // The interval holds exactly one root, so a root strictly inside it is the value itself.
    if (a.lo() < b && b < a.hi() && a.poly().to_poly().eval(b) == 0) return 0;
    while (true) {
        if (b <= a.lo()) return 1;
        if (b >= a.hi()) return -1;
        a = a.bisected();
    }
}

int algebraic_compare(const AlgebraicReal& a0, const AlgebraicReal& b0) {
    if (b0.is_rational()) return algebraic_compare(a0, b0.rational_value());
    if (a0.is_rational()) return -algebraic_compare(b0, a0.rational_value());
    AlgebraicReal a = a0, b = b0;
    Poly g = gcd(a.poly().to_poly(), b.poly().to_poly());
    std::unique_ptr<SturmChain> gc;
    if (g.degree() >= 1) gc = std::make_unique<SturmChain>(g);
    while (true) {
        if (a.hi() <= b.lo()) return -1;
        if (b.hi() <= a.lo()) return 1;
        if (gc) {
            Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
            // Endpoints of either interval are never roots of g (g divides both polys).
            if (gc->count(lo, hi) >= 1) return 0;
        }
        a = a.bisected();
        b = b.bisected();
    }
}

}  // namespace trip
