#include "trip/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace trip {

Poly::Poly(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
}

Poly Poly::monomial(const Rational& coef, size_t deg) {
    std::vector<Rational> c(deg + 1);
    c[deg] = coef;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> q(c_.size() - d.c_.size() + 1);
    const Rational& lc = d.lead();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Rational f = rem[k + d.degree()] / lc;
        q[k] = f;
        if (f == 0) continue;
        for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= f * d.c_[j];
    }
    rem.resize(d.degree() > 0 ? d.degree() : 0);
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / lead());
}

Poly Poly::compose(const Poly& inner) const {
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * inner + constant(c_[i]);
    return r;
}

Poly Poly::reflect() const {
    Poly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string Poly::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? "-" : "+";
        bool unit = (a == 1);
        if (i == 0 || !unit) {
            std::string s = a.get_str();
            out += s;
        }
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = Rational(1) / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    Poly g = gcd(p, p.derivative());
    return (p / g).monic();
}

IntPolynomial::IntPolynomial(std::vector<Integer> c) : c_(std::move(c)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::primitive_of(const Poly& p) {
    if (p.is_zero()) return IntPolynomial();
    Integer l = 1;
    for (const auto& c : p.coeffs()) {
        Integer d = c.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> z;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Rational v = c * l;
        z.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    if (z.back() < 0) g = -g;
    for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(z));
}

Poly IntPolynomial::to_poly() const {
    std::vector<Rational> r;
    for (const auto& v : c_) r.emplace_back(v);
    return Poly(std::move(r));
}

IntPolynomial IntPolynomial::negated() const {
    IntPolynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

namespace {

struct PolyParser {
    std::string s;
    size_t i = 0;
    char var = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        skip();
        return i >= s.size();
    }
    Rational number() {
        size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/' || s[j] == '.')) ++j;
        Rational r = parse_rational(s.substr(i, j - i));
        i = j;
        return r;
    }
    Poly term() {
        skip();
        Rational coef = 1;
        bool have_num = false;
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
            coef = number();
            have_num = true;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
        }
        size_t deg = 0;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            if (var && s[i] != var) throw ParseError("polynomial uses two variables: '" + s + "'");
            var = s[i++];
            deg = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw ParseError("missing exponent in '" + s + "'");
                deg = std::stoul(s.substr(i, j - i));
                i = j;
            }
        } else if (!have_num) {
            throw ParseError("bad polynomial term in '" + s + "'");
        }
        return Poly::monomial(coef, deg);
    }
    Poly parse() {
        Poly acc;
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (s[i] == '+' || s[i] == '-') {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            } else if (!first) {
                throw ParseError("expected + or - in '" + s + "'");
            }
            Poly t = term();
            acc = sign > 0 ? acc + t : acc - t;
            first = false;
        }
        if (first) throw ParseError("empty polynomial");
        return acc;
    }
};

void mul_interval(Rational& lo, Rational& hi, const Rational& a, const Rational& b) {
    Rational p[4] = {lo * a, lo * b, hi * a, hi * b};
    lo = *std::min_element(p, p + 4);
    hi = *std::max_element(p, p + 4);
}

}  // namespace

Poly parse_poly(std::string_view text) {
    PolyParser p{std::string(text)};
    return p.parse();
}

std::pair<Rational, Rational> eval_interval(const Poly& p, const Rational& lo, const Rational& hi) {
    Rational rlo = 0, rhi = 0;
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        mul_interval(rlo, rhi, lo, hi);
        rlo += c[i];
        rhi += c[i];
    }
    return {rlo, rhi};
}

}  // namespace trip
