#pragma once

#include "trip/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trip {

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("zero polynomial") {}
};

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    Poly(std::initializer_list<long> c);
    static Poly constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }
    static Poly x() { return Poly(std::vector<Rational>{0, 1}); }
    static Poly monomial(const Rational& coef, size_t deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& lead() const { return c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly derivative() const;
    Poly monic() const;
    Poly compose(const Poly& inner) const;
    Poly reflect() const;  // p(-x)

    Rational eval(const Rational& x) const;
    // Sign of p(x) without materialising the value where possible.
    int sign_at(const Rational& x) const { return sgn(eval(x)); }

    std::string str(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly gcd(Poly a, Poly b);  // monic, or zero
// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd { Poly g, s, t; };
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& p);

// Polynomial with integer coefficients, lowest degree first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> c);
    IntPolynomial(std::initializer_list<long> c);
    // Primitive integer multiple of p with positive leading coefficient.
    static IntPolynomial primitive_of(const Poly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& lead() const { return c_.back(); }
    Poly to_poly() const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }
    IntPolynomial negated() const;
    std::string str(char var = 'x') const { return to_poly().str(var); }

private:
    std::vector<Integer> c_;
};

// Grammar: sums of terms  [+-] [coef] [*] [var [^ n]] with rational coefficients. Any single letter is the variable.
Poly parse_poly(std::string_view text);

// Interval [lo, hi] evaluation of p over x in [lo, hi] (Horner with interval arithmetic).
std::pair<Rational, Rational> eval_interval(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace trip
