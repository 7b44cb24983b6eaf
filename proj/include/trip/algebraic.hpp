#pragma once

#include "trip/polynomial.hpp"

#include <memory>
#include <vector>

namespace trip {

class SturmChain {
public:
    explicit SturmChain(const Poly& squarefree);
    // Number of distinct roots in (a, b].
    int count(const Rational& a, const Rational& b) const;
    int variations(const Rational& x) const;

private:
    std::vector<Poly> seq_;
};

// Real root of a squarefree integer polynomial, isolated in the open interval (lo, hi).
class AlgebraicReal {
public:
    AlgebraicReal() = default;
    AlgebraicReal(IntPolynomial poly, Rational lo, Rational hi);
    static AlgebraicReal from_rational(const Rational& q);

    const IntPolynomial& poly() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_rational() const { return poly_.degree() == 1; }
    Rational rational_value() const;  // requires is_rational()

    // New value with an interval of width at most w.
    AlgebraicReal refined(const Rational& w) const;
    AlgebraicReal bisected() const;
    AlgebraicReal negated() const;
    int sign() const;
    double to_double() const;
    std::string decimal(int digits = 12) const;
    std::string str() const;  // "root of x^3+x-1 in (0,1)" or the rational

    const SturmChain& sturm() const { return *chain_; }

private:
    IntPolynomial poly_;
    Rational lo_, hi_;
    std::shared_ptr<const SturmChain> chain_;
};

std::vector<AlgebraicReal> isolate_real_roots(const IntPolynomial& p);
std::vector<AlgebraicReal> isolate_real_roots(const Poly& p);

// Exact three-way comparison: -1, 0, 1.
int algebraic_compare(const AlgebraicReal& a, const AlgebraicReal& b);
int algebraic_compare(const AlgebraicReal& a, const Rational& b);

// Rational roots of p located in [lo, hi] when hi - lo < 1 / lead(p).
// Used to detect rational roots without integer factorisation.
bool rational_root_in(const IntPolynomial& p, const Rational& lo, const Rational& hi, Rational& root);

}  // namespace trip
