#pragma once

#include "trip/algebraic.hpp"

#include <memory>
#include <optional>
#include <string>

namespace trip {

struct MixedFields : std::domain_error {
    MixedFields() : std::domain_error("elements of different number fields") {}
};

// Q(a) for a real algebraic a. The modulus is the squarefree defining polynomial of a with its
// rational roots removed; elements are handled by value, so the arithmetic stays sound even when
// the modulus factors further (only possible above degree 3).
class NumberField {
public:
    static std::shared_ptr<const NumberField> rationals();
    // Returns rationals() when root is rational.
    static std::shared_ptr<const NumberField> from_root(const AlgebraicReal& root);

    int degree() const { return mod_.degree(); }
    bool is_rational() const { return degree() == 1; }
    const Poly& modulus() const { return mod_; }
    const AlgebraicReal& generator() const { return gen_; }
    const AlgebraicReal& fine() const { return fine_; }
    std::string describe() const;  // "a: x^3+x-1 in (0,1)"

    NumberField(Poly modulus, AlgebraicReal gen);

private:
    Poly mod_;
    AlgebraicReal gen_;
    AlgebraicReal fine_;  // generator pre-refined for fast sign decisions
};

using FieldPtr = std::shared_ptr<const NumberField>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

class FieldElement {
public:
    FieldElement();
    FieldElement(const Rational& q);  // NOLINT: implicit promotion of rationals is intended
    FieldElement(long v) : FieldElement(Rational(v)) {}  // NOLINT
    FieldElement(FieldPtr f, Poly value);
    static FieldElement generator(const FieldPtr& f);

    const FieldPtr& field() const { return f_; }
    const Poly& value() const { return v_; }
    // Coordinates in the power basis 1, a, ..., a^(n-1).
    std::vector<Rational> coords() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rational& q) const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    bool is_zero() const;
    int sign() const;
    std::optional<Rational> as_rational() const;
    // Promote into field f (only from Q).
    FieldElement in_field(const FieldPtr& f) const;

    double to_double() const;
    std::string decimal(int digits = 12) const;
    std::string str() const;  // polynomial in a, e.g. "2a-2a^2"
    std::string full_str() const;  // with field description when irrational

    AlgebraicReal to_algebraic_real() const;
    // Defining polynomial of the value: exact minimal polynomial whenever the field degree is at most 3.
    IntPolynomial minimal_polynomial() const;

private:
    FieldPtr f_;
    Poly v_;
};

bool operator==(const FieldElement& a, const FieldElement& b);
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
// Exact comparison; falls back to algebraic_compare across fields.
int compare(const FieldElement& a, const FieldElement& b);
inline bool operator<(const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; }

// Brings all values into one common field; throws MixedFields when two distinct irrational fields occur.
std::vector<FieldElement> promote(const std::vector<FieldElement>& xs);

// Characteristic polynomial det(xI - M) of a rational matrix (Faddeev-LeVerrier).
Poly char_poly_rational(const std::vector<std::vector<Rational>>& m);

}  // namespace trip
