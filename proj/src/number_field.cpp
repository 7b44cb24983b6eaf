#include "trip/number_field.hpp"

#include <cmath>

namespace trip {

namespace {

const Rational& fine_width() {
    static const Rational w(1, Integer(1) << 64);
    return w;
}

// Sign of v(a) for a in the field, given v reduced mod the modulus.
int sign_in(const NumberField& f, const Poly& v) {
    if (v.degree() <= 0) return v.is_zero() ? 0 : sgn(v.lead());
    if (f.is_rational()) return sgn(v.eval(f.generator().rational_value()));
    AlgebraicReal a = f.fine();
    auto [lo, hi] = eval_interval(v, a.lo(), a.hi());
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    Poly g = gcd(v, f.modulus());
    if (g.degree() >= 1 && SturmChain(g).count(a.lo(), a.hi()) >= 1) return 0;
    while (true) {
        for (int i = 0; i < 8; ++i) a = a.bisected();
        std::tie(lo, hi) = eval_interval(v, a.lo(), a.hi());
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
}

}  // namespace

NumberField::NumberField(Poly modulus, AlgebraicReal gen)
    : mod_(std::move(modulus)), gen_(gen), fine_(gen.refined(fine_width())) {}

std::shared_ptr<const NumberField> NumberField::rationals() {
    static const auto q = std::make_shared<const NumberField>(Poly::x(), AlgebraicReal::from_rational(0));
    return q;
}

std::shared_ptr<const NumberField> NumberField::from_root(const AlgebraicReal& root) {
    if (root.is_rational()) {
        Rational r = root.rational_value();
        if (r == 0) return rationals();
        return std::make_shared<const NumberField>(Poly::x() - Poly::constant(r), root);
    }
    Poly p = squarefree_part(root.poly().to_poly());
    std::vector<Rational> rational_roots;
    for (const auto& r : isolate_real_roots(p))
        if (r.is_rational()) {
            rational_roots.push_back(r.rational_value());
            p = p / (Poly::x() - Poly::constant(r.rational_value()));
        }
    if (p.degree() >= 1 && SturmChain(p).count(root.lo(), root.hi()) == 1)
        return std::make_shared<const NumberField>(p.monic(),
                                                   AlgebraicReal(IntPolynomial::primitive_of(p), root.lo(), root.hi()));
    // The isolated root was one of the rational ones.
    for (const Rational& r : rational_roots)
        if (root.lo() < r && r < root.hi()) return from_root(AlgebraicReal::from_rational(r));
    throw std::domain_error("isolating interval holds no root");
}

std::string NumberField::describe() const {
    if (is_rational()) return "Q";
    return "a: " + gen_.poly().str() + " in (" + gen_.lo().get_str() + "," + gen_.hi().get_str() + ")";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (a->is_rational() || b->is_rational()) return a->is_rational() && b->is_rational();
    return a->modulus() == b->modulus() && algebraic_compare(a->generator(), b->generator()) == 0;
}

FieldElement::FieldElement() : f_(NumberField::rationals()) {}

FieldElement::FieldElement(const Rational& q) : f_(NumberField::rationals()), v_(Poly::constant(q)) {}

FieldElement::FieldElement(FieldPtr f, Poly value) : f_(std::move(f)) {
    if (f_->is_rational()) {
        v_ = Poly::constant(value.eval(f_->generator().rational_value()));
    } else {
        v_ = value.degree() >= f_->degree() ? value % f_->modulus() : std::move(value);
    }
}

FieldElement FieldElement::generator(const FieldPtr& f) {
    if (f->is_rational()) return FieldElement(f->generator().rational_value());
    return FieldElement(f, Poly::x());
}

std::vector<Rational> FieldElement::coords() const {
    std::vector<Rational> c(f_->degree());
    for (size_t i = 0; i < c.size(); ++i) c[i] = v_.coeff(i);
    return c;
}

namespace {

FieldPtr common(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return a;
    if (a->is_rational()) return b;
    if (b->is_rational()) return a;
    if (same_field(a, b)) return a;
    throw MixedFields();
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (f_->is_rational() && o.f_->is_rational()) return FieldElement(v_.coeff(0) + o.v_.coeff(0));
    FieldPtr f = common(f_, o.f_);
    FieldElement r;
    r.f_ = f;
    r.v_ = v_ + o.v_;
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (f_->is_rational() && o.f_->is_rational()) return FieldElement(v_.coeff(0) - o.v_.coeff(0));
    FieldPtr f = common(f_, o.f_);
    FieldElement r;
    r.f_ = f;
    r.v_ = v_ - o.v_;
    return r;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.v_ = -v_;
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (f_->is_rational() && o.f_->is_rational()) return FieldElement(v_.coeff(0) * o.v_.coeff(0));
    FieldPtr f = common(f_, o.f_);
    return FieldElement(f, v_ * o.v_);
}

FieldElement FieldElement::operator*(const Rational& q) const {
    FieldElement r = *this;
    r.v_ = v_ * q;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (f_->is_rational()) {
        if (v_.is_zero()) throw DivisionByZero();
        return FieldElement(Rational(1) / v_.coeff(0));
    }
    if (v_.is_zero()) throw DivisionByZero();
    if (v_.degree() == 0) return FieldElement(f_, Poly::constant(Rational(1) / v_.lead()));
    ExtGcd e = ext_gcd(v_, f_->modulus());
    if (e.g.degree() == 0) return FieldElement(f_, e.s);
    // Reducible modulus: v shares a factor with it. Invert modulo the cofactor when v(a) != 0.
    if (is_zero()) throw DivisionByZero();
    Poly h = f_->modulus() / e.g;
    ExtGcd e2 = ext_gcd(v_ % h, h);
    return FieldElement(f_, e2.s);
}

FieldElement FieldElement::pow(long e) const {
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    FieldElement r = FieldElement(f_, Poly::constant(1));
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

bool FieldElement::is_zero() const {
    if (v_.is_zero()) return true;
    if (v_.degree() == 0 || f_->is_rational()) return false;
    Poly g = gcd(v_, f_->modulus());
    if (g.degree() < 1) return false;
    const AlgebraicReal& a = f_->generator();
    return SturmChain(g).count(a.lo(), a.hi()) >= 1;
}

int FieldElement::sign() const { return sign_in(*f_, v_); }

std::optional<Rational> FieldElement::as_rational() const {
    if (v_.degree() <= 0) return v_.coeff(0);
    return std::nullopt;
}

FieldElement FieldElement::in_field(const FieldPtr& f) const {
    if (same_field(f_, f)) return *this;
    if (!f_->is_rational()) throw MixedFields();
    FieldElement r;
    r.f_ = f;
    r.v_ = v_;
    return r;
}

double FieldElement::to_double() const {
    if (auto q = as_rational()) return q->get_d();
    AlgebraicReal a = f_->fine();
    for (int i = 0; i < 4; ++i) a = a.bisected();
    auto [lo, hi] = eval_interval(v_, a.lo(), a.hi());
    return Rational((lo + hi) / 2).get_d();
}

std::string FieldElement::decimal(int digits) const {
    if (auto q = as_rational()) return to_decimal(*q, digits);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
    Rational w(1, scale);
    AlgebraicReal a = f_->fine();
    while (true) {
        auto [lo, hi] = eval_interval(v_, a.lo(), a.hi());
        if (hi - lo < w) return to_decimal((lo + hi) / 2, digits);
        for (int i = 0; i < 8; ++i) a = a.bisected();
    }
}

std::string FieldElement::str() const { return v_.str('a'); }

std::string FieldElement::full_str() const {
    if (as_rational()) return str();
    return str() + " where " + f_->describe();
}

Poly char_poly_rational(const std::vector<std::vector<Rational>>& a) {
    const size_t n = a.size();
    using Mat = std::vector<std::vector<Rational>>;
    auto mul = [&](const Mat& x, const Mat& y) {
        Mat r(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                if (x[i][k] == 0) continue;
                for (size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
            }
        return r;
    };
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Mat m(n, std::vector<Rational>(n));
    for (size_t k = 1; k <= n; ++k) {
        Mat am = mul(a, m);
        for (size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
        m = am;
        Mat t = mul(a, m);
        Rational tr = 0;
        for (size_t i = 0; i < n; ++i) tr += t[i][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return Poly(std::move(c));
}

AlgebraicReal FieldElement::to_algebraic_real() const {
    if (auto q = as_rational()) return AlgebraicReal::from_rational(*q);
    const int n = f_->degree();
    // Multiplication-by-v matrix on the power basis; its characteristic polynomial is the
    // resultant Res_t(m(t), x - v(t)) up to sign.
    std::vector<std::vector<Rational>> mm(n, std::vector<Rational>(n));
    Poly basis = Poly::constant(1);
    for (int j = 0; j < n; ++j) {
        Poly col = (v_ * basis) % f_->modulus();
        for (int i = 0; i < n; ++i) mm[i][j] = col.coeff(i);
        basis = (basis * Poly::x()) % f_->modulus();
    }
    Poly s = squarefree_part(char_poly_rational(mm));
    for (const auto& r : isolate_real_roots(s)) {
        if (!r.is_rational()) continue;
        if ((*this - FieldElement(r.rational_value())).is_zero()) return AlgebraicReal::from_rational(r.rational_value());
        s = s / (Poly::x() - Poly::constant(r.rational_value()));
    }
    SturmChain sc(s);
    AlgebraicReal a = f_->fine();
    while (true) {
        auto [lo, hi] = eval_interval(v_, a.lo(), a.hi());
        if (lo < hi && s.sign_at(lo) != 0 && s.sign_at(hi) != 0 && sc.count(lo, hi) == 1)
            return AlgebraicReal(IntPolynomial::primitive_of(s), lo, hi);
        for (int i = 0; i < 4; ++i) a = a.bisected();
    }
}

IntPolynomial FieldElement::minimal_polynomial() const { return to_algebraic_real().poly(); }

bool operator==(const FieldElement& a, const FieldElement& b) { return compare(a, b) == 0; }

int compare(const FieldElement& a, const FieldElement& b) {
    auto qa = a.as_rational(), qb = b.as_rational();
    if (qa && qb) return *qa < *qb ? -1 : (*qa > *qb ? 1 : 0);
    if (a.field()->is_rational() || b.field()->is_rational() || same_field(a.field(), b.field()))
        return (a - b).sign();
    return algebraic_compare(a.to_algebraic_real(), b.to_algebraic_real());
}

std::vector<FieldElement> promote(const std::vector<FieldElement>& xs) {
    FieldPtr f = NumberField::rationals();
    for (const auto& x : xs) {
        if (x.field()->is_rational()) continue;
        if (f->is_rational()) f = x.field();
        else if (!same_field(f, x.field())) throw MixedFields();
    }
    std::vector<FieldElement> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.field()->is_rational() ? x.in_field(f) : FieldElement(f, x.value()));
    return out;
}

}  // namespace trip
