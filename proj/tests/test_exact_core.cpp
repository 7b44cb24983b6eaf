#include "doctest.h"
#include "support.hpp"

#include <cmath>

using namespace trip;
using testing_support::Gen;
using testing_support::field_of;

namespace {

// Independent determinant by Laplace expansion along the first row, over polynomials.
Poly laplace_det(const std::vector<std::vector<Poly>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Poly term = m[0][j] * laplace_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Poly cofactor_charpoly(const IntMatrix& a) {
    const size_t n = a.dim();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            m[i][j] = Poly::constant(Rational(-a(i, j)));
            if (i == j) m[i][j] = m[i][j] + Poly::x();
        }
    return laplace_det(m);
}

Integer laplace_int_det(const IntMatrix& a) {
    std::vector<std::vector<Poly>> m(a.dim(), std::vector<Poly>(a.dim()));
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j) m[i][j] = Poly::constant(Rational(a(i, j)));
    return laplace_det(m).coeff(0).get_num();
}

IntMatrix A0(size_t d) {
    IntMatrix m(d);
    for (size_t j = 0; j + 1 < d; ++j) m(j + 1, j) = 1;
    m(0, d - 1) = 1;
    m(d - 1, d - 1) = 1;
    return m;
}

IntMatrix A1(size_t d) {
    IntMatrix m = IntMatrix::identity(d);
    m(0, d - 1) = 1;
    return m;
}

// Resultant of p and q via the Sylvester matrix, evaluated numerically in z through polynomial entries.
Poly sylvester_resultant(const Poly& p, const std::vector<Poly>& q) {
    // q is a polynomial in t whose coefficients are polynomials in z.
    const int m = p.degree(), n = static_cast<int>(q.size()) - 1;
    const int size = m + n;
    std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = Poly::constant(p.coeff(m - i));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = q[n - i];
    return laplace_det(s);
}

}  // namespace

TEST_SUITE("exact-core") {

TEST_CASE("permutation matrices match the displayed fixtures") {
    CHECK(perm_to_matrix(Permutation::from_cycles("(1 3 2)", 3)) == IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    CHECK(perm_to_matrix(Permutation::from_cycles("e", 3)) == IntMatrix::identity(3));
    CHECK(perm_to_matrix(Permutation::from_cycles("(2 3)", 3)) == IntMatrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    CHECK(perm_to_matrix(Permutation::from_cycles("(123)", 3)) == IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
}

TEST_CASE("column action of a permutation matrix") {
    // Columns of B are v1, v2, v3; (v1 v2 v3) P(1 3 2) = (v2 v3 v1).
    IntMatrix b = IntMatrix::ones_upper(3);
    IntMatrix r = b * perm_to_matrix(Permutation::from_cycles("(132)", 3));
    CHECK(r.column(0) == b.column(1));
    CHECK(r.column(1) == b.column(2));
    CHECK(r.column(2) == b.column(0));
}

TEST_CASE("permutation parsing and printing") {
    CHECK(Permutation::parse("1,3,2", 3) == Permutation::from_cycles("(2 3)", 3));
    CHECK(Permutation::parse("(12)(34)", 4).one_line() == "2,1,4,3");
    CHECK(Permutation::from_cycles("(1 3 2)", 3).cycles() == "(1 3 2)");
    CHECK(Permutation::identity(3).cycles() == "e");
    CHECK_THROWS_AS(Permutation::from_cycles("(14)", 3), ParseError);
    CHECK_THROWS_AS(Permutation::from_one_line("1,1,2"), ParseError);
    CHECK(all_permutations(3).size() == 6);
    CHECK(all_permutations(3).front().is_identity());
}

TEST_CASE("property: P(p) P(p^-1) = I and P is a homomorphism") {
    Gen g(11);
    for (int t = 0; t < 200; ++t) {
        int d = static_cast<int>(g.range(2, 7));
        Permutation p = g.perm(d), q = g.perm(d);
        CHECK(perm_to_matrix(p) * perm_to_matrix(p.inverse()) == IntMatrix::identity(d));
        CHECK(perm_to_matrix(p * q) == perm_to_matrix(p) * perm_to_matrix(q));
    }
}

TEST_CASE("A0, A1 and B are unimodular in every dimension") {
    // det A0 = (-1)^(d+1): it is 1 for odd d only.
    for (size_t d = 2; d <= 8; ++d) {
        const long s = (d % 2 == 1) ? 1 : -1;
        CHECK(laplace_int_det(A0(d)) == s);
        CHECK(A0(d).det() == s);
        CHECK(laplace_int_det(A1(d)) == 1);
        CHECK(A1(d).det() == 1);
        CHECK(laplace_int_det(IntMatrix::ones_upper(d)) == 1);
    }
}

TEST_CASE("matrix algebra") {
    IntMatrix b = IntMatrix::ones_upper(3);
    IntMatrix a0 = A0(3), a1 = A1(3);
    IntMatrix ba0 = b * a0;
    // (v1 v2 v3) A0 = (v2, v3, v1 + v3)
    CHECK(ba0.column(0) == b.column(1));
    CHECK(ba0.column(1) == b.column(2));
    CHECK(ba0.column(2) == std::vector<Integer>{2, 1, 1});
    CHECK(a1.pow(3) == IntMatrix{{1, 0, 3}, {0, 1, 0}, {0, 0, 1}});
    CHECK(a1.pow(-2) == IntMatrix{{1, 0, -2}, {0, 1, 0}, {0, 0, 1}});
    for (long k = 0; k < 6; ++k) {
        IntMatrix m = (b * a0.inverse() * a1.pow(-k) * b.inverse()).transpose();
        CHECK(m == IntMatrix{{0, 0, 1}, {1, 0, -1}, {0, 1, -k}});
    }
    CHECK_THROWS_AS(IntMatrix({{2, 0}, {0, 1}}).inverse(), NonUnimodular);
}

TEST_CASE("property: inverse of random unimodular products") {
    Gen g(12);
    for (int t = 0; t < 100; ++t) {
        size_t d = static_cast<size_t>(g.range(3, 5));
        IntMatrix m = IntMatrix::identity(d);
        for (int i = 0; i < 6; ++i)
            m = m * perm_to_matrix(g.perm(static_cast<int>(d))) * (g.coin() ? A0(d) : A1(d));
        CHECK(m * m.inverse() == IntMatrix::identity(d));
        CHECK(m.det() == laplace_int_det(m));
    }
}

TEST_CASE("characteristic polynomial against cofactor expansion") {
    IntMatrix ex{{0, -1, 2}, {1, 3, -6}, {-1, -2, 5}};
    Poly cp = char_poly_rational({{0, -1, 2}, {1, 3, -6}, {-1, -2, 5}});
    CHECK(cp == cofactor_charpoly(ex));
    for (long A = 0; A < 4; ++A)
        for (long B = 0; B < 4; ++B) {
            std::vector<std::vector<Rational>> m{{0, 0, 1}, {1, 0, -B}, {0, 1, -A}};
            // x^3 + A x^2 + B x - 1
            CHECK(char_poly_rational(m) == Poly({-1, B, A, 1}));
        }
    CHECK(char_poly_rational({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == Poly({-1, 3, -3, 1}));
    Gen g(13);
    for (int t = 0; t < 40; ++t) {
        IntMatrix m = IntMatrix::identity(3);
        for (int i = 0; i < 5; ++i) m = m * perm_to_matrix(g.perm(3)) * (g.coin() ? A0(3) : A1(3));
        std::vector<std::vector<Rational>> q(3, std::vector<Rational>(3));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) q[i][j] = m(i, j);
        CHECK(char_poly_rational(q) == cofactor_charpoly(m));
    }
}

TEST_CASE("root of 2x^3-5x^2+x+1 in (0,1) is the x coordinate of an eigenvector of the period example") {
    // The matrix has eigenvalue 2a^2 - a for a the root in (0,1).
    FieldPtr f = field_of("2x^3-5x^2+x+1", 0, 1);
    FieldElement a = FieldElement::generator(f);
    FieldElement lam = a * a * Rational(2) - a;
    Poly cp = char_poly_rational({{0, -1, 2}, {1, 3, -6}, {-1, -2, 5}});
    FieldElement acc = Rational(0);
    for (int i = cp.degree(); i >= 0; --i) acc = acc * lam + FieldElement(cp.coeff(i));
    CHECK(acc.is_zero());
}

TEST_CASE("real root isolation") {
    auto r = isolate_real_roots(IntPolynomial({-1, 1, 0, 1}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].lo() >= 0);
    CHECK(r[0].hi() <= 1);
    CHECK(algebraic_compare(r[0], Rational(0)) > 0);
    CHECK(algebraic_compare(r[0], Rational(1)) < 0);

    auto s = isolate_real_roots(IntPolynomial({-1, 0, 1}));
    REQUIRE(s.size() == 2);
    CHECK(s[0].is_rational());
    CHECK(s[0].rational_value() == -1);
    CHECK(s[1].rational_value() == 1);

    auto u = isolate_real_roots(IntPolynomial({1, 1, -5, 2}));
    int in01 = 0;
    for (const auto& x : u)
        if (algebraic_compare(x, Rational(0)) > 0 && algebraic_compare(x, Rational(1)) < 0) ++in01;
    CHECK(in01 == 1);
    CHECK_THROWS_AS(isolate_real_roots(IntPolynomial()), ZeroPolynomial);

    // Repeated and rational factors: (x-1)^2 (x^2-2)
    auto w = isolate_real_roots(Poly({1, -2, 1}) * Poly({-2, 0, 1}));
    REQUIRE(w.size() == 3);
    CHECK(w[1].is_rational());
    CHECK(w[1].rational_value() == 1);
    CHECK(w[0].poly() == IntPolynomial({-2, 0, 1}));
}

TEST_CASE("property: char poly changes sign across each isolating interval") {
    Gen g(14);
    for (int t = 0; t < 60; ++t) {
        IntMatrix m = IntMatrix::identity(3);
        for (int i = 0; i < 4; ++i) m = m * perm_to_matrix(g.perm(3)) * (g.coin() ? A0(3) : A1(3));
        std::vector<std::vector<Rational>> q(3, std::vector<Rational>(3));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) q[i][j] = m(i, j);
        Poly cp = squarefree_part(char_poly_rational(q));
        auto roots = isolate_real_roots(cp);
        for (size_t i = 0; i < roots.size(); ++i) {
            CHECK(cp.sign_at(roots[i].lo()) * cp.sign_at(roots[i].hi()) < 0);
            if (i) CHECK(roots[i - 1].hi() <= roots[i].lo());
        }
    }
}

TEST_CASE("algebraic comparison") {
    auto r = isolate_real_roots(IntPolynomial({-1, 1, 0, 1}))[0];
    // Oracle: 8x^3+8x-8 is increasing and negative at 1/2.
    CHECK(Poly({-8, 8, 0, 8}).sign_at(Rational(1, 2)) < 0);
    CHECK(algebraic_compare(r, Rational(1, 2)) > 0);
    CHECK(algebraic_compare(r, r) == 0);
    CHECK(algebraic_compare(r, r.refined(Rational(1, 1000))) == 0);
    auto c2 = isolate_real_roots(IntPolynomial({-1, 0, 0, 2}))[0];  // 2^(-1/3)
    auto c4 = isolate_real_roots(IntPolynomial({-1, 0, 0, 4}))[0];  // 4^(-1/3)
    CHECK(algebraic_compare(c2, c4) > 0);
    CHECK(algebraic_compare(c4, c2) < 0);
    CHECK(std::abs(r.to_double() - 0.6823278038280193) < 1e-12);
}

TEST_CASE("field arithmetic in Q(a), a^3+a-1=0") {
    FieldPtr f = field_of("x^3+x-1", 0, 1);
    FieldElement a = FieldElement::generator(f);
    CHECK((a * a * a) == FieldElement(1) - a);
    CHECK((a * (a * a)).value() == Poly({1, -1}));
    CHECK(a.inverse().value() == Poly({1, 0, 1}));
    CHECK(a.sign() > 0);
    CHECK((a - Rational(1, 2)).sign() > 0);
    CHECK_THROWS_AS((a - a).inverse(), DivisionByZero);
    CHECK(a.full_str() == "a where a: x^3+x-1 in (" + f->generator().lo().get_str() + "," +
                              f->generator().hi().get_str() + ")");
}

TEST_CASE("cube roots of 2: the golden point coordinates") {
    FieldPtr f = field_of("x^3-2", 1, 2);
    FieldElement c = FieldElement::generator(f);
    FieldElement x = c.inverse(), y = (c * c).inverse();
    CHECK(compare(x, y) > 0);
    CHECK(x * x == y);
    CHECK(std::abs(x.to_double() - std::pow(2.0, -1.0 / 3)) < 1e-14);
}

TEST_CASE("property: number field ring axioms and inverses") {
    Gen g(15);
    FieldPtr fields[] = {field_of("x^3+x-1", 0, 1), field_of("2x^3-5x^2+x+1", 0, 1), field_of("x^2-5", 2, 3),
                         field_of("x^3-2", 1, 2)};
    for (const auto& f : fields) {
        for (int t = 0; t < 40; ++t) {
            auto rnd = [&] {
                std::vector<Rational> c;
                for (int i = 0; i < f->degree(); ++i) c.push_back(g.rational(20, 9));
                return FieldElement(f, Poly(c));
            };
            FieldElement x = rnd(), y = rnd(), z = rnd();
            CHECK(x * y == y * x);
            CHECK(x + y == y + x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == FieldElement(1));
            // Ordering agrees with double approximations when clearly separated.
            double dx = x.to_double(), dy = y.to_double();
            if (std::abs(dx - dy) > 1e-9) CHECK((compare(x, y) < 0) == (dx < dy));
        }
    }
}

TEST_CASE("reducible moduli are handled by value") {
    // x^3+3x^2+x-1 = (x+1)(x^2+2x-1); the root in (0,1) is sqrt(2)-1.
    FieldPtr f = field_of("x^3+3x^2+x-1", 0, 1);
    CHECK(f->degree() == 2);
    FieldElement a = FieldElement::generator(f);
    CHECK(a * a + a * Rational(2) == FieldElement(1));
    // x^4+x^3+x-1 = (x^2+1)(x^2+x-1): the modulus keeps the complex factor.
    FieldPtr h = field_of("x^4+x^3+x-1", 0, 1);
    FieldElement b = FieldElement::generator(h);
    CHECK(h->degree() == 4);
    CHECK((b * b + b - FieldElement(1)).is_zero());
    FieldElement u = b * b + b;  // equals 1 but is not reduced to a constant by the reducible modulus
    CHECK(u == FieldElement(1));
    FieldElement v = b * b + FieldElement(1);  // nonzero (a^2 = 1 - a)
    CHECK(v * v.inverse() == FieldElement(1));
}

TEST_CASE("minimal polynomials by resultant") {
    FieldPtr f = field_of("x^3+x-1", 0, 1);
    FieldElement a = FieldElement::generator(f);
    CHECK(a.minimal_polynomial() == IntPolynomial({-1, 1, 0, 1}));
    CHECK((a * a).minimal_polynomial() == IntPolynomial({-1, 1, 2, 1}));
    // Oracle: Sylvester resultant Res_t(t^3+t-1, z - t^2) as a polynomial in z.
    Poly res = sylvester_resultant(Poly({-1, 1, 0, 1}), {Poly::x(), Poly::constant(0), Poly::constant(-1)});
    CHECK(IntPolynomial::primitive_of(res) == IntPolynomial({-1, 1, 2, 1}));
    CHECK(FieldElement(Rational(1, 2)).minimal_polynomial() == IntPolynomial({-1, 2}));
    // Cross-field equality: 2^(1/3) squared vs 4^(1/3).
    FieldPtr c2 = field_of("x^3-2", 1, 2), c4 = field_of("x^3-4", 1, 2);
    FieldElement s = FieldElement::generator(c2);
    CHECK(compare(s * s, FieldElement::generator(c4)) == 0);
    CHECK(compare(s, FieldElement::generator(c4)) < 0);
}

TEST_CASE("text syntax") {
    CHECK(parse_rational("3/7") == Rational(3, 7));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK(parse_poly("x^3+x-1") == Poly({-1, 1, 0, 1}));
    CHECK(parse_poly("2x^3 - 5x^2 + x + 1") == Poly({1, 1, -5, 2}));
    CHECK(parse_poly("1/2*a^2-a") == Poly({0, -1}) + Poly::monomial(Rational(1, 2), 2));
    CHECK(Poly({-1, 1, 2, 1}).str() == "x^3+2x^2+x-1");
    CHECK_THROWS_AS(parse_poly("x^2+y"), ParseError);
    CHECK(to_decimal(Rational(-1, 3), 4) == "-0.3333");
}

}  // TEST_SUITE
