#include "trip/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trip {

// ---- words -----------------------------------------------------------------

PeriodicWord PeriodicWord::make(std::vector<int> period, std::vector<int> preperiod) {
    if (period.empty()) throw EmptyPeriod();
    for (int b : period)
        if (b != 0 && b != 1) throw ParseError("word bits must be 0 or 1");
    for (int b : preperiod)
        if (b != 0 && b != 1) throw ParseError("word bits must be 0 or 1");
    return {std::move(preperiod), std::move(period)};
}

PeriodicWord PeriodicWord::from_trip_digits(const std::vector<long>& period, const std::vector<long>& preperiod) {
    auto expand = [](const std::vector<long>& digits) {
        std::vector<int> bits;
        for (long a : digits) {
            if (a < 0) throw std::invalid_argument("trip digits are nonnegative");
            bits.insert(bits.end(), static_cast<size_t>(a), 1);
            bits.push_back(0);
        }
        return bits;
    };
    return make(expand(period), expand(preperiod));
}

namespace {

std::vector<int> parse_bits(std::string_view s) {
    std::vector<int> out;
    for (char ch : s) {
        if (ch == '0' || ch == '1') {
            out.push_back(ch - '0');
        } else if (ch != ',' && ch != ' ' && ch != '(' && ch != ')') {
            throw ParseError("bad character '" + std::string(1, ch) + "' in word");
        }
    }
    return out;
}

std::string join_bits(const std::vector<int>& b) {
    std::string s;
    for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s;
}

}  // namespace

PeriodicWord PeriodicWord::parse(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) return make(parse_bits(text));
    if (text.find(';', semi + 1) != std::string_view::npos) throw ParseError("word has more than one ';'");
    return make(parse_bits(text.substr(semi + 1)), parse_bits(text.substr(0, semi)));
}

bool PeriodicWord::all_zero() const {
    return std::all_of(period.begin(), period.end(), [](int b) { return b == 0; });
}
bool PeriodicWord::all_one() const {
    return std::all_of(period.begin(), period.end(), [](int b) { return b == 1; });
}

std::string PeriodicWord::str() const {
    return (preperiod.empty() ? "" : join_bits(preperiod) + ";") + "(" + join_bits(period) + ")";
}

IntMatrix word_product(const TripMapSpec& m, const std::vector<int>& bits) {
    IntMatrix w = IntMatrix::identity(m.split.f0.dim());
    for (int b : bits) w = w * m.split.f(b);
    return w;
}

IntMatrix periodic_matrix(const TripMapSpec& m, const PeriodicWord& w) {
    if (w.period.empty()) throw EmptyPeriod();
    return word_product(m, w.period);
}

IntMatrix periodic_map_matrix(const TripMapSpec& m, const PeriodicWord& w) { return map_form(periodic_matrix(m, w)); }

IntMatrix combined_period_matrix(long A, long B) {
    if (A < 0 || B < 1) throw std::invalid_argument("combined period needs A >= 0, B >= 1");
    IntMatrix m1 = triangle_function_matrix(build_trip_map("(e,(1 3 2),(1 3 2))"), 1);
    IntMatrix m2 = triangle_function_matrix(build_trip_map("(e,e,e)"), A);
    return m1.pow(B - 1) * m2;
}

// ---- eigen analysis --------------------------------------------------------

namespace {

using FMatrix = std::vector<Vec>;

FieldElement eval(const Poly& p, const FieldElement& x) {
    FieldElement acc(0);
    for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + FieldElement(p.coeffs()[i]);
    return acc;
}

Poly charpoly_of(const IntMatrix& m) {
    std::vector<std::vector<Rational>> r(m.dim(), std::vector<Rational>(m.dim()));
    for (size_t i = 0; i < m.dim(); ++i)
        for (size_t j = 0; j < m.dim(); ++j) r[i][j] = Rational(m(i, j));
    return char_poly_rational(r);
}

// Basis of {x : a x = 0} by Gauss-Jordan elimination.
std::vector<Vec> nullspace(FMatrix a, size_t cols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < a.size(); ++col) {
        size_t piv = row;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[row], a[piv]);
        FieldElement inv = a[row][col].inverse();
        for (auto& e : a[row]) e = e * inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            FieldElement f = a[r][col];
            for (size_t c = 0; c < cols; ++c) a[r][c] = a[r][c] - f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<Vec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        Vec v(cols, FieldElement(0));
        v[free] = FieldElement(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

FieldElement lambda_of(const AlgebraicReal& root) {
    if (root.is_rational()) return FieldElement(root.rational_value());
    return FieldElement::generator(NumberField::from_root(root));
}

// Rows of (M - lambda I), or of (M^T - lambda I) for row eigenvectors.
FMatrix shifted(const IntMatrix& m, const FieldElement& lambda, bool transpose) {
    const size_t n = m.dim();
    FMatrix a(n, Vec(n, FieldElement(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FieldElement e(Rational(transpose ? m(j, i) : m(i, j)));
            a[i][j] = i == j ? e - lambda : e;
        }
    return a;
}

void fill_point(EigenWitness& w, MatrixForm form) {
    Vec p = form == MatrixForm::Map ? w.eigenvector : mat_vec(base_B(w.eigenvector.size()), w.eigenvector);
    if (p[0].is_zero()) {
        w.point = p;
        w.in_closed_triangle = false;
        return;
    }
    FieldElement inv = p[0].inverse();
    for (auto& e : w.eigenvector) e = e * inv;
    w.point = normalize(p);
    w.in_closed_triangle = all_nonnegative(to_simplex_coords(w.point));
}

EigenWitness make_witness(const AlgebraicReal& root, const FieldElement& lambda, Vec v, MatrixForm form) {
    EigenWitness w{root, lambda, std::move(v), {}, false};
    fill_point(w, form);
    return w;
}

struct Eigenspace {
    AlgebraicReal root;
    FieldElement lambda;
    std::vector<Vec> basis;
    int multiplicity = 1;
};

std::vector<Eigenspace> eigenspaces(const IntMatrix& m, MatrixForm form, const Poly& cp) {
    std::vector<Eigenspace> out;
    for (const AlgebraicReal& root : isolate_real_roots(cp)) {
        Eigenspace e{root, lambda_of(root), {}, 0};
        e.basis = nullspace(shifted(m, e.lambda, form == MatrixForm::Map), m.dim());
        Poly d = cp;
        while (d.degree() >= 0 && eval(d, e.lambda).is_zero()) {
            ++e.multiplicity;
            d = d.derivative();
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<EigenWitness> eigen_in_triangle(const IntMatrix& m, MatrixForm form) {
    if (abs(m.det()) != 1) throw NonUnimodular();
    std::vector<EigenWitness> out;
    for (auto& e : eigenspaces(m, form, charpoly_of(m))) {
        if (e.basis.size() != 1) throw RepeatedEigenvalueUnresolved(e.root, e.basis.size());
        out.push_back(make_witness(e.root, e.lambda, e.basis[0], form));
    }
    return out;
}

bool eigen_residual_zero(const IntMatrix& m, MatrixForm form, const EigenWitness& w) {
    Vec img = form == MatrixForm::Map ? vec_mat(w.eigenvector, m) : mat_vec(m, w.eigenvector);
    for (size_t i = 0; i < img.size(); ++i)
        if (!(img[i] - w.lambda * w.eigenvector[i]).is_zero()) return false;
    return true;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::UniquePoint: return "UniquePoint";
        case Verdict::LineSegment: return "LineSegment";
        case Verdict::DegenerateEdge: return "DegenerateEdge";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

// Extreme rays of {c >= 0 : r.c = 0} for a nonzero r in the plane's field.
std::vector<Vec> plane_orthant_rays(const Vec& r) {
    const size_t n = r.size();
    std::vector<Vec> rays;
    for (size_t i = 0; i < n; ++i) {
        if (!r[i].is_zero()) continue;
        Vec v(n, FieldElement(0));
        v[i] = FieldElement(1);
        rays.push_back(std::move(v));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (r[i].sign() <= 0 || r[j].sign() >= 0) continue;
            Vec v(n, FieldElement(0));
            v[i] = -r[j];
            v[j] = r[i];
            rays.push_back(std::move(v));
        }
    return rays;
}

std::string xy_str(const Vec& p) { return "(" + p[1].str() + ", " + p[2].str() + ")"; }

// Which simplex coordinates vanish: 0 -> x = 1, 1 -> x = y, 2 -> y = 0.
std::vector<size_t> zero_coords(const Vec& p) {
    Vec c = to_simplex_coords(p);
    std::vector<size_t> z;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i].is_zero()) z.push_back(i);
    return z;
}

const char* edge_name(size_t i) {
    static const char* names[] = {"x = 1", "x = y", "y = 0"};
    return names[i];
}

std::optional<size_t> shared_edge(const Vec& a, const Vec& b) {
    for (size_t i : zero_coords(a))
        for (size_t j : zero_coords(b))
            if (i == j) return i;
    return std::nullopt;
}

std::string point_name(const Vec& p) {
    auto z = zero_coords(p);
    if (z.size() >= 2) return "vertex " + xy_str(p);
    if (z.size() == 1) return "point " + xy_str(p) + " on edge " + edge_name(z[0]);
    return "";
}


FieldElement abs_of(const FieldElement& x) { return x.sign() < 0 ? -x : x; }

}  // namespace

Classification classify_word(const TripMapSpec& m, const PeriodicWord& w) {
    Classification out;
    out.period_matrix = periodic_matrix(m, w);
    out.squared = out.period_matrix * out.period_matrix;
    if (!w.preperiod.empty()) out.evidence.push_back("preperiod " + std::to_string(w.preperiod.size()) + " bits ignored");
    const Poly cp = charpoly_of(out.squared);
    out.charpoly = IntPolynomial::primitive_of(cp);
    out.evidence.push_back("squared period matrix " + out.squared.str());
    out.evidence.push_back("characteristic polynomial " + out.charpoly.str());

    auto spaces = eigenspaces(out.squared, MatrixForm::Subdivision, cp);
    std::vector<EigenWitness> inside;
    for (auto& e : spaces) {
        if (e.basis.size() == 1) {
            EigenWitness wt = make_witness(e.root, e.lambda, e.basis[0], MatrixForm::Subdivision);
            if (wt.in_closed_triangle) inside.push_back(std::move(wt));
        } else if (e.basis.size() == 2) {
            // The eigenplane meets the closed triangle in a point, a segment or nothing.
            FMatrix a = shifted(out.squared, e.lambda, false);
            const Vec* r = nullptr;
            for (const auto& row : a)
                if (std::any_of(row.begin(), row.end(), [](const FieldElement& x) { return !x.is_zero(); })) r = &row;
            for (Vec c : plane_orthant_rays(*r)) {
                EigenWitness wt = make_witness(e.root, e.lambda, std::move(c), MatrixForm::Subdivision);
                if (wt.in_closed_triangle) inside.push_back(std::move(wt));
            }
            out.evidence.push_back("eigenvalue " + e.root.str() + " has a 2-dimensional eigenspace");
        } else {
            out.evidence.push_back("eigenvalue " + e.root.str() + " fixes every direction");
            return out;
        }
    }

    if (inside.size() >= 2) {
        // Prefer a pair whose segment leaves the boundary.
        size_t bi = 0, bj = 1;
        bool interior = false;
        for (size_t i = 0; i < inside.size() && !interior; ++i)
            for (size_t j = i + 1; j < inside.size() && !interior; ++j)
                if (!shared_edge(inside[i].point, inside[j].point)) {
                    bi = i, bj = j;
                    interior = true;
                }
        out.witnesses = {inside[bi], inside[bj]};
        auto edge = shared_edge(inside[bi].point, inside[bj].point);
        if (w.degenerate() && edge) {
            out.verdict = Verdict::DegenerateEdge;
            out.boundary = std::string("edge ") + edge_name(*edge) + " from " + xy_str(inside[bi].point) + " to " +
                           xy_str(inside[bj].point);
        } else {
            out.verdict = Verdict::LineSegment;
        }
        return out;
    }

    // An all-0 / all-1 period whose only fixed point in the closed triangle is on the boundary.
    auto undetermined = [&](std::string why) {
        out.evidence.push_back(std::move(why));
        if (w.degenerate() && inside.size() == 1) {
            std::string name = point_name(inside[0].point);
            if (!name.empty()) {
                out.verdict = Verdict::DegenerateEdge;
                out.boundary = name;
                out.witnesses = {inside[0]};
                out.evidence.push_back("only fixed point in the closed triangle; not a certified limit");
            }
        }
        return out;
    };

    // Dominance: a simple real eigenvalue strictly largest in absolute value.
    int real_mult = 0;
    for (const auto& e : spaces) real_mult += e.multiplicity;
    const int complex_count = cp.degree() - real_mult;
    const Eigenspace* dom = nullptr;
    bool strict = true;
    for (const auto& e : spaces) {
        if (!dom) {
            dom = &e;
            continue;
        }
        int c = compare(abs_of(e.lambda), abs_of(dom->lambda));
        if (c > 0) {
            dom = &e;
            strict = true;
        } else if (c == 0) {
            strict = false;
        }
    }
    if (!dom || !strict || dom->multiplicity != 1) return undetermined("no strictly dominant simple real eigenvalue");
    if (complex_count == 2 && spaces.size() == 1) {
        // |z|^2 = det / mu for the conjugate pair; mu dominates iff mu^2 > det / mu.
        FieldElement det(Rational(out.squared.det()));
        if ((dom->lambda * (dom->lambda.pow(3) - det)).sign() <= 0)
            return undetermined("complex pair at least as large as the real eigenvalue");
    } else if (complex_count != 0) {
        return undetermined("complex eigenvalues not compared");
    }
    EigenWitness wt = make_witness(dom->root, dom->lambda, dom->basis[0], MatrixForm::Subdivision);
    if (!wt.in_closed_triangle) return undetermined("dominant eigenvector lies outside the triangle");
    std::string name = point_name(wt.point);
    out.witnesses = {wt};
    if (w.degenerate() && !name.empty()) {
        out.verdict = Verdict::DegenerateEdge;
        out.boundary = name;
    } else {
        out.verdict = Verdict::UniquePoint;
    }
    return out;
}

std::vector<Classification> classify_batch(const std::vector<std::pair<TripMapSpec, PeriodicWord>>& jobs, Exec exec) {
    std::vector<Classification> out(jobs.size());
    const long n = static_cast<long>(jobs.size());
    for_each_index(n, exec, 1, [&](long i) { out[i] = classify_word(jobs[i].first, jobs[i].second); });
    return out;
}

// ---- catalog ---------------------------------------------------------------

std::string to_string(CatalogVerdict v) {
    switch (v) {
        case CatalogVerdict::NonUnique: return "NonUnique";
        case CatalogVerdict::Unique: return "Unique";
        case CatalogVerdict::OutsideCatalog: return "OutsideCatalog";
    }
    return "?";
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> table = [] {
        std::vector<CatalogEntry> t;
        auto non = [&](const char* word, std::initializer_list<const char*> triples) {
            for (const char* s : triples)
                t.push_back({PermTriple::parse(s), CatalogVerdict::NonUnique, PeriodicWord::parse(word)});
        };
        non("0", {"(e,(1 2),e)", "(e,(1 2),(1 2))", "(e,(1 2),(2 3))", "(e,(1 2),(1 3 2))", "(e,(1 2),(1 2 3))",
                  "(e,(1 2),(1 3))"});
        non("1", {"(e,(1 2 3),(1 3))", "(e,e,(1 3))", "(e,(1 3 2),(1 3))", "(e,(2 3),(1 3))", "(e,(1 3),(1 3))"});
        non("0,1", {"(e,e,(2 3))", "(e,e,(1 2))", "(e,(2 3),(1 2 3))", "(e,(1 2 3),e)"});
        non("0,0,0,1", {"(e,(1 3),(1 2 3))", "(e,(1 3),(2 3))"});
        non("0,1,1,0", {"(e,e,(1 2 3))", "(e,(1 3),e)", "(e,(1 3),(1 2))"});
        non("1,0,0", {"(e,(1 3 2),(1 2))"});
        non("1,1,0", {"(e,(1 2 3),(1 2))", "(e,(1 3),(1 3 2))"});
        non("1,1,1,0", {"(e,(2 3),(1 2))"});
        non("1,1,0,0,1,0", {"(e,e,(1 3 2))"});
        non("0,0,1,1,0,1", {"(e,(1 3 2),(1 2 3))"});
        for (const char* s : {"(e,e,e)", "(e,(1 2 3),(1 2 3))", "(e,(2 3),e)", "(e,(1 2 3),(2 3))", "(e,(2 3),(2 3))",
                              "(e,(2 3),(1 3 2))", "(e,(1 3 2),(2 3))", "(e,(1 3 2),(1 3 2))", "(e,(1 3 2),e)",
                              "(e,(1 2 3),(1 3 2))"})
            t.push_back({PermTriple::parse(s), CatalogVerdict::Unique, std::nullopt});
        return t;
    }();
    return table;
}

CatalogEntry catalog_lookup(const PermTriple& t) {
    if (t.sigma.degree() != 3) return {t, CatalogVerdict::OutsideCatalog, std::nullopt};
    if (!t.sigma.is_identity()) throw NotReduced();
    for (const auto& e : catalog())
        if (e.triple.tau0 == t.tau0 && e.triple.tau1 == t.tau1) return e;
    return {t, CatalogVerdict::OutsideCatalog, std::nullopt};
}

ReducedTriple reduce_triple(const PermTriple& t) {
    Permutation rho = t.sigma.inverse();
    return {PermTriple{rho * t.sigma, t.tau0 * t.sigma, t.tau1 * t.sigma}, rho};
}

// ---- ratios, diameters, orbits ---------------------------------------------

Rational first_row_ratio(const IntMatrix& v) {
    Integer lo = v(0, 0), hi = v(0, 0);
    for (size_t j = 1; j < v.dim(); ++j) {
        lo = std::min(lo, Integer(v(0, j)));
        hi = std::max(hi, Integer(v(0, j)));
    }
    if (lo <= 0) throw std::domain_error("vertex with nonpositive first coordinate");
    return Rational(hi, lo);
}

RatioReport ratio_bound_check(const TripMapSpec& m, const PeriodicWord& w, const Rational& C, size_t periods) {
    if (C < 1) throw std::invalid_argument("ratio bound C must be >= 1");
    RatioReport rep;
    rep.bound = C;
    rep.periods = periods;
    IntMatrix v = base_B(m.split.f0.dim());
    rep.max_ratio_seen = first_row_ratio(v);
    rep.max_at_checkpoints = rep.max_ratio_seen;
    auto step = [&](int b) {
        v = v * m.split.f(b);
        ++rep.depth;
        Rational r = first_row_ratio(v);
        if (r > rep.max_ratio_seen) rep.max_ratio_seen = r;
        if (r > C && !rep.first_exceed_depth) rep.first_exceed_depth = rep.depth;
        return r;
    };
    for (int b : w.preperiod) step(b);
    if (periods > 0) rep.max_at_checkpoints = 0;
    for (size_t k = 0; k < periods; ++k) {
        Rational r;
        for (int b : w.period) r = step(b);
        if (r > rep.max_at_checkpoints) rep.max_at_checkpoints = r;
    }
    rep.satisfied = rep.max_at_checkpoints <= C;
    return rep;
}

std::vector<IntPolynomial> minimal_polynomial_of_point(const EigenWitness& w) {
    if (w.point.empty() || w.point[0] != FieldElement(1)) throw ZeroLeadingCoordinate();
    std::vector<IntPolynomial> out;
    for (size_t i = 1; i < w.point.size(); ++i) out.push_back(w.point[i].minimal_polynomial());
    return out;
}

OrbitPeriod detect_orbit_periodicity(const ProjectivePoint& p, const TripMapSpec& m, size_t max_steps) {
    std::vector<ProjectivePoint> orbit{p};
    std::vector<long> digits;
    if (!in_half_open_domain(p.coords)) throw PointOutsideDomain();
    for (size_t n = 0; n < max_steps; ++n) {
        long k = subtriangle_index(orbit.back(), m);
        if (k < 0) throw NotDetected(Termination::InfiniteOnesTail);
        ProjectivePoint q = apply_triangle_function(orbit.back(), m, k);
        digits.push_back(k);
        for (size_t i = 0; i < orbit.size(); ++i)
            if (orbit[i] == q) {
                digits.resize(orbit.size());
                return {i, orbit.size() - i, digits};
            }
        if (q.y().is_zero()) throw NotDetected(Termination::BoundaryHit);
        orbit.push_back(std::move(q));
    }
    throw NotDetected(Termination::Truncated);
}

DiameterReport projected_diameter(const TripMapSpec& m, const PeriodicWord& w, size_t periods) {
    IntMatrix v = base_B(m.split.f0.dim()) * word_product(m, w.preperiod) * periodic_matrix(m, w).pow(static_cast<long>(periods));
    const size_t n = v.dim();
    std::vector<std::vector<Rational>> pts(n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 1; i < n; ++i) pts[j].push_back(Rational(v(i, j), v(0, j)));
    DiameterReport rep;
    rep.periods = periods;
    rep.squared = 0;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            Rational s = 0;
            for (size_t i = 0; i + 1 < n; ++i) {
                Rational d = pts[a][i] - pts[b][i];
                s += d * d;
            }
            if (s > rep.squared) rep.squared = s;
        }
    rep.approx = std::sqrt(rep.squared.get_d());
    return rep;
}

std::vector<PeriodicWord> nondegenerate_words(size_t max_len) {
    std::vector<PeriodicWord> out;
    for (size_t len = 1; len <= max_len; ++len)
        for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
            std::vector<int> bits(len);
            for (size_t i = 0; i < len; ++i) bits[i] = static_cast<int>((mask >> (len - 1 - i)) & 1);
            PeriodicWord w = PeriodicWord::make(bits);
            if (!w.degenerate()) out.push_back(std::move(w));
        }
    return out;
}

}  // namespace trip
