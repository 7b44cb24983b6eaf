#include "trip/trip_engine.hpp"

#include <algorithm>
#include <cctype>

namespace trip {

namespace {

std::string strip(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

}  // namespace

PermTriple PermTriple::parse(std::string_view text, int degree) {
    std::string s = strip(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("triple must be written (sigma,tau0,tau1): '" + s + "'");
    auto parts = split_top_level(std::string_view(s).substr(1, s.size() - 2), ',');
    if (parts.size() != 3) throw ParseError("triple needs three permutations: '" + s + "'");
    Permutation p[3];
    for (int i = 0; i < 3; ++i) {
        const std::string& q = parts[i];
        if (!q.empty() && q.front() == '[') {
            p[i] = Permutation::from_one_line(q);
            if (p[i].degree() != degree) throw ParseError("permutation degree mismatch: '" + q + "'");
        } else {
            p[i] = Permutation::from_cycles(q, degree);
        }
    }
    return {p[0], p[1], p[2]};
}

PermTriple PermTriple::identity(int degree) {
    Permutation e = Permutation::identity(degree);
    return {e, e, e};
}

std::string PermTriple::str() const {
    return "(" + sigma.cycles() + "," + tau0.cycles() + "," + tau1.cycles() + ")";
}

bool PermTriple::operator<(const PermTriple& o) const {
    if (sigma != o.sigma) return sigma < o.sigma;
    if (tau0 != o.tau0) return tau0 < o.tau0;
    return tau1 < o.tau1;
}

IntMatrix base_A0(size_t d) {
    IntMatrix m(d);
    for (size_t j = 0; j + 1 < d; ++j) m(j + 1, j) = 1;
    m(0, d - 1) = 1;
    m(d - 1, d - 1) = 1;
    return m;
}

IntMatrix base_A1(size_t d) {
    IntMatrix m = IntMatrix::identity(d);
    m(0, d - 1) = 1;
    return m;
}

IntMatrix base_B(size_t d) { return IntMatrix::ones_upper(d); }

TripMapSpec build_trip_map(const PermTriple& t) {
    const size_t d = static_cast<size_t>(t.degree());
    IntMatrix s = perm_to_matrix(t.sigma);
    return {t, SplitPair(s * base_A0(d) * perm_to_matrix(t.tau0), s * base_A1(d) * perm_to_matrix(t.tau1))};
}

TripMapSpec build_trip_map(std::string_view triple_text) { return build_trip_map(PermTriple::parse(triple_text)); }

std::vector<std::pair<Rational, Rational>> VertexTriangle::projected() const {
    std::vector<std::pair<Rational, Rational>> out;
    for (size_t j = 0; j < 3; ++j) {
        Rational x(v(1, j), v(0, j)), y(v(2, j), v(0, j));
        x.canonicalize();
        y.canonicalize();
        out.emplace_back(x, y);
    }
    return out;
}

VertexTriangle subdivide(const VertexTriangle& t, int bit, const TripMapSpec& m) {
    return {t.v * m.split.f(bit)};
}

IntMatrix word_matrix(const std::vector<int>& word, const TripMapSpec& m) {
    IntMatrix w = IntMatrix::identity(static_cast<size_t>(m.triple.degree()));
    for (int b : word) w = w * m.split.f(b);
    return w;
}

VertexTriangle triangle_of_word(const std::vector<int>& word, const TripMapSpec& m) {
    return {base_B(static_cast<size_t>(m.triple.degree())) * word_matrix(word, m)};
}

ProjectivePoint ProjectivePoint::from_xy(const FieldElement& x, const FieldElement& y) {
    return {promote({FieldElement(1), x, y})};
}

std::string ProjectivePoint::str() const {
    std::string s = "(";
    for (size_t i = 1; i < coords.size(); ++i) s += (i > 1 ? ", " : "") + coords[i].str();
    return s + ")";
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.coords.size() != b.coords.size()) return false;
    for (size_t i = 0; i < a.coords.size(); ++i)
        if (compare(a.coords[i], b.coords[i]) != 0) return false;
    return true;
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::Inside: return "Inside";
        case Membership::OnSharedBoundary: return "OnSharedBoundary";
        case Membership::Outside: return "Outside";
    }
    return "?";
}

MembershipResult membership(const ProjectivePoint& p, const VertexTriangle& t) {
    Integer d = t.v.det();
    if (d == 0) throw DegenerateTriangle();
    Vec c = mat_vec(t.v.inverse(), p.coords);
    int neg = 0, zero = 0;
    for (const auto& v : c) {
        int s = v.sign();
        if (s < 0) ++neg;
        if (s == 0) ++zero;
    }
    Membership m = neg ? Membership::Outside : (zero ? Membership::OnSharedBoundary : Membership::Inside);
    return {m, c};
}

TreeSequence tree_sequence(const ProjectivePoint& p, const TripMapSpec& m, size_t depth, long ones_cap) {
    if (!in_half_open_domain(p.coords)) throw PointOutsideDomain();
    TreeSequence out;
    Vec c = to_simplex_coords(p.coords);
    long ones = 0;
    while (out.bits.size() < depth) {
        int b = descend_bit(c, m.split);
        out.bits.push_back(b);
        if (b == 1) {
            if (++ones >= ones_cap) {
                out.termination = Termination::InfiniteOnesTail;
                return out;
            }
        } else {
            ones = 0;
            if (c.back().is_zero()) {
                out.termination = Termination::BoundaryHit;
                return out;
            }
        }
    }
    out.termination = Termination::Truncated;
    return out;
}

namespace {

TripRun run_trip(const ProjectivePoint& p, const TripMapSpec& m, size_t terms, long ones_cap, bool keep_orbit) {
    if (!in_half_open_domain(p.coords)) throw PointOutsideDomain();
    TripRun run;
    if (keep_orbit) run.orbit.push_back(p);
    Vec c = to_simplex_coords(p.coords);
    while (run.sequence.digits.size() < terms) {
        long k = descend_digit(c, m.split, ones_cap);
        if (k < 0) {
            run.sequence.termination = Termination::InfiniteOnesTail;
            return run;
        }
        run.sequence.digits.push_back(k);
        if (keep_orbit) run.orbit.push_back({normalize(from_simplex_coords(c))});
        if (c.back().is_zero()) {
            run.sequence.termination = Termination::BoundaryHit;
            return run;
        }
    }
    run.sequence.termination = Termination::Truncated;
    return run;
}

}  // namespace

TripSequence trip_sequence(const ProjectivePoint& p, const TripMapSpec& m, size_t terms, long ones_cap) {
    return run_trip(p, m, terms, ones_cap, false).sequence;
}

std::vector<TripSequence> trip_sequence_batch(const std::vector<ProjectivePoint>& points, const TripMapSpec& m,
                                              size_t terms, long ones_cap, Exec exec) {
    std::vector<TripSequence> out(points.size());
    const long n = static_cast<long>(points.size());
    for_each_index(n, exec, 4, [&](long i) { out[i] = trip_sequence(points[i], m, terms, ones_cap); });
    return out;
}

TripRun trip_orbit(const ProjectivePoint& p, const TripMapSpec& m, size_t terms, long ones_cap) {
    return run_trip(p, m, terms, ones_cap, true);
}

IntMatrix triangle_function_matrix(const TripMapSpec& m, long k) {
    return map_form(m.f1().pow(k) * m.f0());
}

ProjectivePoint apply_triangle_function(const ProjectivePoint& p, const TripMapSpec& m, long k) {
    return {normalize(vec_mat(p.coords, triangle_function_matrix(m, k)))};
}

long subtriangle_index(const ProjectivePoint& p, const TripMapSpec& m, long ones_cap) {
    Vec c = to_simplex_coords(p.coords);
    return descend_digit(c, m.split, ones_cap);
}

TripSequence tree_to_trip(const TreeSequence& s) {
    TripSequence out;
    long run = 0;
    for (int b : s.bits) {
        if (b) ++run;
        else {
            out.digits.push_back(run);
            run = 0;
        }
    }
    if (run > 0 && s.termination == Termination::None) throw MalformedPrefix();
    out.termination = s.termination;
    return out;
}

TreeSequence trip_to_tree(const TripSequence& s) {
    TreeSequence out;
    for (long a : s.digits) {
        if (a < 0) throw std::invalid_argument("negative trip digit");
        out.bits.insert(out.bits.end(), static_cast<size_t>(a), 1);
        out.bits.push_back(0);
    }
    out.termination = s.termination;
    return out;
}

ComboRun combo_apply(const ProjectivePoint& p, const ComboSchedule& s, size_t steps, long ones_cap) {
    if (s.rules.empty()) throw std::invalid_argument("empty combo schedule");
    if (!in_half_open_domain(p.coords)) throw PointOutsideDomain();
    ComboRun run;
    run.orbit.push_back(p);
    const size_t d = p.coords.size();
    for (size_t step = 0; step < steps; ++step) {
        Vec c = to_simplex_coords(run.orbit.back().coords);
        const Vec start = c;
        long k0 = -2;
        ComboStep st{{}, {}, IntMatrix::identity(d)};
        for (size_t i = 0; i < s.rules.size(); ++i) {
            const ComboRule& r = s.rules[i];
            if (r.guard.kind != GuardKind::Always) {
                if (k0 == -2) {
                    Vec t = start;
                    k0 = descend_digit(t, s.rules[0].map.split, ones_cap);
                }
                bool inside = (k0 == r.guard.k);
                if ((r.guard.kind == GuardKind::InSubtriangle) != inside) continue;
            }
            if (r.mode == Descent::Digit) {
                long k = descend_digit(c, r.map.split, ones_cap);
                if (k < 0) {
                    run.termination = Termination::InfiniteOnesTail;
                    return run;
                }
                st.product = st.product * r.map.f1().pow(k) * r.map.f0();
                st.index.push_back(k);
            } else {
                int b = descend_bit(c, r.map.split);
                st.product = st.product * r.map.split.f(b);
                st.index.push_back(b);
            }
            st.fired.push_back(i);
        }
        if (st.fired.empty()) throw NoRuleMatched();
        run.orbit.push_back({normalize(from_simplex_coords(c))});
        run.steps.push_back(std::move(st));
        if (c.back().is_zero()) {
            run.termination = Termination::BoundaryHit;
            return run;
        }
    }
    run.termination = Termination::Truncated;
    return run;
}

std::vector<TripMapSpec> enumerate_family() {
    std::vector<TripMapSpec> out;
    auto perms = all_permutations(3);
    for (const auto& s : perms)
        for (const auto& t0 : perms)
            for (const auto& t1 : perms) out.push_back(build_trip_map(PermTriple{s, t0, t1}));
    return out;
}

namespace {

// Recursive descent over rational expressions in the generator a.
struct ExprParser {
    std::string s;
    FieldElement gen;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    [[noreturn]] void fail(const std::string& why) { throw ParseError(why + " in expression '" + s + "'"); }

    FieldElement expr() {
        FieldElement v = term();
        while (true) {
            if (peek('+')) {
                ++i;
                v = v + term();
            } else if (peek('-')) {
                ++i;
                v = v - term();
            } else {
                return v;
            }
        }
    }
    FieldElement term() {
        FieldElement v = power();
        while (true) {
            skip();
            if (peek('*')) {
                ++i;
                v = v * power();
            } else if (peek('/')) {
                ++i;
                FieldElement d = power();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else if (i < s.size() && (s[i] == 'a' || s[i] == '(')) {
                v = v * power();  // implicit product, e.g. 2a
            } else {
                return v;
            }
        }
    }
    FieldElement power() {
        FieldElement v = unary();
        if (peek('^')) {
            ++i;
            skip();
            bool neg = false;
            if (i < s.size() && s[i] == '-') {
                neg = true;
                ++i;
            }
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) fail("missing exponent");
            long e = std::stol(s.substr(i, j - i));
            i = j;
            if (neg && v.is_zero()) fail("division by zero");
            v = v.pow(neg ? -e : e);
        }
        return v;
    }
    FieldElement unary() {
        if (peek('-')) {
            ++i;
            return -unary();
        }
        if (peek('+')) {
            ++i;
            return unary();
        }
        return primary();
    }
    FieldElement primary() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        if (s[i] == '(') {
            ++i;
            FieldElement v = expr();
            if (!peek(')')) fail("missing )");
            ++i;
            return v;
        }
        if (s[i] == 'a') {
            ++i;
            return gen;
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
            Rational q = parse_rational(s.substr(i, j - i));
            i = j;
            return FieldElement(q);
        }
        fail(std::string("unexpected '") + s[i] + "'");
    }
    FieldElement parse() {
        FieldElement v = expr();
        skip();
        if (i != s.size()) fail("trailing input");
        return v;
    }
};

}  // namespace

Vec parse_point_coords(std::string_view text) {
    std::string s = strip(text);
    Vec out;
    if (s.rfind("alg(", 0) == 0) {
        size_t close = s.find(')');
        size_t semi = s.find(';');
        if (close == std::string::npos || semi == std::string::npos || semi > close)
            throw ParseError("expected alg(poly; lo,hi)[...]: '" + s + "'");
        Poly poly = parse_poly(s.substr(4, semi - 4));
        auto bounds = split_top_level(s.substr(semi + 1, close - semi - 1), ',');
        if (bounds.size() != 2) throw ParseError("interval needs two endpoints: '" + s + "'");
        Rational lo = parse_rational(bounds[0]), hi = parse_rational(bounds[1]);
        if (!(lo < hi)) throw ParseError("empty interval: '" + s + "'");
        std::vector<AlgebraicReal> inside;
        for (const auto& r : isolate_real_roots(poly))
            if (algebraic_compare(r, lo) > 0 && algebraic_compare(r, hi) < 0) inside.push_back(r);
        if (inside.size() != 1)
            throw ParseError("interval must isolate exactly one root (found " + std::to_string(inside.size()) + ")");
        FieldPtr f = NumberField::from_root(inside[0]);
        std::string rest = strip(s.substr(close + 1));
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
            throw ParseError("expected [coordinates] after alg(...): '" + s + "'");
        for (const auto& e : split_top_level(rest.substr(1, rest.size() - 2), ','))
            out.push_back(ExprParser{e, FieldElement::generator(f)}.parse());
    } else {
        for (const auto& e : split_top_level(s, ',')) out.push_back(FieldElement(parse_rational(e)));
    }
    return out;
}

ProjectivePoint parse_point(std::string_view text) {
    Vec c = parse_point_coords(text);
    if (c.size() != 2) throw ParseError("a triangle point needs two coordinates");
    return ProjectivePoint::from_xy(c[0], c[1]);
}

}  // namespace trip
