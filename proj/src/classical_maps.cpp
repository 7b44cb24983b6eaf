#include "trip/classical_maps.hpp"

#include <random>

namespace trip {

std::string to_string(ClassicalMapId id) {
    switch (id) {
        case ClassicalMapId::Monkemeyer: return "monkemeyer";
        case ClassicalMapId::Brun: return "brun";
        case ClassicalMapId::FullySubtractive: return "fully-subtractive";
        case ClassicalMapId::Guting: return "guting";
    }
    return "?";
}

ClassicalMapId parse_classical_map(std::string_view name) {
    for (auto id : {ClassicalMapId::Monkemeyer, ClassicalMapId::Brun, ClassicalMapId::FullySubtractive,
                    ClassicalMapId::Guting})
        if (to_string(id) == name) return id;
    throw ParseError("unknown classical map '" + std::string(name) + "'");
}

namespace {

const FieldElement one(1);

ProjectivePoint image_of(const FieldElement& x, const FieldElement& y) { return ProjectivePoint::from_xy(x, y); }

void require_closed_triangle(const ProjectivePoint& p) {
    if (p.coords.size() != 3 || !all_nonnegative(to_simplex_coords(p.coords))) throw PointOutsideDomain();
}

// Largest n >= 0 with num - n*den >= 0, for den > 0.
Integer largest_multiple(const FieldElement& num, const FieldElement& den) {
    double guess = num.to_double() / den.to_double();
    Integer n = guess > 0 ? Integer(static_cast<long>(guess)) : Integer(0);
    auto ok = [&](const Integer& k) { return (num - den * Rational(k)).sign() >= 0; };
    while (n > 0 && !ok(n)) --n;
    while (ok(n + 1)) ++n;
    return n;
}

}  // namespace

GutingDigits guting_digits(const ProjectivePoint& p) {
    require_closed_triangle(p);
    const FieldElement& x = p.x();
    const FieldElement& y = p.y();
    if (x.sign() <= 0) throw PointOutsideDomain();
    GutingDigits g{largest_multiple(one, x), 0};
    FieldElement rest = one - x * Rational(g.a);
    if (y.sign() > 0) g.b = largest_multiple(rest, y);
    // y = 0 leaves b unconstrained above; the smallest admissible value is taken.
    return g;
}

ClassicalStep classical_step(ClassicalMapId id, const ProjectivePoint& p) {
    require_closed_triangle(p);
    const FieldElement& x = p.x();
    const FieldElement& y = p.y();
    const Rational half(1, 2);
    ClassicalStep out;
    switch (id) {
        case ClassicalMapId::Monkemeyer:
            if ((x + y - one).sign() <= 0) {
                FieldElement s = one - y;
                out.image = image_of(x / s, (x - y) / s);
            } else {
                out.image = image_of((one - y) / x, (x - y) / x);
            }
            break;
        case ClassicalMapId::Brun:
            if ((x + y - one).sign() <= 0 && (x - FieldElement(half)).sign() <= 0) {
                FieldElement s = one - x;
                out.image = image_of(x / s, y / s);
            } else if ((x + y - one).sign() <= 0) {
                out.image = image_of((one - x) / x, y / x);
            } else {
                out.image = image_of(y / x, (one - x) / x);
            }
            break;
        case ClassicalMapId::FullySubtractive:
            if ((y - FieldElement(half)).sign() >= 0) {
                out.image = image_of((one - y) / y, (x - y) / y);
            } else if ((x - y * Rational(2)).sign() <= 0) {
                FieldElement s = one - y;
                out.image = image_of(y / s, (x - y) / s);
            } else {
                FieldElement s = one - y;
                out.image = image_of((x - y) / s, y / s);
            }
            break;
        case ClassicalMapId::Guting: {
            GutingDigits g = guting_digits(p);
            out.image = image_of(y / x, (one - x * Rational(g.a) - y * Rational(g.b)) / x);
            out.digits = g;
            break;
        }
    }
    if (out.image.y().is_zero()) throw ClassicalBoundaryHit(out);
    return out;
}

ComboSchedule builtin_combo(ClassicalMapId id) {
    const TripMapSpec second = build_trip_map("((2 3),(1 3 2),(2 3))");
    switch (id) {
        case ClassicalMapId::Monkemeyer:
            return {{ComboRule{build_trip_map("(e,(1 3 2),(2 3))"), Guard::always(), Descent::Bit}}};
        case ClassicalMapId::Brun:
            return {{ComboRule{build_trip_map("(e,e,e)"), Guard::always(), Descent::Bit},
                     ComboRule{second, Guard::not_in(0), Descent::Bit}}};
        case ClassicalMapId::FullySubtractive:
            return {{ComboRule{build_trip_map("((1 2 3),e,e)"), Guard::always(), Descent::Bit},
                     ComboRule{second, Guard::not_in(0), Descent::Bit}}};
        case ClassicalMapId::Guting:
            break;
    }
    throw std::invalid_argument("guting is not a triangle-preserving combo");
}

std::vector<ComboRegion> combo_regions(const ComboSchedule& s) {
    if (s.rules.empty()) throw std::invalid_argument("empty combo schedule");
    for (const auto& r : s.rules) {
        if (r.mode != Descent::Bit) throw std::invalid_argument("combo_regions needs Bit rules");
        if (r.guard.kind != GuardKind::Always && r.guard.k != 0)
            throw std::invalid_argument("combo_regions supports guards on Delta_0 only");
    }
    // For a Bit first rule, "in Delta_0" means its first bit is 0.
    std::vector<ComboRegion> out;
    for (int b0 : {0, 1}) {
        std::vector<std::pair<std::vector<int>, VertexTriangle>> leaves{
            {{b0}, subdivide(VertexTriangle::base(), b0, s.rules[0].map)}};
        for (size_t i = 1; i < s.rules.size(); ++i) {
            const ComboRule& r = s.rules[i];
            bool fires = r.guard.kind == GuardKind::Always ||
                         ((r.guard.kind == GuardKind::InSubtriangle) == (b0 == 0));
            if (!fires) continue;
            std::vector<std::pair<std::vector<int>, VertexTriangle>> next;
            for (auto& [path, tri] : leaves)
                for (int b : {0, 1}) {
                    auto p = path;
                    p.push_back(b);
                    next.emplace_back(std::move(p), subdivide(tri, b, r.map));
                }
            leaves = std::move(next);
        }
        for (auto& [path, tri] : leaves) out.push_back({path, tri.v.transpose()});
    }
    return out;
}

IntMatrix guting_combo_matrix(long a, long b) {
    if (a < 1 || b < 0) throw std::invalid_argument("guting digits need a >= 1, b >= 0");
    const IntMatrix B = base_B(3);
    const IntMatrix A0 = base_A0(3), A1 = base_A1(3);
    const IntMatrix P23 = perm_to_matrix(Permutation::from_cycles("(2 3)", 3));
    IntMatrix m = B * A0.inverse() * A1.pow(-b) * (A1 * P23).pow(-2 * (a - 1)) * B.inverse();
    return m.transpose();
}

bool guting_matrix_identity(long a, long b) {
    return guting_combo_matrix(a, b) == IntMatrix{{0, 0, 1}, {1, 0, -a}, {0, 1, -b}};
}

bool on_region_boundary(const Rational& x, const Rational& y) {
    return x + y == 1 || x == Rational(1, 2) || x == 2 * y || y == Rational(1, 2);
}

std::vector<std::pair<Rational, Rational>> equivalence_points(size_t samples, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(samples);
    while (pts.size() < samples) {
        long q = std::uniform_int_distribution<long>(3, 997)(rng);
        long a = std::uniform_int_distribution<long>(2, q - 1)(rng);
        long c = std::uniform_int_distribution<long>(1, a - 1)(rng);
        Rational x(a, q), y(c, q);
        x.canonicalize();
        y.canonicalize();
        if (on_region_boundary(x, y)) continue;
        pts.emplace_back(x, y);
    }
    return pts;
}

namespace {

struct Outcome {
    ProjectivePoint image;
    bool boundary = false;
    std::string str() const { return image.str() + (boundary ? " [boundary]" : ""); }
};

Outcome classical_outcome(ClassicalMapId id, const ProjectivePoint& p) {
    try {
        return {classical_step(id, p).image, false};
    } catch (const ClassicalBoundaryHit& h) {
        return {h.step.image, true};
    }
}

Outcome trip_outcome(ClassicalMapId id, const ProjectivePoint& p) {
    if (id == ClassicalMapId::Guting) {
        GutingDigits g = guting_digits(p);
        IntMatrix m = guting_combo_matrix(g.a.get_si(), g.b.get_si());
        ProjectivePoint q{normalize(vec_mat(p.coords, m))};
        return {q, q.y().is_zero()};
    }
    ComboRun run = combo_apply(p, builtin_combo(id), 1);
    return {run.orbit.back(), run.termination == Termination::BoundaryHit};
}

// Empty when both sides agree.
std::optional<EquivalenceMismatch> check_one(ClassicalMapId id, const ProjectivePoint& p, bool& boundary) {
    Outcome a = classical_outcome(id, p);
    Outcome b = trip_outcome(id, p);
    boundary = a.boundary;
    if (a.image == b.image && a.boundary == b.boundary) return std::nullopt;
    return EquivalenceMismatch{p, a.str(), b.str()};
}

}  // namespace

EquivalenceReport verify_equivalence(ClassicalMapId id, size_t samples, unsigned long long seed, Exec exec) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    auto pts = equivalence_points(samples, seed);
    std::vector<std::optional<EquivalenceMismatch>> results(pts.size());
    std::vector<char> boundary(pts.size(), 0);
    auto run = [&](long i) {
        bool hit = false;
        results[i] = check_one(id, ProjectivePoint::from_xy(pts[i].first, pts[i].second), hit);
        boundary[i] = hit;
    };
    const long n = static_cast<long>(pts.size());
    for_each_index(n, exec, 8, run);
    EquivalenceReport rep{id, pts.size(), 0, {}};
    for (size_t i = 0; i < pts.size(); ++i) {
        rep.boundary_hits += boundary[i];
        if (results[i]) rep.mismatches.push_back(std::move(*results[i]));
    }
    return rep;
}

}  // namespace trip
