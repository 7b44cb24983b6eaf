#include <set>

#include "doctest.h"
#include "support.hpp"
#include "trip/periodicity.hpp"

using namespace trip;
using testing_support::field_of;
using testing_support::Gen;

namespace {

// Recursion for (e,e,e): first coordinates (x1,x2,x3) -> (x2, a x1 + x3, (a+1) x1 + x3).
Rational eee_checkpoint_max(long a, size_t periods) {
    Integer x1 = 1, x2 = 1, x3 = 1;
    Rational best = 0;
    for (size_t k = 0; k < periods; ++k) {
        Integer n1 = x2, n2 = a * x1 + x3, n3 = (a + 1) * x1 + x3;
        x1 = n1, x2 = n2, x3 = n3;
        Integer lo = std::min({x1, x2, x3}), hi = std::max({x1, x2, x3});
        best = std::max(best, Rational(hi, lo));
    }
    return best;
}

bool same_point(const Vec& p, const FieldElement& x, const FieldElement& y) { return p[1] == x && p[2] == y; }

}  // namespace

TEST_SUITE("periodicity-lab") {

TEST_CASE("periodic words") {
    PeriodicWord w = PeriodicWord::from_trip_digits({1, 2});
    CHECK(w.period == std::vector<int>{1, 0, 1, 1, 0});
    CHECK(PeriodicWord::parse("1,1;0,1").preperiod == std::vector<int>{1, 1});
    CHECK(PeriodicWord::parse("1,1;0,1").period == std::vector<int>{0, 1});
    CHECK(PeriodicWord::parse("0110").period == std::vector<int>{0, 1, 1, 0});
    CHECK(PeriodicWord::parse("0,0").all_zero());
    CHECK(PeriodicWord::parse("1").degenerate());
    CHECK(!PeriodicWord::parse("1,0").degenerate());
    CHECK_THROWS_AS(PeriodicWord::parse(""), EmptyPeriod);
    CHECK_THROWS_AS(PeriodicWord::parse("1;"), EmptyPeriod);
    CHECK_THROWS_AS(PeriodicWord::parse("1,2"), ParseError);
    CHECK_THROWS_AS(periodic_matrix(build_trip_map("(e,e,e)"), PeriodicWord{}), EmptyPeriod);
    CHECK(nondegenerate_words(4).size() == 2 + 6 + 14);
}

TEST_CASE("period matrix fixtures") {
    TripMapSpec m = build_trip_map("((2 3),e,(2 3))");
    CHECK(periodic_map_matrix(m, PeriodicWord::from_trip_digits({1, 2})) ==
          IntMatrix{{0, -1, 2}, {1, 3, -6}, {-1, -2, 5}});
    for (long A = 0; A <= 3; ++A)
        for (long B = 1; B <= 3; ++B) CHECK(combined_period_matrix(A, B) == IntMatrix{{0, 0, 1}, {1, 0, -B}, {0, 1, -A}});
    CHECK_THROWS_AS(combined_period_matrix(1, 0), std::invalid_argument);
}

TEST_CASE("combined matrix has row eigenvector (1, a, a^2)") {
    for (long A = 0; A <= 3; ++A)
        for (long B = 1; B <= 3; ++B) {
            IntMatrix M = combined_period_matrix(A, B);
            auto ws = eigen_in_triangle(M, MatrixForm::Map);
            int hits = 0;
            for (const auto& w : ws) {
                CHECK(eigen_residual_zero(M, MatrixForm::Map, w));
                const FieldElement& a = w.lambda;
                if (a.sign() > 0 && w.in_closed_triangle && same_point(w.point, a, a * a)) {
                    CHECK((a.pow(3) + a * a * Rational(A) + a * Rational(B) - FieldElement(1)).is_zero());
                    ++hits;
                }
            }
            CHECK(hits == 1);
        }
}

TEST_CASE("eigen_in_triangle fixtures") {
    IntMatrix M{{0, 0, 1}, {1, 0, -1}, {0, 1, 0}};
    auto ws = eigen_in_triangle(M);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].in_closed_triangle);
    CHECK(ws[0].eigenvalue.poly() == IntPolynomial{-1, 1, 0, 1});
    FieldElement a = ws[0].lambda;
    CHECK(same_point(ws[0].point, a, a * a));

    CHECK_THROWS_AS(eigen_in_triangle(IntMatrix::identity(3)), RepeatedEigenvalueUnresolved);
    CHECK_THROWS_AS(eigen_in_triangle(IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), NonUnimodular);

    // (e,e,(1 2)): F1 F0 has eigenvectors v1 and (3+s)/2 v1 + (-1+s)/2 v2 + v3, s = sqrt 5.
    TripMapSpec m = build_trip_map("(e,e,(1 2))");
    IntMatrix W = periodic_matrix(m, PeriodicWord::parse("1,0"));
    IntMatrix S = W * W;
    auto sw = eigen_in_triangle(S, MatrixForm::Subdivision);
    FieldElement s = FieldElement::generator(field_of("x^2-5", 2, 3));
    Vec golden{(FieldElement(3) + s) * Rational(1, 2), (s - FieldElement(1)) * Rational(1, 2), FieldElement(1)};
    bool saw_v1 = false, saw_golden = false;
    int inside = 0;
    for (const auto& w : sw) {
        CHECK(eigen_residual_zero(S, MatrixForm::Subdivision, w));
        if (!w.in_closed_triangle) continue;
        ++inside;
        const Vec& c = w.eigenvector;
        if (c[1].is_zero() && c[2].is_zero()) saw_v1 = true;
        if (!c[2].is_zero()) {
            FieldElement k = c[2].inverse();
            saw_golden = saw_golden || (c[0] * k == golden[0] && c[1] * k == golden[1]);
        }
    }
    CHECK(inside == 2);
    CHECK(saw_v1);
    CHECK(saw_golden);
}

TEST_CASE("classify_word fixtures") {
    auto seg = classify_word(build_trip_map("(e,e,(1 2))"), PeriodicWord::parse("1,0"));
    CHECK(seg.verdict == Verdict::LineSegment);
    REQUIRE(seg.witnesses.size() == 2);
    CHECK(seg.witnesses[0].in_closed_triangle);
    CHECK(seg.witnesses[1].in_closed_triangle);
    CHECK(!(seg.witnesses[0].point == seg.witnesses[1].point));

    auto up = classify_word(build_trip_map("(e,e,e)"), PeriodicWord::parse("0,1"));
    CHECK(up.verdict == Verdict::UniquePoint);

    auto cubic = classify_word(build_trip_map("((2 3),e,(2 3))"), PeriodicWord::from_trip_digits({1, 2}));
    REQUIRE(cubic.verdict == Verdict::UniquePoint);
    FieldElement a = FieldElement::generator(field_of("2x^3-5x^2+x+1", 0, 1));
    CHECK(same_point(cubic.witnesses[0].point, a, a * Rational(2) - a * a * Rational(2)));

    // Preperiod is ignored.
    auto pre = classify_word(build_trip_map("(e,e,e)"), PeriodicWord::parse("1,1,0;0,1"));
    CHECK(pre.verdict == Verdict::UniquePoint);
    CHECK(pre.witnesses[0].point == up.witnesses[0].point);
}

TEST_CASE("all-0 and all-1 periods") {
    auto edge = classify_word(build_trip_map("(e,e,e)"), PeriodicWord::parse("1"));
    CHECK(edge.verdict == Verdict::DegenerateEdge);
    CHECK(edge.boundary == "edge y = 0 from (0, 0) to (1, 0)");
    auto vtx = classify_word(build_trip_map("(e,(2 3),(2 3))"), PeriodicWord::parse("1"));
    CHECK(vtx.verdict == Verdict::DegenerateEdge);
    CHECK(vtx.boundary == "vertex (0, 0)");
    auto fixed = classify_word(build_trip_map("(e,e,e)"), PeriodicWord::parse("0"));
    CHECK(fixed.verdict == Verdict::UniquePoint);
    // Non-unique triples with (0-bar) / (1-bar) witnesses give segments off the boundary.
    CHECK(classify_word(build_trip_map("(e,(1 2),e)"), PeriodicWord::parse("0")).verdict == Verdict::LineSegment);
    CHECK(classify_word(build_trip_map("(e,e,(1 3))"), PeriodicWord::parse("1")).verdict == Verdict::LineSegment);
}

TEST_CASE("catalog") {
    auto e = catalog_lookup(PermTriple::parse("(e,(1 2),e)"));
    CHECK(e.verdict == CatalogVerdict::NonUnique);
    CHECK(e.witness->period == std::vector<int>{0});
    e = catalog_lookup(PermTriple::parse("(e,(1 3 2),(1 2))"));
    CHECK(e.verdict == CatalogVerdict::NonUnique);
    CHECK(e.witness->period == std::vector<int>{1, 0, 0});
    CHECK(catalog_lookup(PermTriple::parse("(e,(2 3),e)")).verdict == CatalogVerdict::Unique);
    CHECK_THROWS_AS(catalog_lookup(PermTriple::parse("((1 2),e,e)")), NotReduced);
    CHECK(catalog_lookup(PermTriple::parse("(e,e,e)", 4)).verdict == CatalogVerdict::OutsideCatalog);
}

TEST_CASE("property: catalog lists partition the 36 triples with sigma = e") {
    std::set<PermTriple> non, uni, all;
    for (const auto& e : catalog()) (e.verdict == CatalogVerdict::NonUnique ? non : uni).insert(e.triple);
    for (const auto& t0 : all_permutations(3))
        for (const auto& t1 : all_permutations(3)) all.insert(PermTriple{Permutation::identity(3), t0, t1});
    CHECK(non.size() == 26);
    CHECK(uni.size() == 10);
    std::set<PermTriple> both;
    std::set_intersection(non.begin(), non.end(), uni.begin(), uni.end(), std::inserter(both, both.begin()));
    CHECK(both.empty());
    std::set<PermTriple> un = non;
    un.insert(uni.begin(), uni.end());
    CHECK(un == all);
    for (const auto& t : all) CHECK(catalog_lookup(t).verdict != CatalogVerdict::OutsideCatalog);
}

TEST_CASE("property: every catalog witness word gives a segment") {
    for (const auto& e : catalog()) {
        if (e.verdict != CatalogVerdict::NonUnique) continue;
        auto c = classify_word(build_trip_map(e.triple), *e.witness);
        INFO(e.triple.str());
        CHECK(c.verdict == Verdict::LineSegment);
        for (const auto& w : c.witnesses) CHECK(eigen_residual_zero(c.squared, MatrixForm::Subdivision, w));
    }
}

TEST_CASE("reduce_triple") {
    auto r = reduce_triple(PermTriple::parse("(e,(1 2),(2 3))"));
    CHECK(r.triple == PermTriple::parse("(e,(1 2),(2 3))"));
    CHECK(r.rho.is_identity());
    for (const char* s : {"((2 3),(1 3 2),(2 3))", "((1 2 3),e,e)"}) {
        PermTriple t = PermTriple::parse(s);
        auto red = reduce_triple(t);
        CHECK(red.triple.sigma.is_identity());
        // Oracle: the reduced maps are the originals conjugated by P(rho).
        IntMatrix P = perm_to_matrix(red.rho);
        TripMapSpec a = build_trip_map(t), b = build_trip_map(red.triple);
        CHECK(P * a.f0() * P.inverse() == b.f0());
        CHECK(P * a.f1() * P.inverse() == b.f1());
    }
}

TEST_CASE("property: rho-invariance of the uniqueness verdict") {
    Gen g(41);
    auto perms = all_permutations(3);
    for (int t = 0; t < 100; ++t) {
        PermTriple tr{perms[g.range(0, 5)], perms[g.range(0, 5)], perms[g.range(0, 5)]};
        auto red = reduce_triple(tr);
        CatalogEntry e = catalog_lookup(red.triple);
        REQUIRE(e.verdict != CatalogVerdict::OutsideCatalog);
        IntMatrix P = perm_to_matrix(red.rho);
        TripMapSpec a = build_trip_map(tr), b = build_trip_map(red.triple);
        CHECK(P * a.f0() * P.inverse() == b.f0());
        CHECK(P * a.f1() * P.inverse() == b.f1());
        if (e.verdict == CatalogVerdict::NonUnique) {
            CHECK(classify_word(a, *e.witness).verdict == Verdict::LineSegment);
        } else {
            PeriodicWord w = PeriodicWord::parse(g.coin() ? "0,1,1" : "1,0");
            CHECK(classify_word(a, w).verdict != Verdict::LineSegment);
        }
    }
}

TEST_CASE("ratio bound checks") {
    TripMapSpec eee = build_trip_map("(e,e,e)");
    for (long a = 0; a <= 5; ++a) {
        RatioReport r = ratio_bound_check(eee, PeriodicWord::from_trip_digits({a}), Rational(2 * a + 4), 50);
        CHECK(r.satisfied);
        CHECK(r.max_at_checkpoints == eee_checkpoint_max(a, 50));
        CHECK(r.max_at_checkpoints <= 2 * a + 4);
    }
    RatioReport seg = ratio_bound_check(build_trip_map("(e,(1 2),e)"), PeriodicWord::from_trip_digits({1}),
                                        Rational(1000000), 5000);
    CHECK(!seg.satisfied);
    REQUIRE(seg.first_exceed_depth);
    CHECK(*seg.first_exceed_depth <= 10000);
    RatioReport none = ratio_bound_check(eee, PeriodicWord::parse("0,1"), Rational(1), 0);
    CHECK(none.max_ratio_seen == 1);
    CHECK(none.satisfied);
    CHECK_THROWS_AS(ratio_bound_check(eee, PeriodicWord::parse("0,1"), Rational(1, 2), 3), std::invalid_argument);
}

TEST_CASE("minimal polynomials of witnesses") {
    auto ws = eigen_in_triangle(IntMatrix{{0, 0, 1}, {1, 0, -1}, {0, 1, 0}});
    auto mp = minimal_polynomial_of_point(ws[0]);
    CHECK(mp[0] == IntPolynomial{-1, 1, 0, 1});
    CHECK(mp[1] == IntPolynomial{-1, 1, 2, 1});
    auto w11 = eigen_in_triangle(combined_period_matrix(1, 1));
    bool found = false;
    for (const auto& w : w11)
        if (w.in_closed_triangle) {
            CHECK(minimal_polynomial_of_point(w)[0] == IntPolynomial{-1, 1, 1, 1});
            found = true;
        }
    CHECK(found);
    EigenWitness rat{AlgebraicReal::from_rational(1), FieldElement(1), {1, Rational(1, 2), Rational(1, 2)},
                     {1, Rational(1, 2), Rational(1, 2)}, true};
    for (const auto& p : minimal_polynomial_of_point(rat)) CHECK(p.degree() == 1);
}

TEST_CASE("orbit periodicity") {
    FieldElement a = FieldElement::generator(field_of("x^3+x-1", 0, 1));
    auto r = detect_orbit_periodicity(ProjectivePoint::from_xy(a, a * a), build_trip_map("(e,e,e)"), 10);
    CHECK(r.preperiod == 0);
    CHECK(r.period == 1);
    FieldElement b = FieldElement::generator(field_of("2x^3-5x^2+x+1", 0, 1));
    auto r2 = detect_orbit_periodicity(ProjectivePoint::from_xy(b, b * Rational(2) - b * b * Rational(2)),
                                       build_trip_map("((2 3),e,(2 3))"), 10);
    CHECK(r2.preperiod == 0);
    CHECK(r2.period == 2);
    CHECK(r2.digits == std::vector<long>{1, 2});
    try {
        detect_orbit_periodicity(ProjectivePoint::from_xy(Rational(1, 2), Rational(1, 3)), build_trip_map("(e,e,e)"), 50);
        FAIL("expected NotDetected");
    } catch (const NotDetected& nd) {
        CHECK(nd.reason == Termination::BoundaryHit);
    }
}

TEST_CASE("projected diameter") {
    TripMapSpec eee = build_trip_map("(e,e,e)");
    CHECK(projected_diameter(eee, PeriodicWord::parse("0,1"), 0).squared == 2);
    auto d = projected_diameter(eee, PeriodicWord::parse("0,1"), 30);
    CHECK(d.below(Rational(1, 1000000)));
    CHECK(d.approx < 1e-6);
}

TEST_CASE("property: eigen residuals vanish exactly") {
    Gen g(42);
    auto fam = enumerate_family();
    int checked = 0;
    for (int t = 0; t < 150; ++t) {
        const TripMapSpec& m = fam[static_cast<size_t>(g.range(0, 215))];
        std::vector<int> bits = g.bits(static_cast<size_t>(g.range(1, 5)));
        IntMatrix W = periodic_matrix(m, PeriodicWord::make(bits));
        for (MatrixForm f : {MatrixForm::Subdivision, MatrixForm::Map}) {
            IntMatrix M = f == MatrixForm::Map ? map_form(W) : W;
            try {
                for (const auto& w : eigen_in_triangle(M, f)) {
                    CHECK(eigen_residual_zero(M, f, w));
                    ++checked;
                }
            } catch (const RepeatedEigenvalueUnresolved&) {
            }
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("property: unique points are at most cubic") {
    Gen g(43);
    int seen = 0;
    for (const auto& e : catalog()) {
        if (e.verdict != CatalogVerdict::Unique) continue;
        TripMapSpec m = build_trip_map(e.triple);
        for (int t = 0; t < 4; ++t) {
            PeriodicWord w = PeriodicWord::make(g.bits(static_cast<size_t>(g.range(2, 6))));
            auto c = classify_word(m, w);
            if (c.verdict != Verdict::UniquePoint) continue;
            for (const auto& p : minimal_polynomial_of_point(c.witnesses[0])) CHECK(p.degree() <= 3);
            ++seen;
        }
    }
    CHECK(seen > 10);
}

TEST_CASE("classification sweep: serial and parallel kernels agree") {
    std::vector<std::pair<TripMapSpec, PeriodicWord>> jobs;
    auto fam = enumerate_family();
    for (size_t i = 0; i < fam.size(); i += 9)
        for (const char* w : {"1,0", "0,1,1"}) jobs.emplace_back(fam[i], PeriodicWord::parse(w));
    auto a = classify_batch(jobs, Exec::Serial), b = classify_batch(jobs, Exec::Parallel);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(a[i].boundary == b[i].boundary);
        CHECK(a[i].witnesses.size() == b[i].witnesses.size());
    }
}

}  // TEST_SUITE
