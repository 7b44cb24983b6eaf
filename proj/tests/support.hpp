#pragma once

#include "trip/int_matrix.hpp"
#include "trip/number_field.hpp"
#include "trip/permutation.hpp"

#include <random>

namespace testing_support {

using namespace trip;

// Small deterministic generator for property tests.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(uint64_t seed) : rng(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    bool coin() { return range(0, 1) == 1; }

    Rational rational(long maxnum = 50, long maxden = 50) {
        Rational q(range(-maxnum, maxnum), range(1, maxden));
        q.canonicalize();
        return q;
    }

    Permutation perm(int d) {
        std::vector<int> v(d);
        for (int i = 0; i < d; ++i) v[i] = i + 1;
        std::shuffle(v.begin(), v.end(), rng);
        return Permutation(v);
    }

    // Point (x, y) with 1 >= x >= y > 0 and denominators up to maxden.
    std::pair<Rational, Rational> point_in_triangle(long maxden = 1000) {
        long d = range(2, maxden);
        long a = range(1, d);
        long b = range(1, a);
        Rational x(a, d), y(b, d);
        x.canonicalize();
        y.canonicalize();
        return {x, y};
    }

    // Strictly interior: 1 > x > y > 0.
    std::pair<Rational, Rational> interior_point(long maxden = 1000) {
        while (true) {
            auto [x, y] = point_in_triangle(maxden);
            if (x < 1 && x > y) return {x, y};
        }
    }

    std::vector<Rational> simplex_point(int n, long maxden = 1000) {
        long d = range(n + 1, maxden);
        std::vector<long> v(n);
        for (auto& t : v) t = range(1, d);
        std::sort(v.begin(), v.end(), std::greater<long>());
        std::vector<Rational> out;
        for (long t : v) {
            Rational q(t, d);
            q.canonicalize();
            out.push_back(q);
        }
        return out;
    }

    std::vector<int> bits(size_t n) {
        std::vector<int> b(n);
        for (auto& x : b) x = static_cast<int>(range(0, 1));
        return b;
    }
};

inline FieldPtr field_of(const std::string& poly, const Rational& lo, const Rational& hi) {
    Poly p = parse_poly(poly);
    for (const auto& r : isolate_real_roots(p))
        if (algebraic_compare(r, lo) > 0 && algebraic_compare(r, hi) < 0)
            return NumberField::from_root(r);
    throw std::runtime_error("no root of " + poly + " in the interval");
}

// Direct iteration of (y/x, (1-x-ky)/x), k = floor((1-x)/y).
inline std::vector<long> floor_formula_digits(Rational x, Rational y, size_t cap) {
    std::vector<long> out;
    while (y > 0 && out.size() < cap) {
        Integer k = floor_div(Rational((1 - x) / y));
        out.push_back(k.get_si());
        Rational nx = y / x, ny = (1 - x - k * y) / x;
        x = nx;
        y = ny;
    }
    return out;
}

}  // namespace testing_support
