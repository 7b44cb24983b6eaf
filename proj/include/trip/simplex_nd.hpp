#pragma once

#include <stdexcept>
#include <vector>

#include "trip/exec.hpp"
#include "trip/trip_engine.hpp"

namespace trip {

struct DimensionTooSmall : std::invalid_argument {
    DimensionTooSmall() : std::invalid_argument("simplex maps need matrix dimension d >= 3") {}
};
struct DimensionMismatch : std::invalid_argument {
    DimensionMismatch() : std::invalid_argument("dimensions differ") {}
};

// d x d matrices acting on the (d-1)-simplex {0 <= x_{d-1} <= ... <= x_1 <= 1}.
struct SimplexMapSpec {
    size_t d = 3;
    TripMapSpec map;
    const IntMatrix& m0() const { return map.split.f0; }
    const IntMatrix& m1() const { return map.split.f1; }
};

SimplexMapSpec build_nd(size_t d, const PermTriple& t);
SimplexMapSpec build_nd(size_t d, std::string_view triple_text);

// Simplex points are the d - 1 affine coordinates (x_1, ..., x_{d-1}).
using SimplexPoint = Vec;
ProjectivePoint lift(const SimplexPoint& x);
SimplexPoint project(const ProjectivePoint& p);
bool in_simplex(const SimplexPoint& x);  // closed

// pi((1, x) (B M0^-1 M1^-k B^-1)^T)
SimplexPoint simplex_apply(const SimplexMapSpec& s, long k, const SimplexPoint& x);
// Index k of the Sigma_k holding x (same boundary convention as the triangle), -1 past the ones cap.
long simplex_index(const SimplexMapSpec& s, const SimplexPoint& x, long ones_cap = kDefaultOnesCap);
TripSequence simplex_sequence(const SimplexPoint& x, const SimplexMapSpec& s, size_t terms,
                              long ones_cap = kDefaultOnesCap);

bool same_algorithm(const SimplexMapSpec& a, const SimplexMapSpec& b);

// d!^3 / (d-2)! for matrix dimension d: 216 for d = 3, 6912 for d = 4.
Integer unique_count_bound(size_t d);

struct LemmaStabilizer {
    Permutation sigma;  // fixes 1 and d
    Permutation tau0, tau1;
    bool fixes_a0 = false;  // sigma A0 tau0 == A0
    bool fixes_a1 = false;  // sigma A1 tau1 == A1
};

// For every sigma' fixing the first and last index: tau1' = sigma'^-1 and tau0' = sbar^-1,
// where sbar(i) = sigma'(i+1) - 1 for i < d - 1 and sbar fixes d - 1 and d.
std::vector<LemmaStabilizer> lemma_stabilizers(size_t d);

struct DuplicateReport {
    size_t d = 0;
    size_t triples = 0;
    size_t classes = 0;
    size_t largest_class = 0;
};

// Number of distinct (M0, M1) pairs over all of S_d^3.
DuplicateReport duplicate_class_count(size_t d, Exec exec = Exec::Parallel);

}  // namespace trip
