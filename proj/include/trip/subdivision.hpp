#pragma once

#include "trip/int_matrix.hpp"
#include "trip/number_field.hpp"

#include <string>
#include <vector>

namespace trip {

using Vec = std::vector<FieldElement>;

enum class Termination { None, BoundaryHit, InfiniteOnesTail, Truncated };
std::string to_string(Termination t);

struct PointOutsideDomain : std::domain_error {
    PointOutsideDomain() : std::domain_error("point outside the domain") {}
};
struct ZeroLeadingCoordinate : std::domain_error {
    ZeroLeadingCoordinate() : std::domain_error("zero leading coordinate") {}
};
struct DegenerateTriangle : std::domain_error {
    DegenerateTriangle() : std::domain_error("singular vertex matrix") {}
};

constexpr long kDefaultOnesCap = 10000;

// The two child matrices of a subdivision rule together with their inverses.
struct SplitPair {
    IntMatrix f0, f1, f0inv, f1inv;
    SplitPair() = default;
    SplitPair(IntMatrix a, IntMatrix b);
    const IntMatrix& f(int bit) const { return bit ? f1 : f0; }
    const IntMatrix& finv(int bit) const { return bit ? f1inv : f0inv; }
};

// Coordinates relative to the vertices of B (upper-triangular ones) and back.
Vec to_simplex_coords(const Vec& p);
Vec from_simplex_coords(const Vec& c);

bool all_nonnegative(const Vec& c);
bool all_positive(const Vec& c);

// (1, x1, ..., xn) with 1 >= x1 >= ... >= xn > 0.
bool in_half_open_domain(const Vec& p);
Vec normalize(const Vec& p);

// One level down: the F1 child wins shared boundaries. Returns the bit, updates c in place.
int descend_bit(Vec& c, const SplitPair& m);
// Descends 1^k 0; returns k, or -1 when more than cap consecutive 1-bits were taken.
long descend_digit(Vec& c, const SplitPair& m, long cap);

// (B W^-1 B^-1)^T: the row-action matrix taking a point of the child W back to the full simplex.
IntMatrix map_form(const IntMatrix& w);
// Inverse of map_form.
IntMatrix subdivision_form(const IntMatrix& map);

}  // namespace trip
