#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trip/exec.hpp"
#include "trip/trip_engine.hpp"

namespace trip {

enum class ClassicalMapId { Monkemeyer, Brun, FullySubtractive, Guting };

std::string to_string(ClassicalMapId id);
ClassicalMapId parse_classical_map(std::string_view name);  // "brun", "monkemeyer", "fully-subtractive", "guting"

struct GutingDigits {
    Integer a;  // >= 1
    Integer b;  // >= 0
};

struct ClassicalStep {
    ProjectivePoint image;
    std::optional<GutingDigits> digits;  // only for Guting
};

// The image left the half-open domain (second coordinate 0).
struct ClassicalBoundaryHit : std::domain_error {
    ClassicalStep step;
    explicit ClassicalBoundaryHit(ClassicalStep s)
        : std::domain_error("image on the boundary y = 0"), step(std::move(s)) {}
};

GutingDigits guting_digits(const ProjectivePoint& p);
ClassicalStep classical_step(ClassicalMapId id, const ProjectivePoint& p);

// Guting has no schedule; throws std::invalid_argument.
ComboSchedule builtin_combo(ClassicalMapId id);

// Leaf regions of a schedule of Bit rules, as transposed vertex matrices (rows are vertices),
// in the order: first rule's 0 child, then the branches through its 1 child.
struct ComboRegion {
    std::vector<int> path;
    IntMatrix rows;
};
std::vector<ComboRegion> combo_regions(const ComboSchedule& s);

// [B A0^-1 A1^-b (A1 P_(2 3))^(-2(a-1)) B^-1]^T
IntMatrix guting_combo_matrix(long a, long b);
bool guting_matrix_identity(long a, long b);

struct EquivalenceMismatch {
    ProjectivePoint point;
    std::string classical;
    std::string combo;
};

struct EquivalenceReport {
    ClassicalMapId id;
    size_t samples = 0;
    size_t boundary_hits = 0;  // agreeing samples whose image has y = 0
    std::vector<EquivalenceMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

bool on_region_boundary(const Rational& x, const Rational& y);

// Random rational points strictly inside the triangle and off every region boundary.
std::vector<std::pair<Rational, Rational>> equivalence_points(size_t samples, unsigned long long seed);

EquivalenceReport verify_equivalence(ClassicalMapId id, size_t samples, unsigned long long seed = 1,
                                     Exec exec = Exec::Parallel);

}  // namespace trip
