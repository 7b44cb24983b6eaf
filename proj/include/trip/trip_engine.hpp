#pragma once

#include "trip/exec.hpp"
#include "trip/permutation.hpp"
#include "trip/subdivision.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace trip {

struct PermTriple {
    Permutation sigma, tau0, tau1;

    // "(e,(12),e)", "((2 3),(1 3 2),(2 3))"; components may also be one-line in brackets: "([1,3,2],e,e)".
    static PermTriple parse(std::string_view text, int degree = 3);
    static PermTriple identity(int degree = 3);
    std::string str() const;
    int degree() const { return sigma.degree(); }
    bool operator==(const PermTriple& o) const {
        return sigma == o.sigma && tau0 == o.tau0 && tau1 == o.tau1;
    }
    bool operator<(const PermTriple& o) const;
};

struct TripMapSpec {
    PermTriple triple;
    SplitPair split;  // F0 = sigma A0 tau0, F1 = sigma A1 tau1
    const IntMatrix& f0() const { return split.f0; }
    const IntMatrix& f1() const { return split.f1; }
};

IntMatrix base_A0(size_t d = 3);
IntMatrix base_A1(size_t d = 3);
IntMatrix base_B(size_t d = 3);

TripMapSpec build_trip_map(const PermTriple& t);
TripMapSpec build_trip_map(std::string_view triple_text);

// Vertex matrix whose columns are the (homogeneous) vertices.
struct VertexTriangle {
    IntMatrix v;
    static VertexTriangle base() { return {base_B(3)}; }
    // Vertices divided by their first coordinate.
    std::vector<std::pair<Rational, Rational>> projected() const;
};

VertexTriangle subdivide(const VertexTriangle& t, int bit, const TripMapSpec& m);
VertexTriangle triangle_of_word(const std::vector<int>& word, const TripMapSpec& m);
IntMatrix word_matrix(const std::vector<int>& word, const TripMapSpec& m);

struct ProjectivePoint {
    Vec coords;  // (1, x, y)
    static ProjectivePoint from_xy(const FieldElement& x, const FieldElement& y);
    const FieldElement& x() const { return coords[1]; }
    const FieldElement& y() const { return coords[2]; }
    std::string str() const;
};
bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);

enum class Membership { Inside, OnSharedBoundary, Outside };
std::string to_string(Membership m);

struct MembershipResult {
    Membership verdict;
    Vec barycentric;  // p = sum c_i v_i
};

MembershipResult membership(const ProjectivePoint& p, const VertexTriangle& t);

struct TreeSequence {
    std::vector<int> bits;
    Termination termination = Termination::None;
};

struct TripSequence {
    std::vector<long> digits;
    Termination termination = Termination::None;
};

struct MalformedPrefix : std::invalid_argument {
    MalformedPrefix() : std::invalid_argument("prefix does not end a block") {}
};

TreeSequence tree_sequence(const ProjectivePoint& p, const TripMapSpec& m, size_t depth,
                           long ones_cap = kDefaultOnesCap);

struct TripRun {
    TripSequence sequence;
    std::vector<ProjectivePoint> orbit;  // orbit[0] = p, orbit[n+1] = T(orbit[n])
};

TripSequence trip_sequence(const ProjectivePoint& p, const TripMapSpec& m, size_t terms,
                           long ones_cap = kDefaultOnesCap);
// One sequence per point, in input order.
std::vector<TripSequence> trip_sequence_batch(const std::vector<ProjectivePoint>& points, const TripMapSpec& m,
                                              size_t terms, long ones_cap = kDefaultOnesCap,
                                              Exec exec = Exec::Parallel);
TripRun trip_orbit(const ProjectivePoint& p, const TripMapSpec& m, size_t terms, long ones_cap = kDefaultOnesCap);

// (B (F1^k F0)^-1 B^-1)^T
IntMatrix triangle_function_matrix(const TripMapSpec& m, long k);
ProjectivePoint apply_triangle_function(const ProjectivePoint& p, const TripMapSpec& m, long k);
// Delta_k containing p, or -1 on an infinite ones tail.
long subtriangle_index(const ProjectivePoint& p, const TripMapSpec& m, long ones_cap = kDefaultOnesCap);

TripSequence tree_to_trip(const TreeSequence& s);
TreeSequence trip_to_tree(const TripSequence& s);

enum class GuardKind { Always, InSubtriangle, NotInSubtriangle };
struct Guard {
    GuardKind kind = GuardKind::Always;
    long k = 0;
    static Guard always() { return {}; }
    static Guard in(long k) { return {GuardKind::InSubtriangle, k}; }
    static Guard not_in(long k) { return {GuardKind::NotInSubtriangle, k}; }
};

// Digit applies the rule's whole triangle function; Bit descends a single subdivision level.
enum class Descent { Digit, Bit };

struct ComboRule {
    TripMapSpec map;
    Guard guard;
    Descent mode = Descent::Digit;
};

// Each step visits the rules in order and descends with every rule whose guard holds.
// Guards refer to the Delta_k of the first rule's map containing the point at the start of the step.
struct ComboSchedule {
    std::vector<ComboRule> rules;
};

struct NoRuleMatched : std::domain_error {
    NoRuleMatched() : std::domain_error("no combo rule matched") {}
};

struct ComboStep {
    std::vector<size_t> fired;
    std::vector<long> index;  // k for Digit rules, the bit for Bit rules
    IntMatrix product;        // subdivision-form product for the step
};

struct ComboRun {
    std::vector<ProjectivePoint> orbit;
    std::vector<ComboStep> steps;
    Termination termination = Termination::None;
};

ComboRun combo_apply(const ProjectivePoint& p, const ComboSchedule& s, size_t steps,
                     long ones_cap = kDefaultOnesCap);

// All 216 maps, lexicographic on the one-line notation of (sigma, tau0, tau1).
std::vector<TripMapSpec> enumerate_family();

// "3/7,2/7" or "alg(x^3+x-1; 0,1)[a, a^2]"; coordinates of the second form are rational expressions in a.
Vec parse_point_coords(std::string_view text);
ProjectivePoint parse_point(std::string_view text);

}  // namespace trip
