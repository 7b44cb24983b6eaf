#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trip/exec.hpp"
#include "trip/trip_engine.hpp"

namespace trip {

struct EmptyPeriod : std::invalid_argument {
    EmptyPeriod() : std::invalid_argument("periodic word needs a nonempty period") {}
};

// Tree-sequence word: preperiod followed by the period repeated forever.
struct PeriodicWord {
    std::vector<int> preperiod;
    std::vector<int> period;

    static PeriodicWord make(std::vector<int> period, std::vector<int> preperiod = {});
    // Trip digits a -> 1^a 0.
    static PeriodicWord from_trip_digits(const std::vector<long>& period, const std::vector<long>& preperiod = {});
    // "1,0", "10", or "pre;period" such as "1,1;0,1".
    static PeriodicWord parse(std::string_view text);

    bool all_zero() const;
    bool all_one() const;
    bool degenerate() const { return all_zero() || all_one(); }
    std::string str() const;
};

// F_{i0} F_{i1} ... over one period (subdivision form: V -> V * W).
IntMatrix periodic_matrix(const TripMapSpec& m, const PeriodicWord& w);
IntMatrix periodic_map_matrix(const TripMapSpec& m, const PeriodicWord& w);
IntMatrix word_product(const TripMapSpec& m, const std::vector<int>& bits);

// B - 1 applications of T_(e,(1 3 2),(1 3 2)) at k = 1, then T_(e,e,e) at k = A, in map form.
// Equals [[0,0,1],[1,0,-B],[0,1,-A]] for B >= 1.
IntMatrix combined_period_matrix(long A, long B);

enum class MatrixForm { Map, Subdivision };

struct EigenWitness {
    AlgebraicReal eigenvalue;
    FieldElement lambda;
    // Eigenvector of the analysed matrix in its own action:
    // a row vector (v M = lambda v) for Map, a column vector (M c = lambda c) for Subdivision.
    Vec eigenvector;
    // The same direction as a point (1, x, y) when its first coordinate is nonzero.
    Vec point;
    bool in_closed_triangle = false;
};

struct RepeatedEigenvalueUnresolved : std::domain_error {
    AlgebraicReal eigenvalue;
    size_t dimension;
    RepeatedEigenvalueUnresolved(AlgebraicReal ev, size_t dim)
        : std::domain_error("eigenspace of dimension " + std::to_string(dim) + " for " + ev.str()),
          eigenvalue(std::move(ev)),
          dimension(dim) {}
};

std::vector<EigenWitness> eigen_in_triangle(const IntMatrix& m, MatrixForm form = MatrixForm::Map);
bool eigen_residual_zero(const IntMatrix& m, MatrixForm form, const EigenWitness& w);

enum class Verdict { UniquePoint, LineSegment, DegenerateEdge, Undetermined };
std::string to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::Undetermined;
    std::vector<EigenWitness> witnesses;  // UniquePoint: 1; LineSegment: the two segment ends
    std::string boundary;                 // DegenerateEdge: the vertex, edge or boundary point
    IntMatrix period_matrix;
    IntMatrix squared;
    IntPolynomial charpoly;  // of the squared matrix
    std::vector<std::string> evidence;
};

Classification classify_word(const TripMapSpec& m, const PeriodicWord& w);
std::vector<Classification> classify_batch(const std::vector<std::pair<TripMapSpec, PeriodicWord>>& jobs,
                                           Exec exec = Exec::Parallel);

enum class CatalogVerdict { NonUnique, Unique, OutsideCatalog };
std::string to_string(CatalogVerdict v);

struct NotReduced : std::invalid_argument {
    NotReduced() : std::invalid_argument("catalog lookup needs sigma = e; reduce the triple first") {}
};

struct CatalogEntry {
    PermTriple triple;
    CatalogVerdict verdict;
    std::optional<PeriodicWord> witness;
};

const std::vector<CatalogEntry>& catalog();
CatalogEntry catalog_lookup(const PermTriple& t);

struct ReducedTriple {
    PermTriple triple;  // sigma = e
    Permutation rho;    // rho = sigma^-1; new maps are P(rho) F P(rho)^-1
};
ReducedTriple reduce_triple(const PermTriple& t);

struct RatioReport {
    Rational bound;
    size_t periods = 0;
    size_t depth = 0;             // bits inspected, preperiod included
    Rational max_ratio_seen;      // over every inspected depth
    Rational max_at_checkpoints;  // at the end of each period
    std::optional<size_t> first_exceed_depth;
    bool satisfied = false;       // max_at_checkpoints <= bound
};

RatioReport ratio_bound_check(const TripMapSpec& m, const PeriodicWord& w, const Rational& C, size_t periods);

// Largest ratio between first coordinates of the columns of V.
Rational first_row_ratio(const IntMatrix& v);

std::vector<IntPolynomial> minimal_polynomial_of_point(const EigenWitness& w);

struct NotDetected : std::runtime_error {
    Termination reason;
    explicit NotDetected(Termination r)
        : std::runtime_error("no periodicity detected (" + to_string(r) + ")"), reason(r) {}
};

struct OrbitPeriod {
    size_t preperiod = 0;
    size_t period = 0;
    std::vector<long> digits;  // trip digits of preperiod + one period
};

// Least (preperiod, period) with exact recurrence of the triangle-function orbit.
OrbitPeriod detect_orbit_periodicity(const ProjectivePoint& p, const TripMapSpec& m, size_t max_steps);

struct DiameterReport {
    size_t periods = 0;
    Rational squared;  // exact squared diameter of the projected triangle
    double approx = 0;
    bool below(const Rational& eps) const { return squared < eps * eps; }
};

// Projected triangle Delta(preperiod, period^periods).
DiameterReport projected_diameter(const TripMapSpec& m, const PeriodicWord& w, size_t periods);

// All period words of length 1..max_len that are not all 0s or all 1s.
std::vector<PeriodicWord> nondegenerate_words(size_t max_len);

}  // namespace trip
