#pragma once

// Closed-form minimal-codeword counts and exhaustive verification drivers.
//
// Every scan partitions its index range into contiguous blocks, one per
// worker, and merges results by index so output does not depend on the
// worker count.

#include "qprm/prm.hpp"
#include "qprm/quadric.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qprm {

/// Number of smooth quadrics of the given class in P^{r-1}(F_q).
Count orbit_count(QuadricClass c, int r, Count q);

struct MinimalCountRow {
    Count weight = 0;
    std::optional<Count> closed;
    std::optional<Count> brute;

    friend bool operator==(const MinimalCountRow&, const MinimalCountRow&) = default;
};

struct MinimalCountTable {
    int q = 0;
    int N = 0;
    int delta = 0;
    int epsilon = 0;
    std::vector<MinimalCountRow> rows;  // ascending weight

    /// True when every row carries both columns and they agree.
    bool columns_agree() const noexcept;
    std::map<Count, Count> closed_map() const;
    std::map<Count, Count> brute_map() const;
};

MinimalCountTable minimal_count_closed_form(int q, int N);

struct ScanOptions {
    unsigned workers = 1;
    /// Largest number of forms a scan may enumerate.
    Count budget = 2'000'000;
};

/// Classifies every nonzero form up to scalar, tests minimality with the chosen
/// method and tallies minimal codewords per weight, times q - 1 for scalars.
MinimalCountTable brute_force_census(const FieldRef& field, int N, MinimalityMethod method,
                                     const ScanOptions& options = {});

enum class ViolationShape {
    EllipticInHyperbolic,       // q = 2, both of rank 4
    RankThreeInHyperplanePair,  // q <= 3
    EllipticInHyperplanePair,   // q = 2, rank 4
    Inadmissible,
};

std::string_view to_string(ViolationShape s) noexcept;

struct ContainmentViolation {
    QuadraticForm inner;
    QuadraticForm outer;
    ClassificationReport inner_report;
    ClassificationReport outer_report;
    ViolationShape shape = ViolationShape::Inadmissible;
};

ViolationShape violation_shape(int q, const ClassificationReport& inner, const ClassificationReport& outer) noexcept;

struct ContainmentReport {
    int q = 0;
    int N = 0;
    Count forms_scanned = 0;
    std::vector<ContainmentViolation> violations;

    std::size_t count(ViolationShape s) const noexcept;
    bool admissible() const noexcept { return count(ViolationShape::Inadmissible) == 0; }
};

/// For every form outside the DoubleHyperplane/ConjugatePair classes, searches its
/// interpolation space for forms whose zero set is strictly larger.
ContainmentReport verify_containment(const FieldRef& field, int N, const ScanOptions& options = {});

/// Brute-force cross-check of verify_containment: all ordered pairs of forms up to scalar.
ContainmentReport containment_all_pairs(const FieldRef& field, int N, const ScanOptions& options = {});

struct ExceptionCheck {
    ClassificationReport inner;
    ClassificationReport outer;
    bool strictly_contained = false;
    bool holds = false;
};

/// Elliptic X0^2+X0X1+X1^2+X2X3 inside hyperbolic X0(X0+X3)+X1(X1+X2) over GF(2) in P^3.
ExceptionCheck check_exception_example();
bool verify_exception_example();

/// One pass over every nonzero form: enumeration count against the closed form for
/// the class found by canonicalization, agreement of classify with canonicalize, the
/// Serre maximum, and a per-(class, rank) histogram of forms up to scalar.
struct FormSurvey {
    int q = 0;
    int N = 0;
    Count forms = 0;
    Count count_law_failures = 0;
    Count class_disagreements = 0;
    std::optional<QuadraticForm> first_failure;
    Count serre_bound = 0;
    Count max_points = 0;
    bool max_only_hyperplane_pairs = true;
    bool hyperplane_pairs_attain_max = true;
    /// Forms up to scalar per (class, rank).
    std::map<std::pair<QuadricClass, int>, Count> histogram;

    bool point_count_law_holds() const noexcept { return count_law_failures == 0 && class_disagreements == 0; }
    bool serre_holds() const noexcept {
        return max_points == serre_bound && max_only_hyperplane_pairs && hyperplane_pairs_attain_max;
    }
};

FormSurvey survey_forms(const FieldRef& field, int N, const ScanOptions& options = {});

/// Members of the linear system of conics through the rational points of a conic.
struct ConicSystem {
    std::size_t dimension = 0;  // vector-space dimension of the interpolation space
    std::size_t members = 0;
    std::size_t reducible = 0;
    std::size_t irreducible = 0;
};

ConicSystem conic_linear_system(const PrmCode& plane_code, const QuadraticForm& conic);

/// Splits [0, total) into contiguous blocks and runs body(begin, end, worker) on threads.
template <typename Body>
void parallel_blocks(Count total, unsigned workers, Body&& body);

}  // namespace qprm

#include "qprm/detail/parallel.hpp"
