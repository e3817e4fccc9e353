#ifndef NODAL_CORRELATIONS_HPP
#define NODAL_CORRELATIONS_HPP

// Exhaustive searches for vanishing 2l-fold sums of lattice points on a
// circle, and of their coordinate projections ("semi-correlations").
//
// Tuple semantics: a tuple is an unordered multiset of 2l slots, each slot
// holding one lattice point; the same point may occupy several slots.  A
// tuple is trivial when its multiset of summands splits into (v, -v) pairs.
// Searches enumerate canonical (sorted) tuples; reports are lexicographic.
//
// Budget: the guard is on raw ordered-tuple count N^(2l).  Above
// mitm_threshold the meet-in-the-middle path (hash of half-tuple sums) is
// used; above max_raw_tuples the search refuses with BudgetExceeded.

#include <optional>
#include <vector>

#include "nodal/core.hpp"
#include "nodal/lattice.hpp"

namespace nodal {

enum class Axis { first, second, full_vector };

struct SearchBudget {
    double max_raw_tuples = 1e9;
    double mitm_threshold = 1e8;
};

struct CorrelationReport {
    long long lambda = 0;
    int ell = 0;
    Axis axis = Axis::full_vector;

    // Nontrivial zero-sum tuples, canonical (sorted ascending), lexicographic.
    // value_tuples is used for coordinate axes, point_tuples for full_vector.
    std::vector<std::vector<long long>> value_tuples;
    std::vector<std::vector<LatticePoint>> point_tuples;

    std::optional<double> min_nonzero_abs;    // set by min_quasi_correlation
    std::optional<double> ratio_to_threshold; // min / lambda^(-1/2+delta)
    double delta = 0.0;
    bool used_mitm = false;

    bool has_nontrivial() const { return !value_tuples.empty() || !point_tuples.empty(); }
};

// All nontrivial 2l-tuples of lattice points with vector sum zero.
CorrelationReport find_correlations(long long lambda, int ell, const SearchBudget& budget = {});

// Same for the chosen coordinate projections (axis != full_vector).
CorrelationReport find_semi_correlations(long long lambda, int ell, Axis axis,
                                         const SearchBudget& budget = {});

// Minimum |sum| over 2l-tuples with nonzero sum (integer-valued for
// coordinate axes, Euclidean norm of an integer vector for full_vector),
// plus the ratio min / lambda^(-1/2+delta).
CorrelationReport min_quasi_correlation(long long lambda, int ell, Axis axis, double delta,
                                        const SearchBudget& budget = {});

// True iff every zero-sum p-tuple drawn from `values` (p even, repetition
// across slots allowed) is a perfect antipodal pairing.
bool is_lambda_p_admissible(const std::vector<long long>& values, int p,
                            const SearchBudget& budget = {});

struct ScanEntry {
    long long lambda = 0;
    bool has_nontrivial_semi_correlation = false;
    double running_density = 0.0; // flagged fraction of S cap [1, lambda]
};

struct ScanResult {
    int ell = 0;
    std::vector<ScanEntry> entries;
    bool truncated = false; // budget ran out; entries cover a prefix of S
};

// Per-lambda semi-correlation flags (either axis) for all lambda <= x in S.
ScanResult scan_admissible_eigenvalues(long long x, int ell, const SearchBudget& budget = {});

} // namespace nodal

#endif
