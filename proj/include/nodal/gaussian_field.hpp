#ifndef NODAL_GAUSSIAN_FIELD_HPP
#define NODAL_GAUSSIAN_FIELD_HPP

// Stationary centered Gaussian fields with a prescribed spectral measure on
// the unit circle, sampled exactly as random trigonometric sums
//
//   F(y) = sum_k sqrt(2 w_k) [ a_k cos(2 pi R <u_k, y>) + b_k sin(2 pi R <u_k, y>) ],
//
// one term per antipodal atom pair (w_k the single-atom weight, so that
// E[F(y)^2] = 1), a_k, b_k independent standard normals.  Continuous
// measures are first discretized into equal-mass strata.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "nodal/core.hpp"
#include "nodal/field.hpp"
#include "nodal/measure.hpp"

namespace nodal {

// Equal-mass midpoint discretization into an antipodally-paired atomic
// measure with n_atoms atoms (even, >= 8).  Atomic inputs pass through.
DirectionMeasure discretize_measure(const DirectionMeasure& mu, int n_atoms);

struct FieldSample {
    std::vector<Vec2> directions;  // unit vectors, one per antipodal pair
    std::vector<double> amplitudes; // sqrt(2 w_k)
    std::vector<double> gauss_a, gauss_b;
    double scale_R = 1.0;
    std::uint64_t seed = 0;

    TrigSumField field() const;
};

// mu must be atomic and non-degenerate (discretize first).
FieldSample sample_field(const DirectionMeasure& mu, double R, std::uint64_t seed);

struct McStatistics {
    int n_samples = 0;
    double mean = 0.0;
    double variance = 0.0; // unbiased
    double standard_error = 0.0;
    std::vector<double> lengths; // per-sample L(F, [-1/2,1/2]^2)
    std::vector<std::uint64_t> seeds;
    std::vector<char> converged;
    int unconverged_count = 0;
};

// i.i.d. realizations measured on the unit square; per-sample seeds are
// counter-split from the master seed, so any parallel schedule gives the
// same numbers.
McStatistics mc_nodal_statistics(const DirectionMeasure& mu, double R, int n_samples,
                                 int resolution, double refine_tol, std::uint64_t seed);

// CSV: sample_index,seed,length,converged
void write_lengths_csv(const McStatistics& stats, std::ostream& os);

} // namespace nodal

#endif
