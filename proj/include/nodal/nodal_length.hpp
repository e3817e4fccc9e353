#ifndef NODAL_NODAL_LENGTH_HPP
#define NODAL_NODAL_LENGTH_HPP

// Nodal length of a planar field over squares, disks and the full torus:
// marching-squares extraction of the zero contour with linear interpolation
// on cell edges, saddle cells resolved by a center sample, and resolution
// doubling until successive estimates agree to refine_tol (cap 8192).
//
// Grid conventions: FullTorus samples at half-cell offsets (i+1/2)/n so that
// lattice-aligned nodal lines never hit sample points; exact zeros at sample
// points count as positive.  Disk regions clip segments to the boundary.
// Cell rows are processed in parallel but reduced in row-major order, so the
// result is independent of the thread count.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nodal/core.hpp"
#include "nodal/eigenfunction.hpp"
#include "nodal/field.hpp"

namespace nodal {

struct Region {
    enum class Kind { square, disk, full_torus };

    Kind kind = Kind::full_torus;
    Vec2 center;
    double half_side = 0.0; // square
    double radius = 0.0;    // disk

    static Region square(Vec2 c, double half) { return {Kind::square, c, half, 0.0}; }
    static Region disk(Vec2 c, double r) { return {Kind::disk, c, 0.0, r}; }
    static Region full_torus() { return {Kind::full_torus, {0.5, 0.5}, 0.5, 0.0}; }
};

struct NodalEstimate {
    double length = 0.0;
    int resolution = 0;            // cells per side at the finest level
    double refinement_error = 0.0; // |estimate(n) - estimate(n/2)|
    long long cell_ambiguities = 0; // saddle cells at the finest level
    bool converged = true;
    bool crossing_detected = true;
    std::vector<std::pair<int, double>> history; // (resolution, estimate)
    std::string note;
};

// resolution: starting grid, a power of two >= 64.
// refine_tol: relative, against max(1, estimate).
NodalEstimate nodal_length(const PlaneField& field, const Region& region, int resolution,
                           double refine_tol);

// L(F_x) on [-1/2,1/2]^2 for the Planck window {x, R}.
NodalEstimate nodal_length_planck(const EigenfunctionSpec& spec, Vec2 x, double R,
                                  int resolution, double refine_tol);

// log( sup_{2B} |field| / sup_B |field| ) with sups on 512^2 grids per box.
double doubling_ratio(const PlaneField& field, Vec2 box_center, double box_half_side);

struct LocalityReport {
    double lhs = 0.0;       // L(f, B)
    double rhs = 0.0;       // sqrt(lambda)/R * vol(B) * avg_x L(F_x)
    double rhs_se = 0.0;    // Monte Carlo standard error of rhs
    double discrepancy = 0.0; // |lhs - rhs| / lhs
    int n_mc = 0;
};

// Checks L(f,B) against the window average over n_mc uniform x in B.
// Requires radius >= 10 R / sqrt(lambda) so the boundary term is subdominant.
LocalityReport locality_check(const EigenfunctionSpec& spec, Vec2 center, double radius,
                              double R, int n_mc, int resolution, double refine_tol,
                              std::uint64_t seed);

// Raw contour segments at a single resolution (no disk clipping); test hook.
std::vector<std::array<Vec2, 2>> nodal_segments(const PlaneField& field, const Region& region,
                                                int resolution);

} // namespace nodal

#endif
