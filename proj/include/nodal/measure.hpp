#ifndef NODAL_MEASURE_HPP
#define NODAL_MEASURE_HPP

// Symmetric probability measures on the unit circle: Dirac atoms, uniform
// arcs, or Lebesgue.  Provides Fourier moments mu_hat(k), the covariance
// function r(w) = integral of cos(2 pi <w, u(theta)>) d mu, its derivatives,
// and the second-moment matrix
//
//   L = [ 1/2 + a/2   b/2       ]        a + i b = mu_hat(2),
//       [ b/2         1/2 - a/2 ]        det L = (1 - a^2 - b^2)/4.
//
// L is stored in normalized (unit-wavenumber) form; field-level derivative
// quantities carry their explicit 2*pi factors.

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"
#include "nodal/core.hpp"

namespace nodal {

class EigenfunctionSpec; // eigenfunction.hpp

enum class MeasureKind { atomic, arc_uniform, lebesgue };

struct Atom {
    double angle = 0.0;  // in [0, 2pi)
    double weight = 0.0; // > 0
};

struct Arc {
    double start = 0.0; // in [0, 2pi)
    double end = 0.0;   // start < end <= start + 2pi (may pass 2pi)
    double mass = 0.0;  // > 0, uniform density mass/(end-start)
};

struct MomentMatrix {
    double alpha = 0.0;
    double beta = 0.0;

    SymMat2 entries() const { return {0.5 + 0.5 * alpha, 0.5 * beta, 0.5 - 0.5 * alpha}; }
    double det() const { return 0.25 * (1.0 - alpha * alpha - beta * beta); }
    bool degenerate() const { return det() < 1e-12; }
};

class DirectionMeasure {
  public:
    static DirectionMeasure lebesgue();
    // Both constructors validate total mass 1 and antipodal symmetry.
    static DirectionMeasure atomic(std::vector<Atom> atoms);
    static DirectionMeasure arc_uniform(std::vector<Arc> arcs);
    // Two opposite uniform arcs [start, start+width) and its antipode,
    // mass 1/2 each.  With start = 0, width = pi/4 this is the pair of
    // eighth-circle arcs used by the non-equidistributed examples.
    static DirectionMeasure antipodal_arc_pair(double start, double width);

    MeasureKind kind() const { return kind_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::complex<double> fourier_moment(int k) const;
    double covariance(Vec2 w) const;
    void covariance_derivatives(Vec2 w, Vec2& grad, SymMat2& hess) const;
    MomentMatrix moment_matrix() const;

    nlohmann::json to_json() const;
    static DirectionMeasure from_json(const nlohmann::json& j);

  private:
    DirectionMeasure() = default;

    MeasureKind kind_ = MeasureKind::lebesgue;
    std::vector<Atom> atoms_; // sorted by angle
    std::vector<Arc> arcs_;   // sorted by start
};

// Pseudo-spectral measure of an eigenfunction: atoms at xi/sqrt(lambda) with
// weights |a_xi|^2.  Rejects unnormalized specs.
DirectionMeasure spectral_measure_of(const EigenfunctionSpec& spec);

} // namespace nodal

#endif
