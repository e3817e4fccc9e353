#ifndef NODAL_EIGENFUNCTION_HPP
#define NODAL_EIGENFUNCTION_HPP

// Real toral eigenfunctions
//
//   f(x) = sum_{|xi|^2 = lambda} a_xi e(<xi, x>),   e(t) = exp(2 pi i t),
//
// with Hermitian coefficients (conj(a_xi) = a_{-xi}) and unit L2 norm, plus
// their restrictions F_x(y) = f(x + R y / sqrt(lambda)) to Planck windows.
// Evaluation folds each antipodal pair into one real cosine/sine wave.

#include <complex>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "nodal/core.hpp"
#include "nodal/field.hpp"
#include "nodal/lattice.hpp"

namespace nodal {

struct FourierCoeff {
    LatticePoint xi;
    std::complex<double> a;
};

struct PlanckWindow {
    Vec2 center;        // x in [0,1)^2
    double scale = 1.0; // R >= 1; window field lives on y in [-1/2,1/2]^2
};

class EigenfunctionSpec {
  public:
    // Validates: every |xi|^2 = lambda, no duplicate xi, Hermitian symmetry
    // within 1e-12 (this is what keeps evaluation real), unit norm within 1e-12.
    static EigenfunctionSpec build(long long lambda, std::vector<FourierCoeff> coeffs);

    // a_xi = 1/sqrt(N) on the whole circle.
    static EigenfunctionSpec bourgain(long long lambda);

    // Equal coefficients on the lattice points inside the selected eighth-circle
    // arcs (1-based, anticlockwise from (1,0)), renormalized to unit norm.
    // Arcs must come in antipodal pairs (j, j+4).
    static EigenfunctionSpec arc_bourgain(long long lambda, const std::vector<int>& arcs);

    // Random phases and mildly varying magnitudes on antipodal pairs,
    // normalized; flatness margin stays below 3 for every epsilon >= 0.
    static EigenfunctionSpec random_flat(long long lambda, double epsilon, std::uint64_t seed);

    // sqrt(2) cos(2 pi m x1): the degenerate line-supported case, lambda = m^2.
    static EigenfunctionSpec cosine_line(long long m);

    long long lambda() const { return lambda_; }
    long long circle_multiplicity() const { return n_lambda_; }
    const std::vector<FourierCoeff>& coefficients() const { return coeffs_; }

    double evaluate(Vec2 x) const { return field_.value(x); }
    Vec2 gradient(Vec2 x) const { return field_.gradient(x); }

    // max |a_xi|^2 N^(1-eps); the spec is flat at level eps iff this is <= 100.
    double flatness_margin(double epsilon) const;

    const TrigSumField& field() const { return field_; }
    TrigSumField restricted(const PlanckWindow& w) const;

    nlohmann::json to_json() const;
    static EigenfunctionSpec from_json(const nlohmann::json& j);

  private:
    EigenfunctionSpec() = default;

    long long lambda_ = 0;
    long long n_lambda_ = 0; // N(lambda), the full circle multiplicity
    std::vector<FourierCoeff> coeffs_;
    TrigSumField field_;
};

} // namespace nodal

#endif
