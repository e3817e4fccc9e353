#include "nodal/bessel.hpp"

#include <cmath>

#include "nodal/core.hpp"

namespace nodal {

namespace {

constexpr double kSeriesCut = 12.0;

// J_nu(x) ~ sqrt(2/(pi x)) Re[ e^{iw} sum_m i^m a_m x^{-m} ],
// w = x - nu*pi/2 - pi/4, a_0 = 1, a_{m+1} = a_m (4 nu^2 - (2m+1)^2)/(8(m+1)).
// The real/imaginary parts of the sum are the classical P and Q series.
// Terms are added until they stop decreasing (optimal truncation).
double hankel(double x, int nu) {
    const double mu = 4.0 * nu * nu;
    double tr = 1.0, ti = 0.0; // current term i^m a_m x^{-m}
    double sr = 1.0, si = 0.0;
    double prev_mag = 1.0;
    for (int m = 0; m < 40; ++m) {
        const double ratio = (mu - (2.0 * m + 1.0) * (2.0 * m + 1.0)) / (8.0 * (m + 1.0)) / x;
        // term *= i * ratio
        const double nr = -ti * ratio;
        const double ni = tr * ratio;
        tr = nr;
        ti = ni;
        const double mag = std::hypot(tr, ti);
        if (mag >= prev_mag) break;
        sr += tr;
        si += ti;
        prev_mag = mag;
        if (mag < 1e-18) break;
    }
    const double w = x - 0.5 * nu * kPi - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (std::cos(w) * sr - std::sin(w) * si);
}

} // namespace

double bessel_j0(double x) {
    x = std::abs(x);
    if (x <= kSeriesCut) {
        // sum (-1)^m (x/2)^{2m} / (m!)^2 in long double
        const long double u = static_cast<long double>(x) * 0.5L;
        const long double u2 = u * u;
        long double term = 1.0L, sum = 1.0L;
        for (int m = 1; m <= 60; ++m) {
            term *= -u2 / (static_cast<long double>(m) * m);
            sum += term;
            if (std::abs(static_cast<double>(term)) < 1e-19) break;
        }
        return static_cast<double>(sum);
    }
    return hankel(x, 0);
}

double bessel_j1(double x) {
    const double sign = x < 0 ? -1.0 : 1.0;
    x = std::abs(x);
    if (x <= kSeriesCut) {
        // (x/2) sum (-1)^m (x^2/4)^m / (m! (m+1)!)
        const long double u = static_cast<long double>(x) * 0.5L;
        const long double u2 = u * u;
        long double term = u, sum = u;
        for (int m = 1; m <= 60; ++m) {
            term *= -u2 / (static_cast<long double>(m) * (m + 1));
            sum += term;
            if (std::abs(static_cast<double>(term)) < 1e-19) break;
        }
        return sign * static_cast<double>(sum);
    }
    return sign * hankel(x, 1);
}

} // namespace nodal
