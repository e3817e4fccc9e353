#ifndef NODAL_BESSEL_HPP
#define NODAL_BESSEL_HPP

namespace nodal {

// Bessel functions of the first kind.  Power series (long double
// accumulation) for |x| <= 12, Hankel asymptotic expansion with optimal
// truncation beyond.  Absolute accuracy is ~1e-13 over the switch point;
// the unit tests pin both against an integral-representation oracle.
double bessel_j0(double x);
double bessel_j1(double x);

} // namespace nodal

#endif
