#ifndef NODAL_LATTICE_HPP
#define NODAL_LATTICE_HPP

// Lattice points on circles x1^2 + x2^2 = lambda and the arithmetic around
// them: representability as a sum of two squares, the divisor-formula
// multiplicity r2(n) = 4 (d1(n) - d3(n)), and angle-ordered enumeration.

#include <cstdint>
#include <utility>
#include <vector>

namespace nodal {

struct LatticePoint {
    long long x1 = 0;
    long long x2 = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    auto operator<=>(const LatticePoint&) const = default; // lexicographic
    LatticePoint operator-() const { return {-x1, -x2}; }
};

struct LatticeCircle {
    long long lambda = 0;
    std::vector<LatticePoint> points; // sorted by angle in [0, 2pi)

    long long multiplicity() const { return static_cast<long long>(points.size()); }
};

// Trial-division factorization, (prime, exponent) pairs in ascending order.
std::vector<std::pair<long long, int>> factorize(long long n);

// True iff every prime p = 3 (mod 4) divides n to an even power.
bool is_sum_of_two_squares(long long n);

// r2(n) by the divisor identity 4 (d1 - d3); 0 when n is not representable.
long long multiplicity_by_divisors(long long n);

// Enumerates {(a,b) : a^2 + b^2 = lambda}, angle-sorted, and cross-checks the
// count against the divisor formula (throws std::logic_error on mismatch).
LatticeCircle lattice_points(long long lambda);

// |lattice_points(lambda)|, cross-checked the same way.
long long multiplicity(long long lambda);

// Ascending members of S = {n >= 1 : n is a sum of two squares} up to x.
std::vector<long long> sums_of_two_squares_up_to(long long x);

} // namespace nodal

#endif
