#include "nodal/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nodal {

namespace {

long long isqrt_floor(long long n) {
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// angle(p) in [0, 2pi): exact integer comparator, no transcendentals.
bool angle_less(const LatticePoint& a, const LatticePoint& b) {
    auto upper = [](const LatticePoint& p) {
        return p.x2 > 0 || (p.x2 == 0 && p.x1 > 0); // angle in [0, pi)
    };
    const bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    const long long cross = a.x1 * b.x2 - a.x2 * b.x1;
    return cross > 0;
}

} // namespace

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_sum_of_two_squares(long long n) {
    if (n < 1) throw std::invalid_argument("is_sum_of_two_squares: n must be positive");
    for (const auto& [p, e] : factorize(n))
        if (p % 4 == 3 && e % 2 == 1) return false;
    return true;
}

long long multiplicity_by_divisors(long long n) {
    if (n < 1) throw std::invalid_argument("multiplicity_by_divisors: n must be positive");
    long long d1 = 0, d3 = 0;
    auto tally = [&](long long v) {
        if (v % 4 == 1) ++d1;
        else if (v % 4 == 3) ++d3;
    };
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        tally(d);
        if (d != n / d) tally(n / d);
    }
    return 4 * (d1 - d3);
}

LatticeCircle lattice_points(long long lambda) {
    if (lambda < 1) throw std::invalid_argument("lattice_points: lambda must be positive");
    LatticeCircle circle;
    circle.lambda = lambda;
    const long long r = isqrt_floor(lambda);
    for (long long a = -r; a <= r; ++a) {
        const long long rem = lambda - a * a;
        const long long b = isqrt_floor(rem);
        if (b * b != rem) continue;
        circle.points.push_back({a, b});
        if (b != 0) circle.points.push_back({a, -b});
    }
    std::sort(circle.points.begin(), circle.points.end(), angle_less);

    const long long formula = multiplicity_by_divisors(lambda);
    if (formula != static_cast<long long>(circle.points.size()))
        throw std::logic_error("lattice_points: divisor formula disagrees with enumeration");
    return circle;
}

long long multiplicity(long long lambda) {
    return lattice_points(lambda).multiplicity();
}

std::vector<long long> sums_of_two_squares_up_to(long long x) {
    std::vector<long long> out;
    for (long long n = 1; n <= x; ++n)
        if (is_sum_of_two_squares(n)) out.push_back(n);
    return out;
}

} // namespace nodal
