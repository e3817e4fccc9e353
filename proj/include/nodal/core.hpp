#ifndef NODAL_CORE_HPP
#define NODAL_CORE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nodal {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

// Symmetric 2x2 matrix, stored as (xx, xy, yy).
struct SymMat2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    double trace() const { return xx + yy; }
    double det() const { return xx * yy - xy * xy; }

    // Eigenvalues, descending.
    void eigenvalues(double& hi, double& lo) const {
        const double m = 0.5 * (xx + yy);
        const double d = std::sqrt(std::max(0.0, 0.25 * (xx - yy) * (xx - yy) + xy * xy));
        hi = m + d;
        lo = m - d;
    }
};

// Thrown when an exhaustive search would exceed the configured budget.
struct BudgetExceeded : std::runtime_error {
    double estimated_cost;
    explicit BudgetExceeded(double cost)
        : std::runtime_error("search budget exceeded, estimated cost " + std::to_string(cost)),
          estimated_cost(cost) {}
};

} // namespace nodal

#endif
