#ifndef NODAL_FIELD_HPP
#define NODAL_FIELD_HPP

// Scalar fields on the plane.  The grid machinery (contour extraction,
// sup-norms, cell quadrature) only talks to PlaneField; trigonometric sums
// (eigenfunctions, windows, Gaussian samples) override sample_line with a
// rotating-phasor recurrence, which is what makes fine grids affordable.

#include <functional>
#include <span>
#include <vector>

#include "nodal/core.hpp"

namespace nodal {

class PlaneField {
  public:
    virtual ~PlaneField() = default;

    virtual double value(Vec2 p) const = 0;

    // out[i] = value(start + i * step)
    virtual void sample_line(Vec2 start, Vec2 step, std::span<double> out) const {
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = value({start.x + step.x * static_cast<double>(i),
                            start.y + step.y * static_cast<double>(i)});
    }

    // Certified bound on sup |grad|, or a negative value when unknown.
    virtual double gradient_sup_bound() const { return -1.0; }
};

class FunctionField final : public PlaneField {
  public:
    explicit FunctionField(std::function<double(Vec2)> f, double grad_bound = -1.0)
        : f_(std::move(f)), grad_bound_(grad_bound) {}
    double value(Vec2 p) const override { return f_(p); }
    double gradient_sup_bound() const override { return grad_bound_; }

  private:
    std::function<double(Vec2)> f_;
    double grad_bound_;
};

// One summand c cos(2 pi <f, x>) + s sin(2 pi <f, x>).
struct TrigWave {
    Vec2 freq;
    double c = 0.0;
    double s = 0.0;
};

class TrigSumField final : public PlaneField {
  public:
    TrigSumField() = default;
    explicit TrigSumField(std::vector<TrigWave> waves) : waves_(std::move(waves)) {}

    const std::vector<TrigWave>& waves() const { return waves_; }

    double value(Vec2 p) const override;
    Vec2 gradient(Vec2 p) const;
    void sample_line(Vec2 start, Vec2 step, std::span<double> out) const override;
    double gradient_sup_bound() const override; // sum 2 pi |f_k| |(c_k, s_k)|

    // The field x -> value(origin + M x) for the affine maps we need.
    TrigSumField translated(Vec2 shift) const;
    TrigSumField scaled(double factor) const; // x -> value(factor * x)
    TrigSumField rotated90() const;           // x -> value(R x), R = 90 deg rotation

  private:
    std::vector<TrigWave> waves_;
};

} // namespace nodal

#endif
