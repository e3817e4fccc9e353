#include "nodal/field.hpp"

#include <cmath>

namespace nodal {

double TrigSumField::value(Vec2 p) const {
    double sum = 0.0;
    for (const auto& w : waves_) {
        const double phase = kTwoPi * w.freq.dot(p);
        sum += w.c * std::cos(phase) + w.s * std::sin(phase);
    }
    return sum;
}

Vec2 TrigSumField::gradient(Vec2 p) const {
    Vec2 g;
    for (const auto& w : waves_) {
        const double phase = kTwoPi * w.freq.dot(p);
        const double d = kTwoPi * (-w.c * std::sin(phase) + w.s * std::cos(phase));
        g.x += d * w.freq.x;
        g.y += d * w.freq.y;
    }
    return g;
}

void TrigSumField::sample_line(Vec2 start, Vec2 step, std::span<double> out) const {
    const std::size_t n = out.size();
    if (n == 0) return;
    const std::size_t k = waves_.size();

    // value(x_i) = Re sum_k (c_k - i s_k) e^{2 pi i <f_k, x_i>}; stepping by
    // `step` multiplies each phasor by a fixed rotation.  Rotations are unit
    // modulus, so drift is ~i*eps; phasors are re-seeded every kResync steps.
    constexpr std::size_t kResync = 512;
    std::vector<double> zr(k), zi(k), rr(k), ri(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double dphi = kTwoPi * waves_[j].freq.dot(step);
        rr[j] = std::cos(dphi);
        ri[j] = std::sin(dphi);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i % kResync == 0) {
            const Vec2 p{start.x + step.x * static_cast<double>(i),
                         start.y + step.y * static_cast<double>(i)};
            for (std::size_t j = 0; j < k; ++j) {
                const double phase = kTwoPi * waves_[j].freq.dot(p);
                const double cp = std::cos(phase), sp = std::sin(phase);
                zr[j] = waves_[j].c * cp + waves_[j].s * sp;
                zi[j] = -waves_[j].s * cp + waves_[j].c * sp;
            }
        }
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) sum += zr[j];
        out[i] = sum;
        for (std::size_t j = 0; j < k; ++j) {
            const double nr = zr[j] * rr[j] - zi[j] * ri[j];
            const double ni = zr[j] * ri[j] + zi[j] * rr[j];
            zr[j] = nr;
            zi[j] = ni;
        }
    }
}

double TrigSumField::gradient_sup_bound() const {
    double bound = 0.0;
    for (const auto& w : waves_) bound += kTwoPi * w.freq.norm() * std::hypot(w.c, w.s);
    return bound;
}

TrigSumField TrigSumField::translated(Vec2 shift) const {
    std::vector<TrigWave> out = waves_;
    for (auto& w : out) {
        const double b = kTwoPi * w.freq.dot(shift);
        const double cb = std::cos(b), sb = std::sin(b);
        const double c = w.c * cb + w.s * sb;
        const double s = w.s * cb - w.c * sb;
        w.c = c;
        w.s = s;
    }
    return TrigSumField(std::move(out));
}

TrigSumField TrigSumField::scaled(double factor) const {
    std::vector<TrigWave> out = waves_;
    for (auto& w : out) w.freq = w.freq * factor;
    return TrigSumField(std::move(out));
}

TrigSumField TrigSumField::rotated90() const {
    // value(R x) with R (x,y) = (-y, x): <f, Rx> = <R^T f, x>, R^T (a,b) = (b,-a)
    std::vector<TrigWave> out = waves_;
    for (auto& w : out) w.freq = {w.freq.y, -w.freq.x};
    return TrigSumField(std::move(out));
}

} // namespace nodal
