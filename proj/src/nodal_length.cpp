#include "nodal/nodal_length.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "nodal/parallel.hpp"
#include "nodal/rng.hpp"

namespace nodal {

namespace {

constexpr int kResolutionCap = 8192;

struct GridGeom {
    Vec2 lo;     // coordinates of sample (0,0)
    double h;    // cell size
    int cells;   // cells per side; samples = cells + 1
};

GridGeom geom_for(const Region& r, int n) {
    switch (r.kind) {
    case Region::Kind::full_torus:
        // half-cell offset; relies on unit periodicity of the field
        return {{0.5 / n, 0.5 / n}, 1.0 / n, n};
    case Region::Kind::square:
        return {{r.center.x - r.half_side, r.center.y - r.half_side}, 2.0 * r.half_side / n, n};
    case Region::Kind::disk:
        return {{r.center.x - r.radius, r.center.y - r.radius}, 2.0 * r.radius / n, n};
    }
    throw std::logic_error("unreachable");
}

inline bool positive(double v) { return v >= 0.0; } // exact zeros count as +

// Linear zero crossing between sample values a (at 0) and b (at 1).
inline double crossing(double a, double b) { return a / (a - b); }

// Portion of [p,q] inside the disk (center c, radius r); segments are convex
// so the inside part is a single sub-interval.
double clipped_length(Vec2 p, Vec2 q, Vec2 c, double r) {
    const Vec2 d = q - p;
    const Vec2 m = p - c;
    const double a = d.norm2();
    if (a == 0.0) return 0.0;
    const double b = 2.0 * m.dot(d);
    const double cc = m.norm2() - r * r;
    const double disc = b * b - 4.0 * a * cc;
    if (disc <= 0.0) return 0.0; // entirely outside (or tangent)
    const double sq = std::sqrt(disc);
    const double t0 = std::max(0.0, (-b - sq) / (2.0 * a));
    const double t1 = std::min(1.0, (-b + sq) / (2.0 * a));
    return t1 > t0 ? (t1 - t0) * std::sqrt(a) : 0.0;
}

// Marching squares over one row of cells.  row0/row1 hold samples at y and
// y+h; sink receives raw segments.  Returns the number of saddle cells.
template <class Sink>
long long march_row(const PlaneField& field, const GridGeom& g, int j, const double* row0,
                    const double* row1, Sink&& sink) {
    long long saddles = 0;
    const double y0 = g.lo.y + g.h * j;
    const double y1 = y0 + g.h;
    for (int i = 0; i < g.cells; ++i) {
        const double v00 = row0[i], v10 = row0[i + 1];
        const double v01 = row1[i], v11 = row1[i + 1];
        const int code = (positive(v00) ? 1 : 0) | (positive(v10) ? 2 : 0) |
                         (positive(v11) ? 4 : 0) | (positive(v01) ? 8 : 0);
        if (code == 0 || code == 15) continue;

        const double x0 = g.lo.x + g.h * i;
        const double x1 = x0 + g.h;
        auto bottom = [&] { return Vec2{x0 + g.h * crossing(v00, v10), y0}; };
        auto top = [&] { return Vec2{x0 + g.h * crossing(v01, v11), y1}; };
        auto left = [&] { return Vec2{x0, y0 + g.h * crossing(v00, v01)}; };
        auto right = [&] { return Vec2{x1, y0 + g.h * crossing(v10, v11)}; };

        switch (code) {
        case 1: case 14: sink(left(), bottom()); break;
        case 2: case 13: sink(bottom(), right()); break;
        case 3: case 12: sink(left(), right()); break;
        case 4: case 11: sink(top(), right()); break;
        case 6: case 9:  sink(bottom(), top()); break;
        case 7: case 8:  sink(left(), top()); break;
        case 5: { // BL,TR positive
            ++saddles;
            const bool center_pos =
                positive(field.value({0.5 * (x0 + x1), 0.5 * (y0 + y1)}));
            if (center_pos) { sink(bottom(), right()); sink(left(), top()); }
            else            { sink(left(), bottom()); sink(top(), right()); }
            break;
        }
        case 10: { // BR,TL positive
            ++saddles;
            const bool center_pos =
                positive(field.value({0.5 * (x0 + x1), 0.5 * (y0 + y1)}));
            if (center_pos) { sink(left(), bottom()); sink(top(), right()); }
            else            { sink(bottom(), right()); sink(left(), top()); }
            break;
        }
        default: break;
        }
    }
    return saddles;
}

struct SweepResult {
    double length = 0.0;
    long long saddles = 0;
    bool any_crossing = false;
};

SweepResult sweep(const PlaneField& field, const Region& region, int n) {
    const GridGeom g = geom_for(region, n);
    const bool clip = region.kind == Region::Kind::disk;

    std::vector<double> row_length(g.cells, 0.0);
    std::vector<long long> row_saddles(g.cells, 0);
    std::vector<long long> row_segments(g.cells, 0);

    const int blocks = std::min(thread_count(), g.cells);
    parallel_for(blocks, [&](std::int64_t b) {
        const int jlo = static_cast<int>(g.cells * b / blocks);
        const int jhi = static_cast<int>(g.cells * (b + 1) / blocks);
        std::vector<double> rows[2];
        rows[0].resize(g.cells + 1);
        rows[1].resize(g.cells + 1);
        field.sample_line({g.lo.x, g.lo.y + g.h * jlo}, {g.h, 0.0}, rows[0]);
        for (int j = jlo; j < jhi; ++j) {
            auto& below = rows[(j - jlo) % 2];
            auto& above = rows[(j - jlo + 1) % 2];
            field.sample_line({g.lo.x, g.lo.y + g.h * (j + 1)}, {g.h, 0.0}, above);
            double acc = 0.0;
            long long segs = 0;
            row_saddles[j] = march_row(field, g, j, below.data(), above.data(),
                                       [&](Vec2 p, Vec2 q) {
                                           ++segs;
                                           acc += clip ? clipped_length(p, q, region.center,
                                                                        region.radius)
                                                       : (q - p).norm();
                                       });
            row_length[j] = acc;
            row_segments[j] = segs;
        }
    });

    SweepResult res;
    for (int j = 0; j < g.cells; ++j) { // fixed reduction order
        res.length += row_length[j];
        res.saddles += row_saddles[j];
        if (row_segments[j] != 0) res.any_crossing = true;
    }
    return res;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

NodalEstimate nodal_length(const PlaneField& field, const Region& region, int resolution,
                           double refine_tol) {
    if (!is_power_of_two(resolution) || resolution < 64)
        throw std::invalid_argument("nodal_length: resolution must be a power of two >= 64");
    if (!(refine_tol > 0.0)) throw std::invalid_argument("nodal_length: refine_tol must be > 0");

    NodalEstimate est;
    int n = resolution;
    SweepResult cur = sweep(field, region, n);
    est.history.emplace_back(n, cur.length);

    while (true) {
        if (n >= kResolutionCap) {
            est.converged = false;
            est.note = "refinement cap reached";
            break;
        }
        const int n2 = n * 2;
        const SweepResult next = sweep(field, region, n2);
        est.history.emplace_back(n2, next.length);
        const double diff = std::abs(next.length - cur.length);
        n = n2;
        cur = next;
        est.refinement_error = diff;
        if (diff < refine_tol * std::max(1.0, std::abs(next.length))) break;
    }

    est.length = cur.length;
    est.resolution = n;
    est.cell_ambiguities = cur.saddles;
    if (!cur.any_crossing && cur.length == 0.0) {
        est.crossing_detected = false;
        est.note = est.note.empty() ? "no crossing detected" : est.note + "; no crossing detected";
    }
    return est;
}

NodalEstimate nodal_length_planck(const EigenfunctionSpec& spec, Vec2 x, double R,
                                  int resolution, double refine_tol) {
    const TrigSumField window = spec.restricted({x, R});
    return nodal_length(window, Region::square({0.0, 0.0}, 0.5), resolution, refine_tol);
}

double doubling_ratio(const PlaneField& field, Vec2 box_center, double box_half_side) {
    if (!(box_half_side > 0.0)) throw std::invalid_argument("doubling_ratio: empty box");
    auto sup_on_box = [&](double half) {
        const int n = 512;
        const double h = 2.0 * half / n;
        const Vec2 lo{box_center.x - half, box_center.y - half};
        std::vector<double> row_max(n + 1, 0.0);
        parallel_for(n + 1, [&](std::int64_t j) {
            std::vector<double> row(n + 1);
            field.sample_line({lo.x, lo.y + h * static_cast<double>(j)}, {h, 0.0}, row);
            double m = 0.0;
            for (double v : row) m = std::max(m, std::abs(v));
            row_max[j] = m;
        });
        double m = 0.0;
        for (double v : row_max) m = std::max(m, v);
        return m;
    };
    const double sup_b = sup_on_box(box_half_side);
    const double sup_2b = sup_on_box(2.0 * box_half_side);
    if (sup_b < 1e-300) throw std::domain_error("doubling_ratio: field vanishes on the box");
    return std::log(sup_2b / sup_b);
}

LocalityReport locality_check(const EigenfunctionSpec& spec, Vec2 center, double radius,
                              double R, int n_mc, int resolution, double refine_tol,
                              std::uint64_t seed) {
    if (n_mc < 1) throw std::invalid_argument("locality_check: n_mc must be >= 1");
    const double sqrt_lambda = std::sqrt(static_cast<double>(spec.lambda()));
    if (radius < 10.0 * R / sqrt_lambda)
        throw std::invalid_argument("locality_check: radius must be >= 10 R / sqrt(lambda)");

    LocalityReport report;
    report.n_mc = n_mc;
    report.lhs =
        nodal_length(spec.field(), Region::disk(center, radius), resolution, refine_tol).length;

    std::vector<double> window_lengths(n_mc, 0.0);
    parallel_for(n_mc, [&](std::int64_t i) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
        Vec2 x;
        do {
            x = {rng.uniform(-radius, radius), rng.uniform(-radius, radius)};
        } while (x.norm2() > radius * radius);
        x = x + center;
        window_lengths[i] = nodal_length_planck(spec, x, R, resolution, refine_tol).length;
    });

    double mean = 0.0;
    for (double v : window_lengths) mean += v;
    mean /= n_mc;
    double var = 0.0;
    for (double v : window_lengths) var += (v - mean) * (v - mean);
    var = n_mc > 1 ? var / (n_mc - 1) : 0.0;

    const double vol = kPi * radius * radius;
    const double factor = sqrt_lambda / R * vol;
    report.rhs = factor * mean;
    report.rhs_se = factor * std::sqrt(var / n_mc);
    report.discrepancy = std::abs(report.lhs - report.rhs) / report.lhs;
    return report;
}

std::vector<std::array<Vec2, 2>> nodal_segments(const PlaneField& field, const Region& region,
                                                int resolution) {
    const GridGeom g = geom_for(region, resolution);
    std::vector<std::array<Vec2, 2>> segments;
    std::vector<double> row0(g.cells + 1), row1(g.cells + 1);
    field.sample_line(g.lo, {g.h, 0.0}, row0);
    for (int j = 0; j < g.cells; ++j) {
        field.sample_line({g.lo.x, g.lo.y + g.h * (j + 1)}, {g.h, 0.0}, row1);
        march_row(field, g, j, row0.data(), row1.data(),
                  [&](Vec2 p, Vec2 q) { segments.push_back({p, q}); });
        std::swap(row0, row1);
    }
    return segments;
}

} // namespace nodal
