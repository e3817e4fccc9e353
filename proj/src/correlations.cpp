#include "nodal/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace nodal {

namespace {

using ValueTuple = std::vector<long long>;
using PointTuple = std::vector<LatticePoint>;

// A multiset is trivial when it splits into (v,-v) pairs; zeros pair with
// themselves, so they only need an even count.
bool trivially_paired(const ValueTuple& vals) {
    std::map<long long, int> count;
    for (long long v : vals) ++count[v];
    for (const auto& [v, c] : count) {
        if (v == 0) {
            if (c % 2 != 0) return false;
        } else {
            const auto it = count.find(-v);
            if (it == count.end() || it->second != c) return false;
        }
    }
    return true;
}

bool trivially_paired(const PointTuple& pts) {
    std::map<LatticePoint, int> count;
    for (const auto& p : pts) ++count[p];
    for (const auto& [p, c] : count) {
        const auto it = count.find(-p);
        if (it == count.end() || it->second != c) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// scalar searches (coordinate projections and plain integer lists)
// ---------------------------------------------------------------------------

// Enumerates non-decreasing tuples over the sorted distinct values with sum 0.
// emit(cur) returns false to abort the whole search.
template <class Emit>
bool rec_scalar_zero(const std::vector<long long>& vals, int slots_left, int start,
                     long long partial, ValueTuple& cur, Emit&& emit) {
    if (slots_left == 0) {
        if (partial == 0 && !emit(cur)) return false;
        return true;
    }
    const long long vmax = vals.back();
    for (int i = start; i < static_cast<int>(vals.size()); ++i) {
        const long long v = vals[i];
        const long long lo = partial + static_cast<long long>(slots_left) * v;
        const long long hi = partial + v + static_cast<long long>(slots_left - 1) * vmax;
        if (lo > 0) break; // lo grows with i
        if (hi < 0) continue;
        cur.push_back(v);
        const bool go = rec_scalar_zero(vals, slots_left - 1, i, partial + v, cur, emit);
        cur.pop_back();
        if (!go) return false;
    }
    return true;
}

void rec_scalar_min(const std::vector<long long>& vals, int slots_left, int start,
                    long long partial, long long& best) {
    if (slots_left == 0) {
        if (partial != 0) best = std::min(best, std::abs(partial));
        return;
    }
    const long long vmax = vals.back();
    for (int i = start; i < static_cast<int>(vals.size()); ++i) {
        const long long v = vals[i];
        const long long lo = partial + static_cast<long long>(slots_left) * v;
        const long long hi = partial + v + static_cast<long long>(slots_left - 1) * vmax;
        // distance from the attainable interval to zero bounds the subtree
        const long long dist = lo > 0 ? lo : (hi < 0 ? -hi : 0);
        if (lo > 0 && dist >= best) break;
        if (dist >= best) continue;
        rec_scalar_min(vals, slots_left - 1, i, partial + v, best);
    }
}

// All canonical half-tuples of length l with their sums.
void build_scalar_halves(const std::vector<long long>& vals, int l,
                         std::vector<ValueTuple>& halves, std::vector<long long>& sums) {
    ValueTuple cur;
    auto rec = [&](auto&& self, int slots_left, int start, long long partial) -> void {
        if (slots_left == 0) {
            halves.push_back(cur);
            sums.push_back(partial);
            return;
        }
        for (int i = start; i < static_cast<int>(vals.size()); ++i) {
            cur.push_back(vals[i]);
            self(self, slots_left - 1, i, partial + vals[i]);
            cur.pop_back();
        }
    };
    rec(rec, l, 0, 0);
}

std::set<ValueTuple> mitm_scalar_zero(const std::vector<long long>& vals, int ell) {
    std::vector<ValueTuple> halves;
    std::vector<long long> sums;
    build_scalar_halves(vals, ell, halves, sums);
    std::unordered_map<long long, std::vector<int>> bucket;
    for (int i = 0; i < static_cast<int>(sums.size()); ++i) bucket[sums[i]].push_back(i);

    std::set<ValueTuple> out;
    for (int i = 0; i < static_cast<int>(sums.size()); ++i) {
        const auto it = bucket.find(-sums[i]);
        if (it == bucket.end()) continue;
        for (int j : it->second) {
            if (j < i) continue;
            ValueTuple merged = halves[i];
            merged.insert(merged.end(), halves[j].begin(), halves[j].end());
            std::inplace_merge(merged.begin(), merged.begin() + ell, merged.end());
            out.insert(std::move(merged));
        }
    }
    return out;
}

long long mitm_scalar_min(const std::vector<long long>& vals, int ell) {
    std::vector<ValueTuple> halves;
    std::vector<long long> sums;
    build_scalar_halves(vals, ell, halves, sums);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

    long long best = std::numeric_limits<long long>::max();
    for (long long s : sums) {
        const long long target = -s;
        auto it = std::lower_bound(sums.begin(), sums.end(), target);
        for (auto probe : {it, it == sums.begin() ? sums.end() : std::prev(it)}) {
            if (probe == sums.end()) continue;
            const long long total = s + *probe;
            if (total != 0) best = std::min(best, std::abs(total));
        }
        // an exact-zero partner may coexist with near-zero ones: look one past
        if (it != sums.end() && std::next(it) != sums.end()) {
            const long long total = s + *std::next(it);
            if (total != 0) best = std::min(best, std::abs(total));
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// full-vector searches
// ---------------------------------------------------------------------------

struct SuffixBounds {
    std::vector<long long> min_x, max_x, min_y, max_y;
    explicit SuffixBounds(const std::vector<LatticePoint>& pts) {
        const int n = static_cast<int>(pts.size());
        min_x.assign(n + 1, std::numeric_limits<long long>::max());
        max_x.assign(n + 1, std::numeric_limits<long long>::min());
        min_y = min_x;
        max_y = max_x;
        for (int i = n - 1; i >= 0; --i) {
            min_x[i] = std::min(min_x[i + 1], pts[i].x1);
            max_x[i] = std::max(max_x[i + 1], pts[i].x1);
            min_y[i] = std::min(min_y[i + 1], pts[i].x2);
            max_y[i] = std::max(max_y[i + 1], pts[i].x2);
        }
    }
};

template <class Emit>
bool rec_vector_zero(const std::vector<LatticePoint>& pts, const SuffixBounds& sb,
                     int slots_left, int start, long long px, long long py, PointTuple& cur,
                     Emit&& emit) {
    if (slots_left == 0) {
        if (px == 0 && py == 0 && !emit(cur)) return false;
        return true;
    }
    for (int i = start; i < static_cast<int>(pts.size()); ++i) {
        const long long sl = slots_left;
        const long long lox = px + sl * pts[i].x1; // x is the lexicographic primary key
        if (lox > 0) break;
        const long long hix = px + pts[i].x1 + (sl - 1) * sb.max_x[i];
        if (hix < 0) continue;
        const long long loy = py + pts[i].x2 + (sl - 1) * sb.min_y[i];
        const long long hiy = py + pts[i].x2 + (sl - 1) * sb.max_y[i];
        if (loy > 0 || hiy < 0) continue;
        cur.push_back(pts[i]);
        const bool go = rec_vector_zero(pts, sb, slots_left - 1, i, px + pts[i].x1,
                                        py + pts[i].x2, cur, emit);
        cur.pop_back();
        if (!go) return false;
    }
    return true;
}

void rec_vector_min(const std::vector<LatticePoint>& pts, const SuffixBounds& sb,
                    int slots_left, int start, long long px, long long py, long long& best2) {
    if (slots_left == 0) {
        const long long n2 = px * px + py * py;
        if (n2 != 0) best2 = std::min(best2, n2);
        return;
    }
    for (int i = start; i < static_cast<int>(pts.size()); ++i) {
        const long long sl = slots_left;
        const long long lox = px + pts[i].x1 + (sl - 1) * sb.min_x[i];
        const long long hix = px + pts[i].x1 + (sl - 1) * sb.max_x[i];
        const long long loy = py + pts[i].x2 + (sl - 1) * sb.min_y[i];
        const long long hiy = py + pts[i].x2 + (sl - 1) * sb.max_y[i];
        const long long dx = lox > 0 ? lox : (hix < 0 ? -hix : 0);
        const long long dy = loy > 0 ? loy : (hiy < 0 ? -hiy : 0);
        if (dx * dx + dy * dy >= best2) {
            // x lower bound grows with i once positive; safe to stop then
            if (px + sl * pts[i].x1 > 0 && dx * dx >= best2) break;
            continue;
        }
        rec_vector_min(pts, sb, slots_left - 1, i, px + pts[i].x1, py + pts[i].x2, best2);
    }
}

void build_vector_halves(const std::vector<LatticePoint>& pts, int l,
                         std::vector<PointTuple>& halves,
                         std::vector<std::pair<long long, long long>>& sums) {
    PointTuple cur;
    auto rec = [&](auto&& self, int slots_left, int start, long long px, long long py) -> void {
        if (slots_left == 0) {
            halves.push_back(cur);
            sums.emplace_back(px, py);
            return;
        }
        for (int i = start; i < static_cast<int>(pts.size()); ++i) {
            cur.push_back(pts[i]);
            self(self, slots_left - 1, i, px + pts[i].x1, py + pts[i].x2);
            cur.pop_back();
        }
    };
    rec(rec, l, 0, 0, 0);
}

std::set<PointTuple> mitm_vector_zero(const std::vector<LatticePoint>& pts, int ell) {
    std::vector<PointTuple> halves;
    std::vector<std::pair<long long, long long>> sums;
    build_vector_halves(pts, ell, halves, sums);
    std::map<std::pair<long long, long long>, std::vector<int>> bucket;
    for (int i = 0; i < static_cast<int>(sums.size()); ++i) bucket[sums[i]].push_back(i);

    std::set<PointTuple> out;
    for (int i = 0; i < static_cast<int>(sums.size()); ++i) {
        const auto it = bucket.find({-sums[i].first, -sums[i].second});
        if (it == bucket.end()) continue;
        for (int j : it->second) {
            if (j < i) continue;
            PointTuple merged = halves[i];
            merged.insert(merged.end(), halves[j].begin(), halves[j].end());
            std::inplace_merge(merged.begin(), merged.begin() + ell, merged.end());
            out.insert(std::move(merged));
        }
    }
    return out;
}

long long mitm_vector_min2(const std::vector<LatticePoint>& pts, int ell) {
    std::vector<PointTuple> halves;
    std::vector<std::pair<long long, long long>> sums;
    build_vector_halves(pts, ell, halves, sums);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

    // group by x: (x, sorted list of y)
    std::vector<long long> xs;
    std::vector<std::vector<long long>> ys;
    for (const auto& [x, y] : sums) {
        if (xs.empty() || xs.back() != x) {
            xs.push_back(x);
            ys.emplace_back();
        }
        ys.back().push_back(y);
    }

    long long best2 = std::numeric_limits<long long>::max();
    // seed with doubled sums so the x-window below starts finite
    for (const auto& [x, y] : sums) {
        const long long n2 = 4 * (x * x + y * y);
        if (n2 != 0) best2 = std::min(best2, n2);
    }

    for (const auto& [sx, sy] : sums) {
        long long bound = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(best2)))) + 1;
        const auto first =
            std::lower_bound(xs.begin(), xs.end(), -sx - bound) - xs.begin();
        for (std::size_t g = first; g < xs.size() && xs[g] <= -sx + bound; ++g) {
            const long long dx = sx + xs[g];
            const auto& col = ys[g];
            const auto it = std::lower_bound(col.begin(), col.end(), -sy);
            for (long long off = -2; off <= 2; ++off) {
                const auto idx = (it - col.begin()) + off;
                if (idx < 0 || idx >= static_cast<long long>(col.size())) continue;
                const long long dy = sy + col[idx];
                const long long n2 = dx * dx + dy * dy;
                if (n2 != 0 && n2 < best2) {
                    best2 = n2;
                    bound = static_cast<long long>(
                                std::ceil(std::sqrt(static_cast<double>(best2)))) + 1;
                }
            }
        }
    }
    return best2;
}

// ---------------------------------------------------------------------------

std::vector<long long> projections(const LatticeCircle& circle, Axis axis) {
    std::vector<long long> vals;
    vals.reserve(circle.points.size());
    for (const auto& p : circle.points) vals.push_back(axis == Axis::first ? p.x1 : p.x2);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

double raw_tuple_count(std::size_t n, int slots) {
    return std::pow(static_cast<double>(n), static_cast<double>(slots));
}

void check_budget(double raw, const SearchBudget& budget) {
    if (raw > budget.max_raw_tuples) throw BudgetExceeded(raw);
}

} // namespace

CorrelationReport find_correlations(long long lambda, int ell, const SearchBudget& budget) {
    if (ell < 1) throw std::invalid_argument("find_correlations: ell must be >= 1");
    const LatticeCircle circle = lattice_points(lambda);
    CorrelationReport report;
    report.lambda = lambda;
    report.ell = ell;
    report.axis = Axis::full_vector;
    if (circle.points.empty()) return report;

    const double raw = raw_tuple_count(circle.points.size(), 2 * ell);
    check_budget(raw, budget);

    std::vector<LatticePoint> pts = circle.points;
    std::sort(pts.begin(), pts.end());

    if (raw > budget.mitm_threshold) {
        report.used_mitm = true;
        for (auto& t : mitm_vector_zero(pts, ell))
            if (!trivially_paired(t)) report.point_tuples.push_back(t);
    } else {
        const SuffixBounds sb(pts);
        PointTuple cur;
        rec_vector_zero(pts, sb, 2 * ell, 0, 0, 0, cur, [&](const PointTuple& t) {
            if (!trivially_paired(t)) report.point_tuples.push_back(t);
            return true;
        });
    }
    return report;
}

CorrelationReport find_semi_correlations(long long lambda, int ell, Axis axis,
                                         const SearchBudget& budget) {
    if (ell < 1) throw std::invalid_argument("find_semi_correlations: ell must be >= 1");
    if (axis == Axis::full_vector)
        throw std::invalid_argument("find_semi_correlations: axis must be a coordinate");
    const LatticeCircle circle = lattice_points(lambda);
    CorrelationReport report;
    report.lambda = lambda;
    report.ell = ell;
    report.axis = axis;
    if (circle.points.empty()) return report;

    const double raw = raw_tuple_count(circle.points.size(), 2 * ell);
    check_budget(raw, budget);

    const std::vector<long long> vals = projections(circle, axis);
    if (raw > budget.mitm_threshold) {
        report.used_mitm = true;
        for (auto& t : mitm_scalar_zero(vals, ell))
            if (!trivially_paired(t)) report.value_tuples.push_back(t);
    } else {
        ValueTuple cur;
        rec_scalar_zero(vals, 2 * ell, 0, 0, cur, [&](const ValueTuple& t) {
            if (!trivially_paired(t)) report.value_tuples.push_back(t);
            return true;
        });
    }
    return report;
}

CorrelationReport min_quasi_correlation(long long lambda, int ell, Axis axis, double delta,
                                        const SearchBudget& budget) {
    if (ell < 1) throw std::invalid_argument("min_quasi_correlation: ell must be >= 1");
    const LatticeCircle circle = lattice_points(lambda);
    CorrelationReport report;
    report.lambda = lambda;
    report.ell = ell;
    report.axis = axis;
    report.delta = delta;
    if (circle.points.empty()) return report;

    const double raw = raw_tuple_count(circle.points.size(), 2 * ell);
    check_budget(raw, budget);
    const bool use_mitm = raw > budget.mitm_threshold;
    report.used_mitm = use_mitm;

    double min_abs = 0.0;
    if (axis == Axis::full_vector) {
        std::vector<LatticePoint> pts = circle.points;
        std::sort(pts.begin(), pts.end());
        long long best2 = std::numeric_limits<long long>::max();
        if (use_mitm) {
            best2 = mitm_vector_min2(pts, ell);
        } else {
            const SuffixBounds sb(pts);
            rec_vector_min(pts, sb, 2 * ell, 0, 0, 0, best2);
        }
        if (best2 == std::numeric_limits<long long>::max())
            throw std::logic_error("min_quasi_correlation: every tuple sums to zero");
        min_abs = std::sqrt(static_cast<double>(best2));
    } else {
        const std::vector<long long> vals = projections(circle, axis);
        long long best = std::numeric_limits<long long>::max();
        if (use_mitm) {
            best = mitm_scalar_min(vals, ell);
        } else {
            rec_scalar_min(vals, 2 * ell, 0, 0, best);
        }
        if (best == std::numeric_limits<long long>::max())
            throw std::logic_error("min_quasi_correlation: every tuple sums to zero");
        min_abs = static_cast<double>(best);
    }
    report.min_nonzero_abs = min_abs;
    report.ratio_to_threshold = min_abs / std::pow(static_cast<double>(lambda), -0.5 + delta);
    return report;
}

bool is_lambda_p_admissible(const std::vector<long long>& values, int p,
                            const SearchBudget& budget) {
    if (p < 2 || p % 2 != 0)
        throw std::invalid_argument("is_lambda_p_admissible: p must be even and >= 2");
    if (values.empty()) return true;
    check_budget(raw_tuple_count(values.size(), p), budget);

    std::vector<long long> vals = values;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    const double raw = raw_tuple_count(vals.size(), p);
    if (raw > budget.mitm_threshold) {
        for (const auto& t : mitm_scalar_zero(vals, p / 2))
            if (!trivially_paired(t)) return false;
        return true;
    }
    bool admissible = true;
    ValueTuple cur;
    rec_scalar_zero(vals, p, 0, 0, cur, [&](const ValueTuple& t) {
        if (!trivially_paired(t)) {
            admissible = false;
            return false; // abort search
        }
        return true;
    });
    return admissible;
}

ScanResult scan_admissible_eigenvalues(long long x, int ell, const SearchBudget& budget) {
    ScanResult result;
    result.ell = ell;
    long long flagged = 0, seen = 0;
    for (long long lambda : sums_of_two_squares_up_to(x)) {
        ScanEntry entry;
        entry.lambda = lambda;
        try {
            entry.has_nontrivial_semi_correlation =
                find_semi_correlations(lambda, ell, Axis::first, budget).has_nontrivial() ||
                find_semi_correlations(lambda, ell, Axis::second, budget).has_nontrivial();
        } catch (const BudgetExceeded&) {
            result.truncated = true;
            break;
        }
        ++seen;
        if (entry.has_nontrivial_semi_correlation) ++flagged;
        entry.running_density = static_cast<double>(flagged) / static_cast<double>(seen);
        result.entries.push_back(entry);
    }
    return result;
}

} // namespace nodal
