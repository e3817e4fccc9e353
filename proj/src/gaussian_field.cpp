#include "nodal/gaussian_field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "nodal/nodal_length.hpp"
#include "nodal/parallel.hpp"
#include "nodal/rng.hpp"

namespace nodal {

namespace {

// Quantile of the measure at cumulative mass q in [0,1), walking the arcs in
// angle order (Lebesgue counts as the single arc [0, 2pi)).
double quantile(const std::vector<Arc>& arcs, double q) {
    double acc = 0.0;
    for (const auto& a : arcs) {
        if (q <= acc + a.mass || &a == &arcs.back())
            return a.start + (a.end - a.start) * std::clamp((q - acc) / a.mass, 0.0, 1.0);
        acc += a.mass;
    }
    return arcs.back().end;
}

} // namespace

DirectionMeasure discretize_measure(const DirectionMeasure& mu, int n_atoms) {
    if (mu.kind() == MeasureKind::atomic) return mu;
    if (n_atoms < 8 || n_atoms % 2 != 0)
        throw std::invalid_argument("discretize_measure: n_atoms must be even and >= 8");
    if (mu.moment_matrix().degenerate())
        throw std::invalid_argument("discretize_measure: measure is supported on a line");

    std::vector<Arc> arcs;
    if (mu.kind() == MeasureKind::lebesgue)
        arcs = {{0.0, kTwoPi, 1.0}};
    else
        arcs = mu.arcs();

    std::vector<Atom> atoms(n_atoms);
    for (int k = 0; k < n_atoms; ++k) {
        const double q = (k + 0.5) / n_atoms;
        atoms[k] = {quantile(arcs, q), 1.0 / n_atoms};
    }
    return DirectionMeasure::atomic(std::move(atoms));
}

TrigSumField FieldSample::field() const {
    std::vector<TrigWave> waves(directions.size());
    for (std::size_t k = 0; k < directions.size(); ++k) {
        waves[k].freq = directions[k] * scale_R;
        waves[k].c = amplitudes[k] * gauss_a[k];
        waves[k].s = amplitudes[k] * gauss_b[k];
    }
    return TrigSumField(std::move(waves));
}

FieldSample sample_field(const DirectionMeasure& mu, double R, std::uint64_t seed) {
    if (mu.kind() != MeasureKind::atomic)
        throw std::invalid_argument("sample_field: measure must be atomic (discretize first)");
    if (mu.moment_matrix().degenerate())
        throw std::invalid_argument("sample_field: measure is supported on a line");

    // Pair atoms with their antipodes; keep the representative in [0, pi).
    const auto& atoms = mu.atoms(); // sorted by angle
    std::vector<char> used(atoms.size(), 0);
    FieldSample sample;
    sample.scale_R = R;
    sample.seed = seed;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (used[i] || atoms[i].angle >= kPi) continue;
        std::size_t partner = atoms.size();
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            if (j == i || used[j]) continue;
            double d = std::abs(atoms[j].angle - atoms[i].angle - kPi);
            if (d < 1e-9) {
                partner = j;
                break;
            }
        }
        if (partner == atoms.size())
            throw std::invalid_argument("sample_field: atom without antipodal partner");
        used[i] = used[partner] = 1;
        sample.directions.push_back({std::cos(atoms[i].angle), std::sin(atoms[i].angle)});
        sample.amplitudes.push_back(std::sqrt(2.0 * atoms[i].weight));
    }

    Rng rng(seed);
    sample.gauss_a.resize(sample.directions.size());
    sample.gauss_b.resize(sample.directions.size());
    for (std::size_t k = 0; k < sample.directions.size(); ++k) {
        sample.gauss_a[k] = rng.normal();
        sample.gauss_b[k] = rng.normal();
    }
    return sample;
}

McStatistics mc_nodal_statistics(const DirectionMeasure& mu, double R, int n_samples,
                                 int resolution, double refine_tol, std::uint64_t seed) {
    if (n_samples < 30)
        throw std::invalid_argument("mc_nodal_statistics: n_samples must be >= 30");
    const DirectionMeasure atomic = discretize_measure(mu, 256);

    McStatistics stats;
    stats.n_samples = n_samples;
    stats.lengths.resize(n_samples);
    stats.seeds.resize(n_samples);
    stats.converged.assign(n_samples, 1);

    parallel_for(n_samples, [&](std::int64_t i) {
        const std::uint64_t s = split_seed(seed, static_cast<std::uint64_t>(i));
        stats.seeds[i] = s;
        const FieldSample f = sample_field(atomic, R, s);
        const NodalEstimate est = nodal_length(f.field(), Region::square({0.0, 0.0}, 0.5),
                                               resolution, refine_tol);
        stats.lengths[i] = est.length;
        stats.converged[i] = est.converged ? 1 : 0;
    });

    double mean = 0.0;
    for (double v : stats.lengths) mean += v;
    mean /= n_samples;
    double var = 0.0;
    for (double v : stats.lengths) var += (v - mean) * (v - mean);
    var /= (n_samples - 1);
    stats.mean = mean;
    stats.variance = var;
    stats.standard_error = std::sqrt(var / n_samples);
    for (char c : stats.converged)
        if (!c) ++stats.unconverged_count;
    return stats;
}

void write_lengths_csv(const McStatistics& stats, std::ostream& os) {
    os << "sample_index,seed,length,converged\n";
    for (int i = 0; i < stats.n_samples; ++i) {
        char buf[40];
        const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, stats.lengths[i]);
        (void)ec;
        os << i << ',' << stats.seeds[i] << ',';
        os.write(buf, end - buf);
        os << ',' << (stats.converged[i] ? 1 : 0) << '\n';
    }
}

} // namespace nodal
