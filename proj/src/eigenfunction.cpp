#include "nodal/eigenfunction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "nodal/rng.hpp"

namespace nodal {

namespace {

bool upper_half(const LatticePoint& p) {
    return p.x2 > 0 || (p.x2 == 0 && p.x1 > 0); // angle in [0, pi)
}

double angle_of(const LatticePoint& p) {
    double t = std::atan2(static_cast<double>(p.x2), static_cast<double>(p.x1));
    if (t < 0) t += kTwoPi;
    return t;
}

} // namespace

EigenfunctionSpec EigenfunctionSpec::build(long long lambda, std::vector<FourierCoeff> coeffs) {
    if (lambda < 1) throw std::invalid_argument("eigenfunction: lambda must be positive");
    if (coeffs.empty()) throw std::invalid_argument("eigenfunction: no coefficients");

    std::map<LatticePoint, std::complex<double>> by_point;
    double norm = 0.0;
    for (const auto& c : coeffs) {
        if (c.xi.x1 * c.xi.x1 + c.xi.x2 * c.xi.x2 != lambda)
            throw std::invalid_argument("eigenfunction: coefficient off the circle");
        if (!by_point.emplace(c.xi, c.a).second)
            throw std::invalid_argument("eigenfunction: duplicate lattice point");
        norm += std::norm(c.a);
    }
    for (const auto& [xi, a] : by_point) {
        const auto partner = by_point.find(-xi);
        if (partner == by_point.end() || std::abs(partner->second - std::conj(a)) > 1e-12)
            throw std::invalid_argument(
                "eigenfunction: Hermitian symmetry violated (evaluation would not be real)");
    }
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("eigenfunction: squared norm is " + std::to_string(norm) +
                                    ", expected 1");

    EigenfunctionSpec spec;
    spec.lambda_ = lambda;
    spec.n_lambda_ = multiplicity(lambda);
    spec.coeffs_ = std::move(coeffs);

    std::vector<TrigWave> waves;
    for (const auto& c : spec.coeffs_) {
        if (!upper_half(c.xi)) continue;
        waves.push_back({{static_cast<double>(c.xi.x1), static_cast<double>(c.xi.x2)},
                         2.0 * c.a.real(), -2.0 * c.a.imag()});
    }
    spec.field_ = TrigSumField(std::move(waves));
    return spec;
}

EigenfunctionSpec EigenfunctionSpec::bourgain(long long lambda) {
    const LatticeCircle circle = lattice_points(lambda);
    if (circle.points.empty())
        throw std::invalid_argument("bourgain: lambda is not a sum of two squares");
    const double a = 1.0 / std::sqrt(static_cast<double>(circle.points.size()));
    std::vector<FourierCoeff> coeffs;
    coeffs.reserve(circle.points.size());
    for (const auto& p : circle.points) coeffs.push_back({p, a});
    return build(lambda, std::move(coeffs));
}

EigenfunctionSpec EigenfunctionSpec::arc_bourgain(long long lambda, const std::vector<int>& arcs) {
    const LatticeCircle circle = lattice_points(lambda);
    if (circle.points.empty())
        throw std::invalid_argument("arc_bourgain: lambda is not a sum of two squares");
    if (arcs.empty()) throw std::invalid_argument("arc_bourgain: empty arc selection");

    std::vector<char> selected(8, 0);
    for (int j : arcs) {
        if (j < 1 || j > 8) throw std::invalid_argument("arc_bourgain: arc index out of 1..8");
        selected[j - 1] = 1;
    }
    for (int j = 0; j < 8; ++j)
        if (selected[j] != selected[(j + 4) % 8])
            throw std::invalid_argument(
                "arc_bourgain: arcs must come in antipodal pairs (j, j+4)");

    std::vector<LatticePoint> chosen;
    for (const auto& p : circle.points) {
        int idx = static_cast<int>(angle_of(p) / (kPi / 4.0));
        idx = std::clamp(idx, 0, 7);
        if (selected[idx]) chosen.push_back(p);
    }
    if (chosen.empty()) throw std::invalid_argument("arc_bourgain: no lattice point in the arcs");

    const double a = 1.0 / std::sqrt(static_cast<double>(chosen.size()));
    std::vector<FourierCoeff> coeffs;
    for (const auto& p : chosen) coeffs.push_back({p, a});
    return build(lambda, std::move(coeffs));
}

EigenfunctionSpec EigenfunctionSpec::random_flat(long long lambda, double epsilon,
                                                 std::uint64_t seed) {
    (void)epsilon; // the construction is flat for every epsilon >= 0
    const LatticeCircle circle = lattice_points(lambda);
    if (circle.points.empty())
        throw std::invalid_argument("random_flat: lambda is not a sum of two squares");

    Rng rng(seed);
    std::vector<FourierCoeff> coeffs;
    double total = 0.0;
    for (const auto& p : circle.points) {
        if (!upper_half(p)) continue;
        const double mag = rng.uniform(0.7, 1.0);
        const double phase = rng.uniform(0.0, kTwoPi);
        const std::complex<double> a = std::polar(mag, phase);
        coeffs.push_back({p, a});
        coeffs.push_back({-p, std::conj(a)});
        total += 2.0 * mag * mag;
    }
    const double scale = 1.0 / std::sqrt(total);
    double norm = 0.0;
    for (auto& c : coeffs) {
        c.a *= scale;
        norm += std::norm(c.a);
    }
    // second pass removes the last few ulps of normalization error
    const double s2 = 1.0 / std::sqrt(norm);
    for (auto& c : coeffs) c.a *= s2;
    return build(lambda, std::move(coeffs));
}

EigenfunctionSpec EigenfunctionSpec::cosine_line(long long m) {
    if (m < 1) throw std::invalid_argument("cosine_line: m must be positive");
    const double a = std::sqrt(0.5);
    return build(m * m, {{{m, 0}, a}, {{-m, 0}, a}});
}

double EigenfunctionSpec::flatness_margin(double epsilon) const {
    double max_sq = 0.0;
    for (const auto& c : coeffs_) max_sq = std::max(max_sq, std::norm(c.a));
    return max_sq * std::pow(static_cast<double>(n_lambda_), 1.0 - epsilon);
}

TrigSumField EigenfunctionSpec::restricted(const PlanckWindow& w) const {
    if (w.scale < 1.0) throw std::invalid_argument("planck window: scale R must be >= 1");
    return field_.translated(w.center).scaled(w.scale / std::sqrt(static_cast<double>(lambda_)));
}

nlohmann::json EigenfunctionSpec::to_json() const {
    nlohmann::json j;
    j["lambda"] = lambda_;
    auto& arr = j["coefficients"] = nlohmann::json::array();
    for (const auto& c : coeffs_) {
        arr.push_back({{"xi", {c.xi.x1, c.xi.x2}}, {"re", c.a.real()}, {"im", c.a.imag()}});
    }
    return j;
}

EigenfunctionSpec EigenfunctionSpec::from_json(const nlohmann::json& j) {
    std::vector<FourierCoeff> coeffs;
    for (const auto& row : j.at("coefficients")) {
        FourierCoeff c;
        c.xi = {row.at("xi").at(0).get<long long>(), row.at("xi").at(1).get<long long>()};
        c.a = {row.at("re").get<double>(), row.at("im").get<double>()};
        coeffs.push_back(c);
    }
    return build(j.at("lambda").get<long long>(), std::move(coeffs));
}

} // namespace nodal
