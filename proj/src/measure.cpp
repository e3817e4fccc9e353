#include "nodal/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nodal/bessel.hpp"
#include "nodal/eigenfunction.hpp"
#include "nodal/quadrature.hpp"

namespace nodal {

namespace {

constexpr double kMassTol = 1e-9;
constexpr double kPairTol = 1e-9;
constexpr double kArcQuadTol = 1e-11;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    // fmod can return exactly 2pi after the add when a was a tiny negative
    if (a >= kTwoPi) a -= kTwoPi;
    return a;
}

bool angles_match(double a, double b) {
    double d = std::abs(wrap_angle(a) - wrap_angle(b));
    d = std::min(d, kTwoPi - d);
    return d <= kPairTol;
}

Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

} // namespace

DirectionMeasure DirectionMeasure::lebesgue() {
    DirectionMeasure m;
    m.kind_ = MeasureKind::lebesgue;
    return m;
}

DirectionMeasure DirectionMeasure::atomic(std::vector<Atom> atoms) {
    if (atoms.empty()) throw std::invalid_argument("atomic measure needs atoms");
    double mass = 0.0;
    for (auto& a : atoms) {
        if (!(a.weight > 0)) throw std::invalid_argument("atom weights must be positive");
        a.angle = wrap_angle(a.angle);
        mass += a.weight;
    }
    if (std::abs(mass - 1.0) > kMassTol)
        throw std::invalid_argument("atomic measure mass is " + std::to_string(mass) +
                                    ", expected 1");
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.angle < b.angle; });

    // antipodal symmetry: every atom needs a partner at angle + pi of equal weight
    std::vector<char> used(atoms.size(), 0);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            if (j == i || used[j]) continue;
            if (angles_match(atoms[i].angle + kPi, atoms[j].angle) &&
                std::abs(atoms[i].weight - atoms[j].weight) <= kMassTol) {
                used[i] = used[j] = 1;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("atomic measure is not antipodally symmetric");
    }

    DirectionMeasure m;
    m.kind_ = MeasureKind::atomic;
    m.atoms_ = std::move(atoms);
    return m;
}

DirectionMeasure DirectionMeasure::arc_uniform(std::vector<Arc> arcs) {
    if (arcs.empty()) throw std::invalid_argument("arc measure needs arcs");
    double mass = 0.0;
    for (auto& a : arcs) {
        if (!(a.mass > 0)) throw std::invalid_argument("arc masses must be positive");
        if (!(a.end > a.start) || a.end - a.start > kTwoPi + kPairTol)
            throw std::invalid_argument("arc must satisfy start < end <= start + 2pi");
        const double width = a.end - a.start;
        a.start = wrap_angle(a.start);
        a.end = a.start + width;
        mass += a.mass;
    }
    if (std::abs(mass - 1.0) > kMassTol)
        throw std::invalid_argument("arc measure mass is " + std::to_string(mass) +
                                    ", expected 1");
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });

    std::vector<char> used(arcs.size(), 0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < arcs.size(); ++j) {
            if (j == i || used[j]) continue;
            if (angles_match(arcs[i].start + kPi, arcs[j].start) &&
                std::abs((arcs[i].end - arcs[i].start) - (arcs[j].end - arcs[j].start)) <=
                    kPairTol &&
                std::abs(arcs[i].mass - arcs[j].mass) <= kMassTol) {
                used[i] = used[j] = 1;
                found = true;
                break;
            }
        }
        // a full-width arc of length pi at distance pi from itself is its own partner
        if (!found && std::abs((arcs[i].end - arcs[i].start) - kTwoPi) <= kPairTol) found = true;
        if (!found) throw std::invalid_argument("arc measure is not antipodally symmetric");
    }

    DirectionMeasure m;
    m.kind_ = MeasureKind::arc_uniform;
    m.arcs_ = std::move(arcs);
    return m;
}

DirectionMeasure DirectionMeasure::antipodal_arc_pair(double start, double width) {
    if (!(width > 0) || width > kPi)
        throw std::invalid_argument("antipodal_arc_pair: width must be in (0, pi]");
    return arc_uniform({{start, start + width, 0.5}, {start + kPi, start + kPi + width, 0.5}});
}

std::complex<double> DirectionMeasure::fourier_moment(int k) const {
    using namespace std::complex_literals;
    if (k == 0) return 1.0;
    switch (kind_) {
    case MeasureKind::lebesgue:
        return 0.0;
    case MeasureKind::atomic: {
        std::complex<double> sum = 0.0;
        for (const auto& a : atoms_) sum += a.weight * std::exp(1i * (k * a.angle));
        return sum;
    }
    case MeasureKind::arc_uniform: {
        // mass/(e-s) * int_s^e e^{ik t} dt = mass (e^{ike} - e^{iks}) / (ik (e-s))
        std::complex<double> sum = 0.0;
        for (const auto& a : arcs_) {
            const std::complex<double> num =
                std::exp(1i * (k * a.end)) - std::exp(1i * (k * a.start));
            sum += a.mass * num / (1i * static_cast<double>(k) * (a.end - a.start));
        }
        return sum;
    }
    }
    return 0.0;
}

double DirectionMeasure::covariance(Vec2 w) const {
    switch (kind_) {
    case MeasureKind::lebesgue:
        return bessel_j0(kTwoPi * w.norm());
    case MeasureKind::atomic: {
        double sum = 0.0;
        for (const auto& a : atoms_) sum += a.weight * std::cos(kTwoPi * w.dot(unit(a.angle)));
        return sum;
    }
    case MeasureKind::arc_uniform: {
        double sum = 0.0;
        for (const auto& a : arcs_) {
            const double density = a.mass / (a.end - a.start);
            sum += density * integrate(
                                 [&](double t) { return std::cos(kTwoPi * w.dot(unit(t))); },
                                 a.start, a.end, kArcQuadTol);
        }
        return sum;
    }
    }
    return 0.0;
}

void DirectionMeasure::covariance_derivatives(Vec2 w, Vec2& grad, SymMat2& hess) const {
    grad = {0.0, 0.0};
    hess = {0.0, 0.0, 0.0};
    switch (kind_) {
    case MeasureKind::atomic: {
        for (const auto& a : atoms_) {
            const Vec2 u = unit(a.angle);
            const double phase = kTwoPi * w.dot(u);
            const double gs = -kTwoPi * a.weight * std::sin(phase);
            grad.x += gs * u.x;
            grad.y += gs * u.y;
            const double hc = -kTwoPi * kTwoPi * a.weight * std::cos(phase);
            hess.xx += hc * u.x * u.x;
            hess.xy += hc * u.x * u.y;
            hess.yy += hc * u.y * u.y;
        }
        return;
    }
    case MeasureKind::arc_uniform: {
        for (const auto& a : arcs_) {
            const double density = a.mass / (a.end - a.start);
            auto part = [&](auto&& integrand) {
                return density * integrate(integrand, a.start, a.end, kArcQuadTol);
            };
            grad.x += part([&](double t) {
                const Vec2 u = unit(t);
                return -kTwoPi * std::sin(kTwoPi * w.dot(u)) * u.x;
            });
            grad.y += part([&](double t) {
                const Vec2 u = unit(t);
                return -kTwoPi * std::sin(kTwoPi * w.dot(u)) * u.y;
            });
            hess.xx += part([&](double t) {
                const Vec2 u = unit(t);
                return -kTwoPi * kTwoPi * std::cos(kTwoPi * w.dot(u)) * u.x * u.x;
            });
            hess.xy += part([&](double t) {
                const Vec2 u = unit(t);
                return -kTwoPi * kTwoPi * std::cos(kTwoPi * w.dot(u)) * u.x * u.y;
            });
            hess.yy += part([&](double t) {
                const Vec2 u = unit(t);
                return -kTwoPi * kTwoPi * std::cos(kTwoPi * w.dot(u)) * u.y * u.y;
            });
        }
        return;
    }
    case MeasureKind::lebesgue: {
        const double rho = w.norm();
        if (rho < 1e-12) {
            hess = {-2.0 * kPi * kPi, 0.0, -2.0 * kPi * kPi};
            return;
        }
        const double x = kTwoPi * rho;
        const double g1 = -kTwoPi * bessel_j1(x); // d/drho J0(2 pi rho)
        const double g2 = -kTwoPi * kTwoPi * (bessel_j0(x) - bessel_j1(x) / x);
        const Vec2 e = w * (1.0 / rho);
        grad = e * g1;
        const double t = g1 / rho;
        hess.xx = g2 * e.x * e.x + t * (1.0 - e.x * e.x);
        hess.xy = (g2 - t) * e.x * e.y;
        hess.yy = g2 * e.y * e.y + t * (1.0 - e.y * e.y);
        return;
    }
    }
}

MomentMatrix DirectionMeasure::moment_matrix() const {
    const std::complex<double> m2 = fourier_moment(2);
    return {m2.real(), m2.imag()};
}

nlohmann::json DirectionMeasure::to_json() const {
    nlohmann::json j;
    switch (kind_) {
    case MeasureKind::lebesgue:
        j["type"] = "lebesgue";
        break;
    case MeasureKind::atomic: {
        j["type"] = "atomic";
        auto& arr = j["atoms"] = nlohmann::json::array();
        for (const auto& a : atoms_) arr.push_back({a.angle, a.weight});
        break;
    }
    case MeasureKind::arc_uniform: {
        j["type"] = "arc_uniform";
        auto& arr = j["arcs"] = nlohmann::json::array();
        for (const auto& a : arcs_) arr.push_back({a.start, a.end, a.mass});
        break;
    }
    }
    return j;
}

DirectionMeasure DirectionMeasure::from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "lebesgue") return lebesgue();
    if (type == "atomic") {
        std::vector<Atom> atoms;
        for (const auto& row : j.at("atoms"))
            atoms.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
        return atomic(std::move(atoms));
    }
    if (type == "arc_uniform") {
        std::vector<Arc> arcs;
        for (const auto& row : j.at("arcs"))
            arcs.push_back(
                {row.at(0).get<double>(), row.at(1).get<double>(), row.at(2).get<double>()});
        return arc_uniform(std::move(arcs));
    }
    throw std::invalid_argument("unknown measure type: " + type);
}

DirectionMeasure spectral_measure_of(const EigenfunctionSpec& spec) {
    double norm = 0.0;
    for (const auto& c : spec.coefficients()) norm += std::norm(c.a);
    if (std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument("spectral_measure_of: spec norm is " + std::to_string(norm));
    std::vector<Atom> atoms;
    atoms.reserve(spec.coefficients().size());
    for (const auto& c : spec.coefficients()) {
        if (std::norm(c.a) == 0.0) continue;
        const double theta =
            std::atan2(static_cast<double>(c.xi.x2), static_cast<double>(c.xi.x1));
        atoms.push_back({wrap_angle(theta), std::norm(c.a)});
    }
    return DirectionMeasure::atomic(std::move(atoms));
}

} // namespace nodal
