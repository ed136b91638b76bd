#include "diamlab/littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace diamlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

}  // namespace

RadialProfile::RadialProfile(std::vector<double> theta, std::vector<double> rho)
    : theta_(std::move(theta)), rho_(std::move(rho)) {
    if (theta_.size() != rho_.size()) throw DomainError("theta and rho must have the same length");
    if (theta_.size() < kMinSamples) throw DomainError("profile needs at least 8 samples");
    if (std::abs(theta_.front()) > 1e-12 || std::abs(theta_.back() - kPi) > 1e-12) {
        throw DomainError("profile must span [0, pi]");
    }
    theta_.front() = 0.0;
    theta_.back() = kPi;
    for (std::size_t i = 0; i < theta_.size(); ++i) {
        if (!std::isfinite(theta_[i]) || !std::isfinite(rho_[i])) throw DomainError("profile samples must be finite");
        if (rho_[i] < 0.0) throw DomainError("profile samples must be non-negative");
        if (i > 0 && !(theta_[i] > theta_[i - 1])) throw DomainError("theta must be strictly increasing");
    }
}

RadialProfile RadialProfile::sample(const std::function<double(double)>& rho, std::size_t n) {
    if (n < kMinSamples) throw DomainError("profile needs at least 8 samples");
    std::vector<double> t(n);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = i + 1 == n ? kPi : kPi * static_cast<double>(i) / static_cast<double>(n - 1);
        r[i] = rho(t[i]);
    }
    return RadialProfile(std::move(t), std::move(r));
}

std::size_t RadialProfile::locate(double angle) const {
    // index i with theta[i] <= angle <= theta[i+1]
    const auto it = std::upper_bound(theta_.begin(), theta_.end(), angle);
    const auto i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - theta_.begin() - 1, 0));
    return std::min(i, theta_.size() - 2);
}

double RadialProfile::rho_at(double angle) const {
    if (angle < 0.0 || angle > kPi) return 0.0;
    const std::size_t i = locate(angle);
    const double w = (angle - theta_[i]) / (theta_[i + 1] - theta_[i]);
    return (1.0 - w) * rho_[i] + w * rho_[i + 1];
}

double RadialProfile::rho_sq_at(double angle) const {
    if (angle < 0.0 || angle > kPi) return 0.0;
    const std::size_t i = locate(angle);
    const double w = (angle - theta_[i]) / (theta_[i + 1] - theta_[i]);
    return (1.0 - w) * rho_[i] * rho_[i] + w * rho_[i + 1] * rho_[i + 1];
}

namespace {

double trapezoid_sq(const std::vector<double>& t, const std::vector<double>& r, std::size_t stride) {
    double sum = 0.0;
    std::size_t i = 0;
    while (i + 1 < t.size()) {
        const std::size_t j = std::min(i + stride, t.size() - 1);
        sum += 0.5 * (t[j] - t[i]) * (r[i] * r[i] + r[j] * r[j]);
        i = j;
    }
    return 0.5 * sum;
}

// Breakpoints of t -> (rho(t), rho(t + pi/2)) on [0, pi/2]: every sample in
// the first quadrant plus every sample of the second shifted back by pi/2.
std::vector<double> paired_grid(const RadialProfile& p) {
    std::vector<double> g;
    g.reserve(p.size() + 2);
    for (double t : p.theta()) {
        if (t <= kHalfPi) g.push_back(t);
        if (t >= kHalfPi) g.push_back(t - kHalfPi);
    }
    g.push_back(0.0);
    g.push_back(kHalfPi);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

}  // namespace

RadialArea radial_area(const RadialProfile& p) {
    RadialArea out;
    out.direct = trapezoid_sq(p.theta(), p.rho(), 1);
    out.quad_error = std::abs(out.direct - trapezoid_sq(p.theta(), p.rho(), 2)) / 3.0;

    // The same piecewise-linear rho^2, integrated as OP^2 + OQ^2 over a quarter turn.
    const auto g = paired_grid(p);
    double sum = 0.0;
    auto chord = [&](double t) { return p.rho_sq_at(t) + p.rho_sq_at(t + kHalfPi); };
    double prev = chord(g[0]);
    for (std::size_t i = 1; i < g.size(); ++i) {
        const double cur = chord(g[i]);
        sum += 0.5 * (g[i] - g[i - 1]) * (prev + cur);
        prev = cur;
    }
    out.paired = 0.5 * sum;
    return out;
}

double max_chord_sq(const RadialProfile& p) {
    double best = 0.0;
    for (double t : paired_grid(p)) {
        const double op = p.rho_at(t);
        const double oq = p.rho_at(t + kHalfPi);
        best = std::max(best, op * op + oq * oq);
    }
    return best;
}

LittlewoodBound littlewood_bound(const RadialProfile& p, const Tolerance& tol) {
    const RadialArea a = radial_area(p);
    LittlewoodBound out;
    out.area = a.direct;
    out.max_chord_sq = max_chord_sq(p);
    out.bound = 0.25 * kPi * out.max_chord_sq;
    out.tolerance = std::max(a.quad_error, tol.area_tol);
    out.ok = out.area <= out.bound + out.tolerance;
    return out;
}

}  // namespace diamlab
