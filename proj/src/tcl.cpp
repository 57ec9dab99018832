// tcl.cpp — TCL kernel integration: analytic inner integral, adaptive outer

#include "entpres/tcl.hpp"

#include "entpres/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace entpres::tcl {

namespace {

// Per-panel tolerance of the outer quadrature; ~10^2 panels per unit time keep
// the accumulated exponent error below 1e-10.
constexpr double kOuterTol = 1e-13;

} // namespace

Complex correlation(const ReservoirSpec& res, double s) {
    res.validate();
    if (s < 0.0) throw std::domain_error("correlation: s must be >= 0");
    return Complex(0.5 * res.gamma0 * res.Gamma * std::exp(-res.Gamma * s), 0.0);
}

Complex correlation_numeric(const ReservoirSpec& res, double s, double window_halfwidth,
                            double abs_tol) {
    res.validate();
    if (s < 0.0) throw std::domain_error("correlation_numeric: s must be >= 0");
    if (!(window_halfwidth > 0.0))
        throw std::domain_error("correlation_numeric: window must be > 0");
    // Integrate over detuning d = omega - omega0; phase factor exp(-i*d*s).
    const double re = quad::adaptive_simpson(
        [&](double d) { return spectral_density(res, res.omega0 + d) * std::cos(d * s); },
        -window_halfwidth, window_halfwidth, abs_tol);
    const double im = quad::adaptive_simpson(
        [&](double d) { return -spectral_density(res, res.omega0 + d) * std::sin(d * s); },
        -window_halfwidth, window_halfwidth, abs_tol);
    return Complex(re, im);
}

double kernel(const TclProblem& p, double s, double tau) {
    if (s < 0.0 || tau < 0.0) throw std::domain_error("kernel: times must be >= 0");
    if (s > tau) throw std::domain_error("kernel: s must not exceed tau");
    const double eps2 = pulse::amplitude_at(p.control, tau) * pulse::amplitude_at(p.control, tau - s);
    const double dphi = pulse::phase_integral(p.control, tau) - pulse::phase_integral(p.control, tau - s);
    return p.eta * p.res.gamma0 * p.res.Gamma * std::exp(-p.res.Gamma * s) * eps2 * std::cos(dphi);
}

double inner_integral(const TclProblem& p, double tau) {
    if (tau < 0.0) throw std::domain_error("inner_integral: tau must be >= 0");
    if (tau == 0.0) return 0.0;
    const double G = p.res.Gamma;

    // Segment ends in s-space: pulse edges b inside (0, tau) land at s = tau - b.
    std::vector<double> ends{0.0, tau};
    for (double b : pulse::breakpoints(p.control, 0.0, tau)) {
        const double s = tau - b;
        if (s > 0.0 && s < tau) ends.push_back(s);
    }
    std::sort(ends.begin(), ends.end());

    const double phi_tau = pulse::phase_integral(p.control, tau);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
        const double s1 = ends[i], h = ends[i + 1] - ends[i];
        if (h <= 0.0) continue;
        // On this segment Phi(tau - s) is linear: the phase difference is
        // c + ell*x with x = s - s1 and ell = lambda at the segment interior.
        const double ell = pulse::lambda_at(p.control, tau - (s1 + 0.5 * h));
        const double c = phi_tau - pulse::phase_integral(p.control, tau - s1);
        const double denom = G * G + ell * ell;
        // Antiderivative of exp(-G*x) cos(c + ell*x):
        //   exp(-G*x) * (ell*sin(c + ell*x) - G*cos(c + ell*x)) / (G^2 + ell^2)
        const double at_h = std::exp(-G * h) * (ell * std::sin(c + ell * h) - G * std::cos(c + ell * h));
        const double at_0 = ell * std::sin(c) - G * std::cos(c);
        total += std::exp(-G * s1) * (at_h - at_0) / denom;
    }
    const double eps = pulse::amplitude_at(p.control, tau);
    return p.eta * p.res.gamma0 * G * eps * eps * total;
}

namespace {

// Exponent increment: integral of inner_integral over [t0, t1], panels split
// at the pulse breakpoints where the integrand has kinks.
double exponent_step(const TclProblem& p, double t0, double t1) {
    return quad::integrate_piecewise([&](double tau) { return inner_integral(p, tau); },
                                     t0, t1, pulse::breakpoints(p.control, t0, t1), kOuterTol);
}

} // namespace

FidelityCurve tcl_fidelity_curve(const TclProblem& p, const std::vector<double>& grid) {
    if (grid.empty() || grid.front() != 0.0)
        throw std::domain_error("tcl_fidelity_curve: grid must start at 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::domain_error("tcl_fidelity_curve: grid must be strictly increasing");

    FidelityCurve curve;
    curve.method = Method::tcl;
    curve.times = grid;
    curve.values.reserve(grid.size());
    curve.values.push_back(1.0);
    double exponent = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        exponent += exponent_step(p, grid[i - 1], grid[i]);
        curve.values.push_back(std::exp(-exponent));
    }
    curve.validate();
    return curve;
}

double tcl_fidelity_at(const TclProblem& p, double t) {
    if (t < 0.0) throw std::domain_error("tcl_fidelity_at: t must be >= 0");
    if (t == 0.0) return 1.0;
    return std::exp(-exponent_step(p, 0.0, t));
}

double closed_form_no_control(double eta, const ReservoirSpec& res, double t) {
    res.validate();
    if (t < 0.0) throw std::domain_error("closed_form_no_control: t must be >= 0");
    return std::exp(-eta * res.gamma0 * (t + std::expm1(-res.Gamma * t) / res.Gamma));
}

} // namespace entpres::tcl
