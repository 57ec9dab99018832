// tcl.hpp — second-order time-convolutionless fidelity: Lorentzian correlation
// function, the memory kernel K(s, tau), its piecewise-analytic inner integral,
// and the cumulative fidelity curve F(t) = exp(-double integral)

#pragma once

#include "entpres/core.hpp"
#include "entpres/pulse.hpp"

#include <complex>
#include <vector>

namespace entpres::tcl {

using Complex = std::complex<double>;

// One decay problem: leakage coefficient eta of the protected state, the
// reservoir, and the modulation schedule.
struct TclProblem {
    double eta;
    ReservoirSpec res;
    pulse::Control control;

    TclProblem(double eta_, ReservoirSpec res_, pulse::Control control_)
        : eta(eta_), res(res_), control(std::move(control_)) {
        if (!(eta >= 0.0)) throw std::invalid_argument("TclProblem: eta must be >= 0");
        res.validate();
    }
};

// Reservoir correlation function alpha(s) = (gamma0*Gamma/2) * exp(-Gamma*s),
// the Fourier transform of the Lorentzian spectral density (real on resonance).
Complex correlation(const ReservoirSpec& res, double s);

// Cross-validation path: quadrature of J(omega) * exp(i*(omega0-omega)*s) over
// the truncated window omega0 +/- window_halfwidth. Converges to correlation()
// as the window grows; the truncation tail falls off as sin(W*s)/(s*W^2).
Complex correlation_numeric(const ReservoirSpec& res, double s, double window_halfwidth,
                            double abs_tol = 1e-12);

// Memory kernel K(s, tau) = eta*gamma0*Gamma * exp(-Gamma*s)
//   * eps(tau)*eps(tau-s) * cos(Phi(tau) - Phi(tau-s)),  0 <= s <= tau.
// Negative when the accumulated phase difference exceeds pi/2.
double kernel(const TclProblem& problem, double s, double tau);

// Inner integral of the kernel over s in [0, tau], evaluated analytically on
// each s-segment where Phi(tau-s) is linear (segments come from the pulse
// breakpoints mapped into s-space); never sampled.
double inner_integral(const TclProblem& problem, double tau);

// F(t) = exp(-integral_0^t inner_integral(tau) dtau). The outer integral uses
// adaptive Simpson with panels split at pulse breakpoints. The grid must start
// at 0 and increase strictly; the running exponent is carried between grid
// points so a dense grid costs a single pass.
FidelityCurve tcl_fidelity_curve(const TclProblem& problem, const std::vector<double>& grid);

// Single-point convenience: F(t) with the same integration machinery.
double tcl_fidelity_at(const TclProblem& problem, double t);

// No-control closed form exp[-eta*gamma0*(t + (exp(-Gamma*t) - 1)/Gamma)],
// the internal oracle for the unmodulated kernel.
double closed_form_no_control(double eta, const ReservoirSpec& res, double t);

} // namespace entpres::tcl
