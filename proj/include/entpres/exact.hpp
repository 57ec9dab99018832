// exact.hpp — exact single-excitation dynamics: the closed-form amplitude u(t),
// the generalized fidelity, and an independent discretized-bath oracle

#pragma once

#include "entpres/core.hpp"

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace entpres::exact {

using Complex = std::complex<double>;

// Fixed-step integrator too coarse for the requested accuracy; carries the
// observed norm drift.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double drift)
        : std::runtime_error(what), drift_(drift) {}
    double drift() const { return drift_; }

private:
    double drift_;
};

// alpha|10> + beta|01>, the one-excitation system states with an exact solution.
struct SingleExcitationState {
    Complex alpha; // amplitude of |10>
    Complex beta;  // amplitude of |01>

    SingleExcitationState(Complex alpha_, Complex beta_) : alpha(alpha_), beta(beta_) {
        if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
            throw std::domain_error("SingleExcitationState: |alpha|^2 + |beta|^2 must be 1");
    }

    static SingleExcitationState symmetric() { return {Complex(M_SQRT1_2), Complex(M_SQRT1_2)}; }
    static SingleExcitationState antisymmetric() { return {Complex(M_SQRT1_2), Complex(-M_SQRT1_2)}; }
};

// The Lorentzian reservoir replaced by L discrete modes on a frequency window
// omega0 +/- W (midpoint grid), couplings g_l^2 = J(omega_l) * dOmega. Works in
// the frame rotating at omega0, so only the detunings delta_l = omega0 - omega_l
// enter. window_halfwidth = 0 selects the default W = 20 * Gamma.
struct BathDiscretization {
    ReservoirSpec res;
    std::size_t mode_count;
    double window_halfwidth;
    std::vector<double> detunings; // delta_l = omega0 - omega_l
    std::vector<double> couplings; // g_l

    explicit BathDiscretization(ReservoirSpec res_, std::size_t mode_count_ = 400,
                                double window_halfwidth_ = 0.0);

    double coupling_sum_sq() const; // sum of g_l^2 ~ integral of J over the window
};

// u(t) = exp(-Gamma*t/2) [cosh(kappa*t/2) + (Gamma/kappa) sinh(kappa*t/2)],
// kappa = sqrt(Gamma*(Gamma - 4*gamma0)), evaluated in complex arithmetic
// throughout (kappa is imaginary for Gamma < 4*gamma0) via the equivalent
// overflow-safe two-exponential form. The value is real for all parameters;
// the residual imaginary part is checked against 1e-12, then dropped.
// |Gamma - 4*gamma0| < 1e-9*gamma0 switches to the removable-singularity limit
// exp(-Gamma*t/2) * (1 + Gamma*t/2).
Complex exact_amplitude_u(const ReservoirSpec& res, double t);

// Fidelity of alpha|10> + beta|01| under the exact dynamics: the symmetric
// component (alpha+beta)/sqrt(2) evolves by u(t), the antisymmetric component
// is dark and stays constant. Reduces to u(t)^2 for alpha = beta.
double exact_fidelity(const SingleExcitationState& state0, const ReservoirSpec& res, double t);

// exact_fidelity evaluated over a grid, tagged `exact`.
FidelityCurve exact_fidelity_curve(const SingleExcitationState& state0, const ReservoirSpec& res,
                                   const std::vector<double>& grid);

// Independent oracle: fixed-step RK4 on the single-excitation Schroedinger
// equation with the discretized bath. Total norm is conserved by the exact
// flow; a max drift beyond 1e-6 throws AccuracyError. If max_drift_out is
// given, the observed maximum |norm^2 - 1| is written there.
FidelityCurve bath_oracle_evolve(const SingleExcitationState& state0,
                                 const BathDiscretization& disc,
                                 const std::vector<double>& grid, double dt = 1e-3,
                                 double* max_drift_out = nullptr);

} // namespace entpres::exact
