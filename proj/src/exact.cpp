// exact.cpp — closed-form single-excitation solution and the RK4 bath oracle

#include "entpres/exact.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace entpres::exact {

namespace {

using Vector = Eigen::VectorXcd;

constexpr double kDegenerateTol = 1e-9; // |Gamma - 4*gamma0| below this (in gamma0) -> limit form
constexpr double kDriftLimit = 1e-6;

void check_grid(const std::vector<double>& grid, const char* who) {
    if (grid.empty() || grid.front() != 0.0)
        throw std::domain_error(std::string(who) + ": grid must start at 0");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::domain_error(std::string(who) + ": grid must be strictly increasing");
}

} // namespace

// --------------------------- closed-form solution ----------------------------

Complex exact_amplitude_u(const ReservoirSpec& res, double t) {
    res.validate();
    if (t < 0.0) throw std::domain_error("exact_amplitude_u: t must be >= 0");
    const double G = res.Gamma;
    if (std::abs(G - 4.0 * res.gamma0) < kDegenerateTol * res.gamma0)
        return Complex(std::exp(-0.5 * G * t) * (1.0 + 0.5 * G * t), 0.0);

    const Complex kappa = std::sqrt(Complex(G * (G - 4.0 * res.gamma0)));
    // cosh/sinh recombined into two exponentials, both with non-positive real
    // exponent, so nothing overflows even at Gamma >> gamma0:
    //   u = (1 + G/kappa)/2 * e^{(kappa-G)t/2} + (1 - G/kappa)/2 * e^{-(kappa+G)t/2}
    const Complex ratio = G / kappa;
    const Complex u = 0.5 * (1.0 + ratio) * std::exp(0.5 * (kappa - G) * t) +
                      0.5 * (1.0 - ratio) * std::exp(-0.5 * (kappa + G) * t);
    if (std::abs(u.imag()) > 1e-12)
        throw std::runtime_error("exact_amplitude_u: residual imaginary part beyond 1e-12");
    return Complex(u.real(), 0.0);
}

double exact_fidelity(const SingleExcitationState& state0, const ReservoirSpec& res, double t) {
    const Complex u = exact_amplitude_u(res, t);
    const Complex s0 = (state0.alpha + state0.beta) * M_SQRT1_2; // decays by u(t)
    const Complex a0 = (state0.alpha - state0.beta) * M_SQRT1_2; // dark, constant
    const Complex c10 = (s0 * u + a0) * M_SQRT1_2;
    const Complex c01 = (s0 * u - a0) * M_SQRT1_2;
    // |overlap|^2 can exceed 1 by a few ulp at t = 0 (1/sqrt(2) is not exactly
    // representable); clamp so curves stay inside [0, 1].
    return std::min(std::norm(std::conj(state0.alpha) * c10 + std::conj(state0.beta) * c01), 1.0);
}

FidelityCurve exact_fidelity_curve(const SingleExcitationState& state0, const ReservoirSpec& res,
                                   const std::vector<double>& grid) {
    check_grid(grid, "exact_fidelity_curve");
    FidelityCurve curve;
    curve.method = Method::exact;
    curve.times = grid;
    curve.values.reserve(grid.size());
    for (double t : grid) curve.values.push_back(exact_fidelity(state0, res, t));
    curve.validate();
    return curve;
}

// --------------------------- discretized bath --------------------------------

BathDiscretization::BathDiscretization(ReservoirSpec res_, std::size_t mode_count_,
                                       double window_halfwidth_)
    : res(res_), mode_count(mode_count_), window_halfwidth(window_halfwidth_) {
    res.validate();
    if (mode_count < 1) throw std::invalid_argument("BathDiscretization: mode_count must be >= 1");
    if (window_halfwidth == 0.0) window_halfwidth = 20.0 * res.Gamma;
    if (!(window_halfwidth > 0.0))
        throw std::invalid_argument("BathDiscretization: window_halfwidth must be > 0");

    const double domega = 2.0 * window_halfwidth / static_cast<double>(mode_count);
    detunings.reserve(mode_count);
    couplings.reserve(mode_count);
    for (std::size_t l = 0; l < mode_count; ++l) {
        const double omega = res.omega0 - window_halfwidth + (static_cast<double>(l) + 0.5) * domega;
        detunings.push_back(res.omega0 - omega);
        couplings.push_back(std::sqrt(spectral_density(res, omega) * domega));
    }
}

double BathDiscretization::coupling_sum_sq() const {
    double s = 0.0;
    for (double g : couplings) s += g * g;
    return s;
}

FidelityCurve bath_oracle_evolve(const SingleExcitationState& state0,
                                 const BathDiscretization& disc,
                                 const std::vector<double>& grid, double dt,
                                 double* max_drift_out) {
    check_grid(grid, "bath_oracle_evolve");
    if (!(dt > 0.0)) throw std::domain_error("bath_oracle_evolve: dt must be > 0");

    const std::size_t L = disc.mode_count;
    const Eigen::Index n = static_cast<Eigen::Index>(L + 2);
    const Complex minus_i(0.0, -1.0);

    // y = (C10, C01, c_1..c_L); i dy/dt = H y in the rotating frame:
    //   i dC10/dt = i dC01/dt = sum_l g_l c_l
    //   i dc_l/dt = -delta_l c_l + g_l (C10 + C01)
    auto rhs = [&](const Vector& y, Vector& dy) {
        Complex coupled(0.0, 0.0);
        for (std::size_t l = 0; l < L; ++l)
            coupled += disc.couplings[l] * y(static_cast<Eigen::Index>(l + 2));
        dy(0) = minus_i * coupled;
        dy(1) = minus_i * coupled;
        const Complex sys = y(0) + y(1);
        for (std::size_t l = 0; l < L; ++l) {
            const Eigen::Index k = static_cast<Eigen::Index>(l + 2);
            dy(k) = minus_i * (-disc.detunings[l] * y(k) + disc.couplings[l] * sys);
        }
    };

    Vector y = Vector::Zero(n);
    y(0) = state0.alpha;
    y(1) = state0.beta;
    Vector k1(n), k2(n), k3(n), k4(n), tmp(n);

    FidelityCurve curve;
    curve.method = Method::bath_oracle;
    curve.times = grid;
    curve.values.reserve(grid.size());
    double max_drift = 0.0;

    auto record = [&]() {
        const Complex overlap = std::conj(state0.alpha) * y(0) + std::conj(state0.beta) * y(1);
        curve.values.push_back(std::min(std::norm(overlap), 1.0));
    };
    auto check_drift = [&]() {
        max_drift = std::max(max_drift, std::abs(y.squaredNorm() - 1.0));
        if (max_drift > kDriftLimit) {
            if (max_drift_out) *max_drift_out = max_drift;
            char buf[96];
            std::snprintf(buf, sizeof buf,
                          "bath_oracle_evolve: norm drift %.3e exceeds 1e-6; reduce dt", max_drift);
            throw AccuracyError(buf, max_drift);
        }
    };

    record();
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double span = grid[i] - grid[i - 1];
        const auto steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-12));
        const double h = span / static_cast<double>(steps);
        for (std::size_t s = 0; s < steps; ++s) {
            rhs(y, k1);
            tmp = y + (0.5 * h) * k1;
            rhs(tmp, k2);
            tmp = y + (0.5 * h) * k2;
            rhs(tmp, k3);
            tmp = y + h * k3;
            rhs(tmp, k4);
            y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            check_drift();
        }
        record();
    }
    if (max_drift_out) *max_drift_out = max_drift;
    curve.validate();
    return curve;
}

} // namespace entpres::exact
