// pulse.hpp — rectangular phase-pulse train: lambda(t), the accumulated phase
// Phi(t) in closed form, and breakpoint enumeration for piecewise integration

#pragma once

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

namespace entpres::pulse {

// Rectangular pulse train: lambda(t) = Lambda/width on [n*period - width, n*period)
// for n >= 1, zero elsewhere. Times in units of 1/gamma0; Lambda is the phase
// area of one pulse. epsilon is the (constant) coupling amplitude.
struct PulseTrain {
    double period;        // T > 0
    double width;         // 0 < width <= period
    double intensity;     // Lambda >= 0, phase area per pulse
    double epsilon = 1.0; // coupling amplitude, constant in time

    PulseTrain(double period_, double width_, double intensity_, double epsilon_ = 1.0)
        : period(period_), width(width_), intensity(intensity_), epsilon(epsilon_) {
        if (!(period > 0.0)) throw std::invalid_argument("PulseTrain: period must be > 0");
        if (!(width > 0.0 && width <= period))
            throw std::invalid_argument("PulseTrain: width must satisfy 0 < width <= period");
        if (!(intensity >= 0.0)) throw std::invalid_argument("PulseTrain: intensity must be >= 0");
    }

    double rate() const { return intensity / width; } // lambda inside a pulse
};

// No modulation: lambda(t) = 0, epsilon(t) = 1.
struct NoControl {};

using Control = std::variant<NoControl, PulseTrain>;

// --------------------------- pulse-train operations --------------------------

// lambda(t): Lambda/width inside a pulse window [n*period - width, n*period),
// n >= 1 (half-open boundary convention; any measure-zero choice leaves every
// integral unchanged), zero elsewhere. t < 0 is a domain error.
double lambda_at(const PulseTrain& train, double t);

// Phi(t) = integral of lambda from 0 to t, evaluated in closed form: with
// n = floor(t/period), Phi = n*Lambda plus the partial area of the pulse ending
// at (n+1)*period. Piecewise linear, nondecreasing, Phi(k*period) = k*Lambda.
double phase_integral(const PulseTrain& train, double t);

// All pulse edges n*period - width and n*period inside [t0, t1], sorted
// ascending and deduplicated within 1e-14. Between consecutive returned points
// lambda is constant.
std::vector<double> breakpoints(const PulseTrain& train, double t0, double t1);

// --------------------------- variant dispatch --------------------------------

double lambda_at(const Control& control, double t);
double phase_integral(const Control& control, double t);
std::vector<double> breakpoints(const Control& control, double t0, double t1);

// Coupling amplitude epsilon(t); constant for both control types.
double amplitude_at(const Control& control, double t);

} // namespace entpres::pulse
