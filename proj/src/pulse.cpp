// pulse.cpp — closed-form pulse-train evaluation

#include "entpres/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entpres::pulse {

namespace {

constexpr double kDedupTol = 1e-14;

void check_time(double t, const char* who) {
    if (t < 0.0) throw std::domain_error(std::string(who) + ": time must be >= 0");
}

} // namespace

double lambda_at(const PulseTrain& train, double t) {
    check_time(t, "lambda_at");
    // Candidate window: the pulse ending at n*period with n = floor(t/period)+1.
    const double n = std::floor(t / train.period) + 1.0;
    const double start = n * train.period - train.width;
    return (t >= start) ? train.rate() : 0.0;
}

double phase_integral(const PulseTrain& train, double t) {
    check_time(t, "phase_integral");
    const double n = std::floor(t / train.period);
    // Partial area of the pulse occupying [(n+1)*period - width, (n+1)*period):
    // linear ramp, clamped to [0, 1] of one pulse area.
    const double frac = (t - ((n + 1.0) * train.period - train.width)) / train.width;
    return train.intensity * (n + std::clamp(frac, 0.0, 1.0));
}

std::vector<double> breakpoints(const PulseTrain& train, double t0, double t1) {
    check_time(t0, "breakpoints");
    if (t1 < t0) throw std::domain_error("breakpoints: t1 must be >= t0");
    std::vector<double> pts;
    const long n_lo = std::max(1L, static_cast<long>(std::floor(t0 / train.period)));
    const long n_hi = static_cast<long>(std::ceil(t1 / train.period)) + 1;
    for (long n = n_lo; n <= n_hi; ++n) {
        const double edges[2] = {n * train.period - train.width, n * train.period};
        for (double e : edges)
            if (e >= t0 && e <= t1) pts.push_back(e);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double a, double b) { return std::abs(a - b) <= kDedupTol; }),
              pts.end());
    return pts;
}

// --------------------------- variant dispatch --------------------------------

double lambda_at(const Control& control, double t) {
    if (std::holds_alternative<NoControl>(control)) {
        check_time(t, "lambda_at");
        return 0.0;
    }
    return lambda_at(std::get<PulseTrain>(control), t);
}

double phase_integral(const Control& control, double t) {
    if (std::holds_alternative<NoControl>(control)) {
        check_time(t, "phase_integral");
        return 0.0;
    }
    return phase_integral(std::get<PulseTrain>(control), t);
}

std::vector<double> breakpoints(const Control& control, double t0, double t1) {
    if (std::holds_alternative<NoControl>(control)) {
        check_time(t0, "breakpoints");
        if (t1 < t0) throw std::domain_error("breakpoints: t1 must be >= t0");
        return {};
    }
    return breakpoints(std::get<PulseTrain>(control), t0, t1);
}

double amplitude_at(const Control& control, double t) {
    check_time(t, "amplitude_at");
    return std::holds_alternative<NoControl>(control) ? 1.0
                                                      : std::get<PulseTrain>(control).epsilon;
}

} // namespace entpres::pulse
