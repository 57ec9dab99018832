// optimize.cpp — sweeps and golden-section search over pulse parameters

#include "entpres/optimize.hpp"

#include "entpres/tcl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace entpres::opt {

namespace {

constexpr std::size_t kPrescanPoints = 64;
constexpr double kParamRelTol = 1e-4;
// Within this fraction of the feasible range, an optimum counts as pinned to the edge.
constexpr double kBoundaryFraction = 1e-3;

double evaluate(const SweepSpec& spec, double value) {
    const tcl::TclProblem problem(spec.eta, spec.res, make_train(spec, value));
    const double f = tcl::tcl_fidelity_at(problem, spec.t_eval);
    if (!std::isfinite(f)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "optimize: non-finite fidelity at %s = %.12g",
                      to_string(spec.free).c_str(), value);
        throw std::runtime_error(buf);
    }
    return f;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> xs;
    xs.reserve(n);
    if (n == 1 || hi == lo) {
        xs.push_back(lo);
        if (n > 1) xs.resize(n, lo);
        return xs;
    }
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return xs;
}

} // namespace

std::string to_string(Param p) {
    switch (p) {
        case Param::period:    return "period";
        case Param::width:     return "width";
        case Param::intensity: return "intensity";
    }
    throw std::logic_error("to_string: unknown Param");
}

Param param_from_string(const std::string& s) {
    if (s == "period")    return Param::period;
    if (s == "width")     return Param::width;
    if (s == "intensity") return Param::intensity;
    throw std::invalid_argument("param_from_string: unknown parameter '" + s +
                                "' (expected period, width, or intensity)");
}

bool feasible_value(const SweepSpec& spec, double value) {
    double T = spec.base.period, w = spec.base.width, L = spec.base.intensity;
    switch (spec.free) {
        case Param::period:    T = value; break;
        case Param::width:     w = value; break;
        case Param::intensity: L = value; break;
    }
    return T > 0.0 && w > 0.0 && w <= T && L >= 0.0;
}

pulse::PulseTrain make_train(const SweepSpec& spec, double value) {
    switch (spec.free) {
        case Param::period:
            return pulse::PulseTrain(value, spec.base.width, spec.base.intensity, spec.base.epsilon);
        case Param::width:
            return pulse::PulseTrain(spec.base.period, value, spec.base.intensity, spec.base.epsilon);
        case Param::intensity:
            return pulse::PulseTrain(spec.base.period, spec.base.width, value, spec.base.epsilon);
    }
    throw std::logic_error("make_train: unknown Param");
}

std::vector<SweepRow> sweep_values(const SweepSpec& spec, std::vector<double> values) {
    spec.validate();
    if (values.empty()) throw std::invalid_argument("sweep_values: no sample values");
    std::sort(values.begin(), values.end());
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    bool any_feasible = false;
    for (double x : values) {
        if (feasible_value(spec, x)) {
            rows.push_back({x, evaluate(spec, x), true});
            any_feasible = true;
        } else {
            rows.push_back({x, std::numeric_limits<double>::quiet_NaN(), false});
        }
    }
    if (!any_feasible) throw std::runtime_error("sweep: every sampled point is infeasible");
    return rows;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
    spec.validate();
    return sweep_values(spec, uniform_grid(spec.lo, spec.hi, spec.samples));
}

OptimizationResult optimize_fidelity(const SweepSpec& spec) {
    spec.validate();

    OptimizationResult result{};
    result.best = spec.lo;
    result.fidelity = -1.0;

    auto probe = [&](double x) {
        const double f = evaluate(spec, x);
        result.history.emplace_back(x, f);
        ++result.evaluations;
        if (f > result.fidelity) {
            result.fidelity = f;
            result.best = x;
        }
        return f;
    };

    if (spec.lo == spec.hi) {
        if (!feasible_value(spec, spec.lo))
            throw std::runtime_error("optimize: the single requested point is infeasible");
        probe(spec.lo);
        result.boundary = true;
        return result;
    }

    // Coarse pre-scan. Feasible values of any single parameter form an
    // interval, so the feasible samples are one contiguous ascending run.
    std::vector<std::pair<double, double>> scan; // (value, fidelity)
    for (double x : uniform_grid(spec.lo, spec.hi, kPrescanPoints)) {
        if (feasible_value(spec, x)) scan.emplace_back(x, probe(x));
    }
    if (scan.empty()) throw std::runtime_error("optimize: every pre-scan point is infeasible");
    const double feas_lo = scan.front().first;
    const double feas_hi = scan.back().first;

    // Bracket the best sample by its feasible neighbors.
    std::size_t ib = 0;
    for (std::size_t i = 1; i < scan.size(); ++i)
        if (scan[i].second > scan[ib].second) ib = i;
    double a = (ib > 0) ? scan[ib - 1].first : scan[ib].first;
    double b = (ib + 1 < scan.size()) ? scan[ib + 1].first : scan[ib].first;

    // Golden-section refinement (maximization) to relative tolerance 1e-4.
    const double xtol = kParamRelTol * std::max({std::abs(a), std::abs(b), 1e-12});
    if (b - a > xtol) {
        const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
        double c = b - invphi * (b - a);
        double d = a + invphi * (b - a);
        double fc = probe(c), fd = probe(d);
        while (b - a > xtol) {
            if (fc > fd) {
                b = d; d = c; fd = fc;
                c = b - invphi * (b - a);
                fc = probe(c);
            } else {
                a = c; c = d; fc = fd;
                d = a + invphi * (b - a);
                fd = probe(d);
            }
        }
        probe(0.5 * (a + b));
    }

    const double span = feas_hi - feas_lo;
    result.boundary = span <= 0.0 ||
                      std::abs(result.best - feas_lo) <= kBoundaryFraction * span ||
                      std::abs(result.best - feas_hi) <= kBoundaryFraction * span;
    return result;
}

} // namespace entpres::opt
