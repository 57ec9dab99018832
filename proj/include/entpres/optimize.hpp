// optimize.hpp — parameter sweeps and golden-section fidelity maximization
// over the pulse-train parameters (period, width, intensity)

#pragma once

#include "entpres/core.hpp"
#include "entpres/pulse.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace entpres::opt {

enum class Param { period, width, intensity };

std::string to_string(Param p);
Param param_from_string(const std::string& s);

// One sweep/optimization job: vary `free` over [lo, hi], keep the other two
// pulse parameters (and epsilon) at the values in `base`, and score each
// candidate by the TCL fidelity F(t_eval).
struct SweepSpec {
    Param free;
    double lo;
    double hi;
    std::size_t samples;    // uniform inclusive grid for sweep()
    pulse::PulseTrain base; // holds the fixed parameters
    double eta;
    ReservoirSpec res;
    double t_eval;

    void validate() const {
        if (!(lo <= hi)) throw std::invalid_argument("SweepSpec: need lo <= hi");
        if (samples < 1) throw std::invalid_argument("SweepSpec: need at least one sample");
        if (!(eta >= 0.0)) throw std::invalid_argument("SweepSpec: eta must be >= 0");
        if (!(t_eval >= 0.0)) throw std::invalid_argument("SweepSpec: t_eval must be >= 0");
        res.validate();
    }
};

struct SweepRow {
    double value;
    double fidelity; // NaN when infeasible
    bool feasible;
};

struct OptimizationResult {
    double best;            // parameter value
    double fidelity;        // fidelity at `best`
    std::size_t evaluations;
    bool boundary;          // optimum pinned to an edge of the feasible range
    std::vector<std::pair<double, double>> history; // (value, fidelity) per evaluation
};

// Substitute `value` for the free parameter; empty when the resulting train
// would violate its invariants (points are skipped and reported, never clamped).
bool feasible_value(const SweepSpec& spec, double value);
pulse::PulseTrain make_train(const SweepSpec& spec, double value);

// Evaluate F(t_eval) on a uniform inclusive grid of spec.samples points.
// Rows come back in ascending parameter order; infeasible points are marked.
// Throws if every sampled point is infeasible.
std::vector<SweepRow> sweep(const SweepSpec& spec);

// Same, at explicitly chosen parameter values (sorted ascending first).
std::vector<SweepRow> sweep_values(const SweepSpec& spec, std::vector<double> values);

// 64-point pre-scan, then golden-section refinement around the best sample to
// relative parameter tolerance 1e-4. Interior stationary points are genuine
// zero-variation solutions; optima at the edge of the feasible range are
// flagged boundary (the variation does not vanish there). The returned
// fidelity is the best value seen across every evaluation.
OptimizationResult optimize_fidelity(const SweepSpec& spec);

} // namespace entpres::opt
