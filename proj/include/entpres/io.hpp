// io.hpp — CSV/JSON serialization: fidelity curves, sweep tables, optimization
// results, and state vectors

#pragma once

#include "entpres/core.hpp"
#include "entpres/fock.hpp"
#include "entpres/optimize.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace entpres::io {

// Shortest-faithful 12-significant-digit rendering (printf %.12g).
std::string format_g(double x);

// Write text exactly as given (binary stream, LF endings on every platform).
void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

// Curve CSV: header "t,F,method", one row per grid point, 12 significant
// digits. Reading re-validates every curve invariant.
void write_curve_csv(const std::string& path, const FidelityCurve& curve);
FidelityCurve read_curve_csv(const std::string& path);

// Sweep CSV: header "param,value,F,feasible"; infeasible rows carry F = nan.
void write_sweep_csv(const std::string& path, opt::Param param,
                     const std::vector<opt::SweepRow>& rows);

nlohmann::json optimization_to_json(const opt::OptimizationResult& result);
void write_json(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json(const std::string& path);

// State vector as {"per_mode_dim": d, "amplitudes": [[re, im], ...]} in basis
// order; parsing normalizes, as every constructed state does.
nlohmann::json state_to_json(const fock::StateVector& state);
fock::StateVector state_from_json(const nlohmann::json& j);

} // namespace entpres::io
