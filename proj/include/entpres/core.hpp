// core.hpp — shared simulation types: reservoir parameters and tagged fidelity curves

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace entpres {

inline constexpr const char* kVersion = "1.0.0";

// --------------------------- reservoir -------------------------------------

// Lorentzian reservoir at zero temperature. All rates are in units of gamma0
// (so gamma0 is numerically 1 unless deliberately rescaled) and all times in
// units of 1/gamma0. omega0 is informational: dynamics are computed in the
// frame rotating at the carrier, where only detunings omega0 - omega appear.
struct ReservoirSpec {
    double gamma0 = 1.0; // Markovian-limit decay rate
    double Gamma  = 1.0; // spectral half-width of the Lorentzian
    double omega0 = 0.0; // carrier frequency (never used numerically)

    void validate() const {
        if (!(gamma0 > 0.0)) throw std::invalid_argument("ReservoirSpec: gamma0 must be > 0");
        if (!(Gamma > 0.0))  throw std::invalid_argument("ReservoirSpec: Gamma must be > 0");
    }
};

// Spectral density J(omega) = gamma0*Gamma^2 / (2*pi*((omega-omega0)^2 + Gamma^2)).
// Its Fourier transform is the correlation function (gamma0*Gamma/2)*exp(-Gamma*s).
inline double spectral_density(const ReservoirSpec& res, double omega) {
    const double d = omega - res.omega0;
    return res.gamma0 * res.Gamma * res.Gamma / (2.0 * M_PI * (d * d + res.Gamma * res.Gamma));
}

// --------------------------- fidelity curves -------------------------------

enum class Method { tcl, exact, bath_oracle, closed_form };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::tcl:         return "tcl";
        case Method::exact:       return "exact";
        case Method::bath_oracle: return "bath-oracle";
        case Method::closed_form: return "closed-form";
    }
    throw std::logic_error("to_string: unknown Method");
}

inline Method method_from_string(const std::string& s) {
    if (s == "tcl")         return Method::tcl;
    if (s == "exact")       return Method::exact;
    if (s == "bath-oracle") return Method::bath_oracle;
    if (s == "closed-form") return Method::closed_form;
    throw std::invalid_argument("method_from_string: unknown method tag '" + s + "'");
}

// One fidelity-vs-time trace with a provenance tag. `label` is free-form
// metadata (parameter set, state name) carried into output sidecars.
struct FidelityCurve {
    std::vector<double> times;  // ascending, units 1/gamma0
    std::vector<double> values; // fidelities in [0, 1]
    Method method = Method::tcl;
    std::string label;

    void validate() const {
        if (times.size() != values.size())
            throw std::invalid_argument("FidelityCurve: times/values length mismatch");
        if (times.empty())
            throw std::invalid_argument("FidelityCurve: empty curve");
        for (std::size_t i = 1; i < times.size(); ++i)
            if (!(times[i] > times[i - 1]))
                throw std::invalid_argument("FidelityCurve: times must be strictly increasing");
        for (double v : values)
            if (!(v >= 0.0 && v <= 1.0))
                throw std::invalid_argument("FidelityCurve: values must lie in [0, 1]");
        if (times.front() == 0.0 && std::abs(values.front() - 1.0) > 1e-12)
            throw std::invalid_argument("FidelityCurve: value at t=0 must be 1");
    }
};

} // namespace entpres
