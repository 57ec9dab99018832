// io.cpp — file formats for curves, sweeps, optimization results, and states

#include "entpres/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace entpres::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) out.push_back(field);
    return out;
}

double parse_double(const std::string& s, const std::string& path) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size()) throw std::runtime_error(path + ": malformed number '" + s + "'");
    return v;
}

} // namespace

std::string format_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// --------------------------- curve CSV ---------------------------------------

void write_curve_csv(const std::string& path, const FidelityCurve& curve) {
    curve.validate();
    std::string out = "t,F,method\n";
    const std::string tag = to_string(curve.method);
    for (std::size_t i = 0; i < curve.times.size(); ++i)
        out += format_g(curve.times[i]) + "," + format_g(curve.values[i]) + "," + tag + "\n";
    write_text(path, out);
}

FidelityCurve read_curve_csv(const std::string& path) {
    std::istringstream in(read_text(path));
    std::string line;
    if (!std::getline(in, line) || line != "t,F,method")
        throw std::runtime_error(path + ": expected header 't,F,method'");
    FidelityCurve curve;
    bool have_method = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3) throw std::runtime_error(path + ": expected 3 fields per row");
        curve.times.push_back(parse_double(fields[0], path));
        curve.values.push_back(parse_double(fields[1], path));
        const Method m = method_from_string(fields[2]);
        if (!have_method) {
            curve.method = m;
            have_method = true;
        } else if (m != curve.method) {
            throw std::runtime_error(path + ": inconsistent method tags");
        }
    }
    curve.validate();
    return curve;
}

// --------------------------- sweep CSV ---------------------------------------

void write_sweep_csv(const std::string& path, opt::Param param,
                     const std::vector<opt::SweepRow>& rows) {
    std::string out = "param,value,F,feasible\n";
    const std::string name = opt::to_string(param);
    for (const auto& r : rows)
        out += name + "," + format_g(r.value) + "," + format_g(r.fidelity) + "," +
               (r.feasible ? "true" : "false") + "\n";
    write_text(path, out);
}

// --------------------------- JSON --------------------------------------------

nlohmann::json optimization_to_json(const opt::OptimizationResult& result) {
    return nlohmann::json{{"best", result.best},
                          {"fidelity", result.fidelity},
                          {"evaluations", result.evaluations},
                          {"boundary", result.boundary}};
}

void write_json(const std::string& path, const nlohmann::json& j) {
    write_text(path, j.dump(2) + "\n");
}

nlohmann::json read_json(const std::string& path) {
    return nlohmann::json::parse(read_text(path));
}

nlohmann::json state_to_json(const fock::StateVector& state) {
    nlohmann::json amps = nlohmann::json::array();
    for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
        const auto c = state.amplitudes()(i);
        amps.push_back({c.real(), c.imag()});
    }
    return nlohmann::json{{"per_mode_dim", state.basis().per_mode_dim()}, {"amplitudes", amps}};
}

fock::StateVector state_from_json(const nlohmann::json& j) {
    if (!j.contains("per_mode_dim") || !j.contains("amplitudes"))
        throw std::runtime_error("state JSON needs 'per_mode_dim' and 'amplitudes'");
    const auto d = j.at("per_mode_dim").get<std::size_t>();
    const fock::FockBasis basis(d);
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != basis.size())
        throw std::runtime_error("state JSON: amplitudes must list all " +
                                 std::to_string(basis.size()) + " basis entries");
    fock::Vector v(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const auto& pair = amps.at(i);
        if (!pair.is_array() || pair.size() != 2)
            throw std::runtime_error("state JSON: each amplitude must be [re, im]");
        v(static_cast<Eigen::Index>(i)) =
            fock::Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return fock::StateVector(basis, std::move(v));
}

} // namespace entpres::io
