#include "revival/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "revival/analysis.hpp"

namespace revival {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::map<std::string, OutputKind>& output_names() {
    static const std::map<std::string, OutputKind> names = {
        {"entropy", OutputKind::Entropy},   {"overlap", OutputKind::Overlap},
        {"moments", OutputKind::Moments},   {"squeezing", OutputKind::Squeezing},
        {"photon", OutputKind::Photon},
    };
    return names;
}

std::string output_name(OutputKind k) {
    for (const auto& [name, kind] : output_names())
        if (kind == k) return name;
    return "?";
}

cplx parse_alpha(const ordered_json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument("config: \"alpha\" must be a number or [re, im]");
}

InitialState parse_initial(const ordered_json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("config: \"initial\" must be an object with a \"type\"");
    const std::string type = j.at("type").get<std::string>();
    if (type == "fock") return InitialState::fock(j.at("n").get<int>());
    if (type == "coherent") return InitialState::coherent(parse_alpha(j.at("alpha")));
    if (type == "photon_added")
        return InitialState::photon_added(parse_alpha(j.at("alpha")), j.at("m").get<int>());
    throw std::invalid_argument("config: unknown initial state type \"" + type + "\"");
}

ordered_json initial_to_json(const InitialState& s) {
    ordered_json j;
    switch (s.kind()) {
    case InitialState::Kind::Fock:
        j["type"] = "fock";
        j["n"] = s.fock_level();
        break;
    case InitialState::Kind::Coherent:
        j["type"] = "coherent";
        j["alpha"] = {s.alpha().real(), s.alpha().imag()};
        j["nu"] = s.nu();
        break;
    case InitialState::Kind::PhotonAdded:
        j["type"] = "photon_added";
        j["alpha"] = {s.alpha().real(), s.alpha().imag()};
        j["m"] = s.added_photons();
        j["nu"] = s.nu();
        break;
    }
    return j;
}

} // namespace

void validate(const RunConfig& config) {
    if (!(config.t_max > 0.0)) throw std::invalid_argument("config: t_max must be positive");
    if (config.n_samples < 2) throw std::invalid_argument("config: n_samples must be >= 2");
    if (!(config.eps_trunc > 0.0 && config.eps_trunc <= 1e-6))
        throw std::invalid_argument("config: eps_trunc must lie in (0, 1e-6]");
    if (config.out_dir.empty()) throw std::invalid_argument("config: out_dir must not be empty");
    // ModelParams checked by the model layer on first use; fail early here.
    block_matrix(config.params, 0);
}

void validate(const SweepConfig& config) {
    validate(config.base);
    if (config.values.empty()) throw std::invalid_argument("sweep: values must not be empty");
    switch (config.axis) {
    case SweepAxis::G:
        for (std::size_t i = 0; i < config.values.size(); ++i) {
            if (!(config.values[i] > 0.0))
                throw std::invalid_argument("sweep: g values must be positive");
            if (i > 0 && !(config.values[i] > config.values[i - 1]))
                throw std::invalid_argument("sweep: g values must be ascending");
        }
        break;
    case SweepAxis::Nu:
        if (config.base.initial.kind() == InitialState::Kind::Fock)
            throw std::invalid_argument("sweep: nu axis needs a coherent or photon-added initial");
        for (double v : config.values)
            if (!(v >= 0.0)) throw std::invalid_argument("sweep: nu values must be nonnegative");
        break;
    case SweepAxis::M:
        if (config.base.initial.kind() == InitialState::Kind::Fock)
            throw std::invalid_argument("sweep: m axis needs a coherent or photon-added initial");
        for (double v : config.values)
            if (!(v >= 0.0 && std::floor(v) == v))
                throw std::invalid_argument("sweep: m values must be nonnegative integers");
        break;
    }
    if (!(config.base.params.gamma > 0.0))
        throw std::invalid_argument("sweep: fidelity sweeps need gamma > 0 (no revival otherwise)");
}

RunConfig parse_run_config(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    try {
        RunConfig config;
        if (j.contains("params")) {
            const auto& p = j.at("params");
            config.params.omega = p.value("omega", config.params.omega);
            config.params.omega0 = p.value("omega0", config.params.omega0);
            config.params.gamma = p.value("gamma", config.params.gamma);
            config.params.g = p.value("g", config.params.g);
        }
        if (j.contains("initial")) config.initial = parse_initial(j.at("initial"));
        if (j.contains("t_max")) {
            config.t_max = j.at("t_max").get<double>();
        } else if (config.params.gamma > 0.0) {
            config.t_max = 1.1 * predict_revival_time(config.initial, config.params);
        } else {
            throw std::invalid_argument(
                "config: t_max is required when gamma = 0 (no revival time to span)");
        }
        config.n_samples = j.value("n_samples", config.n_samples);
        config.eps_trunc = j.value("eps_trunc", config.eps_trunc);
        if (j.contains("outputs")) {
            config.outputs.clear();
            for (const auto& name : j.at("outputs")) {
                const auto it = output_names().find(name.get<std::string>());
                if (it == output_names().end())
                    throw std::invalid_argument("config: unknown output \"" +
                                                name.get<std::string>() + "\"");
                config.outputs.insert(it->second);
            }
        }
        if (j.contains("out_dir")) config.out_dir = j.at("out_dir").get<std::string>();
        return config;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
}

RunConfig load_run_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("config: cannot open " + file.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_run_config(text.str());
}

std::string resolved_config_json(const RunConfig& config, int n_max) {
    ordered_json j;
    j["params"] = {{"omega", config.params.omega},
                   {"omega0", config.params.omega0},
                   {"gamma", config.params.gamma},
                   {"g", config.params.g}};
    j["initial"] = initial_to_json(config.initial);
    j["t_max"] = config.t_max;
    j["n_samples"] = config.n_samples;
    j["eps_trunc"] = config.eps_trunc;
    std::vector<std::string> names;
    for (OutputKind k : config.outputs) names.push_back(output_name(k));
    j["outputs"] = names;
    j["out_dir"] = config.out_dir.string();
    j["n_max"] = n_max;
    return j.dump(2);
}

SweepAxis parse_sweep_axis(const std::string& name) {
    if (name == "g") return SweepAxis::G;
    if (name == "nu") return SweepAxis::Nu;
    if (name == "m") return SweepAxis::M;
    throw std::invalid_argument("sweep: axis must be one of g, nu, m");
}

std::string axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::G: return "g";
    case SweepAxis::Nu: return "nu";
    case SweepAxis::M: return "m";
    }
    return "?";
}

} // namespace revival
