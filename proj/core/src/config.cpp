#include "dipair/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dipair {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ConfigError("config field '" + field + "': " + message);
}

double require_number(const json& node, const std::string& field) {
    if (!node.contains(field) || !node[field].is_number()) {
        fail(field, "missing or not a number");
    }
    return node[field].get<double>();
}

double optional_number(const json& node, const std::string& field,
                       double fallback) {
    if (!node.contains(field)) {
        return fallback;
    }
    if (!node[field].is_number()) {
        fail(field, "not a number");
    }
    return node[field].get<double>();
}

std::string optional_string(const json& node, const std::string& field,
                            const std::string& fallback) {
    if (!node.contains(field)) {
        return fallback;
    }
    if (!node[field].is_string()) {
        fail(field, "not a string");
    }
    return node[field].get<std::string>();
}

Geometry parse_geometry(const json& node) {
    const bool has_eta = node.contains("eta");
    const bool has_r = node.contains("r_over_lambda0");
    if (has_eta == has_r) {
        fail("geometry", "provide exactly one of 'eta' and 'r_over_lambda0'");
    }
    Geometry g;
    g.eta = has_eta ? require_number(node, "eta")
                    : 2.0 * pi * require_number(node, "r_over_lambda0");
    g.theta = optional_number(node, "theta", 0.5 * pi);
    g.phi = optional_number(node, "phi", 0.0);
    return g;
}

RunConfig::DriveKind parse_drive_kind(const std::string& kind) {
    if (kind == "none") return RunConfig::DriveKind::none;
    if (kind == "laser") return RunConfig::DriveKind::laser;
    if (kind == "rf") return RunConfig::DriveKind::rf;
    fail("drive.kind", "must be one of 'none', 'laser', 'rf'");
}

std::string drive_kind_name(RunConfig::DriveKind kind) {
    switch (kind) {
        case RunConfig::DriveKind::none: return "none";
        case RunConfig::DriveKind::laser: return "laser";
        case RunConfig::DriveKind::rf: return "rf";
    }
    return "none";
}

}  // namespace

void RunConfig::validate() const {
    if (schema_version != current_schema_version) {
        fail("schema_version", "unsupported version " + std::to_string(schema_version));
    }
    if (!(geometry.eta > 0.0) || !std::isfinite(geometry.eta)) {
        fail("geometry.eta", "must be positive and finite");
    }
    if (!std::isfinite(geometry.theta) || geometry.theta < 0.0 ||
        geometry.theta > pi) {
        fail("geometry.theta", "must lie in [0, pi]");
    }
    if (!std::isfinite(geometry.phi)) {
        fail("geometry.phi", "must be finite");
    }
    if (!std::isfinite(zeeman)) {
        fail("zeeman", "must be finite");
    }
    if (drive_kind == DriveKind::laser) {
        if (laser.polarization != "x" && laser.polarization != "y") {
            fail("drive.polarization", "must be 'x' or 'y'");
        }
        if (!std::isfinite(laser.rabi)) {
            fail("drive.rabi", "must be finite");
        }
        if (!rf_pulses.empty()) {
            fail("drive", "laser drive cannot carry rf pulses");
        }
    } else if (drive_kind == DriveKind::rf) {
        if (rf_pulses.empty()) {
            fail("drive.pulses", "rf drive needs at least one pulse");
        }
        for (std::size_t k = 0; k < rf_pulses.size(); ++k) {
            const auto& p = rf_pulses[k];
            const std::string where = "drive.pulses[" + std::to_string(k) + "]";
            if (!(p.duration > 0.0)) {
                fail(where + ".duration", "must be positive");
            }
            if (!std::isfinite(p.delta0) || !std::isfinite(p.detuning) ||
                !std::isfinite(p.phi_rf)) {
                fail(where, "entries must be finite");
            }
        }
    } else if (!rf_pulses.empty()) {
        fail("drive", "pulses given but drive kind is 'none'");
    }
    if (!(simulation.t_end > 0.0) || !(simulation.dt_out > 0.0)) {
        fail("simulation", "t_end and dt_out must be positive");
    }
    if (!(simulation.rtol > 0.0) || !(simulation.atol > 0.0)) {
        fail("simulation", "tolerances must be positive");
    }
    if (output.format != "csv") {
        fail("output.format", "only 'csv' is supported");
    }
}

RunConfig parse_run_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }

    RunConfig config;
    if (root.contains("schema_version")) {
        if (!root["schema_version"].is_number_integer()) {
            fail("schema_version", "must be an integer");
        }
        config.schema_version = root["schema_version"].get<int>();
    }
    if (!root.contains("geometry") || !root["geometry"].is_object()) {
        fail("geometry", "missing object");
    }
    config.geometry = parse_geometry(root["geometry"]);
    config.zeeman = optional_number(root, "zeeman", 0.0);

    if (root.contains("drive")) {
        const json& drive = root["drive"];
        if (!drive.is_object()) {
            fail("drive", "must be an object");
        }
        config.drive_kind =
            parse_drive_kind(optional_string(drive, "kind", "none"));
        if (config.drive_kind == RunConfig::DriveKind::laser) {
            config.laser.polarization =
                optional_string(drive, "polarization", "y");
            config.laser.rabi = require_number(drive, "rabi");
            config.laser.detuning = optional_number(drive, "detuning", 0.0);
        } else if (config.drive_kind == RunConfig::DriveKind::rf) {
            if (!drive.contains("pulses") || !drive["pulses"].is_array()) {
                fail("drive.pulses", "missing array");
            }
            for (const json& p : drive["pulses"]) {
                RunConfig::RfPulseBlock pulse;
                pulse.delta0 = require_number(p, "delta0");
                pulse.detuning = optional_number(p, "detuning", 0.0);
                pulse.phi_rf = optional_number(p, "phi_rf", 0.0);
                pulse.duration = require_number(p, "duration");
                config.rf_pulses.push_back(pulse);
            }
        }
    }

    config.initial_state = optional_string(root, "initial_state", "g");
    if (root.contains("simulation")) {
        const json& sim = root["simulation"];
        if (!sim.is_object()) {
            fail("simulation", "must be an object");
        }
        config.simulation.t_end = optional_number(sim, "t_end", 10.0);
        config.simulation.dt_out = optional_number(sim, "dt_out", 0.1);
        config.simulation.rtol = optional_number(sim, "rtol", 1e-9);
        config.simulation.atol = optional_number(sim, "atol", 1e-12);
    }
    if (root.contains("output")) {
        const json& out = root["output"];
        if (!out.is_object()) {
            fail("output", "must be an object");
        }
        config.output.path = optional_string(out, "path", "");
        config.output.format = optional_string(out, "format", "csv");
    }

    config.validate();
    return config;
}

std::string serialize_run_config(const RunConfig& config) {
    config.validate();
    json root;
    root["schema_version"] = config.schema_version;
    root["geometry"] = {{"eta", config.geometry.eta},
                        {"theta", config.geometry.theta},
                        {"phi", config.geometry.phi}};
    root["zeeman"] = config.zeeman;

    json drive;
    drive["kind"] = drive_kind_name(config.drive_kind);
    if (config.drive_kind == RunConfig::DriveKind::laser) {
        drive["polarization"] = config.laser.polarization;
        drive["rabi"] = config.laser.rabi;
        drive["detuning"] = config.laser.detuning;
    } else if (config.drive_kind == RunConfig::DriveKind::rf) {
        json pulses = json::array();
        for (const auto& p : config.rf_pulses) {
            pulses.push_back({{"delta0", p.delta0},
                              {"detuning", p.detuning},
                              {"phi_rf", p.phi_rf},
                              {"duration", p.duration}});
        }
        drive["pulses"] = pulses;
    }
    root["drive"] = drive;

    root["initial_state"] = config.initial_state;
    root["simulation"] = {{"t_end", config.simulation.t_end},
                          {"dt_out", config.simulation.dt_out},
                          {"rtol", config.simulation.rtol},
                          {"atol", config.simulation.atol}};
    root["output"] = {{"path", config.output.path},
                      {"format", config.output.format}};

    // nlohmann::json objects keep keys sorted, so this dump is canonical.
    return root.dump(2) + "\n";
}

RunConfig load_run_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

void save_run_config_file(const RunConfig& config, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write config file: " + path);
    }
    out << serialize_run_config(config);
}

}  // namespace dipair
