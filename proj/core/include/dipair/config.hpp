#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dipair/geometry.hpp"

namespace dipair {

// Declarative description of one simulation run, loaded from JSON.
//
// Exactly one drive kind is active per run; the geometry accepts either
// "eta" or "r_over_lambda0" (eta = 2 pi r / lambda0), never both.
struct RunConfig {
    static constexpr int current_schema_version = 1;

    int schema_version = current_schema_version;
    Geometry geometry{2.0 * pi * 0.1, 0.5 * pi, 0.0};
    double zeeman = 0.0;  // static level splitting delta, units of gamma

    enum class DriveKind { none, laser, rf };
    DriveKind drive_kind = DriveKind::none;

    struct LaserBlock {
        std::string polarization = "y";  // "x" or "y"
        double rabi = 0.0;               // units of gamma
        double detuning = 0.0;           // laser detuning from the pi line
    };
    LaserBlock laser;

    struct RfPulseBlock {
        double delta0 = 0.0;    // modulation amplitude, units of gamma
        double detuning = 0.0;  // omega_rf - (Omega_N - Omega_F)
        double phi_rf = 0.0;    // drive phase at t = 0, radians
        double duration = 0.0;  // units of 1/gamma
    };
    std::vector<RfPulseBlock> rf_pulses;

    std::string initial_state = "g";  // named state, see named_state()

    struct SimulationBlock {
        double t_end = 10.0;
        double dt_out = 0.1;
        double rtol = 1e-9;
        double atol = 1e-12;
    };
    SimulationBlock simulation;

    struct OutputBlock {
        std::string path;            // empty: subcommand default
        std::string format = "csv";  // only "csv" is supported
    };
    OutputBlock output;

    // Throws ConfigError when invariants are violated.
    void validate() const;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// JSON round trip.  parse accepts the serialized form; serialization is
// canonical (sorted keys, two-space indent, trailing newline) so identical
// configs are byte-identical on disk.
RunConfig parse_run_config(const std::string& json_text);
std::string serialize_run_config(const RunConfig& config);

RunConfig load_run_config_file(const std::string& path);
void save_run_config_file(const RunConfig& config, const std::string& path);

}  // namespace dipair
