// Command-line front end for the two-atom dipole-dipole library.  Every
// analysis is a subcommand that reads an optional JSON run configuration,
// accepts flag overrides, and emits deterministic CSV or JSON artifacts
// (metadata lives in a sidecar file so data bytes never contain timestamps).

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dipair/config.hpp"
#include "dipair/control.hpp"
#include "dipair/couplings.hpp"
#include "dipair/csv.hpp"
#include "dipair/dfs.hpp"
#include "dipair/dynamics.hpp"
#include "dipair/entanglement.hpp"
#include "dipair/operators.hpp"
#include "dipair/spectral.hpp"
#include "dipair/states.hpp"

namespace {

using namespace dipair;
using C = std::complex<double>;
using nlohmann::json;

// --- shared flag handling ----------------------------------------------------

// Geometry / field / output flags shared by the physics subcommands.  The
// bound values only take effect when the flag was actually passed, so they
// override a --config file instead of silently replacing it.
struct CommonFlags {
    std::string config_path;
    double eta = 0.0;
    double eta_over_2pi = 0.0;
    double r_over_lambda0 = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double zeeman = 0.0;
    std::string output;

    CLI::Option* config_opt = nullptr;
    CLI::Option* eta_opt = nullptr;
    CLI::Option* eta_over_2pi_opt = nullptr;
    CLI::Option* r_opt = nullptr;
    CLI::Option* theta_opt = nullptr;
    CLI::Option* phi_opt = nullptr;
    CLI::Option* zeeman_opt = nullptr;
    CLI::Option* output_opt = nullptr;
};

void add_common_flags(CLI::App& sub, CommonFlags& flags) {
    flags.config_opt =
        sub.add_option("--config", flags.config_path, "JSON run configuration");
    flags.eta_opt = sub.add_option("--eta", flags.eta,
                                   "separation parameter eta = 2 pi R / lambda0");
    flags.eta_over_2pi_opt =
        sub.add_option("--eta-over-2pi", flags.eta_over_2pi, "eta / (2 pi)");
    flags.r_opt = sub.add_option("--r-over-lambda0", flags.r_over_lambda0,
                                 "separation in transition wavelengths");
    flags.theta_opt = sub.add_option(
        "--theta", flags.theta, "polar angle of the separation axis (radians)");
    flags.phi_opt = sub.add_option("--phi", flags.phi,
                                   "azimuth of the separation axis (radians)");
    flags.zeeman_opt = sub.add_option(
        "--delta", flags.zeeman, "static magnetic splitting (units of gamma)");
    flags.output_opt = sub.add_option(
        "--output", flags.output,
        "output name, resolved against $DIPAIR_OUT_DIR ('-' for stdout)");
    flags.eta_opt->excludes(flags.eta_over_2pi_opt);
    flags.eta_opt->excludes(flags.r_opt);
    flags.eta_over_2pi_opt->excludes(flags.r_opt);
}

RunConfig resolve_config(const CommonFlags& flags) {
    RunConfig config;
    if (flags.config_opt->count() > 0) {
        config = load_run_config_file(flags.config_path);
    }
    if (flags.eta_opt->count() > 0) {
        config.geometry.eta = flags.eta;
    }
    if (flags.eta_over_2pi_opt->count() > 0) {
        config.geometry.eta = 2.0 * pi * flags.eta_over_2pi;
    }
    if (flags.r_opt->count() > 0) {
        config.geometry.eta = 2.0 * pi * flags.r_over_lambda0;
    }
    if (flags.theta_opt->count() > 0) {
        config.geometry.theta = flags.theta;
    }
    if (flags.phi_opt->count() > 0) {
        config.geometry.phi = flags.phi;
    }
    if (flags.zeeman_opt->count() > 0) {
        config.zeeman = flags.zeeman;
    }
    if (flags.output_opt->count() > 0) {
        config.output.path = flags.output;
    }
    config.validate();
    return config;
}

// --- output helpers ----------------------------------------------------------

// Writes the table to the configured target.  File targets additionally get
// a '<path>.meta.json' sidecar carrying the command name and the canonical
// configuration, keeping the data file itself byte-stable across reruns.
void emit_table(const CsvTable& table, const RunConfig& config,
                const std::string& command, const std::string& default_name) {
    const std::string name =
        config.output.path.empty() ? default_name : config.output.path;
    if (name == "-") {
        std::cout << table.to_string();
        return;
    }
    const std::string path = resolve_output_path(name);
    table.save(path);
    json meta;
    meta["command"] = command;
    meta["config"] = json::parse(serialize_run_config(config));
    write_sidecar(path, meta.dump(2));
    std::cout << "wrote " << path << "\n";
}

// Row-major complex matrix as {"rows", "cols", "data": [[re, im], ...]}.
json matrix_json(const Eigen::MatrixXcd& m) {
    json data = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            data.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    json node;
    node["rows"] = m.rows();
    node["cols"] = m.cols();
    node["data"] = std::move(data);
    return node;
}

void write_json_file(const std::string& name, const json& j) {
    const std::string path = resolve_output_path(name);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << j.dump(2) << "\n";
    std::cout << "wrote " << path << "\n";
}

double population(const StateVector& psi, const OperatorMatrix& rho) {
    return (psi.adjoint() * rho * psi).value().real();
}

// --- generator assembly ------------------------------------------------------

// Time-independent Liouvillian for drive kinds 'none' and 'laser'.  The
// laser Hamiltonian already carries the detuning/Zeeman part of the
// rotating frame, so the bare splitting term is only added when undriven.
Superoperator static_liouvillian(const RunConfig& config,
                                 OperatorMatrix* h_out = nullptr,
                                 Superoperator* d_out = nullptr) {
    const CouplingSet cs = closed_form_couplings(config.geometry);
    OperatorMatrix h = build_h_omega(cs);
    if (config.drive_kind == RunConfig::DriveKind::laser) {
        DriveConfig drive;
        const C amplitude(config.laser.rabi, 0.0);
        if (config.laser.polarization == "x") {
            drive.omega_x = {amplitude, amplitude};
        } else {
            drive.omega_y = {amplitude, amplitude};
        }
        drive.delta2 = config.laser.detuning;
        drive.zeeman = config.zeeman;
        h += build_h_laser(drive);
    } else {
        h += build_h_a(config.zeeman);
    }
    const Superoperator dissipator = build_dissipator(cs);
    if (h_out != nullptr) {
        *h_out = h;
    }
    if (d_out != nullptr) {
        *d_out = dissipator;
    }
    return build_liouvillian(h, dissipator);
}

std::vector<RfPulse> pulses_from_config(const RunConfig& config) {
    // Pulse blocks store the detuning from the qubit splitting
    // W = Omega_N - Omega_F; the integrator wants absolute frequencies.
    const double w = collective_shift_n(config.geometry.eta) -
                     collective_shift_f(config.geometry.eta);
    std::vector<RfPulse> pulses;
    pulses.reserve(config.rf_pulses.size());
    for (const auto& p : config.rf_pulses) {
        pulses.push_back({p.delta0, w + p.detuning, p.phi_rf, p.duration});
    }
    return pulses;
}

// --- column builders ---------------------------------------------------------

void append_coupling_columns(std::vector<std::string>& columns) {
    for (const char* prefix : {"omega", "gamma"}) {
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                const std::string ij = std::to_string(i) + std::to_string(j);
                columns.push_back(std::string(prefix) + "_re_" + ij);
                columns.push_back(std::string(prefix) + "_im_" + ij);
            }
        }
    }
    columns.insert(columns.end(), {"omega_f", "omega_n"});
    for (const char* prefix : {"gamma_a", "gamma_s"}) {
        for (int i = 1; i <= 3; ++i) {
            columns.push_back(prefix + std::to_string(i));
        }
    }
}

void append_coupling_values(const CouplingSet& cs, std::vector<double>& row) {
    for (const Eigen::Matrix3cd* m : {&cs.omega, &cs.gamma_cross}) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                row.push_back((*m)(i, j).real());
                row.push_back((*m)(i, j).imag());
            }
        }
    }
    row.insert(row.end(), {cs.omega_f, cs.omega_n});
    const CollectiveRates rates = collective_decay_rates(cs.geometry.eta);
    for (const auto& rate : {rates.antisymmetric, rates.symmetric}) {
        row.insert(row.end(), rate.begin(), rate.end());
    }
}

std::vector<std::string> observable_columns() {
    return {"t",    "p_a1", "p_a2", "p_a3", "p_s1",
            "p_s2", "p_s3", "p_g",  "trace"};
}

void append_observable_row(CsvTable& table, double t, const OperatorMatrix& rho,
                           const Geometry& g) {
    std::vector<double> row;
    row.reserve(9);
    row.push_back(t);
    for (int i = 1; i <= 3; ++i) {
        row.push_back(population(psi_a(i, g.theta, g.phi), rho));
    }
    for (int i = 1; i <= 3; ++i) {
        row.push_back(population(psi_s(i, g.theta, g.phi), rho));
    }
    row.push_back(population(ground_state(), rho));
    row.push_back(rho.trace().real());
    table.add_row(row);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        values[static_cast<std::size_t>(k)] =
            n == 1 ? lo : lo + (hi - lo) * k / (n - 1);
    }
    return values;
}

// --- subcommands ---------------------------------------------------------

int run_couplings(const CommonFlags& flags, const std::string& route,
                  const std::string& dump_operators) {
    const RunConfig config = resolve_config(flags);
    const Geometry& g = config.geometry;
    const CouplingSet cs = route == "tensor" ? couplings_from_tensor(g)
                                             : closed_form_couplings(g);

    std::vector<std::string> columns = {"eta", "theta", "phi"};
    append_coupling_columns(columns);
    std::vector<double> row = {g.eta, g.theta, g.phi};
    append_coupling_values(cs, row);

    CsvTable table(columns);
    table.add_row(row);
    emit_table(table, config, "couplings", "-");

    if (!dump_operators.empty()) {
        json ops;
        ops["h_a"] = matrix_json(build_h_a(config.zeeman));
        ops["h_omega"] = matrix_json(build_h_omega(cs));
        ops["dissipator"] = matrix_json(build_dissipator(cs));
        write_json_file(dump_operators, ops);
    }
    return 0;
}

int run_spectrum(const CommonFlags& flags) {
    const RunConfig config = resolve_config(flags);
    const Geometry& g = config.geometry;
    Spectrum spectrum = nondegenerate_eigensystem(g, config.zeeman);
    const auto by_shift = [](const SpectralLine& a, const SpectralLine& b) {
        return a.shift < b.shift;
    };
    std::stable_sort(spectrum.lines.begin(), spectrum.lines.begin() + 3,
                     by_shift);
    std::stable_sort(spectrum.lines.begin() + 3, spectrum.lines.end(),
                     by_shift);

    std::vector<std::string> columns = {"eta", "theta", "phi", "delta"};
    std::vector<double> row = {g.eta, g.theta, g.phi, config.zeeman};
    for (const char* prefix : {"lambda_a", "lambda_s"}) {
        for (int i = 1; i <= 3; ++i) {
            columns.push_back(prefix + std::to_string(i));
        }
    }
    for (int i = 0; i < 6; ++i) {
        row.push_back(spectrum.lines[static_cast<std::size_t>(i)].shift);
    }
    // Splitting of the outer antisymmetric lines; at theta = pi/2 this is
    // the qubit frequency omega_b of the perpendicular closed forms.
    columns.push_back("omega_b");
    row.push_back(spectrum.lines[2].shift - spectrum.lines[0].shift);
    for (const char* prefix : {"gamma_a", "gamma_s"}) {
        for (int i = 1; i <= 3; ++i) {
            columns.push_back(prefix + std::to_string(i));
        }
    }
    for (int i = 0; i < 6; ++i) {
        row.push_back(spectrum.lines[static_cast<std::size_t>(i)].decay_rate);
    }

    CsvTable table(columns);
    table.add_row(row);
    emit_table(table, config, "spectrum", "-");
    return 0;
}

int run_surface(const CommonFlags& flags, double l_min, double l_max, int nl,
                double z_min, double z_max, int nz) {
    const RunConfig config = resolve_config(flags);
    const std::vector<SurfacePoint> points = energy_surface(
        linspace(l_min, l_max, nl), linspace(z_min, z_max, nz), config.zeeman);

    CsvTable table({"l", "z", "lambda_a1", "lambda_a2", "lambda_a3"});
    for (const SurfacePoint& p : points) {
        table.add_row({p.l, p.z, p.lambda_a[0], p.lambda_a[1], p.lambda_a[2]});
    }
    emit_table(table, config, "surface", "surface.csv");
    return 0;
}

int run_dfs(const CommonFlags& flags, bool limit_r_zero, double r_min,
            double r_max, int points) {
    if (limit_r_zero) {
        const NullSpaceResult ns = dissipator_null_space(build_limit_dissipator());
        std::cout << "kernel dimension: " << ns.dimension << "\n"
                  << "largest kept singular value: "
                  << format_double(ns.largest_kept) << "\n"
                  << "smallest discarded singular value: "
                  << format_double(ns.smallest_discarded) << "\n";
        return 0;
    }
    const RunConfig config = resolve_config(flags);
    CsvTable table({"r_over_lambda0", "eta", "kernel_dimension", "leak_a1",
                    "leak_a2", "leak_a3"});
    for (const double r : linspace(r_min, r_max, points)) {
        Geometry g = config.geometry;
        g.eta = 2.0 * pi * r;
        const CouplingSet cs = closed_form_couplings(g);
        const NullSpaceResult ns = dissipator_null_space(build_dissipator(cs));
        const std::array<double, 3> leak = dfs_leakage_rate(cs);
        table.add_row({r, g.eta, static_cast<double>(ns.dimension), leak[0],
                       leak[1], leak[2]});
    }
    emit_table(table, config, "dfs", "dfs.csv");
    return 0;
}

int run_evolve(const CommonFlags& flags, const std::string& dump_rho,
               const std::string& dump_operators) {
    const RunConfig config = resolve_config(flags);
    const Geometry& g = config.geometry;
    IntegratorOptions options;
    options.rtol = config.simulation.rtol;
    options.atol = config.simulation.atol;

    const StateVector psi0 = named_state(config.initial_state, g.theta, g.phi);
    Trajectory trajectory;
    OperatorMatrix h;
    Superoperator dissipator;
    if (config.drive_kind == RunConfig::DriveKind::rf) {
        const CouplingSet cs = closed_form_couplings(g);
        h = build_h_a(config.zeeman) + build_h_omega(cs);
        dissipator = build_dissipator(cs);
        const Superoperator l0 = build_liouvillian(h, dissipator);
        const Superoperator lg = commutator_superoperator(rf_generator());

        OperatorMatrix rho = psi0 * psi0.adjoint();
        std::vector<double> times;
        double t0 = 0.0;
        for (const RfPulse& pulse : pulses_from_config(config)) {
            const Trajectory segment = evolve_modulated(
                l0, lg, pulse.delta0, pulse.omega_rf, pulse.phi_rf, rho, t0,
                t0 + pulse.duration, config.simulation.dt_out, options);
            const std::size_t start = times.empty() ? 0 : 1;  // shared joint
            for (Eigen::Index k = static_cast<Eigen::Index>(start);
                 k < segment.times.size(); ++k) {
                times.push_back(segment.times(k));
                trajectory.states.push_back(
                    segment.states[static_cast<std::size_t>(k)]);
            }
            rho = segment.states.back();
            t0 = segment.times(segment.times.size() - 1);
        }
        trajectory.times =
            Eigen::Map<const Eigen::VectorXd>(times.data(),
                                              static_cast<Eigen::Index>(times.size()));
    } else {
        const Superoperator l = static_liouvillian(config, &h, &dissipator);
        trajectory = evolve(l, psi0 * psi0.adjoint(), config.simulation.t_end,
                            config.simulation.dt_out, options);
    }

    CsvTable table(observable_columns());
    for (Eigen::Index k = 0; k < trajectory.times.size(); ++k) {
        append_observable_row(table, trajectory.times(k),
                              trajectory.states[static_cast<std::size_t>(k)], g);
    }
    emit_table(table, config, "evolve", "evolve.csv");

    if (!dump_rho.empty()) {
        json snapshots = json::array();
        for (Eigen::Index k = 0; k < trajectory.times.size(); ++k) {
            json snap;
            snap["t"] = trajectory.times(k);
            snap["rho"] =
                matrix_json(trajectory.states[static_cast<std::size_t>(k)]);
            snapshots.push_back(std::move(snap));
        }
        write_json_file(dump_rho, snapshots);
    }
    if (!dump_operators.empty()) {
        json ops;
        ops["h"] = matrix_json(h);
        ops["dissipator"] = matrix_json(dissipator);
        if (config.drive_kind == RunConfig::DriveKind::rf) {
            ops["rf_generator"] = matrix_json(rf_generator());
        }
        write_json_file(dump_operators, ops);
    }
    return 0;
}

int run_steady(const CommonFlags& flags, const std::string& dump_rho) {
    const RunConfig config = resolve_config(flags);
    if (config.drive_kind == RunConfig::DriveKind::rf) {
        throw std::runtime_error(
            "steady needs a time-independent drive ('none' or 'laser')");
    }
    const Superoperator l = static_liouvillian(config);
    const SteadyStateResult s = steady_state(l);
    const Geometry& g = config.geometry;

    std::vector<std::string> columns = {"eta",  "theta", "phi",
                                        "kernel_dimension"};
    std::vector<double> row = {g.eta, g.theta, g.phi,
                               static_cast<double>(s.kernel_dimension)};
    for (const char* prefix : {"p_a", "p_s"}) {
        for (int i = 1; i <= 3; ++i) {
            columns.push_back(prefix + std::to_string(i));
        }
    }
    for (int i = 1; i <= 3; ++i) {
        row.push_back(population(psi_a(i, g.theta, g.phi), s.rho));
    }
    for (int i = 1; i <= 3; ++i) {
        row.push_back(population(psi_s(i, g.theta, g.phi), s.rho));
    }
    columns.insert(columns.end(), {"p_g", "purity"});
    row.push_back(population(ground_state(), s.rho));
    row.push_back((s.rho * s.rho).trace().real());

    CsvTable table(columns);
    table.add_row(row);
    emit_table(table, config, "steady", "-");

    if (!dump_rho.empty()) {
        json node;
        node["kernel_dimension"] = s.kernel_dimension;
        node["unique"] = s.unique;
        node["rho"] = matrix_json(s.rho);
        write_json_file(dump_rho, node);
    }
    return 0;
}

int run_bloch(const CommonFlags& flags) {
    const RunConfig config = resolve_config(flags);
    const Geometry& g = config.geometry;
    if (std::abs(g.theta - 0.5 * pi) > 1e-9 || std::abs(g.phi) > 1e-9) {
        throw std::runtime_error(
            "bloch dynamics are defined in the perpendicular frame: "
            "set theta = pi/2 and phi = 0");
    }
    IntegratorOptions options;
    options.rtol = config.simulation.rtol;
    options.atol = config.simulation.atol;

    BlochTrajectory sim;
    if (config.drive_kind == RunConfig::DriveKind::rf) {
        sim = simulate_rf_sequence(g.eta, pulses_from_config(config),
                                   config.simulation.dt_out, options);
    } else if (config.drive_kind == RunConfig::DriveKind::none) {
        sim = simulate_static_precession(g.eta, config.zeeman,
                                         config.simulation.t_end,
                                         config.simulation.dt_out, options);
    } else {
        throw std::runtime_error(
            "bloch supports drive kinds 'none' (static splitting) and 'rf'");
    }

    const StateVector up = psi_a(2, 0.5 * pi, 0.0);
    const StateVector down = psi_a(3, 0.5 * pi, 0.0);
    CsvTable table({"t", "bx", "by", "bz", "b_norm", "p_up", "p_down"});
    for (Eigen::Index k = 0; k < sim.times.size(); ++k) {
        const Eigen::Vector3d& b = sim.bloch[static_cast<std::size_t>(k)];
        const OperatorMatrix& rho = sim.full.states[static_cast<std::size_t>(k)];
        table.add_row({sim.times(k), b.x(), b.y(), b.z(), b.norm(),
                       population(up, rho), population(down, rho)});
    }
    emit_table(table, config, "bloch", "bloch.csv");
    return 0;
}

int run_target(const CommonFlags& flags, double sx, double sz) {
    const RunConfig config = resolve_config(flags);
    const double delta =
        delta_for_target(Eigen::Vector3d(sx, 0.0, sz), config.geometry.eta);
    std::cout << format_double(delta) << "\n";
    return 0;
}

int run_concurrence(const std::string& state, const std::vector<double>& amps,
                    double theta, double phi) {
    StateVector v;
    if (!state.empty()) {
        v = named_state(state, theta, phi);
    } else {
        if (amps.size() != 2 * static_cast<std::size_t>(dim)) {
            throw std::runtime_error(
                "amplitude vector needs 32 numbers (re, im for each of the "
                "16 product-basis components)");
        }
        v = StateVector::Zero(dim);
        for (int k = 0; k < dim; ++k) {
            v(k) = C(amps[2 * static_cast<std::size_t>(k)],
                     amps[2 * static_cast<std::size_t>(k) + 1]);
        }
    }
    std::cout << format_double(concurrence(v)) << "\n";
    return 0;
}

int run_sweep(const CommonFlags& flags, double r_min, double r_max, int points,
              int jobs) {
    const RunConfig config = resolve_config(flags);
    const std::vector<double> separations = linspace(r_min, r_max, points);

    std::vector<std::string> columns = {"r_over_lambda0", "eta"};
    append_coupling_columns(columns);

    // Rows are computed independently and written in index order, so the
    // fan-out across threads cannot change the output bytes.
    std::vector<std::vector<double>> rows(separations.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (std::size_t k; (k = next.fetch_add(1)) < separations.size();) {
            Geometry g = config.geometry;
            g.eta = 2.0 * pi * separations[k];
            std::vector<double> row = {separations[k], g.eta};
            append_coupling_values(closed_form_couplings(g), row);
            rows[k] = std::move(row);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread& t : pool) {
        t.join();
    }

    CsvTable table(columns);
    for (const std::vector<double>& row : rows) {
        table.add_row(row);
    }
    emit_table(table, config, "sweep", "sweep.csv");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Simulator and analysis tool for two dipole-dipole-interacting "
        "four-level atoms"};
    app.require_subcommand(1);

    CLI::App* couplings = app.add_subcommand(
        "couplings", "coupling matrices and collective rates for one geometry");
    CommonFlags couplings_flags;
    add_common_flags(*couplings, couplings_flags);
    std::string couplings_route = "closed";
    couplings
        ->add_option("--route", couplings_route,
                     "evaluation route: closed forms or tensor contraction")
        ->check(CLI::IsMember({"closed", "tensor"}));
    std::string couplings_dump_operators;
    couplings->add_option("--dump-operators", couplings_dump_operators,
                          "write the built operators as JSON to this name");

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "single-excitation energy shifts and decay rates");
    CommonFlags spectrum_flags;
    add_common_flags(*spectrum, spectrum_flags);

    CLI::App* surface = app.add_subcommand(
        "surface", "antisymmetric energies on an (l, z) separation grid");
    CommonFlags surface_flags;
    add_common_flags(*surface, surface_flags);
    double l_min = 0.02, l_max = 1.0, z_min = -1.0, z_max = 1.0;
    int nl = 50, nz = 101;
    surface->add_option("--l-min", l_min, "smallest in-plane separation");
    surface->add_option("--l-max", l_max, "largest in-plane separation");
    surface->add_option("--nl", nl, "grid points along l")
        ->check(CLI::PositiveNumber);
    surface->add_option("--z-min", z_min, "smallest axial separation");
    surface->add_option("--z-max", z_max, "largest axial separation");
    surface->add_option("--nz", nz, "grid points along z")
        ->check(CLI::PositiveNumber);

    CLI::App* dfs = app.add_subcommand(
        "dfs", "dissipator kernel dimension and subspace leakage rates");
    CommonFlags dfs_flags;
    add_common_flags(*dfs, dfs_flags);
    bool limit_r_zero = false;
    dfs->add_flag("--limit-r-zero", limit_r_zero,
                  "report the kernel of the contact-limit dissipator");
    double dfs_r_min = 0.05, dfs_r_max = 1.0;
    int dfs_points = 20;
    dfs->add_option("--r-min", dfs_r_min, "smallest separation (wavelengths)");
    dfs->add_option("--r-max", dfs_r_max, "largest separation (wavelengths)");
    dfs->add_option("--points", dfs_points, "number of separations")
        ->check(CLI::PositiveNumber);

    CLI::App* evolve_cmd = app.add_subcommand(
        "evolve", "master-equation trajectory with population observables");
    CommonFlags evolve_flags;
    add_common_flags(*evolve_cmd, evolve_flags);
    std::string evolve_dump_rho;
    evolve_cmd->add_option("--dump-rho", evolve_dump_rho,
                           "write every density-matrix snapshot as JSON");
    std::string evolve_dump_operators;
    evolve_cmd->add_option("--dump-operators", evolve_dump_operators,
                           "write the built operators as JSON to this name");

    CLI::App* steady = app.add_subcommand(
        "steady", "stationary state of the configured drive");
    CommonFlags steady_flags;
    add_common_flags(*steady, steady_flags);
    std::string steady_dump_rho;
    steady->add_option("--dump-rho", steady_dump_rho,
                       "write the stationary density matrix as JSON");

    CLI::App* bloch = app.add_subcommand(
        "bloch", "qubit Bloch-vector dynamics (static splitting or rf pulses)");
    CommonFlags bloch_flags;
    add_common_flags(*bloch, bloch_flags);

    CLI::App* target = app.add_subcommand(
        "target", "static splitting that reaches a Bloch target from +z");
    CommonFlags target_flags;
    add_common_flags(*target, target_flags);
    double target_sx = 0.0, target_sz = 0.0;
    target->add_option("--sx", target_sx, "target Bloch x component")
        ->required();
    target->add_option("--sz", target_sz, "target Bloch z component")
        ->required();

    CLI::App* concurrence_cmd =
        app.add_subcommand("concurrence", "pure-state concurrence");
    std::string conc_state;
    std::vector<double> conc_amps;
    double conc_theta = 0.5 * pi, conc_phi = 0.0;
    CLI::Option* conc_state_opt = concurrence_cmd->add_option(
        "--state", conc_state,
        "state label: g, a1..a3, s1..s3, psi_a1..psi_a3, psi_s1..psi_s3, "
        "product_ij");
    CLI::Option* conc_amps_opt = concurrence_cmd->add_option(
        "--amplitudes", conc_amps,
        "32 numbers: re, im for each product-basis component");
    conc_state_opt->excludes(conc_amps_opt);
    concurrence_cmd->add_option("--theta", conc_theta,
                                "polar angle for the geometry-adapted states");
    concurrence_cmd->add_option("--phi", conc_phi,
                                "azimuth for the geometry-adapted states");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "couplings and collective rates over a separation range");
    CommonFlags sweep_flags;
    add_common_flags(*sweep, sweep_flags);
    double sweep_r_min = 0.02, sweep_r_max = 2.0;
    int sweep_points = 400;
    int sweep_jobs =
        std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    sweep->add_option("--r-min", sweep_r_min, "smallest separation (wavelengths)");
    sweep->add_option("--r-max", sweep_r_max, "largest separation (wavelengths)");
    sweep->add_option("--points", sweep_points, "number of separations")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--jobs", sweep_jobs, "worker threads")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (couplings->parsed()) {
            return run_couplings(couplings_flags, couplings_route,
                                 couplings_dump_operators);
        }
        if (spectrum->parsed()) {
            return run_spectrum(spectrum_flags);
        }
        if (surface->parsed()) {
            return run_surface(surface_flags, l_min, l_max, nl, z_min, z_max,
                               nz);
        }
        if (dfs->parsed()) {
            return run_dfs(dfs_flags, limit_r_zero, dfs_r_min, dfs_r_max,
                           dfs_points);
        }
        if (evolve_cmd->parsed()) {
            return run_evolve(evolve_flags, evolve_dump_rho,
                              evolve_dump_operators);
        }
        if (steady->parsed()) {
            return run_steady(steady_flags, steady_dump_rho);
        }
        if (bloch->parsed()) {
            return run_bloch(bloch_flags);
        }
        if (target->parsed()) {
            return run_target(target_flags, target_sx, target_sz);
        }
        if (concurrence_cmd->parsed()) {
            if (conc_state_opt->count() == 0 && conc_amps_opt->count() == 0) {
                throw std::runtime_error(
                    "concurrence needs --state or --amplitudes");
            }
            return run_concurrence(conc_state, conc_amps, conc_theta, conc_phi);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_flags, sweep_r_min, sweep_r_max,
                             sweep_points, sweep_jobs);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
