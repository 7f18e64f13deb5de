#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <doctest.h>

#include "dipair/config.hpp"
#include "dipair/csv.hpp"
#include "dipair/geometry.hpp"

using namespace dipair;
namespace fs = std::filesystem;

namespace {

RunConfig valid_laser_config() {
    RunConfig config;
    config.geometry = Geometry{2.0 * pi * 0.1, 0.5 * pi, 0.0};
    config.zeeman = 0.0;
    config.drive_kind = RunConfig::DriveKind::laser;
    config.laser.polarization = "y";
    config.laser.rabi = 5.0;
    config.laser.detuning = 0.0;
    config.initial_state = "g";
    config.simulation = {20.0, 0.5, 1e-10, 1e-13};
    config.output.path = "runs/laser.csv";
    return config;
}

RunConfig valid_rf_config() {
    RunConfig config;
    config.geometry = Geometry{2.0 * pi * 0.05, 0.5 * pi, 0.0};
    config.zeeman = 3.15;
    config.drive_kind = RunConfig::DriveKind::rf;
    config.rf_pulses = {{1.0, 0.0, pi, 0.25 * pi}, {1.0, 0.0, 0.0, 0.25 * pi}};
    config.initial_state = "psi_a2";
    config.simulation = {0.5 * pi, pi / 16.0, 1e-7, 1e-11};
    return config;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(bool(in));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path fresh_dir(const std::string& leaf) {
    const fs::path dir = fs::temp_directory_path() / leaf;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("laser config serialization is a fixed point of parse") {
    const RunConfig config = valid_laser_config();
    config.validate();
    const std::string text = serialize_run_config(config);
    CHECK(!text.empty());
    CHECK(text.front() == '{');
    CHECK(text.back() == '\n');

    const RunConfig back = parse_run_config(text);
    back.validate();
    CHECK(back.schema_version == config.schema_version);
    CHECK(back.geometry.eta == config.geometry.eta);
    CHECK(back.geometry.theta == config.geometry.theta);
    CHECK(back.geometry.phi == config.geometry.phi);
    CHECK(back.zeeman == config.zeeman);
    CHECK(back.drive_kind == RunConfig::DriveKind::laser);
    CHECK(back.laser.polarization == "y");
    CHECK(back.laser.rabi == 5.0);
    CHECK(back.laser.detuning == 0.0);
    CHECK(back.rf_pulses.empty());
    CHECK(back.initial_state == "g");
    CHECK(back.simulation.t_end == 20.0);
    CHECK(back.simulation.dt_out == 0.5);
    CHECK(back.simulation.rtol == 1e-10);
    CHECK(back.simulation.atol == 1e-13);
    CHECK(back.output.path == "runs/laser.csv");
    CHECK(back.output.format == "csv");

    CHECK(serialize_run_config(back) == text);
}

TEST_CASE("rf config round trip preserves every pulse") {
    const RunConfig config = valid_rf_config();
    config.validate();
    const std::string text = serialize_run_config(config);
    const RunConfig back = parse_run_config(text);
    back.validate();

    CHECK(back.drive_kind == RunConfig::DriveKind::rf);
    REQUIRE(back.rf_pulses.size() == 2);
    CHECK(back.rf_pulses[0].delta0 == 1.0);
    CHECK(back.rf_pulses[0].detuning == 0.0);
    CHECK(back.rf_pulses[0].phi_rf == pi);
    CHECK(back.rf_pulses[0].duration == 0.25 * pi);
    CHECK(back.rf_pulses[1].phi_rf == 0.0);
    CHECK(back.zeeman == 3.15);
    CHECK(back.initial_state == "psi_a2");
    CHECK(serialize_run_config(back) == text);
}

TEST_CASE("parse fills documented defaults from a minimal config") {
    const RunConfig config =
        parse_run_config("{\"geometry\": {\"eta\": 0.9}}");
    config.validate();
    CHECK(config.schema_version == RunConfig::current_schema_version);
    CHECK(config.geometry.eta == 0.9);
    CHECK(config.geometry.theta == 0.5 * pi);
    CHECK(config.geometry.phi == 0.0);
    CHECK(config.zeeman == 0.0);
    CHECK(config.drive_kind == RunConfig::DriveKind::none);
    CHECK(config.rf_pulses.empty());
    CHECK(config.initial_state == "g");
    CHECK(config.simulation.t_end == 10.0);
    CHECK(config.simulation.dt_out == 0.1);
    CHECK(config.simulation.rtol == 1e-9);
    CHECK(config.simulation.atol == 1e-12);
    CHECK(config.output.path.empty());
    CHECK(config.output.format == "csv");
}

TEST_CASE("geometry accepts exactly one separation spelling") {
    const RunConfig by_r = parse_run_config(
        "{\"geometry\": {\"r_over_lambda0\": 0.25, \"phi\": 0.5}}");
    CHECK(by_r.geometry.eta == 2.0 * pi * 0.25);
    CHECK(by_r.geometry.theta == 0.5 * pi);
    CHECK(by_r.geometry.phi == 0.5);

    CHECK_THROWS_WITH_AS(
        (void)parse_run_config(
            "{\"geometry\": {\"eta\": 1.0, \"r_over_lambda0\": 0.25}}"),
        "config field 'geometry': provide exactly one of 'eta' and "
        "'r_over_lambda0'",
        ConfigError);
    CHECK_THROWS_AS((void)parse_run_config("{\"geometry\": {\"theta\": 1.0}}"),
                    ConfigError);
    CHECK_THROWS_WITH_AS((void)parse_run_config("{}"),
                         "config field 'geometry': missing object", ConfigError);
}

TEST_CASE("malformed documents fail with a config error") {
    try {
        (void)parse_run_config("{not json");
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).rfind("invalid JSON:", 0) == 0);
    }
    CHECK_THROWS_WITH_AS((void)parse_run_config("[1, 2]"),
                         "config root must be a JSON object", ConfigError);
    CHECK_THROWS_WITH_AS(
        (void)parse_run_config(
            "{\"schema_version\": 1.5, \"geometry\": {\"eta\": 1.0}}"),
        "config field 'schema_version': must be an integer", ConfigError);
    // Laser drive without an amplitude.
    CHECK_THROWS_AS(
        (void)parse_run_config("{\"geometry\": {\"eta\": 1.0}, "
                               "\"drive\": {\"kind\": \"laser\"}}"),
        ConfigError);
    CHECK_THROWS_WITH_AS(
        (void)parse_run_config("{\"geometry\": {\"eta\": 1.0}, "
                               "\"drive\": {\"kind\": \"maser\"}}"),
        "config field 'drive.kind': must be one of 'none', 'laser', 'rf'",
        ConfigError);
    CHECK_THROWS_WITH_AS(
        (void)parse_run_config("{\"geometry\": {\"eta\": 1.0}, "
                               "\"drive\": {\"kind\": \"rf\"}}"),
        "config field 'drive.pulses': missing array", ConfigError);
}

TEST_CASE("validation pins down the offending field") {
    RunConfig config = valid_laser_config();
    config.schema_version = 99;
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'schema_version': unsupported version 99",
                         ConfigError);

    config = valid_laser_config();
    config.geometry.eta = 0.0;
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'geometry.eta': must be positive and finite",
                         ConfigError);
    config.geometry.eta = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(config.validate(), ConfigError);

    config = valid_laser_config();
    config.geometry.theta = 3.5;
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'geometry.theta': must lie in [0, pi]",
                         ConfigError);

    config = valid_laser_config();
    config.geometry.phi = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'geometry.phi': must be finite", ConfigError);

    config = valid_laser_config();
    config.zeeman = std::numeric_limits<double>::infinity();
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'zeeman': must be finite", ConfigError);

    config = valid_laser_config();
    config.laser.polarization = "z";
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'drive.polarization': must be 'x' or 'y'",
                         ConfigError);

    config = valid_laser_config();
    config.rf_pulses.push_back({1.0, 0.0, 0.0, 1.0});
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'drive': laser drive cannot carry rf pulses",
                         ConfigError);

    config = valid_rf_config();
    config.rf_pulses.clear();
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'drive.pulses': rf drive needs at least "
                         "one pulse",
                         ConfigError);

    config = valid_rf_config();
    config.rf_pulses[0].duration = 0.0;
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'drive.pulses[0].duration': must be positive",
                         ConfigError);

    config = valid_rf_config();
    config.rf_pulses[1].delta0 = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(
        config.validate(),
        "config field 'drive.pulses[1]': entries must be finite", ConfigError);

    config = valid_laser_config();
    config.drive_kind = RunConfig::DriveKind::none;
    config.rf_pulses.push_back({1.0, 0.0, 0.0, 1.0});
    CHECK_THROWS_WITH_AS(
        config.validate(),
        "config field 'drive': pulses given but drive kind is 'none'",
        ConfigError);

    config = valid_laser_config();
    config.simulation.t_end = 0.0;
    CHECK_THROWS_WITH_AS(
        config.validate(),
        "config field 'simulation': t_end and dt_out must be positive",
        ConfigError);

    config = valid_laser_config();
    config.simulation.rtol = 0.0;
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'simulation': tolerances must be positive",
                         ConfigError);

    config = valid_laser_config();
    config.output.format = "json";
    CHECK_THROWS_WITH_AS(config.validate(),
                         "config field 'output.format': only 'csv' is supported",
                         ConfigError);
}

TEST_CASE("config files round trip through disk") {
    const fs::path dir = fresh_dir("dipair_config_test");
    const fs::path path = dir / "run.json";
    const RunConfig config = valid_rf_config();
    save_run_config_file(config, path.string());

    CHECK(read_file(path) == serialize_run_config(config));
    const RunConfig back = load_run_config_file(path.string());
    CHECK(serialize_run_config(back) == serialize_run_config(config));

    CHECK_THROWS_AS((void)load_run_config_file((dir / "missing.json").string()),
                    ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("format_double prints round-trippable decimal forms") {
    // %.17g keeps all 17 significant digits rather than the shortest
    // representation, so 0.1 and 1e300 pick up their full expansions.
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1e300) == "1.0000000000000001e+300");

    const double values[] = {0.0,   1.0,      -2.5,     0.1,     pi,
                             1.0 / 3.0,       1e-17,    -6.02e23, 1e300,
                             2.0 * pi * 0.05, 5e-324};
    for (const double x : values) {
        const std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("csv tables emit deterministic LF-only bytes") {
    CsvTable table({"t", "x"});
    CHECK(table.row_count() == 0);
    table.add_row({0.0, 0.5});
    table.add_row({1.0, -0.25});
    CHECK(table.row_count() == 2);
    CHECK(table.columns().size() == 2);

    const std::string text = table.to_string();
    CHECK(text == "t,x\n0,0.5\n1,-0.25\n");
    CHECK(text.find('\r') == std::string::npos);
    CHECK(table.to_string() == text);

    CHECK_THROWS_AS(table.add_row({1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)CsvTable(std::vector<std::string>{}),
                    std::invalid_argument);

    const fs::path dir = fresh_dir("dipair_csv_test");
    const fs::path path = dir / "table.csv";
    table.save(path.string());
    CHECK(read_file(path) == text);
    fs::remove_all(dir);
}

TEST_CASE("sidecar files sit next to the data and end with a newline") {
    const fs::path dir = fresh_dir("dipair_sidecar_test");
    const std::string data_path = (dir / "run.csv").string();

    write_sidecar(data_path, "{\"eta\": 1.0}");
    CHECK(read_file(data_path + ".meta.json") == "{\"eta\": 1.0}\n");

    write_sidecar(data_path, "{\"eta\": 2.0}\n");
    CHECK(read_file(data_path + ".meta.json") == "{\"eta\": 2.0}\n");
    fs::remove_all(dir);
}

TEST_CASE("output paths obey the output directory variable") {
    const char* saved = std::getenv("DIPAIR_OUT_DIR");
    const std::string saved_value = saved ? saved : "";

    unsetenv("DIPAIR_OUT_DIR");
    CHECK(output_directory() == ".");

    const fs::path dir = fresh_dir("dipair_outdir_test");
    setenv("DIPAIR_OUT_DIR", dir.string().c_str(), 1);
    CHECK(output_directory() == dir.string());

    const std::string resolved = resolve_output_path("sub/data.csv");
    CHECK(resolved == (dir / "sub" / "data.csv").string());
    CHECK(fs::is_directory(dir / "sub"));

    // Absolute and explicitly relative names bypass the output directory.
    const std::string absolute = (dir / "direct.csv").string();
    CHECK(resolve_output_path(absolute) == absolute);
    CHECK(resolve_output_path("./local.csv") == "./local.csv");

    if (saved) {
        setenv("DIPAIR_OUT_DIR", saved_value.c_str(), 1);
    } else {
        unsetenv("DIPAIR_OUT_DIR");
    }
    fs::remove_all(dir);
}
