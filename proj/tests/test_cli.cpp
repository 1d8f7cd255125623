#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "airstack/cli/report_io.hpp"
#include "airstack/cli/runner.hpp"
#include "airstack/cli/scenario_json.hpp"
#include "airstack/core/error.hpp"

using namespace airstack;
using netsim::Scenario;

namespace {

std::string error_text(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const core::Error& e) {
        return e.what();
    }
    return "";
}

const char* kFullScenario = R"({
  "seed": 42,
  "duration_ms": 5000,
  "sense_period_ms": 500,
  "gossip_period_ms": 2000,
  "move_period_ms": 250,
  "expiry_check_period_ms": 1000,
  "auth_chain_id": "authz",
  "cache_capacity": 16,
  "profile_expiry_ms": 60000,
  "observation_retention": 32,
  "sensitivity_floor_dbm": -80,
  "path_loss": {"pl0_db": 38, "d0_m": 2, "exponent_n": 2.5, "noise_sigma_db": 1.5},
  "classifier": {"min_observations": 4, "min_distinct_rsus": 2,
                 "speed_lo_mps": 0.5, "speed_hi_mps": 50, "max_speed_stddev_mps": 12},
  "rules": [
    {"type": "mobility_class_is", "class": "vehicle"},
    {"type": "oui_allowed"},
    {"type": "profile_not_expired"},
    {"type": "min_observations", "count": 4},
    {"type": "speed_within", "lo_mps": 0.5, "hi_mps": 50}
  ],
  "oui_allowlist": ["00:1A:2B", "AA:BB:CC"],
  "municipalities": [
    {"network_id": "muni-a",
     "rsus": [{"interface_id": "rsu-1", "position": [0, 10]},
              {"interface_id": "rsu-2", "position": [150, -10], "tx_power_dbm": 23,
               "channel": 6, "ssid_open": false}]},
    {"network_id": "muni-b",
     "rsus": [{"interface_id": "rsu-3", "position": [300, 10]}]}
  ],
  "vehicles": [
    {"mac": "00:1A:2B:00:00:01", "route_polyline": [[0, 0], [400, 0]],
     "speed_mps": 12.5, "loop": true},
    {"mac": "AA:BB:CC:00:00:02", "route_polyline": [[0, 5]],
     "is_legit_manufacturer": false, "tx_power_dbm": 17}
  ],
  "rogue_devices": [{"mac": "DE:AD:BE:EF:00:01", "position": [100, 3]}],
  "gossip_adjacency": [["rsu-1", "rsu-2"], ["rsu-2", "rsu-3"]]
})";

const char* kMinimalScenario = R"({
  "duration_ms": 3000,
  "oui_allowlist": ["00:1A:2B"],
  "municipalities": [{"network_id": "m", "rsus":
    [{"interface_id": "r1", "position": [0, 10]},
     {"interface_id": "r2", "position": [40, -10]},
     {"interface_id": "r3", "position": [80, 10]}]}],
  "vehicles": [{"mac": "00:1A:2B:00:00:01", "route_polyline": [[0, 0], [100, 0]]}]
})";

std::filesystem::path temp_dir() {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "airstack_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path path = temp_dir() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("a fully specified scenario parses field for field") {
    Scenario s = cli::parse_scenario_text(kFullScenario);
    CHECK(s.seed == 42);
    CHECK(s.duration_ms == 5000);
    CHECK(s.sense_period_ms == 500);
    CHECK(s.gossip_period_ms == 2000);
    CHECK(s.move_period_ms == 250);
    CHECK(s.auth_chain_id == "authz");
    CHECK(s.cache_capacity == 16);
    CHECK(s.profile_expiry_ms == 60'000);
    CHECK(s.observation_retention == 32);
    CHECK(s.sensitivity_floor_dbm == -80.0);
    CHECK(s.path_loss.pl0_db == 38.0);
    CHECK(s.path_loss.d0_m == 2.0);
    CHECK(s.path_loss.exponent_n == 2.5);
    CHECK(s.path_loss.noise_sigma_db == 1.5);
    CHECK(s.classifier.min_observations == 4);
    CHECK(s.classifier.min_distinct_rsus == 2);

    REQUIRE(s.rules.rules.size() == 5);
    CHECK(s.rules.rules[0] ==
          ledger::Predicate{ledger::MobilityClassIs{identity::MobilityClass::Vehicle}});
    CHECK(s.rules.rules[3] == ledger::Predicate{ledger::MinObservations{4}});
    CHECK(s.rules.rules[4] == ledger::Predicate{ledger::SpeedWithin{0.5, 50.0}});

    REQUIRE(s.oui_allowlist.size() == 2);
    CHECK(s.oui_allowlist[0] == core::Oui::parse("00:1A:2B"));

    REQUIRE(s.municipalities.size() == 2);
    CHECK(s.municipalities[0].network_id == "muni-a");
    REQUIRE(s.municipalities[0].rsus.size() == 2);
    CHECK(s.municipalities[0].rsus[0].interface_id == "rsu-1");
    CHECK(s.municipalities[0].rsus[0].position.y == 10.0);
    CHECK(s.municipalities[0].rsus[0].ssid_open);  // parser default
    CHECK(s.municipalities[0].rsus[1].tx_power_dbm == 23.0);
    CHECK(s.municipalities[0].rsus[1].channel == 6);
    CHECK_FALSE(s.municipalities[0].rsus[1].ssid_open);

    REQUIRE(s.vehicles.size() == 2);
    CHECK(s.vehicles[0].mac == core::MacAddress::parse("00:1A:2B:00:00:01"));
    CHECK(s.vehicles[0].speed_mps == 12.5);
    CHECK(s.vehicles[0].loop);
    CHECK(s.vehicles[0].is_legit_manufacturer);
    CHECK(s.vehicles[1].route_polyline.size() == 1);
    CHECK_FALSE(s.vehicles[1].is_legit_manufacturer);

    REQUIRE(s.rogue_devices.size() == 1);
    CHECK(s.rogue_devices[0].position.x == 100.0);
    REQUIRE(s.gossip_adjacency.size() == 2);
    CHECK(s.gossip_adjacency[1] == std::pair<std::string, std::string>{"rsu-2", "rsu-3"});
}

TEST_CASE("omitted keys fall back to documented defaults") {
    Scenario s = cli::parse_scenario_text(R"({
      "municipalities": [{"network_id": "m", "rsus":
        [{"interface_id": "r", "position": [0, 0]}]}]
    })");
    CHECK(s.seed == 1);
    CHECK(s.duration_ms == 0);
    CHECK(s.sense_period_ms == 1000);
    CHECK(s.move_period_ms == 100);
    CHECK(s.auth_chain_id == "auth");
    CHECK(s.rules == ledger::default_rules());
    CHECK(s.oui_allowlist.empty());
    CHECK(s.vehicles.empty());
    CHECK(s.municipalities[0].rsus[0].ssid_open);
    CHECK(s.municipalities[0].rsus[0].tx_power_dbm == 20.0);
}

TEST_CASE("parse diagnostics name the offending path") {
    auto text_for = [](const char* body) {
        return error_text([body] { cli::parse_scenario_text(body); });
    };
    CHECK(text_for("{nope").substr(0, 11) == "ParseError:");
    CHECK(text_for(R"({"bogus": 1})") == "ParseError: bogus: unknown key");
    CHECK(text_for(R"({"municipalities": 3})") ==
          "ParseError: municipalities: expected an array");
    CHECK(text_for(R"({"municipalities": [{"network_id": "m"}]})") ==
          "ParseError: municipalities[0].rsus: missing required key");
    CHECK(text_for(R"({"municipalities": [{"network_id": "m",
            "rsus": [{"interface_id": "r", "position": [0, 0], "floor": 2}]}]})") ==
          "ParseError: municipalities[0].rsus[0].floor: unknown key");
    CHECK(text_for(R"({"municipalities": [{"network_id": "m",
            "rsus": [{"interface_id": "r", "position": [0]}]}]})") ==
          "ParseError: municipalities[0].rsus[0].position: expected a point [x, y]");
    CHECK(text_for(R"({"rules": [{"type": "levitating"}], "municipalities": []})") ==
          "ParseError: rules[0].type: unknown rule type \"levitating\"");
    CHECK(text_for(R"({"rules": [{"type": "mobility_class_is", "class": "boat"}],
            "municipalities": []})") ==
          "ParseError: rules[0].class: unknown mobility class \"boat\"");
    CHECK(text_for(R"({"vehicles": [{"mac": "zz:bad", "route_polyline": [[0, 0]]}],
            "municipalities": []})") ==
          "ParseError: vehicles[0].mac: ParseError: MAC address has wrong length: \"zz:bad\"");
    CHECK(text_for(R"({"oui_allowlist": ["00:1A"], "municipalities": []})")
              .substr(0, 30) == "ParseError: oui_allowlist[0]: ");
    CHECK(text_for(R"({"seed": -4, "municipalities": []})") ==
          "ParseError: seed: expected an unsigned integer");

    CHECK(error_text([] { cli::load_scenario("/no/such/file.json"); }).substr(0, 8) ==
          "IoError:");
}

TEST_CASE("floor configs parse with ap and device geometry") {
    netsim::FloorConfig cfg = cli::parse_floor_config_text(R"({
      "seed": 5, "k": 4, "floor_height_m": 3.5,
      "path_loss": {"noise_sigma_db": 2},
      "aps": [{"interface_id": "ap-1", "floor": 1, "position": [0, 1]},
              {"interface_id": "ap-2", "floor": 2, "position": [1, 0], "tx_power_dbm": 18}],
      "device": {"position": [0.5, 0.5], "floor": 2}
    })");
    CHECK(cfg.seed == 5);
    CHECK(cfg.k == 4);
    CHECK(cfg.floor_height_m == 3.5);
    CHECK(cfg.path_loss.noise_sigma_db == 2.0);
    REQUIRE(cfg.aps.size() == 2);
    CHECK(cfg.aps[0].interface_id == "ap-1");
    CHECK(cfg.aps[1].tx_power_dbm == 18.0);
    CHECK(cfg.device_position.x == 0.5);
    CHECK(cfg.device_floor == 2);

    CHECK(error_text([] {
              cli::parse_floor_config_text(R"({"aps": [], "device": {"position": [0,0]}})");
          }) == "ParseError: aps: expected a nonempty array");
}

TEST_CASE("csv report formatting is stable") {
    cli::ReplicateReport r0;
    r0.replicate = 0;
    r0.seed = 9;
    r0.report.grants = 10;
    r0.report.denials = 3;
    r0.report.handoffs_total = 25;
    r0.report.handoffs_without_reauth = 20;
    r0.report.max_propagation_rounds = 8;
    r0.report.rogue_routed_deliveries = 0;
    r0.report.localization_rmse_m = 1.25;

    cli::ReplicateReport r1;
    r1.replicate = 1;
    r1.seed = 10;
    r1.report.localization_rmse_m = 0.000123456789;

    CHECK(cli::reports_to_csv({r0, r1}) ==
          "replicate,seed,grants,denials,handoffs_total,handoffs_without_reauth,"
          "max_propagation_rounds,rogue_routed_deliveries,localization_rmse_m\n"
          "0,9,10,3,25,20,8,0,1.25\n"
          "1,10,0,0,0,0,0,0,0.000123456789\n");
    CHECK(cli::reports_to_csv({}) == std::string(cli::kCsvHeader) + "\n");
}

TEST_CASE("json reports round trip through a parser") {
    cli::ReplicateReport r;
    r.replicate = 2;
    r.seed = 11;
    r.report.grants = 4;
    r.report.propagation_rounds_histogram = {{3, 2}, {8, 1}};
    r.report.max_propagation_rounds = 8;
    r.report.per_municipality["muni-a"].grants = 4;
    r.report.per_municipality["muni-a"].handoffs_total = 7;

    std::string text = cli::reports_to_json({r});
    CHECK(text.back() == '\n');
    nlohmann::json parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["replicate"] == 2);
    CHECK(parsed[0]["seed"] == 11);
    CHECK(parsed[0]["grants"] == 4);
    CHECK(parsed[0]["propagation_rounds_histogram"]["3"] == 2);
    CHECK(parsed[0]["propagation_rounds_histogram"]["8"] == 1);
    CHECK(parsed[0]["max_propagation_rounds"] == 8);
    CHECK(parsed[0]["per_municipality"]["muni-a"]["grants"] == 4);
    CHECK(parsed[0]["per_municipality"]["muni-a"]["handoffs_total"] == 7);
}

TEST_CASE("run subcommand writes replicate reports") {
    std::filesystem::path scenario = write_temp("scenario.json", kMinimalScenario);
    std::filesystem::path out_csv = temp_dir() / "report.csv";
    std::filesystem::path out_json = temp_dir() / "report.json";

    int rc = cli::run_cli({"run", "--scenario", scenario.string(), "--out", out_csv.string(),
                           "--format", "csv", "--replicates", "2", "--seed", "9"});
    CHECK(rc == 0);
    std::string csv = slurp(out_csv);
    REQUIRE(!csv.empty());
    std::stringstream lines(csv);
    std::string header, row0, row1;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    CHECK(header == cli::kCsvHeader);
    CHECK(row0.substr(0, 4) == "0,9,");
    CHECK(row1.substr(0, 5) == "1,10,");

    CHECK(cli::run_cli({"run", "--scenario", scenario.string(), "--out", out_json.string(),
                        "--format", "json"}) == 0);
    nlohmann::json parsed = nlohmann::json::parse(slurp(out_json));
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 1);
    // Scenario seed is the default when --seed is omitted.
    CHECK(parsed[0]["seed"] == 1);

    // Identical invocations produce identical bytes.
    std::filesystem::path out_csv2 = temp_dir() / "report2.csv";
    CHECK(cli::run_cli({"run", "--scenario", scenario.string(), "--out", out_csv2.string(),
                        "--format", "csv", "--replicates", "2", "--seed", "9"}) == 0);
    CHECK(slurp(out_csv2) == csv);
}

TEST_CASE("exit codes distinguish success, bad input, and io failure") {
    std::filesystem::path scenario = write_temp("ok.json", kMinimalScenario);
    std::filesystem::path bad = write_temp("bad.json", R"({"bogus": true})");
    std::filesystem::path invalid =
        write_temp("invalid.json", R"({"municipalities": [], "duration_ms": 5})");

    CHECK(cli::run_cli({"validate", "--scenario", scenario.string()}) == 0);
    CHECK(cli::run_cli({"validate", "--scenario", bad.string()}) == 1);
    CHECK(cli::run_cli({"validate", "--scenario", invalid.string()}) == 1);
    CHECK(cli::run_cli({"validate", "--scenario", "/no/such/file.json"}) == 2);
    CHECK(cli::run_cli({"run", "--scenario", scenario.string(), "--out",
                        "/no/such/dir/report.csv"}) == 2);
    CHECK(cli::run_cli({"frobnicate"}) == 1);
    CHECK(cli::run_cli({"run", "--scenario", scenario.string()}) == 1);  // --out missing
    CHECK(cli::run_cli({"--help"}) == 0);

    std::filesystem::path floors = write_temp("floors.json", R"({
      "aps": [{"interface_id": "ap-1", "floor": 1, "position": [1, 0]},
              {"interface_id": "ap-2", "floor": 2, "position": [-1, 0]},
              {"interface_id": "ap-3", "floor": 3, "position": [1, 0]}],
      "device": {"position": [0, 0], "floor": 2}
    })");
    CHECK(cli::run_cli({"floors", "--config", floors.string()}) == 0);
    CHECK(cli::run_cli({"floors", "--config", bad.string()}) == 1);
}
