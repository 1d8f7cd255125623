#include "airstack/cli/runner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "airstack/cli/report_io.hpp"
#include "airstack/cli/scenario_json.hpp"
#include "airstack/core/error.hpp"
#include "airstack/netsim/world.hpp"

namespace airstack::cli {

namespace {

struct RunOptions {
    std::string scenario_path;
    std::string out_path;
    std::string format = "json";
    std::uint32_t replicates = 1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool trace = false;
};

int do_run(const RunOptions& opts) {
    netsim::Scenario scenario = load_scenario(opts.scenario_path);
    if (opts.seed_given)
        scenario.seed = opts.seed;
    netsim::validate_scenario(scenario);

    std::vector<ReplicateReport> reports;
    for (std::uint32_t i = 0; i < opts.replicates; ++i) {
        netsim::Scenario replicate = scenario;
        replicate.seed = scenario.seed + i;
        netsim::World world(replicate);
        if (opts.trace) {
            std::uint32_t replicate_index = i;
            world.set_trace([replicate_index](std::uint64_t now, const std::string& kind,
                                              const std::string& detail) {
                std::cerr << "replicate=" << replicate_index << " t=" << now << " " << kind
                          << " " << detail << "\n";
            });
        }
        world.run_to_end();
        reports.push_back(ReplicateReport{i, replicate.seed, world.result().report});
    }
    write_file(opts.out_path,
               opts.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports));
    return 0;
}

int do_validate(const std::string& scenario_path) {
    netsim::Scenario scenario = load_scenario(scenario_path);
    netsim::validate_scenario(scenario);
    std::cout << "ok\n";
    return 0;
}

int do_floors(const std::string& config_path) {
    netsim::FloorConfig config = load_floor_config(config_path);
    int deduced = netsim::run_floor_scenario(config);
    std::cout << "{\"deduced_floor\": " << deduced
              << ", \"device_floor\": " << config.device_floor << "}\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Ledger-backed air-interface interworking simulator"};
    app.require_subcommand(1);

    RunOptions run_opts;
    CLI::App* run = app.add_subcommand("run", "Run a scenario and write a metrics report");
    run->add_option("--scenario", run_opts.scenario_path, "Scenario JSON file")->required();
    run->add_option("--out", run_opts.out_path, "Report output path")->required();
    run->add_option("--format", run_opts.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--replicates", run_opts.replicates, "Number of replicates")
        ->check(CLI::PositiveNumber);
    CLI::Option* seed_opt = run->add_option("--seed", run_opts.seed, "Base seed override");
    run->add_flag("--trace", run_opts.trace, "Stream event trace to stderr");

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "Check a scenario file");
    validate->add_option("--scenario", validate_path, "Scenario JSON file")->required();

    std::string floors_path;
    CLI::App* floors = app.add_subcommand("floors", "Run an emergency floor deduction");
    floors->add_option("--config", floors_path, "Floor config JSON file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (run->parsed()) {
            run_opts.seed_given = seed_opt->count() > 0;
            return do_run(run_opts);
        }
        if (validate->parsed())
            return do_validate(validate_path);
        if (floors->parsed())
            return do_floors(floors_path);
    } catch (const core::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == "IoError" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace airstack::cli
