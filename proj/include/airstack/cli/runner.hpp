#pragma once

#include <string>
#include <vector>

namespace airstack::cli {

/// Entry point behind main(). Subcommands:
///   run      --scenario <path> --out <path> [--format json|csv]
///            [--replicates N] [--seed S] [--trace]
///   validate --scenario <path>
///   floors   --config <path>
/// Exit codes: 0 success, 1 validation or parse failure, 2 I/O failure.
/// Replicate i runs with seed S + i; --trace streams event lines to stderr.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace airstack::cli
