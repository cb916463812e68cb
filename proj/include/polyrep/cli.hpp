#pragma once

namespace polyrep::cli {

/// Entry point for the command-line tool. Exit codes: 0 success,
/// 1 verification or cross-check failure, 2 usage error.
int run_cli(int argc, char** argv);

}  // namespace polyrep::cli
