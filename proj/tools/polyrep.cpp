#include "polyrep/cli.hpp"

int main(int argc, char** argv) { return polyrep::cli::run_cli(argc, argv); }
