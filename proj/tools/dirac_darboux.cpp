#include "dirac_darboux/cli.hpp"

int main(int argc, char** argv) { return dd::cli::run(argc, argv); }
