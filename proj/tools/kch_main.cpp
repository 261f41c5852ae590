#include "kch/cli/cli.hpp"

int main(int argc, char **argv) { return kch::cli::run(argc, argv); }
