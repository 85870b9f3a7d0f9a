#include "idealpower/cli.hpp"

int main(int argc, char** argv) { return idealpower::cli::run(argc, argv); }
