#include "convexo/cli.hpp"

int main(int argc, char** argv) { return convexo::cli::run(argc, argv); }
