#include "adjdyn/cli.hpp"

int main(int argc, char** argv) { return adjdyn::cli::main(argc, argv); }
