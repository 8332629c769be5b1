#include "exclt/cli.hpp"

int main(int argc, char** argv) { return exclt::cli::main(argc, argv); }
