#include "cli.hpp"

int main(int argc, char** argv) { return kipas::cli::main(argc, argv); }
