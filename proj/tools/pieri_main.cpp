#include "pieri/cli.hpp"

int main(int argc, char** argv) { return pieri::cli::main_entry(argc, argv); }
