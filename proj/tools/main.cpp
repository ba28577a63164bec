#include "neil/cli.hpp"

int main(int argc, char** argv) { return neil::cli::main_entry(argc, argv); }
