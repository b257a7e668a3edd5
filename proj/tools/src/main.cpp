#include "ebsl_cli/cli.hpp"

int main(int argc, char** argv) { return ebsl::cli::main_entry(argc, argv); }
