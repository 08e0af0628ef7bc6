#include "ancilla/cli.hpp"

int main(int argc, char** argv) { return ancilla::cli::run_main(argc, argv); }
