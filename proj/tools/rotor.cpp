// Entry point of the rotor command-line tool.
#include "rotor/cli.hpp"

int main(int argc, char** argv) { return rotor::run_cli(argc, argv); }
