#include "padic/commands.hpp"

int main(int argc, char** argv) { return padic::run_cli(argc, argv); }
