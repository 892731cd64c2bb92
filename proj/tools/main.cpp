#include "purelocus/cli.hpp"

int main(int argc, char** argv) { return purelocus::run_cli(argc, argv); }
