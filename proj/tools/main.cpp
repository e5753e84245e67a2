#include "splitring/cli.hpp"

int main(int argc, char** argv) { return splitring::run_cli(argc, argv); }
