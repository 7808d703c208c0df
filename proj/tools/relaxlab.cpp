#include "relaxlab/cli_reports.hpp"

#include <iostream>

int main(int argc, char **argv) { return relaxlab::run_cli(argc, argv, std::cout, std::cerr); }
