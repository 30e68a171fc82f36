// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "bc1/cli.hpp"

int main(int argc, char** argv) { return bc1::run_cli(argc, argv, std::cout, std::cerr); }
