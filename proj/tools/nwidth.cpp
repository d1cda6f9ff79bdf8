// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "nwidth/cli.hpp"

int main(int argc, char** argv) { return nwidth::parse_and_dispatch(argc, argv, std::cout, std::cerr); }
