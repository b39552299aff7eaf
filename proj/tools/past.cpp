// Copyright (c) past contributors.
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "past/cli/commands.hpp"

int main(int argc, char** argv) { return past::run_cli(argc, argv, std::cout, std::cerr); }
