// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return ormt::cli::run(argc, argv, std::cout, std::cerr); }
