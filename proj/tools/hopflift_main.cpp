// Copyright 2026 The hopflift Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopflift/cli/cli.hpp"

int main(int argc, char** argv) { return hopflift::cli::run(argc, argv); }
