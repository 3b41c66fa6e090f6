// Copyright 2026 The cswap-sim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cswap/states.hpp"

namespace cswap {

enum class OutputFormat { Json, Csv };

struct RunConfig {
    StateSpec test;
    std::optional<StateSpec> copy; // defaults to test
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string output_path; // empty = stdout
    OutputFormat format = OutputFormat::Json;
};

struct SweepConfig {
    std::string family; // unbalanced_ghz, unbalanced_w, unequal_ghz,
                        // unequal_w, corrupted_ghz, corrupted_w
    std::vector<std::uint32_t> n_values;
    std::vector<double> parameter_grid;
    bool include_simulation = false;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
};

// Entry point behind the `cswap` binary; returns the process exit status.
int run_cli(int argc, const char *const *argv);

} // namespace cswap
