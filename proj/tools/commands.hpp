// SPDX-License-Identifier: Apache-2.0
//
// bendbeam: near-field bending beams and physical layer security
// Copyright (C) 2026 The bendbeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BENDBEAM_TOOLS_COMMANDS_HPP
#define BENDBEAM_TOOLS_COMMANDS_HPP

#include "scene_config.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bendbeam::cli
{
    struct RunOptions
    {
        std::filesystem::path out_dir = ".";
        unsigned threads = 0; // 0: machine parallelism
    };

    // Runs one subcommand, writing artifacts under options.out_dir and a
    // human-readable summary to log. Returns the files written.
    std::vector<std::filesystem::path> run_command(std::string_view command, const SceneConfig &config,
                                                   const RunOptions &options, std::ostream &log);

    // Header comments shared by every artifact; enough to rerun the command.
    std::vector<std::string> provenance(std::string_view command, const SceneConfig &config);

    enum exit_code : int
    {
        exit_ok = 0,
        exit_failure = 1,
        exit_config = 2,
        exit_domain = 3
    };

    // Whole command line: parse, run, map exceptions onto exit codes.
    int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err);
}

#endif
