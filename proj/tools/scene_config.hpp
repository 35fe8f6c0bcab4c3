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

#ifndef BENDBEAM_TOOLS_SCENE_CONFIG_HPP
#define BENDBEAM_TOOLS_SCENE_CONFIG_HPP

#include <bendbeam/bendbeam.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bendbeam::cli
{
    struct CarrierSpec
    {
        std::optional<double> frequency_hz;
        std::optional<double> wavelength_m = 2e-3;
    };

    struct ArraySpec
    {
        std::size_t n_elements = 1000;
        double spacing_m = 1e-3;
        double element_power_w = 1e-3;
        double element_gain = 1.0;
        std::string pattern = "omnidirectional";
        std::string power_mode = "per_element"; // or "total"
    };

    struct PlsSpec
    {
        std::vector<double> snr_db{10.0};
        std::vector<double> thresholds{0.5, 0.9, 0.99};
        std::vector<double> radii{1.0};
        std::size_t samples = 10000;
        std::uint64_t seed = 1;
        double z_floor = 0.05;
        std::string axis = "radius"; // coverage abscissa: "radius" or "beta"
    };

    struct LosSpec
    {
        double z_min = 0.1;
        double z_max = 10.0;
        std::size_t count = 100;
    };

    struct SweepSpec
    {
        double beta_min = 0.001;
        double beta_max = 0.02;
        double beta_step = 1e-4;
    };

    struct FieldMapSpec
    {
        bool secrecy_map = false;
        double dynamic_range_db = 60.0;
    };

    // One scene: everything a subcommand needs. Lengths in m, frequency in Hz, power in W.
    struct SceneConfig
    {
        std::string name = "scene";
        std::string command; // default subcommand, may be empty
        CarrierSpec carrier;
        ArraySpec array;
        BeamSpec beam = Broadside{};
        RxLocation rx{0.0, 8.0};
        PlsSpec pls;
        LosSpec los;
        SweepSpec sweep;
        ObservationGrid grid;
        FieldMapSpec field_map;
    };

    inline const std::vector<std::string> &command_names()
    {
        static const std::vector<std::string> names{"design", "field-map", "los", "beta-sweep", "coverage"};
        return names;
    }

    // Unknown keys, wrong types and out-of-range values raise config_error.
    SceneConfig parse_config(const nlohmann::json &doc);
    SceneConfig parse_config_text(std::string_view text);

    // Complete, normalized form; parse_config(to_json(c)) reproduces c.
    nlohmann::json to_json(const SceneConfig &config);

    std::vector<std::string> preset_names();
    SceneConfig preset(std::string_view name);

    CarrierConfig make_carrier(const SceneConfig &config);
    UlaArray make_array(const SceneConfig &config);
    PowerMode make_power_mode(const SceneConfig &config);
    SecrecyScene make_scene(const SceneConfig &config, double snr_db);

    // Samples z_min..z_max inclusive, endpoint weighted so the endpoints are exact.
    std::vector<double> los_samples(const LosSpec &los);
}

#endif
