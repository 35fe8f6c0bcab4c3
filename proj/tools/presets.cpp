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

#include "scene_config.hpp"

#include <functional>
#include <map>

namespace bendbeam::cli
{
    namespace
    {
        SceneConfig base(std::string name, std::string command)
        {
            SceneConfig c;
            c.name = std::move(name);
            c.command = std::move(command);
            return c;
        }

        // Fig. 1: vertex-specified bend, caustic crossing at x0C = 0.17 m.
        SceneConfig fig1()
        {
            auto c = base("fig1", "field-map");
            c.beam = VertexBending{0.01, -0.08, 5.0};
            return c;
        }

        SceneConfig fig2(const std::string &name, const std::string &command, double beta)
        {
            auto c = base(name, command);
            c.beam = TargetedBending{beta, 0.0};
            return c;
        }

        SceneConfig fig3(const std::string &name, double x0C)
        {
            auto c = base(name, "beta-sweep");
            c.beam = TargetedBending{0.0041, x0C};
            c.los = {0.1, 10.0, 100};
            return c;
        }

        SceneConfig fig4(const std::string &name, const std::string &command, std::size_t n, bool bending)
        {
            auto c = base(name, command);
            c.array.n_elements = n;
            if (bending)
                c.beam = TargetedBending{0.015, 0.5};
            c.pls.snr_db = {10.0};
            c.pls.radii.clear();
            for (int i = 1; i <= 20; ++i)
                c.pls.radii.push_back(0.1 * i);
            c.field_map.secrecy_map = command == "field-map";
            return c;
        }

        SceneConfig fig5(const std::string &name, double x0C, double snr_db)
        {
            auto c = base(name, "coverage");
            c.beam = TargetedBending{0.01, x0C};
            c.pls.axis = "beta";
            c.pls.radii = {1.0};
            c.pls.snr_db = {snr_db};
            c.sweep = {0.001, 0.02, 5e-4};
            return c;
        }

        const std::map<std::string, std::function<SceneConfig()>> &registry()
        {
            static const std::map<std::string, std::function<SceneConfig()>> presets{
                {"fig1", fig1},
                {"fig2a", [] { return fig2("fig2a", "field-map", 0.005); }},
                {"fig2b", [] { return fig2("fig2b", "field-map", -0.005); }},
                {"fig2c", [] { return fig2("fig2c", "los", 0.005); }},
                {"fig2d",
                 [] {
                     auto c = fig2("fig2d", "los", 0.005);
                     c.pls.snr_db = {10.0, 20.0, 30.0};
                     return c;
                 }},
                {"fig3a", [] { return fig3("fig3a", 0.0); }},
                {"fig3a-inset", [] { return fig3("fig3a-inset", 0.0); }},
                {"fig3b", [] { return fig3("fig3b", 0.0); }},
                {"fig3c", [] { return fig3("fig3c", 0.25); }},
                {"fig3d", [] { return fig3("fig3d", 0.25); }},
                {"fig3e", [] { return fig3("fig3e", 0.5); }},
                {"fig3f", [] { return fig3("fig3f", 0.5); }},
                {"fig4a", [] { return fig4("fig4a", "field-map", 1000, true); }},
                {"fig4b", [] { return fig4("fig4b", "field-map", 1000, true); }},
                {"fig4c", [] { return fig4("fig4c", "coverage", 1000, true); }},
                {"fig4d", [] { return fig4("fig4d", "field-map", 1000, false); }},
                {"fig4e", [] { return fig4("fig4e", "field-map", 1000, false); }},
                {"fig4f", [] { return fig4("fig4f", "coverage", 1000, false); }},
                {"fig4g", [] { return fig4("fig4g", "field-map", 32, false); }},
                {"fig4h", [] { return fig4("fig4h", "field-map", 32, false); }},
                {"fig4i", [] { return fig4("fig4i", "coverage", 32, false); }},
                {"fig5a", [] { return fig5("fig5a", 0.0, 10.0); }},
                {"fig5b", [] { return fig5("fig5b", 0.0, 20.0); }},
                {"fig5c", [] { return fig5("fig5c", 0.25, 10.0); }},
                {"fig5d", [] { return fig5("fig5d", 0.25, 20.0); }},
                {"fig5e", [] { return fig5("fig5e", 0.5, 10.0); }},
                {"fig5f", [] { return fig5("fig5f", 0.5, 20.0); }},
            };
            return presets;
        }
    }

    std::vector<std::string> preset_names()
    {
        std::vector<std::string> names;
        for (const auto &[name, _] : registry())
            names.push_back(name);
        return names;
    }

    SceneConfig preset(std::string_view name)
    {
        const auto it = registry().find(std::string(name));
        if (it == registry().end())
            throw config_error("unknown preset '" + std::string(name) + "'");
        return it->second();
    }
}
