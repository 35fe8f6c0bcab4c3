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

#include <algorithm>
#include <cmath>
#include <set>

namespace bendbeam::cli
{
    using nlohmann::json;

    namespace
    {
        // Reads one JSON object, tracking which keys were consumed so that
        // leftovers (typos) can be reported.
        class ObjectReader
        {
        public:
            ObjectReader(const json &obj, std::string path) : obj_(obj), path_(std::move(path))
            {
                if (!obj_.is_object())
                    throw config_error(path_ + ": expected a JSON object");
            }

            bool has(const char *key) const { return obj_.contains(key); }

            const json *raw(const char *key)
            {
                seen_.insert(key);
                const auto it = obj_.find(key);
                return it == obj_.end() ? nullptr : &*it;
            }

            void read(const char *key, double &out)
            {
                if (const json *v = raw(key))
                {
                    if (!v->is_number())
                        throw config_error(where(key) + ": expected a number");
                    out = v->get<double>();
                    if (!std::isfinite(out))
                        throw config_error(where(key) + ": must be finite");
                }
            }

            void read(const char *key, std::optional<double> &out)
            {
                if (has(key))
                {
                    double v = 0.0;
                    read(key, v);
                    out = v;
                }
            }

            void read(const char *key, std::size_t &out)
            {
                if (const json *v = raw(key))
                {
                    if (!v->is_number_integer() || v->get<long long>() < 0)
                        throw config_error(where(key) + ": expected a non-negative integer");
                    out = v->get<std::size_t>();
                }
            }

            void read(const char *key, std::uint64_t &out, int /*u64*/)
            {
                if (const json *v = raw(key))
                {
                    if (!v->is_number_unsigned())
                        throw config_error(where(key) + ": expected an unsigned 64-bit integer");
                    out = v->get<std::uint64_t>();
                }
            }

            void read(const char *key, std::string &out)
            {
                if (const json *v = raw(key))
                {
                    if (!v->is_string())
                        throw config_error(where(key) + ": expected a string");
                    out = v->get<std::string>();
                }
            }

            void read(const char *key, bool &out)
            {
                if (const json *v = raw(key))
                {
                    if (!v->is_boolean())
                        throw config_error(where(key) + ": expected true or false");
                    out = v->get<bool>();
                }
            }

            void read(const char *key, std::vector<double> &out)
            {
                if (const json *v = raw(key))
                {
                    if (!v->is_array() || v->empty())
                        throw config_error(where(key) + ": expected a non-empty array of numbers");
                    out.clear();
                    for (const auto &e : *v)
                    {
                        if (!e.is_number() || !std::isfinite(e.get<double>()))
                            throw config_error(where(key) + ": expected finite numbers");
                        out.push_back(e.get<double>());
                    }
                }
            }

            void finish() const
            {
                for (auto it = obj_.begin(); it != obj_.end(); ++it)
                    if (!seen_.count(it.key()))
                        throw config_error("unknown key '" + where(it.key().c_str()) + "'");
            }

            std::string where(const char *key) const { return path_.empty() ? key : path_ + "." + key; }

        private:
            const json &obj_;
            std::string path_;
            std::set<std::string> seen_;
        };

        template <class Fn>
        void section(ObjectReader &parent, const char *key, Fn &&fn)
        {
            if (const json *v = parent.raw(key))
            {
                ObjectReader r(*v, parent.where(key));
                fn(r);
                r.finish();
            }
        }

        BeamSpec read_beam(ObjectReader &r)
        {
            std::string mode;
            r.read("mode", mode);
            if (mode == "broadside")
                return Broadside{};
            if (mode != "bending")
                throw config_error(r.where("mode") + ": expected \"bending\" or \"broadside\"");
            if (!r.has("beta"))
                throw config_error(r.where("beta") + ": required for a bending beam");
            const bool targeted = r.has("x0C");
            const bool vertex = r.has("x0") || r.has("z0");
            if (targeted == vertex)
                throw config_error("beam: give exactly one of x0C (receiver-targeted) or x0 and z0 (vertex)");
            double beta = 0.0;
            r.read("beta", beta);
            if (targeted)
            {
                TargetedBending t{beta, 0.0};
                r.read("x0C", t.x0C);
                return t;
            }
            if (!r.has("x0") || !r.has("z0"))
                throw config_error("beam: vertex mode needs both x0 and z0");
            VertexBending v{beta, 0.0, 0.0};
            r.read("x0", v.x0);
            r.read("z0", v.z0);
            return v;
        }

        void validate(const SceneConfig &c)
        {
            try
            {
                if (c.carrier.frequency_hz.has_value() == c.carrier.wavelength_m.has_value())
                    throw config_error("carrier: give exactly one of frequency_hz or wavelength_m");
                make_carrier(c);
                make_array(c);
                make_power_mode(c);
                c.grid.validate();
            }
            catch (const domain_error &e)
            {
                throw config_error(e.what());
            }
            if (!(c.rx.z > 0.0))
                throw config_error("rx.z must be positive");
            if (c.array.pattern != "omnidirectional")
                throw config_error("array.pattern: only \"omnidirectional\" is available");
            if (!c.command.empty())
            {
                const auto &names = command_names();
                if (std::find(names.begin(), names.end(), c.command) == names.end())
                    throw config_error("command: unknown subcommand '" + c.command + "'");
            }
            for (double r : c.pls.radii)
                if (!(r > 0.0))
                    throw config_error("pls.radii must be positive");
            if (c.pls.samples < 1)
                throw config_error("pls.samples must be at least 1");
            if (c.pls.axis != "radius" && c.pls.axis != "beta")
                throw config_error("pls.axis: expected \"radius\" or \"beta\"");
            if (!(c.los.z_min > 0.0 && c.los.z_max >= c.los.z_min && c.los.count >= 1))
                throw config_error("los: need 0 < z_min <= z_max and count >= 1");
            if (!(c.sweep.beta_step > 0.0 && c.sweep.beta_min <= c.sweep.beta_max))
                throw config_error("sweep: need beta_min <= beta_max and beta_step > 0");
            if (!(c.field_map.dynamic_range_db > 0.0))
                throw config_error("field_map.dynamic_range_db must be positive");
        }
    }

    SceneConfig parse_config(const json &doc)
    {
        SceneConfig c;
        ObjectReader top(doc, "");
        top.read("name", c.name);
        top.read("command", c.command);
        section(top, "carrier", [&](ObjectReader &r) {
            c.carrier = CarrierSpec{std::nullopt, std::nullopt};
            r.read("frequency_hz", c.carrier.frequency_hz);
            r.read("wavelength_m", c.carrier.wavelength_m);
        });
        section(top, "array", [&](ObjectReader &r) {
            r.read("n_elements", c.array.n_elements);
            r.read("spacing_m", c.array.spacing_m);
            r.read("element_power_w", c.array.element_power_w);
            r.read("element_gain", c.array.element_gain);
            r.read("pattern", c.array.pattern);
            r.read("power_mode", c.array.power_mode);
        });
        section(top, "beam", [&](ObjectReader &r) { c.beam = read_beam(r); });
        section(top, "rx", [&](ObjectReader &r) {
            r.read("x", c.rx.x);
            r.read("z", c.rx.z);
        });
        section(top, "pls", [&](ObjectReader &r) {
            r.read("snr_db", c.pls.snr_db);
            r.read("thresholds", c.pls.thresholds);
            r.read("radii", c.pls.radii);
            r.read("samples", c.pls.samples);
            r.read("seed", c.pls.seed, 0);
            r.read("z_floor", c.pls.z_floor);
            r.read("axis", c.pls.axis);
        });
        section(top, "los", [&](ObjectReader &r) {
            r.read("z_min", c.los.z_min);
            r.read("z_max", c.los.z_max);
            r.read("count", c.los.count);
        });
        section(top, "sweep", [&](ObjectReader &r) {
            r.read("beta_min", c.sweep.beta_min);
            r.read("beta_max", c.sweep.beta_max);
            r.read("beta_step", c.sweep.beta_step);
        });
        section(top, "grid", [&](ObjectReader &r) {
            r.read("x_min", c.grid.x_min);
            r.read("x_max", c.grid.x_max);
            r.read("z_min", c.grid.z_min);
            r.read("z_max", c.grid.z_max);
            r.read("nx", c.grid.nx);
            r.read("nz", c.grid.nz);
        });
        section(top, "field_map", [&](ObjectReader &r) {
            r.read("secrecy_map", c.field_map.secrecy_map);
            r.read("dynamic_range_db", c.field_map.dynamic_range_db);
        });
        top.finish();
        validate(c);
        return c;
    }

    SceneConfig parse_config_text(std::string_view text)
    {
        json doc;
        try
        {
            doc = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw config_error(std::string("invalid JSON: ") + e.what());
        }
        return parse_config(doc);
    }

    json to_json(const SceneConfig &c)
    {
        json doc;
        doc["name"] = c.name;
        if (!c.command.empty())
            doc["command"] = c.command;
        if (c.carrier.frequency_hz)
            doc["carrier"]["frequency_hz"] = *c.carrier.frequency_hz;
        if (c.carrier.wavelength_m)
            doc["carrier"]["wavelength_m"] = *c.carrier.wavelength_m;
        doc["array"] = {{"n_elements", c.array.n_elements},       {"spacing_m", c.array.spacing_m},
                        {"element_power_w", c.array.element_power_w}, {"element_gain", c.array.element_gain},
                        {"pattern", c.array.pattern},             {"power_mode", c.array.power_mode}};
        if (const auto *t = std::get_if<TargetedBending>(&c.beam))
            doc["beam"] = {{"mode", "bending"}, {"beta", t->beta}, {"x0C", t->x0C}};
        else if (const auto *v = std::get_if<VertexBending>(&c.beam))
            doc["beam"] = {{"mode", "bending"}, {"beta", v->beta}, {"x0", v->x0}, {"z0", v->z0}};
        else
            doc["beam"] = {{"mode", "broadside"}};
        doc["rx"] = {{"x", c.rx.x}, {"z", c.rx.z}};
        doc["pls"] = {{"snr_db", c.pls.snr_db},   {"thresholds", c.pls.thresholds}, {"radii", c.pls.radii},
                      {"samples", c.pls.samples}, {"seed", c.pls.seed},             {"z_floor", c.pls.z_floor},
                      {"axis", c.pls.axis}};
        doc["los"] = {{"z_min", c.los.z_min}, {"z_max", c.los.z_max}, {"count", c.los.count}};
        doc["sweep"] = {
            {"beta_min", c.sweep.beta_min}, {"beta_max", c.sweep.beta_max}, {"beta_step", c.sweep.beta_step}};
        doc["grid"] = {{"x_min", c.grid.x_min}, {"x_max", c.grid.x_max}, {"z_min", c.grid.z_min},
                       {"z_max", c.grid.z_max}, {"nx", c.grid.nx},       {"nz", c.grid.nz}};
        doc["field_map"] = {{"secrecy_map", c.field_map.secrecy_map},
                            {"dynamic_range_db", c.field_map.dynamic_range_db}};
        return doc;
    }

    CarrierConfig make_carrier(const SceneConfig &c)
    {
        if (c.carrier.wavelength_m)
            return CarrierConfig::from_wavelength(*c.carrier.wavelength_m);
        if (c.carrier.frequency_hz)
            return CarrierConfig::from_frequency(*c.carrier.frequency_hz);
        throw config_error("carrier: give exactly one of frequency_hz or wavelength_m");
    }

    UlaArray make_array(const SceneConfig &c)
    {
        return UlaArray(c.array.n_elements, c.array.spacing_m, c.array.element_power_w, c.array.element_gain);
    }

    PowerMode make_power_mode(const SceneConfig &c)
    {
        if (c.array.power_mode == "per_element")
            return PowerMode::per_element;
        if (c.array.power_mode == "total")
            return PowerMode::total;
        throw config_error("array.power_mode: expected \"per_element\" or \"total\"");
    }

    SecrecyScene make_scene(const SceneConfig &c, double snr_db)
    {
        return SecrecyScene{make_carrier(c), make_array(c), c.beam, c.rx, snr_db, make_power_mode(c)};
    }

    std::vector<double> los_samples(const LosSpec &los)
    {
        if (los.count == 1)
            return {los.z_min};
        std::vector<double> z(los.count);
        const double last = static_cast<double>(los.count - 1);
        for (std::size_t i = 0; i < los.count; ++i)
        {
            const double t = static_cast<double>(i);
            z[i] = (los.z_min * (last - t) + los.z_max * t) / last;
        }
        return z;
    }
}
