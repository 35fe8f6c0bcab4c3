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

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace bendbeam::cli
{
    namespace fs = std::filesystem;
    using io::format;

    namespace
    {
        struct Writer
        {
            const RunOptions &options;
            const SceneConfig &config;
            std::vector<fs::path> files;

            template <class Fn>
            void write(const std::string &suffix, Fn &&fn)
            {
                fs::create_directories(options.out_dir);
                const fs::path path = options.out_dir / (config.name + suffix);
                std::ofstream os(path, std::ios::binary);
                if (!os)
                    throw std::runtime_error("cannot open " + path.string() + " for writing");
                fn(os);
                if (!os)
                    throw std::runtime_error("failed writing " + path.string());
                files.push_back(path);
            }
        };

        std::string describe(const TrajectoryParams &p, const UlaArray &array)
        {
            if (p.is_broadside())
                return "broadside (phi = 0)";
            std::ostringstream s;
            s << "beta=" << format(p.beta) << " x0=" << format(p.x0) << " z0=" << format(p.z0)
              << " x0C=" << format(p.x0C) << " x0T=" << format(outer_ray_abscissa(p, array));
            return s.str();
        }

        const TargetedBending &require_targeted(const SceneConfig &c, std::string_view command)
        {
            const auto *t = std::get_if<TargetedBending>(&c.beam);
            if (!t)
                throw config_error(std::string(command) +
                                   " needs a receiver-targeted bending beam (beam.mode = bending with x0C)");
            return *t;
        }

        void cmd_design(const SceneConfig &c, Writer &w, std::ostream &log)
        {
            const auto carrier = make_carrier(c);
            const auto array = make_array(c);
            const auto beam = design_beam(c.beam, c.rx, array, carrier, make_power_mode(c));
            const auto &ex = beam.excitation;

            log << "trajectory: " << describe(beam.trajectory, array) << '\n';
            log << "x0=" << format(beam.trajectory.x0) << '\n';
            log << "z0=" << format(beam.trajectory.z0) << '\n';
            log << "x0C=" << format(beam.trajectory.x0C) << '\n';
            log << "x0T=" << format(outer_ray_abscissa(beam.trajectory, array)) << '\n';
            log << "active_elements=" << ex.active_count() << '\n';

            auto comments = provenance("design", c);
            comments.push_back("trajectory " + describe(beam.trajectory, array));
            w.write("_phases.csv", [&](std::ostream &os) {
                io::write_comments(os, comments);
                os << "n,x,phase_rad,active,weight_re,weight_im\n";
                for (std::size_t i = 0; i < ex.weights.size(); ++i)
                {
                    os << i + 1 << ',' << format(ex.positions[i]) << ',';
                    if (ex.active_mask[i])
                        os << format(phase_profile(beam.trajectory, carrier, ex.positions[i]));
                    os << ',' << (ex.active_mask[i] ? 1 : 0) << ',' << format(ex.weights[i].real()) << ','
                       << format(ex.weights[i].imag()) << '\n';
                }
            });
        }

        void cmd_field_map(const SceneConfig &c, const RunOptions &opt, Writer &w, std::ostream &log)
        {
            const auto scene = make_scene(c, c.pls.snr_db.front());
            const auto beam = design_beam(scene);
            const double fraunhofer = fraunhofer_distance(beam.excitation, scene.carrier);

            log << "trajectory: " << describe(beam.trajectory, scene.array) << '\n';
            log << "active_elements=" << beam.excitation.active_count() << '\n';
            log << "fraunhofer_distance_m=" << format(fraunhofer) << '\n';

            const auto map = field_map(beam.excitation, scene.carrier, c.grid, opt.threads);
            const auto lobe = trace_main_lobe(map);

            auto comments = provenance("field-map", c);
            comments.push_back("trajectory " + describe(beam.trajectory, scene.array));
            comments.push_back("fraunhofer_distance_m=" + format(fraunhofer));

            w.write("_field.csv", [&](std::ostream &os) { io::write_field_map_csv(os, map, comments); });
            w.write("_field.pgm", [&](std::ostream &os) {
                auto pgm = comments;
                pgm.push_back("power density, log scale, " + format(c.field_map.dynamic_range_db) +
                              " dB below peak; rows z_min..z_max, columns x_min..x_max");
                io::write_pgm(os, c.grid.nx, c.grid.nz, io::power_levels(map, c.field_map.dynamic_range_db), pgm);
            });
            std::optional<TrajectoryParams> trajectory;
            if (!beam.trajectory.is_broadside())
                trajectory = beam.trajectory;
            w.write("_lobe.csv", [&](std::ostream &os) { io::write_lobe_csv(os, lobe, trajectory, comments); });

            if (c.field_map.secrecy_map)
            {
                const auto smap = secrecy_map(map, receiver_density(beam, scene), scene);
                auto sc = comments;
                sc.push_back("snr_db=" + format(scene.snr_rx_db));
                w.write("_secrecy.csv", [&](std::ostream &os) { io::write_secrecy_map_csv(os, smap, sc); });
                w.write("_secrecy.pgm", [&](std::ostream &os) {
                    auto pgm = sc;
                    pgm.push_back("secrecy rate, linear, -S_max..S_max; 32768 is S = 0");
                    io::write_pgm(os, c.grid.nx, c.grid.nz, io::secrecy_levels(smap), pgm);
                });
            }
        }

        void cmd_los(const SceneConfig &c, const RunOptions &opt, Writer &w, std::ostream &log)
        {
            const auto z = los_samples(c.los);
            for (double snr : c.pls.snr_db)
            {
                const auto scene = make_scene(c, snr);
                const auto samples = los_sweep(scene, z, opt.threads);
                auto comments = provenance("los", c);
                comments.push_back("snr_db=" + format(snr) + " S_max=" + format(secrecy_rate_max(snr)));
                w.write("_los_snr" + format(snr) + "db.csv",
                        [&](std::ostream &os) { io::write_los_csv(os, samples, comments); });
                log << "snr_db=" << format(snr) << " S_max=" << format(secrecy_rate_max(snr)) << '\n';
            }
        }

        void cmd_beta_sweep(const SceneConfig &c, const RunOptions &opt, Writer &w, std::ostream &log)
        {
            const auto &target = require_targeted(c, "beta-sweep");
            const auto scene = make_scene(c, c.pls.snr_db.front());
            const auto betas = beta_range(c.sweep.beta_min, c.sweep.beta_max, c.sweep.beta_step);
            const auto rows = beta_sweep(scene, target.x0C, betas, los_samples(c.los), opt.threads);

            auto comments = provenance("beta-sweep", c);
            comments.push_back("x0C=" + format(target.x0C) + " snr_db=" + format(scene.snr_rx_db));
            w.write("_beta_prx.csv", [&](std::ostream &os) { io::write_beta_sweep_csv(os, rows, comments); });
            w.write("_beta_secrecy.csv", [&](std::ostream &os) { io::write_beta_secrecy_csv(os, rows, comments); });

            const BetaSweepRow *best = nullptr;
            std::size_t failed = 0;
            for (const auto &r : rows)
            {
                if (!r.trajectory)
                {
                    ++failed;
                    continue;
                }
                if (!best || r.p_rx_density > best->p_rx_density)
                    best = &r;
            }
            if (best)
                log << "beta_at_max_p_rx=" << format(best->beta) << " p_rx_density=" << format(best->p_rx_density)
                    << '\n';
            log << "failed_designs=" << failed << '\n';
        }

        void cmd_coverage(const SceneConfig &c, const RunOptions &opt, Writer &w, std::ostream &log)
        {
            const auto scene = make_scene(c, c.pls.snr_db.front());
            auto comments = provenance("coverage", c);
            comments.push_back("snr_db=" + format(scene.snr_rx_db));

            std::vector<CoverageResult> results;
            std::vector<io::CoverageRow> rows;
            if (c.pls.axis == "radius")
            {
                results.reserve(c.pls.radii.size());
                for (double radius : c.pls.radii)
                {
                    const DiskEveModel eve{c.rx, radius, c.pls.samples, c.pls.seed, c.pls.z_floor};
                    results.push_back(disk_coverage(scene, eve, c.pls.thresholds, opt.threads));
                }
                for (std::size_t i = 0; i < results.size(); ++i)
                    rows.push_back({c.pls.radii[i], &results[i], {}});
            }
            else
            {
                const auto &target = require_targeted(c, "coverage vs beta");
                const auto betas = beta_range(c.sweep.beta_min, c.sweep.beta_max, c.sweep.beta_step);
                const DiskEveModel eve{c.rx, c.pls.radii.front(), c.pls.samples, c.pls.seed, c.pls.z_floor};
                comments.push_back("x0C=" + format(target.x0C) + " radius_m=" + format(eve.radius_m));
                const auto sweep = coverage_vs_beta(scene, target.x0C, betas, eve, c.pls.thresholds, opt.threads);
                results.reserve(sweep.size());
                for (const auto &s : sweep)
                    results.push_back(s.coverage.value_or(CoverageResult{}));
                for (std::size_t i = 0; i < sweep.size(); ++i)
                    rows.push_back({sweep[i].beta, sweep[i].coverage ? &results[i] : nullptr, sweep[i].error});
            }

            std::size_t resampled = 0;
            for (const auto &r : results)
                resampled += r.resampled;
            comments.push_back("resampled=" + std::to_string(resampled));
            const std::string axis = c.pls.axis == "radius" ? "radius_m" : "beta";
            w.write("_coverage.csv", [&](std::ostream &os) { io::write_coverage_csv(os, axis, rows, comments); });
            log << "coverage rows=" << rows.size() << " samples=" << c.pls.samples << " seed=" << c.pls.seed
                << " resampled=" << resampled << '\n';
        }
    }

    std::vector<std::string> provenance(std::string_view command, const SceneConfig &config)
    {
        return {std::string("bendbeam ") + BENDBEAM_VERSION, "command=" + std::string(command),
                "config=" + to_json(config).dump()};
    }

    std::vector<fs::path> run_command(std::string_view command, const SceneConfig &config, const RunOptions &options,
                                      std::ostream &log)
    {
        Writer w{options, config, {}};
        if (command == "design")
            cmd_design(config, w, log);
        else if (command == "field-map")
            cmd_field_map(config, options, w, log);
        else if (command == "los")
            cmd_los(config, options, w, log);
        else if (command == "beta-sweep")
            cmd_beta_sweep(config, options, w, log);
        else if (command == "coverage")
            cmd_coverage(config, options, w, log);
        else
            throw config_error("unknown subcommand '" + std::string(command) + "'");
        for (const auto &f : w.files)
            log << "wrote " << f.string() << '\n';
        return w.files;
    }

    namespace
    {
        std::string quoted(std::string_view s)
        {
            std::string out = "\"";
            for (char ch : s)
            {
                if (ch == '"' || ch == '\\')
                    out += '\\';
                out += ch == '\n' ? ' ' : ch;
            }
            return out + '"';
        }

        int report(std::ostream &err, std::string_view kind, int code, std::string_view message)
        {
            err << "error kind=" << kind << " exit=" << code << " message=" << quoted(message) << '\n';
            return code;
        }

        std::string read_file(const std::string &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw config_error("cannot read config file '" + path + "'");
            std::ostringstream s;
            s << in.rdbuf();
            return s.str();
        }
    }

    int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Near-field bending beams: trajectory design, propagation and physical layer security"};
        std::string command;
        std::string config_path;
        std::string preset_name;
        std::string out_dir = ".";
        unsigned threads = 0;
        std::uint64_t seed = 0;
        bool list = false;
        bool print_config = false;

        std::vector<std::string> allowed = command_names();
        app.add_option("command", command, "Subcommand: design | field-map | los | beta-sweep | coverage")
            ->check(CLI::IsMember(allowed));
        auto *config_opt = app.add_option("--config", config_path, "Scene configuration (JSON)");
        auto *preset_opt = app.add_option("--preset", preset_name, "Named figure preset (see --list-presets)");
        config_opt->excludes(preset_opt);
        app.add_option("--out", out_dir, "Output directory");
        app.add_option("--threads", threads, "Worker threads (0 = machine parallelism)");
        auto *seed_opt = app.add_option("--seed", seed, "Monte-Carlo seed (overrides the config)");
        app.add_flag("--list-presets", list, "List preset names and exit");
        app.add_flag("--print-config", print_config, "Print the resolved configuration and exit");

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError &e)
        {
            return report(err, "config", exit_config, e.what());
        }

        try
        {
            if (list)
            {
                for (const auto &n : preset_names())
                    out << n << '\n';
                return exit_ok;
            }
            SceneConfig config;
            if (!preset_name.empty())
                config = preset(preset_name);
            else if (!config_path.empty())
                config = parse_config_text(read_file(config_path));
            else
                throw config_error("give --config <path> or --preset <name>");
            if (seed_opt->count() > 0)
                config.pls.seed = seed;
            if (print_config)
            {
                out << to_json(config).dump(2) << '\n';
                return exit_ok;
            }
            if (command.empty())
                command = config.command;
            if (command.empty())
                throw config_error("no subcommand given and the configuration names none");

            run_command(command, config, RunOptions{out_dir, threads}, out);
            return exit_ok;
        }
        catch (const config_error &e)
        {
            return report(err, "config", exit_config, e.what());
        }
        catch (const domain_error &e)
        {
            return report(err, "domain", exit_domain, e.what());
        }
        catch (const std::exception &e)
        {
            return report(err, "runtime", exit_failure, e.what());
        }
    }
}
