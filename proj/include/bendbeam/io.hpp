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

#ifndef BENDBEAM_IO_HPP
#define BENDBEAM_IO_HPP

#include "pls.hpp"
#include "propagation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bendbeam::io
{
    // Shortest round-trip representation; locale independent.
    inline std::string format(double v)
    {
        std::array<char, 32> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        return std::string(buf.data(), res.ptr);
    }

    inline void write_comments(std::ostream &os, const std::vector<std::string> &comments)
    {
        for (const auto &c : comments)
            os << "# " << c << '\n';
    }

    // CSV: x,z,re,im,power_density. Invalid samples are skipped and counted in a comment.
    inline void write_field_map_csv(std::ostream &os, const FieldMap &map, const std::vector<std::string> &comments)
    {
        write_comments(os, comments);
        const auto invalid = static_cast<std::size_t>(std::count(map.valid.begin(), map.valid.end(), 0));
        os << "# invalid_samples=" << invalid << '\n';
        os << "x,z,re,im,power_density\n";
        for (std::size_t iz = 0; iz < map.grid.nz; ++iz)
            for (std::size_t ix = 0; ix < map.grid.nx; ++ix)
            {
                const std::size_t i = map.index(ix, iz);
                if (!map.valid[i])
                    continue;
                os << format(map.grid.x(ix)) << ',' << format(map.grid.z(iz)) << ',' << format(map.values[i].real())
                   << ',' << format(map.values[i].imag()) << ',' << format(map.power[i]) << '\n';
            }
    }

    // Log-scaled power, dynamic_range_db below the map maximum mapped onto 0..65535.
    inline std::vector<std::uint16_t> power_levels(const FieldMap &map, double dynamic_range_db = 60.0)
    {
        double peak = 0.0;
        for (std::size_t i = 0; i < map.power.size(); ++i)
            if (map.valid[i])
                peak = std::max(peak, map.power[i]);

        std::vector<std::uint16_t> levels(map.power.size(), 0);
        if (peak <= 0.0)
            return levels;
        for (std::size_t i = 0; i < map.power.size(); ++i)
        {
            if (!map.valid[i] || map.power[i] <= 0.0)
                continue;
            const double db = 10.0 * std::log10(map.power[i] / peak);
            const double t = std::clamp((db + dynamic_range_db) / dynamic_range_db, 0.0, 1.0);
            levels[i] = static_cast<std::uint16_t>(std::lround(t * 65535.0));
        }
        return levels;
    }

    // Linear map of S in [-S_max, S_max] onto 0..65535; 32768 is S = 0.
    inline std::vector<std::uint16_t> secrecy_levels(const SecrecyMap &map)
    {
        std::vector<std::uint16_t> levels(map.secrecy.size(), 0);
        for (std::size_t i = 0; i < levels.size(); ++i)
        {
            if (!map.valid[i])
                continue;
            const double t = std::clamp(0.5 * (map.secrecy[i] / map.secrecy_max + 1.0), 0.0, 1.0);
            levels[i] = static_cast<std::uint16_t>(std::lround(t * 65535.0));
        }
        return levels;
    }

    // Plain (ASCII) PGM, one image row per z sample, z_min first.
    inline void write_pgm(std::ostream &os, std::size_t width, std::size_t height,
                          const std::vector<std::uint16_t> &levels, const std::vector<std::string> &comments)
    {
        os << "P2\n";
        write_comments(os, comments);
        os << width << ' ' << height << "\n65535\n";
        for (std::size_t row = 0; row < height; ++row)
        {
            for (std::size_t col = 0; col < width; ++col)
            {
                if (col)
                    os << ' ';
                os << levels[row * width + col];
            }
            os << '\n';
        }
    }

    inline void write_lobe_csv(std::ostream &os, const std::vector<LobeSample> &lobe,
                               const std::optional<TrajectoryParams> &trajectory,
                               const std::vector<std::string> &comments)
    {
        write_comments(os, comments);
        os << "z,x_peak";
        if (trajectory)
            os << ",x_caustic";
        os << '\n';
        for (const auto &s : lobe)
        {
            os << format(s.z) << ',' << format(s.x_peak);
            if (trajectory)
                os << ',' << format(caustic_x(*trajectory, s.z));
            os << '\n';
        }
    }

    inline void write_secrecy_map_csv(std::ostream &os, const SecrecyMap &map, const std::vector<std::string> &comments)
    {
        write_comments(os, comments);
        os << "# secrecy_max=" << format(map.secrecy_max) << '\n';
        os << "x,z,S\n";
        for (std::size_t iz = 0; iz < map.grid.nz; ++iz)
            for (std::size_t ix = 0; ix < map.grid.nx; ++ix)
            {
                const std::size_t i = iz * map.grid.nx + ix;
                if (!map.valid[i])
                    continue;
                os << format(map.grid.x(ix)) << ',' << format(map.grid.z(iz)) << ',' << format(map.secrecy[i])
                   << '\n';
            }
    }

    inline double to_db(double ratio) { return 10.0 * std::log10(ratio); }

    inline void write_los_csv(std::ostream &os, const std::vector<LosSample> &samples,
                              const std::vector<std::string> &comments)
    {
        write_comments(os, comments);
        os << "z_eve,power_ratio_db,S\n";
        for (const auto &s : samples)
            os << format(s.z_eve) << ',' << format(to_db(s.power_ratio)) << ',' << format(s.secrecy) << '\n';
    }

    // One row per curvature; failed designs carry status=error and their diagnostic.
    inline void write_beta_sweep_csv(std::ostream &os, const std::vector<BetaSweepRow> &rows,
                                     const std::vector<std::string> &comments)
    {
        write_comments(os, comments);
        os << "beta,p_rx_density,x0,z0,active_elements,status\n";
        for (const auto &r : rows)
        {
            os << format(r.beta) << ',';
            if (r.trajectory)
                os << format(r.p_rx_density) << ',' << format(r.trajectory->x0) << ',' << format(r.trajectory->z0)
                   << ',' << r.active_elements << ",ok\n";
            else
                os << ",,,,\"error: " << r.error << "\"\n";
        }
    }

    // Long-form S(beta, z_eve).
    inline void write_beta_secrecy_csv(std::ostream &os, const std::vector<BetaSweepRow> &rows,
                                       const std::vector<std::string> &comments)
    {
        write_comments(os, comments);
        os << "beta,z_eve,S\n";
        for (const auto &r : rows)
            for (const auto &s : r.los)
                os << format(r.beta) << ',' << format(s.z_eve) << ',' << format(s.secrecy) << '\n';
    }

    struct CoverageRow
    {
        double axis_value = 0.0; // radius or beta
        const CoverageResult *result = nullptr;
        std::string error;
    };

    // Columns: <axis>,M,probability,stderr,n_samples,seed
    inline void write_coverage_csv(std::ostream &os, std::string_view axis, const std::vector<CoverageRow> &rows,
                                   const std::vector<std::string> &comments)
    {
        write_comments(os, comments);
        os << axis << ",M,probability,stderr,n_samples,seed\n";
        for (const auto &r : rows)
        {
            if (!r.result)
            {
                os << "# " << axis << '=' << format(r.axis_value) << " error: " << r.error << '\n';
                continue;
            }
            const auto &c = *r.result;
            for (std::size_t m = 0; m < c.thresholds.size(); ++m)
                os << format(r.axis_value) << ',' << format(c.thresholds[m]) << ',' << format(c.probabilities[m])
                   << ',' << format(c.standard_errors[m]) << ',' << c.n_samples << ',' << c.seed << '\n';
        }
    }
}

#endif
