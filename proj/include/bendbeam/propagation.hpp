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

#ifndef BENDBEAM_PROPAGATION_HPP
#define BENDBEAM_PROPAGATION_HPP

#include "array.hpp"
#include "carrier.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "parallel.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace bendbeam
{
    // Uniform rectangular sampling of the half plane z > 0.
    struct ObservationGrid
    {
        double x_min = -1.0;
        double x_max = 1.0;
        double z_min = 0.05;
        double z_max = 10.0;
        std::size_t nx = 1001; // dx = 2 mm
        std::size_t nz = 498;  // dz = 20 mm

        void validate() const
        {
            detail::require(std::isfinite(x_min) && std::isfinite(x_max) && x_min < x_max, "grid: need x_min < x_max");
            detail::require(std::isfinite(z_min) && std::isfinite(z_max) && z_min < z_max, "grid: need z_min < z_max");
            detail::require(z_min > 0.0, "grid: observation must lie in front of the array (z_min > 0)");
            detail::require(nx >= 2 && nz >= 2, "grid: need at least 2 samples per axis");
        }

        // Endpoint-weighted form keeps a grid with x_min == -x_max exactly symmetric.
        double x(std::size_t i) const { return lerp(x_min, x_max, i, nx); }
        double z(std::size_t j) const { return lerp(z_min, z_max, j, nz); }

        std::size_t size() const { return nx * nz; }

    private:
        static double lerp(double a, double b, std::size_t i, std::size_t n)
        {
            const double last = static_cast<double>(n - 1);
            const double t = static_cast<double>(i);
            return (a * (last - t) + b * t) / last;
        }
    };

    // Complex field and power density sampled on a grid, stored z-outer / x-inner.
    struct FieldMap
    {
        ObservationGrid grid;
        std::vector<cplx> values;          // V/m
        std::vector<double> power;         // W/m^2
        std::vector<std::uint8_t> valid;   // 0 where the sample sits on an element

        std::size_t index(std::size_t ix, std::size_t iz) const { return iz * grid.nx + ix; }
    };

    inline double power_density(cplx field, const CarrierConfig &carrier)
    {
        return std::norm(field) / (2.0 * carrier.z0_impedance);
    }

    // sqrt(2 Z0 G U P / 4pi) e^{-jkr}/r e^{j phi}, with weight = sqrt(P) e^{j phi}.
    inline cplx element_field(const CarrierConfig &carrier, double element_x, cplx weight, Point obs,
                              double gain = 1.0, const ElementPattern &pattern = ElementPattern::omnidirectional())
    {
        const double dx = obs.x - element_x;
        const double r = std::sqrt(dx * dx + obs.z * obs.z);
        if (!(r > 0.0))
            throw domain_error("observation point coincides with the element at x = " + std::to_string(element_x));
        const double u = pattern.is_constant() ? pattern(0.0) : pattern(std::atan2(dx, obs.z));
        const double c = std::sqrt(2.0 * carrier.z0_impedance * gain * u / (4.0 * std::numbers::pi));
        return c * weight * std::polar(1.0 / r, -carrier.wavenumber * r);
    }

    namespace detail
    {
        // Active elements with the radiation constant folded into the weight.
        struct Radiators
        {
            std::vector<double> x;
            std::vector<cplx> w;
            double gain = 1.0;
            ElementPattern pattern;
            double exclusion = 0.0;
        };

        inline Radiators radiators(const ArrayExcitation &ex, const CarrierConfig &carrier)
        {
            Radiators r;
            r.gain = ex.array.element_gain();
            r.pattern = ex.array.pattern();
            r.exclusion = 0.5 * ex.array.spacing();
            const double c = std::sqrt(2.0 * carrier.z0_impedance * r.gain / (4.0 * std::numbers::pi));
            for (std::size_t i = 0; i < ex.weights.size(); ++i)
                if (ex.active_mask[i])
                {
                    r.x.push_back(ex.positions[i]);
                    r.w.push_back(c * ex.weights[i]);
                }
            return r;
        }

        // Coherent sum in element order n = 1..Nx. Returns false when the point
        // lies closer than min_distance to an active element.
        inline bool coherent_sum(const Radiators &rad, double k, Point obs, double min_distance, cplx &out)
        {
            double re = 0.0;
            double im = 0.0;
            const double z2 = obs.z * obs.z;
            const bool constant_pattern = rad.pattern.is_constant();
            for (std::size_t i = 0; i < rad.x.size(); ++i)
            {
                const double dx = obs.x - rad.x[i];
                const double r = std::sqrt(dx * dx + z2);
                if (r < min_distance || r == 0.0)
                    return false;
                double amp = 1.0 / r;
                if (!constant_pattern)
                    amp *= std::sqrt(rad.pattern(std::atan2(dx, obs.z)));
                const double s = std::sin(k * r);
                const double c = std::cos(k * r);
                // w * (c - j s) * amp
                const cplx &w = rad.w[i];
                re += amp * (w.real() * c + w.imag() * s);
                im += amp * (w.imag() * c - w.real() * s);
            }
            out = cplx(re, im);
            return true;
        }
    }

    // E_obs = sum over active elements of element_field.
    inline cplx field_at(const ArrayExcitation &ex, const CarrierConfig &carrier, Point obs)
    {
        const auto rad = detail::radiators(ex, carrier);
        cplx e;
        if (!detail::coherent_sum(rad, carrier.wavenumber, obs, 0.0, e))
            throw domain_error("observation point (" + std::to_string(obs.x) + ", " + std::to_string(obs.z) +
                               ") coincides with an active element");
        return e;
    }

    // Field at many points; parallel over points, element order fixed per point.
    inline std::vector<cplx> field_at(const ArrayExcitation &ex, const CarrierConfig &carrier,
                                      const std::vector<Point> &points, unsigned threads = 0)
    {
        const auto rad = detail::radiators(ex, carrier);
        std::vector<cplx> out(points.size());
        parallel_for(points.size(), threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                if (!detail::coherent_sum(rad, carrier.wavenumber, points[i], 0.0, out[i]))
                    throw domain_error("observation point (" + std::to_string(points[i].x) + ", " +
                                       std::to_string(points[i].z) + ") coincides with an active element");
        });
        return out;
    }

    // Dense evaluation over the grid. Rows (fixed z) are statically split
    // across threads; samples within d_x/2 of an active element are flagged
    // invalid and hold zero.
    inline FieldMap field_map(const ArrayExcitation &ex, const CarrierConfig &carrier, const ObservationGrid &grid,
                              unsigned threads = 0)
    {
        grid.validate();
        const auto rad = detail::radiators(ex, carrier);
        FieldMap map{grid, std::vector<cplx>(grid.size()), std::vector<double>(grid.size(), 0.0),
                     std::vector<std::uint8_t>(grid.size(), 0)};

        parallel_for(grid.nz, threads, [&](std::size_t z_begin, std::size_t z_end) {
            for (std::size_t iz = z_begin; iz < z_end; ++iz)
            {
                const double z = grid.z(iz);
                for (std::size_t ix = 0; ix < grid.nx; ++ix)
                {
                    const std::size_t idx = map.index(ix, iz);
                    cplx e;
                    if (detail::coherent_sum(rad, carrier.wavenumber, {grid.x(ix), z}, rad.exclusion, e))
                    {
                        map.values[idx] = e;
                        map.power[idx] = power_density(e, carrier);
                        map.valid[idx] = 1;
                    }
                }
            }
        });
        return map;
    }

    struct LobeSample
    {
        double z = 0.0;
        double x_peak = 0.0;
    };

    // Abscissa of peak power density in every z row; ties go to the smaller |x|.
    inline std::vector<LobeSample> trace_main_lobe(const FieldMap &map)
    {
        std::vector<LobeSample> lobe;
        lobe.reserve(map.grid.nz);
        for (std::size_t iz = 0; iz < map.grid.nz; ++iz)
        {
            bool found = false;
            double best_p = 0.0;
            double best_x = 0.0;
            for (std::size_t ix = 0; ix < map.grid.nx; ++ix)
            {
                const std::size_t idx = map.index(ix, iz);
                if (!map.valid[idx])
                    continue;
                const double p = map.power[idx];
                const double x = map.grid.x(ix);
                if (!found || p > best_p || (p == best_p && std::abs(x) < std::abs(best_x)))
                {
                    found = true;
                    best_p = p;
                    best_x = x;
                }
            }
            if (found)
                lobe.push_back({map.grid.z(iz), best_x});
        }
        return lobe;
    }

    // 2 L^2 / lambda for the full aperture.
    inline double fraunhofer_distance(const UlaArray &array, const CarrierConfig &carrier)
    {
        const double l = array.length();
        return 2.0 * l * l / carrier.wavelength_m;
    }

    // 2 L^2 / lambda for the powered part of the aperture.
    inline double fraunhofer_distance(const ArrayExcitation &ex, const CarrierConfig &carrier)
    {
        const double l = ex.active_length();
        return 2.0 * l * l / carrier.wavelength_m;
    }
}

#endif
