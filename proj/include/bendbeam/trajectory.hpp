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

#ifndef BENDBEAM_TRAJECTORY_HPP
#define BENDBEAM_TRAJECTORY_HPP

#include "array.hpp"
#include "carrier.hpp"
#include "error.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bendbeam
{
    // Parabolic caustic x_c = x0 + beta (z_c - z0)^2.
    //
    // x0C is the crossing of the array axis (z = 0). It is kept as a separate
    // member rather than recomputed so that a caller-chosen crossing (inverse
    // design) stays exact; it always equals x0 + beta z0^2 up to rounding.
    // beta == 0 is the broadside beam: flat phase, no caustic.
    struct TrajectoryParams
    {
        double beta = 0.0; // 1/m
        double x0 = 0.0;   // m
        double z0 = 0.0;   // m
        double x0C = 0.0;  // m

        static TrajectoryParams from_vertex(double beta, double x0, double z0)
        {
            detail::require(std::isfinite(beta) && std::isfinite(x0) && std::isfinite(z0),
                            "trajectory parameters must be finite");
            detail::require(beta == 0.0 || z0 > 0.0, "trajectory vertex must lie in front of the array (z0 > 0)");
            return {beta, x0, z0, x0 + beta * z0 * z0};
        }

        static TrajectoryParams broadside() { return {}; }

        bool is_broadside() const { return beta == 0.0; }

        // Same trajectory reflected about x = 0.
        TrajectoryParams mirrored() const { return {-beta, -x0, z0, -x0C}; }
    };

    // Abscissa where the outermost ray leaves the aperture: -L/2 for beta > 0, +L/2 for beta < 0.
    inline double outer_ray_abscissa(const TrajectoryParams &params, const UlaArray &array)
    {
        const double half = 0.5 * array.length();
        return params.beta < 0.0 ? half : -half;
    }

    inline double caustic_x(const TrajectoryParams &params, double z)
    {
        const double dz = z - params.z0;
        return params.x0 + params.beta * dz * dz;
    }

    namespace detail
    {
        // Radicand z0^2 + (x0 - x)/beta written as (x0C - x)/beta, which is
        // exactly zero at x = x0C. Only called with beta > 0.
        inline double phase_radicand(const TrajectoryParams &p, double x)
        {
            const double slack = 1e-12 * std::max(1.0, std::abs(p.x0C));
            if (!(x <= p.x0C + slack))
                throw domain_error("phase profile is complex-valued for x = " + std::to_string(x) +
                                   " beyond the caustic crossing x0C = " + std::to_string(p.x0C));
            return std::max(0.0, (p.x0C - x) / p.beta);
        }
    }

    // Input phase that bends the main lobe onto the caustic:
    //   phi(x) = 2 beta k z0 x + (4/3) beta^2 k (z0^2 + (x0 - x)/beta)^(3/2)
    // Real-valued for x <= x0C (beta > 0). Negative beta is evaluated on the
    // reflected geometry, so phi_{-beta}(x) == phi_{beta}(-x) bit-for-bit.
    inline double phase_profile(const TrajectoryParams &params, const CarrierConfig &carrier, double x)
    {
        if (params.is_broadside())
            return 0.0;
        if (params.beta < 0.0)
            return phase_profile(params.mirrored(), carrier, -x);

        const double b = params.beta;
        const double k = carrier.wavenumber;
        const double r = detail::phase_radicand(params, x);
        return 2.0 * b * k * params.z0 * x + (4.0 / 3.0) * b * b * k * r * std::sqrt(r);
    }

    // d phi / dx = 2 beta k (z0 - sqrt(radicand)); the launch slope of the local ray.
    inline double phase_slope(const TrajectoryParams &params, const CarrierConfig &carrier, double x)
    {
        if (params.is_broadside())
            return 0.0;
        if (params.beta < 0.0)
            return -phase_slope(params.mirrored(), carrier, -x);

        const double r = detail::phase_radicand(params, x);
        return 2.0 * params.beta * carrier.wavenumber * (params.z0 - std::sqrt(r));
    }

    // Inverse design: the parabola through (x_rx, z_rx) that crosses z = 0 at x0C.
    //
    // Subtracting the two pass-through conditions leaves an equation linear in
    // z0, so the vertex is unique for a given (beta, x0C).
    inline TrajectoryParams design_from_rx(const RxLocation &rx, double beta, double x0C)
    {
        if (!(std::isfinite(rx.x) && std::isfinite(rx.z) && std::isfinite(beta) && std::isfinite(x0C)))
            throw domain_error("design_from_rx: non-finite input");
        if (beta == 0.0)
            throw domain_error("beta = 0 has no caustic; use the broadside (phi = 0) beam instead");
        if (!(rx.z > 0.0))
            throw domain_error("receiver must lie in front of the array (z_rx > 0)");

        const double zz = rx.z * rx.z * beta;
        const double x0 = (2.0 * x0C * (rx.x + zz) - x0C * x0C - (rx.x - zz) * (rx.x - zz)) / (4.0 * zz);
        const double z0 = (zz + x0C - rx.x) / (2.0 * rx.z * beta);

        if (!(z0 > 0.0))
            throw domain_error("design_from_rx: vertex z0 = " + std::to_string(z0) +
                               " lies behind the array; the requested (beta, x0C) cannot bend onto the receiver");
        return {beta, x0, z0, x0C};
    }

    // Elements that may be powered: between the outer ray and the caustic
    // crossing, clamped to the physical aperture.
    inline Window active_window(const TrajectoryParams &params, const UlaArray &array)
    {
        const double half = 0.5 * array.length();
        if (params.is_broadside())
            return {-half, half};

        if (params.beta > 0.0)
        {
            if (!(params.x0C > -half))
                throw domain_error("active window is empty: x0C = " + std::to_string(params.x0C) +
                                   " lies at or beyond the aperture edge -L/2");
            return {-half, std::min(params.x0C, half)};
        }
        if (!(params.x0C < half))
            throw domain_error("active window is empty: x0C = " + std::to_string(params.x0C) +
                               " lies at or beyond the aperture edge +L/2");
        return {std::max(params.x0C, -half), half};
    }

    // Drive the array so its main lobe follows the trajectory.
    inline ArrayExcitation excite(const TrajectoryParams &params, const UlaArray &array, const CarrierConfig &carrier,
                                  PowerMode mode = PowerMode::per_element)
    {
        return build_excitation(
            array, [&](double x) { return phase_profile(params, carrier, x); }, active_window(params, array), mode);
    }
}

#endif
