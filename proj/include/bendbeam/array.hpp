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

#ifndef BENDBEAM_ARRAY_HPP
#define BENDBEAM_ARRAY_HPP

#include "error.hpp"

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bendbeam
{
    using cplx = std::complex<double>;

    // Element radiation pattern U_n, evaluated per observation direction.
    // theta is the angle from broadside (the z-axis) in radians.
    class ElementPattern
    {
    public:
        enum class kind
        {
            omnidirectional
        };

        constexpr ElementPattern() = default;
        constexpr explicit ElementPattern(kind k) : kind_(k) {}

        static constexpr ElementPattern omnidirectional() { return ElementPattern(kind::omnidirectional); }

        constexpr double operator()(double /*theta*/) const
        {
            switch (kind_)
            {
            case kind::omnidirectional:
                return 1.0;
            }
            return 1.0;
        }

        constexpr bool is_constant() const { return kind_ == kind::omnidirectional; }
        constexpr kind type() const { return kind_; }

        std::string name() const { return "omnidirectional"; }

    private:
        kind kind_ = kind::omnidirectional;
    };

    // Uniform linear array along x, centered on the origin.
    class UlaArray
    {
    public:
        UlaArray(std::size_t n_elements, double spacing_m, double element_power_w = 1e-3,
                 double element_gain = 1.0, ElementPattern pattern = ElementPattern::omnidirectional())
            : n_(n_elements), spacing_(spacing_m), power_(element_power_w), gain_(element_gain), pattern_(pattern)
        {
            detail::require(n_ >= 1, "array needs at least one element");
            detail::require(std::isfinite(spacing_) && spacing_ > 0.0, "element spacing must be positive");
            detail::require(std::isfinite(power_) && power_ >= 0.0, "element power must be non-negative");
            detail::require(std::isfinite(gain_) && gain_ > 0.0, "element gain must be positive");
        }

        std::size_t n_elements() const { return n_; }
        double spacing() const { return spacing_; }
        double element_power_w() const { return power_; }
        double element_gain() const { return gain_; }
        const ElementPattern &pattern() const { return pattern_; }

        // L_x = Nx * d_x
        double length() const { return static_cast<double>(n_) * spacing_; }

        // x_n for the zero-based index i (n = i + 1).
        double position(std::size_t i) const
        {
            // (n - (Nx+1)/2) is a half-integer or integer and therefore exact,
            // which makes the grid bit-exactly symmetric about 0.
            const double offset = static_cast<double>(i + 1) - 0.5 * static_cast<double>(n_ + 1);
            return offset * spacing_;
        }

    private:
        std::size_t n_;
        double spacing_;
        double power_;
        double gain_;
        ElementPattern pattern_;
    };

    // x_n = (n - (Nx+1)/2) d_x, n = 1..Nx
    inline std::vector<double> element_positions(const UlaArray &array)
    {
        std::vector<double> x(array.n_elements());
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = array.position(i);
        return x;
    }

    // Unit-norm steering vector a_n = exp(j phi_n) / sqrt(Nx).
    inline std::vector<cplx> steering_vector(std::span<const double> phases, std::size_t n_elements)
    {
        detail::require(phases.size() == n_elements, "steering vector: phase count does not match element count");
        detail::require(n_elements >= 1, "steering vector: empty array");
        const double scale = 1.0 / std::sqrt(static_cast<double>(n_elements));
        std::vector<cplx> a(n_elements);
        for (std::size_t i = 0; i < n_elements; ++i)
        {
            detail::require(std::isfinite(phases[i]), "steering vector: non-finite phase");
            a[i] = std::polar(scale, phases[i]);
        }
        return a;
    }

    // Closed interval [lo, hi] of the aperture that is powered.
    struct Window
    {
        double lo = 0.0;
        double hi = 0.0;

        bool contains(double x) const { return x >= lo && x <= hi; }
    };

    enum class PowerMode
    {
        per_element, // every active element radiates P_n
        total        // weights divided by sqrt(active count): total power P_n
    };

    // Complex drive of each element. Inactive elements carry an exact zero.
    struct ArrayExcitation
    {
        UlaArray array;
        std::vector<double> positions;
        std::vector<cplx> weights;   // sqrt(P) exp(j phi), zero when inactive
        std::vector<bool> active_mask;

        std::size_t active_count() const
        {
            std::size_t n = 0;
            for (bool a : active_mask)
                n += a ? 1 : 0;
            return n;
        }

        // Extent of the powered aperture, (active count) * d_x.
        double active_length() const { return static_cast<double>(active_count()) * array.spacing(); }
    };

    template <class PhaseFn>
        requires std::regular_invocable<const PhaseFn &, double>
    ArrayExcitation build_excitation(const UlaArray &array, const PhaseFn &phase, Window window,
                                     PowerMode mode = PowerMode::per_element)
    {
        detail::require(std::isfinite(window.lo) && std::isfinite(window.hi) && window.lo <= window.hi,
                        "excitation window must satisfy lo <= hi");

        ArrayExcitation ex{array, element_positions(array), {}, {}};
        const std::size_t n = array.n_elements();
        ex.weights.assign(n, cplx(0.0, 0.0));
        ex.active_mask.assign(n, false);

        std::size_t active = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (window.contains(ex.positions[i]))
            {
                ex.active_mask[i] = true;
                ++active;
            }

        if (active == 0)
            throw domain_error("empty active set: no element lies inside the window [" + std::to_string(window.lo) +
                               ", " + std::to_string(window.hi) + "]");

        double amplitude = std::sqrt(array.element_power_w());
        if (mode == PowerMode::total)
            amplitude /= std::sqrt(static_cast<double>(active));

        for (std::size_t i = 0; i < n; ++i)
        {
            if (!ex.active_mask[i])
                continue;
            const double phi = phase(ex.positions[i]);
            detail::require(std::isfinite(phi), "phase profile is not finite inside the window");
            ex.weights[i] = std::polar(amplitude, phi);
        }
        return ex;
    }
}

#endif
