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

#ifndef BENDBEAM_CARRIER_HPP
#define BENDBEAM_CARRIER_HPP

#include "error.hpp"

#include <cmath>
#include <numbers>

namespace bendbeam
{
    inline constexpr double speed_of_light = 299792458.0;     // m/s
    inline constexpr double free_space_impedance = 376.730313668; // Ohm, CODATA 2018

    // Carrier constants shared by every field evaluation.
    // Either the frequency or the wavelength is authoritative; the other one is derived.
    struct CarrierConfig
    {
        double frequency_hz = 0.0;
        double wavelength_m = 0.0;
        double wavenumber = 0.0;   // rad/m
        double z0_impedance = free_space_impedance;

        static CarrierConfig from_frequency(double frequency_hz)
        {
            detail::require(std::isfinite(frequency_hz) && frequency_hz > 0.0, "carrier frequency must be positive");
            return make(frequency_hz, speed_of_light / frequency_hz);
        }

        static CarrierConfig from_wavelength(double wavelength_m)
        {
            detail::require(std::isfinite(wavelength_m) && wavelength_m > 0.0, "carrier wavelength must be positive");
            return make(speed_of_light / wavelength_m, wavelength_m);
        }

    private:
        static CarrierConfig make(double f, double lambda)
        {
            CarrierConfig c;
            c.frequency_hz = f;
            c.wavelength_m = lambda;
            c.wavenumber = 2.0 * std::numbers::pi / lambda;
            return c;
        }
    };
}

#endif
