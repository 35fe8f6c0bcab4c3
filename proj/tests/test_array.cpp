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

#include <bendbeam/array.hpp>
#include <bendbeam/carrier.hpp>
#include <bendbeam/trajectory.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace bendbeam;

TEST(Carrier, WavelengthAndWavenumberAreConsistent)
{
    const auto c = CarrierConfig::from_frequency(150e9);
    EXPECT_DOUBLE_EQ(c.wavelength_m, speed_of_light / 150e9);
    EXPECT_NEAR(c.wavelength_m, 1.9986e-3, 1e-7);
    EXPECT_DOUBLE_EQ(c.wavenumber, 2.0 * std::numbers::pi / c.wavelength_m);

    const auto w = CarrierConfig::from_wavelength(2e-3);
    EXPECT_EQ(w.wavelength_m, 2e-3);
    EXPECT_DOUBLE_EQ(w.frequency_hz, speed_of_light / 2e-3);
    EXPECT_NEAR(w.z0_impedance, 376.730, 1e-3);

    EXPECT_THROW(CarrierConfig::from_frequency(0.0), domain_error);
    EXPECT_THROW(CarrierConfig::from_wavelength(-1.0), domain_error);
}

TEST(UlaArray, RejectsInvalidGeometry)
{
    EXPECT_THROW(UlaArray(0, 1e-3), domain_error);
    EXPECT_THROW(UlaArray(4, 0.0), domain_error);
    EXPECT_THROW(UlaArray(4, -1e-3), domain_error);
    EXPECT_DOUBLE_EQ(UlaArray(1000, 1e-3).length(), 1.0);
}

TEST(ElementPositions, ThousandElementAperture)
{
    const auto x = element_positions(UlaArray(1000, 1e-3));
    ASSERT_EQ(x.size(), 1000u);
    EXPECT_NEAR(x.front(), -0.4995, 1e-15);
    EXPECT_NEAR(x.back(), 0.4995, 1e-15);
    for (std::size_t i = 1; i < x.size(); ++i)
        EXPECT_LT(x[i - 1], x[i]);
}

TEST(ElementPositions, SmallArrays)
{
    const auto one = element_positions(UlaArray(1, 7e-3));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], 0.0);

    const auto three = element_positions(UlaArray(3, 2e-3));
    ASSERT_EQ(three.size(), 3u);
    EXPECT_DOUBLE_EQ(three[0], -0.002);
    EXPECT_EQ(three[1], 0.0);
    EXPECT_DOUBLE_EQ(three[2], 0.002);
}

TEST(ElementPositions, ExactlySymmetricProperty)
{
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<std::size_t> count(1, 4000);
    std::uniform_real_distribution<double> spacing(1e-4, 1e-1);
    for (int trial = 0; trial < 200; ++trial)
    {
        const auto x = element_positions(UlaArray(count(gen), spacing(gen)));
        for (std::size_t i = 0; i < x.size(); ++i)
            ASSERT_EQ(x[i], -x[x.size() - 1 - i]);
    }
}

TEST(SteeringVector, BroadsideEntries)
{
    const std::vector<double> zeros(4, 0.0);
    const auto a = steering_vector(zeros, 4);
    for (const auto &v : a)
    {
        EXPECT_DOUBLE_EQ(v.real(), 0.5);
        EXPECT_EQ(v.imag(), 0.0);
    }
}

TEST(SteeringVector, UnitNormProperty)
{
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<std::size_t> count(1, 3000);
    std::uniform_real_distribution<double> phase(-500.0, 500.0);
    for (int trial = 0; trial < 100; ++trial)
    {
        std::vector<double> p(count(gen));
        for (auto &v : p)
            v = phase(gen);
        const auto a = steering_vector(p, p.size());
        double norm2 = 0.0;
        for (const auto &v : a)
            norm2 += std::norm(v);
        EXPECT_NEAR(std::sqrt(norm2), 1.0, 1e-12);
    }
}

TEST(SteeringVector, RejectsBadInput)
{
    std::vector<double> p{0.0, std::nan("")};
    EXPECT_THROW(steering_vector(p, 2), domain_error);
    std::vector<double> q{0.0, 1.0};
    EXPECT_THROW(steering_vector(q, 3), domain_error);
}

TEST(SteeringVector, EntryAtCausticCrossing)
{
    // Fig. 1 parameters; at x = x0C the phase reduces to 2 beta k z0 x0C = 17 pi.
    const auto carrier = CarrierConfig::from_wavelength(2e-3);
    const auto params = TrajectoryParams::from_vertex(0.01, -0.08, 5.0);
    const double phi = phase_profile(params, carrier, params.x0C);
    EXPECT_NEAR(phi, 53.40707511102649, 1e-11);

    const std::vector<double> p{phi};
    const auto a = steering_vector(p, 1);
    EXPECT_NEAR(std::arg(a[0]), std::numbers::pi, 1e-9); // 53.407 mod 2 pi = pi
}

TEST(BuildExcitation, HalfApertureWindow)
{
    const UlaArray array(1000, 1e-3, 1e-3);
    const auto ex = build_excitation(array, [](double) { return 0.0; }, Window{-0.5, 0.0});
    EXPECT_EQ(ex.active_count(), 500u);
    for (std::size_t i = 0; i < 1000; ++i)
    {
        EXPECT_EQ(ex.active_mask[i], ex.positions[i] <= -0.0005 + 1e-15);
        if (!ex.active_mask[i])
        {
            EXPECT_EQ(ex.weights[i], cplx(0.0, 0.0));
        }
    }
}

TEST(BuildExcitation, FullApertureAndEmptyWindow)
{
    const UlaArray array(1000, 1e-3, 1e-3);
    const auto ex = build_excitation(array, [](double) { return 0.0; }, Window{-0.5, 0.5});
    EXPECT_EQ(ex.active_count(), 1000u);
    EXPECT_DOUBLE_EQ(ex.active_length(), 1.0);

    EXPECT_THROW(build_excitation(array, [](double) { return 0.0; }, Window{0.4990, 0.4991}), domain_error);
    EXPECT_THROW(build_excitation(array, [](double) { return 0.0; }, Window{0.1, -0.1}), domain_error);
}

TEST(BuildExcitation, ConstantAmplitudeAndPowerAccounting)
{
    const UlaArray array(777, 1e-3, 2.5e-3);
    const auto carrier = CarrierConfig::from_wavelength(2e-3);
    const auto params = TrajectoryParams::from_vertex(0.01, -0.08, 5.0);
    const auto ex = excite(params, array, carrier);

    double total = 0.0;
    const double amp = std::sqrt(2.5e-3);
    for (std::size_t i = 0; i < ex.weights.size(); ++i)
        if (ex.active_mask[i])
        {
            EXPECT_NEAR(std::abs(ex.weights[i]), amp, 1e-15);
            total += std::norm(ex.weights[i]);
        }
    EXPECT_NEAR(total, static_cast<double>(ex.active_count()) * 2.5e-3, 1e-12 * total);
}

TEST(BuildExcitation, TotalPowerMode)
{
    const UlaArray array(100, 1e-3, 1e-3);
    const auto ex = build_excitation(array, [](double x) { return 1000.0 * x; }, Window{-1.0, 1.0}, PowerMode::total);
    double total = 0.0;
    for (const auto &w : ex.weights)
        total += std::norm(w);
    EXPECT_NEAR(total, 1e-3, 1e-15);
}

TEST(ElementPattern, OmnidirectionalIsUnity)
{
    const auto u = ElementPattern::omnidirectional();
    EXPECT_EQ(u(0.0), 1.0);
    EXPECT_EQ(u(1.2), 1.0);
    EXPECT_TRUE(u.is_constant());
}
