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

#include <bendbeam/trajectory.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace bendbeam;

namespace
{
    const CarrierConfig carrier = CarrierConfig::from_wavelength(2e-3);
    const TrajectoryParams fig1 = TrajectoryParams::from_vertex(0.01, -0.08, 5.0);

    // Independent oracle: bisection on the vertex range z0 using the two
    // pass-through conditions directly (no closed form).
    TrajectoryParams brute_force_design(RxLocation rx, double beta, double x0C)
    {
        auto mismatch = [&](double z0) {
            const double x0 = x0C - beta * z0 * z0;
            return x0 + beta * (rx.z - z0) * (rx.z - z0) - rx.x;
        };
        double lo = -1e4, hi = 1e4;
        double flo = mismatch(lo);
        for (int it = 0; it < 200; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            const double fm = mismatch(mid);
            if ((fm < 0) == (flo < 0))
            {
                lo = mid;
                flo = fm;
            }
            else
                hi = mid;
        }
        const double z0 = 0.5 * (lo + hi);
        return {beta, x0C - beta * z0 * z0, z0, x0C};
    }
}

TEST(Caustic, FigureOneCrossing)
{
    EXPECT_NEAR(caustic_x(fig1, 0.0), 0.17, 1e-15);
    EXPECT_NEAR(fig1.x0C, 0.17, 1e-15);
    EXPECT_EQ(caustic_x(fig1, fig1.z0), fig1.x0);
}

TEST(Caustic, LosDesignPassesThroughReceiver)
{
    const auto p = TrajectoryParams::from_vertex(0.005, -0.08, 4.0);
    EXPECT_NEAR(caustic_x(p, 8.0), 0.0, 1e-15);
}

TEST(PhaseProfile, FrozenValues)
{
    // 40-digit evaluation of the closed form.
    EXPECT_NEAR(phase_profile(fig1, carrier, -0.5), 72.64142826123137, 1e-10);
    EXPECT_NEAR(phase_profile(fig1, carrier, fig1.x0C), 53.40707511102649, 1e-11);
}

TEST(PhaseProfile, RadicandVanishesAtCrossing)
{
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> b(1e-4, 0.05), x(-1.0, 1.0), z(0.5, 20.0);
    for (int i = 0; i < 500; ++i)
    {
        const auto p = TrajectoryParams::from_vertex(b(gen), x(gen), z(gen));
        EXPECT_EQ(phase_profile(p, carrier, p.x0C), 2.0 * p.beta * carrier.wavenumber * p.z0 * p.x0C);
    }
}

TEST(PhaseProfile, BroadsideIsFlat)
{
    const auto flat = TrajectoryParams::broadside();
    for (double x : {-0.5, 0.0, 0.3, 12.0})
        EXPECT_EQ(phase_profile(flat, carrier, x), 0.0);
}

TEST(PhaseProfile, DomainErrorBeyondCrossing)
{
    EXPECT_THROW(phase_profile(fig1, carrier, 0.2), domain_error);
    EXPECT_THROW(phase_profile(fig1.mirrored(), carrier, -0.2), domain_error);
    EXPECT_NO_THROW(phase_profile(fig1.mirrored(), carrier, 0.2));
}

TEST(PhaseProfile, MirrorAntisymmetryProperty)
{
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> b(1e-4, 0.05), x0(-1.0, 1.0), z0(0.5, 20.0), u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i)
    {
        const auto p = TrajectoryParams::from_vertex(b(gen), x0(gen), z0(gen));
        const auto m = TrajectoryParams::from_vertex(-p.beta, -p.x0, p.z0);
        const double x = p.x0C - 2.0 * u(gen);
        const double ref = phase_profile(p, carrier, x);
        EXPECT_NEAR(phase_profile(m, carrier, -x), ref, 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST(PhaseProfile, SlopeMatchesFiniteDifferencesAndIsMonotone)
{
    const UlaArray array(1000, 1e-3);
    const auto w = active_window(fig1, array);
    const double h = 1e-6;
    double previous = -INFINITY;
    for (double x = w.lo + h; x < w.hi - h; x += 1e-3)
    {
        const double fd = (phase_profile(fig1, carrier, x + h) - phase_profile(fig1, carrier, x - h)) / (2 * h);
        const double slope = phase_slope(fig1, carrier, x);
        EXPECT_NEAR(slope, fd, 1e-4 * std::max(1.0, std::abs(slope)));
        EXPECT_GT(fd, previous);
        previous = fd;
    }
}

TEST(DesignFromRx, LosExample)
{
    const auto p = design_from_rx({0.0, 8.0}, 0.005, 0.0);
    EXPECT_NEAR(p.x0, -0.08, 1e-15);
    EXPECT_NEAR(p.z0, 4.0, 1e-15);

    const auto oracle = brute_force_design({0.0, 8.0}, 0.005, 0.0);
    EXPECT_NEAR(p.x0, oracle.x0, 1e-12);
    EXPECT_NEAR(p.z0, oracle.z0, 1e-10);
}

TEST(DesignFromRx, QuarterApertureExample)
{
    const auto p = design_from_rx({0.0, 8.0}, 0.01, 0.25);
    EXPECT_NEAR(p.z0, 5.5625, 1e-14);
    EXPECT_NEAR(p.x0, -0.059414, 1e-6);
    EXPECT_NEAR(caustic_x(p, 0.0), 0.25, 1e-14);
    EXPECT_NEAR(caustic_x(p, 8.0), 0.0, 1e-14);

    const auto oracle = brute_force_design({0.0, 8.0}, 0.01, 0.25);
    EXPECT_NEAR(p.z0, oracle.z0, 1e-10);
    EXPECT_NEAR(p.x0, oracle.x0, 1e-10);
}

TEST(DesignFromRx, SymmetricChordPutsVertexAtMidpoint)
{
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> b(-0.05, 0.05), x(-2.0, 2.0), z(0.5, 20.0);
    for (int i = 0; i < 200; ++i)
    {
        double beta = b(gen);
        if (beta == 0.0)
            continue;
        const RxLocation rx{x(gen), z(gen)};
        const auto p = design_from_rx(rx, beta, rx.x);
        EXPECT_NEAR(p.z0, rx.z / 2, 1e-12 * rx.z);
        EXPECT_NEAR(p.x0, rx.x - beta * rx.z * rx.z / 4, 1e-12 * std::max(1.0, std::abs(p.x0)));
    }
}

TEST(DesignFromRx, RejectsDegenerateDesigns)
{
    try
    {
        design_from_rx({0.0, 8.0}, 0.0, 0.0);
        FAIL() << "beta = 0 accepted";
    }
    catch (const domain_error &e)
    {
        EXPECT_NE(std::string(e.what()).find("broadside"), std::string::npos);
    }
    EXPECT_THROW(design_from_rx({0.0, 8.0}, 0.001, -0.2), domain_error); // z0 = -8.5
    EXPECT_THROW(design_from_rx({0.0, -1.0}, 0.01, 0.0), domain_error);
}

TEST(DesignFromRx, RoundTripProperty)
{
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> b(1e-3, 0.05), xr(-2.0, 2.0), zr(1.0, 20.0), xc(-0.5, 0.5), sign(-1, 1);
    int checked = 0;
    while (checked < 1000)
    {
        const double beta = b(gen) * (sign(gen) < 0 ? -1.0 : 1.0);
        const RxLocation rx{xr(gen), zr(gen)};
        const double x0C = xc(gen);
        TrajectoryParams p;
        try
        {
            p = design_from_rx(rx, beta, x0C);
        }
        catch (const domain_error &)
        {
            continue;
        }
        EXPECT_LE(std::abs(caustic_x(p, rx.z) - rx.x), 1e-9 * std::max(1.0, std::abs(rx.x)));
        EXPECT_LE(std::abs(caustic_x(p, 0.0) - x0C), 1e-9 * std::max(1.0, std::abs(x0C)));
        ++checked;
    }
}

TEST(ActiveWindow, PositiveAndNegativeCurvature)
{
    const UlaArray array(1000, 1e-3);
    const auto w = active_window(design_from_rx({0.0, 8.0}, 0.005, 0.0), array);
    EXPECT_EQ(w.lo, -0.5);
    EXPECT_EQ(w.hi, 0.0);

    const auto m = active_window(design_from_rx({0.0, 8.0}, -0.005, 0.0), array);
    EXPECT_EQ(m.lo, 0.0);
    EXPECT_EQ(m.hi, 0.5);
    EXPECT_EQ(outer_ray_abscissa(design_from_rx({0.0, 8.0}, -0.005, 0.0), array), 0.5);

    const auto clamped = active_window(TrajectoryParams{0.01, 0.7 - 0.01 * 25, 5.0, 0.7}, array);
    EXPECT_EQ(clamped.lo, -0.5);
    EXPECT_EQ(clamped.hi, 0.5);

    const auto flat = active_window(TrajectoryParams::broadside(), array);
    EXPECT_EQ(flat.lo, -0.5);
    EXPECT_EQ(flat.hi, 0.5);
}

TEST(ActiveWindow, EmptyWindowIsAnError)
{
    const UlaArray array(1000, 1e-3);
    EXPECT_THROW(active_window(TrajectoryParams{0.01, -0.75, 5.0, -0.5}, array), domain_error);
    EXPECT_THROW(active_window(TrajectoryParams{-0.01, 0.8, 5.0, 0.55}, array), domain_error);
}
