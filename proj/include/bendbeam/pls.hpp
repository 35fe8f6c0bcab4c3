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

#ifndef BENDBEAM_PLS_HPP
#define BENDBEAM_PLS_HPP

#include "array.hpp"
#include "carrier.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "parallel.hpp"
#include "propagation.hpp"
#include "rng.hpp"
#include "trajectory.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace bendbeam
{
    inline double snr_from_db(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

    // S_max = log2(1 + SNR_Rx), the secrecy rate of a silent eavesdropper.
    inline double secrecy_rate_max(double snr_rx_db)
    {
        detail::require(std::isfinite(snr_rx_db), "SNR must be finite");
        return std::log2(1.0 + snr_from_db(snr_rx_db));
    }

    // S = log2(1 + SNR_Rx) - log2(1 + SNR_eve), with SNR_eve = SNR_Rx * P_eve / P_Rx.
    // Noise power is pinned by the SNR at the legitimate receiver.
    inline double secrecy_rate(double snr_rx_db, double power_ratio)
    {
        detail::require(std::isfinite(snr_rx_db), "SNR must be finite");
        if (!(power_ratio >= 0.0) || std::isinf(power_ratio))
            throw domain_error("power ratio P_eve/P_Rx must be finite and non-negative");
        const double snr = snr_from_db(snr_rx_db);
        return std::log2(1.0 + snr) - std::log2(1.0 + snr * power_ratio);
    }

    // Bending beam aimed at the receiver through the caustic crossing x0C.
    struct TargetedBending
    {
        double beta = 0.0;
        double x0C = 0.0;
    };

    // Bending beam given directly by its vertex.
    struct VertexBending
    {
        double beta = 0.0;
        double x0 = 0.0;
        double z0 = 0.0;
    };

    // Conventional beamforming baseline, phi = 0 on every element.
    struct Broadside
    {
    };

    using BeamSpec = std::variant<TargetedBending, VertexBending, Broadside>;

    struct SecrecyScene
    {
        CarrierConfig carrier;
        UlaArray array;
        BeamSpec beam;
        RxLocation rx;
        double snr_rx_db = 10.0;
        PowerMode power_mode = PowerMode::per_element;
    };

    struct DesignedBeam
    {
        TrajectoryParams trajectory; // broadside() for the baseline
        ArrayExcitation excitation;
    };

    inline DesignedBeam design_beam(const BeamSpec &beam, const RxLocation &rx, const UlaArray &array,
                                    const CarrierConfig &carrier, PowerMode mode = PowerMode::per_element)
    {
        TrajectoryParams params;
        if (const auto *t = std::get_if<TargetedBending>(&beam))
            params = design_from_rx(rx, t->beta, t->x0C);
        else if (const auto *v = std::get_if<VertexBending>(&beam))
        {
            detail::require(v->beta != 0.0, "vertex-specified bending beam needs beta != 0");
            params = TrajectoryParams::from_vertex(v->beta, v->x0, v->z0);
        }
        else
            params = TrajectoryParams::broadside();
        return {params, excite(params, array, carrier, mode)};
    }

    inline DesignedBeam design_beam(const SecrecyScene &scene)
    {
        return design_beam(scene.beam, scene.rx, scene.array, scene.carrier, scene.power_mode);
    }

    namespace detail
    {
        inline void validate_scene(const SecrecyScene &scene)
        {
            require(std::isfinite(scene.snr_rx_db), "SNR must be finite");
            require(std::isfinite(scene.rx.x) && scene.rx.z > 0.0, "receiver must lie in front of the array");
        }

        inline double rx_density(const DesignedBeam &beam, const SecrecyScene &scene)
        {
            const double p = power_density(field_at(beam.excitation, scene.carrier, scene.rx), scene.carrier);
            require(p > 0.0, "beam delivers no power to the receiver; secrecy rate undefined");
            return p;
        }
    }

    struct LosSample
    {
        double z_eve = 0.0;
        double power_ratio = 0.0; // P_eve / P_Rx
        double secrecy = 0.0;     // bits/s/Hz
    };

    // Eavesdropper on the line x = x_rx, at each requested range.
    inline std::vector<LosSample> los_sweep(const SecrecyScene &scene, std::span<const double> z_samples,
                                            unsigned threads = 0)
    {
        detail::validate_scene(scene);
        const auto beam = design_beam(scene);
        const double p_rx = detail::rx_density(beam, scene);

        std::vector<Point> eve(z_samples.size());
        for (std::size_t i = 0; i < eve.size(); ++i)
        {
            detail::require(z_samples[i] > 0.0, "eavesdropper must lie in front of the array");
            eve[i] = {scene.rx.x, z_samples[i]};
        }
        const auto fields = field_at(beam.excitation, scene.carrier, eve, threads);

        std::vector<LosSample> out(eve.size());
        for (std::size_t i = 0; i < eve.size(); ++i)
        {
            // Co-located samples are pinned to exactly 1 so S is exactly 0.
            const double ratio =
                eve[i] == scene.rx ? 1.0 : power_density(fields[i], scene.carrier) / p_rx;
            out[i] = {z_samples[i], ratio, secrecy_rate(scene.snr_rx_db, ratio)};
        }
        return out;
    }

    struct BetaSweepRow
    {
        double beta = 0.0;
        std::optional<TrajectoryParams> trajectory; // empty when the design failed
        std::string error;
        std::size_t active_elements = 0;
        double p_rx_density = 0.0;  // W/m^2
        std::vector<LosSample> los; // one per z sample
    };

    // Designs one bending beam per curvature, all through the same receiver and
    // crossing x0C; failed designs stay in the output with their diagnostic.
    inline std::vector<BetaSweepRow> beta_sweep(const SecrecyScene &base, double x0C, std::span<const double> betas,
                                                std::span<const double> z_samples, unsigned threads = 0)
    {
        std::vector<BetaSweepRow> rows;
        rows.reserve(betas.size());
        for (double beta : betas)
        {
            BetaSweepRow row;
            row.beta = beta;
            SecrecyScene scene = base;
            scene.beam = TargetedBending{beta, x0C};
            try
            {
                const auto beam = design_beam(scene);
                row.trajectory = beam.trajectory;
                row.active_elements = beam.excitation.active_count();
                row.p_rx_density = detail::rx_density(beam, scene);
                row.los = los_sweep(scene, z_samples, threads);
            }
            catch (const domain_error &e)
            {
                row.trajectory.reset();
                row.error = e.what();
                row.los.clear();
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    struct SecrecyMap
    {
        ObservationGrid grid;
        std::vector<double> secrecy;     // z-outer / x-inner, like FieldMap
        std::vector<std::uint8_t> valid;
        double secrecy_max = 0.0;
        double p_rx_density = 0.0;
    };

    // S for an eavesdropper at every sample of an existing field map of the scene's beam.
    inline SecrecyMap secrecy_map(const FieldMap &fmap, double p_rx_density, const SecrecyScene &scene)
    {
        detail::validate_scene(scene);
        detail::require(p_rx_density > 0.0, "receiver power density must be positive");
        const auto &grid = fmap.grid;
        SecrecyMap out{grid, std::vector<double>(grid.size(), 0.0), fmap.valid, secrecy_rate_max(scene.snr_rx_db),
                       p_rx_density};
        for (std::size_t iz = 0; iz < grid.nz; ++iz)
            for (std::size_t ix = 0; ix < grid.nx; ++ix)
            {
                const std::size_t idx = fmap.index(ix, iz);
                if (!fmap.valid[idx])
                    continue;
                const Point p{grid.x(ix), grid.z(iz)};
                const double ratio = p == scene.rx ? 1.0 : fmap.power[idx] / p_rx_density;
                out.secrecy[idx] = secrecy_rate(scene.snr_rx_db, ratio);
            }
        return out;
    }

    // S for an eavesdropper at every grid point.
    inline SecrecyMap secrecy_map(const SecrecyScene &scene, const ObservationGrid &grid, unsigned threads = 0)
    {
        detail::validate_scene(scene);
        const auto beam = design_beam(scene);
        const double p_rx = detail::rx_density(beam, scene);
        return secrecy_map(field_map(beam.excitation, scene.carrier, grid, threads), p_rx, scene);
    }

    // Receiver power density of a designed beam, W/m^2.
    inline double receiver_density(const DesignedBeam &beam, const SecrecyScene &scene)
    {
        return detail::rx_density(beam, scene);
    }

    // Eavesdropper uniformly distributed over the disk of radius radius_m around the receiver.
    struct DiskEveModel
    {
        RxLocation center;
        double radius_m = 1.0;
        std::size_t sample_count = 10000;
        std::uint64_t seed = 1;
        double z_floor = 0.05; // samples with z <= z_floor are redrawn
    };

    struct DiskSamples
    {
        std::vector<Point> points;
        std::size_t resampled = 0;
    };

    // Sample i uses CounterRng(seed, i): r = R sqrt(u1), theta = 2 pi u2,
    // redrawn from the same stream until z > z_floor. Rejection keeps the
    // distribution uniform over the admissible part of the disk.
    inline DiskSamples sample_disk(const DiskEveModel &eve)
    {
        detail::require(std::isfinite(eve.radius_m) && eve.radius_m > 0.0, "eavesdropper disk radius must be positive");
        detail::require(eve.sample_count >= 1, "need at least one eavesdropper sample");
        detail::require(eve.center.z + eve.radius_m > eve.z_floor, "eavesdropper disk lies entirely behind z_floor");

        constexpr int max_attempts = 100000;
        DiskSamples out;
        out.points.resize(eve.sample_count);
        for (std::size_t i = 0; i < eve.sample_count; ++i)
        {
            CounterRng rng(eve.seed, i);
            int attempt = 0;
            for (;; ++attempt)
            {
                detail::require(attempt < max_attempts, "eavesdropper disk: too few samples in front of z_floor");
                const double r = eve.radius_m * std::sqrt(rng.uniform());
                const double theta = 2.0 * std::numbers::pi * rng.uniform();
                const Point p{eve.center.x + r * std::cos(theta), eve.center.z + r * std::sin(theta)};
                if (p.z > eve.z_floor)
                {
                    out.points[i] = p;
                    break;
                }
            }
            out.resampled += static_cast<std::size_t>(attempt);
        }
        return out;
    }

    struct CoverageResult
    {
        double radius_m = 0.0;
        std::vector<double> thresholds;     // M
        std::vector<double> probabilities;  // P(S > M S_max)
        std::vector<double> standard_errors;
        std::size_t n_samples = 0;
        std::uint64_t seed = 0;
        std::size_t resampled = 0;
    };

    namespace detail
    {
        inline CoverageResult coverage_for_beam(const DesignedBeam &beam, const SecrecyScene &scene,
                                                const DiskEveModel &eve, std::span<const double> thresholds,
                                                unsigned threads)
        {
            for (double m : thresholds)
                require(std::isfinite(m), "coverage thresholds must be finite");
            const double p_rx = rx_density(beam, scene);
            const auto samples = sample_disk(eve);
            const auto fields = field_at(beam.excitation, scene.carrier, samples.points, threads);
            const double s_max = secrecy_rate_max(scene.snr_rx_db);

            std::vector<double> secrecy(fields.size());
            for (std::size_t i = 0; i < fields.size(); ++i)
                secrecy[i] = secrecy_rate(scene.snr_rx_db, power_density(fields[i], scene.carrier) / p_rx);

            CoverageResult res;
            res.radius_m = eve.radius_m;
            res.thresholds.assign(thresholds.begin(), thresholds.end());
            res.n_samples = eve.sample_count;
            res.seed = eve.seed;
            res.resampled = samples.resampled;
            const double n = static_cast<double>(eve.sample_count);
            for (double m : thresholds)
            {
                std::size_t hits = 0;
                for (double s : secrecy)
                    hits += s > m * s_max ? 1 : 0;
                const double p = static_cast<double>(hits) / n;
                res.probabilities.push_back(p);
                res.standard_errors.push_back(std::sqrt(p * (1.0 - p) / n));
            }
            return res;
        }
    }

    // Fraction of eavesdropper positions with S > M S_max, per threshold M,
    // with binomial standard errors. Deterministic for a given seed.
    inline CoverageResult disk_coverage(const SecrecyScene &scene, const DiskEveModel &eve,
                                        std::span<const double> thresholds, unsigned threads = 0)
    {
        detail::validate_scene(scene);
        return detail::coverage_for_beam(design_beam(scene), scene, eve, thresholds, threads);
    }

    struct CoverageSweepRow
    {
        double beta = 0.0;
        std::optional<CoverageResult> coverage; // empty when the design failed
        std::string error;
    };

    // disk_coverage for a family of curvatures through the same receiver. All
    // curvatures see the same eavesdropper positions (common seed).
    inline std::vector<CoverageSweepRow> coverage_vs_beta(const SecrecyScene &base, double x0C,
                                                          std::span<const double> betas, const DiskEveModel &eve,
                                                          std::span<const double> thresholds, unsigned threads = 0)
    {
        detail::validate_scene(base);
        std::vector<CoverageSweepRow> rows;
        rows.reserve(betas.size());
        for (double beta : betas)
        {
            CoverageSweepRow row;
            row.beta = beta;
            SecrecyScene scene = base;
            scene.beam = TargetedBending{beta, x0C};
            try
            {
                row.coverage = detail::coverage_for_beam(design_beam(scene), scene, eve, thresholds, threads);
            }
            catch (const domain_error &e)
            {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    // beta_min, beta_min + step, ... up to beta_max (inclusive within half a step).
    inline std::vector<double> beta_range(double beta_min, double beta_max, double step)
    {
        detail::require(std::isfinite(beta_min) && std::isfinite(beta_max) && beta_min <= beta_max,
                        "beta range: need beta_min <= beta_max");
        detail::require(std::isfinite(step) && step > 0.0, "beta range: step must be positive");
        const auto count = static_cast<std::size_t>(std::floor((beta_max - beta_min) / step + 0.5)) + 1;
        std::vector<double> out(count);
        for (std::size_t i = 0; i < count; ++i)
            out[i] = beta_min + static_cast<double>(i) * step;
        return out;
    }
}

#endif
