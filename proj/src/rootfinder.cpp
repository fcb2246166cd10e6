/*
 * Copyright 2026 The rootspace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "rootspace/rootfinder.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace rootspace {

double cauchy_bound(const MonicPolynomial& p) { return 1.0 + p.max_coeff_modulus(); }

namespace {

void validate(const SolverConfig& cfg) {
    if (cfg.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (!(cfg.residual_tolerance > 0)) throw std::invalid_argument("residual_tolerance must be > 0");
    if (!(cfg.step_tolerance > 0)) throw std::invalid_argument("step_tolerance must be > 0");
    if (!(cfg.initial_radius_factor > 0) || cfg.initial_radius_factor > 1.0) {
        throw std::invalid_argument("initial_radius_factor must be in (0, 1]");
    }
}

}  // namespace

SolveReport solve(const MonicPolynomial& p, const SolverConfig& cfg) {
    validate(cfg);

    const std::size_t n = p.degree();
    const double bound = cauchy_bound(p);
    const double residual_scale = std::pow(bound, static_cast<double>(n));
    const double step_threshold = cfg.step_tolerance * (1.0 + bound);

    // All roots lie strictly inside the Cauchy disk, so a circle slightly
    // inside it brackets nothing spurious. The angular offset keeps the
    // guesses off the axes and away from conjugate-symmetry traps.
    std::vector<Complex> z(n);
    const double radius = cfg.initial_radius_factor * bound;
    for (std::size_t k = 0; k < n; ++k) {
        const double angle =
            (2.0 * std::numbers::pi * static_cast<double>(k) + std::numbers::pi / 2.0) /
            static_cast<double>(n);
        z[k] = Complex{radius * std::cos(angle), radius * std::sin(angle)};
    }

    std::vector<Complex> value(n), derivative(n), step(n);
    std::vector<Complex> best = z;
    double best_residual = std::numeric_limits<double>::infinity();
    double prev_max_step = std::numeric_limits<double>::infinity();

    int sweeps = 0;
    for (int it = 0; it <= cfg.max_iterations; ++it) {
        double max_abs_value = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            p.evaluate_with_derivative(z[i], value[i], derivative[i]);
            max_abs_value = std::max(max_abs_value, std::abs(value[i]));
        }
        const double residual = max_abs_value / residual_scale;
        if (residual < best_residual) {
            best_residual = residual;
            best = z;
        }
        if (prev_max_step <= step_threshold && residual <= cfg.residual_tolerance) {
            return SolveReport{RootMultiset(z), sweeps, residual, true};
        }
        if (it == cfg.max_iterations) break;

        // One simultaneous (Jacobi) Aberth sweep.
        double max_step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex newton;
            if (derivative[i] == Complex{0.0, 0.0}) {
                // Derivative vanished exactly (symmetry point); nudge off it.
                newton = (value[i] == Complex{0.0, 0.0})
                             ? Complex{0.0, 0.0}
                             : Complex{1e-8 * (1.0 + std::abs(z[i])), 0.0};
            } else {
                newton = value[i] / derivative[i];
            }
            Complex repulsion{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex d = z[i] - z[j];
                if (d == Complex{0.0, 0.0}) d = Complex{1e-12 * (1.0 + std::abs(z[i])), 0.0};
                repulsion += 1.0 / d;
            }
            const Complex denom = 1.0 - newton * repulsion;
            Complex w = (denom == Complex{0.0, 0.0}) ? newton : newton / denom;
            if (!is_finite(w)) w = Complex{0.0, 0.0};
            step[i] = w;
            max_step = std::max(max_step, std::abs(w));
        }
        for (std::size_t i = 0; i < n; ++i) z[i] -= step[i];
        prev_max_step = max_step;
        ++sweeps;
    }

    return SolveReport{RootMultiset(best), sweeps, best_residual, false};
}

RootMultiset roots_of(const MonicPolynomial& p) {
    SolveReport report = solve(p);
    if (!report.converged) {
        throw SolveError("solver did not converge", std::move(report));
    }
    return std::move(report.roots);
}

}  // namespace rootspace
