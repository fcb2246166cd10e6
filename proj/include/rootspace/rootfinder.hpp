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
#pragma once

#include <stdexcept>

#include "rootspace/types.hpp"

namespace rootspace {

struct SolverConfig {
    int max_iterations = 200;
    double residual_tolerance = 1e-12;  // on |p(z)| / (1 + max|a_j|)^n
    double step_tolerance = 1e-13;      // on steps, scaled by 1 + cauchy_bound
    double initial_radius_factor = 0.9; // in (0, 1]; fraction of the Cauchy radius
};

struct SolveReport {
    RootMultiset roots;
    int iterations = 0;      // Aberth sweeps performed
    double max_residual = 0; // max_i |p(z_i)| / (1 + max|a_j|)^n at the returned roots
    bool converged = false;
};

/// Thrown by roots_of when the iteration does not meet its tolerances;
/// carries the best iterate found.
class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& what, SolveReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const SolveReport& report() const { return report_; }

private:
    SolveReport report_;
};

/// Cauchy a-priori root bound 1 + max_j |a_j|: every root z of p satisfies
/// |z| strictly below this value.
double cauchy_bound(const MonicPolynomial& p);

/// All n roots of p by Aberth-Ehrlich simultaneous iteration.
///
/// Initial guesses sit equally spaced on the circle of radius
/// initial_radius_factor * cauchy_bound(p), with angular offset pi/(2n) so
/// no guess starts on a coordinate axis. Iteration stops once the largest
/// Aberth step is at most step_tolerance * (1 + cauchy_bound) and the scaled
/// residual is at most residual_tolerance, or at max_iterations with the
/// best iterate seen and converged = false. Deterministic: identical inputs
/// and config produce bit-identical output.
///
/// Multiple roots are returned as nearby simple roots (an m-fold root is
/// resolved to roughly tolerance^(1/m)); cluster structure can be recovered
/// downstream. Practical degree ceiling is around 500 (O(n^2) per sweep).
SolveReport solve(const MonicPolynomial& p, const SolverConfig& config = {});

/// solve() with default configuration; throws SolveError if it did not
/// converge.
RootMultiset roots_of(const MonicPolynomial& p);

}  // namespace rootspace
