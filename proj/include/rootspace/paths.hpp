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

#include "rootspace/rootfinder.hpp"
#include "rootspace/types.hpp"

namespace rootspace {

/// A piecewise-linear path through the set of tuples with pairwise-distinct
/// coordinates. Construction checks the invariants: at least two samples,
/// every sample has pairwise-distinct coordinates, and consecutive samples
/// are no farther than step_budget apart in the sup metric.
class TuplePath {
public:
    TuplePath(std::vector<ComplexTuple> samples, double step_budget);

    const std::vector<ComplexTuple>& samples() const { return samples_; }
    double step_budget() const { return step_budget_; }

private:
    std::vector<ComplexTuple> samples_;
    double step_budget_ = 0;
};

/// Root sets of the segment (1-t) p + t q sampled at increasing t in [0, 1],
/// with the bottleneck matching and its value between consecutive sets.
struct RootTrajectory {
    std::vector<double> ts;
    std::vector<RootMultiset> root_sets;
    std::vector<std::vector<std::size_t>> matchings;  // link j -> j+1
    std::vector<double> step_dFs;                     // d_F(root_sets[j], root_sets[j+1])
};

/// Thrown by track when bisection hits its depth limit; carries the
/// offending sub-interval.
class TrackError : public std::runtime_error {
public:
    TrackError(const std::string& what, double t_lo, double t_hi)
        : std::runtime_error(what), t_lo_(t_lo), t_hi_(t_hi) {}
    double t_lo() const { return t_lo_; }
    double t_hi() const { return t_hi_; }

private:
    double t_lo_;
    double t_hi_;
};

/// Connects two tuples with pairwise-distinct coordinates by a path that
/// stays inside that set.
///
/// The construction changes one coordinate at a time: first each coordinate
/// of v is walked out to an intermediate tuple placed on a circle of radius
/// 2 * (1 + max modulus in v, w) -- guaranteed disjoint from every
/// coordinate of v and w -- then each is walked to its target in w. A
/// single-coordinate move follows the straight segment when it keeps a safe
/// clearance from the n-1 parked coordinates and takes a circular detour
/// around any parked coordinate that obstructs it. Inputs differing in one
/// coordinate (or none) skip the intermediate stage.
///
/// Throws std::invalid_argument("coordinates not distinct") when an input
/// has a repeated coordinate.
TuplePath connect_distinct_tuples(const ComplexTuple& v, const ComplexTuple& w);

/// Tracks the root multiset of the coefficient segment from p to q.
///
/// Solves (1-t) p + t q at t = j/steps and matches consecutive root sets
/// with the bottleneck metric. A step whose d_F exceeds the displacement
/// bound 4 A delta^(1/n) (A from the step's left polynomial, delta the
/// coefficient step) is bisected, up to max_depth levels; beyond that a
/// TrackError carrying the sub-interval is thrown. Solver non-convergence
/// propagates as SolveError.
RootTrajectory track(const MonicPolynomial& p, const MonicPolynomial& q, int steps,
                     const SolverConfig& config = {}, int max_depth = 20);

}  // namespace rootspace
