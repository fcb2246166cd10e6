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
#include "rootspace/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rootspace/metrics.hpp"
#include "rootspace/perturbation.hpp"

namespace rootspace {

namespace {

double min_pairwise_gap(const ComplexTuple& u) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            gap = std::min(gap, std::abs(u[i] - u[j]));
        }
    }
    return gap;
}

void require_distinct(const ComplexTuple& u) {
    if (!(min_pairwise_gap(u) > 0.0)) {
        throw std::invalid_argument("coordinates not distinct");
    }
}

struct Detour {
    Complex center;
    double radius;
    double t_enter;
    double t_exit;
};

// Appends samples of the segment from the caller's current point to `to`,
// excluding the start point, including `to`.
void sample_segment(std::vector<Complex>& out, Complex from, Complex to, double h) {
    const double len = std::abs(to - from);
    const std::size_t m = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / h)));
    for (std::size_t s = 1; s < m; ++s) {
        const double t = static_cast<double>(s) / static_cast<double>(m);
        out.push_back(from + t * (to - from));
    }
    out.push_back(to);
}

// Arc around `center` from angle alpha through signed sweep, ending exactly
// at `to`. Excludes the start point.
void sample_arc(std::vector<Complex>& out, Complex center, double radius, double alpha,
                double sweep, Complex to, double h) {
    const double arc_len = radius * std::abs(sweep);
    const std::size_t m = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(arc_len / h)));
    for (std::size_t s = 1; s < m; ++s) {
        const double a = alpha + sweep * static_cast<double>(s) / static_cast<double>(m);
        out.push_back(center + Complex{radius * std::cos(a), radius * std::sin(a)});
    }
    out.push_back(to);
}

// Path from x to y in the plane avoiding every obstacle, sampled at spacing
// <= h. Starts exactly at x and ends exactly at y. Preconditions: x != y and
// every obstacle is distinct from x, from y, and from the other obstacles.
//
// Straight segment when it clears every obstacle's safety disk; otherwise
// the blocked stretches are replaced by circular detours around the
// obstructing points. Safety radii are half the obstacle's distance to its
// nearest neighbour (capped by the endpoint clearance), so the detour disks
// are pairwise disjoint and exclude both endpoints.
std::vector<Complex> plan_move(Complex x, Complex y, const std::vector<Complex>& obstacles,
                               double h) {
    std::vector<Complex> out{x};

    double gap = std::numeric_limits<double>::infinity();
    for (const Complex& f : obstacles) {
        gap = std::min(gap, std::min(std::abs(f - x), std::abs(f - y)));
    }

    const Complex d = y - x;
    const double len2 = std::norm(d);

    std::vector<Detour> detours;
    for (const Complex& f : obstacles) {
        double r = 0.5 * gap;
        for (const Complex& g : obstacles) {
            if (&g != &f) r = std::min(r, 0.5 * std::abs(f - g));
        }
        // Closest approach of the segment to f.
        const double tc = std::clamp(
            ((f - x).real() * d.real() + (f - x).imag() * d.imag()) / len2, 0.0, 1.0);
        const double dist = std::abs(x + tc * d - f);
        if (dist >= r) continue;
        // Segment crosses the safety disk: |x + t d - f|^2 = r^2.
        const double half = std::sqrt(std::max(0.0, (r * r - dist * dist) / len2));
        detours.push_back(Detour{f, r, tc - half, tc + half});
    }
    std::sort(detours.begin(), detours.end(),
              [](const Detour& a, const Detour& b) { return a.t_enter < b.t_enter; });

    Complex cursor = x;
    for (const Detour& det : detours) {
        const Complex enter = x + det.t_enter * d;
        const Complex exit = x + det.t_exit * d;
        sample_segment(out, cursor, enter, h);
        const double alpha = std::arg(enter - det.center);
        const double beta = std::arg(exit - det.center);
        double sweep = beta - alpha;
        while (sweep > std::numbers::pi) sweep -= 2.0 * std::numbers::pi;
        while (sweep <= -std::numbers::pi) sweep += 2.0 * std::numbers::pi;
        if (sweep == 0.0) sweep = std::numbers::pi;  // entry and exit coincide; any half turn
        sample_arc(out, det.center, det.radius, alpha, sweep, exit, h);
        cursor = exit;
    }
    sample_segment(out, cursor, y, h);
    return out;
}

}  // namespace

TuplePath::TuplePath(std::vector<ComplexTuple> samples, double step_budget)
    : samples_(std::move(samples)), step_budget_(step_budget) {
    if (samples_.size() < 2) throw std::invalid_argument("path needs at least two samples");
    for (const ComplexTuple& s : samples_) {
        if (!(min_pairwise_gap(s) > 0.0)) {
            throw std::invalid_argument("path sample has coinciding coordinates");
        }
    }
    const double slack = step_budget_ * (1.0 + 1e-9);
    for (std::size_t j = 0; j + 1 < samples_.size(); ++j) {
        if (sup_metric(samples_[j], samples_[j + 1]) > slack) {
            throw std::invalid_argument("path step exceeds the declared budget");
        }
    }
}

TuplePath connect_distinct_tuples(const ComplexTuple& v, const ComplexTuple& w) {
    if (v.size() != w.size()) throw std::invalid_argument("length mismatch");
    require_distinct(v);
    require_distinct(w);

    const std::size_t n = v.size();
    const double scale = 1.0 + std::max(v.max_modulus(), w.max_modulus());
    const double h = 0.05 * scale;

    std::vector<ComplexTuple> samples{v};
    std::vector<Complex> current = v.entries();

    const auto move_coordinate = [&](std::size_t k, Complex target) {
        if (current[k] == target) return;
        std::vector<Complex> obstacles;
        obstacles.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != k) obstacles.push_back(current[j]);
        }
        const std::vector<Complex> pts = plan_move(current[k], target, obstacles, h);
        for (std::size_t s = 1; s < pts.size(); ++s) {
            current[k] = pts[s];
            samples.emplace_back(current);
        }
    };

    std::size_t differing = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (v[j] != w[j]) ++differing;
    }

    if (differing == 0) {
        samples.push_back(v);  // trivial path
    } else if (differing == 1) {
        // Single-coordinate case: move it directly, no intermediate tuple.
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] != w[j]) move_coordinate(j, w[j]);
        }
    } else {
        // Intermediate tuple on a circle strictly outside every coordinate
        // of v and w, at n distinct angles.
        const double big_radius = 2.0 * scale;
        std::vector<Complex> mid(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double angle =
                (2.0 * std::numbers::pi * static_cast<double>(j) + std::numbers::pi / 4.0) /
                static_cast<double>(n);
            mid[j] = Complex{big_radius * std::cos(angle), big_radius * std::sin(angle)};
        }
        for (std::size_t j = 0; j < n; ++j) move_coordinate(j, mid[j]);
        for (std::size_t j = 0; j < n; ++j) move_coordinate(j, w[j]);
    }

    return TuplePath(std::move(samples), h);
}

RootTrajectory track(const MonicPolynomial& p, const MonicPolynomial& q, int steps,
                     const SolverConfig& config, int max_depth) {
    if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");

    const std::size_t n = p.degree();

    const auto interpolant = [&](double t) {
        std::vector<Complex> c(n);
        for (std::size_t j = 0; j < n; ++j) {
            c[j] = (1.0 - t) * p.coeff(j) + t * q.coeff(j);
        }
        return MonicPolynomial(std::move(c));
    };
    const auto solve_at = [&](const MonicPolynomial& poly) {
        SolveReport report = solve(poly, config);
        if (!report.converged) {
            throw SolveError("solver did not converge", std::move(report));
        }
        return std::move(report.roots);
    };

    RootTrajectory traj;
    traj.ts.push_back(0.0);
    MonicPolynomial p0 = interpolant(0.0);
    traj.root_sets.push_back(solve_at(p0));

    struct Node {
        double t;
        MonicPolynomial poly;
        RootMultiset roots;
    };

    // Accepts the step [lo, hi] if its root displacement is within the
    // displacement bound for the coefficient step; otherwise bisects.
    const auto refine = [&](const auto& self, const Node& lo, const Node& hi, int depth) -> void {
        const MatchingResult match = multiset_metric(lo.roots, hi.roots);
        const double threshold = rahman_schmeisser(lo.poly, hi.poly).bound;
        if (match.value <= threshold) {
            traj.ts.push_back(hi.t);
            traj.root_sets.push_back(hi.roots);
            traj.matchings.push_back(match.permutation);
            traj.step_dFs.push_back(match.value);
            return;
        }
        if (depth >= max_depth) {
            throw TrackError("refinement depth limit exceeded", lo.t, hi.t);
        }
        const double mid_t = 0.5 * (lo.t + hi.t);
        MonicPolynomial mid_poly = interpolant(mid_t);
        Node mid{mid_t, mid_poly, solve_at(mid_poly)};
        self(self, lo, mid, depth + 1);
        self(self, mid, hi, depth + 1);
    };

    Node prev{0.0, p0, traj.root_sets.front()};
    for (int j = 1; j <= steps; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(steps);
        MonicPolynomial poly = interpolant(t);
        Node node{t, poly, solve_at(poly)};
        refine(refine, prev, node, 0);
        prev = std::move(node);
    }
    return traj;
}

}  // namespace rootspace
