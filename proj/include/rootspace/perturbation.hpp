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

#include <cstdint>

#include "rootspace/types.hpp"

namespace rootspace {

/// Ingredients of Ostrowski's root-displacement bound for a pair of
/// equal-degree monic polynomials: the roots can be matched so that no
/// matched pair is farther apart than (2n-1) * epsilon.
struct OstrowskiData {
    double gamma_cap = 0;  // Gamma = max_nu max(|a_nu|^(1/nu), |b_nu|^(1/nu))
    double gamma = 0;      // 2 * Gamma
    double epsilon = 0;    // (sum_nu |b_nu - a_nu| * gamma^(n-nu))^(1/n)
    double bound = 0;      // (2n - 1) * epsilon
};

/// Ingredients of the Rahman-Schmeisser displacement bound 4 * A * delta^(1/n),
/// valid for sufficiently small coefficient perturbations delta.
struct RSData {
    double a_cap = 1;  // A = max{1, 2|a_nu|^(1/(n-nu))}
    double delta = 0;  // d_P(f, g)
    double bound = 0;  // 4 * A * delta^(1/n)
};

/// Distinct cluster centers of a multiset with their multiplicities, and the
/// separation radius eta: half the minimum distance between distinct centers
/// (1 when there is a single center). Whenever a multiset U lies within
/// d_F < eta of V, each disk D(center_j, eta) holds exactly multiplicity_j
/// elements of U.
struct ClusterStructure {
    std::vector<Complex> centers;
    std::vector<std::size_t> multiplicities;
    double eta = 1.0;
};

enum class BoundKind : std::uint8_t { ostrowski, rahman_schmeisser };

/// One perturbation-bound evaluation against the measured root distance.
struct BoundCertificate {
    BoundKind bound_name = BoundKind::ostrowski;
    double bound_value = 0;
    double measured_dF = 0;
    bool holds = false;  // measured_dF <= bound_value
};

/// Evaluates Ostrowski's bound for the pair (f, g). Indexing follows the
/// classical statement f = x^n + a_1 x^{n-1} + ... + a_n, i.e. its a_nu is
/// our coefficient of z^{n-nu}. Throws on degree mismatch.
OstrowskiData ostrowski(const MonicPolynomial& f, const MonicPolynomial& g);

/// Evaluates the Rahman-Schmeisser bound with f as the reference polynomial.
RSData rahman_schmeisser(const MonicPolynomial& f, const MonicPolynomial& g);

/// Solves both polynomials, measures d_F between the root multisets, and
/// checks it against the chosen bound. Propagates SolveError.
///
/// The Rahman-Schmeisser bound is only asserted for sufficiently small
/// delta; for large delta a holds = false certificate is a report, not a
/// counterexample.
BoundCertificate certify(const MonicPolynomial& f, const MonicPolynomial& g, BoundKind which);

/// Merges elements within tol of each other (single linkage, transitive
/// closure) into centroid centers with summed multiplicities; tol = 0 merges
/// exact duplicates only. Centers keep first-occurrence order.
ClusterStructure cluster_structure(const RootMultiset& v, double tol);

/// With S = cluster_structure(V, tol): for each center, the number of
/// elements of U (with multiplicity) in the open disk of radius S.eta about
/// it. Counts equal the multiplicities whenever d_F(V, U) < S.eta.
std::vector<std::size_t> disk_counts(const RootMultiset& v, const RootMultiset& u, double tol);

}  // namespace rootspace
