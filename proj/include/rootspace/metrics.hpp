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

#include <vector>

#include "rootspace/types.hpp"

namespace rootspace {

/// Sup metric on coefficient vectors of equal-degree monic polynomials:
/// max_j |a_j - b_j|. Throws std::invalid_argument on degree mismatch.
double poly_metric(const MonicPolynomial& f, const MonicPolynomial& g);

/// Sup metric on C^n: max_j |u_j - v_j|. Throws on length mismatch.
double sup_metric(const ComplexTuple& u, const ComplexTuple& v);

/// Bottleneck matching metric between two n-element multisets:
/// min over permutations tau of max_j |u_j - v_{tau(j)}|.
///
/// Computed by binary search over the sorted distinct pairwise distances,
/// testing each threshold for a perfect matching (Hopcroft-Karp) in the
/// bipartite graph of pairs within the threshold. The returned value is
/// always one of the exact pairwise distances.
MatchingResult multiset_metric(const RootMultiset& u, const RootMultiset& v);

/// Exhaustive min-max over all n! permutations; the oracle for
/// multiset_metric. Limited to n <= 8.
MatchingResult multiset_metric_naive(const RootMultiset& u, const RootMultiset& v);

/// Forgets the order of a tuple: the multiset of its entries, with
/// multiplicities preserved. A contraction from (C^n, sup) to the
/// multiset space: d_F(project(u), project(v)) <= sup_metric(u, v).
RootMultiset project(const ComplexTuple& u);

/// Entry j of the result is u[sigma[j]]. sigma must be a bijection on {0..n-1}.
ComplexTuple permute(const ComplexTuple& u, const std::vector<std::size_t>& sigma);

}  // namespace rootspace
