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

enum class Ordering : std::int8_t { less = -1, equal = 0, greater = 1 };

enum class OrderKind : std::uint8_t { lexicographic, modulus_argument };

/// Lexicographic total order on C: z precedes w iff re(z) < re(w), or the
/// real parts agree and im(z) <= im(w).
Ordering lex_compare(Complex z, Complex w);

/// Total order by modulus, then argument in (-pi, pi] with arg(0) := 0.
Ordering mod_arg_compare(Complex z, Complex w);

/// The unique nondecreasing arrangement of a multiset's elements under the
/// chosen total order; a selection: project(order_tuple(V, kind)) == V.
ComplexTuple order_tuple(const RootMultiset& v, OrderKind kind);

/// The sequence z^2 + 1 + 2i/k - 1/k^2 (k = 1..K) converging to z^2 + 1,
/// with the multiset distances between the root sets (which vanish) against
/// the sup distances between their lexicographically ordered root tuples
/// (which stay >= 2): sorting roots into tuples is not a continuous
/// operation even though the root multisets converge.
struct DiscontinuityWitness {
    MonicPolynomial limit_poly;
    std::vector<MonicPolynomial> sequence_polys;
    std::vector<double> dF_gaps;       // d_F(Z(p_k), Z(p)) = 1/k, decreasing to 0
    std::vector<double> ordered_gaps;  // sup distance of ordered tuples, >= 2 throughout
};

/// Builds the witness for k = 1..K (K >= 2). Root sets come from the
/// default solver; SolveError propagates.
DiscontinuityWitness discontinuity_witness(int K);

}  // namespace rootspace
