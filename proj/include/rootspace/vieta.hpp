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

#include "rootspace/types.hpp"

namespace rootspace {

/// Values of the n signed elementary symmetric functions of a tuple,
/// indexed so that psi[k] equals coefficient a_k of prod (z - z_j):
/// psi[0] = (-1)^n z_1...z_n, ..., psi[n-1] = -(z_1 + ... + z_n).
/// Invariant under permutation of the input tuple up to summation-order
/// roundoff.
struct SymmetricValues {
    std::vector<Complex> psi;
};

/// The monic polynomial prod_j (z - v_j) with exactly the elements of V as
/// roots. Coefficients are accumulated by sequential multiplication of the
/// linear factors (O(n^2)), not by the closed-form symmetric sums.
MonicPolynomial expand(const RootMultiset& roots);

/// Coefficient values of prod_j (z - u_j) for an ordered tuple, computed by
/// the same linear-factor accumulation as expand(). Agrees with
/// expand(project(u)) coefficientwise.
SymmetricValues symmetric_values(const ComplexTuple& u);

}  // namespace rootspace
