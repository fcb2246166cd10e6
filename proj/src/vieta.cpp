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
#include "rootspace/vieta.hpp"

namespace rootspace {

namespace {

// Non-leading coefficients (low to high) of the monic product of (z - r)
// over the given factors, one linear factor multiplied in at a time.
std::vector<Complex> accumulate_factors(const std::vector<Complex>& factors) {
    std::vector<Complex> c;
    c.reserve(factors.size());
    for (const Complex& r : factors) {
        const std::size_t k = c.size();  // degree of the current partial product
        if (k == 0) {
            c.push_back(-r);
            continue;
        }
        c.push_back(c[k - 1] - r);  // coefficient of z^k
        for (std::size_t j = k - 1; j >= 1; --j) c[j] = c[j - 1] - r * c[j];
        c[0] = -r * c[0];
    }
    return c;
}

}  // namespace

MonicPolynomial expand(const RootMultiset& roots) {
    return MonicPolynomial(accumulate_factors(roots.elems()));
}

SymmetricValues symmetric_values(const ComplexTuple& u) {
    return SymmetricValues{accumulate_factors(u.entries())};
}

}  // namespace rootspace
