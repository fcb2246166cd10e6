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
#include "rootspace/ordering.hpp"

#include <algorithm>

#include "rootspace/metrics.hpp"
#include "rootspace/rootfinder.hpp"

namespace rootspace {

Ordering lex_compare(Complex z, Complex w) {
    if (z.real() < w.real()) return Ordering::less;
    if (z.real() > w.real()) return Ordering::greater;
    if (z.imag() < w.imag()) return Ordering::less;
    if (z.imag() > w.imag()) return Ordering::greater;
    return Ordering::equal;
}

namespace {

double arg_or_zero(Complex z) {
    if (z == Complex{0.0, 0.0}) return 0.0;  // fixes arg(0), incl. signed zeros
    return std::arg(z);
}

}  // namespace

Ordering mod_arg_compare(Complex z, Complex w) {
    const double az = std::abs(z);
    const double aw = std::abs(w);
    if (az < aw) return Ordering::less;
    if (az > aw) return Ordering::greater;
    const double argz = arg_or_zero(z);
    const double argw = arg_or_zero(w);
    if (argz < argw) return Ordering::less;
    if (argz > argw) return Ordering::greater;
    return Ordering::equal;
}

ComplexTuple order_tuple(const RootMultiset& v, OrderKind kind) {
    std::vector<Complex> out = v.elems();
    if (kind == OrderKind::lexicographic) {
        std::sort(out.begin(), out.end(),
                  [](Complex a, Complex b) { return lex_compare(a, b) == Ordering::less; });
    } else {
        std::sort(out.begin(), out.end(),
                  [](Complex a, Complex b) { return mod_arg_compare(a, b) == Ordering::less; });
    }
    return ComplexTuple(std::move(out));
}

DiscontinuityWitness discontinuity_witness(int K) {
    if (K < 2) throw std::invalid_argument("K must be >= 2");

    MonicPolynomial limit({Complex{1.0, 0.0}, Complex{0.0, 0.0}});  // z^2 + 1
    const ComplexTuple limit_ordered = order_tuple(roots_of(limit), OrderKind::lexicographic);
    const RootMultiset limit_roots = project(limit_ordered);

    DiscontinuityWitness w{limit, {}, {}, {}};
    w.sequence_polys.reserve(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        // p_k = z^2 + 1 + 2i/k - 1/k^2, whose roots are -1/k + i and 1/k - i.
        MonicPolynomial pk({Complex{1.0 - 1.0 / (kd * kd), 2.0 / kd}, Complex{0.0, 0.0}});
        const RootMultiset rk = roots_of(pk);
        w.dF_gaps.push_back(multiset_metric(rk, limit_roots).value);
        w.ordered_gaps.push_back(
            sup_metric(order_tuple(rk, OrderKind::lexicographic), limit_ordered));
        w.sequence_polys.push_back(std::move(pk));
    }
    return w;
}

}  // namespace rootspace
