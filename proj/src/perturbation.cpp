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
#include "rootspace/perturbation.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "rootspace/metrics.hpp"
#include "rootspace/rootfinder.hpp"

namespace rootspace {

OstrowskiData ostrowski(const MonicPolynomial& f, const MonicPolynomial& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
    const std::size_t n = f.degree();

    // Classical indexing: a_nu multiplies x^{n - nu}, nu = 1..n.
    const auto coeff_nu = [n](const MonicPolynomial& p, std::size_t nu) {
        return p.coeff(n - nu);
    };

    OstrowskiData data;
    for (std::size_t nu = 1; nu <= n; ++nu) {
        const double inv_nu = 1.0 / static_cast<double>(nu);
        data.gamma_cap = std::max(data.gamma_cap, std::pow(std::abs(coeff_nu(f, nu)), inv_nu));
        data.gamma_cap = std::max(data.gamma_cap, std::pow(std::abs(coeff_nu(g, nu)), inv_nu));
    }
    data.gamma = 2.0 * data.gamma_cap;

    double sum = 0.0;
    for (std::size_t nu = 1; nu <= n; ++nu) {
        sum += std::abs(coeff_nu(g, nu) - coeff_nu(f, nu)) *
               std::pow(data.gamma, static_cast<double>(n - nu));
    }
    data.epsilon = std::pow(sum, 1.0 / static_cast<double>(n));
    data.bound = static_cast<double>(2 * n - 1) * data.epsilon;
    return data;
}

RSData rahman_schmeisser(const MonicPolynomial& f, const MonicPolynomial& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
    const std::size_t n = f.degree();

    RSData data;
    data.a_cap = 1.0;
    for (std::size_t nu = 0; nu < n; ++nu) {
        const double e = 1.0 / static_cast<double>(n - nu);
        data.a_cap = std::max(data.a_cap, 2.0 * std::pow(std::abs(f.coeff(nu)), e));
    }
    data.delta = poly_metric(f, g);
    data.bound = 4.0 * data.a_cap * std::pow(data.delta, 1.0 / static_cast<double>(n));
    return data;
}

BoundCertificate certify(const MonicPolynomial& f, const MonicPolynomial& g, BoundKind which) {
    if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");

    BoundCertificate cert;
    cert.bound_name = which;
    cert.bound_value = (which == BoundKind::ostrowski) ? ostrowski(f, g).bound
                                                       : rahman_schmeisser(f, g).bound;
    cert.measured_dF = multiset_metric(roots_of(f), roots_of(g)).value;
    cert.holds = cert.measured_dF <= cert.bound_value;
    return cert;
}

ClusterStructure cluster_structure(const RootMultiset& v, double tol) {
    if (!(tol >= 0)) throw std::invalid_argument("tol must be >= 0");
    const std::size_t n = v.size();
    const std::vector<Complex>& elems = v.elems();

    // Single-linkage union-find: link every pair within tol.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(elems[i] - elems[j]) <= tol) {
                const std::size_t a = find(i);
                const std::size_t b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }

    ClusterStructure s;
    std::vector<std::size_t> cluster_of(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (cluster_of[root] == static_cast<std::size_t>(-1)) {
            cluster_of[root] = s.centers.size();
            s.centers.push_back(Complex{0.0, 0.0});
            s.multiplicities.push_back(0);
        }
        const std::size_t c = cluster_of[root];
        s.centers[c] += elems[i];
        s.multiplicities[c] += 1;
    }
    for (std::size_t c = 0; c < s.centers.size(); ++c) {
        s.centers[c] /= static_cast<double>(s.multiplicities[c]);
    }

    if (s.centers.size() == 1) {
        s.eta = 1.0;
    } else {
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < s.centers.size(); ++i) {
            for (std::size_t j = i + 1; j < s.centers.size(); ++j) {
                min_gap = std::min(min_gap, std::abs(s.centers[i] - s.centers[j]));
            }
        }
        s.eta = 0.5 * min_gap;
    }
    return s;
}

std::vector<std::size_t> disk_counts(const RootMultiset& v, const RootMultiset& u, double tol) {
    if (v.size() != u.size()) throw std::invalid_argument("size mismatch");
    const ClusterStructure s = cluster_structure(v, tol);

    std::vector<std::size_t> counts(s.centers.size(), 0);
    for (const Complex& x : u.elems()) {
        for (std::size_t c = 0; c < s.centers.size(); ++c) {
            if (std::abs(x - s.centers[c]) < s.eta) ++counts[c];
        }
    }
    return counts;
}

}  // namespace rootspace
