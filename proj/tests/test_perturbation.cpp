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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootspace/metrics.hpp"
#include "rootspace/perturbation.hpp"
#include "rootspace/rootfinder.hpp"
#include "rootspace/vieta.hpp"
#include "support/generators.hpp"

using namespace rootspace;
using rootspace::testing::Rng;

TEST_CASE("ostrowski data on the hand instance z^2 vs z^2 - 0.01") {
    const MonicPolynomial f({Complex{0, 0}, Complex{0, 0}});
    const MonicPolynomial g({Complex{-0.01, 0}, Complex{0, 0}});
    const OstrowskiData data = ostrowski(f, g);
    CHECK(data.gamma_cap == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(data.gamma == 2.0 * data.gamma_cap);
    CHECK(data.epsilon == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(data.bound == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(data.bound == 3.0 * data.epsilon);

    // Roots 0, 0 vs +-0.1: actual displacement 0.1 is inside the bound.
    const BoundCertificate cert = certify(f, g, BoundKind::ostrowski);
    CHECK(cert.measured_dF == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(cert.holds);
}

TEST_CASE("identical polynomials certify trivially under both bounds") {
    const MonicPolynomial f({Complex{0.3, -0.7}, Complex{1.5, 0.2}, Complex{0, 1}});
    const OstrowskiData o = ostrowski(f, f);
    CHECK(o.epsilon == 0.0);
    CHECK(o.bound == 0.0);
    const RSData rs = rahman_schmeisser(f, f);
    CHECK(rs.delta == 0.0);
    CHECK(rs.bound == 0.0);
    for (BoundKind kind : {BoundKind::ostrowski, BoundKind::rahman_schmeisser}) {
        const BoundCertificate cert = certify(f, f, kind);
        CHECK(cert.measured_dF == 0.0);
        CHECK(cert.holds);
    }
}

TEST_CASE("rahman_schmeisser data") {
    // A for z^2 + 1: max{1, 2*|1|^(1/2), 2*|0|^(1/1)} = 2.
    const MonicPolynomial f({Complex{1, 0}, Complex{0, 0}});
    CHECK(rahman_schmeisser(f, f).a_cap == 2.0);

    // Perturbed by 2i/k - 1/k^2 at k = 100: root displacement 0.01 is well
    // inside 4 A delta^(1/2) = 8 delta^(1/2).
    const double k = 100.0;
    const MonicPolynomial g({Complex{1.0 - 1.0 / (k * k), 2.0 / k}, Complex{0, 0}});
    const RSData data = rahman_schmeisser(f, g);
    CHECK(data.delta == std::abs(Complex{-1.0 / (k * k), 2.0 / k}));
    CHECK(data.bound == 4.0 * 2.0 * std::pow(data.delta, 0.5));
    const BoundCertificate cert = certify(f, g, BoundKind::rahman_schmeisser);
    CHECK(cert.measured_dF == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(cert.holds);
}

TEST_CASE("degree mismatch is rejected") {
    const MonicPolynomial f({Complex{1, 0}, Complex{0, 0}});
    const MonicPolynomial g({Complex{1, 0}, Complex{0, 0}, Complex{0, 0}});
    CHECK_THROWS_WITH_AS(ostrowski(f, g), "degree mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(rahman_schmeisser(f, g), "degree mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(certify(f, g, BoundKind::ostrowski), "degree mismatch",
                         std::invalid_argument);
}

TEST_CASE("ostrowski certificates hold on random pairs") {
    Rng rng(61);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 2 + rep % 7;  // up to 8
        const MonicPolynomial f = testing::random_monic(rng, n, 2.0);
        const MonicPolynomial g = testing::random_monic(rng, n, 2.0);
        CHECK(certify(f, g, BoundKind::ostrowski).holds);
    }
}

TEST_CASE("rahman-schmeisser certificates hold for small perturbations") {
    Rng rng(67);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 2 + rep % 7;
        const MonicPolynomial f = testing::random_monic(rng, n, 2.0);
        std::vector<Complex> perturbed = f.coeffs();
        for (Complex& c : perturbed) c += testing::complex_in_disk(rng, 1e-4);
        const MonicPolynomial g(std::move(perturbed));
        REQUIRE(poly_metric(f, g) <= 1e-4);
        CHECK(certify(f, g, BoundKind::rahman_schmeisser).holds);
    }
}

TEST_CASE("cluster_structure on hand instances") {
    const ClusterStructure s =
        cluster_structure(RootMultiset({Complex{0, 0}, Complex{0, 0}, Complex{3, 4}}), 0.0);
    CHECK(s.centers == std::vector<Complex>{Complex{0, 0}, Complex{3, 4}});
    CHECK(s.multiplicities == std::vector<std::size_t>{2, 1});
    CHECK(s.eta == 2.5);  // half of |0 - (3 + 4i)| = 5

    const ClusterStructure single =
        cluster_structure(RootMultiset(std::vector<Complex>(6, Complex{0, 0})), 0.0);
    CHECK(single.centers.size() == 1);
    CHECK(single.multiplicities == std::vector<std::size_t>{6});
    CHECK(single.eta == 1.0);

    const ClusterStructure merged = cluster_structure(
        RootMultiset({Complex{1, 0}, Complex{1 + 1e-14, 0}, Complex{5, 0}}), 1e-12);
    CHECK(merged.multiplicities == std::vector<std::size_t>{2, 1});
    CHECK(std::abs(merged.centers[0] - Complex{1, 0}) <= 1e-13);
    CHECK(merged.centers[1] == Complex{5, 0});

    CHECK_THROWS_AS(cluster_structure(RootMultiset({Complex{0, 0}, Complex{1, 0}}), -1.0),
                    std::invalid_argument);
}

TEST_CASE("single linkage merges through chains") {
    // 0, 0.9, 1.8 with tol 1 collapse into one cluster even though the
    // extremes are 1.8 apart.
    const ClusterStructure s = cluster_structure(
        RootMultiset({Complex{0, 0}, Complex{0.9, 0}, Complex{1.8, 0}}), 1.0);
    CHECK(s.multiplicities == std::vector<std::size_t>{3});
    CHECK(std::abs(s.centers[0] - Complex{0.9, 0}) <= 1e-15);
    CHECK(s.eta == 1.0);
}

TEST_CASE("disk_counts on hand instances") {
    const RootMultiset v({Complex{0, 0}, Complex{0, 0}, Complex{3, 4}});
    const RootMultiset u({Complex{0.1, 0}, Complex{-0.1, 0}, Complex{3.1, 4}});
    REQUIRE(multiset_metric(v, u).value < 2.5);
    CHECK(disk_counts(v, u, 0.0) == std::vector<std::size_t>{2, 1});

    CHECK(disk_counts(v, v, 0.0) == std::vector<std::size_t>{2, 1});

    // {i, -i} vs the k = 10 term of the convergent sequence: d_F = 0.1 < 1.
    const RootMultiset w({Complex{0, 1}, Complex{0, -1}});
    const RootMultiset wk({Complex{-0.1, 1}, Complex{0.1, -1}});
    CHECK(cluster_structure(w, 0.0).eta == 1.0);
    CHECK(disk_counts(w, wk, 0.0) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("perturbations below eta preserve the disk counts") {
    Rng rng(71);
    std::uniform_int_distribution<std::size_t> cluster_count(2, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t k = cluster_count(rng);
        const std::vector<Complex> centers = testing::separated_points(rng, k, 3.0, 1.0);

        std::vector<Complex> elems;
        std::vector<std::size_t> mults(k, 1);
        for (std::size_t extra = k; extra < 8; ++extra) {
            ++mults[static_cast<std::size_t>(unit(rng) * static_cast<double>(k)) % k];
        }
        for (std::size_t c = 0; c < k; ++c) {
            elems.insert(elems.end(), mults[c], centers[c]);
        }
        const RootMultiset v(elems);
        const ClusterStructure s = cluster_structure(v, 0.0);
        REQUIRE(s.multiplicities == mults);

        std::vector<Complex> moved = elems;
        for (Complex& z : moved) z += testing::complex_in_disk(rng, 0.99 * s.eta);
        CHECK(disk_counts(v, RootMultiset(moved), 0.0) == mults);
    }
}

TEST_CASE("eta scales linearly with the multiset") {
    Rng rng(73);
    for (double s : {0.5, 2.0, 3.75}) {
        for (int rep = 0; rep < 50; ++rep) {
            const std::size_t n = 2 + rep % 6;
            std::vector<Complex> elems = testing::separated_points(rng, n, 2.0, 0.05);
            const double eta = cluster_structure(RootMultiset(elems), 0.0).eta;
            for (Complex& z : elems) z *= s;
            const double scaled_eta = cluster_structure(RootMultiset(elems), 0.0).eta;
            CHECK(std::abs(scaled_eta - s * eta) <= 1e-15 * std::abs(s * eta));
        }
    }
}
