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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "rootspace/metrics.hpp"
#include "rootspace/ordering.hpp"
#include "rootspace/paths.hpp"
#include "rootspace/perturbation.hpp"
#include "rootspace/rootfinder.hpp"
#include "rootspace/vieta.hpp"
#include "support/generators.hpp"

using namespace rootspace;
using rootspace::testing::Rng;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool oracle_equivalence(std::string& detail) {
    Rng rng(1001);
    double worst = 0.0;
    for (std::size_t n = 2; n <= 7; ++n) {
        for (int rep = 0; rep < 500; ++rep) {
            const RootMultiset u = testing::random_multiset(rng, n, 10.0);
            const RootMultiset v = testing::random_multiset(rng, n, 10.0);
            worst = std::max(worst, std::abs(multiset_metric(u, v).value -
                                             multiset_metric_naive(u, v).value));
        }
    }
    detail = "max |bottleneck - naive| = " + std::to_string(worst);
    return worst <= 1e-12;
}

bool metric_axioms(std::string& detail) {
    Rng rng(1002);
    const std::size_t n = 5;
    for (int rep = 0; rep < 1000; ++rep) {
        const RootMultiset u = testing::random_multiset(rng, n, 2.0);
        const RootMultiset v = testing::random_multiset(rng, n, 2.0);
        const RootMultiset w = testing::random_multiset(rng, n, 2.0);
        const double duv = multiset_metric(u, v).value;
        if (duv != multiset_metric(v, u).value) {
            detail = "symmetry violated";
            return false;
        }
        if (duv > multiset_metric(u, w).value + multiset_metric(w, v).value + 1e-12) {
            detail = "triangle inequality violated";
            return false;
        }
        const RootMultiset u2(testing::shuffled(rng, u.elems()));
        if (multiset_metric(u, u2).value != 0.0) {
            detail = "equal multisets at positive distance";
            return false;
        }
        if (!u.same_multiset(v) && duv <= 0.0) {
            detail = "distinct multisets at distance zero";
            return false;
        }
    }
    detail = "1000 triples, n = 5";
    return true;
}

bool convergent_sequence_values(std::string& detail) {
    const RootMultiset limit({Complex{0, -1}, Complex{0, 1}});
    const ComplexTuple limit_ordered = order_tuple(limit, OrderKind::lexicographic);
    double worst_dF = 0.0;
    double min_ordered = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 100; ++k) {
        const double kd = static_cast<double>(k);
        const RootMultiset uk({Complex{-1.0 / kd, 1}, Complex{1.0 / kd, -1}});
        worst_dF = std::max(worst_dF, std::abs(multiset_metric(uk, limit).value - 1.0 / kd));
        const double gap =
            sup_metric(order_tuple(uk, OrderKind::lexicographic), limit_ordered);
        min_ordered = std::min(min_ordered, gap);
        if (std::abs(gap - std::sqrt(1.0 / (kd * kd) + 4.0)) > 1e-12) {
            detail = "ordered gap deviates from sqrt(1/k^2 + 4) at k = " + std::to_string(k);
            return false;
        }
    }
    detail = "max |d_F - 1/k| = " + std::to_string(worst_dF) +
             ", min ordered gap = " + std::to_string(min_ordered);
    return worst_dF <= 1e-12 && min_ordered >= 2.0;
}

bool round_trip(std::string& detail) {
    Rng rng(1004);
    double worst = 0.0;
    for (std::size_t n = 2; n <= 10; ++n) {
        for (int rep = 0; rep < 200; ++rep) {
            const RootMultiset v(testing::separated_points(rng, n, 2.0, 0.1));
            try {
                worst = std::max(worst, multiset_metric(roots_of(expand(v)), v).value);
            } catch (const SolveError&) {
                detail = "solver failed to converge (n = " + std::to_string(n) + ")";
                return false;
            }
        }
    }
    detail = "max d_F(Z(Phi(V)), V) = " + std::to_string(worst);
    return worst <= 1e-8;
}

bool cauchy_containment(std::string& detail) {
    Rng rng(1005);
    int violations = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 2 + rep % 9;  // up to 10
        const MonicPolynomial p = testing::random_monic(rng, n, 5.0);
        if (solve(p).roots.max_modulus() >= 1.0 + p.max_coeff_modulus() + 1e-9) ++violations;
    }
    detail = std::to_string(violations) + " violations in 1000 polynomials";
    return violations == 0;
}

bool ostrowski_certification(std::string& detail) {
    // Hand instance first: z^2 vs z^2 - 0.01.
    const MonicPolynomial f0({Complex{0, 0}, Complex{0, 0}});
    const MonicPolynomial g0({Complex{-0.01, 0}, Complex{0, 0}});
    const OstrowskiData hand = ostrowski(f0, g0);
    const BoundCertificate hand_cert = certify(f0, g0, BoundKind::ostrowski);
    if (std::abs(hand.epsilon - 0.1) > 1e-15 || std::abs(hand.bound - 0.3) > 1e-15 ||
        std::abs(hand_cert.measured_dF - 0.1) > 1e-9 || !hand_cert.holds) {
        detail = "hand instance failed";
        return false;
    }

    Rng rng(1006);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 2 + rep % 7;  // up to 8
        const MonicPolynomial f = testing::random_monic(rng, n, 2.0);
        const MonicPolynomial g = testing::random_monic(rng, n, 2.0);
        try {
            if (!certify(f, g, BoundKind::ostrowski).holds) {
                detail = "bound violated at pair " + std::to_string(rep);
                return false;
            }
        } catch (const SolveError&) {
            detail = "solver failed to converge at pair " + std::to_string(rep);
            return false;
        }
    }
    detail = "hand instance + 1000 random pairs";
    return true;
}

bool rs_certification(std::string& detail) {
    Rng rng(1007);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 2 + rep % 7;
        const MonicPolynomial f = testing::random_monic(rng, n, 2.0);
        std::vector<Complex> perturbed = f.coeffs();
        for (Complex& c : perturbed) c += testing::complex_in_disk(rng, 1e-4);
        const MonicPolynomial g(std::move(perturbed));
        try {
            if (!certify(f, g, BoundKind::rahman_schmeisser).holds) {
                detail = "bound violated at pair " + std::to_string(rep);
                return false;
            }
        } catch (const SolveError&) {
            detail = "solver failed to converge at pair " + std::to_string(rep);
            return false;
        }
    }
    detail = "1000 pairs with delta <= 1e-4";
    return true;
}

bool disk_count_proposition(std::string& detail) {
    Rng rng(1008);
    std::uniform_int_distribution<std::size_t> cluster_count(2, 4);
    std::uniform_int_distribution<std::size_t> pick(0, 1000000);
    for (int rep = 0; rep < 500; ++rep) {
        const std::size_t k = cluster_count(rng);
        const std::vector<Complex> centers = testing::separated_points(rng, k, 4.0, 1.0);
        std::vector<std::size_t> mults(k, 1);
        const std::size_t n = k + 2 + static_cast<std::size_t>(rep % 4);
        for (std::size_t extra = k; extra < n; ++extra) ++mults[pick(rng) % k];

        std::vector<Complex> elems;
        for (std::size_t c = 0; c < k; ++c) elems.insert(elems.end(), mults[c], centers[c]);
        const RootMultiset v(elems);
        const double eta = cluster_structure(v, 0.0).eta;

        std::vector<Complex> moved = elems;
        for (Complex& z : moved) z += testing::complex_in_disk(rng, 0.999 * eta);
        if (disk_counts(v, RootMultiset(moved), 0.0) != mults) {
            detail = "count mismatch at instance " + std::to_string(rep);
            return false;
        }
    }
    detail = "500 constructed instances";
    return true;
}

bool path_construction(std::string& detail) {
    Rng rng(1009);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 2 + rep % 5;  // up to 6
        const ComplexTuple v(testing::separated_points(rng, n, 2.0, 1e-3));
        const ComplexTuple w(testing::separated_points(rng, n, 2.0, 1e-3));
        const TuplePath path = connect_distinct_tuples(v, w);
        if (!(path.samples().front() == v) || !(path.samples().back() == w)) {
            detail = "endpoints not exact at pair " + std::to_string(rep);
            return false;
        }
        for (const ComplexTuple& s : path.samples()) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    if (!(std::abs(s[i] - s[j]) > 0.0)) {
                        detail = "coinciding coordinates at pair " + std::to_string(rep);
                        return false;
                    }
                }
            }
        }
    }
    detail = "200 random pairs, all samples distinct, endpoints exact";
    return true;
}

bool tracking_through_collision(std::string& detail) {
    const MonicPolynomial p({Complex{1, 0}, Complex{0, 0}});
    const MonicPolynomial q({Complex{-1, 0}, Complex{0, 0}});
    try {
        const RootTrajectory traj = track(p, q, 8);
        const double start =
            multiset_metric(traj.root_sets.front(), RootMultiset({Complex{0, 1}, Complex{0, -1}}))
                .value;
        const double end =
            multiset_metric(traj.root_sets.back(), RootMultiset({Complex{1, 0}, Complex{-1, 0}}))
                .value;
        for (double d : traj.step_dFs) {
            if (!std::isfinite(d)) {
                detail = "non-finite step";
                return false;
            }
        }
        detail = "endpoint errors " + std::to_string(start) + " and " + std::to_string(end);
        return start <= 1e-8 && end <= 1e-8;
    } catch (const std::exception& e) {
        detail = std::string("tracking failed: ") + e.what();
        return false;
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<Criterion, double>> criteria = {
        {{"metric oracle equivalence (500 pairs per n in 2..7, disk radius 10)",
          oracle_equivalence},
         30.0},
        {{"metric axioms (1000 random triples, n = 5)", metric_axioms}, 10.0},
        {{"convergent root sequence: d_F = 1/k while ordered gaps stay >= 2",
          convergent_sequence_values},
         0.0},
        {{"homeomorphism round trip (200 multisets per n in 2..10, separation >= 0.1)",
          round_trip},
         60.0},
        {{"Cauchy containment (1000 polynomials, n <= 10, |a_j| <= 5)", cauchy_containment},
         0.0},
        {{"Ostrowski certification (hand instance + 1000 pairs, n in 2..8)",
          ostrowski_certification},
         0.0},
        {{"Rahman-Schmeisser certification (1000 pairs, delta <= 1e-4)", rs_certification}, 0.0},
        {{"disk counts match multiplicities (500 clustered instances)", disk_count_proposition},
         0.0},
        {{"path construction stays in the distinct set (200 pairs, n <= 6)", path_construction},
         0.0},
        {{"tracking z^2+1 -> z^2-1 through the double root", tracking_through_collision}, 0.0},
    };

    int failures = 0;
    int index = 0;
    for (const auto& [criterion, budget_seconds] : criteria) {
        ++index;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget_seconds > 0.0 && elapsed >= budget_seconds) {
            ok = false;
            detail += " [over time budget]";
        }
        std::string budget_note;
        if (budget_seconds > 0.0) {
            budget_note =
                " of " + std::to_string(static_cast<int>(budget_seconds)) + " allowed";
        }
        std::printf("%s %2d  %s  (%s; %.2f s%s)\n", ok ? "PASS" : "FAIL", index,
                    criterion.name.c_str(), detail.c_str(), elapsed, budget_note.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
