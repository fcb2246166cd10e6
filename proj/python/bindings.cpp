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
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rootspace/metrics.hpp"
#include "rootspace/ordering.hpp"
#include "rootspace/paths.hpp"
#include "rootspace/perturbation.hpp"
#include "rootspace/rootfinder.hpp"
#include "rootspace/vieta.hpp"

namespace py = pybind11;
using namespace rootspace;

namespace {

using ComplexVec = std::vector<Complex>;

RootMultiset as_multiset(const ComplexVec& elems) { return RootMultiset(elems); }
ComplexTuple as_tuple(const ComplexVec& entries) { return ComplexTuple(entries); }
MonicPolynomial as_poly(const ComplexVec& coeffs) { return MonicPolynomial(coeffs); }

OrderKind order_kind(const std::string& kind) {
    if (kind == "lex" || kind == "lexicographic") return OrderKind::lexicographic;
    if (kind == "modarg" || kind == "modulus_argument") return OrderKind::modulus_argument;
    throw std::invalid_argument("unknown order kind: " + kind);
}

BoundKind bound_kind(const std::string& which) {
    if (which == "ostrowski") return BoundKind::ostrowski;
    if (which == "rs" || which == "rahman_schmeisser") return BoundKind::rahman_schmeisser;
    throw std::invalid_argument("unknown bound: " + which);
}

py::dict report_dict(const SolveReport& r) {
    py::dict d;
    d["roots"] = r.roots.elems();
    d["iterations"] = r.iterations;
    d["max_residual"] = r.max_residual;
    d["converged"] = r.converged;
    return d;
}

SolverConfig make_config(int max_iterations, double residual_tolerance, double step_tolerance,
                         double initial_radius_factor) {
    return SolverConfig{max_iterations, residual_tolerance, step_tolerance,
                        initial_radius_factor};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Metric-space toolkit for monic polynomials and their root multisets";

    // Polynomials are passed as their n non-leading coefficients a_0..a_{n-1}
    // (low to high, leading 1 implicit); multisets and tuples as lists of
    // complex numbers.

    m.def(
        "poly_metric",
        [](const ComplexVec& a, const ComplexVec& b) {
            return poly_metric(as_poly(a), as_poly(b));
        },
        py::arg("f"), py::arg("g"), "Sup distance between coefficient vectors.");

    m.def(
        "sup_metric",
        [](const ComplexVec& u, const ComplexVec& v) {
            return sup_metric(as_tuple(u), as_tuple(v));
        },
        py::arg("u"), py::arg("v"), "Sup distance between ordered tuples.");

    m.def(
        "multiset_metric",
        [](const ComplexVec& u, const ComplexVec& v) {
            const MatchingResult r = multiset_metric(as_multiset(u), as_multiset(v));
            return py::make_tuple(r.value, r.permutation);
        },
        py::arg("u"), py::arg("v"),
        "Bottleneck matching distance; returns (value, permutation).");

    m.def(
        "multiset_metric_naive",
        [](const ComplexVec& u, const ComplexVec& v) {
            const MatchingResult r = multiset_metric_naive(as_multiset(u), as_multiset(v));
            return py::make_tuple(r.value, r.permutation);
        },
        py::arg("u"), py::arg("v"), "Factorial-time oracle for multiset_metric (n <= 8).");

    m.def(
        "expand",
        [](const ComplexVec& roots) { return expand(as_multiset(roots)).coeffs(); },
        py::arg("roots"), "Coefficients a_0..a_{n-1} of prod (z - root).");

    m.def(
        "symmetric_values",
        [](const ComplexVec& entries) { return symmetric_values(as_tuple(entries)).psi; },
        py::arg("entries"), "Signed elementary symmetric values of a tuple.");

    m.def(
        "cauchy_bound",
        [](const ComplexVec& coeffs) { return cauchy_bound(as_poly(coeffs)); },
        py::arg("coeffs"), "Strict a-priori bound 1 + max |a_j| on every root modulus.");

    m.def(
        "solve",
        [](const ComplexVec& coeffs, int max_iterations, double residual_tolerance,
           double step_tolerance, double initial_radius_factor) {
            return report_dict(
                solve(as_poly(coeffs), make_config(max_iterations, residual_tolerance,
                                                   step_tolerance, initial_radius_factor)));
        },
        py::arg("coeffs"), py::arg("max_iterations") = 200,
        py::arg("residual_tolerance") = 1e-12, py::arg("step_tolerance") = 1e-13,
        py::arg("initial_radius_factor") = 0.9,
        "Aberth-Ehrlich simultaneous iteration; returns a report dict.");

    m.def(
        "roots_of",
        [](const ComplexVec& coeffs) { return roots_of(as_poly(coeffs)).elems(); },
        py::arg("coeffs"), "Roots with default solver settings; raises if not converged.");

    m.def(
        "ostrowski",
        [](const ComplexVec& f, const ComplexVec& g) {
            const OstrowskiData d = ostrowski(as_poly(f), as_poly(g));
            py::dict out;
            out["gamma_cap"] = d.gamma_cap;
            out["gamma"] = d.gamma;
            out["epsilon"] = d.epsilon;
            out["bound"] = d.bound;
            return out;
        },
        py::arg("f"), py::arg("g"), "Ostrowski displacement bound data.");

    m.def(
        "rahman_schmeisser",
        [](const ComplexVec& f, const ComplexVec& g) {
            const RSData d = rahman_schmeisser(as_poly(f), as_poly(g));
            py::dict out;
            out["a_cap"] = d.a_cap;
            out["delta"] = d.delta;
            out["bound"] = d.bound;
            return out;
        },
        py::arg("f"), py::arg("g"), "Rahman-Schmeisser displacement bound data.");

    m.def(
        "certify",
        [](const ComplexVec& f, const ComplexVec& g, const std::string& which) {
            const BoundCertificate c = certify(as_poly(f), as_poly(g), bound_kind(which));
            py::dict out;
            out["bound_name"] = (c.bound_name == BoundKind::ostrowski) ? "ostrowski"
                                                                       : "rahman_schmeisser";
            out["bound_value"] = c.bound_value;
            out["measured_dF"] = c.measured_dF;
            out["holds"] = c.holds;
            return out;
        },
        py::arg("f"), py::arg("g"), py::arg("which") = "ostrowski",
        "Measured root displacement against the chosen bound.");

    m.def(
        "cluster_structure",
        [](const ComplexVec& elems, double tol) {
            const ClusterStructure s = cluster_structure(as_multiset(elems), tol);
            py::dict out;
            out["centers"] = s.centers;
            out["multiplicities"] = s.multiplicities;
            out["eta"] = s.eta;
            return out;
        },
        py::arg("elems"), py::arg("tol") = 0.0,
        "Cluster centers, multiplicities and the separation radius eta.");

    m.def(
        "disk_counts",
        [](const ComplexVec& v, const ComplexVec& u, double tol) {
            return disk_counts(as_multiset(v), as_multiset(u), tol);
        },
        py::arg("v"), py::arg("u"), py::arg("tol") = 0.0,
        "Elements of u in each eta-disk around the cluster centers of v.");

    m.def(
        "order_tuple",
        [](const ComplexVec& elems, const std::string& kind) {
            return order_tuple(as_multiset(elems), order_kind(kind)).entries();
        },
        py::arg("elems"), py::arg("kind") = "lex",
        "Nondecreasing arrangement under 'lex' or 'modarg' order.");

    m.def(
        "discontinuity_witness",
        [](int k_max) {
            const DiscontinuityWitness w = discontinuity_witness(k_max);
            py::dict out;
            out["limit_coeffs"] = w.limit_poly.coeffs();
            py::list seq;
            for (const MonicPolynomial& p : w.sequence_polys) seq.append(p.coeffs());
            out["sequence_coeffs"] = seq;
            out["dF_gaps"] = w.dF_gaps;
            out["ordered_gaps"] = w.ordered_gaps;
            return out;
        },
        py::arg("k_max") = 10,
        "Root multisets converge while their sorted tuples stay far apart.");

    m.def(
        "connect_distinct_tuples",
        [](const ComplexVec& v, const ComplexVec& w) {
            const TuplePath path = connect_distinct_tuples(as_tuple(v), as_tuple(w));
            py::list samples;
            for (const ComplexTuple& s : path.samples()) samples.append(s.entries());
            return py::make_tuple(samples, path.step_budget());
        },
        py::arg("v"), py::arg("w"),
        "Path between distinct-coordinate tuples staying in the distinct set;"
        " returns (samples, step_budget).");

    m.def(
        "track",
        [](const ComplexVec& p, const ComplexVec& q, int steps) {
            const RootTrajectory traj = track(as_poly(p), as_poly(q), steps);
            py::dict out;
            out["ts"] = traj.ts;
            py::list sets;
            for (const RootMultiset& r : traj.root_sets) sets.append(r.elems());
            out["root_sets"] = sets;
            out["matchings"] = traj.matchings;
            out["step_dFs"] = traj.step_dFs;
            return out;
        },
        py::arg("p"), py::arg("q"), py::arg("steps") = 8,
        "Root trajectory along the coefficient segment from p to q.");
}
