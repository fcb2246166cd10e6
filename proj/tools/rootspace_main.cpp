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

// Command-line front end. Exit codes: 0 success, 1 input error, 2 solver
// failure (non-convergence or tracking depth limit), 3 certificate failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rootspace/io.hpp"
#include "rootspace/metrics.hpp"
#include "rootspace/ordering.hpp"
#include "rootspace/paths.hpp"
#include "rootspace/perturbation.hpp"
#include "rootspace/rootfinder.hpp"
#include "rootspace/vieta.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rootspace;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSolver = 2;
constexpr int kExitCertificate = 3;

void print_doc(const ordered_json& doc) { std::fputs(to_json_text(doc).c_str(), stdout); }

int run_roots(const std::string& input, const SolverConfig& cfg) {
    const MonicPolynomial p = read_poly_file(input);
    const SolveReport report = solve(p, cfg);

    ordered_json doc = multiset_to_json(report.roots);
    doc["report"] = ordered_json{{"iterations", report.iterations},
                                 {"max_residual", report.max_residual},
                                 {"converged", report.converged},
                                 {"cauchy_bound", cauchy_bound(p)}};
    print_doc(doc);
    return report.converged ? kExitOk : kExitSolver;
}

int run_metric(const std::string& file_a, const std::string& file_b, const std::string& space) {
    ordered_json doc;
    if (space == "poly") {
        doc["value"] = poly_metric(read_poly_file(file_a), read_poly_file(file_b));
    } else {
        const MatchingResult m =
            multiset_metric(read_multiset_file(file_a), read_multiset_file(file_b));
        doc["value"] = m.value;
        doc["permutation"] = m.permutation;
    }
    print_doc(doc);
    return kExitOk;
}

int run_expand(const std::string& input) {
    print_doc(poly_to_json(expand(read_multiset_file(input))));
    return kExitOk;
}

int run_certify(const std::string& file_f, const std::string& file_g, const std::string& bound) {
    const MonicPolynomial f = read_poly_file(file_f);
    const MonicPolynomial g = read_poly_file(file_g);
    const BoundKind kind = (bound == "rs") ? BoundKind::rahman_schmeisser : BoundKind::ostrowski;
    const BoundCertificate cert = certify(f, g, kind);

    ordered_json doc;
    doc["bound_name"] =
        (kind == BoundKind::ostrowski) ? "ostrowski" : "rahman_schmeisser";
    if (kind == BoundKind::ostrowski) {
        const OstrowskiData data = ostrowski(f, g);
        doc["gamma_cap"] = data.gamma_cap;
        doc["gamma"] = data.gamma;
        doc["epsilon"] = data.epsilon;
    } else {
        const RSData data = rahman_schmeisser(f, g);
        doc["a_cap"] = data.a_cap;
        doc["delta"] = data.delta;
    }
    doc["bound_value"] = cert.bound_value;
    doc["measured_dF"] = cert.measured_dF;
    doc["holds"] = cert.holds;
    print_doc(doc);
    return cert.holds ? kExitOk : kExitCertificate;
}

int run_track(const std::string& file_p, const std::string& file_q, int steps,
              const SolverConfig& cfg) {
    const MonicPolynomial p = read_poly_file(file_p);
    const MonicPolynomial q = read_poly_file(file_q);

    ordered_json rows = ordered_json::array();
    if (poly_metric(p, q) == 0.0) {
        // Constant trajectory; a single row says it all.
        ordered_json row;
        row["t"] = 1.0;
        row["elems"] = multiset_to_json(roots_of(p))["elems"];
        row["step_dF"] = 0.0;
        rows.push_back(std::move(row));
    } else {
        const RootTrajectory traj = track(p, q, steps, cfg);
        for (std::size_t j = 0; j < traj.ts.size(); ++j) {
            ordered_json row;
            row["t"] = traj.ts[j];
            row["elems"] = multiset_to_json(traj.root_sets[j])["elems"];
            row["step_dF"] = (j == 0) ? 0.0 : traj.step_dFs[j - 1];
            rows.push_back(std::move(row));
        }
    }
    print_doc(rows);
    return kExitOk;
}

int run_demo_discontinuity(int k_max) {
    const DiscontinuityWitness witness = discontinuity_witness(k_max);

    ordered_json doc;
    doc["limit_poly"] = poly_to_json(witness.limit_poly);
    ordered_json rows = ordered_json::array();
    for (std::size_t j = 0; j < witness.sequence_polys.size(); ++j) {
        ordered_json row;
        row["k"] = j + 1;
        row["poly"] = poly_to_json(witness.sequence_polys[j]);
        row["dF_gap"] = witness.dF_gaps[j];
        row["ordered_gap"] = witness.ordered_gaps[j];
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    print_doc(doc);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metric-space toolkit for monic polynomials and their root multisets"};
    app.require_subcommand(1);

    long long seed = 0;  // reserved for batch modes; no current subcommand draws randomness
    app.add_option("--seed", seed, "Seed for randomized batch modes (reserved)");

    SolverConfig cfg;
    std::string input_a;
    std::string input_b;
    std::string space = "roots";
    std::string bound = "ostrowski";
    int steps = 8;
    int k_max = 10;

    CLI::App* roots = app.add_subcommand("roots", "Solve a polynomial file for its root multiset");
    roots->add_option("input", input_a, "Polynomial JSON file")->required();
    roots->add_option("--tol", cfg.residual_tolerance, "Residual tolerance");
    roots->add_option("--max-iter", cfg.max_iterations, "Maximum solver sweeps");

    CLI::App* metric = app.add_subcommand("metric", "Distance between two files");
    metric->add_option("a", input_a, "First file")->required();
    metric->add_option("b", input_b, "Second file")->required();
    metric->add_option("--space", space, "Which metric: poly or roots")
        ->check(CLI::IsMember({"poly", "roots"}));

    CLI::App* expand_cmd = app.add_subcommand("expand", "Multiset file -> monic polynomial");
    expand_cmd->add_option("input", input_a, "Multiset JSON file")->required();

    CLI::App* certify_cmd =
        app.add_subcommand("certify", "Check a root-displacement bound for a polynomial pair");
    certify_cmd->add_option("f", input_a, "Reference polynomial file")->required();
    certify_cmd->add_option("g", input_b, "Perturbed polynomial file")->required();
    certify_cmd->add_option("--bound", bound, "Which bound: ostrowski or rs")
        ->check(CLI::IsMember({"ostrowski", "rs"}));

    CLI::App* track_cmd =
        app.add_subcommand("track", "Track the root multiset along a coefficient segment");
    track_cmd->add_option("p", input_a, "Start polynomial file")->required();
    track_cmd->add_option("q", input_b, "End polynomial file")->required();
    track_cmd->add_option("--steps", steps, "Number of segment steps")->check(CLI::PositiveNumber);
    track_cmd->add_option("--tol", cfg.residual_tolerance, "Residual tolerance");
    track_cmd->add_option("--max-iter", cfg.max_iterations, "Maximum solver sweeps");

    CLI::App* demo = app.add_subcommand(
        "demo-discontinuity", "Root sorting is discontinuous: the canonical witness sequence");
    demo->add_option("--k-max", k_max, "Length of the witness sequence")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (roots->parsed()) return run_roots(input_a, cfg);
        if (metric->parsed()) return run_metric(input_a, input_b, space);
        if (expand_cmd->parsed()) return run_expand(input_a);
        if (certify_cmd->parsed()) return run_certify(input_a, input_b, bound);
        if (track_cmd->parsed()) return run_track(input_a, input_b, steps, cfg);
        if (demo->parsed()) return run_demo_discontinuity(k_max);
    } catch (const FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const TrackError& e) {
        std::cerr << "error: " << e.what() << " in [" << format_double(e.t_lo()) << ", "
                  << format_double(e.t_hi()) << "]\n";
        return kExitSolver;
    } catch (const SolveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
