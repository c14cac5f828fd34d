/*
 * Copyright 2026 The hamsym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hamsym/cli.hpp"
#include "hamsym/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hamsym: Gilbert graphs, their spectra, transitivity certificates and Lovasz theta"};
    app.require_subcommand(1);

    hamsym::cli::RunConfig cfg;
    if (const char* env_cap = std::getenv("HAMSYM_VERTEX_CAP")) {
        try {
            cfg.vertex_cap = std::stoll(env_cap);
        } catch (const std::exception&) {
            std::cerr << "error: HAMSYM_VERTEX_CAP is not an integer\n";
            return 1;
        }
    }
    std::string variant = "gilbert";
    std::string modulus;

    auto add_common = [&](CLI::App* sub, bool needs_d) {
        sub->add_option("--q", cfg.q, "alphabet size (prime power for graph commands)");
        sub->add_option("--n", cfg.n, "word length");
        if (needs_d) sub->add_option("--d", cfg.d, "distance threshold, 2 <= d <= n");
        sub->add_option("--variant", variant, "gilbert | complement")
            ->check(CLI::IsMember({"gilbert", "complement"}));
        sub->add_option("--format", cfg.format, "json | table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--vertex-cap", cfg.vertex_cap, "maximum q^n for graph construction");
        sub->add_option("--out", cfg.out_path, "write the report to this path instead of stdout");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "closed-form transitivity classification");
    add_common(c_classify, true);

    CLI::App* c_certify = app.add_subcommand("certify", "brute-force transitivity certification");
    add_common(c_certify, true);

    CLI::App* c_spectrum = app.add_subcommand("spectrum", "closed-form spectrum with Jacobi cross-check");
    add_common(c_spectrum, true);
    c_spectrum->add_option("--export-graph", cfg.export_graph_path, "write DIMACS edge list to this path");

    CLI::App* c_theta = app.add_subcommand("theta", "Lovasz theta closed forms, bounds and oracles");
    add_common(c_theta, true);
    c_theta->add_flag("--with-sdp", cfg.with_sdp, "run the SDP oracle (N <= 64)");
    c_theta->add_flag("--with-alpha", cfg.with_alpha, "brute-force independence number (N <= 32)");
    c_theta->add_flag("--with-maxcut", cfg.with_maxcut, "exhaustive max-cut and surplus bound (N <= 24)");
    c_theta->add_option("--export-graph", cfg.export_graph_path, "write DIMACS edge list to this path");

    CLI::App* c_scheme = app.add_subcommand("scheme-check", "verify the Hamming scheme axioms exactly");
    add_common(c_scheme, false);

    CLI::App* c_kraw = app.add_subcommand("kraw-check", "verify the Krawtchouk identities exactly");
    add_common(c_kraw, false);
    c_kraw->add_option("--modulus", modulus,
                       "field modulus as comma-separated coefficients, constant term first");

    CLI::App* c_sweep = app.add_subcommand("sweep", "cross-validate all (q,n,d) under the vertex cap");
    c_sweep->add_option("--vertex-cap", cfg.vertex_cap, "maximum q^n for the sweep grid");
    c_sweep->add_option("--format", cfg.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    c_sweep->add_option("--out", cfg.out_path, "write the report to this path instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.variant = hamsym::variant_from_name(variant);
        if (!modulus.empty()) cfg.modulus = hamsym::cli::parse_modulus(modulus);
        if (c_classify->parsed()) cfg.command = hamsym::cli::Command::classify;
        if (c_certify->parsed()) cfg.command = hamsym::cli::Command::certify;
        if (c_spectrum->parsed()) cfg.command = hamsym::cli::Command::spectrum;
        if (c_theta->parsed()) cfg.command = hamsym::cli::Command::theta;
        if (c_scheme->parsed()) cfg.command = hamsym::cli::Command::scheme_check;
        if (c_kraw->parsed()) cfg.command = hamsym::cli::Command::kraw_check;
        if (c_sweep->parsed()) cfg.command = hamsym::cli::Command::sweep;
    } catch (const hamsym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return hamsym::cli::run(cfg, std::cout);
}
