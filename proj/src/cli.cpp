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

#include "hamsym/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hamsym/errors.hpp"
#include "hamsym/field.hpp"
#include "hamsym/kraw.hpp"
#include "hamsym/scheme.hpp"
#include "hamsym/spectra.hpp"
#include "hamsym/symmetry.hpp"
#include "hamsym/theta.hpp"

namespace hamsym::cli {

using nlohmann::json;  // std::map-backed: keys serialize in sorted order

namespace {

constexpr long long kCertifyBudgetVertices = 256;
constexpr long long kOracleBudgetVertices = 1024;
constexpr long long kSdpBudgetVertices = 64;

json params_json(const Params& p) { return json{{"q", p.q}, {"n", p.n}, {"d", p.d}}; }

json classification_json(const Classification& c) {
    return json{
        {"graph",
         {{"edge_transitive", c.graph_edge_transitive},
          {"distance_transitive", c.graph_distance_transitive},
          {"reason", c.graph_reason}}},
        {"complement",
         {{"edge_transitive", c.complement_edge_transitive},
          {"distance_transitive", c.complement_distance_transitive},
          {"et_reason", c.complement_et_reason},
          {"dt_reason", c.complement_dt_reason}}},
    };
}

void render_table(const json& j, std::ostream& os, const std::string& prefix = "") {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_table(it.value(), os, prefix.empty() ? it.key() : prefix + "." + it.key());
    } else if (j.is_array()) {
        int k = 0;
        for (const json& item : j) render_table(item, os, prefix + "[" + std::to_string(k++) + "]");
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

void emit(const json& j, const RunConfig& cfg, std::ostream& os) {
    if (cfg.format == "table")
        render_table(j, os);
    else
        os << j.dump() << "\n";
}

bool prime_power(int q) {
    if (q < 2) return false;
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) return true;
    while (q % p == 0) q /= p;
    return q == 1;
}

json cmd_classify(const RunConfig& cfg) {
    const Params params(cfg.q, cfg.n, cfg.d);
    json j = classification_json(classify(params));
    j["command"] = "classify";
    j["params"] = params_json(params);
    return j;
}

json cmd_certify(const RunConfig& cfg, int& exit_code) {
    const Params params(cfg.q, cfg.n, cfg.d);
    const Classification cls = classify(params);
    json j{{"command", "certify"}, {"params", params_json(params)}};
    for (Variant variant : {Variant::gilbert, Variant::complement}) {
        const Graph g = build_graph(params, variant, std::min(cfg.vertex_cap, kCertifyBudgetVertices));
        const TransitivityCertificate cert = certify_transitivity(g);
        const bool expect_et =
            variant == Variant::gilbert ? cls.graph_edge_transitive : cls.complement_edge_transitive;
        const bool expect_dt = variant == Variant::gilbert ? cls.graph_distance_transitive
                                                           : cls.complement_distance_transitive;
        const bool match = cert.edge_transitive == expect_et && cert.distance_transitive == expect_dt;
        if (!match) exit_code = 2;
        j[variant_name(variant)] = {{"edge_transitive", cert.edge_transitive},
                                    {"distance_transitive", cert.distance_transitive},
                                    {"orbit_counts_per_sphere", cert.orbit_counts_per_sphere},
                                    {"matches_classification", match}};
    }
    return j;
}

json cmd_spectrum(const RunConfig& cfg, int& exit_code) {
    const Params params(cfg.q, cfg.n, cfg.d);
    json entries = json::array();
    for (const SpectrumEntry& e : spectrum(params, cfg.variant))
        entries.push_back(
            {{"j", e.j}, {"lambda", to_string(e.eigenvalue)}, {"mult", to_string(e.multiplicity)}});

    spectral_order_checks(params);  // AssertionFailureError -> exit 2

    bool oracle_checked = false;
    if (params.order() <= std::min(cfg.vertex_cap, kOracleBudgetVertices)) {
        const Graph g = build_graph(params, cfg.variant, cfg.vertex_cap);
        if (!spectrum_matches_oracle(g))
            throw AssertionFailureError("spectrum: closed form disagrees with the Jacobi oracle");
        oracle_checked = true;
        if (!cfg.export_graph_path.empty()) {
            std::ofstream f(cfg.export_graph_path);
            if (!f) throw ValidationError("cannot open export path " + cfg.export_graph_path);
            export_dimacs(g, f);
        }
    } else if (!cfg.export_graph_path.empty()) {
        const Graph g = build_graph(params, cfg.variant, cfg.vertex_cap);
        std::ofstream f(cfg.export_graph_path);
        if (!f) throw ValidationError("cannot open export path " + cfg.export_graph_path);
        export_dimacs(g, f);
    }
    (void)exit_code;
    return json{{"params", params_json(params)},
                {"variant", variant_name(cfg.variant)},
                {"entries", entries},
                {"oracle_checked", oracle_checked}};
}

json bounds_json(const ThetaBounds& b) {
    return json{{"lower_graph", to_string(b.lower_graph)},
                {"upper_graph", to_string(b.upper_graph)},
                {"lower_complement", to_string(b.lower_complement)},
                {"upper_complement", to_string(b.upper_complement)},
                {"upper_graph_tight", b.upper_graph_tight},
                {"lower_graph_tight", b.lower_graph_tight},
                {"upper_complement_tight", b.upper_complement_tight},
                {"lower_complement_tight", b.lower_complement_tight}};
}

json cmd_theta(const RunConfig& cfg) {
    const Params params(cfg.q, cfg.n, cfg.d);
    json j{{"command", "theta"}, {"params", params_json(params)}, {"variant", variant_name(cfg.variant)}};

    const std::optional<ThetaPair> closed = theta_closed_form(params);
    j["theta_graph"] = closed ? json(to_string(closed->theta_graph)) : json(nullptr);
    j["theta_complement"] = closed ? json(to_string(closed->theta_complement)) : json(nullptr);
    j["bounds"] = {{"gilbert", bounds_json(theta_bounds(params, Variant::gilbert))},
                   {"complement", bounds_json(theta_bounds(params, Variant::complement))}};

    if (cfg.with_sdp) {
        const Graph g = build_graph(params, cfg.variant, std::min(cfg.vertex_cap, kSdpBudgetVertices));
        const SdpResult sdp = theta_sdp(g);
        j["sdp"] = {{"estimate", sdp.value}, {"certified", sdp.certified}, {"iterations", sdp.iterations}};
    }
    if (cfg.with_alpha) {
        const Graph g = build_graph(params, cfg.variant, std::min(cfg.vertex_cap, 32LL));
        const int alpha = alpha_bruteforce(g);
        j["alpha"] = alpha;
        if (closed) {
            const Rat theta_of_variant =
                cfg.variant == Variant::gilbert ? closed->theta_graph : closed->theta_complement;
            if (Rat(alpha) > theta_of_variant)
                throw AssertionFailureError("theta: alpha exceeds the closed-form theta");
        }
    }
    if (cfg.with_maxcut) {
        const Graph g = build_graph(params, cfg.variant, std::min(cfg.vertex_cap, 24LL));
        const SurplusReport sr = maxcut_surplus(g);
        j["maxcut"] = {{"mc", sr.maxcut},
                       {"surplus", to_string(sr.surplus)},
                       {"bound", sr.bound},
                       {"theta_complement_used", to_string(sr.theta_complement)}};
    }
    if (!cfg.export_graph_path.empty()) {
        const Graph g = build_graph(params, cfg.variant, cfg.vertex_cap);
        std::ofstream f(cfg.export_graph_path);
        if (!f) throw ValidationError("cannot open export path " + cfg.export_graph_path);
        export_dimacs(g, f);
    }
    return j;
}

json cmd_scheme_check(const RunConfig& cfg) {
    if (cfg.q < 2 || cfg.n < 1) throw DomainError("scheme-check: need q >= 2 and n >= 1");
    const SchemeInstance s = build_scheme(cfg.n, cfg.q, cfg.vertex_cap);
    const bool partition = verify_partition(s);
    const bool idem = verify_idempotents(s);
    const bool recon = verify_reconstruction(s);
    const bool traces = verify_idempotent_traces(s);
    intersection_table(s);  // NotConstantError -> exit 2
    const bool pq = pq_identity(cfg.n, cfg.q);
    if (!(partition && idem && recon && traces && pq))
        throw AssertionFailureError("scheme-check: an exact scheme identity failed");
    return json{{"command", "scheme-check"}, {"n", cfg.n},
                {"q", cfg.q},                {"N", s.N},
                {"partition", partition},    {"idempotents", idem},
                {"reconstruction", recon},   {"traces", traces},
                {"intersection_constant", true},
                {"pq_identity", pq}};
}

json cmd_kraw_check(const RunConfig& cfg) {
    if (cfg.q < 2 || cfg.n < 1) throw DomainError("kraw-check: need q >= 2 and n >= 1");
    bool genfun = true, sum = true;
    for (int i = 0; i <= cfg.n; ++i) genfun = genfun && genfun_check(cfg.n, cfg.q, i);
    for (int i = 1; i <= cfg.n; ++i)
        for (int dd = 0; dd <= cfg.n; ++dd) sum = sum && sum_check(dd, i, cfg.n, cfg.q);
    if (!genfun || !sum)
        throw AssertionFailureError("kraw-check: a Krawtchouk identity failed");

    // character cross-check when a field is available (built-in or --modulus)
    json char_check = nullptr;
    if (prime_power(cfg.q)) {
        int p = 2;
        while (cfg.q % p != 0) ++p;
        int m = 0, qq = cfg.q;
        while (qq > 1) {
            qq /= p;
            ++m;
        }
        try {
            const FieldSpec field = FieldSpec::build(p, m, cfg.modulus);
            const int nc = std::min(cfg.n, 4);
            bool ok = true;
            for (int i = 0; i <= nc; ++i) {
                std::vector<int> x(nc, 0);
                for (int t = 0; t < i; ++t) x[t] = 1;
                for (int k = 0; k <= nc; ++k)
                    ok = ok && cyclo_equals_integer(char_kraw(field, nc, k, x), kraw_eval(k, i, nc, cfg.q));
            }
            if (!ok)
                throw AssertionFailureError("kraw-check: character sum disagrees with the defining sum");
            char_check = ok;
        } catch (const UnsupportedSizeError&) {
            char_check = nullptr;  // no built-in modulus for this field
        }
    }
    return json{{"command", "kraw-check"}, {"n", cfg.n}, {"q", cfg.q},
                {"genfun", genfun},        {"sum", sum}, {"char_vs_formula", char_check}};
}

int cmd_sweep(const RunConfig& cfg, std::ostream& os) {
    int mismatches = 0;
    for (int q = 2; static_cast<long long>(q) * q <= cfg.vertex_cap; ++q) {
        if (!prime_power(q)) continue;
        for (int n = 2;; ++n) {
            long long N = 1;
            bool fits = true;
            for (int j = 0; j < n; ++j) {
                N *= q;
                if (N > cfg.vertex_cap) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            for (int d = 2; d <= n; ++d) {
                const Params params(q, n, d);
                const Classification cls = classify(params);
                json line{{"q", q}, {"n", n}, {"d", d}};
                line["classify"] = classification_json(cls);

                std::string certify_status = "skipped";
                if (N <= kCertifyBudgetVertices) {
                    certify_status = "ok";
                    for (Variant variant : {Variant::gilbert, Variant::complement}) {
                        const Graph g = build_graph(params, variant, cfg.vertex_cap);
                        const TransitivityCertificate cert = certify_transitivity(g);
                        const bool expect_et = variant == Variant::gilbert ? cls.graph_edge_transitive
                                                                           : cls.complement_edge_transitive;
                        const bool expect_dt = variant == Variant::gilbert
                                                   ? cls.graph_distance_transitive
                                                   : cls.complement_distance_transitive;
                        if (cert.edge_transitive != expect_et || cert.distance_transitive != expect_dt)
                            certify_status = "mismatch";
                    }
                }
                line["certify"] = certify_status;

                std::string spectrum_status = "skipped";
                if (N <= kOracleBudgetVertices) {
                    spectrum_status = "ok";
                    for (Variant variant : {Variant::gilbert, Variant::complement}) {
                        const Graph g = build_graph(params, variant, cfg.vertex_cap);
                        if (!spectrum_matches_oracle(g)) spectrum_status = "mismatch";
                    }
                    spectral_order_checks(params);
                }
                line["spectrum"] = spectrum_status;

                std::string theta_status = "na";
                const std::optional<ThetaPair> closed = theta_closed_form(params);
                if (closed && N <= kSdpBudgetVertices) {
                    theta_status = "ok";
                    for (Variant variant : {Variant::gilbert, Variant::complement}) {
                        const Graph g = build_graph(params, variant, cfg.vertex_cap);
                        const SdpResult sdp = theta_sdp(g);
                        const double exact = to_double(
                            variant == Variant::gilbert ? closed->theta_graph : closed->theta_complement);
                        if (std::abs(sdp.value - exact) > 5e-3 * (1.0 + exact)) theta_status = "mismatch";
                    }
                } else if (closed) {
                    theta_status = "skipped";
                }
                line["theta"] = theta_status;

                if (certify_status == "mismatch" || spectrum_status == "mismatch" ||
                    theta_status == "mismatch")
                    ++mismatches;
                if (cfg.format == "table") {
                    os << "(" << q << "," << n << "," << d << ") certify=" << certify_status
                       << " spectrum=" << spectrum_status << " theta=" << theta_status << "\n";
                } else {
                    os << line.dump() << "\n";
                }
            }
        }
    }
    return mismatches == 0 ? 0 : 2;
}

}  // namespace

Command command_from_name(const std::string& name) {
    if (name == "classify") return Command::classify;
    if (name == "certify") return Command::certify;
    if (name == "spectrum") return Command::spectrum;
    if (name == "theta") return Command::theta;
    if (name == "scheme-check") return Command::scheme_check;
    if (name == "kraw-check") return Command::kraw_check;
    if (name == "sweep") return Command::sweep;
    throw DomainError("unknown command: " + name);
}

std::string command_name(Command c) {
    switch (c) {
        case Command::classify: return "classify";
        case Command::certify: return "certify";
        case Command::spectrum: return "spectrum";
        case Command::theta: return "theta";
        case Command::scheme_check: return "scheme-check";
        case Command::kraw_check: return "kraw-check";
        case Command::sweep: return "sweep";
    }
    return "?";
}

std::vector<int> parse_modulus(const std::string& text) {
    std::vector<int> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            coeffs.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw DomainError("parse_modulus: bad coefficient '" + item + "'");
        }
    }
    if (coeffs.empty()) throw DomainError("parse_modulus: empty coefficient list");
    return coeffs;
}

int run(const RunConfig& config, std::ostream& os) {
    std::ofstream file;
    std::ostream* sink = &os;
    try {
        if (!config.out_path.empty()) {
            file.open(config.out_path);
            if (!file) throw ValidationError("cannot open output path " + config.out_path);
            sink = &file;
        }
        if (config.format != "json" && config.format != "table")
            throw DomainError("format must be json or table");

        switch (config.command) {
            case Command::classify:
                emit(cmd_classify(config), config, *sink);
                return 0;
            case Command::certify: {
                int code = 0;
                emit(cmd_certify(config, code), config, *sink);
                return code;
            }
            case Command::spectrum: {
                int code = 0;
                emit(cmd_spectrum(config, code), config, *sink);
                return code;
            }
            case Command::theta:
                emit(cmd_theta(config), config, *sink);
                return 0;
            case Command::scheme_check:
                emit(cmd_scheme_check(config), config, *sink);
                return 0;
            case Command::kraw_check:
                emit(cmd_kraw_check(config), config, *sink);
                return 0;
            case Command::sweep:
                return cmd_sweep(config, *sink);
        }
        return 1;
    } catch (const ContradictionError& e) {
        std::cerr << "contradiction: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hamsym::cli
