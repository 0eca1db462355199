// Copyright 2026 The supercheq-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERCHEQ_CLI_HPP
#define SUPERCHEQ_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supercheq/analytics.hpp"
#include "supercheq/ee.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/ie.hpp"
#include "supercheq/json.hpp"
#include "supercheq/smp.hpp"

namespace supercheq::cli {

// ---------------------------------------------------------------------------
// Config plumbing
// ---------------------------------------------------------------------------

/// The master nonce travels as hex text in flags and config files; the
/// decoded bytes feed the seeded streams.
inline std::string decode_hex_nonce(const std::string& hex) {
    require(hex.size() % 2 == 0, "nonce must be an even-length hex string");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ConfigError(std::string("nonce has a non-hex character: ") + c);
    };
    std::string out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    }
    return out;
}

inline nlohmann::json load_config_file(const std::string& path) {
    if (path.empty()) return nlohmann::json::object();
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    require(j.is_object(), "config root must be a JSON object: " + path);
    return j;
}

inline void reject_unknown_keys(const nlohmann::json& j,
                                std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        require(known, "unknown config key: " + key);
    }
}

/// Reads config[key] with a type check, falling back to `fallback`.
template <typename T>
T config_value(const nlohmann::json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    require(os.good(), "cannot open output file: " + path);
    os << content;
    os.flush();
    require(os.good(), "failed while writing output file: " + path);
}

/// Machine-consumption mirror next to the primary CSV: foo.csv -> foo.json.
inline std::string json_mirror_path(const std::string& csv_path) {
    if (csv_path.size() >= 4 &&
        csv_path.compare(csv_path.size() - 4, 4, ".csv") == 0) {
        return csv_path.substr(0, csv_path.size() - 4) + ".json";
    }
    return csv_path + ".json";
}

/// Refuses output paths that would clobber the config file the run was
/// driven by (e.g. --config scan.json --out scan.csv mirrors to scan.json).
inline void guard_config_overwrite(const std::string& config_path,
                                   std::initializer_list<std::string> outputs) {
    if (config_path.empty()) return;
    for (const std::string& out : outputs) {
        require(out != config_path,
                "output path " + out + " would overwrite the config file; "
                "choose a different --out");
    }
}

/// Common flags shared by the subcommands; a flag beats the config file,
/// which beats the built-in default.
struct CommonFlags {
    std::string config_path;
    std::string nonce_hex;
    std::string out;
    int jobs = 0;
    bool emit_matrix = false;
    CLI::Option* nonce_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* jobs_opt = nullptr;
    CLI::Option* emit_opt = nullptr;

    void add_to(CLI::App* sub, bool with_jobs, bool with_emit) {
        sub->add_option("--config", config_path,
                        "JSON config file; unknown keys are rejected")
            ->check(CLI::ExistingFile);
        nonce_opt = sub->add_option(
            "--nonce", nonce_hex, "master nonce as a hex string (default empty)");
        out_opt = sub->add_option("--out", out, "output path for the report");
        if (with_jobs) {
            jobs_opt = sub->add_option(
                "--jobs", jobs, "worker threads; 0 = hardware concurrency");
        }
        if (with_emit) {
            emit_opt = sub->add_flag("--emit-matrix", emit_matrix,
                                     "include full fidelity matrices in the "
                                     "JSON mirror");
        }
    }

    std::string resolve_nonce_hex(const nlohmann::json& j) const {
        if (nonce_opt != nullptr && nonce_opt->count() > 0) return nonce_hex;
        return config_value<std::string>(j, "nonce", "");
    }
    std::string resolve_out(const nlohmann::json& j,
                            const std::string& fallback) const {
        if (out_opt != nullptr && out_opt->count() > 0) return out;
        return config_value<std::string>(j, "out", fallback);
    }
    int resolve_jobs(const nlohmann::json& j) const {
        if (jobs_opt != nullptr && jobs_opt->count() > 0) return jobs;
        return config_value<int>(j, "jobs", 1);
    }
    bool resolve_emit(const nlohmann::json& j) const {
        if (emit_opt != nullptr && emit_opt->count() > 0) return emit_matrix;
        return config_value<bool>(j, "emit_matrix", false);
    }
};

inline EncodingSpec make_spec(const std::string& name, int n, int rows, int cols,
                              int layers) {
    if (name == "haar") return EncodingSpec::haar(n);
    if (name == "brickwork1d") return EncodingSpec::brickwork1d(n, layers);
    if (name == "grid2d_gr") {
        require(rows * cols == n, "grid2d_gr: rows*cols must equal n");
        return EncodingSpec::grid2d_gr(rows, cols, layers);
    }
    if (name == "fully_connected_gr") {
        return EncodingSpec::fully_connected_gr(n, layers);
    }
    if (name == "local_linear") return EncodingSpec::local_linear(n, layers);
    throw ConfigError("unknown variant: " + name);
}

inline std::vector<int> int_range(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// ee-scan
// ---------------------------------------------------------------------------

inline void run_ee_scan(const CommonFlags& flags) {
    const nlohmann::json j = load_config_file(flags.config_path);
    reject_unknown_keys(j, {"nonce", "out", "jobs", "emit_matrix", "n", "rows",
                            "cols", "files", "trials", "depths", "variants"});
    const std::string nonce_hex = flags.resolve_nonce_hex(j);
    const std::string out = flags.resolve_out(j, "ee_scan.csv");
    const int jobs = flags.resolve_jobs(j);
    const bool emit = flags.resolve_emit(j);
    const int n = config_value<int>(j, "n", 9);
    const int rows = config_value<int>(j, "rows", 3);
    const int cols = config_value<int>(j, "cols", 3);
    const std::uint64_t files = config_value<std::uint64_t>(j, "files", 1024);
    const int trials = config_value<int>(j, "trials", 5);
    const std::vector<int> depths =
        config_value<std::vector<int>>(j, "depths", int_range(1, 10));
    const std::vector<std::string> variants = config_value<std::vector<std::string>>(
        j, "variants", {"grid2d_gr", "fully_connected_gr"});

    const nlohmann::json resolved{
        {"nonce", nonce_hex}, {"out", out},       {"jobs", jobs},
        {"emit_matrix", emit}, {"n", n},          {"rows", rows},
        {"cols", cols},       {"files", files},   {"trials", trials},
        {"depths", depths},   {"variants", variants}};

    // Validate everything before any compute.
    require(trials >= 1, "ee-scan: trials must be >= 1");
    std::vector<EncodingSpec> specs;
    for (const std::string& v : variants) {
        for (int depth : depths) specs.push_back(make_spec(v, n, rows, cols, depth));
    }
    require(!specs.empty(), "ee-scan: need at least one variant and depth");
    const std::string master = decode_hex_nonce(nonce_hex);
    TrialConfig tc;
    tc.files = TrialConfig::integer_files(files);
    for (int t = 0; t < trials; ++t) tc.nonces.push_back(master + std::to_string(t));
    tc.validate();

    guard_config_overwrite(flags.config_path, {out, json_mirror_path(out)});
    const EeScanResult result = ee_max_fidelity_scan(specs, tc, jobs, emit);

    std::ostringstream csv;
    csv << "# config: " << resolved.dump() << "\n";
    result.write_csv(csv);
    write_text_file(out, csv.str());
    const nlohmann::json mirror{{"config", resolved}, {"rows", result.to_json(emit)}};
    write_text_file(json_mirror_path(out), mirror.dump(2) + "\n");
    std::cout << "ee-scan: " << result.rows.size() << " rows -> " << out << " and "
              << json_mirror_path(out) << "\n";
}

// ---------------------------------------------------------------------------
// noise-scan
// ---------------------------------------------------------------------------

inline NoiseModel make_noise_model(const std::string& name) {
    if (name == "none") return NoiseModel::none();
    if (name == "pauli") return NoiseModel::pauli_default();
    if (name == "thermal") return NoiseModel::thermal_default();
    if (name == "coherent") return NoiseModel::coherent_default();
    throw ConfigError("unknown noise model: " + name);
}

inline MixedMetric make_metric(const std::string& name) {
    if (name == "swap_overlap") return MixedMetric::SwapOverlap;
    if (name == "uhlmann") return MixedMetric::Uhlmann;
    throw ConfigError("unknown metric: " + name);
}

inline void run_noise_scan(const CommonFlags& flags) {
    const nlohmann::json j = load_config_file(flags.config_path);
    reject_unknown_keys(j, {"nonce", "out", "jobs", "emit_matrix", "n", "rows",
                            "cols", "seed_bits", "depths", "models", "metric",
                            "variant"});
    const std::string nonce_hex = flags.resolve_nonce_hex(j);
    const std::string out = flags.resolve_out(j, "noise_scan.csv");
    const int jobs = flags.resolve_jobs(j);
    const bool emit = flags.resolve_emit(j);
    const int n = config_value<int>(j, "n", 4);
    const int rows = config_value<int>(j, "rows", 0);
    const int cols = config_value<int>(j, "cols", 0);
    const int seed_bits = config_value<int>(j, "seed_bits", 4);
    const std::vector<int> depths =
        config_value<std::vector<int>>(j, "depths", int_range(1, 12));
    const std::vector<std::string> model_names =
        config_value<std::vector<std::string>>(j, "models",
                                               {"pauli", "thermal", "coherent"});
    const std::string metric_name =
        config_value<std::string>(j, "metric", "swap_overlap");
    const std::string variant =
        config_value<std::string>(j, "variant", "fully_connected_gr");

    const nlohmann::json resolved{
        {"nonce", nonce_hex},   {"out", out},         {"jobs", jobs},
        {"emit_matrix", emit},  {"n", n},             {"rows", rows},
        {"cols", cols},         {"seed_bits", seed_bits},
        {"depths", depths},     {"models", model_names},
        {"metric", metric_name}, {"variant", variant}};

    require(seed_bits >= 1 && seed_bits <= 20,
            "noise-scan: seed_bits must be in [1, 20]");
    require(!depths.empty(), "noise-scan: depths must be non-empty");
    const EncodingSpec base = make_spec(variant, n, rows, cols, depths.front());
    std::vector<NoiseModel> models;
    for (const std::string& m : model_names) models.push_back(make_noise_model(m));
    const std::vector<FileBits> seeds =
        TrialConfig::integer_files(std::uint64_t{1} << seed_bits);
    const std::string master = decode_hex_nonce(nonce_hex);
    const MixedMetric metric = make_metric(metric_name);

    guard_config_overwrite(flags.config_path, {out, json_mirror_path(out)});
    const NoiseScanResult result =
        ee_noise_scan(base, models, seeds, depths, master, metric, jobs, emit);

    std::ostringstream csv;
    csv << "# config: " << resolved.dump() << "\n";
    result.write_csv(csv);
    write_text_file(out, csv.str());
    const nlohmann::json mirror{{"config", resolved}, {"rows", result.to_json(emit)}};
    write_text_file(json_mirror_path(out), mirror.dump(2) + "\n");
    std::cout << "noise-scan: " << result.rows.size() << " rows -> " << out
              << " and " << json_mirror_path(out) << "\n";
}

// ---------------------------------------------------------------------------
// ie-demo
// ---------------------------------------------------------------------------

inline nlohmann::json default_ie_edits() {
    return nlohmann::json::array({
        {{"op", "flip"}, {"index", 0}},
        {{"op", "write"}, {"index", 7}, {"value", 0}},
        {{"op", "resize"}, {"length", 21}},
        {{"op", "flip"}, {"index", 20}},
    });
}

inline void run_ie_demo(const CommonFlags& flags) {
    const nlohmann::json j = load_config_file(flags.config_path);
    reject_unknown_keys(j, {"nonce", "out", "file", "edits"});
    const std::string nonce_hex = flags.resolve_nonce_hex(j);
    const std::string out = flags.resolve_out(j, "ie_demo.json");
    const std::string file_str =
        config_value<std::string>(j, "file", "101010110111011");
    const nlohmann::json edits =
        j.contains("edits") ? j.at("edits") : default_ie_edits();
    require(edits.is_array(), "ie-demo: edits must be an array");

    const nlohmann::json resolved{
        {"nonce", nonce_hex}, {"out", out}, {"file", file_str}, {"edits", edits}};

    guard_config_overwrite(flags.config_path, {out});
    decode_hex_nonce(nonce_hex);  // graph encoding is nonce-free; validate only
    const FileBits file = FileBits::from_string(file_str);
    GraphFingerprint fp = GraphFingerprint::encode(file);
    // Reference bits re-encoded from scratch after every edit.
    std::vector<bool> reference(file.size());
    for (std::size_t i = 0; i < file.size(); ++i) reference[i] = file.bit(i);

    const Circuit circuit = graph_state_circuit(fp.graph);
    int h_count = 0, cz_count = 0;
    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::H) ++h_count;
        if (g.kind == GateKind::CZ) ++cz_count;
    }
    std::cout << "file " << file_str << " (" << file.size() << " bits) -> n="
              << fp.graph.n << ", " << fp.graph.edge_count() << " edges\n";
    std::cout << "edges:";
    for (const auto& [a, b] : fp.graph.edges()) {
        std::cout << ' ' << a << '-' << b;
    }
    std::cout << "\ncircuit: " << h_count << " H + " << cz_count
              << " CZ gates, depth " << circuit.depth() << "\n";

    nlohmann::json steps = nlohmann::json::array();
    for (const nlohmann::json& edit : edits) {
        require(edit.is_object() && edit.contains("op"),
                "ie-demo: each edit needs an \"op\"");
        const std::string op = edit.at("op").get<std::string>();
        const GraphFingerprint before = fp;
        if (op == "flip") {
            const std::size_t index = config_value<std::size_t>(edit, "index", 0);
            fp = flip_bit(fp, index);
            reference.at(index) = !reference.at(index);
        } else if (op == "write") {
            const std::size_t index = config_value<std::size_t>(edit, "index", 0);
            const bool value = config_value<int>(edit, "value", 0) != 0;
            fp = write_bit(fp, index, value);
            reference.at(index) = value;
        } else if (op == "resize") {
            const std::size_t length = config_value<std::size_t>(edit, "length", 0);
            fp = resize(fp, length);
            reference.resize(length, false);
        } else {
            throw ConfigError("ie-demo: unknown edit op: " + op);
        }

        FileBits ref_file = FileBits::zeros(reference.size());
        for (std::size_t i = 0; i < reference.size(); ++i) {
            ref_file.set_bit(i, reference[i]);
        }
        const GraphFingerprint scratch = GraphFingerprint::encode(ref_file);
        check_invariant(fp == scratch,
                        "ie-demo: incremental and from-scratch graphs differ");

        const bool same_n = before.graph.n == fp.graph.n;
        const int toggled = same_n ? edges_toggled(before.graph, fp.graph) : 0;
        nlohmann::json step{{"op", op},
                            {"n", fp.graph.n},
                            {"file_bits", fp.file_length},
                            {"edges", fp.graph.edge_count()},
                            {"edges_toggled", toggled},
                            {"verified", true}};
        std::cout << "edit " << op;
        if (edit.contains("index")) {
            step["index"] = edit.at("index").get<std::size_t>();
            std::cout << " index " << edit.at("index").get<std::size_t>();
        }
        if (edit.contains("length")) {
            step["length"] = edit.at("length").get<std::size_t>();
            std::cout << " length " << edit.at("length").get<std::size_t>();
        }
        std::cout << ": n=" << fp.graph.n << ", " << toggled
                  << " edge(s) toggled";
        if (same_n) {
            const double f = graph_fidelity(before.graph, fp.graph);
            step["fidelity_vs_previous"] = f;
            std::cout << ", fidelity vs previous " << f;
        } else {
            step["fidelity_vs_previous"] = nullptr;
        }
        std::cout << ", incremental == from-scratch VERIFIED\n";
        steps.push_back(step);
    }

    const nlohmann::json report{{"config", resolved},
                                {"n", fp.graph.n},
                                {"edges", fp.graph.edge_count()},
                                {"steps", steps}};
    write_text_file(out, report.dump(2) + "\n");
    std::cout << "ie-demo: report -> " << out << "\n";
}

// ---------------------------------------------------------------------------
// smp
// ---------------------------------------------------------------------------

inline void run_smp(const CommonFlags& flags) {
    const nlohmann::json j = load_config_file(flags.config_path);
    reject_unknown_keys(j, {"nonce", "out", "protocol", "file_a", "file_b",
                            "epsilon", "standard_test", "recycle",
                            "fidelity_cap", "n", "rows", "cols", "variant",
                            "layers"});
    const std::string nonce_hex = flags.resolve_nonce_hex(j);
    const std::string out = flags.resolve_out(j, "smp.json");
    const std::string protocol = config_value<std::string>(j, "protocol", "ie");
    const std::string file_a_str =
        config_value<std::string>(j, "file_a", "101010110111011");
    const std::string file_b_str =
        config_value<std::string>(j, "file_b", "101010110111011");
    const double epsilon = config_value<double>(j, "epsilon", 0.125);
    const bool standard_test = config_value<bool>(j, "standard_test", true);
    const bool recycle = config_value<bool>(j, "recycle", false);
    const double fidelity_cap = config_value<double>(j, "fidelity_cap", 0.5);
    const int n = config_value<int>(j, "n", 6);
    const int rows = config_value<int>(j, "rows", 0);
    const int cols = config_value<int>(j, "cols", 0);
    const std::string variant =
        config_value<std::string>(j, "variant", "fully_connected_gr");
    const int layers = config_value<int>(j, "layers", 5);

    const nlohmann::json resolved{
        {"nonce", nonce_hex},   {"out", out},
        {"protocol", protocol}, {"file_a", file_a_str},
        {"file_b", file_b_str}, {"epsilon", epsilon},
        {"standard_test", standard_test},
        {"recycle", recycle},   {"fidelity_cap", fidelity_cap},
        {"n", n},               {"rows", rows},
        {"cols", cols},         {"variant", variant},
        {"layers", layers}};

    require(epsilon > 0.0 && epsilon < 1.0, "smp: epsilon must be in (0, 1)");
    SmpConfig cfg;
    if (protocol == "ie") {
        cfg.protocol = SmpConfig::Protocol::IE;
    } else if (protocol == "ee") {
        cfg.protocol = SmpConfig::Protocol::EE;
        cfg.ee_spec = make_spec(variant, n, rows, cols, layers);
    } else {
        throw ConfigError("smp: protocol must be \"ie\" or \"ee\"");
    }
    cfg.standard_test = standard_test;
    cfg.recycle = recycle;
    cfg.fidelity_cap = fidelity_cap;
    cfg.nonce = decode_hex_nonce(nonce_hex);
    cfg.validate();

    guard_config_overwrite(flags.config_path, {out});
    const FileBits file_a = FileBits::from_string(file_a_str);
    const FileBits file_b = FileBits::from_string(file_b_str);
    const SmpTranscript t = run_smp_session(cfg, file_a, file_b, epsilon);

    std::cout << "protocol              " << t.protocol << "\n"
              << "file size N           " << t.file_bits << " bits per party\n"
              << "fingerprint size n    " << t.n_qubits << " qubits\n"
              << "copies M              " << t.copies << " (error bound "
              << t.error_bound << ")\n"
              << "decision              " << (t.equal ? "equal" : "unequal")
              << "\n"
              << "--- communication sent to the referee ---\n"
              << "quantum fingerprints  " << t.qubits_sent
              << " qubits (2 M n)\n"
              << "naive classical       " << t.classical_naive_bits
              << " bits (both full files)\n"
              << "classical fingerprint " << t.classical_optimal_bits
              << " bits (ceil(sqrt(3N)) per copy)\n";

    const nlohmann::json report{{"config", resolved}, {"transcript", t.to_json()}};
    write_text_file(out, report.dump(2) + "\n");
    std::cout << "smp: transcript -> " << out << "\n";
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

inline void run_bounds(const CommonFlags& flags) {
    const nlohmann::json j = load_config_file(flags.config_path);
    reject_unknown_keys(j, {"nonce", "out", "base", "n_grid", "ell_values",
                            "sizes"});
    const std::string nonce_hex = flags.resolve_nonce_hex(j);
    const std::string out = flags.resolve_out(j, "bounds.csv");
    const double base = config_value<double>(j, "base", 1.4);
    const std::vector<int> n_grid =
        config_value<std::vector<int>>(j, "n_grid", int_range(2, 30));
    const std::vector<int> ell_values =
        config_value<std::vector<int>>(j, "ell_values", {1, 2});
    const std::vector<std::int64_t> sizes = config_value<std::vector<std::int64_t>>(
        j, "sizes", {1, 15, 100, 1000, 10000});

    const nlohmann::json resolved{{"nonce", nonce_hex}, {"out", out},
                                  {"base", base},       {"n_grid", n_grid},
                                  {"ell_values", ell_values}, {"sizes", sizes}};

    decode_hex_nonce(nonce_hex);  // nonce is unused here but still validated
    require(base > 1.0, "bounds: base must be > 1");
    for (int n : n_grid) require(n >= 1, "bounds: n_grid entries must be >= 1");

    guard_config_overwrite(flags.config_path, {out, json_mirror_path(out)});

    std::ostringstream csv;
    csv << "# config: " << resolved.dump() << "\n";
    csv << "table,n,N,ell,t,log10_K,log10_epsilon,log10_pair_bound,log10_bound,"
           "bound,heuristic_depth,naive_bits,classical_bits,ie_qubits,ee_qubits\n";
    nlohmann::json haar_rows = nlohmann::json::array();
    nlohmann::json design_rows = nlohmann::json::array();
    nlohmann::json size_rows = nlohmann::json::array();

    // States drawn Haar-randomly, K = base^(2^n) of them.
    for (int n : n_grid) {
        const LogValue k = log_power(base, std::exp2(n));
        const LogValue bound = haar_collision_bound(k, n);
        csv << "haar_collision," << n << ",,,," << format_double(k.log10_magnitude)
            << ",,," << format_double(bound.log10_magnitude) << ','
            << bound.to_scientific() << ",,,,,\n";
        haar_rows.push_back({{"n", n},
                             {"log10_K", k.log10_magnitude},
                             {"log10_bound", bound.log10_magnitude},
                             {"bound", bound.to_scientific()}});
        if (n == 20) {
            std::cout << "n=20 headline: K = " << base << "^(2^20), collision "
                      << "bound " << bound.to_scientific() << " (log10 "
                      << format_double(bound.log10_magnitude) << ")\n";
        }
    }

    // Design schedule t = n^(ell-1), epsilon = 2^(-2 n^ell), K = base^(n^ell).
    for (int ell : ell_values) {
        for (int n : n_grid) {
            const DesignParams p = DesignParams::schedule(n, ell);
            const LogValue k = log_power(base, std::pow(double(n), ell));
            const LogValue pair = tdesign_moment_bound(p.t, p.n, p.epsilon);
            const LogValue bound =
                tdesign_collision_bound(k, p.n, p.t, p.epsilon);
            const double depth = heuristic_depth(p.t, p.n, p.epsilon);
            csv << "design," << n << ",," << ell << ',' << format_double(p.t)
                << ',' << format_double(k.log10_magnitude) << ','
                << format_double(p.epsilon.log10_magnitude) << ','
                << format_double(pair.log10_magnitude) << ','
                << format_double(bound.log10_magnitude) << ','
                << bound.to_scientific() << ',' << format_double(depth)
                << ",,,,\n";
            design_rows.push_back({{"n", n},
                                   {"ell", ell},
                                   {"t", p.t},
                                   {"log10_K", k.log10_magnitude},
                                   {"log10_epsilon", p.epsilon.log10_magnitude},
                                   {"log10_pair_bound", pair.log10_magnitude},
                                   {"log10_bound", bound.log10_magnitude},
                                   {"bound", bound.to_scientific()},
                                   {"heuristic_depth", depth}});
        }
    }

    // Fingerprint-size comparison rows.
    for (std::int64_t n_bits : sizes) {
        const SizeRecord r = size_table(n_bits);
        csv << "size,," << n_bits << ",,,,,,,,," << r.naive_bits << ','
            << r.classical_bits << ',' << r.ie_qubits << ',' << r.ee_qubits
            << "\n";
        size_rows.push_back({{"N", n_bits},
                             {"naive_bits", r.naive_bits},
                             {"classical_bits", r.classical_bits},
                             {"ie_qubits", r.ie_qubits},
                             {"ee_qubits", r.ee_qubits}});
    }

    write_text_file(out, csv.str());
    const nlohmann::json mirror{{"config", resolved},
                                {"haar_collision", haar_rows},
                                {"design", design_rows},
                                {"sizes", size_rows}};
    write_text_file(json_mirror_path(out), mirror.dump(2) + "\n");
    std::cout << "bounds: " << n_grid.size() << " haar rows, "
              << ell_values.size() * n_grid.size() << " design rows, "
              << sizes.size() << " size rows -> " << out << " and "
              << json_mirror_path(out) << "\n";
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv) {
    CLI::App app{
        "supercheq: file fingerprints as random-circuit and graph states.\n"
        "Every subcommand is deterministic given its config and nonce."};
    app.require_subcommand(1);

    CommonFlags ee_flags, noise_flags, ie_flags, smp_flags, bounds_flags;

    CLI::App* ee = app.add_subcommand(
        "ee-scan",
        "Depth scan of max pairwise fingerprint fidelity with a Haar "
        "baseline.\nCSV columns: variant,n,L,trial,nonce,max_offdiag,"
        "haar_baseline");
    ee_flags.add_to(ee, /*with_jobs=*/true, /*with_emit=*/true);

    CLI::App* noise = app.add_subcommand(
        "noise-scan",
        "Noisy depth scan: max cross-fidelity and min purity per model.\n"
        "CSV columns: model,n,L,metric,max_cross,min_self");
    noise_flags.add_to(noise, /*with_jobs=*/true, /*with_emit=*/true);

    CLI::App* ie = app.add_subcommand(
        "ie-demo",
        "Graph-state fingerprint walkthrough with incremental edits and "
        "verification (JSON report).");
    ie_flags.add_to(ie, /*with_jobs=*/false, /*with_emit=*/false);

    CLI::App* smp = app.add_subcommand(
        "smp",
        "One fingerprint-exchange session with a referee decision and a "
        "qubits-vs-classical-bits table (JSON transcript).");
    smp_flags.add_to(smp, /*with_jobs=*/false, /*with_emit=*/false);

    CLI::App* bounds = app.add_subcommand(
        "bounds",
        "Collision-probability bounds and fingerprint-size tables in "
        "log10 arithmetic.\nCSV columns: table,n,N,ell,t,log10_K,"
        "log10_epsilon,log10_pair_bound,log10_bound,bound,heuristic_depth,"
        "naive_bits,classical_bits,ie_qubits,ee_qubits");
    bounds_flags.add_to(bounds, /*with_jobs=*/false, /*with_emit=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ee->parsed()) run_ee_scan(ee_flags);
        if (noise->parsed()) run_noise_scan(noise_flags);
        if (ie->parsed()) run_ie_demo(ie_flags);
        if (smp->parsed()) run_smp(smp_flags);
        if (bounds->parsed()) run_bounds(bounds_flags);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace supercheq::cli

#endif  // SUPERCHEQ_CLI_HPP
