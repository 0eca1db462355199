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

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "supercheq/cli.hpp"

namespace fs = std::filesystem;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

// The CLI prints progress lines; keep test output clean and inspectable.
struct CoutCapture {
    std::ostringstream text;
    std::streambuf* saved;
    CoutCapture() : saved(std::cout.rdbuf(text.rdbuf())) {}
    ~CoutCapture() { std::cout.rdbuf(saved); }
};

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"supercheq"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return supercheq::cli::run(static_cast<int>(argv.size()), argv.data());
}

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "supercheq-cli-tests";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_config(const std::string& name, const nlohmann::json& body) {
    const fs::path path = work_dir() / name;
    std::ofstream os(path);
    os << body.dump(2) << "\n";
    return path.string();
}

std::string slurp(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("ee-scan writes CSV with provenance and a JSON mirror", "[cli]") {
    const std::string cfg = write_config(
        "ee.json", {{"n", 4}, {"rows", 2}, {"cols", 2}, {"files", 8},
                    {"trials", 2}, {"depths", {1, 2}}});
    const std::string out = (work_dir() / "ee_out.csv").string();
    CoutCapture cap;
    REQUIRE(run_cli({"ee-scan", "--config", cfg, "--out", out}) == 0);
    const std::string csv = slurp(out);
    // 1 provenance line + 1 header + 2 trials x (2 variants x 2 depths + 1
    // baseline row).
    CHECK(count_lines(csv) == 2 + 2 * 5);
    CHECK(csv.rfind("# config: {", 0) == 0);
    CHECK_THAT(csv, ContainsSubstring(
                        "variant,n,L,trial,nonce,max_offdiag,haar_baseline"));
    CHECK_THAT(csv, ContainsSubstring("haar_baseline,4,0,1,"));
    // JSON mirror sits next to the CSV and repeats the resolved config.
    const fs::path mirror = work_dir() / "ee_out.json";
    REQUIRE(fs::exists(mirror));
    const nlohmann::json m = nlohmann::json::parse(slurp(mirror));
    CHECK(m.at("config").at("n") == 4);
    CHECK(m.at("config").at("files") == 8);
    CHECK(m.at("rows").size() == 10);
    CHECK_THAT(cap.text.str(), ContainsSubstring("10 rows"));
}

TEST_CASE("ee-scan reruns are byte-identical", "[cli]") {
    const std::string cfg = write_config(
        "ee_det.json", {{"n", 3}, {"files", 4}, {"trials", 1}, {"depths", {1}},
                        {"variants", {"fully_connected_gr"}}});
    const std::string out = (work_dir() / "ee_det_out.csv").string();
    CoutCapture cap;
    REQUIRE(run_cli({"ee-scan", "--config", cfg, "--out", out}) == 0);
    const std::string first = slurp(out);
    const std::string first_mirror = slurp(work_dir() / "ee_det_out.json");
    REQUIRE(run_cli({"ee-scan", "--config", cfg, "--out", out}) == 0);
    CHECK(slurp(out) == first);
    CHECK(slurp(work_dir() / "ee_det_out.json") == first_mirror);
}

TEST_CASE("noise-scan emits one row per model and depth", "[cli]") {
    const std::string cfg = write_config(
        "noise.json", {{"n", 3}, {"seed_bits", 2}, {"depths", {1, 2}},
                       {"models", {"none", "pauli"}}, {"metric", "uhlmann"}});
    const std::string out = (work_dir() / "noise_out.csv").string();
    CoutCapture cap;
    REQUIRE(run_cli({"noise-scan", "--config", cfg, "--out", out}) == 0);
    const std::string csv = slurp(out);
    CHECK(count_lines(csv) == 2 + 4);
    CHECK_THAT(csv, ContainsSubstring("model,n,L,metric,max_cross,min_self"));
    CHECK_THAT(csv, ContainsSubstring("pauli,3,2,uhlmann,"));
    const nlohmann::json m = nlohmann::json::parse(slurp(work_dir() / "noise_out.json"));
    CHECK(m.at("rows").size() == 4);
    CHECK(m.at("rows")[0].at("metric") == "uhlmann");
}

TEST_CASE("ie-demo verifies every incremental edit", "[cli]") {
    const std::string cfg = write_config("ie.json", nlohmann::json::object());
    const std::string out = (work_dir() / "ie_out.json").string();
    CoutCapture cap;
    REQUIRE(run_cli({"ie-demo", "--config", cfg, "--out", out}) == 0);
    const std::string stdout_text = cap.text.str();
    CHECK_THAT(stdout_text, ContainsSubstring("(15 bits) -> n=6, 10 edges"));
    CHECK_THAT(stdout_text, ContainsSubstring("6 H + 10 CZ gates, depth 2"));
    CHECK_THAT(stdout_text, ContainsSubstring("VERIFIED"));

    const nlohmann::json report = nlohmann::json::parse(slurp(out));
    const nlohmann::json& steps = report.at("steps");
    REQUIRE(steps.size() == 4);
    CHECK(steps[0].at("op") == "flip");
    CHECK(steps[0].at("edges_toggled") == 1);
    CHECK_THAT(steps[0].at("fidelity_vs_previous").get<double>(),
               WithinAbs(0.25, 1e-12));
    // The resize to 21 bits grows the graph to 7 vertices; no same-n
    // fidelity is defined across that step.
    CHECK(steps[2].at("op") == "resize");
    CHECK(steps[2].at("n") == 7);
    CHECK(steps[2].at("fidelity_vs_previous").is_null());
    CHECK(steps[3].at("op") == "flip");
    CHECK(steps[3].at("verified") == true);
    CHECK(report.at("n") == 7);
}

TEST_CASE("smp reports the copy count for the error budget", "[cli]") {
    const std::string cfg = write_config(
        "smp.json", {{"protocol", "ee"}, {"file_a", "10110011"},
                     {"file_b", "10110011"}, {"epsilon", 1e-6}, {"n", 4},
                     {"layers", 5}});
    const std::string out = (work_dir() / "smp_out.json").string();
    CoutCapture cap;
    REQUIRE(run_cli({"smp", "--config", cfg, "--out", out}) == 0);
    const nlohmann::json report = nlohmann::json::parse(slurp(out));
    const nlohmann::json& t = report.at("transcript");
    CHECK(t.at("M") == 20);
    CHECK(t.at("qubits_sent") == 160);
    CHECK(t.at("decision") == "equal");
    CHECK(t.at("classical_naive_bits") == 16);
    CHECK_THAT(cap.text.str(), ContainsSubstring("decision              equal"));
}

TEST_CASE("bounds writes all three tables", "[cli]") {
    const std::string cfg = write_config("bounds.json", nlohmann::json::object());
    const std::string out = (work_dir() / "bounds_out.csv").string();
    CoutCapture cap;
    REQUIRE(run_cli({"bounds", "--config", cfg, "--out", out}) == 0);
    const std::string csv = slurp(out);
    // 29 haar rows + 58 design rows + 5 size rows + header + provenance.
    CHECK(count_lines(csv) == 2 + 29 + 58 + 5);
    CHECK_THAT(csv, ContainsSubstring("table,n,N,ell,t,log10_K,log10_epsilon,"
                                      "log10_pair_bound,log10_bound,bound,"
                                      "heuristic_depth,naive_bits,"
                                      "classical_bits,ie_qubits,ee_qubits"));
    CHECK_THAT(cap.text.str(), ContainsSubstring("n=20 headline"));

    const nlohmann::json m = nlohmann::json::parse(slurp(work_dir() / "bounds_out.json"));
    REQUIRE(m.at("haar_collision").size() == 29);
    bool found = false;
    for (const auto& row : m.at("haar_collision")) {
        if (row.at("n") == 20) {
            found = true;
            const double b = row.at("log10_bound").get<double>();
            CHECK(b > -9400.0);
            CHECK(b < -9000.0);
        }
    }
    CHECK(found);
    CHECK(m.at("design").size() == 58);
    CHECK(m.at("sizes").size() == 5);
    CHECK(m.at("sizes")[1].at("ie_qubits") == 6);
}

TEST_CASE("unknown config keys are rejected", "[cli]") {
    const std::string cfg = write_config("bad_key.json", {{"depht", {1, 2}}});
    CoutCapture cap;
    CHECK(run_cli({"ee-scan", "--config", cfg,
                   "--out", (work_dir() / "x.csv").string()}) == 2);
}

TEST_CASE("invalid parameter values exit with the config code", "[cli]") {
    const std::string cfg = write_config(
        "bad_depth.json", {{"n", 3}, {"files", 4}, {"trials", 1},
                           {"depths", {0}}, {"variants", {"fully_connected_gr"}}});
    CoutCapture cap;
    CHECK(run_cli({"ee-scan", "--config", cfg,
                   "--out", (work_dir() / "y.csv").string()}) == 2);
}

TEST_CASE("capacity overruns exit with their own code", "[cli]") {
    const std::string cfg = write_config(
        "too_big.json", {{"n", 11}, {"seed_bits", 2}, {"depths", {1}},
                         {"models", {"pauli"}}});
    CoutCapture cap;
    CHECK(run_cli({"noise-scan", "--config", cfg,
                   "--out", (work_dir() / "z.csv").string()}) == 3);
}

TEST_CASE("nonce must be even-length hex", "[cli]") {
    const std::string cfg = write_config("nonce.json", nlohmann::json::object());
    CoutCapture cap;
    CHECK(run_cli({"bounds", "--config", cfg, "--nonce", "abc",
                   "--out", (work_dir() / "n.csv").string()}) == 2);
    CHECK(run_cli({"bounds", "--config", cfg, "--nonce", "zz",
                   "--out", (work_dir() / "n.csv").string()}) == 2);
    CHECK(run_cli({"bounds", "--config", cfg, "--nonce", "00ff",
                   "--out", (work_dir() / "n.csv").string()}) == 0);
}

TEST_CASE("missing config file is a config error", "[cli]") {
    CoutCapture cap;
    CHECK(run_cli({"ee-scan", "--config",
                   (work_dir() / "does_not_exist.json").string()}) == 2);
}

TEST_CASE("outputs may not clobber the config file", "[cli]") {
    // The JSON mirror of guard.csv would be guard.json, the config itself.
    const std::string cfg = write_config(
        "guard.json", {{"n", 3}, {"files", 4}, {"trials", 1}, {"depths", {1}},
                       {"variants", {"fully_connected_gr"}}});
    CoutCapture cap;
    CHECK(run_cli({"ee-scan", "--config", cfg,
                   "--out", (work_dir() / "guard.csv").string()}) == 2);
    // The config file survives untouched.
    const nlohmann::json back = nlohmann::json::parse(slurp(cfg));
    CHECK(back.at("files") == 4);
}

TEST_CASE("a subcommand is required", "[cli]") {
    CoutCapture cap;
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"frobnicate"}) == 2);
}
