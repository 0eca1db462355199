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

#ifndef SUPERCHEQ_EE_HPP
#define SUPERCHEQ_EE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "supercheq/bits.hpp"
#include "supercheq/circuit.hpp"
#include "supercheq/density.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/fidelity.hpp"
#include "supercheq/haar.hpp"
#include "supercheq/json.hpp"
#include "supercheq/parallel.hpp"
#include "supercheq/statevector.hpp"
#include "supercheq/stream.hpp"

namespace supercheq {

/// One member of the random-circuit encoding family.
struct EncodingSpec {
    enum class Variant { Haar, Brickwork1D, Grid2D_GR, FullyConnected_GR, LocalLinear };

    Variant variant = Variant::Haar;
    int n_qubits = 0;
    int layers = 0;          // L; unused by Haar
    int rows = 0, cols = 0;  // Grid2D only

    static EncodingSpec haar(int n) {
        EncodingSpec s{Variant::Haar, n, 0, 0, 0};
        s.validate();
        return s;
    }
    static EncodingSpec brickwork1d(int n, int layers) {
        EncodingSpec s{Variant::Brickwork1D, n, layers, 0, 0};
        s.validate();
        return s;
    }
    static EncodingSpec grid2d_gr(int rows, int cols, int layers) {
        EncodingSpec s{Variant::Grid2D_GR, rows * cols, layers, rows, cols};
        s.validate();
        return s;
    }
    static EncodingSpec fully_connected_gr(int n, int layers) {
        EncodingSpec s{Variant::FullyConnected_GR, n, layers, 0, 0};
        s.validate();
        return s;
    }
    static EncodingSpec local_linear(int n, int layers) {
        EncodingSpec s{Variant::LocalLinear, n, layers, 0, 0};
        s.validate();
        return s;
    }

    /// Same spec but at a different depth (Haar has no depth knob).
    EncodingSpec with_layers(int new_layers) const {
        require(variant != Variant::Haar, "EncodingSpec: Haar has no layer count");
        EncodingSpec s = *this;
        s.layers = new_layers;
        s.validate();
        return s;
    }

    void validate() const {
        require(n_qubits >= 1, "EncodingSpec: n_qubits must be positive");
        switch (variant) {
            case Variant::Haar:
                require_capacity(n_qubits <= 10,
                                 "EncodingSpec: Haar variant capped at 10 qubits");
                break;
            case Variant::Grid2D_GR:
                require(rows >= 1 && cols >= 1 && rows * cols == n_qubits,
                        "EncodingSpec: grid dimensions must multiply to n_qubits");
                require(layers >= 1, "EncodingSpec: layers must be >= 1");
                break;
            case Variant::Brickwork1D:
            case Variant::LocalLinear:
                require(n_qubits >= 2,
                        "EncodingSpec: pairwise variants need at least 2 qubits");
                require(layers >= 1, "EncodingSpec: layers must be >= 1");
                break;
            case Variant::FullyConnected_GR:
                require(layers >= 1, "EncodingSpec: layers must be >= 1");
                break;
        }
    }

    std::string variant_name() const {
        switch (variant) {
            case Variant::Haar: return "haar";
            case Variant::Brickwork1D: return "brickwork1d";
            case Variant::Grid2D_GR: return "grid2d_gr";
            case Variant::FullyConnected_GR: return "fully_connected_gr";
            case Variant::LocalLinear: return "local_linear";
        }
        return "?";
    }
};

namespace detail {

/// One depth block of the global-rotation family: GR, per-qubit RZ, GR,
/// then the connectivity's CZ pairs. Stream-draw order is fixed: the two GR
/// angle pairs bracket the RZ angles; pairs_fn runs last so any schedule
/// randomness is drawn after the angles.
template <typename PairFn>
inline void append_gr_block(Circuit& c, SeededStream& stream, PairFn&& pairs_fn) {
    const double theta1 = stream.uniform_angle();
    const double phi1 = stream.uniform_angle();
    c.add(Gate::gr(theta1, phi1));
    for (int q = 0; q < c.n_qubits; ++q) c.add(Gate::rz(q, stream.uniform_angle()));
    const double theta2 = stream.uniform_angle();
    const double phi2 = stream.uniform_angle();
    c.add(Gate::gr(theta2, phi2));
    const std::vector<std::pair<int, int>> cz_pairs = pairs_fn();
    for (const auto& [a, b] : cz_pairs) c.add(Gate::cz(a, b));
    c.end_layer();
}

inline void append_final_rz(Circuit& c, SeededStream& stream) {
    for (int q = 0; q < c.n_qubits; ++q) c.add(Gate::rz(q, stream.uniform_angle()));
    c.end_layer();
}

/// Grid CZ schedule: qubit (r, c) sits at index r*cols + c; even-depth
/// blocks couple all horizontal neighbors, odd-depth blocks all vertical
/// ones. Pairs of one orientation commute, so each block is depth-1 in CZs.
inline std::vector<std::pair<int, int>> grid_cz_pairs(int rows, int cols,
                                                      int layer_index) {
    std::vector<std::pair<int, int>> pairs;
    if (layer_index % 2 == 0) {
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c + 1 < cols; ++c) {
                pairs.emplace_back(r * cols + c, r * cols + c + 1);
            }
        }
    } else {
        for (int r = 0; r + 1 < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                pairs.emplace_back(r * cols + c, (r + 1) * cols + c);
            }
        }
    }
    return pairs;
}

/// Fully connected: a stream-sampled matching of floor(n/2) disjoint pairs.
inline std::vector<std::pair<int, int>> sampled_matching(SeededStream& stream,
                                                         int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    // Fisher-Yates with stream-drawn indices.
    for (int i = n - 1; i > 0; --i) {
        const std::uint64_t j =
            stream.uniform_below(static_cast<std::uint64_t>(i) + 1);
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; i += 2) {
        pairs.emplace_back(perm[static_cast<std::size_t>(i)],
                           perm[static_cast<std::size_t>(i + 1)]);
    }
    return pairs;
}

}  // namespace detail

/// Deterministically expands (spec, file, nonce) into the encoding circuit.
inline Circuit build_encoding_circuit(const EncodingSpec& spec, const FileBits& file,
                                      std::string_view nonce = {}) {
    spec.validate();
    SeededStream stream(file, nonce);
    Circuit c;
    c.n_qubits = spec.n_qubits;
    switch (spec.variant) {
        case EncodingSpec::Variant::Haar: {
            const Eigen::Index dim = Eigen::Index{1} << spec.n_qubits;
            std::vector<int> all(static_cast<std::size_t>(spec.n_qubits));
            for (int q = 0; q < spec.n_qubits; ++q) all[static_cast<std::size_t>(q)] = q;
            c.add(Gate::unitary(all, sample_haar_unitary(stream, dim)));
            c.end_layer();
            break;
        }
        case EncodingSpec::Variant::Brickwork1D: {
            for (int layer = 0; layer < spec.layers; ++layer) {
                const int first = layer % 2 == 0 ? 0 : 1;
                bool any = false;
                for (int q = first; q + 1 < spec.n_qubits; q += 2) {
                    c.add(Gate::u4(q, q + 1, sample_haar_unitary(stream, 4)));
                    any = true;
                }
                if (any) c.end_layer();
            }
            break;
        }
        case EncodingSpec::Variant::Grid2D_GR: {
            for (int layer = 0; layer < spec.layers; ++layer) {
                detail::append_gr_block(c, stream, [&] {
                    return detail::grid_cz_pairs(spec.rows, spec.cols, layer);
                });
            }
            detail::append_final_rz(c, stream);
            break;
        }
        case EncodingSpec::Variant::FullyConnected_GR: {
            for (int layer = 0; layer < spec.layers; ++layer) {
                detail::append_gr_block(c, stream, [&] {
                    return detail::sampled_matching(stream, spec.n_qubits);
                });
            }
            detail::append_final_rz(c, stream);
            break;
        }
        case EncodingSpec::Variant::LocalLinear: {
            for (int layer = 0; layer < spec.layers; ++layer) {
                const int pair = static_cast<int>(stream.uniform_below(
                    static_cast<std::uint64_t>(spec.n_qubits - 1)));
                c.add(Gate::u4(pair, pair + 1, sample_haar_unitary(stream, 4)));
                c.end_layer();
            }
            break;
        }
    }
    c.validate();
    return c;
}

/// The EE fingerprint state: encoding circuit applied to |0...0>.
inline StateVector fingerprint_ee(const EncodingSpec& spec, const FileBits& file,
                                  std::string_view nonce = {}) {
    return run_circuit(build_encoding_circuit(spec, file, nonce));
}

/// Trial plan for a scan: the file set plus one nonce per trial.
struct TrialConfig {
    std::vector<FileBits> files;
    std::vector<std::string> nonces;

    /// Files are the integers 0..count-1 in minimal common width.
    static std::vector<FileBits> integer_files(std::uint64_t count) {
        const std::size_t width = FileBits::min_width(count);
        std::vector<FileBits> files;
        files.reserve(count);
        for (std::uint64_t v = 0; v < count; ++v) {
            files.push_back(FileBits::from_integer(v, width));
        }
        return files;
    }

    /// Trials are numbered; nonce for trial t is the ASCII decimal of t.
    static TrialConfig integer_range(std::uint64_t file_count, int trials) {
        TrialConfig cfg;
        cfg.files = integer_files(file_count);
        for (int t = 0; t < trials; ++t) {
            const std::string s = std::to_string(t);
            cfg.nonces.push_back(s);
        }
        cfg.validate();
        return cfg;
    }

    int trials() const { return static_cast<int>(nonces.size()); }

    void validate() const {
        require(!files.empty(), "TrialConfig: need at least one file");
        require(trials() >= 1, "TrialConfig: need at least one trial");
        std::set<std::string> seen;
        for (const FileBits& f : files) {
            require(seen.insert(f.to_string()).second,
                    "TrialConfig: files must be distinct");
        }
    }
};

/// One output row of the depth scan.
struct EeScanRow {
    std::string variant;
    int n = 0;
    int layers = 0;  // 0 on Haar-baseline rows
    int trial = 0;
    std::string nonce;
    double max_offdiag = 0.0;
    double haar_baseline = 0.0;
};

struct EeScanResult {
    std::vector<EeScanRow> rows;
    // Full fidelity matrices per row, populated only when requested.
    std::vector<FidelityReport> matrices;

    void write_csv(std::ostream& os) const {
        os << "variant,n,L,trial,nonce,max_offdiag,haar_baseline\n";
        for (const EeScanRow& r : rows) {
            os << r.variant << ',' << r.n << ',' << r.layers << ',' << r.trial << ','
               << r.nonce << ',' << format_double(r.max_offdiag) << ','
               << format_double(r.haar_baseline) << '\n';
        }
    }

    nlohmann::json to_json(bool emit_matrices = false) const {
        nlohmann::json out = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const EeScanRow& r = rows[i];
            nlohmann::json row{{"variant", r.variant},   {"n", r.n},
                               {"L", r.layers},          {"trial", r.trial},
                               {"nonce", r.nonce},       {"max_offdiag", r.max_offdiag},
                               {"haar_baseline", r.haar_baseline}};
            if (emit_matrices && i < matrices.size()) {
                row["matrix"] = matrices[i].to_json();
            }
            out.push_back(row);
        }
        return out;
    }
};

namespace detail {

inline std::string printable_nonce(std::string_view nonce) {
    std::string out;
    for (unsigned char b : nonce) {
        if (b >= 0x20 && b < 0x7f && b != ',' && b != '"') {
            out.push_back(static_cast<char>(b));
        } else {
            static const char* hex = "0123456789abcdef";
            out.push_back('\\');
            out.push_back('x');
            out.push_back(hex[b >> 4]);
            out.push_back(hex[b & 0xf]);
        }
    }
    return out;
}

/// Max pairwise |<i|j>|^2 over a state family, via the Gram matrix.
inline double max_offdiag_of(const std::vector<StateVector>& states,
                             FidelityReport* report_out) {
    FidelityReport report = overlap_matrix(states);
    const double value = report.max_offdiag();
    if (report_out != nullptr) *report_out = std::move(report);
    return value;
}

}  // namespace detail

/// Depth scan over a family of specs (same n, varying variant/L): for each
/// trial builds all fingerprints per spec, records the max pairwise fidelity,
/// and appends one Haar-baseline row per trial.
inline EeScanResult ee_max_fidelity_scan(const std::vector<EncodingSpec>& specs,
                                         const TrialConfig& config, int jobs = 1,
                                         bool keep_matrices = false) {
    require(!specs.empty(), "ee_max_fidelity_scan: need at least one spec");
    config.validate();
    const int n = specs.front().n_qubits;
    for (const EncodingSpec& s : specs) {
        s.validate();
        require(s.n_qubits == n, "ee_max_fidelity_scan: specs must share n_qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;

    EeScanResult result;
    for (int trial = 0; trial < config.trials(); ++trial) {
        const auto& nonce = config.nonces[static_cast<std::size_t>(trial)];
        // Haar baseline for this trial: ideal Haar-random states, one per file.
        const std::vector<StateVector> haar_states =
            parallel_map(config.files.size(), jobs, [&](std::size_t i) {
                SeededStream stream(config.files[i], nonce);
                return StateVector::from_amplitudes(n, sample_haar_state(stream, dim));
            });
        FidelityReport baseline_report;
        const double baseline = detail::max_offdiag_of(
            haar_states, keep_matrices ? &baseline_report : nullptr);

        for (const EncodingSpec& spec : specs) {
            const std::vector<StateVector> states =
                parallel_map(config.files.size(), jobs, [&](std::size_t i) {
                    return fingerprint_ee(spec, config.files[i], nonce);
                });
            FidelityReport report;
            const double max_offdiag =
                detail::max_offdiag_of(states, keep_matrices ? &report : nullptr);
            result.rows.push_back({spec.variant_name(), n, spec.layers, trial,
                                   detail::printable_nonce(nonce), max_offdiag,
                                   baseline});
            if (keep_matrices) result.matrices.push_back(std::move(report));
        }
        result.rows.push_back({"haar_baseline", n, 0, trial,
                               detail::printable_nonce(nonce), baseline, baseline});
        if (keep_matrices) result.matrices.push_back(std::move(baseline_report));
    }
    return result;
}

/// One output row of the noisy depth scan.
struct NoiseScanRow {
    std::string model;
    int n = 0;
    int layers = 0;
    double max_cross = 0.0;  // max over distinct pairs
    double min_self = 0.0;   // min over files of tr(rho^2)
};

struct NoiseScanResult {
    std::vector<NoiseScanRow> rows;
    // Full cross-fidelity matrices per row, populated only when requested.
    std::vector<FidelityReport> matrices;
    MixedMetric metric = MixedMetric::SwapOverlap;

    std::string metric_name() const {
        return metric == MixedMetric::SwapOverlap ? "swap_overlap" : "uhlmann";
    }

    void write_csv(std::ostream& os) const {
        os << "model,n,L,metric,max_cross,min_self\n";
        for (const NoiseScanRow& r : rows) {
            os << r.model << ',' << r.n << ',' << r.layers << ',' << metric_name()
               << ',' << format_double(r.max_cross) << ','
               << format_double(r.min_self) << '\n';
        }
    }

    nlohmann::json to_json(bool emit_matrices = false) const {
        nlohmann::json out = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const NoiseScanRow& r = rows[i];
            nlohmann::json row{{"model", r.model},
                               {"n", r.n},
                               {"L", r.layers},
                               {"metric", metric_name()},
                               {"max_cross", r.max_cross},
                               {"min_self", r.min_self}};
            if (emit_matrices && i < matrices.size()) {
                row["matrix"] = matrices[i].to_json();
            }
            out.push_back(row);
        }
        return out;
    }
};

/// Noisy depth scan: density-matrix fingerprints for every seed file at each
/// depth under each model; reports the worst distinguishability (max cross
/// fidelity over distinct pairs) and the worst purity (min tr(rho^2)).
inline NoiseScanResult ee_noise_scan(const EncodingSpec& base,
                                     const std::vector<NoiseModel>& models,
                                     const std::vector<FileBits>& seeds,
                                     const std::vector<int>& depths,
                                     std::string_view nonce = {},
                                     MixedMetric metric = MixedMetric::SwapOverlap,
                                     int jobs = 1, bool keep_matrices = false) {
    require(!models.empty(), "ee_noise_scan: need at least one noise model");
    require(seeds.size() >= 2, "ee_noise_scan: need at least two seed files");
    require(!depths.empty(), "ee_noise_scan: need at least one depth");
    require_capacity(base.n_qubits <= DensityMatrix::kMaxQubits,
                     "ee_noise_scan: density-matrix capacity is 10 qubits");
    {
        std::set<std::string> seen;
        for (const FileBits& f : seeds) {
            require(seen.insert(f.to_string()).second,
                    "ee_noise_scan: seed files must be distinct");
        }
    }

    NoiseScanResult result;
    result.metric = metric;
    for (const NoiseModel& model : models) {
        model.validate();
        for (int depth : depths) {
            const EncodingSpec spec = base.with_layers(depth);
            const std::vector<DensityMatrix> rhos =
                parallel_map(seeds.size(), jobs, [&](std::size_t i) {
                    return run_noisy(build_encoding_circuit(spec, seeds[i], nonce),
                                     model);
                });
            double max_cross = 0.0;
            double min_self = 1.0;
            FidelityReport report;
            if (keep_matrices) {
                report.labels.reserve(seeds.size());
                for (const FileBits& f : seeds) report.labels.push_back(f.to_string());
                report.matrix.setZero(static_cast<Eigen::Index>(rhos.size()),
                                      static_cast<Eigen::Index>(rhos.size()));
            }
            for (std::size_t i = 0; i < rhos.size(); ++i) {
                min_self = std::min(min_self, rhos[i].purity());
                if (keep_matrices) {
                    report.matrix(static_cast<Eigen::Index>(i),
                                  static_cast<Eigen::Index>(i)) =
                        fidelity(rhos[i], rhos[i], metric);
                }
                for (std::size_t j = i + 1; j < rhos.size(); ++j) {
                    const double f = fidelity(rhos[i], rhos[j], metric);
                    max_cross = std::max(max_cross, f);
                    if (keep_matrices) {
                        report.matrix(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(j)) = f;
                        report.matrix(static_cast<Eigen::Index>(j),
                                      static_cast<Eigen::Index>(i)) = f;
                    }
                }
            }
            result.rows.push_back(
                {model.name(), base.n_qubits, depth, max_cross, min_self});
            if (keep_matrices) result.matrices.push_back(std::move(report));
        }
    }
    return result;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_EE_HPP
