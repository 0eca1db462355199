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

#ifndef SUPERCHEQ_ANALYTICS_HPP
#define SUPERCHEQ_ANALYTICS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>

#include "supercheq/errors.hpp"
#include "supercheq/ie.hpp"

namespace supercheq {

/// Non-negative real stored as a base-10 logarithm so that collision
/// probabilities hundreds or thousands of orders of magnitude below the
/// smallest normal double stay representable.  Zero is an explicit flag
/// rather than -infinity so the magnitude field is always finite.
struct LogValue {
    double log10_magnitude = 0.0;
    bool zero = false;

    static LogValue zero_value() { return {0.0, true}; }

    static LogValue from_log10(double log10_magnitude) {
        check_invariant(std::isfinite(log10_magnitude),
                        "LogValue: non-finite log magnitude");
        return {log10_magnitude, false};
    }

    static LogValue from_value(double value) {
        require(value >= 0.0, "LogValue: magnitude must be non-negative");
        if (value == 0.0) return zero_value();
        return from_log10(std::log10(value));
    }

    /// Converts back to a native double; magnitudes outside the double range
    /// flush to 0 or +infinity.
    double to_double() const {
        return zero ? 0.0 : std::pow(10.0, log10_magnitude);
    }

    /// Human-readable scientific form, e.g. "7.499e-9201"; "0" when zero.
    std::string to_scientific() const {
        if (zero) return "0";
        double exponent = std::floor(log10_magnitude);
        double mantissa = std::pow(10.0, log10_magnitude - exponent);
        if (mantissa >= 9.9995) {
            mantissa /= 10.0;
            exponent += 1.0;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3fe%+.0f", mantissa, exponent);
        return buf;
    }
};

/// base^exponent as a LogValue, for counts like 1.4^(2^n) that overflow
/// native doubles.
inline LogValue log_power(double base, double exponent) {
    require(base > 0.0, "log_power: base must be positive");
    return LogValue::from_log10(exponent * std::log10(base));
}

inline LogValue log_mul(LogValue a, LogValue b) {
    if (a.zero || b.zero) return LogValue::zero_value();
    return LogValue::from_log10(a.log10_magnitude + b.log10_magnitude);
}

/// Log-domain sum: 10^hi * (1 + 10^(lo-hi)).  The correction factor
/// underflows harmlessly once the terms are ~300 orders of magnitude apart.
inline LogValue log_add(LogValue a, LogValue b) {
    if (a.zero) return b;
    if (b.zero) return a;
    const double hi = std::max(a.log10_magnitude, b.log10_magnitude);
    const double lo = std::min(a.log10_magnitude, b.log10_magnitude);
    return LogValue::from_log10(
        hi + std::log1p(std::pow(10.0, lo - hi)) / std::numbers::ln10);
}

namespace detail {

/// log10(K - 1) for K >= 1 given as a LogValue; zero flag when K == 1.
/// Uses K - 1 = K (1 - 1/K), where 1/K underflows to 0 for huge K.
inline LogValue log10_k_minus_one(LogValue k) {
    require(!k.zero && k.log10_magnitude >= 0.0,
            "collision bound: K must be >= 1");
    const double inv_k = std::pow(10.0, -k.log10_magnitude);
    if (inv_k >= 1.0) return LogValue::zero_value();
    return LogValue::from_log10(k.log10_magnitude +
                                std::log1p(-inv_k) / std::numbers::ln10);
}

}  // namespace detail

/// Probability density of the fidelity F = |<a|b>|^2 between two independent
/// Haar-random n-qubit states: Beta(1, d - 1) with d = 2^n, i.e.
/// p(f) = (d - 1)(1 - f)^(d - 2).
inline double haar_fidelity_pdf(double f, int n) {
    require(n >= 1, "haar_fidelity_pdf: n must be >= 1");
    require(f >= 0.0 && f <= 1.0, "haar_fidelity_pdf: f outside [0, 1]");
    const double d = std::exp2(n);
    return (d - 1.0) * std::pow(1.0 - f, d - 2.0);
}

/// Pr[F > c] for the Haar fidelity law: (1 - c)^(2^n - 1), in log domain.
inline LogValue haar_tail(double c, int n) {
    require(n >= 1, "haar_tail: n must be >= 1");
    require(c >= 0.0 && c < 1.0, "haar_tail: c outside [0, 1)");
    const double d = std::exp2(n);
    return LogValue::from_log10((d - 1.0) * std::log10(1.0 - c));
}

/// Union bound on the probability that any unordered pair among K independent
/// Haar-random n-qubit states has fidelity above 1/2:
///   K(K-1)/2 * Pr[F > 1/2] = K(K-1)/2^(2^n).
/// K is passed as a LogValue because counts like 1.4^(2^20) overflow doubles;
/// the result has the zero flag set when K == 1 (no pairs).
inline LogValue haar_collision_bound(LogValue k, int n) {
    require(n >= 1, "haar_collision_bound: n must be >= 1");
    const LogValue k_minus_one = detail::log10_k_minus_one(k);
    if (k_minus_one.zero) return LogValue::zero_value();
    const double d = std::exp2(n);
    return LogValue::from_log10(k.log10_magnitude +
                                k_minus_one.log10_magnitude -
                                d * std::log10(2.0));
}

/// Moment-order / accuracy schedule for approximate-design bounds:
/// t = n^(ell - 1) and epsilon = 2^(-2 n^ell) for a constant exponent ell.
struct DesignParams {
    int n = 1;
    int ell = 1;
    double t = 1.0;
    LogValue epsilon = LogValue::from_log10(0.0);

    static DesignParams schedule(int n, int ell) {
        require(n >= 1, "DesignParams: n must be >= 1");
        require(ell >= 1, "DesignParams: ell must be >= 1");
        DesignParams p;
        p.n = n;
        p.ell = ell;
        p.t = std::pow(double(n), ell - 1);
        p.epsilon = log_power(2.0, -2.0 * std::pow(double(n), ell));
        return p;
    }

    void validate() const {
        require(n >= 1, "DesignParams: n must be >= 1");
        require(ell >= 1, "DesignParams: ell must be >= 1");
        require(t >= 1.0, "DesignParams: t must be >= 1");
        require(!epsilon.zero, "DesignParams: epsilon must be > 0");
    }
};

/// Tail bound on a single pairwise fidelity when states come from an
/// epsilon-approximate t-design instead of the exact Haar measure:
///   2^t (2^(nt) epsilon + t^t / 2^(nt)).
/// epsilon may be the zero LogValue (exact design limit).
inline LogValue tdesign_moment_bound(double t, int n, LogValue epsilon) {
    require(t >= 1.0, "tdesign_moment_bound: t must be >= 1");
    require(n >= 1, "tdesign_moment_bound: n must be >= 1");
    const double log10_2 = std::log10(2.0);
    const double nt = double(n) * t;
    LogValue first = LogValue::zero_value();
    if (!epsilon.zero) {
        first = LogValue::from_log10(nt * log10_2 + epsilon.log10_magnitude);
    }
    const LogValue second =
        LogValue::from_log10(t * std::log10(t) - nt * log10_2);
    const LogValue sum = log_add(first, second);
    return LogValue::from_log10(t * log10_2 + sum.log10_magnitude);
}

/// Union bound over all unordered pairs of K design-sampled states:
///   K(K-1)/2 * (2^(t(n+1)) epsilon + t^t / 2^(t(n-1))).
/// Zero flag when K == 1.
inline LogValue tdesign_collision_bound(LogValue k, int n, double t,
                                        LogValue epsilon) {
    require(t >= 1.0, "tdesign_collision_bound: t must be >= 1");
    require(n >= 1, "tdesign_collision_bound: n must be >= 1");
    const LogValue k_minus_one = detail::log10_k_minus_one(k);
    if (k_minus_one.zero) return LogValue::zero_value();
    const double log10_2 = std::log10(2.0);
    LogValue first = LogValue::zero_value();
    if (!epsilon.zero) {
        first = LogValue::from_log10(t * (n + 1.0) * log10_2 +
                                     epsilon.log10_magnitude);
    }
    const LogValue second =
        LogValue::from_log10(t * std::log10(t) - t * (n - 1.0) * log10_2);
    const LogValue sum = log_add(first, second);
    return LogValue::from_log10(k.log10_magnitude +
                                k_minus_one.log10_magnitude - log10_2 +
                                sum.log10_magnitude);
}

/// Heuristic circuit depth t^4.01 (n t + log2(1/epsilon)) for reaching an
/// epsilon-approximate t-design with local two-qubit gates.  A sizing
/// estimate only, not a guarantee.
inline double heuristic_depth(double t, int n, LogValue epsilon) {
    require(t >= 1.0, "heuristic_depth: t must be >= 1");
    require(n >= 1, "heuristic_depth: n must be >= 1");
    require(!epsilon.zero && epsilon.log10_magnitude <= 0.0,
            "heuristic_depth: epsilon must lie in (0, 1]");
    const double log2_inv_eps = -epsilon.log10_magnitude / std::log10(2.0);
    return std::pow(t, 4.01) * (double(n) * t + log2_inv_eps);
}

/// Fingerprint-size comparison for an N-bit file.
struct SizeRecord {
    std::int64_t naive_bits = 0;  ///< N: send the file itself
    int classical_bits = 0;       ///< ceil(sqrt(3N)) classical fingerprint
    int ie_qubits = 0;            ///< graph-encoding qubit count
    int ee_qubits = 0;  ///< smallest n whose 1.4^(2^n) capacity covers 2^N
};

inline SizeRecord size_table(std::int64_t n_bits) {
    require(n_bits >= 1, "size_table: N must be >= 1");
    SizeRecord r;
    r.naive_bits = n_bits;
    r.classical_bits =
        int(std::ceil(std::sqrt(3.0 * double(n_bits))));
    r.ie_qubits = qubits_for_file(std::size_t(n_bits));
    // Invert the random-encoding capacity: 1.4^(2^n) >= 2^N, i.e.
    // 2^n log2(1.4) >= N.
    int n = 1;
    while (std::exp2(n) * std::log2(1.4) < double(n_bits)) ++n;
    r.ee_qubits = n;
    return r;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_ANALYTICS_HPP
