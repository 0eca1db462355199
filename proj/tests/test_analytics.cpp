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

#include <mpfr.h>

#include <cmath>
#include <limits>
#include <vector>

#include "supercheq/analytics.hpp"
#include "supercheq/bits.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/stream.hpp"

using namespace supercheq;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr mpfr_prec_t kOraclePrec = 256;

// 256-bit reference for log10(K (K - 1)) - 2^n log10(2) with K = 10^log10_k.
double oracle_haar_collision(double log10_k, int n) {
    mpfr_t k, km1, res, tmp;
    mpfr_inits2(kOraclePrec, k, km1, res, tmp, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(res, log10_k, MPFR_RNDN);
    mpfr_exp10(k, res, MPFR_RNDN);
    mpfr_sub_ui(km1, k, 1, MPFR_RNDN);
    mpfr_log10(km1, km1, MPFR_RNDN);
    mpfr_add(res, res, km1, MPFR_RNDN);
    mpfr_set_ui(tmp, 2, MPFR_RNDN);
    mpfr_log10(tmp, tmp, MPFR_RNDN);
    mpfr_mul_d(tmp, tmp, std::exp2(n), MPFR_RNDN);
    mpfr_sub(res, res, tmp, MPFR_RNDN);
    const double out = mpfr_get_d(res, MPFR_RNDN);
    mpfr_clears(k, km1, res, tmp, static_cast<mpfr_ptr>(nullptr));
    return out;
}

// 256-bit reference for log10(10^a + 10^b).
double oracle_log_add(double a, double b) {
    mpfr_t xa, xb, res;
    mpfr_inits2(kOraclePrec, xa, xb, res, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(res, a, MPFR_RNDN);
    mpfr_exp10(xa, res, MPFR_RNDN);
    mpfr_set_d(res, b, MPFR_RNDN);
    mpfr_exp10(xb, res, MPFR_RNDN);
    mpfr_add(res, xa, xb, MPFR_RNDN);
    mpfr_log10(res, res, MPFR_RNDN);
    const double out = mpfr_get_d(res, MPFR_RNDN);
    mpfr_clears(xa, xb, res, static_cast<mpfr_ptr>(nullptr));
    return out;
}

// 256-bit reference for log10(2^t (2^(nt) eps + t^t / 2^(nt))),
// eps = 10^log10_eps.
double oracle_moment_bound(double t, int n, double log10_eps) {
    mpfr_t eps, first, second, res, tmp;
    mpfr_inits2(kOraclePrec, eps, first, second, res, tmp,
                static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(tmp, log10_eps, MPFR_RNDN);
    mpfr_exp10(eps, tmp, MPFR_RNDN);
    // first = 2^(nt) * eps
    mpfr_set_d(res, double(n) * t, MPFR_RNDN);
    mpfr_ui_pow(first, 2, res, MPFR_RNDN);
    mpfr_mul(first, first, eps, MPFR_RNDN);
    // second = t^t / 2^(nt)
    mpfr_set_d(tmp, t, MPFR_RNDN);
    mpfr_set_d(second, t, MPFR_RNDN);
    mpfr_pow(second, tmp, second, MPFR_RNDN);
    mpfr_ui_pow(tmp, 2, res, MPFR_RNDN);
    mpfr_div(second, second, tmp, MPFR_RNDN);
    // res = log10(2^t * (first + second))
    mpfr_add(res, first, second, MPFR_RNDN);
    mpfr_set_d(tmp, t, MPFR_RNDN);
    mpfr_ui_pow(tmp, 2, tmp, MPFR_RNDN);
    mpfr_mul(res, res, tmp, MPFR_RNDN);
    mpfr_log10(res, res, MPFR_RNDN);
    const double out = mpfr_get_d(res, MPFR_RNDN);
    mpfr_clears(eps, first, second, res, tmp, static_cast<mpfr_ptr>(nullptr));
    return out;
}

// 256-bit reference for
// log10(K(K-1)/2 * (2^(t(n+1)) eps + t^t / 2^(t(n-1)))).
double oracle_pair_bound(double log10_k, int n, double t, double log10_eps) {
    mpfr_t k, pairs, eps, first, second, res, tmp;
    mpfr_inits2(kOraclePrec, k, pairs, eps, first, second, res, tmp,
                static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(tmp, log10_k, MPFR_RNDN);
    mpfr_exp10(k, tmp, MPFR_RNDN);
    mpfr_sub_ui(pairs, k, 1, MPFR_RNDN);
    mpfr_mul(pairs, pairs, k, MPFR_RNDN);
    mpfr_div_ui(pairs, pairs, 2, MPFR_RNDN);
    mpfr_set_d(tmp, log10_eps, MPFR_RNDN);
    mpfr_exp10(eps, tmp, MPFR_RNDN);
    mpfr_set_d(tmp, t * (double(n) + 1.0), MPFR_RNDN);
    mpfr_ui_pow(first, 2, tmp, MPFR_RNDN);
    mpfr_mul(first, first, eps, MPFR_RNDN);
    mpfr_set_d(tmp, t, MPFR_RNDN);
    mpfr_set_d(second, t, MPFR_RNDN);
    mpfr_pow(second, tmp, second, MPFR_RNDN);
    mpfr_set_d(tmp, t * (double(n) - 1.0), MPFR_RNDN);
    mpfr_ui_pow(tmp, 2, tmp, MPFR_RNDN);
    mpfr_div(second, second, tmp, MPFR_RNDN);
    mpfr_add(res, first, second, MPFR_RNDN);
    mpfr_mul(res, res, pairs, MPFR_RNDN);
    mpfr_log10(res, res, MPFR_RNDN);
    const double out = mpfr_get_d(res, MPFR_RNDN);
    mpfr_clears(k, pairs, eps, first, second, res, tmp,
                static_cast<mpfr_ptr>(nullptr));
    return out;
}

void check_close_log(double got, double want) {
    const double tol = 1e-9 * std::max(1.0, std::abs(want));
    REQUIRE_THAT(got, WithinAbs(want, tol));
}

}  // namespace

TEST_CASE("log-domain value basics", "[analytics]") {
    CHECK(LogValue::from_value(0.0).zero);
    CHECK(LogValue::from_value(0.0).to_double() == 0.0);
    CHECK_THAT(LogValue::from_value(42.0).to_double(), WithinRel(42.0, 1e-12));
    CHECK_THAT(LogValue::from_log10(-3.0).to_double(), WithinRel(1e-3, 1e-12));
    CHECK_THROWS_AS(LogValue::from_value(-1.0), ConfigError);
    CHECK_THROWS_AS(LogValue::from_log10(std::nan("")), InvariantError);

    CHECK_THAT(log_power(2.0, 10.0).to_double(), WithinRel(1024.0, 1e-12));
    CHECK_THAT(log_power(1.4, std::exp2(20)).log10_magnitude,
               WithinRel(std::exp2(20) * std::log10(1.4), 1e-14));

    const LogValue a = LogValue::from_value(3.0);
    const LogValue b = LogValue::from_value(5.0);
    CHECK_THAT(log_mul(a, b).to_double(), WithinRel(15.0, 1e-12));
    CHECK(log_mul(a, LogValue::zero_value()).zero);
    CHECK_THAT(log_add(a, b).to_double(), WithinRel(8.0, 1e-12));
    CHECK_THAT(log_add(a, LogValue::zero_value()).to_double(),
               WithinRel(3.0, 1e-12));
    CHECK(log_add(LogValue::zero_value(), LogValue::zero_value()).zero);
}

TEST_CASE("scientific rendering", "[analytics]") {
    CHECK(LogValue::zero_value().to_scientific() == "0");
    CHECK(LogValue::from_value(1.0).to_scientific() == "1.000e+0");
    CHECK(LogValue::from_value(0.025).to_scientific() == "2.500e-2");
    CHECK(LogValue::from_value(6.02e23).to_scientific() == "6.020e+23");
    // Mantissas that round to 10.000 must carry into the exponent.
    CHECK(LogValue::from_log10(-1e-7).to_scientific() == "1.000e+0");
    CHECK(LogValue::from_log10(-9200.126455).to_scientific() == "7.474e-9201");
}

TEST_CASE("log_add agrees with the high-precision oracle", "[analytics]") {
    SeededStream rng(FileBits::from_string("1110"), "an-add");
    for (int i = 0; i < 100; ++i) {
        const double a = (rng.uniform01() - 0.5) * 10000.0;
        const double spread = rng.uniform01() * 40.0;
        const double b = a - spread;
        check_close_log(log_add(LogValue::from_log10(a), LogValue::from_log10(b))
                            .log10_magnitude,
                        oracle_log_add(a, b));
    }
}

TEST_CASE("haar fidelity density normalizes with mean 1/d", "[analytics]") {
    for (int n : {1, 2, 3, 4}) {
        const double d = std::exp2(n);
        // Simpson's rule on a fine grid.
        const int steps = 20000;
        const double h = 1.0 / steps;
        double mass = 0.0, mean = 0.0;
        for (int i = 0; i <= steps; ++i) {
            const double f = i * h;
            const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            const double p = haar_fidelity_pdf(f, n);
            mass += w * p;
            mean += w * f * p;
        }
        mass *= h / 3.0;
        mean *= h / 3.0;
        CHECK_THAT(mass, WithinAbs(1.0, 1e-8));
        CHECK_THAT(mean, WithinAbs(1.0 / d, 1e-8));
    }
    CHECK_THAT(haar_fidelity_pdf(0.0, 2), WithinRel(3.0, 1e-15));
    CHECK_THROWS_AS(haar_fidelity_pdf(1.5, 2), ConfigError);
    CHECK_THROWS_AS(haar_fidelity_pdf(0.5, 0), ConfigError);
}

TEST_CASE("haar tail matches the closed form", "[analytics]") {
    CHECK_THAT(haar_tail(0.5, 2).to_double(), WithinRel(0.125, 1e-12));
    CHECK_THAT(haar_tail(0.0, 3).to_double(), WithinRel(1.0, 1e-12));
    CHECK_THAT(haar_tail(0.5, 10).log10_magnitude,
               WithinRel(-1023.0 * std::log10(2.0), 1e-12));
    CHECK_THROWS_AS(haar_tail(1.0, 2), ConfigError);
    CHECK_THROWS_AS(haar_tail(-0.1, 2), ConfigError);
    // The tail integrates the density: Pr[F > c] for n = 2, c = 0.3.
    const int steps = 20000;
    const double c = 0.3;
    double mass = 0.0;
    const double h = (1.0 - c) / steps;
    for (int i = 0; i <= steps; ++i) {
        const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        mass += w * haar_fidelity_pdf(c + i * h, 2);
    }
    mass *= h / 3.0;
    CHECK_THAT(haar_tail(c, 2).to_double(), WithinAbs(mass, 1e-8));
}

TEST_CASE("collision bound against the oracle across magnitudes", "[analytics]") {
    SeededStream rng(FileBits::from_string("0100"), "an-coll");
    for (int i = 0; i < 100; ++i) {
        const double log10_k = 0.05 + rng.uniform01() * 5000.0;
        const int n = 1 + int(rng.uniform_below(30));
        check_close_log(
            haar_collision_bound(LogValue::from_log10(log10_k), n).log10_magnitude,
            oracle_haar_collision(log10_k, n));
    }
    // K = 1 has no pairs.
    CHECK(haar_collision_bound(LogValue::from_value(1.0), 4).zero);
    CHECK_THROWS_AS(haar_collision_bound(LogValue::from_value(0.5), 4), ConfigError);
    CHECK_THROWS_AS(haar_collision_bound(LogValue::zero_value(), 4), ConfigError);
}

TEST_CASE("headline capacity point", "[analytics]") {
    // K = 1.4^(2^20) codewords on n = 20 qubits.
    const LogValue k = log_power(1.4, std::exp2(20));
    const LogValue bound = haar_collision_bound(k, 20);
    REQUIRE_FALSE(bound.zero);
    CHECK_THAT(bound.log10_magnitude, WithinAbs(-9200.126455, 1e-4));
    CHECK(bound.to_scientific() == "7.474e-9201");
    check_close_log(bound.log10_magnitude,
                    oracle_haar_collision(k.log10_magnitude, 20));
}

TEST_CASE("collision bound factors into pairs times tail", "[analytics]") {
    // K(K-1)/2^d  ==  [K(K-1)/2] * [(1/2)^(d-1)], exactly, in log domain.
    for (double log10_k : {0.31, 2.0, 50.0, 9000.0}) {
        for (int n : {1, 4, 10, 20}) {
            const LogValue k = LogValue::from_log10(log10_k);
            const LogValue pairs = LogValue::from_log10(
                k.log10_magnitude + detail::log10_k_minus_one(k).log10_magnitude -
                std::log10(2.0));
            const LogValue expect = log_mul(pairs, haar_tail(0.5, n));
            check_close_log(haar_collision_bound(k, n).log10_magnitude,
                            expect.log10_magnitude);
        }
    }
}

TEST_CASE("design schedule", "[analytics]") {
    const DesignParams p1 = DesignParams::schedule(4, 1);
    CHECK(p1.t == 1.0);
    CHECK_THAT(p1.epsilon.log10_magnitude, WithinRel(-8.0 * std::log10(2.0), 1e-14));
    CHECK_NOTHROW(p1.validate());

    const DesignParams p2 = DesignParams::schedule(4, 2);
    CHECK(p2.t == 4.0);
    CHECK_THAT(p2.epsilon.log10_magnitude, WithinRel(-32.0 * std::log10(2.0), 1e-14));

    CHECK_THROWS_AS(DesignParams::schedule(0, 1), ConfigError);
    CHECK_THROWS_AS(DesignParams::schedule(4, 0), ConfigError);
    DesignParams bad = p1;
    bad.t = 0.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("design moment bound", "[analytics]") {
    const DesignParams p = DesignParams::schedule(4, 2);
    const LogValue m = tdesign_moment_bound(p.t, p.n, p.epsilon);
    CHECK_THAT(m.log10_magnitude, WithinAbs(-1.202426824636, 1e-9));

    SeededStream rng(FileBits::from_string("0010"), "an-moment");
    for (int i = 0; i < 100; ++i) {
        const double t = 1.0 + rng.uniform01() * 255.0;
        const int n = 1 + int(rng.uniform_below(30));
        const double log10_eps = -0.1 - rng.uniform01() * 10000.0;
        check_close_log(
            tdesign_moment_bound(t, n, LogValue::from_log10(log10_eps))
                .log10_magnitude,
            oracle_moment_bound(t, n, log10_eps));
    }
    // Exact-design limit drops the epsilon term.
    const LogValue exact = tdesign_moment_bound(2.0, 3, LogValue::zero_value());
    CHECK_THAT(exact.to_double(), WithinRel(4.0 * (4.0 / 64.0), 1e-12));
    CHECK_THROWS_AS(tdesign_moment_bound(0.5, 3, p.epsilon), ConfigError);
}

TEST_CASE("design collision bound", "[analytics]") {
    SeededStream rng(FileBits::from_string("0001"), "an-pair");
    for (int i = 0; i < 100; ++i) {
        const double log10_k = 0.05 + rng.uniform01() * 3000.0;
        const int n = 2 + int(rng.uniform_below(29));
        const double t = 1.0 + rng.uniform01() * 100.0;
        const double log10_eps = -0.1 - rng.uniform01() * 8000.0;
        check_close_log(
            tdesign_collision_bound(LogValue::from_log10(log10_k), n, t,
                                    LogValue::from_log10(log10_eps))
                .log10_magnitude,
            oracle_pair_bound(log10_k, n, t, log10_eps));
    }
    CHECK(tdesign_collision_bound(LogValue::from_value(1.0), 4, 2.0,
                                  LogValue::from_log10(-5.0))
              .zero);
}

TEST_CASE("scheduled collision bound decreases on the verified ranges",
          "[analytics]") {
    // K follows the schedule's capacity, 1.4^(n^ell).
    // ell = 1: decreasing in n from n = 10 on (non-monotone below that).
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 10; n <= 16; ++n) {
        const DesignParams p = DesignParams::schedule(n, 1);
        const LogValue k = log_power(1.4, std::pow(double(n), 1));
        const double cur =
            tdesign_collision_bound(k, n, p.t, p.epsilon).log10_magnitude;
        CHECK(cur < prev);
        prev = cur;
    }
    // ell = 2: the t^t term dominates until n = 169; decreasing from 170.
    prev = std::numeric_limits<double>::infinity();
    for (int n = 170; n <= 200; ++n) {
        const DesignParams p = DesignParams::schedule(n, 2);
        const LogValue k = log_power(1.4, std::pow(double(n), 2));
        const double cur =
            tdesign_collision_bound(k, n, p.t, p.epsilon).log10_magnitude;
        CHECK(cur < prev);
        prev = cur;
    }
    // Spot values for the ell = 1 series.
    {
        const DesignParams p = DesignParams::schedule(4, 1);
        const LogValue k = log_power(1.4, 4.0);
        CHECK_THAT(tdesign_collision_bound(k, 4, p.t, p.epsilon).log10_magnitude,
                   WithinAbs(0.1350, 5e-4));
    }
    {
        const DesignParams p = DesignParams::schedule(8, 2);
        const LogValue k = log_power(1.4, 64.0);
        CHECK_THAT(tdesign_collision_bound(k, 8, p.t, p.epsilon).log10_magnitude,
                   WithinAbs(8.7704, 5e-4));
    }
}

TEST_CASE("heuristic depth", "[analytics]") {
    const DesignParams p = DesignParams::schedule(2, 1);
    // t = 1, eps = 2^-4: 1^4.01 * (2 * 1 + 4) = 6.
    CHECK_THAT(heuristic_depth(p.t, p.n, p.epsilon), WithinRel(6.0, 1e-9));
    const DesignParams q = DesignParams::schedule(4, 2);
    // t = 4, eps = 2^-32: 4^4.01 * (16 + 32).
    CHECK_THAT(heuristic_depth(q.t, q.n, q.epsilon),
               WithinRel(std::pow(4.0, 4.01) * 48.0, 1e-9));
    CHECK_THROWS_AS(heuristic_depth(1.0, 2, LogValue::zero_value()), ConfigError);
    CHECK_THROWS_AS(heuristic_depth(1.0, 2, LogValue::from_log10(0.5)), ConfigError);
}

TEST_CASE("size table", "[analytics]") {
    const SizeRecord r15 = size_table(15);
    CHECK(r15.naive_bits == 15);
    CHECK(r15.classical_bits == 7);
    CHECK(r15.ie_qubits == 6);
    CHECK(r15.ee_qubits == 5);

    const SizeRecord r1 = size_table(1);
    CHECK(r1.naive_bits == 1);
    CHECK(r1.classical_bits == 2);
    CHECK(r1.ie_qubits == 2);
    CHECK(r1.ee_qubits == 2);

    CHECK(size_table(100).ee_qubits == 8);
    CHECK(size_table(100).ie_qubits == 15);
    CHECK_THROWS_AS(size_table(0), ConfigError);

    // Defining inequality for the random-encoding size: 2^n log2(1.4) >= N
    // at n, but not at n - 1.
    for (std::int64_t nb : {1, 2, 7, 64, 999, 4096}) {
        const int n = size_table(nb).ee_qubits;
        CHECK(std::exp2(n) * std::log2(1.4) >= double(nb));
        if (n > 1) CHECK(std::exp2(n - 1) * std::log2(1.4) < double(nb));
    }
}
