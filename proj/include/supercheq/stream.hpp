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

#ifndef SUPERCHEQ_STREAM_HPP
#define SUPERCHEQ_STREAM_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>

#include "supercheq/bits.hpp"
#include "supercheq/errors.hpp"

namespace supercheq {

namespace detail {

inline std::array<std::uint8_t, 32> sha256(const std::uint8_t* data, std::size_t len) {
    std::array<std::uint8_t, 32> out{};
    unsigned int out_len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    check_invariant(ctx != nullptr, "sha256: EVP context allocation failed");
    const bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
                    EVP_DigestUpdate(ctx, data, len) == 1 &&
                    EVP_DigestFinal_ex(ctx, out.data(), &out_len) == 1;
    EVP_MD_CTX_free(ctx);
    check_invariant(ok && out_len == 32, "sha256: digest computation failed");
    return out;
}

inline void append_u64_be(std::vector<std::uint8_t>& buf, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        buf.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
    }
}

}  // namespace detail

/// Deterministic byte stream derived from (file, nonce):
///   key      = SHA-256( big-endian u64 bit-length || packed file bytes || nonce )
///   block(i) = SHA-256( key || big-endian u64 i )
/// The length prefix keeps distinct files with shared byte images apart
/// (e.g. "1" vs "10"); the nonce separates independent trials of one file.
class SeededStream {
public:
    SeededStream(const FileBits& file, std::string_view nonce) {
        std::vector<std::uint8_t> input;
        input.reserve(8 + file.bytes().size() + nonce.size());
        detail::append_u64_be(input, file.size());
        input.insert(input.end(), file.bytes().begin(), file.bytes().end());
        input.insert(input.end(), nonce.begin(), nonce.end());
        key_ = detail::sha256(input.data(), input.size());
    }

    const std::array<std::uint8_t, 32>& key() const { return key_; }

    std::uint8_t next_byte() {
        if (offset_ == 32) refill();
        return block_[offset_++];
    }

    /// Big-endian u64 from the next 8 stream bytes.
    std::uint64_t next_u64() {
        std::uint64_t v = 0;
        for (int k = 0; k < 8; ++k) v = (v << 8) | next_byte();
        return v;
    }

    /// Top 53 bits of v as an exactly-representable double in [0, 1).
    /// A direct 64-bit conversion rounds, which can land exactly on 1.0 for
    /// v near 2^64 and break the half-open range contracts below.
    static double unit_from_u64(std::uint64_t v) {
        return static_cast<double>(v >> 11) * 0x1p-53;
    }

    static double angle_from_u64(std::uint64_t v) {
        return 2.0 * std::numbers::pi * unit_from_u64(v);
    }

    /// Uniform angle in [0, 2*pi), consuming 8 bytes.
    double uniform_angle() { return angle_from_u64(next_u64()); }

    /// Uniform double in [0, 1), consuming 8 bytes.
    double uniform01() { return unit_from_u64(next_u64()); }

    /// Uniform integer in [0, k); rejection-sampled so the result is exact.
    std::uint64_t uniform_below(std::uint64_t k) {
        require(k >= 1, "uniform_below: k must be positive");
        if (k == 1) return 0;
        const std::uint64_t threshold = (0 - k) % k;  // 2^64 mod k
        for (;;) {
            const std::uint64_t u = next_u64();
            if (u >= threshold) return u % k;
        }
    }

    /// Box-Muller pair of standard normal deviates, consuming 16 bytes.
    /// The radial uniform is shifted into (0, 1] so log never sees zero.
    std::pair<double, double> gaussian_pair() {
        const double ua = (static_cast<double>(next_u64()) + 1.0) * 0x1p-64;
        const double ub = static_cast<double>(next_u64()) * 0x1p-64;
        const double r = std::sqrt(-2.0 * std::log(ua));
        const double t = 2.0 * std::numbers::pi * ub;
        return {r * std::cos(t), r * std::sin(t)};
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        auto [z0, z1] = gaussian_pair();
        spare_ = z1;
        have_spare_ = true;
        return z0;
    }

private:
    void refill() {
        std::vector<std::uint8_t> input(key_.begin(), key_.end());
        detail::append_u64_be(input, counter_++);
        block_ = detail::sha256(input.data(), input.size());
        offset_ = 0;
    }

    std::array<std::uint8_t, 32> key_{};
    std::array<std::uint8_t, 32> block_{};
    std::size_t offset_ = 32;  // forces refill on first use
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace supercheq

#endif  // SUPERCHEQ_STREAM_HPP
