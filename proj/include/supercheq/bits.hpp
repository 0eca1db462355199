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

#ifndef SUPERCHEQ_BITS_HPP
#define SUPERCHEQ_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "supercheq/errors.hpp"

namespace supercheq {

/// A classical file of N bits, byte-packed most-significant-bit first.
/// The exact bit length is recorded; N need not be a multiple of 8.
class FileBits {
public:
    FileBits() = default;

    static FileBits zeros(std::size_t n_bits) {
        require(n_bits >= 1, "FileBits: length must be at least 1 bit");
        FileBits f;
        f.n_bits_ = n_bits;
        f.bytes_.assign((n_bits + 7) / 8, 0);
        return f;
    }

    /// Parses a string of '0'/'1' characters, first character = bit 0.
    static FileBits from_string(std::string_view bits) {
        FileBits f = zeros(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                f.set_bit(i, true);
            } else if (bits[i] != '0') {
                throw ConfigError("FileBits: expected only '0'/'1' characters");
            }
        }
        return f;
    }

    /// Encodes an integer as a fixed-width bit string, most significant
    /// bit first (bit 0 of the file is the top bit of the value).
    static FileBits from_integer(std::uint64_t value, std::size_t width) {
        require(width >= 1 && width <= 64, "FileBits: width must be in [1, 64]");
        require(width == 64 || value < (std::uint64_t{1} << width),
                "FileBits: value does not fit in the requested width");
        FileBits f = zeros(width);
        for (std::size_t i = 0; i < width; ++i) {
            f.set_bit(i, (value >> (width - 1 - i)) & 1);
        }
        return f;
    }

    /// Re-wraps packed bytes produced by bytes(); pad bits must be zero.
    static FileBits from_bytes(std::vector<std::uint8_t> bytes, std::size_t n_bits) {
        require(bytes.size() == (n_bits + 7) / 8,
                "FileBits: byte count does not match bit length");
        FileBits f = zeros(n_bits);
        f.bytes_ = std::move(bytes);
        for (std::size_t i = n_bits; i < 8 * f.bytes_.size(); ++i) {
            require(((f.bytes_[i / 8] >> (7 - i % 8)) & 1) == 0,
                    "FileBits: nonzero padding bits");
        }
        return f;
    }

    /// Minimal common width for encoding the integers 0..count-1.
    static std::size_t min_width(std::uint64_t count) {
        require(count >= 1, "FileBits: count must be positive");
        std::size_t w = 1;
        while (w < 64 && (std::uint64_t{1} << w) < count) ++w;
        return w;
    }

    std::size_t size() const { return n_bits_; }

    bool bit(std::size_t i) const {
        require(i < n_bits_, "FileBits: bit index out of range");
        return (bytes_[i / 8] >> (7 - i % 8)) & 1;
    }

    void set_bit(std::size_t i, bool value) {
        require(i < n_bits_, "FileBits: bit index out of range");
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - i % 8));
        if (value) {
            bytes_[i / 8] |= mask;
        } else {
            bytes_[i / 8] &= static_cast<std::uint8_t>(~mask);
        }
    }

    void flip_bit(std::size_t i) { set_bit(i, !bit(i)); }

    /// MSB-first packed bytes; trailing pad bits of the last byte are zero.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    std::string to_string() const {
        std::string s(n_bits_, '0');
        for (std::size_t i = 0; i < n_bits_; ++i) {
            if (bit(i)) s[i] = '1';
        }
        return s;
    }

    bool operator==(const FileBits& other) const = default;

private:
    std::size_t n_bits_ = 0;
    std::vector<std::uint8_t> bytes_;
};

}  // namespace supercheq

#endif  // SUPERCHEQ_BITS_HPP
