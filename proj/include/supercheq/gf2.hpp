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

#ifndef SUPERCHEQ_GF2_HPP
#define SUPERCHEQ_GF2_HPP

#include <cstdint>
#include <vector>

#include "supercheq/errors.hpp"

namespace supercheq {

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        require(rows >= 0 && cols >= 0, "BitMatrix: negative dimensions");
        words_per_row_ = (cols + 63) / 64;
        w_.assign(static_cast<std::size_t>(rows) *
                      static_cast<std::size_t>(words_per_row_),
                  0);
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool at(int i, int j) const {
        return (word(i, j) >> (j & 63)) & 1;
    }

    void set(int i, int j, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (j & 63);
        if (v) {
            word(i, j) |= bit;
        } else {
            word(i, j) &= ~bit;
        }
    }

    void flip(int i, int j) { word(i, j) ^= std::uint64_t{1} << (j & 63); }

    /// Elementwise XOR; dimensions must match.
    BitMatrix operator^(const BitMatrix& other) const {
        require(rows_ == other.rows_ && cols_ == other.cols_,
                "BitMatrix: XOR dimension mismatch");
        BitMatrix out = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] ^= other.w_[i];
        return out;
    }

    bool operator==(const BitMatrix& other) const = default;

private:
    std::uint64_t& word(int i, int j) {
        return w_[static_cast<std::size_t>(i) *
                      static_cast<std::size_t>(words_per_row_) +
                  static_cast<std::size_t>(j >> 6)];
    }
    const std::uint64_t& word(int i, int j) const {
        return w_[static_cast<std::size_t>(i) *
                      static_cast<std::size_t>(words_per_row_) +
                  static_cast<std::size_t>(j >> 6)];
    }

    friend int gf2_rank(BitMatrix m);

    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Basis of the right null space over GF(2); one basis vector per row of
/// the returned matrix (possibly zero rows).
inline BitMatrix gf2_nullspace(BitMatrix m) {
    const int rows = m.rows();
    const int cols = m.cols();
    // Reduced row echelon form, tracking the pivot column of each row.
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m.at(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c < cols; ++c) {
                const bool a = m.at(pivot, c), b = m.at(rank, c);
                m.set(pivot, c, b);
                m.set(rank, c, a);
            }
        }
        for (int r = 0; r < rows; ++r) {
            if (r == rank || !m.at(r, col)) continue;
            for (int c = 0; c < cols; ++c) {
                if (m.at(rank, c)) m.flip(r, c);
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<int> is_pivot(static_cast<std::size_t>(cols), -1);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = r;
    BitMatrix basis(cols - rank, cols);
    int out_row = 0;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)] >= 0) continue;
        basis.set(out_row, free_col, true);
        for (int c = 0; c < cols; ++c) {
            const int r = is_pivot[static_cast<std::size_t>(c)];
            if (r >= 0 && m.at(r, free_col)) basis.set(out_row, c, true);
        }
        ++out_row;
    }
    return basis;
}

/// Rank over GF(2) by Gaussian elimination on packed rows.
inline int gf2_rank(BitMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols_ && rank < m.rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows_; ++r) {
            if (m.at(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        const std::size_t wpr = static_cast<std::size_t>(m.words_per_row_);
        if (pivot != rank) {
            for (std::size_t k = 0; k < wpr; ++k) {
                std::swap(m.w_[static_cast<std::size_t>(pivot) * wpr + k],
                          m.w_[static_cast<std::size_t>(rank) * wpr + k]);
            }
        }
        for (int r = rank + 1; r < m.rows_; ++r) {
            if (!m.at(r, col)) continue;
            for (std::size_t k = 0; k < wpr; ++k) {
                m.w_[static_cast<std::size_t>(r) * wpr + k] ^=
                    m.w_[static_cast<std::size_t>(rank) * wpr + k];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_GF2_HPP
