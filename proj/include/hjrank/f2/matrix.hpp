/*
   Copyright 2026 The hjrank Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HJRANK_F2_MATRIX_HPP
#define HJRANK_F2_MATRIX_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hjrank::f2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed vector over F_2.
class VecF2 {
public:
    VecF2() = default;
    explicit VecF2(std::size_t n) : n_(n), w_(words_for(n), 0) {}

    static VecF2 from_bits(std::initializer_list<int> bits) {
        VecF2 v(bits.size());
        std::size_t i = 0;
        for (int b : bits) v.set(i++, b != 0);
        return v;
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    [[nodiscard]] bool get(std::size_t i) const { return ((w_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0; }

    void set(std::size_t i, bool b) {
        const Word mask = Word{1} << (i % kWordBits);
        if (b) {
            w_[i / kWordBits] |= mask;
        } else {
            w_[i / kWordBits] &= ~mask;
        }
    }

    void flip(std::size_t i) { w_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(w_.begin(), w_.end(), [](Word w) { return w == 0; });
    }

    [[nodiscard]] std::size_t weight() const {
        std::size_t c = 0;
        for (Word w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    VecF2& operator^=(const VecF2& o) {
        if (o.n_ != n_) throw std::invalid_argument("VecF2: length mismatch");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend VecF2 operator^(VecF2 a, const VecF2& b) { return a ^= b; }
    friend bool operator==(const VecF2& a, const VecF2& b) = default;

    [[nodiscard]] std::span<const Word> words() const noexcept { return w_; }
    [[nodiscard]] std::span<Word> words() noexcept { return w_; }

    [[nodiscard]] std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i) s[i] = get(i) ? '1' : '0';
        return s;
    }

private:
    std::size_t n_ = 0;
    std::vector<Word> w_;
};

/// Dense row-major packed matrix over F_2.
class MatF2 {
public:
    MatF2() = default;
    MatF2(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), stride_(words_for(cols)), w_(rows * stride_, 0) {}

    static MatF2 identity(std::size_t n) {
        MatF2 m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static MatF2 from_columns(std::span<const VecF2> cols) {
        const std::size_t rows = cols.empty() ? 0 : cols.front().size();
        MatF2 m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("MatF2::from_columns: length mismatch");
            for (std::size_t i = 0; i < rows; ++i) {
                if (cols[j].get(i)) m.set(i, j, true);
            }
        }
        return m;
    }

    static MatF2 from_rows(std::span<const VecF2> rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        MatF2 m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("MatF2::from_rows: length mismatch");
            std::copy(rows[i].words().begin(), rows[i].words().end(), m.row(i).begin());
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] bool get(std::size_t i, std::size_t j) const {
        return ((w_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U) != 0;
    }

    void set(std::size_t i, std::size_t j, bool b) {
        Word& w = w_[i * stride_ + j / kWordBits];
        const Word mask = Word{1} << (j % kWordBits);
        w = b ? (w | mask) : (w & ~mask);
    }

    [[nodiscard]] std::span<Word> row(std::size_t i) { return {w_.data() + i * stride_, stride_}; }
    [[nodiscard]] std::span<const Word> row(std::size_t i) const { return {w_.data() + i * stride_, stride_}; }

    [[nodiscard]] VecF2 column(std::size_t j) const {
        VecF2 v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.set(i, get(i, j));
        return v;
    }

    [[nodiscard]] MatF2 transpose() const {
        MatF2 t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (get(i, j)) t.set(j, i, true);
            }
        }
        return t;
    }

    friend bool operator==(const MatF2& a, const MatF2& b) = default;

    /**
     * Reduced row echelon form in place; returns the pivot column of each
     * nonzero row in order.
     */
    std::vector<std::size_t> reduce_rows() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            const std::size_t wi = c / kWordBits;
            const Word mask = Word{1} << (c % kWordBits);
            std::size_t piv = r;
            while (piv < rows_ && (w_[piv * stride_ + wi] & mask) == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != r) {
                std::swap_ranges(w_.begin() + static_cast<std::ptrdiff_t>(piv * stride_),
                                 w_.begin() + static_cast<std::ptrdiff_t>((piv + 1) * stride_),
                                 w_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
            }
            const Word* src = w_.data() + r * stride_;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                Word* dst = w_.data() + i * stride_;
                if ((dst[wi] & mask) == 0) continue;
                for (std::size_t k = wi; k < stride_; ++k) dst[k] ^= src[k];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> w_;
};

/// Rank by forward elimination on a private copy.
inline std::size_t rank(const MatF2& m) {
    MatF2 a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const std::size_t wi = c / kWordBits;
        const Word mask = Word{1} << (c % kWordBits);
        std::size_t piv = r;
        while (piv < rows && (a.row(piv)[wi] & mask) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            auto pr = a.row(piv), rr = a.row(r);
            std::swap_ranges(pr.begin(), pr.end(), rr.begin());
        }
        const auto src = a.row(r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            auto dst = a.row(i);
            if ((dst[wi] & mask) == 0) continue;
            for (std::size_t k = wi; k < dst.size(); ++k) dst[k] ^= src[k];
        }
        ++r;
    }
    return r;
}

/// Basis of the right null space {x : M x = 0}; its size is cols - rank.
inline std::vector<VecF2> kernel_basis(const MatF2& m) {
    MatF2 a = m;
    const auto pivots = a.reduce_rows();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<VecF2> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        VecF2 v(m.cols());
        v.set(free, true);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (a.get(r, free)) v.set(pivots[r], true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Dimension of the span of the given vectors (all of equal length).
inline std::size_t span_dimension(std::span<const VecF2> vectors) {
    if (vectors.empty()) return 0;
    const std::size_t n = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != n) throw std::invalid_argument("span_dimension: vectors of different lengths");
    }
    return rank(MatF2::from_rows(vectors));
}

}  // namespace hjrank::f2

#endif  // HJRANK_F2_MATRIX_HPP
