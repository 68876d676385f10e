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

#ifndef HJRANK_F2_POLY_HPP
#define HJRANK_F2_POLY_HPP

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "hjrank/f2/matrix.hpp"

namespace hjrank::f2 {

/// Bit-packed polynomial over F_2; bit i is the coefficient of x^i.
class PolyF2 {
public:
    PolyF2() = default;

    explicit PolyF2(const VecF2& coeffs) : w_(coeffs.words().begin(), coeffs.words().end()) { normalize(); }

    /// x^n + 1.
    static PolyF2 x_pow_plus_one(std::size_t n) {
        PolyF2 p;
        p.w_.assign(words_for(n + 1), 0);
        p.w_[0] = 1;
        p.w_[n / kWordBits] ^= Word{1} << (n % kWordBits);
        p.normalize();
        return p;
    }

    [[nodiscard]] long degree() const noexcept { return deg_; }
    [[nodiscard]] bool is_zero() const noexcept { return deg_ < 0; }

    [[nodiscard]] bool coeff(std::size_t i) const {
        return i / kWordBits < w_.size() && ((w_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
    }

    /// this <- this mod b (b nonzero).
    void reduce_mod(const PolyF2& b) {
        const long db = b.deg_;
        const std::size_t bw = words_for(static_cast<std::size_t>(db) + 1);
        while (deg_ >= db) {
            const auto shift = static_cast<std::size_t>(deg_ - db);
            const std::size_t ws = shift / kWordBits;
            const unsigned bs = shift % kWordBits;
            if (bs == 0) {
                for (std::size_t k = 0; k < bw; ++k) w_[k + ws] ^= b.w_[k];
            } else {
                for (std::size_t k = 0; k < bw; ++k) {
                    const Word v = b.w_[k];
                    w_[k + ws] ^= v << bs;
                    if (k + ws + 1 < w_.size()) w_[k + ws + 1] ^= v >> (kWordBits - bs);
                }
            }
            normalize();
        }
    }

    friend bool operator==(const PolyF2& a, const PolyF2& b) {
        if (a.deg_ != b.deg_) return false;
        for (long i = 0; i <= a.deg_; ++i) {
            if (a.coeff(static_cast<std::size_t>(i)) != b.coeff(static_cast<std::size_t>(i))) return false;
        }
        return true;
    }

private:
    void normalize() {
        std::size_t top = w_.size();
        while (top > 0 && w_[top - 1] == 0) --top;
        w_.resize(top);
        deg_ = top == 0 ? -1
                        : static_cast<long>((top - 1) * kWordBits + (kWordBits - 1) -
                                            static_cast<std::size_t>(std::countl_zero(w_[top - 1])));
    }

    std::vector<Word> w_;
    long deg_ = -1;
};

inline PolyF2 gcd(PolyF2 a, PolyF2 b) {
    while (!b.is_zero()) {
        a.reduce_mod(b);
        std::swap(a, b);
    }
    return a;
}

/**
 * Rank of the n x n circulant whose first row is c (equivalently the Hankel
 * matrix with entries c[(i + j) mod n]): n - deg gcd(c(x), x^n + 1).
 */
inline std::size_t circulant_rank(const VecF2& c) {
    const std::size_t n = c.size();
    if (n == 0) return 0;
    const PolyF2 g = gcd(PolyF2::x_pow_plus_one(n), PolyF2(c));
    return n - static_cast<std::size_t>(g.degree());
}

}  // namespace hjrank::f2

#endif  // HJRANK_F2_POLY_HPP
