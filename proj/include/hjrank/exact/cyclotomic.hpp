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

#ifndef HJRANK_EXACT_CYCLOTOMIC_HPP
#define HJRANK_EXACT_CYCLOTOMIC_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "hjrank/exact/integer.hpp"
#include "hjrank/exact/rational_poly.hpp"

namespace hjrank {

/**
 * Minimal polynomial of 2cos(2*pi/q) = zeta_q + zeta_q^-1, or of its
 * negative when `negate` is set. Degree (q-1)/2, monic, integral.
 *
 * Built from V_0 = 2, V_1 = y, V_{n+1} = y V_n - V_{n-1} (so V_n(z + 1/z) =
 * z^n + z^-n) and P_q = 1 + V_1 + ... + V_p, which is Phi_q(z) / z^p.
 */
inline RationalPoly min_poly_2cos(std::uint64_t q, bool negate) {
    if (q < 5 || !is_prime(q)) throw std::domain_error("min_poly_2cos: q must be a prime >= 5");
    const std::uint64_t p = (q - 1) / 2;
    const RationalPoly y = RationalPoly::x();
    RationalPoly prev = RationalPoly::constant(2);
    RationalPoly cur = y;
    RationalPoly sum = RationalPoly::constant(1) + cur;
    for (std::uint64_t n = 1; n < p; ++n) {
        RationalPoly next = y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
        sum += cur;
    }
    if (!negate) return sum;
    // Minimal polynomial of -alpha is (-1)^p P(-x).
    RationalPoly r = sum.reflected();
    return (p % 2 == 1) ? -r : r;
}

/// Sign convention making the constant term 1: theta = (-1)^((p-1)/2) (zeta + zeta^-1).
inline bool unit_constant_negate(std::uint64_t q) {
    const std::uint64_t p = (q - 1) / 2;
    return ((p - 1) / 2) % 2 == 1;
}

}  // namespace hjrank

#endif  // HJRANK_EXACT_CYCLOTOMIC_HPP
