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

// Independent helpers shared by the unit tests.

#ifndef HJRANK_TESTS_SUPPORT_HPP
#define HJRANK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hjrank/hjrank.hpp"

namespace hjrank::testing {

inline RationalPoly ints(const std::vector<long>& c) {
    std::vector<BigRational> r(c.begin(), c.end());
    return RationalPoly(std::move(r));
}

/// Determinant by fraction-exact Gaussian elimination.
inline BigRational determinant(std::vector<std::vector<BigRational>> a) {
    const std::size_t n = a.size();
    BigRational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const BigRational k = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= k * a[c][j];
        }
    }
    return det;
}

/// Res(a, b) as the Sylvester determinant.
inline BigRational sylvester_resultant(const RationalPoly& a, const RationalPoly& b) {
    const std::size_t m = static_cast<std::size_t>(a.degree()), n = static_cast<std::size_t>(b.degree());
    std::vector<std::vector<BigRational>> s(m + n, std::vector<BigRational>(m + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a.coeff(m - k);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b.coeff(n - k);
    }
    return determinant(s);
}

/// Ascending conjugates of (-1)^neg (zeta_q + zeta_q^-1) in double precision.
inline std::vector<double> cyclotomic_conjugates(std::uint64_t q, bool negate) {
    std::vector<double> r;
    for (std::uint64_t k = 1; k <= (q - 1) / 2; ++k) {
        const double v = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q));
        r.push_back(negate ? -v : v);
    }
    std::sort(r.begin(), r.end());
    return r;
}

/// Value of the polynomial a at x in double precision.
inline double eval_double(const RationalPoly& a, double x) {
    double acc = 0;
    for (int i = a.degree(); i >= 0; --i) acc = acc * x + a.coeff(static_cast<std::size_t>(i)).get_d();
    return acc;
}

inline RationalPoly random_poly(std::mt19937_64& rng, int deg, long lo, long hi, bool monic) {
    std::uniform_int_distribution<long> d(lo, hi);
    std::vector<long> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = d(rng);
    if (monic) c.back() = 1;
    while (c.back() == 0) c.back() = d(rng);
    return ints(c);
}

}  // namespace hjrank::testing

#endif  // HJRANK_TESTS_SUPPORT_HPP
