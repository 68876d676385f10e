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

#ifndef HJRANK_EXACT_ROOTS_HPP
#define HJRANK_EXACT_ROOTS_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hjrank/exact/factor_q.hpp"
#include "hjrank/exact/rational_poly.hpp"

namespace hjrank {

/// Closed interval [lo, hi] holding exactly one real root; lo == hi for a rational root.
struct RootInterval {
    BigRational lo;
    BigRational hi;

    [[nodiscard]] BigRational width() const { return hi - lo; }
    [[nodiscard]] BigRational midpoint() const { return (lo + hi) / 2; }
};

/// Sign of b^n f(a/b) for integer f, i.e. the sign of f at a rational point.
inline int sign_at(const zpoly::ZPoly& f, const BigRational& x) {
    if (f.empty()) return 0;
    const BigInt& a = x.get_num();
    const BigInt& b = x.get_den();
    BigInt acc = f.back();
    BigInt bpow = 1;
    for (std::size_t i = f.size() - 1; i-- > 0;) {
        bpow *= b;
        acc = acc * a + f[i] * bpow;
    }
    return sgn(acc);
}

/**
 * Sturm chain of a squarefree polynomial, each member scaled by a positive
 * constant to a primitive integer polynomial (signs are preserved).
 */
class SturmChain {
public:
    explicit SturmChain(const RationalPoly& f) {
        RationalPoly a = f, b = f.derivative();
        push(a);
        while (!b.is_zero()) {
            push(b);
            RationalPoly r = -(a % b);
            a = std::move(b);
            b = std::move(r);
        }
    }

    [[nodiscard]] int variations_at(const BigRational& x) const {
        int changes = 0, last = 0;
        for (const auto& p : chain_) {
            const int s = sign_at(p, x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    /// Sign variations at +infinity (positive = true) or -infinity.
    [[nodiscard]] int variations_at_infinity(bool positive) const {
        int changes = 0, last = 0;
        for (const auto& p : chain_) {
            int s = sgn(p.back());
            if (!positive && (p.size() - 1) % 2 == 1) s = -s;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    /// Distinct real roots in (a, b].
    [[nodiscard]] int count(const BigRational& a, const BigRational& b) const {
        return variations_at(a) - variations_at(b);
    }

    [[nodiscard]] int total_real_roots() const { return variations_at_infinity(false) - variations_at_infinity(true); }

    [[nodiscard]] const zpoly::ZPoly& base() const { return chain_.front(); }

private:
    void push(const RationalPoly& p) {
        // primitive_integer_coeffs multiplies by a positive constant.
        chain_.push_back(p.primitive_integer_coeffs());
    }

    std::vector<zpoly::ZPoly> chain_;
};

/// Power of two strictly above every root modulus (Cauchy bound).
inline BigRational root_bound(const RationalPoly& f) {
    BigRational m = 0;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, BigRational(abs(f.coeff(static_cast<std::size_t>(i)) / f.lc())));
    BigRational bound = 1 + m;
    BigRational r = 1;
    while (r <= bound) r *= 2;
    return r;
}

/// Real root isolation of a squarefree polynomial, intervals sorted ascending.
class RootIntervals {
public:
    RootIntervals() = default;

    explicit RootIntervals(const RationalPoly& f) : poly_(f) {
        if (f.degree() < 1) throw std::domain_error("isolate_real_roots: constant polynomial");
        if (!is_squarefree(f)) throw std::domain_error("isolate_real_roots: polynomial is not squarefree");
        const SturmChain chain(f);
        const BigRational r = root_bound(f);
        std::vector<std::pair<BigRational, BigRational>> stack{{-r, r}};
        std::vector<std::pair<BigRational, BigRational>> found;
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            const int n = chain.count(a, b);
            if (n == 0) continue;
            if (n == 1) {
                found.emplace_back(a, b);
                continue;
            }
            const BigRational mid = (a + b) / 2;
            stack.emplace_back(a, mid);
            stack.emplace_back(mid, b);
        }
        std::sort(found.begin(), found.end());
        const auto& base = chain.base();
        for (auto [a, b] : found) {
            for (;;) {
                if (sign_at(base, b) == 0) {
                    a = b;
                    break;
                }
                if (sign_at(base, a) != 0) break;
                const BigRational mid = (a + b) / 2;
                if (chain.count(mid, b) == 1) {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            intervals_.push_back({a, b});
        }
    }

    [[nodiscard]] const RationalPoly& poly() const noexcept { return poly_; }
    [[nodiscard]] std::size_t size() const noexcept { return intervals_.size(); }
    [[nodiscard]] const RootInterval& operator[](std::size_t i) const { return intervals_.at(i); }
    [[nodiscard]] const std::vector<RootInterval>& intervals() const noexcept { return intervals_; }

    /// Bisects interval i in place until its width is at most `width`.
    void refine(std::size_t i, const BigRational& width) { intervals_.at(i) = refined(intervals_.at(i), width); }

    [[nodiscard]] RootInterval refined(RootInterval iv, const BigRational& width) const {
        const auto base = poly_.primitive_integer_coeffs();
        const int s_lo = sign_at(base, iv.lo);
        while (iv.hi - iv.lo > width) {
            const BigRational mid = iv.midpoint();
            const int s = sign_at(base, mid);
            if (s == 0) return {mid, mid};
            if (s == s_lo) {
                iv.lo = mid;
            } else {
                iv.hi = mid;
            }
        }
        return iv;
    }

    /// Halves the width of interval i once (or collapses it onto a rational root).
    void bisect(std::size_t i) {
        RootInterval& iv = intervals_.at(i);
        if (iv.lo == iv.hi) return;
        iv = refined(iv, iv.width() / 2);
    }

private:
    RationalPoly poly_;
    std::vector<RootInterval> intervals_;
};

inline RootIntervals isolate_real_roots(const RationalPoly& f) { return RootIntervals(f); }

inline int count_real_roots(const RationalPoly& f) { return SturmChain(f).total_real_roots(); }

}  // namespace hjrank

#endif  // HJRANK_EXACT_ROOTS_HPP
