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

#ifndef HJRANK_EXACT_PRIME_POLY_HPP
#define HJRANK_EXACT_PRIME_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hjrank/exact/integer.hpp"
#include "hjrank/exact/rational_poly.hpp"

namespace hjrank {

/// Polynomial over F_p with residues in [0, p), ascending degree, no trailing zeros.
class PrimePoly {
public:
    PrimePoly() = default;

    PrimePoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs) : p_(modulus), c_(std::move(coeffs)) {
        if (p_ < 2) throw std::domain_error("PrimePoly: modulus must be >= 2");
        for (auto& v : c_) v %= p_;
        trim();
    }

    static PrimePoly from_signed(std::uint64_t modulus, const std::vector<std::int64_t>& coeffs) {
        std::vector<std::uint64_t> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(reduce_signed(v, modulus));
        return {modulus, std::move(c)};
    }

    /// Reduction of an integral polynomial; throws if a denominator is not invertible mod p.
    static PrimePoly reduce(const RationalPoly& f, std::uint64_t modulus) {
        std::vector<std::uint64_t> c;
        c.reserve(f.coeffs().size());
        for (const auto& v : f.coeffs()) {
            const std::uint64_t num = reduce_big(v.get_num(), modulus);
            const std::uint64_t den = reduce_big(v.get_den(), modulus);
            c.push_back(mulmod(num, invmod(den, modulus), modulus));
        }
        return {modulus, std::move(c)};
    }

    static PrimePoly reduce(const std::vector<BigInt>& f, std::uint64_t modulus) {
        std::vector<std::uint64_t> c;
        c.reserve(f.size());
        for (const auto& v : f) c.push_back(reduce_big(v, modulus));
        return {modulus, std::move(c)};
    }

    static PrimePoly constant(std::uint64_t modulus, std::uint64_t v) { return {modulus, {v}}; }
    static PrimePoly x(std::uint64_t modulus) { return {modulus, {0, 1}}; }

    [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    [[nodiscard]] const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    [[nodiscard]] std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    [[nodiscard]] std::uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }

    [[nodiscard]] PrimePoly monic() const {
        if (is_zero()) return *this;
        return scaled(invmod(lc(), p_));
    }

    [[nodiscard]] PrimePoly scaled(std::uint64_t s) const {
        std::vector<std::uint64_t> r = c_;
        for (auto& v : r) v = mulmod(v, s, p_);
        return {p_, std::move(r)};
    }

    [[nodiscard]] PrimePoly derivative() const {
        if (c_.size() <= 1) return {p_, {}};
        std::vector<std::uint64_t> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod(c_[i], i % p_, p_);
        return {p_, std::move(d)};
    }

    [[nodiscard]] std::uint64_t eval(std::uint64_t x) const {
        std::uint64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
        return acc;
    }

    friend bool operator==(const PrimePoly& a, const PrimePoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const PrimePoly& a, const PrimePoly& b) { return !(a == b); }

    friend PrimePoly operator+(const PrimePoly& a, const PrimePoly& b) {
        check_same(a, b);
        std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t s = a.coeff(i) + b.coeff(i);
            if (s >= a.p_) s -= a.p_;
            r[i] = s;
        }
        return {a.p_, std::move(r)};
    }

    friend PrimePoly operator-(const PrimePoly& a, const PrimePoly& b) {
        check_same(a, b);
        std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const std::uint64_t x = a.coeff(i), y = b.coeff(i);
            r[i] = x >= y ? x - y : x + (a.p_ - y);
        }
        return {a.p_, std::move(r)};
    }

    friend PrimePoly operator-(const PrimePoly& a) { return PrimePoly(a.p_, {}) - a; }

    friend PrimePoly operator*(const PrimePoly& a, const PrimePoly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return {a.p_, {}};
        const std::uint64_t p = a.p_;
        std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
        // Accumulate in 128 bits and reduce periodically; products are < p^2 < 2^126.
        const bool small = p < (1ULL << 31);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (small) {
                    acc[i + j] += static_cast<unsigned __int128>(a.c_[i] * b.c_[j]);
                } else {
                    acc[i + j] = (acc[i + j] + static_cast<unsigned __int128>(a.c_[i]) * b.c_[j]) % p;
                }
            }
        }
        std::vector<std::uint64_t> r(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
        return {p, std::move(r)};
    }

    friend std::pair<PrimePoly, PrimePoly> divmod(const PrimePoly& a, const PrimePoly& b) {
        check_same(a, b);
        if (b.is_zero()) throw std::domain_error("PrimePoly: division by zero polynomial");
        const std::uint64_t p = a.p_;
        if (a.degree() < b.degree()) return {PrimePoly(p, {}), a};
        std::vector<std::uint64_t> rem = a.c_;
        const std::size_t db = b.c_.size() - 1;
        std::vector<std::uint64_t> quot(rem.size() - db, 0);
        const std::uint64_t inv = invmod(b.lc(), p);
        for (std::size_t k = quot.size(); k-- > 0;) {
            const std::uint64_t t = mulmod(rem[k + db], inv, p);
            quot[k] = t;
            if (t == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) {
                const std::uint64_t s = mulmod(t, b.c_[j], p);
                rem[k + j] = rem[k + j] >= s ? rem[k + j] - s : rem[k + j] + (p - s);
            }
        }
        rem.resize(db);
        return {PrimePoly(p, std::move(quot)), PrimePoly(p, std::move(rem))};
    }

    friend PrimePoly operator%(const PrimePoly& a, const PrimePoly& b) { return divmod(a, b).second; }
    friend PrimePoly operator/(const PrimePoly& a, const PrimePoly& b) { return divmod(a, b).first; }

    friend bool operator<(const PrimePoly& a, const PrimePoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c_ < b.c_;
    }

    [[nodiscard]] std::string to_string() const {
        std::vector<BigRational> c(c_.begin(), c_.end());
        return RationalPoly(std::move(c)).to_string();
    }

private:
    static void check_same(const PrimePoly& a, const PrimePoly& b) {
        if (a.p_ != b.p_) throw std::domain_error("PrimePoly: mismatched moduli");
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

/// Monic gcd over F_p.
inline PrimePoly gcd(PrimePoly a, PrimePoly b) {
    while (!b.is_zero()) {
        PrimePoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd over F_p: (g, s, t) with s*a + t*b = g monic.
inline std::tuple<PrimePoly, PrimePoly, PrimePoly> xgcd(const PrimePoly& a, const PrimePoly& b) {
    const std::uint64_t p = a.modulus();
    PrimePoly r0 = a, r1 = b;
    PrimePoly s0 = PrimePoly::constant(p, 1), s1(p, {});
    PrimePoly t0(p, {}), t1 = PrimePoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const std::uint64_t inv = invmod(r0.lc(), p);
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

inline PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m) { return (a * b) % m; }

/// base^exp mod m.
inline PrimePoly powmod(PrimePoly base, const BigInt& exp, const PrimePoly& m) {
    PrimePoly result = PrimePoly::constant(m.modulus(), 1) % m;
    base = base % m;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(exp.get_mpz_t(), i) != 0) result = mulmod(result, base, m);
    }
    return result;
}

inline PrimePoly powmod(const PrimePoly& base, std::uint64_t exp, const PrimePoly& m) {
    return powmod(base, BigInt(static_cast<unsigned long>(exp)), m);
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline PrimePoly invmod(const PrimePoly& a, const PrimePoly& m) {
    auto [g, s, t] = xgcd(a % m, m);
    if (g.degree() != 0) throw std::domain_error("PrimePoly: element not invertible");
    return s % m;
}

struct ModFactor {
    PrimePoly factor;
    unsigned multiplicity = 1;
};

struct ModFactorization {
    std::uint64_t unit = 1;
    std::vector<ModFactor> factors;
};

namespace detail {

/// Squarefree decomposition over F_p (monic input), handling p-th powers.
inline void squarefree_mod_p(const PrimePoly& f, unsigned mult, std::vector<ModFactor>& out) {
    const std::uint64_t p = f.modulus();
    if (f.degree() < 1) return;
    PrimePoly c = gcd(f, f.derivative());
    PrimePoly w = f / c;
    unsigned i = 1;
    while (!w.is_one() && w.degree() > 0) {
        PrimePoly y = gcd(w, c);
        PrimePoly fac = w / y;
        if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) {
        // c is a polynomial in x^p; take its p-th root (Frobenius is the identity on F_p).
        std::vector<std::uint64_t> root;
        for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
        squarefree_mod_p(PrimePoly(p, std::move(root)).monic(), mult * static_cast<unsigned>(p), out);
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<PrimePoly, int>> distinct_degree(PrimePoly f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::pair<PrimePoly, int>> out;
    const PrimePoly x = PrimePoly::x(p);
    PrimePoly h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, p, f);
        PrimePoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting; deterministic via a fixed seed.
inline void equal_degree(const PrimePoly& g, int d, std::mt19937_64& rng, std::vector<PrimePoly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const std::uint64_t p = g.modulus();
    const int n = g.degree();
    BigInt exp = 0;
    if (p != 2) exp = (ipow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        std::vector<std::uint64_t> ac(static_cast<std::size_t>(n));
        for (auto& v : ac) v = dist(rng);
        PrimePoly a(p, std::move(ac));
        if (a.degree() < 1) continue;
        PrimePoly b;
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            PrimePoly t = a % g, acc = t;
            for (int i = 1; i < d; ++i) {
                t = mulmod(t, t, g);
                acc = acc + t;
            }
            b = acc;
        } else {
            b = powmod(a, exp, g) - PrimePoly::constant(p, 1);
        }
        PrimePoly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < n) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/**
 * Complete factorization over F_p into monic irreducibles with multiplicities.
 * Factors are sorted by degree, then by ascending coefficient sequence.
 */
inline ModFactorization factor_mod_p(const PrimePoly& f) {
    const std::uint64_t p = f.modulus();
    if (!is_prime(p)) throw std::domain_error("factor_mod_p: modulus is not prime");
    if (f.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
    ModFactorization result;
    result.unit = f.lc();
    std::vector<ModFactor> sqf;
    detail::squarefree_mod_p(f.monic(), 1, sqf);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [g, d] : detail::distinct_degree(part)) {
            std::vector<PrimePoly> pieces;
            detail::equal_degree(g, d, rng, pieces);
            for (auto& piece : pieces) result.factors.push_back({piece.monic(), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.factor != b.factor) return a.factor < b.factor;
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

/// Number of irreducible factors (with multiplicity) and squarefreeness, without full splitting.
inline bool is_irreducible_mod_p(const PrimePoly& f) {
    if (f.degree() < 1) return false;
    const auto fac = factor_mod_p(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

/// Distinct roots of f in F_p, ascending.
inline std::vector<std::uint64_t> roots_mod_p(const PrimePoly& f) {
    const std::uint64_t p = f.modulus();
    if (f.is_zero()) throw std::domain_error("roots_mod_p: zero polynomial");
    const PrimePoly fm = f.monic();
    const PrimePoly x = PrimePoly::x(p);
    PrimePoly lin = gcd(powmod(x, p, fm) - x, fm);
    std::vector<std::uint64_t> roots;
    if (lin.degree() < 1) return roots;
    std::vector<PrimePoly> pieces;
    std::mt19937_64 rng(0x243f6a8885a308d3ULL ^ p);
    detail::equal_degree(lin, 1, rng, pieces);
    for (const auto& piece : pieces) roots.push_back((p - piece.coeff(0)) % p);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace hjrank

#endif  // HJRANK_EXACT_PRIME_POLY_HPP
