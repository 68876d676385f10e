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

#ifndef HJRANK_EXACT_FACTOR_Q_HPP
#define HJRANK_EXACT_FACTOR_Q_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hjrank/exact/integer.hpp"
#include "hjrank/exact/prime_poly.hpp"
#include "hjrank/exact/rational_poly.hpp"

namespace hjrank {

struct QFactor {
    RationalPoly factor;  // monic, irreducible over Q
    unsigned multiplicity = 1;
};

/// f = content * prod factor^multiplicity, factors ordered by degree then integer coefficients.
struct QFactorization {
    BigRational content = 1;
    std::vector<QFactor> factors;
};

namespace zpoly {

// Integer polynomials as ascending coefficient vectors. Helpers here work
// either exactly or with all coefficients reduced into [0, M).
using ZPoly = std::vector<BigInt>;

inline void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly reduce(ZPoly a, const BigInt& m) {
    for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    trim(a);
    return a;
}

/// Coefficients into (-M/2, M/2].
inline ZPoly symmetric(ZPoly a, const BigInt& m) {
    const BigInt half = m / 2;
    for (auto& v : a) {
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        if (v > half) v -= m;
    }
    trim(a);
    return a;
}

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

inline ZPoly scale(ZPoly a, const BigInt& s) {
    for (auto& v : a) v *= s;
    trim(a);
    return a;
}

/// Division by a polynomial that is monic modulo m; results reduced into [0, m).
inline std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly rem = reduce(a, m);
    const ZPoly bb = reduce(b, m);
    if (bb.empty() || bb.back() != 1) throw std::domain_error("divmod_monic: divisor is not monic");
    if (rem.size() < bb.size()) return {ZPoly{}, rem};
    const std::size_t db = bb.size() - 1;
    ZPoly quot(rem.size() - db);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt t = rem[k + db];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        if (t != 0) {
            for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), bb[j].get_mpz_t());
        }
        quot[k] = std::move(t);
    }
    rem.resize(db);
    return {reduce(quot, m), reduce(rem, m)};
}

inline ZPoly from_prime_poly(const PrimePoly& f) {
    ZPoly r;
    r.reserve(f.coeffs().size());
    for (auto v : f.coeffs()) r.emplace_back(static_cast<unsigned long>(v));
    return r;
}

inline PrimePoly to_prime_poly(const ZPoly& f, std::uint64_t p) { return PrimePoly::reduce(f, p); }

inline BigInt content(const ZPoly& a) {
    BigInt g = 0;
    for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly primitive(ZPoly a) {
    if (a.empty()) return a;
    BigInt g = content(a);
    if (a.back() < 0) g = -g;
    for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return a;
}

/// Exact division over Z; returns false as soon as b is seen not to divide a.
inline bool divides(const ZPoly& b, const ZPoly& a, ZPoly& quotient) {
    if (b.empty()) return false;
    if (a.empty()) {
        quotient.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    ZPoly rem = a;
    const std::size_t db = b.size() - 1;
    ZPoly quot(rem.size() - db);
    for (std::size_t k = quot.size(); k-- > 0;) {
        if (mpz_divisible_p(rem[k + db].get_mpz_t(), b.back().get_mpz_t()) == 0) return false;
        BigInt t;
        mpz_divexact(t.get_mpz_t(), rem[k + db].get_mpz_t(), b.back().get_mpz_t());
        if (t != 0) {
            for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        }
        quot[k] = std::move(t);
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (rem[i] != 0) return false;
    }
    trim(quot);
    quotient = std::move(quot);
    return true;
}

inline ZPoly from_rational(const RationalPoly& f) { return f.primitive_integer_coeffs(); }

inline RationalPoly to_rational(const ZPoly& f) { return RationalPoly::from_integers(f); }

}  // namespace zpoly

namespace detail {

using zpoly::ZPoly;

struct LiftState {
    ZPoly g, h, s, t;
};

/// One quadratic Hensel step: f = g*h mod m becomes f = g*h mod m^2 (h monic, s*g + t*h = 1).
inline LiftState hensel_step(const ZPoly& f, const LiftState& st, const BigInt& m) {
    using namespace zpoly;
    const BigInt m2 = m * m;
    const ZPoly e = reduce(sub(f, mul(st.g, st.h)), m2);
    auto [q, r] = divmod_monic(mul(st.s, e), st.h, m2);
    LiftState out;
    out.g = reduce(add(add(st.g, mul(st.t, e)), mul(q, st.g)), m2);
    out.h = reduce(add(st.h, r), m2);
    const ZPoly one{BigInt(1)};
    const ZPoly b = reduce(sub(add(mul(st.s, out.g), mul(st.t, out.h)), one), m2);
    auto [c, d] = divmod_monic(mul(st.s, b), out.h, m2);
    out.s = reduce(sub(st.s, d), m2);
    out.t = reduce(sub(sub(st.t, mul(st.t, b)), mul(c, out.g)), m2);
    return out;
}

/// Lifts the monic modular factors of `target` (known modulo `modulus`) from p to `modulus`.
inline void lift_tree(const ZPoly& target, const std::vector<PrimePoly>& factors, std::size_t lo, std::size_t hi,
                      std::uint64_t p, const BigInt& modulus, std::vector<ZPoly>& out) {
    using namespace zpoly;
    if (hi - lo == 1) {
        BigInt inv;
        BigInt lc = target.back();
        if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t()) == 0) {
            throw std::logic_error("lift_tree: leading coefficient not invertible");
        }
        out.push_back(reduce(scale(target, inv), modulus));
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    PrimePoly left = PrimePoly::constant(p, 1), right = PrimePoly::constant(p, 1);
    for (std::size_t i = lo; i < mid; ++i) left = left * factors[i];
    for (std::size_t i = mid; i < hi; ++i) right = right * factors[i];
    left = left.scaled(reduce_big(target.back(), p));
    auto [g, s, t] = xgcd(left, right);
    if (g.degree() != 0) throw std::logic_error("lift_tree: modular factors not coprime");
    LiftState st{from_prime_poly(left), from_prime_poly(right), from_prime_poly(s), from_prime_poly(t)};
    BigInt m = static_cast<unsigned long>(p);
    while (m < modulus) {
        st = hensel_step(reduce(target, m * m), st, m);
        m *= m;
    }
    lift_tree(reduce(st.g, modulus), factors, lo, mid, p, modulus, out);
    lift_tree(reduce(st.h, modulus), factors, mid, hi, p, modulus, out);
}

inline constexpr std::size_t kMaxModularFactors = 24;

/// Irreducible factors of a squarefree primitive integer polynomial with positive leading coefficient.
inline std::vector<ZPoly> factor_squarefree_z(ZPoly g) {
    using namespace zpoly;
    std::vector<ZPoly> result;
    if (g.size() <= 2) {
        result.push_back(primitive(g));
        return result;
    }
    if (g[0] == 0) {
        result.push_back(ZPoly{BigInt(0), BigInt(1)});
        g.erase(g.begin());
        if (g.size() <= 2) {
            if (g.size() == 2) result.push_back(primitive(g));
            return result;
        }
    }
    const int n = static_cast<int>(g.size()) - 1;

    // Pick the good prime with the fewest modular factors among the first candidates.
    std::uint64_t best_p = 0;
    std::vector<PrimePoly> best;
    int good_seen = 0;
    for (std::uint64_t p = 3; good_seen < 8 || best.size() > kMaxModularFactors; p = next_prime(p)) {
        if (good_seen > 200) break;
        if (reduce_big(g.back(), p) == 0) continue;
        const PrimePoly gp = to_prime_poly(g, p);
        if (gcd(gp, gp.derivative()).degree() != 0) continue;
        ++good_seen;
        auto fac = factor_mod_p(gp);
        if (best_p == 0 || fac.factors.size() < best.size()) {
            best_p = p;
            best.clear();
            for (auto& f : fac.factors) best.push_back(f.factor);
        }
        if (best.size() == 1) break;
    }
    if (best.size() <= 1) {
        result.push_back(primitive(g));
        return result;
    }

    // Coefficient bound for lc(g)/lc(h) * h over all divisors h of g.
    BigInt norm2 = 0;
    for (const auto& v : g) norm2 += v * v;
    BigInt bound = ceil_sqrt(BigRational(norm2)) * ipow(BigInt(2), static_cast<unsigned long>(n)) * abs(g.back());
    BigInt modulus = static_cast<unsigned long>(best_p);
    while (modulus <= 2 * bound) modulus *= modulus;

    std::vector<ZPoly> lifted;
    lift_tree(reduce(g, modulus), best, 0, best.size(), best_p, modulus, lifted);

    // Subset recombination.
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            ZPoly prod{g.back()};
            for (std::size_t i : idx) prod = reduce(mul(prod, lifted[remaining[i]]), modulus);
            prod = symmetric(prod, modulus);
            // Cheap constant-term screen before the full trial division.
            const bool plausible = g[0] == 0 || (!prod.empty() && prod[0] != 0 &&
                                                 mpz_divisible_p(BigInt(g[0] * g.back()).get_mpz_t(),
                                                                 prod[0].get_mpz_t()) != 0);
            if (plausible) {
                ZPoly h = primitive(prod);
                ZPoly quot;
                if (divides(h, g, quot)) {
                    result.push_back(h);
                    g = primitive(quot);
                    std::vector<std::size_t> next;
                    for (std::size_t i = 0; i < remaining.size(); ++i) {
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(remaining[i]);
                    }
                    remaining = std::move(next);
                    found = true;
                    break;
                }
            }
            // Next combination of s indices out of remaining.size().
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == remaining.size() - s + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (g.size() > 1) result.push_back(primitive(g));
    return result;
}

}  // namespace detail

/**
 * Irreducible factorization over Q.
 *
 * Squarefree split (Yun), then per part: one good prime, multifactor Hensel
 * lifting, and subset recombination. Factors are returned monic; the content
 * is the leading coefficient of f.
 */
inline QFactorization factor_over_Q(const RationalPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_over_Q: zero polynomial");
    QFactorization out;
    out.content = f.lc();
    if (f.degree() == 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (auto& z : detail::factor_squarefree_z(zpoly::from_rational(part))) {
            out.factors.push_back({zpoly::to_rational(z).monic(), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& a, const QFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        const auto ca = a.factor.primitive_integer_coeffs(), cb = b.factor.primitive_integer_coeffs();
        if (ca != cb) return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

/// Product of the factorization, for round-trip checks.
inline RationalPoly expand(const QFactorization& fac) {
    RationalPoly r = RationalPoly::constant(fac.content);
    for (const auto& [g, m] : fac.factors) {
        for (unsigned i = 0; i < m; ++i) r *= g;
    }
    return r;
}

inline bool is_irreducible_over_Q(const RationalPoly& f) {
    if (f.degree() < 1) return false;
    const auto fac = factor_over_Q(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace hjrank

#endif  // HJRANK_EXACT_FACTOR_Q_HPP
