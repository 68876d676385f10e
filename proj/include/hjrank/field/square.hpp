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

#ifndef HJRANK_FIELD_SQUARE_HPP
#define HJRANK_FIELD_SQUARE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hjrank/exact/factor_q.hpp"
#include "hjrank/exact/integer.hpp"
#include "hjrank/exact/prime_poly.hpp"
#include "hjrank/f2/matrix.hpp"
#include "hjrank/field/number_field.hpp"

namespace hjrank {

/// Raised when the coefficient bound for the square root exceeds the configured cap.
class SquarenessUndetermined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SquareOptions {
    std::size_t residue_prime_ideals = 20;
    std::size_t max_bound_bits = 16384;
    std::size_t max_local_factors = 16;
    std::size_t lifting_prime_candidates = 24;
};

enum class SquareEvidence {
    Witness,           ///< beta with beta^2 = a, verified exactly
    NormNotSquare,     ///< N(a) is not the square of a rational
    NegativeEmbedding, ///< some real embedding of a is negative
    ResidueObstruction,///< a is a non-residue at a degree-one prime
    LocalObstruction,  ///< a is a non-square in a residue field of the lifting prime
    LiftExhausted,     ///< no lifted candidate squares to a below the coefficient bound
};

struct SquareResult {
    bool square = false;
    std::optional<FieldElement> witness;
    SquareEvidence evidence = SquareEvidence::Witness;

    explicit operator bool() const noexcept { return square; }
};

namespace detail {

using zpoly::ZPoly;

/// a mod (ell, theta - root), or nullopt when ell divides a denominator.
inline std::optional<std::uint64_t> reduce_at(const FieldElement& a, const DegreeOnePrime& P) {
    std::uint64_t acc = 0, pw = 1;
    for (const auto& c : a.poly().coeffs()) {
        const std::uint64_t den = reduce_big(c.get_den(), P.ell);
        if (den == 0) return std::nullopt;
        const std::uint64_t v = mulmod(reduce_big(c.get_num(), P.ell), invmod(den, P.ell), P.ell);
        acc = (acc + mulmod(v, pw, P.ell)) % P.ell;
        pw = mulmod(pw, P.root, P.ell);
    }
    return acc;
}

inline ZPoly to_zpoly(const RationalPoly& a) {
    ZPoly r;
    for (const auto& c : a.coeffs()) {
        if (c.get_den() != 1) throw std::logic_error("to_zpoly: non-integral coefficient");
        r.push_back(c.get_num());
    }
    return r;
}

/// (a * b) mod (f, M).
inline ZPoly mulmod_f(const ZPoly& a, const ZPoly& b, const ZPoly& f, const BigInt& M) {
    return zpoly::divmod_monic(zpoly::mul(a, b), f, M).second;
}

/// Square root in F_ell[x]/(g), g irreducible; nullopt for non-residues.
inline std::optional<PrimePoly> sqrt_in_residue_field(const PrimePoly& a, const PrimePoly& g) {
    const std::uint64_t ell = g.modulus();
    const BigInt Q = ipow(BigInt(static_cast<unsigned long>(ell)), static_cast<unsigned long>(g.degree()));
    const BigInt half = (Q - 1) / 2;
    const PrimePoly one = PrimePoly::constant(ell, 1);
    if (powmod(a, half, g) != one) return std::nullopt;
    BigInt t = Q - 1;
    unsigned e = 0;
    while (mpz_even_p(t.get_mpz_t()) != 0) {
        t /= 2;
        ++e;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ ell);
    PrimePoly z = one;
    for (;;) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(g.degree()));
        for (auto& v : c) v = rng() % ell;
        z = PrimePoly(ell, c);
        if (!z.is_zero() && powmod(z, half, g) != one) break;
    }
    PrimePoly c = powmod(z, t, g);
    PrimePoly x = powmod(a, (t + 1) / 2, g);
    PrimePoly b = powmod(a, t, g);
    unsigned r = e;
    while (b != one) {
        unsigned i = 0;
        PrimePoly bb = b;
        while (bb != one) {
            bb = mulmod(bb, bb, g);
            ++i;
        }
        PrimePoly w = c;
        for (unsigned k = 0; k + i + 1 < r; ++k) w = mulmod(w, w, g);
        x = mulmod(x, w, g);
        c = mulmod(w, w, g);
        b = mulmod(b, c, g);
        r = i;
    }
    return x;
}

struct LiftingPrime {
    std::uint64_t ell = 0;
    std::vector<PrimePoly> factors;
};

/// Odd prime ell prime to disc(f) with a3 a unit mod ell, minimizing the number of factors of f mod ell.
inline std::optional<LiftingPrime> choose_lifting_prime(const RationalPoly& f, const BigInt& disc, const ZPoly& a3,
                                                        std::size_t candidates) {
    std::optional<LiftingPrime> best;
    std::size_t seen = 0;
    for (std::uint64_t ell = 3; seen < candidates && ell < kDegreeOnePrimeSearchLimit; ell = next_prime(ell)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), ell) != 0) continue;
        const PrimePoly fl = PrimePoly::reduce(f, ell);
        const PrimePoly al = PrimePoly::reduce(a3, ell);
        if (al.is_zero() || gcd(al, fl).degree() != 0) continue;
        ++seen;
        const auto fac = factor_mod_p(fl);
        if (!best || fac.factors.size() < best->factors.size()) {
            LiftingPrime lp{ell, {}};
            for (const auto& mf : fac.factors) lp.factors.push_back(mf.factor);
            best = std::move(lp);
            if (best->factors.size() == 1) break;
        }
    }
    return best;
}

/// Bound on the coordinates of any gamma in Z[theta] with gamma^2 = a3.
inline BigInt square_root_coordinate_bound(const NumberField& L, const ZPoly& a3) {
    const std::size_t n = L.degree();
    const BigRational& R = L.root_modulus_bound();
    BigRational A = 0, pw = 1;
    for (const auto& c : a3) {
        A += abs(BigRational(c)) * pw;
        pw *= R;
    }
    const BigRational root_a = BigRational(ceil_sqrt(A));
    std::vector<BigRational> tb(n);
    pw = 1;
    for (std::size_t k = 0; k < n; ++k) {
        tb[k] = BigRational(static_cast<unsigned long>(n)) * root_a * pw;
        pw *= R;
    }
    const auto& tinv = L.trace_form_inverse();
    BigRational best = 0;
    for (std::size_t j = 0; j < n; ++j) {
        BigRational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += abs(tinv[j][k]) * tb[k];
        best = std::max(best, s);
    }
    return ceil_rational(best);
}

}  // namespace detail

/**
 * Decides whether a nonzero a is a square in L.
 *
 * Cheap sound obstructions come first (norm, real signs, residues at
 * degree-one primes). Otherwise a is scaled into Z[theta], square roots are
 * taken in the residue fields of an unramified odd prime ell, combined by
 * CRT and Hensel-lifted until ell^K exceeds twice a coefficient bound; every
 * candidate is verified by exact squaring. Each "false" therefore carries a
 * proof and each "true" a verified witness.
 */
inline SquareResult is_square(const FieldElement& a, const SquareOptions& opt = {}) {
    using detail::ZPoly;
    if (a.is_zero()) throw std::domain_error("is_square: zero element");
    const NumberField& L = *a.field();

    if (!is_rational_square(norm(a))) return {false, std::nullopt, SquareEvidence::NormNotSquare};
    if (!real_signs(a).totally_positive()) return {false, std::nullopt, SquareEvidence::NegativeEmbedding};

    std::size_t tested = 0;
    for (const auto& P : L.degree_one_primes()) {
        if (tested >= opt.residue_prime_ideals) break;
        const auto v = detail::reduce_at(a, P);
        if (!v || *v == 0) continue;
        ++tested;
        if (legendre(*v, P.ell) < 0) return {false, std::nullopt, SquareEvidence::ResidueObstruction};
    }

    // a3 = (D c)^2 a lies in Z[theta] and any square root of it does too.
    const BigInt c = a.denominator();
    const BigInt D = abs(L.discriminant_value());
    const BigInt scale = D * c;
    const ZPoly a3 = detail::to_zpoly(a.poly() * BigRational(scale * scale));
    const ZPoly f = detail::to_zpoly(L.poly());

    const BigInt bound = detail::square_root_coordinate_bound(L, a3);
    if (mpz_sizeinbase(bound.get_mpz_t(), 2) > opt.max_bound_bits) {
        throw SquarenessUndetermined("is_square: coefficient bound exceeds " + std::to_string(opt.max_bound_bits) + " bits");
    }

    const auto lp = detail::choose_lifting_prime(L.poly(), L.discriminant_value(), a3, opt.lifting_prime_candidates);
    if (!lp) throw SquarenessUndetermined("is_square: no admissible lifting prime");
    if (lp->factors.size() > opt.max_local_factors) {
        throw SquarenessUndetermined("is_square: lifting prime splits into too many factors");
    }
    const std::uint64_t ell = lp->ell;
    const PrimePoly fl = PrimePoly::reduce(L.poly(), ell);
    const PrimePoly al = PrimePoly::reduce(a3, ell);

    std::vector<PrimePoly> roots, idempotents;
    for (const auto& g : lp->factors) {
        auto s = detail::sqrt_in_residue_field(al % g, g);
        if (!s) return {false, std::nullopt, SquareEvidence::LocalObstruction};
        roots.push_back(*s);
        const PrimePoly cof = fl / g;
        idempotents.push_back((cof * invmod(cof, g)) % fl);
    }

    const BigInt ellz(static_cast<unsigned long>(ell));
    const BigInt target = 2 * bound;
    const std::size_t r = roots.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (r - 1)); ++mask) {
        PrimePoly s(ell, {});
        for (std::size_t i = 0; i < r; ++i) {
            const bool neg = i > 0 && ((mask >> (i - 1)) & 1U) != 0;
            const PrimePoly term = (roots[i] * idempotents[i]) % fl;
            s = neg ? s - term : s + term;
        }
        // Newton iteration for 1/sqrt(a3): y <- y (3 - a3 y^2) / 2.
        ZPoly y = zpoly::from_prime_poly(invmod(s, fl));
        BigInt M = ellz;
        while (M <= target) {
            M = M * M;
            const BigInt inv2 = (M + 1) / 2;
            const ZPoly ay2 = detail::mulmod_f(a3, detail::mulmod_f(y, y, f, M), f, M);
            ZPoly three_minus = zpoly::sub(ZPoly{BigInt(3)}, ay2);
            y = zpoly::reduce(zpoly::scale(detail::mulmod_f(y, three_minus, f, M), inv2), M);
        }
        const ZPoly gamma = zpoly::symmetric(detail::mulmod_f(a3, y, f, M), M);
        const RationalPoly g = zpoly::to_rational(gamma);
        if ((g * g) % L.poly() == RationalPoly::from_integers(a3)) {
            FieldElement beta = L.element(g / BigRational(scale));
            if (beta * beta == a) return {true, std::move(beta), SquareEvidence::Witness};
        }
    }
    return {false, std::nullopt, SquareEvidence::LiftExhausted};
}

/// Nonzero representatives of classes in L^x / (L^x)^2.
class SquareClassSet {
public:
    SquareClassSet(FieldPtr field, std::vector<FieldElement> reps) : field_(std::move(field)), reps_(std::move(reps)) {
        for (const auto& r : reps_) {
            if (r.is_zero()) throw std::invalid_argument("SquareClassSet: zero representative");
            if (r.field()->poly() != field_->poly()) throw std::invalid_argument("SquareClassSet: foreign representative");
        }
    }

    [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
    [[nodiscard]] const std::vector<FieldElement>& representatives() const noexcept { return reps_; }
    [[nodiscard]] std::size_t size() const noexcept { return reps_.size(); }

private:
    FieldPtr field_;
    std::vector<FieldElement> reps_;
};

inline constexpr std::size_t kIndependenceCap = 16;

struct IndependenceResult {
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t classes_used = 0;
    bool partial = false;  ///< more than `cap` classes; only the first `cap` were examined
};

/**
 * F_2-dimension of the subgroup of L^x/(L^x)^2 generated by the classes.
 * Products whose sign/residue characters do not cancel are skipped (they
 * carry a sound obstruction); the rest are decided by is_square.
 */
inline IndependenceResult independence_rank_detailed(const SquareClassSet& classes, std::size_t cap = kIndependenceCap,
                                                     const SquareOptions& opt = {}) {
    IndependenceResult res;
    const auto& reps = classes.representatives();
    const std::size_t k = std::min(reps.size(), cap);
    res.partial = reps.size() > cap;
    res.classes_used = k;
    if (k == 0) return res;

    const NumberField& L = *classes.field();
    std::vector<DegreeOnePrime> usable;
    for (const auto& P : L.degree_one_primes()) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            const auto v = detail::reduce_at(reps[i], P);
            ok = v && *v != 0;
        }
        if (ok) usable.push_back(P);
    }
    const std::size_t nreal = L.real_roots().size();
    std::vector<f2::VecF2> chars;
    for (std::size_t i = 0; i < k; ++i) {
        f2::VecF2 v(nreal + usable.size());
        const auto s = real_signs(reps[i]);
        for (std::size_t j = 0; j < nreal; ++j) v.set(j, s[j] < 0);
        for (std::size_t j = 0; j < usable.size(); ++j) {
            v.set(nreal + j, legendre(*detail::reduce_at(reps[i], usable[j]), usable[j].ell) < 0);
        }
        chars.push_back(std::move(v));
    }

    std::size_t squares = 1;  // the empty product
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        f2::VecF2 acc(nreal + usable.size());
        for (std::size_t i = 0; i < k; ++i) {
            if (((mask >> i) & 1U) != 0) acc ^= chars[i];
        }
        if (!acc.is_zero()) continue;
        FieldElement prod = L.constant(1);
        for (std::size_t i = 0; i < k; ++i) {
            if (((mask >> i) & 1U) != 0) prod = prod * reps[i];
        }
        if (is_square(prod, opt).square) ++squares;
    }
    if ((squares & (squares - 1)) != 0) throw std::logic_error("independence_rank: square products do not form a subgroup");
    while ((std::size_t{1} << res.kernel_dim) < squares) ++res.kernel_dim;
    res.rank = k - res.kernel_dim;
    return res;
}

inline std::size_t independence_rank_mod_squares(const SquareClassSet& classes, std::size_t cap = kIndependenceCap,
                                                 const SquareOptions& opt = {}) {
    return independence_rank_detailed(classes, cap, opt).rank;
}

/// (-1)^deg(g) g(theta) for an irreducible factor g of f - y0^2 with g != f.
inline FieldElement delta_class_of_factor(const RationalPoly& g, const BigRational& y0, const FieldPtr& field) {
    const RationalPoly& f = field->poly();
    if (g.degree() < 1) throw std::invalid_argument("delta_class_of_factor: constant factor");
    if (!((f - RationalPoly::constant(y0 * y0)) % g).is_zero()) {
        throw std::invalid_argument("delta_class_of_factor: g does not divide f - y0^2");
    }
    FieldElement v = field->element(g);
    if (v.is_zero()) throw std::domain_error("delta_class_of_factor: g(theta) = 0");
    return g.degree() % 2 == 1 ? -v : v;
}

}  // namespace hjrank

#endif  // HJRANK_FIELD_SQUARE_HPP
