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

#ifndef HJRANK_BOUNDS_CERTIFICATES_HPP
#define HJRANK_BOUNDS_CERTIFICATES_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjrank/cyclo/signatures.hpp"
#include "hjrank/exact/cyclotomic.hpp"
#include "hjrank/exact/integer.hpp"
#include "hjrank/exact/prime_poly.hpp"
#include "hjrank/exact/rational_poly.hpp"
#include "hjrank/f2/matrix.hpp"
#include "hjrank/field/number_field.hpp"

namespace hjrank {

/// The parameter lies outside the family the certificate applies to.
class OutsideFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A certificate that must hold did not.
class CertificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class LocalEvidence { IrreducibleModP, EisensteinAfterShift, InertByOrder, TotallyRamifiedCyclotomic };

inline const char* to_string(LocalEvidence e) {
    switch (e) {
        case LocalEvidence::IrreducibleModP: return "irreducible-mod-p";
        case LocalEvidence::EisensteinAfterShift: return "eisenstein-after-shift";
        case LocalEvidence::InertByOrder: return "inert-by-order";
        case LocalEvidence::TotallyRamifiedCyclotomic: return "totally-ramified-cyclotomic";
    }
    return "?";
}

struct PrimeEvidence {
    std::uint64_t prime = 0;
    LocalEvidence kind = LocalEvidence::IrreducibleModP;
    bool verified = false;
};

/// Each finite bad prime carries evidence that f stays irreducible over Q_v, so G is trivial.
struct GTrivialityCertificate {
    std::vector<std::uint64_t> bad_set;
    std::vector<PrimeEvidence> evidence;
    bool conclusion = false;
};

/// True when g is Eisenstein at v (g integral, v prime).
inline bool is_eisenstein(const RationalPoly& g, std::uint64_t v) {
    if (!g.is_integral() || g.degree() < 1) return false;
    const BigInt vz(static_cast<unsigned long>(v));
    if (mpz_divisible_p(g.lc().get_num_mpz_t(), vz.get_mpz_t()) != 0) return false;
    for (int i = 0; i < g.degree(); ++i) {
        if (mpz_divisible_p(g.coeff(static_cast<std::size_t>(i)).get_num_mpz_t(), vz.get_mpz_t()) == 0) return false;
    }
    const BigInt v2 = vz * vz;
    return mpz_divisible_p(g.coeff(0).get_num_mpz_t(), v2.get_mpz_t()) == 0;
}

/// f_m = x^3 + m x^2 - (m+3) x + 1.
inline RationalPoly washington_poly(std::int64_t m) {
    return RationalPoly::from_integers({BigInt(1), BigInt(static_cast<long>(-(m + 3))), BigInt(static_cast<long>(m)), BigInt(1)});
}

/// D = m^2 + 3m + 9; disc(f_m) = D^2.
inline std::uint64_t washington_D(std::int64_t m) {
    if (m < 0) throw OutsideFamily("washington: m must be non-negative");
    const auto um = static_cast<std::uint64_t>(m);
    return um * um + 3 * um + 9;
}

inline bool washington_in_family(std::int64_t m) { return m >= 0 && is_squarefree_integer(washington_D(m)); }

/**
 * S = {2} plus the primes dividing D. At 2, f_m reduces to x^3+x^2+1 or
 * x^3+x+1. At v | D, 27 f_m(x - m/3) = 27x^3 - 9Dx + D(2m+3) is Eisenstein.
 */
inline GTrivialityCertificate washington_local_certificate(std::int64_t m) {
    const std::uint64_t D = washington_D(m);
    if (!is_squarefree_integer(D)) throw OutsideFamily("outside family: D = " + std::to_string(D) + " is not square-free");
    const RationalPoly f = washington_poly(m);
    GTrivialityCertificate cert;
    cert.bad_set.push_back(2);
    const bool irr2 = is_irreducible_mod_p(PrimePoly::reduce(f, 2));
    cert.evidence.push_back({2, LocalEvidence::IrreducibleModP, irr2});

    const RationalPoly shifted = f.shifted(BigRational(BigInt(static_cast<long>(-m))) / BigRational(3)) * BigRational(27);
    const BigInt Dz(static_cast<unsigned long>(D));
    const RationalPoly expected = RationalPoly::from_integers(
        {Dz * BigInt(static_cast<long>(2 * m + 3)), BigInt(-9) * Dz, BigInt(0), BigInt(27)});
    const bool shape_ok = shifted == expected;
    bool all = irr2 && shape_ok;
    for (const auto& [v, e] : factor_trial(D)) {
        (void)e;
        cert.bad_set.push_back(v);
        const bool ok = shape_ok && v != 3 && is_eisenstein(expected, v);
        cert.evidence.push_back({v, LocalEvidence::EisensteinAfterShift, ok});
        all = all && ok;
    }
    cert.conclusion = all;
    return cert;
}

struct WashingtonRhoCertificate {
    std::array<SignatureVector, 3> signatures;  ///< of alpha, 1/(1-alpha), 1 - 1/alpha
    std::size_t span = 0;
    bool rho_infty_zero = false;
};

/// Signatures of the three root units span F_2^3, so every totally positive unit is a square.
inline WashingtonRhoCertificate washington_rho_certificate(std::int64_t m) {
    if (!washington_in_family(m)) throw OutsideFamily("outside family: D is not square-free");
    const auto L = NumberField::create(washington_poly(m));
    const FieldElement a = L->theta();
    const FieldElement one = L->constant(1);
    WashingtonRhoCertificate cert;
    cert.signatures = {signature(a), signature((one - a).inverse()), signature(one - a.inverse())};
    std::vector<f2::VecF2> rows;
    for (const auto& s : cert.signatures) rows.push_back(s.to_f2());
    cert.span = f2::span_dimension(rows);
    if (cert.span != 3) throw CertificationFailure("certificate failed: signature span " + std::to_string(cert.span) + " < 3 at m=" + std::to_string(m));
    cert.rho_infty_zero = true;
    return cert;
}

/// Order of 2 in (Z/p)^x / {+-1} equals (p-1)/2.
inline bool two_inert_in_real_cyclotomic(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("two_inert_in_real_cyclotomic: p must be an odd prime");
    const std::uint64_t ord = multiplicative_order(2, p);
    const std::uint64_t quotient_order = ord % 2 == 0 ? ord / 2 : ord;
    return quotient_order == (p - 1) / 2;
}

/// Largest p for which the Eisenstein shape at q is checked on explicit coefficients.
inline constexpr std::uint64_t kExplicitEisensteinLimit = 400;

/**
 * S = {2, q} for L = Q(zeta_q)^+. At 2: the order of 2 mod q is q-1 or
 * (q-1)/2, so 2 is inert. At q: q is totally ramified; for p up to
 * kExplicitEisensteinLimit this is also checked as f(x + 2) or f(x - 2)
 * being Eisenstein at q.
 */
inline GTrivialityCertificate sophie_g_certificate(const cyclo::SophieGermainPair& pair, const RationalPoly& f) {
    const std::uint64_t q = pair.q();
    GTrivialityCertificate cert;
    cert.bad_set = {2, q};
    const std::uint64_t ord = multiplicative_order(2, q);
    const bool inert = ord == q - 1 || ord == (q - 1) / 2;
    cert.evidence.push_back({2, LocalEvidence::InertByOrder, inert});
    bool ramified = true;
    if (pair.p() <= kExplicitEisensteinLimit) {
        ramified = is_eisenstein(f.shifted(2), q) || is_eisenstein(f.shifted(-2), q);
    }
    cert.evidence.push_back({q, LocalEvidence::TotallyRamifiedCyclotomic, ramified});
    cert.conclusion = inert && ramified;
    return cert;
}

}  // namespace hjrank

#endif  // HJRANK_BOUNDS_CERTIFICATES_HPP
