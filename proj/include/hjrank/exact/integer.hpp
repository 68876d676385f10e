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

#ifndef HJRANK_EXACT_INTEGER_HPP
#define HJRANK_EXACT_INTEGER_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hjrank {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Largest input accepted by the trial-division based helpers.
inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000'000'000ULL;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

/// Reduces a signed value into [0, m).
inline std::uint64_t reduce_signed(std::int64_t a, std::uint64_t m) {
    const auto sm = static_cast<std::int64_t>(m);
    std::int64_t r = a % sm;
    if (r < 0) r += sm;
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t reduce_big(const BigInt& a, std::uint64_t m) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
    return r.get_ui();
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) throw std::domain_error("invmod: element not invertible");
    return reduce_signed(t, m);
}

/// Deterministic Miller-Rabin; the base set is exact for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Sieve of Eratosthenes; returns all primes <= limit in increasing order.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

inline std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factor_trial: zero has no factorization");
    if (n > kTrialDivisionLimit) throw std::domain_error("factor_trial: input exceeds trial-division limit");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1U);
    return out;
}

/// True iff no prime square divides n (trial division up to sqrt(n)).
inline bool is_squarefree_integer(std::uint64_t n) {
    if (n == 0) throw std::domain_error("is_squarefree_integer: n must be positive");
    for (const auto& [p, e] : factor_trial(n)) {
        if (e > 1) return false;
    }
    return true;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (const auto& [p, e] : factor_trial(n)) phi = phi / p * (p - 1);
    return phi;
}

/// Least k >= 1 with a^k = 1 (mod n).
inline std::uint64_t multiplicative_order(std::int64_t a, std::uint64_t n) {
    if (n < 2) throw std::domain_error("multiplicative_order: modulus must be >= 2");
    const std::uint64_t ar = reduce_signed(a, n);
    if (std::gcd(ar, n) != 1) throw std::domain_error("multiplicative_order: gcd(a, n) != 1");
    std::uint64_t order = euler_phi(n);
    for (const auto& [p, e] : factor_trial(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (powmod(ar, order / p, n) != 1) break;
            order /= p;
        }
    }
    return order;
}

/// Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}.
inline int legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool is_rational_square(const BigRational& x) {
    if (sgn(x) < 0) return false;
    return mpz_perfect_square_p(x.get_num_mpz_t()) != 0 && mpz_perfect_square_p(x.get_den_mpz_t()) != 0;
}

/// Smallest integer >= x.
inline BigInt ceil_rational(const BigRational& x) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

/// Smallest integer r with r*r >= x (x >= 0).
inline BigInt ceil_sqrt(const BigRational& x) {
    const BigInt c = ceil_rational(x);
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), c.get_mpz_t());
    if (r * r < c) r += 1;
    return r;
}

}  // namespace hjrank

#endif  // HJRANK_EXACT_INTEGER_HPP
