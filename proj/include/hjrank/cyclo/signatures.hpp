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

#ifndef HJRANK_CYCLO_SIGNATURES_HPP
#define HJRANK_CYCLO_SIGNATURES_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hjrank/exact/integer.hpp"
#include "hjrank/f2/matrix.hpp"
#include "hjrank/f2/poly.hpp"
#include "hjrank/signature.hpp"

namespace hjrank::cyclo {

/// p and q = 2p + 1 both prime, p odd; the curve genus is (p - 1) / 2.
class SophieGermainPair {
public:
    static SophieGermainPair from_q(std::uint64_t q) {
        if (q < 7 || q % 2 == 0 || !is_prime(q) || !is_prime((q - 1) / 2)) {
            throw std::invalid_argument("not Sophie Germain: q=" + std::to_string(q));
        }
        return SophieGermainPair((q - 1) / 2, q);
    }

    static SophieGermainPair from_p(std::uint64_t p) { return from_q(2 * p + 1); }

    [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
    [[nodiscard]] std::uint64_t q() const noexcept { return q_; }
    [[nodiscard]] std::uint64_t genus() const noexcept { return (p_ - 1) / 2; }

    friend bool operator==(const SophieGermainPair&, const SophieGermainPair&) = default;

private:
    SophieGermainPair(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {}

    std::uint64_t p_;
    std::uint64_t q_;
};

inline bool is_sophie_germain_q(std::uint64_t q) {
    return q >= 7 && q % 2 == 1 && is_prime(q) && is_prime((q - 1) / 2);
}

/**
 * Signature of the norm-one unit u = -(zeta + zeta^-1) (p = 1 mod 4) or
 * u = zeta + zeta^-1 (p = 3 mod 4), embeddings ordered by ascending conjugate.
 * The leading (p-1)/2 resp. (p+1)/2 entries are -1.
 */
inline SignatureVector canonical_signature(const SophieGermainPair& pair) {
    const std::uint64_t p = pair.p();
    const std::uint64_t negatives = (p % 4 == 1) ? (p - 1) / 2 : (p + 1) / 2;
    std::vector<int> s(p, 1);
    for (std::uint64_t i = 0; i < negatives; ++i) s[i] = -1;
    return SignatureVector(std::move(s));
}

/// Permutation of {0, ..., p-1}; image[i] is the 0-based image of i.
struct DoublingPermutation {
    std::vector<std::size_t> image;

    [[nodiscard]] std::size_t size() const noexcept { return image.size(); }
    [[nodiscard]] std::size_t operator()(std::size_t i) const { return image.at(i); }

    /// Length of the cycle through 0; equals p exactly when the permutation is a single p-cycle.
    [[nodiscard]] std::size_t cycle_length_from_zero() const {
        std::size_t len = 1;
        for (std::size_t i = image.at(0); i != 0; i = image[i]) ++len;
        return len;
    }

    [[nodiscard]] bool is_bijection() const {
        std::vector<bool> seen(image.size(), false);
        for (auto v : image) {
            if (v >= image.size() || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }
};

/**
 * The permutation phi with tau_i(sigma(u)) = r_{phi(i)} for the generator
 * sigma(zeta + zeta^-1) = zeta^2 + zeta^-2, where r_1 < ... < r_p are the
 * conjugates of u. Indices are converted to 0-based on return.
 */
inline DoublingPermutation doubling_permutation(const SophieGermainPair& pair) {
    const std::uint64_t p = pair.p(), q = pair.q();
    DoublingPermutation phi;
    phi.image.resize(p);
    for (std::uint64_t i = 1; i <= p; ++i) {
        std::uint64_t target = 0;
        if (p % 4 == 1) {
            const std::uint64_t a = (2 * i) % q;
            target = std::min(a, (q - a) % q);
        } else {
            const std::uint64_t a = (2 * (p + 1 - i)) % q;
            target = p + 1 - std::min(a, q - a);
        }
        phi.image[i - 1] = target - 1;
    }
    if (!phi.is_bijection()) throw std::logic_error("doubling_permutation: not a bijection");
    return phi;
}

/**
 * The p x (p-1) matrix over F_2 whose column j is the signature of sigma^j(u):
 * entry (i, j) = psi(eps_{phi^j(i)}).
 */
inline f2::MatF2 build_M_infty(const SophieGermainPair& pair) {
    const std::size_t p = pair.p();
    const f2::VecF2 f = canonical_signature(pair).to_f2();
    const DoublingPermutation phi = doubling_permutation(pair);
    f2::MatF2 m(p, p - 1);
    std::vector<std::size_t> power(p);
    for (std::size_t i = 0; i < p; ++i) power[i] = i;
    for (std::size_t j = 0; j + 1 < p; ++j) {
        for (std::size_t i = 0; i < p; ++i) {
            if (f.get(power[i])) m.set(i, j, true);
            power[i] = phi(power[i]);
        }
    }
    return m;
}

enum class RankMethod {
    Dense,      ///< packed Gaussian elimination on M_infty
    Circulant,  ///< gcd with x^p + 1 after reordering rows along the p-cycle
    Auto,       ///< dense for small p, circulant otherwise
};

inline constexpr std::uint64_t kDenseRankLimit = 512;

struct RhoInftyCertificate {
    SophieGermainPair pair;
    std::size_t d_infty = 0;
    bool rho_infty_zero = false;
};

/**
 * Rank of M_infty via its circulant structure. Listing the rows along the
 * cycle 0, phi(0), phi^2(0), ... turns M_infty into the first p-1 columns of
 * the Hankel matrix c[(k + j) mod p] with c_k = psi(eps_{phi^k(0)}). The
 * omitted column is the sum of the others when c has even weight, so both
 * matrices have the same rank.
 */
inline std::size_t rank_M_infty_circulant(const SophieGermainPair& pair) {
    const std::size_t p = pair.p();
    const f2::VecF2 f = canonical_signature(pair).to_f2();
    const DoublingPermutation phi = doubling_permutation(pair);
    if (phi.cycle_length_from_zero() != p || f.weight() % 2 != 0) return f2::rank(build_M_infty(pair));
    f2::VecF2 c(p);
    std::size_t idx = 0;
    for (std::size_t k = 0; k < p; ++k) {
        c.set(k, f.get(idx));
        idx = phi(idx);
    }
    return f2::circulant_rank(c);
}

/// d_infty = rank(M_infty); rho_infty = 0 is certified when d_infty = p - 1.
inline RhoInftyCertificate certify_rho_infty(const SophieGermainPair& pair, RankMethod method = RankMethod::Auto) {
    if (method == RankMethod::Auto) method = pair.p() <= kDenseRankLimit ? RankMethod::Dense : RankMethod::Circulant;
    const std::size_t d =
        method == RankMethod::Dense ? f2::rank(build_M_infty(pair)) : rank_M_infty_circulant(pair);
    return {pair, d, d == pair.p() - 1};
}

/// All Sophie Germain pairs with q <= q_max, ascending in q.
inline std::vector<SophieGermainPair> sophie_germain_pairs(std::uint64_t q_max) {
    std::vector<SophieGermainPair> pairs;
    if (q_max < 7) return pairs;
    const auto primes = primes_up_to(q_max);
    std::vector<bool> prime_flag(q_max + 1, false);
    for (auto v : primes) prime_flag[v] = true;
    for (auto q : primes) {
        if (q >= 7 && prime_flag[(q - 1) / 2]) pairs.push_back(SophieGermainPair::from_q(q));
    }
    return pairs;
}

/**
 * Certifies every pair with q <= q_max. Work is spread over `threads`
 * workers; results are stored by pair index, so the output order (by q) does
 * not depend on the thread count.
 */
inline std::vector<RhoInftyCertificate> scan_sophie_germain(std::uint64_t q_max, unsigned threads = 1,
                                                            RankMethod method = RankMethod::Auto) {
    const auto pairs = sophie_germain_pairs(q_max);
    std::vector<RhoInftyCertificate> out;
    out.reserve(pairs.size());
    for (const auto& pr : pairs) out.push_back({pr, 0, false});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            // Largest pairs first keeps the tail of the schedule short.
            const std::size_t k = next.fetch_add(1);
            if (k >= pairs.size()) return;
            const std::size_t i = pairs.size() - 1 - k;
            out[i] = certify_rho_infty(pairs[i], method);
        }
    };
    threads = std::max(1U, threads);
    if (threads == 1 || pairs.size() < 2) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return out;
}

}  // namespace hjrank::cyclo

#endif  // HJRANK_CYCLO_SIGNATURES_HPP
