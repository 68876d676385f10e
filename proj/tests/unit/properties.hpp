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

// Property checks shared by the unit suite and the acceptance binary.

#ifndef HJRANK_TESTS_PROPERTIES_HPP
#define HJRANK_TESTS_PROPERTIES_HPP

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"

namespace hjrank::testing {

struct PropertyOutcome {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
    void fail(std::string msg) { failures.push_back(std::move(msg)); }
};

/**
 * is_square on Q[x]/(x^3 - x^2 - 2x + 1) over the box {-2..2}^3 against exhaustive squaring.
 * Z[theta] is the maximal order (disc f = 49 is the field discriminant), so a root of an
 * element of Z[theta] lies in Z[theta]; its coordinates are bounded through the embeddings.
 */
inline PropertyOutcome squareness_on_cubic_box(std::size_t* squares_found = nullptr) {
    PropertyOutcome out;
    const auto L = NumberField::create(ints({1, -2, -1, 1}));
    const auto roots = cyclotomic_conjugates(7, true);
    double v[3][3], inv[3][3];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) v[i][j] = std::pow(roots[static_cast<std::size_t>(i)], j);
    }
    const double det = v[0][0] * (v[1][1] * v[2][2] - v[1][2] * v[2][1]) - v[0][1] * (v[1][0] * v[2][2] - v[1][2] * v[2][0]) +
                       v[0][2] * (v[1][0] * v[2][1] - v[1][1] * v[2][0]);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            inv[i][j] = (v[r0][c0] * v[r1][c1] - v[r0][c1] * v[r1][c0]) / det;
        }
    }
    double emb = 0;
    for (double r : roots) emb = std::max(emb, 2.0 * (1 + std::abs(r) + r * r));
    double rowsum = 0;
    for (auto& row : inv) rowsum = std::max(rowsum, std::abs(row[0]) + std::abs(row[1]) + std::abs(row[2]));
    const long B = static_cast<long>(std::ceil(rowsum * std::sqrt(emb))) + 1;

    std::set<std::vector<long>> squares;
    for (long a = -B; a <= B; ++a) {
        for (long b = -B; b <= B; ++b) {
            for (long c = -B; c <= B; ++c) {
                const FieldElement beta = L->element(ints({a, b, c}));
                std::vector<long> key;
                bool in_box = true;
                for (const auto& x : (beta * beta).coords()) {
                    in_box = in_box && x.get_den() == 1 && abs(x) <= 2;
                    key.push_back(in_box ? x.get_num().get_si() : 0);
                }
                if (in_box) squares.insert(key);
            }
        }
    }
    std::size_t found = 0;
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            for (long c = -2; c <= 2; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                const FieldElement e = L->element(ints({a, b, c}));
                const bool oracle = squares.contains(std::vector<long>{a, b, c});
                const auto r = is_square(e);
                if (r.square != oracle) out.fail("is_square mismatch at " + e.to_string());
                if (r.square && !(r.witness && *r.witness * *r.witness == e)) out.fail("bad witness at " + e.to_string());
                found += oracle;
                ++out.checked;
            }
        }
    }
    if (squares_found != nullptr) *squares_found = found;
    return out;
}

/// The product of all delta classes of f - y0^2 is y0^2 for monic f of odd degree.
inline PropertyOutcome delta_class_products(std::size_t samples, std::uint64_t seed) {
    PropertyOutcome out;
    std::mt19937_64 rng(seed);
    const std::vector<RationalPoly> fs = {min_poly_2cos(7, true), min_poly_2cos(7, false), min_poly_2cos(11, false),
                                          min_poly_2cos(11, true), min_poly_2cos(23, true)};
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
    while (out.checked < samples) {
        const RationalPoly& f = fs[pick(rng)];
        BigRational y0(num(rng), den(rng));
        y0.canonicalize();
        if (y0 == 0) continue;
        const RationalPoly h = f - RationalPoly::constant(y0 * y0);
        if (!is_squarefree(h)) continue;
        const auto L = NumberField::create(f);
        FieldElement prod = L->constant(1);
        for (const auto& qf : factor_over_Q(h).factors) prod = prod * delta_class_of_factor(qf.factor, y0, L);
        const std::string tag = "f=" + f.to_string() + " y0=" + y0.get_str();
        if (prod != L->constant(y0 * y0)) out.fail("product differs from y0^2: " + tag);
        if (!is_square(prod).square) out.fail("product not certified square: " + tag);
        ++out.checked;
    }
    return out;
}

/// Round trip and mod-p degree consistency for random products of small integer polynomials.
inline PropertyOutcome factorization_round_trips(std::size_t samples, std::uint64_t seed) {
    PropertyOutcome out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pieces_d(1, 3), deg_d(1, 4);
    for (std::size_t t = 0; t < samples; ++t) {
        RationalPoly f = RationalPoly::constant(BigRational(static_cast<long>(1 + t % 3), static_cast<long>(1 + t % 2)));
        std::size_t pieces = 0;
        for (int k = pieces_d(rng); k > 0; --k) {
            const int d = std::min(deg_d(rng), 12 - std::max(0, f.degree()));
            if (d < 1) break;
            f *= random_poly(rng, d, -5, 5, t % 2 == 0);
            ++pieces;
        }
        ++out.checked;
        const std::string tag = "f=" + f.to_string();
        const auto fac = factor_over_Q(f);
        RationalPoly prod = RationalPoly::constant(fac.content);
        std::size_t count = 0;
        for (const auto& qf : fac.factors) {
            if (!qf.factor.is_monic()) out.fail("non-monic factor: " + tag);
            for (unsigned k = 0; k < qf.multiplicity; ++k) prod *= qf.factor;
            count += qf.multiplicity;
        }
        if (prod != f) out.fail("round trip: " + tag);
        if (count < pieces) out.fail("too few factors: " + tag);
        for (std::size_t i = 1; i < fac.factors.size(); ++i) {
            if (fac.factors[i - 1].factor.degree() > fac.factors[i].factor.degree()) out.fail("order: " + tag);
        }
        for (const auto& qf : fac.factors) {
            const RationalPoly& g = qf.factor;
            if (g.degree() < 2) continue;
            const BigRational dg = discriminant(g) * g.denominator_lcm();
            int checked = 0;
            for (std::uint64_t p : primes_up_to(200)) {
                if (checked == 3) break;
                const BigInt pz(static_cast<unsigned long>(p));
                if (g.denominator_lcm() % pz == 0 || dg.get_num() % pz == 0) continue;
                int sum = 0;
                for (const auto& mf : factor_mod_p(PrimePoly::reduce(g, p)).factors) {
                    if (mf.multiplicity != 1) out.fail("repeated factor mod " + std::to_string(p) + ": " + tag);
                    sum += mf.factor.degree();
                }
                if (sum != g.degree()) out.fail("degree sum mod " + std::to_string(p) + ": " + tag);
                ++checked;
            }
        }
    }
    return out;
}

/// phi is a single p-cycle and the p conjugate signatures of the norm-one unit sum to zero.
inline PropertyOutcome doubling_cycle_and_orbit_sum(std::uint64_t q_max) {
    PropertyOutcome out;
    for (const auto& pr : cyclo::sophie_germain_pairs(q_max)) {
        ++out.checked;
        const std::size_t p = pr.p();
        const std::string tag = "q=" + std::to_string(pr.q());
        const auto phi = cyclo::doubling_permutation(pr);
        if (!phi.is_bijection()) {
            out.fail("not a bijection: " + tag);
            continue;
        }
        std::vector<std::size_t> pow(p);
        for (std::size_t i = 0; i < p; ++i) pow[i] = i;
        for (std::size_t k = 1; k <= p; ++k) {
            for (auto& x : pow) x = phi(x);
            bool identity = true;
            for (std::size_t i = 0; i < p; ++i) identity = identity && pow[i] == i;
            if (identity != (k == p)) out.fail("phi^" + std::to_string(k) + " identity=" + (identity ? "1 " : "0 ") + tag);
        }

        const f2::VecF2 base = cyclo::canonical_signature(pr).to_f2();
        std::vector<std::size_t> idx(p);
        for (std::size_t i = 0; i < p; ++i) idx[i] = i;
        f2::VecF2 sum(p), col(p);
        for (std::size_t j = 0; j < p; ++j) {
            for (std::size_t i = 0; i < p; ++i) col.set(i, base.get(idx[i]));
            for (std::size_t i = 0; i < p; ++i) {
                if (col.get(i)) sum.flip(i);
            }
            for (auto& x : idx) x = phi(x);
        }
        if (!sum.is_zero()) out.fail("orbit sum nonzero: " + tag);

        const f2::MatF2 m = cyclo::build_M_infty(pr);
        f2::VecF2 kept(p);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (std::size_t i = 0; i < p; ++i) {
                if (m.get(i, j)) kept.flip(i);
            }
        }
        if (!(kept == col)) out.fail("omitted column is not the sum of the kept ones: " + tag);
    }
    return out;
}

}  // namespace hjrank::testing

#endif  // HJRANK_TESTS_PROPERTIES_HPP
