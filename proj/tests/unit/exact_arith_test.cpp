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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "support.hpp"

namespace hjrank {
namespace {

using testing::ints;

const RationalPoly kF7 = ints({1, -2, -1, 1});            // x^3 - x^2 - 2x + 1
const RationalPoly kF11 = ints({1, 3, -3, -4, 1, 1});     // x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1
const RationalPoly kF23 = ints({1, -6, -15, 35, 35, -56, -28, 36, 9, -10, -1, 1});

TEST(Discriminant, CubicOfSevenMatchesSylvester) {
    const RationalPoly f = ints({-1, -2, 1, 1});
    EXPECT_EQ(discriminant(f), 49);
    EXPECT_EQ(discriminant(f), -testing::sylvester_resultant(f, f.derivative()));
}

TEST(Discriminant, SmallCases) {
    EXPECT_EQ(discriminant(ints({-1, 0, 1})), 4);
    EXPECT_EQ(discriminant(washington_poly(0)), 81);
    EXPECT_THROW(discriminant(ints({5})), std::domain_error);
}

TEST(Discriminant, AgreesWithSylvesterOnRandomPolys) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        const auto f = testing::random_poly(rng, 1 + t % 6, -9, 9, false);
        const long n = f.degree();
        BigRational expect = testing::sylvester_resultant(f, f.derivative()) / f.lc();
        if ((n * (n - 1) / 2) % 2 == 1) expect = -expect;
        EXPECT_EQ(discriminant(f), expect) << f.to_string();
    }
}

TEST(Resultant, MatchesSylvester) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto a = testing::random_poly(rng, 1 + t % 5, -6, 6, false);
        const auto b = testing::random_poly(rng, 1 + (t / 5) % 4, -6, 6, false);
        EXPECT_EQ(resultant(a, b), testing::sylvester_resultant(a, b));
    }
}

TEST(SquarefreeInteger, Examples) {
    EXPECT_TRUE(is_squarefree_integer(13));
    EXPECT_FALSE(is_squarefree_integer(49));
    EXPECT_FALSE(is_squarefree_integer(9));
    EXPECT_TRUE(is_squarefree_integer(1));
    EXPECT_TRUE(is_squarefree_integer(20887));
    EXPECT_THROW(is_squarefree_integer(0), std::domain_error);
}

TEST(SquarefreeInteger, AgreesWithNaiveSquareDivisors) {
    for (std::uint64_t n = 1; n < 3000; ++n) {
        bool sf = true;
        for (std::uint64_t d = 2; d * d <= n; ++d) sf = sf && n % (d * d) != 0;
        ASSERT_EQ(is_squarefree_integer(n), sf) << n;
    }
}

TEST(FactorModP, Examples) {
    EXPECT_TRUE(is_irreducible_mod_p(PrimePoly(2, {1, 0, 1, 1})));
    const auto fac = factor_mod_p(PrimePoly::from_signed(3, {-1, 0, 1}));
    ASSERT_EQ(fac.factors.size(), 2U);
    EXPECT_EQ(fac.factors[0].factor, PrimePoly(3, {1, 1}));
    EXPECT_EQ(fac.factors[1].factor, PrimePoly(3, {2, 1}));
    EXPECT_THROW(factor_mod_p(PrimePoly(4, {1, 1})), std::domain_error);
}

TEST(FactorModP, QuinticModTwoIsIrreducible) {
    const PrimePoly g = PrimePoly::reduce(kF11, 2);
    EXPECT_EQ(g, PrimePoly(2, {1, 1, 1, 0, 1, 1}));
    // Degree 5 with no root and no factor x^2 + x + 1 is irreducible.
    EXPECT_NE(g.eval(0), 0U);
    EXPECT_NE(g.eval(1), 0U);
    EXPECT_FALSE((g % PrimePoly(2, {1, 1, 1})).is_zero());
    EXPECT_TRUE(is_irreducible_mod_p(g));
}

TEST(FactorModP, ProductAndRootsAgreeWithBruteForce) {
    std::mt19937_64 rng(3);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL, 101ULL}) {
        for (int t = 0; t < 15; ++t) {
            std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
            std::vector<std::uint64_t> c(2 + t % 7);
            for (auto& x : c) x = d(rng);
            c.back() = 1;
            const PrimePoly f(p, c);
            const auto fac = factor_mod_p(f);
            PrimePoly prod = PrimePoly::constant(p, fac.unit);
            for (const auto& mf : fac.factors) {
                EXPECT_TRUE(mf.factor.lc() == 1);
                for (unsigned k = 0; k < mf.multiplicity; ++k) prod = prod * mf.factor;
            }
            EXPECT_EQ(prod, f);
            std::vector<std::uint64_t> roots;
            for (std::uint64_t x = 0; x < p; ++x) {
                if (f.eval(x) == 0) roots.push_back(x);
            }
            EXPECT_EQ(roots_mod_p(f), roots);
        }
    }
}

TEST(FactorOverQ, QuinticMinusOne) {
    const auto fac = factor_over_Q(kF11 - RationalPoly{1});
    ASSERT_EQ(fac.factors.size(), 3U);
    EXPECT_EQ(fac.factors[0].factor, ints({0, 1}));
    EXPECT_EQ(fac.factors[1].factor, ints({-3, 0, 1}));
    EXPECT_EQ(fac.factors[2].factor, ints({-1, 1, 1}));
    EXPECT_EQ(fac.content, 1);
}

TEST(FactorOverQ, DifferenceOfSquares) {
    const auto fac = factor_over_Q(ints({-1, 0, 1}));
    ASSERT_EQ(fac.factors.size(), 2U);
    EXPECT_EQ(fac.factors[0].factor, ints({-1, 1}));
    EXPECT_EQ(fac.factors[1].factor, ints({1, 1}));
}

TEST(FactorOverQ, ElevenDegreeMinusOneMatchesModPPatterns) {
    const RationalPoly h = kF23 - RationalPoly{1};
    const auto fac = factor_over_Q(h);
    std::vector<int> degs;
    for (const auto& f : fac.factors) degs.push_back(f.factor.degree());
    EXPECT_EQ(degs, (std::vector<int>{1, 1, 1, 1, 2, 5}));
    EXPECT_EQ(expand(fac), h);
    // At primes where h stays squarefree, every Q-factor splits into mod-p factors
    // whose degrees add up to its own, and together they give the mod-p pattern of h.
    for (std::uint64_t p : {5ULL, 7ULL, 13ULL}) {
        std::multiset<int> from_q;
        for (const auto& f : fac.factors) {
            int sum = 0;
            for (const auto& mf : factor_mod_p(PrimePoly::reduce(f.factor, p)).factors) {
                sum += mf.factor.degree() * static_cast<int>(mf.multiplicity);
                from_q.insert(mf.factor.degree());
            }
            EXPECT_EQ(sum, f.factor.degree());
        }
        std::multiset<int> direct;
        for (const auto& mf : factor_mod_p(PrimePoly::reduce(h, p)).factors) direct.insert(mf.factor.degree());
        EXPECT_EQ(from_q, direct) << "p=" << p;
    }
}

TEST(FactorOverQ, RejectsZero) { EXPECT_ANY_THROW(factor_over_Q(RationalPoly{})); }

TEST(MinPoly, ExplicitPolynomials) {
    EXPECT_EQ(min_poly_2cos(7, true), kF7);
    EXPECT_EQ(min_poly_2cos(11, false), kF11);
    EXPECT_EQ(min_poly_2cos(23, true), kF23);
    EXPECT_EQ(min_poly_2cos(7, true).to_string(), "x^3 - x^2 - 2x + 1");
    EXPECT_EQ(min_poly_2cos(11, false).to_string(), "x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1");
}

TEST(MinPoly, RejectsBadModulus) {
    EXPECT_THROW(min_poly_2cos(9, false), std::domain_error);
    EXPECT_THROW(min_poly_2cos(3, false), std::domain_error);
    EXPECT_THROW(min_poly_2cos(2, true), std::domain_error);
}

TEST(MinPoly, RootsAreTheCosines) {
    for (std::uint64_t q : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 23ULL}) {
        for (bool neg : {false, true}) {
            const RationalPoly f = min_poly_2cos(q, neg);
            for (double r : testing::cyclotomic_conjugates(q, neg)) EXPECT_NEAR(testing::eval_double(f, r), 0.0, 1e-7);
        }
    }
}

TEST(MinPoly, DegreeMonicAndDiscriminantIsAPowerOfQ) {
    for (std::uint64_t q : primes_up_to(60)) {
        if (q < 5) continue;
        for (bool neg : {false, true}) {
            const RationalPoly f = min_poly_2cos(q, neg);
            EXPECT_EQ(f.degree(), static_cast<int>((q - 1) / 2));
            EXPECT_TRUE(f.is_monic());
            EXPECT_TRUE(f.is_integral());
            BigInt d = abs(discriminant(f).get_num());
            const BigInt bq(static_cast<unsigned long>(q));
            while (d % bq == 0) d /= bq;
            EXPECT_EQ(d, 1) << "q=" << q;
        }
    }
}

TEST(MinPoly, ConstantTermConvention) {
    for (std::uint64_t q : {7ULL, 11ULL, 23ULL, 47ULL, 59ULL}) {
        const std::uint64_t p = (q - 1) / 2;
        EXPECT_EQ(min_poly_2cos(q, false).coeff(0), p % 4 == 1 ? 1 : -1) << q;
        EXPECT_EQ(min_poly_2cos(q, unit_constant_negate(q)).coeff(0), 1) << q;
    }
}

TEST(MultiplicativeOrder, Examples) {
    EXPECT_EQ(multiplicative_order(2, 3), 2U);
    EXPECT_EQ(multiplicative_order(2, 7), 3U);
    EXPECT_EQ(multiplicative_order(2, 11), 10U);
    EXPECT_THROW(multiplicative_order(2, 8), std::domain_error);
    EXPECT_THROW(multiplicative_order(3, 1), std::domain_error);
}

TEST(MultiplicativeOrder, AgreesWithDirectPoweringAndDividesPMinusOne) {
    for (std::uint64_t n : primes_up_to(400)) {
        if (n == 2) continue;
        for (std::int64_t a : {2, 3, 5, -1, 10}) {
            if (reduce_signed(a, n) == 0) continue;
            std::uint64_t k = 1, x = reduce_signed(a, n);
            while (x != 1) {
                x = mulmod(x, reduce_signed(a, n), n);
                ++k;
            }
            EXPECT_EQ(multiplicative_order(a, n), k);
            EXPECT_EQ((n - 1) % k, 0U);
        }
    }
}

TEST(RootIsolation, SquareRootOfTwo) {
    const RootIntervals r = isolate_real_roots(ints({-2, 0, 1}));
    ASSERT_EQ(r.size(), 2U);
    const auto lo = r.refined(r[0], BigRational(1, 1000)), hi = r.refined(r[1], BigRational(1, 1000));
    EXPECT_LE(lo.lo.get_d(), -std::sqrt(2.0));
    EXPECT_GE(lo.hi.get_d(), -std::sqrt(2.0));
    EXPECT_LE(hi.lo.get_d(), std::sqrt(2.0));
    EXPECT_GE(hi.hi.get_d(), std::sqrt(2.0));
    EXPECT_LE(hi.width(), BigRational(1, 1000));
}

TEST(RootIsolation, WashingtonOrdering) {
    const RootIntervals r = isolate_real_roots(washington_poly(143));
    ASSERT_EQ(r.size(), 3U);
    const BigRational w(1, 1000000);
    const auto a = r.refined(r[0], w), b = r.refined(r[1], w), c = r.refined(r[2], w);
    EXPECT_GT(a.midpoint(), -145);
    EXPECT_LT(a.midpoint(), -144);
    EXPECT_GT(b.midpoint(), 0);
    EXPECT_LT(b.midpoint(), 1);
    EXPECT_GT(c.midpoint(), 1);
    EXPECT_LT(c.midpoint(), 2);
}

TEST(RootIsolation, NegatedQuinticRoots) {
    const RationalPoly f = min_poly_2cos(11, true);
    const RootIntervals r = isolate_real_roots(f);
    const auto expect = testing::cyclotomic_conjugates(11, true);
    ASSERT_EQ(r.size(), 5U);
    const double approx[] = {-1.68, -0.83, 0.28, 1.31, 1.92};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto iv = r.refined(r[i], BigRational(1, 1000000));
        EXPECT_LE(iv.lo.get_d(), expect[i] + 1e-9);
        EXPECT_GE(iv.hi.get_d(), expect[i] - 1e-9);
        EXPECT_NEAR(iv.midpoint().get_d(), approx[i], 0.01);
    }
}

TEST(RootIsolation, RejectsNonSquarefree) {
    EXPECT_THROW(isolate_real_roots(ints({1, 2, 1})), std::domain_error);
}

TEST(RootIsolation, CountMatchesSturm) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const auto f = testing::random_poly(rng, 1 + t % 8, -20, 20, false);
        if (!is_squarefree(f)) continue;
        const RootIntervals r = isolate_real_roots(f);
        EXPECT_EQ(static_cast<int>(r.size()), count_real_roots(f));
        for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LE(r[i - 1].hi, r[i].lo);
    }
}

TEST(RationalPoly, DivmodAndGcdIdentities) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        const auto a = testing::random_poly(rng, 2 + t % 7, -9, 9, false);
        const auto b = testing::random_poly(rng, 1 + t % 4, -9, 9, false);
        const auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
        const auto [g, s, u] = xgcd(a, b);
        EXPECT_EQ(s * a + u * b, g);
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
    }
}

TEST(RationalPoly, Printing) {
    EXPECT_EQ(ints({1, -2, -1, 1}).coeff_string(), "1,-2,-1,1");
    EXPECT_EQ(ints({0, 1}).to_string(), "x");
    EXPECT_EQ(ints({-3, 0, 1}).to_string("t"), "t^2 - 3");
    EXPECT_EQ(RationalPoly{}.to_string(), "0");
}

}  // namespace
}  // namespace hjrank
