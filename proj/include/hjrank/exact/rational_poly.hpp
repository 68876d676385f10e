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

#ifndef HJRANK_EXACT_RATIONAL_POLY_HPP
#define HJRANK_EXACT_RATIONAL_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hjrank/exact/integer.hpp"

namespace hjrank {

/**
 * Dense univariate polynomial over Q, coefficients in ascending degree.
 *
 * The coefficient vector never carries trailing zeros, so the zero
 * polynomial is the empty vector and degree() is -1 for it.
 */
class RationalPoly {
public:
    RationalPoly() = default;

    explicit RationalPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
        for (auto& x : c_) x.canonicalize();
        trim();
    }

    RationalPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static RationalPoly from_integers(const std::vector<BigInt>& coeffs) {
        std::vector<BigRational> c(coeffs.begin(), coeffs.end());
        return RationalPoly(std::move(c));
    }

    static RationalPoly constant(const BigRational& v) { return RationalPoly(std::vector<BigRational>{v}); }

    static RationalPoly monomial(const BigRational& v, std::size_t deg) {
        std::vector<BigRational> c(deg + 1);
        c[deg] = v;
        return RationalPoly(std::move(c));
    }

    static RationalPoly x() { return monomial(1, 1); }

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] const std::vector<BigRational>& coeffs() const noexcept { return c_; }

    /// Coefficient of x^i; zero past the degree.
    [[nodiscard]] BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }

    [[nodiscard]] const BigRational& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    [[nodiscard]] bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(), [](const BigRational& v) { return v.get_den() == 1; });
    }

    [[nodiscard]] RationalPoly monic() const {
        if (is_zero()) return *this;
        return *this / lc();
    }

    [[nodiscard]] BigRational eval(const BigRational& x) const {
        BigRational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    [[nodiscard]] RationalPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigRational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
        return RationalPoly(std::move(d));
    }

    /// p(x + shift).
    [[nodiscard]] RationalPoly shifted(const BigRational& shift) const {
        std::vector<BigRational> r = c_;
        const std::size_t n = r.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = n - 1; j > i; --j) r[j - 1] += shift * r[j];
        }
        return RationalPoly(std::move(r));
    }

    /// p(-x).
    [[nodiscard]] RationalPoly reflected() const {
        std::vector<BigRational> r = c_;
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return RationalPoly(std::move(r));
    }

    /// Lowest common denominator of the coefficients.
    [[nodiscard]] BigInt denominator_lcm() const {
        BigInt d = 1;
        for (const auto& v : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
        return d;
    }

    /// Integer coefficients of c * p where c > 0 makes them coprime.
    [[nodiscard]] std::vector<BigInt> primitive_integer_coeffs() const {
        const BigInt den = denominator_lcm();
        std::vector<BigInt> out;
        out.reserve(c_.size());
        BigInt g = 0;
        for (const auto& v : c_) {
            BigInt z = v.get_num() * (den / v.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
            out.push_back(std::move(z));
        }
        if (g > 1) {
            for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
        }
        return out;
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return RationalPoly(std::move(r));
    }

    friend RationalPoly operator-(const RationalPoly& a) {
        std::vector<BigRational> r = a.c_;
        for (auto& v : r) v = -v;
        return RationalPoly(std::move(r));
    }

    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return RationalPoly(std::move(r));
    }

    friend RationalPoly operator*(const RationalPoly& a, const BigRational& s) {
        if (s == 0) return {};
        std::vector<BigRational> r = a.c_;
        for (auto& v : r) v *= s;
        return RationalPoly(std::move(r));
    }

    friend RationalPoly operator/(const RationalPoly& a, const BigRational& s) {
        if (s == 0) throw std::domain_error("RationalPoly: division by zero scalar");
        std::vector<BigRational> r = a.c_;
        for (auto& v : r) v /= s;
        return RationalPoly(std::move(r));
    }

    RationalPoly& operator+=(const RationalPoly& o) { return *this = *this + o; }
    RationalPoly& operator-=(const RationalPoly& o) { return *this = *this - o; }
    RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }

    /// Lexicographic on (degree, coefficients from the constant term up).
    friend bool operator<(const RationalPoly& a, const RationalPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    /// Human-readable form, e.g. "x^3 - x^2 - 2x + 1".
    [[nodiscard]] std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const BigRational& v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            const BigRational mag = abs(v);
            if (first) {
                if (v < 0) os << "-";
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0 || mag != 1) os << mag.get_str();
            if (i >= 1) os << var;
            if (i >= 2) os << "^" << i;
        }
        return os.str();
    }

    /// Comma-separated ascending coefficients, e.g. "1,-2,-1,1".
    [[nodiscard]] std::string coeff_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i != 0) s += ",";
            s += c_[i].get_str();
        }
        return s.empty() ? "0" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigRational> c_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw std::domain_error("RationalPoly: division by zero polynomial");
    if (a.degree() < b.degree()) return {RationalPoly{}, a};
    std::vector<BigRational> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<BigRational> quot(rem.size() - db);
    const BigRational inv_lc = 1 / bc.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigRational t = rem[k + db] * inv_lc;
        if (t != 0) {
            for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= t * bc[j];
        }
        quot[k] = std::move(t);
    }
    rem.resize(db);
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

inline RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

/// Exact quotient; throws if b does not divide a.
inline RationalPoly exact_div(const RationalPoly& a, const RationalPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("RationalPoly: inexact division");
    return q;
}

/// Monic gcd (zero if both inputs are zero).
inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        RationalPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<RationalPoly, RationalPoly, RationalPoly> xgcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r0 = a, r1 = b;
    RationalPoly s0 = RationalPoly::constant(1), s1;
    RationalPoly t0, t1 = RationalPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const BigRational l = r0.lc();
    return {r0 / l, s0 / l, t0 / l};
}

/**
 * Resultant Res(a, b) = lc(a)^deg(b) * prod b(r) over the roots r of a.
 * Computed by the Euclidean recurrence over Q.
 */
inline BigRational resultant(RationalPoly a, RationalPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    BigRational res = 1;
    while (b.degree() > 0) {
        const int da = a.degree(), db = b.degree();
        RationalPoly r = a % b;
        if (r.is_zero()) return 0;
        if ((da % 2 == 1) && (db % 2 == 1)) res = -res;
        const int dr = r.degree();
        BigRational lcb = b.lc();
        BigRational factor = 1;
        for (int i = 0; i < da - dr; ++i) factor *= lcb;
        res *= factor;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant.
    BigRational factor = 1;
    for (int i = 0; i < a.degree(); ++i) factor *= b.lc();
    return res * factor;
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline BigRational discriminant(const RationalPoly& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant: constant polynomial");
    const long n = f.degree();
    BigRational r = resultant(f, f.derivative()) / f.lc();
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

/// Yun's squarefree decomposition of a nonzero polynomial: monic parts with multiplicities.
inline std::vector<std::pair<RationalPoly, unsigned>> squarefree_decomposition(const RationalPoly& f) {
    std::vector<std::pair<RationalPoly, unsigned>> out;
    if (f.degree() < 1) return out;
    const RationalPoly fm = f.monic();
    const RationalPoly d = fm.derivative();
    RationalPoly a = gcd(fm, d);
    RationalPoly b = exact_div(fm, a);
    RationalPoly c = exact_div(d, a);
    RationalPoly e = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        RationalPoly g = gcd(b, e);
        if (g.degree() > 0) out.emplace_back(g, i);
        RationalPoly nb = exact_div(b, g);
        c = exact_div(e, g);
        b = std::move(nb);
        e = c - b.derivative();
        ++i;
    }
    return out;
}

inline bool is_squarefree(const RationalPoly& f) { return gcd(f, f.derivative()).degree() <= 0; }

}  // namespace hjrank

#endif  // HJRANK_EXACT_RATIONAL_POLY_HPP
