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

#ifndef HJRANK_FIELD_NUMBER_FIELD_HPP
#define HJRANK_FIELD_NUMBER_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hjrank/exact/factor_q.hpp"
#include "hjrank/exact/integer.hpp"
#include "hjrank/exact/prime_poly.hpp"
#include "hjrank/exact/rational_poly.hpp"
#include "hjrank/exact/roots.hpp"
#include "hjrank/signature.hpp"

namespace hjrank {

class FieldElement;

/// Prime ideal (ell, theta - root) of residue degree one, ell odd and prime to disc(f).
struct DegreeOnePrime {
    std::uint64_t ell = 0;
    std::uint64_t root = 0;
};

inline constexpr std::size_t kDegreeOnePrimeCount = 64;
inline constexpr std::uint64_t kDegreeOnePrimeSearchLimit = 2'000'000;

/**
 * L = Q[T]/(f(T)) for a monic, integral, irreducible f of degree at least 2.
 * Instances are immutable and shared by the elements that live in them.
 */
class NumberField : public std::enable_shared_from_this<NumberField> {
    struct Token {};

public:
    NumberField(Token, RationalPoly f) : f_(std::move(f)) {
        if (f_.degree() < 2) throw std::invalid_argument("NumberField: degree must be at least 2");
        if (!f_.is_monic() || !f_.is_integral()) throw std::invalid_argument("NumberField: polynomial must be monic and integral");
        if (!is_irreducible_over_Q(f_)) throw std::invalid_argument("NumberField: polynomial is reducible over Q");
        disc_ = discriminant(f_).get_num();
        roots_ = RootIntervals(f_);
        power_sums_ = newton_power_sums(2 * static_cast<std::size_t>(f_.degree()));
        if (totally_real()) {
            root_modulus_bound_ = std::max(BigRational(abs(roots_[0].lo)), BigRational(abs(roots_[roots_.size() - 1].hi)));
        } else {
            root_modulus_bound_ = root_bound(f_);
        }
    }

    static std::shared_ptr<const NumberField> create(RationalPoly f) {
        return std::make_shared<const NumberField>(Token{}, std::move(f));
    }

    [[nodiscard]] const RationalPoly& poly() const noexcept { return f_; }
    [[nodiscard]] std::size_t degree() const noexcept { return static_cast<std::size_t>(f_.degree()); }
    [[nodiscard]] const BigInt& discriminant_value() const noexcept { return disc_; }
    [[nodiscard]] bool totally_real() const noexcept { return roots_.size() == degree(); }

    /// Isolating intervals of the real roots, ascending.
    [[nodiscard]] const RootIntervals& real_roots() const noexcept { return roots_; }

    /// Tr(theta^k) for 0 <= k <= 2 * degree.
    [[nodiscard]] const BigInt& power_sum(std::size_t k) const { return power_sums_.at(k); }

    /// Upper bound on |r| over all complex roots r of f.
    [[nodiscard]] const BigRational& root_modulus_bound() const noexcept { return root_modulus_bound_; }

    /// Inverse of the trace form matrix (Tr(theta^(j+k)))_{j,k}, computed on first use.
    [[nodiscard]] const std::vector<std::vector<BigRational>>& trace_form_inverse() const {
        std::call_once(lazy_->trace_once, [this] { lazy_->trace_inv = invert_trace_form(); });
        return lazy_->trace_inv;
    }

    /// The first kDegreeOnePrimeCount degree-one primes (fewer if the search limit is hit), by (ell, root).
    [[nodiscard]] const std::vector<DegreeOnePrime>& degree_one_primes() const {
        std::call_once(lazy_->primes_once, [this] { lazy_->primes = find_degree_one_primes(); });
        return lazy_->primes;
    }

    [[nodiscard]] FieldElement element(const RationalPoly& a) const;
    [[nodiscard]] FieldElement element(std::vector<BigRational> coords) const;
    [[nodiscard]] FieldElement constant(const BigRational& c) const;
    [[nodiscard]] FieldElement theta() const;

private:
    struct Lazy {
        std::once_flag trace_once;
        std::vector<std::vector<BigRational>> trace_inv;
        std::once_flag primes_once;
        std::vector<DegreeOnePrime> primes;
    };

    std::vector<std::vector<BigRational>> invert_trace_form() const {
        const std::size_t n = degree();
        std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n));
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) a[j][k] = power_sums_[j + k];
            a[j][n + j] = 1;
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (a[piv][c] == 0) ++piv;
            std::swap(a[piv], a[c]);
            const BigRational inv = 1 / a[c][c];
            for (auto& v : a[c]) v *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || a[r][c] == 0) continue;
                const BigRational t = a[r][c];
                for (std::size_t k = c; k < 2 * n; ++k) a[r][k] -= t * a[c][k];
            }
        }
        std::vector<std::vector<BigRational>> inv(n);
        for (std::size_t j = 0; j < n; ++j) inv[j].assign(a[j].begin() + static_cast<std::ptrdiff_t>(n), a[j].end());
        return inv;
    }

    std::vector<DegreeOnePrime> find_degree_one_primes() const {
        std::vector<DegreeOnePrime> out;
        for (std::uint64_t ell = 3; ell < kDegreeOnePrimeSearchLimit && out.size() < kDegreeOnePrimeCount;
             ell = next_prime(ell + 1)) {
            if (mpz_divisible_ui_p(disc_.get_mpz_t(), ell) != 0) continue;
            for (auto r : roots_mod_p(PrimePoly::reduce(f_, ell))) {
                out.push_back({ell, r});
                if (out.size() == kDegreeOnePrimeCount) break;
            }
        }
        return out;
    }

    std::vector<BigInt> newton_power_sums(std::size_t kmax) const {
        const std::size_t n = degree();
        std::vector<BigInt> a(n + 1);
        for (std::size_t i = 0; i <= n; ++i) a[i] = f_.coeff(i).get_num();
        std::vector<BigInt> s(kmax + 1);
        s[0] = static_cast<unsigned long>(n);
        for (std::size_t k = 1; k <= kmax; ++k) {
            BigInt acc = 0;
            for (std::size_t j = 1; j <= std::min(k - 1, n); ++j) acc += a[n - j] * s[k - j];
            if (k <= n) acc += BigInt(static_cast<unsigned long>(k)) * a[n - k];
            s[k] = -acc;
        }
        return s;
    }

    RationalPoly f_;
    BigInt disc_;
    RootIntervals roots_;
    std::vector<BigInt> power_sums_;
    BigRational root_modulus_bound_;
    std::unique_ptr<Lazy> lazy_ = std::make_unique<Lazy>();
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of L in the power basis 1, theta, ..., theta^(n-1).
class FieldElement {
public:
    FieldElement(FieldPtr field, RationalPoly rep) : field_(std::move(field)) {
        if (!field_) throw std::invalid_argument("FieldElement: null field");
        rep_ = rep.degree() >= static_cast<int>(field_->degree()) ? rep % field_->poly() : std::move(rep);
    }

    [[nodiscard]] const FieldPtr& field() const noexcept { return field_; }
    [[nodiscard]] const RationalPoly& poly() const noexcept { return rep_; }
    [[nodiscard]] bool is_zero() const noexcept { return rep_.is_zero(); }
    [[nodiscard]] bool is_one() const { return rep_.degree() == 0 && rep_.coeff(0) == 1; }

    /// Exactly degree() coordinates, zero-padded.
    [[nodiscard]] std::vector<BigRational> coords() const {
        std::vector<BigRational> c(field_->degree());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = rep_.coeff(i);
        return c;
    }

    /// Least common multiple of the coordinate denominators.
    [[nodiscard]] BigInt denominator() const { return rep_.is_zero() ? BigInt(1) : rep_.denominator_lcm(); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.rep_ + b.rep_};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.rep_ - b.rep_};
    }
    friend FieldElement operator-(const FieldElement& a) { return {a.field_, -a.rep_}; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.rep_ * b.rep_};
    }
    friend FieldElement operator*(const FieldElement& a, const BigRational& s) { return {a.field_, a.rep_ * s}; }

    [[nodiscard]] FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("FieldElement: division by zero");
        auto [g, s, t] = xgcd(rep_, field_->poly());
        if (g.degree() != 0) throw std::logic_error("FieldElement: representative shares a factor with f");
        return {field_, s};
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return a * b.inverse();
    }

    [[nodiscard]] FieldElement pow(unsigned long e) const {
        FieldElement r = field_->constant(1), b = *this;
        while (e != 0) {
            if ((e & 1U) != 0) r = r * b;
            e >>= 1;
            if (e != 0) b = b * b;
        }
        return r;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_->poly() == b.field_->poly() && a.rep_ == b.rep_;
    }

    [[nodiscard]] std::string to_string() const { return rep_.is_zero() ? "0" : rep_.to_string("t"); }

private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (a.field_ != b.field_ && a.field_->poly() != b.field_->poly()) {
            throw std::invalid_argument("FieldElement: operands live in different fields");
        }
    }

    FieldPtr field_;
    RationalPoly rep_;
};

inline FieldElement NumberField::element(const RationalPoly& a) const { return {shared_from_this(), a}; }
inline FieldElement NumberField::element(std::vector<BigRational> coords) const {
    return {shared_from_this(), RationalPoly(std::move(coords))};
}
inline FieldElement NumberField::constant(const BigRational& c) const { return {shared_from_this(), RationalPoly::constant(c)}; }
inline FieldElement NumberField::theta() const { return {shared_from_this(), RationalPoly::x()}; }

/// N(a) = Res(f, a~) for monic f.
inline BigRational norm(const FieldElement& a) { return resultant(a.field()->poly(), a.poly()); }

inline BigRational trace(const FieldElement& a) {
    BigRational t = 0;
    const auto& c = a.poly().coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) t += c[k] * BigRational(a.field()->power_sum(k));
    return t;
}

namespace detail {

/// Sign of a(r) for the real root r isolated by `iv`; refines a local copy until decided.
inline int sign_at_root(const RationalPoly& a, const RootIntervals& roots, RootInterval iv) {
    const auto& c = a.coeffs();
    for (;;) {
        const BigRational m = iv.midpoint();
        const BigRational w = iv.width() / 2;
        const BigRational val = a.eval(m);
        // |a(r) - a(m)| <= sum |c_k| ((|m| + w)^k - |m|^k) for |r - m| <= w.
        const BigRational am = abs(m);
        BigRational pm = 1, pw = 1, bound = 0;
        for (std::size_t k = 1; k < c.size(); ++k) {
            pm *= am;
            pw *= am + w;
            bound += abs(c[k]) * (pw - pm);
        }
        if (abs(val) > bound) return sgn(val) > 0 ? 1 : -1;
        if (iv.lo == iv.hi) return sgn(val) > 0 ? 1 : (sgn(val) < 0 ? -1 : 0);
        iv = roots.refined(iv, iv.width() / 2);
    }
}

}  // namespace detail

/// Signs of a under the real embeddings, ascending by root; any field.
inline SignatureVector real_signs(const FieldElement& a) {
    if (a.is_zero()) throw std::domain_error("signature: zero element");
    const auto& roots = a.field()->real_roots();
    std::vector<int> s(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) s[i] = detail::sign_at_root(a.poly(), roots, roots[i]);
    return SignatureVector(std::move(s));
}

/// Signature of a nonzero element of a totally real field.
inline SignatureVector signature(const FieldElement& a) {
    if (!a.field()->totally_real()) throw std::domain_error("signature: field is not totally real");
    return real_signs(a);
}

}  // namespace hjrank

#endif  // HJRANK_FIELD_NUMBER_FIELD_HPP
