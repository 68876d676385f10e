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

#ifndef HJRANK_BOUNDS_BOUNDS_HPP
#define HJRANK_BOUNDS_BOUNDS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjrank/bounds/certificates.hpp"
#include "hjrank/bounds/records.hpp"
#include "hjrank/cyclo/signatures.hpp"
#include "hjrank/exact/cyclotomic.hpp"
#include "hjrank/exact/factor_q.hpp"
#include "hjrank/field/number_field.hpp"
#include "hjrank/field/square.hpp"

namespace hjrank {

/// No class-group record for the field; the message carries the field key.
class ClassGroupUnknown : public std::runtime_error {
public:
    explicit ClassGroupUnknown(const std::string& key)
        : std::runtime_error("class group unknown: poly=" + key), key_(key) {}

    [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

enum class RhoInfty { Zero, PMinusOne, Unknown };

inline const char* to_string(RhoInfty r) {
    switch (r) {
        case RhoInfty::Zero: return "0";
        case RhoInfty::PMinusOne: return "pm1";
        case RhoInfty::Unknown: return "unk";
    }
    return "?";
}

namespace hyp {
inline constexpr const char* kGTrivial = "G-trivial";
inline constexpr const char* kRhoZero = "rho-inf-0";
inline constexpr const char* kOrd2Even = "ord2-mod-p-even";
inline constexpr const char* kTwoInert = "2-inert-real-cyclotomic";
inline constexpr const char* kScan = "q-below-scan-bound";
inline constexpr const char* kDavisTaussky = "davis-taussky-assumed";
inline constexpr const char* kNarrowMissing = "narrow-data-missing";
inline constexpr const char* kNarrowSubstituted = "narrow-from-cl2";
inline constexpr const char* kLowerPartial = "lower-partial";
}  // namespace hyp

struct BoundReport {
    std::string curve;
    unsigned genus = 0;
    RhoInfty rho_infty = RhoInfty::Unknown;
    unsigned j_infty_bound = 0;
    unsigned cl2_used = 0;
    std::string cl2_source;
    unsigned g_kernel_dim = 0;
    unsigned upper_bound = 0;
    std::optional<unsigned> lower_bound;
    std::vector<std::string> hypotheses;

    [[nodiscard]] bool has(const std::string& h) const {
        return std::find(hypotheses.begin(), hypotheses.end(), h) != hypotheses.end();
    }

    /// Unconditional unless a conjecture was assumed.
    [[nodiscard]] bool unconditional() const { return !has(hyp::kDavisTaussky); }
};

/// curve=<key> g=<int> rho_inf=<0|pm1|unk> cl2=<int> upper=<int> [lower=<int>] hyps=<comma list or ->
inline std::string serialize(const BoundReport& r) {
    std::ostringstream os;
    os << "curve=" << r.curve << " g=" << r.genus << " rho_inf=" << to_string(r.rho_infty) << " cl2=" << r.cl2_used
       << " upper=" << r.upper_bound;
    if (r.lower_bound) os << " lower=" << *r.lower_bound;
    os << " hyps=";
    if (r.hypotheses.empty()) os << "-";
    for (std::size_t i = 0; i < r.hypotheses.size(); ++i) os << (i ? "," : "") << r.hypotheses[i];
    return os.str();
}

inline std::string describe(const BoundReport& r) {
    std::ostringstream os;
    os << "  curve " << r.curve << ": genus " << r.genus << "\n";
    os << "    rho_infty = " << (r.rho_infty == RhoInfty::Zero ? "0" : r.rho_infty == RhoInfty::PMinusOne ? "p-1" : "unknown")
       << ", j_infty <= " << r.j_infty_bound << "\n";
    os << "    2-rank term = " << r.cl2_used << " (" << r.cl2_source << "), kernel term = " << r.g_kernel_dim << "\n";
    os << "    rank <= " << r.upper_bound;
    if (r.lower_bound) os << ", rank >= " << *r.lower_bound;
    os << "\n";
    if (r.curve.rfind("wash-", 0) == 0) os << "    E(Q)[2] is trivial since f_m is irreducible\n";
    return os.str();
}

inline BoundReport parse_bound_report(const std::string& line, std::size_t lineno = 0) {
    BoundReport r;
    bool seen_curve = false, seen_g = false, seen_rho = false, seen_cl2 = false, seen_upper = false, seen_hyps = false;
    auto uint_of = [&](const std::string& key, const std::string& v) {
        auto x = detail::parse_int(v);
        if (!x || *x < 0) throw ParseError(lineno, "bad " + key + " value '" + v + "'");
        return static_cast<unsigned>(*x);
    };
    for (const auto& tok : detail::split_ws(line)) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected key=value, got '" + tok + "'");
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        bool* flag = nullptr;
        if (key == "curve") {
            if (val.empty()) throw ParseError(lineno, "empty curve key");
            r.curve = val;
            flag = &seen_curve;
        } else if (key == "g") {
            r.genus = uint_of(key, val);
            flag = &seen_g;
        } else if (key == "rho_inf") {
            if (val == "0") {
                r.rho_infty = RhoInfty::Zero;
            } else if (val == "pm1") {
                r.rho_infty = RhoInfty::PMinusOne;
            } else if (val == "unk") {
                r.rho_infty = RhoInfty::Unknown;
            } else {
                throw ParseError(lineno, "bad rho_inf '" + val + "'");
            }
            flag = &seen_rho;
        } else if (key == "cl2") {
            r.cl2_used = uint_of(key, val);
            flag = &seen_cl2;
        } else if (key == "upper") {
            r.upper_bound = uint_of(key, val);
            flag = &seen_upper;
        } else if (key == "lower") {
            if (r.lower_bound) throw ParseError(lineno, "duplicate lower=");
            r.lower_bound = uint_of(key, val);
        } else if (key == "hyps") {
            if (val != "-") r.hypotheses = detail::split(val, ',');
            flag = &seen_hyps;
        } else {
            throw ParseError(lineno, "unknown field '" + key + "'");
        }
        if (flag != nullptr) {
            if (*flag) throw ParseError(lineno, "duplicate " + key + "=");
            *flag = true;
        }
    }
    if (!(seen_curve && seen_g && seen_rho && seen_cl2 && seen_upper && seen_hyps)) {
        throw ParseError(lineno, "bound report needs curve=, g=, rho_inf=, cl2=, upper=, hyps=");
    }
    return r;
}

/// One report per non-blank, non-comment line; later lines may not redefine a curve differently.
inline std::vector<BoundReport> parse_bound_reports(std::istream& in) {
    std::vector<BoundReport> out;
    std::string line;
    std::size_t lineno = 0;
    std::map<std::string, std::size_t> index;
    while (detail::next_content_line(in, line, lineno)) {
        BoundReport r = parse_bound_report(line, lineno);
        auto it = index.find(r.curve);
        if (it != index.end()) {
            if (serialize(out[it->second]) != serialize(r)) throw ParseError(lineno, "conflicting duplicate for " + r.curve);
            continue;
        }
        index.emplace(r.curve, out.size());
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string washington_curve_key(std::int64_t m) { return "wash-m" + std::to_string(m); }
inline std::string sophie_curve_key(std::uint64_t q) { return "sophie-q" + std::to_string(q); }

/// rank E_m(Q) <= 1 + dim Cl(L_m)[2], with the G-triviality and rho_infty certificates checked.
inline BoundReport washington_bound(std::int64_t m, const ClassGroupStore& store) {
    const GTrivialityCertificate g = washington_local_certificate(m);
    if (!g.conclusion) throw CertificationFailure("G-triviality certificate failed at m=" + std::to_string(m));
    washington_rho_certificate(m);
    const RationalPoly f = washington_poly(m);
    const ClassGroupRecord* rec = store.find(f);
    if (rec == nullptr) throw ClassGroupUnknown(poly_key(f));
    BoundReport r;
    r.curve = washington_curve_key(m);
    r.genus = 1;
    r.rho_infty = RhoInfty::Zero;
    r.j_infty_bound = 1;
    r.cl2_used = rec->cl2_rank;
    r.cl2_source = "cl2 from " + rec->source;
    r.upper_bound = 1 + rec->cl2_rank;
    r.hypotheses = {hyp::kGTrivial, hyp::kRhoZero};
    return r;
}

struct LowerBoundResult {
    std::size_t lower_bound = 0;
    std::vector<RationalPoly> factors;  ///< monic irreducible factors of f - y0^2
    SquareClassSet classes;
    bool partial = false;
};

/// Rank lower bound from the delta-classes of the factors of f - y0^2.
inline LowerBoundResult lower_bound_from_points(const RationalPoly& f, const BigRational& y0 = 1,
                                                std::size_t cap = kIndependenceCap, const SquareOptions& opt = {}) {
    const FieldPtr L = NumberField::create(f);
    const RationalPoly h = f - RationalPoly::constant(y0 * y0);
    if (h.is_zero()) throw std::invalid_argument("lower_bound_from_points: f - y0^2 is zero");
    if (!is_squarefree(h)) throw std::invalid_argument("lower_bound_from_points: f - y0^2 is not squarefree");
    const QFactorization fac = factor_over_Q(h);
    std::vector<RationalPoly> factors;
    std::vector<FieldElement> reps;
    for (const auto& qf : fac.factors) {
        factors.push_back(qf.factor);
        if (L->element(qf.factor).is_zero()) continue;
        reps.push_back(delta_class_of_factor(qf.factor, y0, L));
    }
    SquareClassSet classes(L, std::move(reps));
    const IndependenceResult ind = independence_rank_detailed(classes, cap, opt);
    return {ind.rank, std::move(factors), std::move(classes), ind.partial};
}

struct SophieOptions {
    bool assume_davis_taussky = false;
    std::uint64_t scan_bound = 0;
    bool compute_lower = false;
    BigRational y0 = 1;
    std::size_t independence_cap = kIndependenceCap;
};

/// The defining polynomial used for keys and lower bounds: constant term 1.
inline RationalPoly sophie_field_poly(std::uint64_t q) { return min_poly_2cos(q, unit_constant_negate(q)); }

/// Upper bound for the Jacobian of y^2 = f(x) with f the minimal polynomial of +-2cos(2 pi / q).
inline BoundReport sophie_upper_bound(std::uint64_t q, const ClassGroupStore& store, const SophieOptions& opt = {}) {
    const auto pair = cyclo::SophieGermainPair::from_q(q);
    const std::uint64_t p = pair.p();
    const RationalPoly f = sophie_field_poly(q);
    const GTrivialityCertificate g = sophie_g_certificate(pair, f);
    if (!g.conclusion) throw CertificationFailure("G-triviality certificate failed at q=" + std::to_string(q));

    BoundReport r;
    r.curve = sophie_curve_key(q);
    r.genus = static_cast<unsigned>(pair.genus());
    r.hypotheses.push_back(hyp::kGTrivial);

    bool rho_zero = false;
    if (opt.assume_davis_taussky) {
        rho_zero = true;
        r.hypotheses.push_back(hyp::kDavisTaussky);
    }
    if (two_inert_in_real_cyclotomic(p)) {
        rho_zero = true;
        r.hypotheses.push_back(hyp::kTwoInert);
    }
    if (q <= opt.scan_bound && cyclo::certify_rho_infty(pair).rho_infty_zero) {
        rho_zero = true;
        r.hypotheses.push_back(hyp::kScan);
    }
    const bool ord2_even = multiplicative_order(2, p) % 2 == 0;
    if (ord2_even) r.hypotheses.push_back(hyp::kOrd2Even);

    const ClassGroupRecord* rec = store.find(f);
    if (rec == nullptr) rec = store.find(min_poly_2cos(q, !unit_constant_negate(q)));

    if (rho_zero) {
        r.rho_infty = RhoInfty::Zero;
        r.hypotheses.insert(r.hypotheses.begin() + 1, hyp::kRhoZero);
        r.j_infty_bound = r.genus;
        if (rec != nullptr) {
            r.cl2_used = rec->cl2_rank;
            r.cl2_source = "cl2 from " + rec->source;
        } else if (opt.assume_davis_taussky) {
            r.cl2_used = 0;
            r.cl2_source = "odd class number under the Davis-Taussky conjecture";
        } else {
            throw ClassGroupUnknown(poly_key(f));
        }
        r.upper_bound = r.genus + r.cl2_used;
    } else {
        if (rec == nullptr) throw ClassGroupUnknown(poly_key(f));
        r.rho_infty = RhoInfty::Unknown;
        r.j_infty_bound = static_cast<unsigned>(p - 1);
        if (rec->narrow_cl2_rank) {
            r.cl2_used = *rec->narrow_cl2_rank;
            r.cl2_source = "narrow cl2 from " + rec->source;
        } else if (ord2_even) {
            r.cl2_used = rec->cl2_rank;
            r.cl2_source = "cl2 equals narrow cl2 since ord2(p) is even; " + rec->source;
            r.hypotheses.push_back(hyp::kNarrowSubstituted);
        } else {
            r.cl2_used = rec->cl2_rank + static_cast<unsigned>(p - 1);
            r.cl2_source = "narrow cl2 <= rho_infty + cl2; " + rec->source;
            r.hypotheses.push_back(hyp::kNarrowMissing);
        }
        r.upper_bound = static_cast<unsigned>(p - 1) + r.cl2_used;
    }

    if (opt.compute_lower) {
        const LowerBoundResult lb = lower_bound_from_points(f, opt.y0, opt.independence_cap);
        r.lower_bound = static_cast<unsigned>(lb.lower_bound);
        if (lb.partial) r.hypotheses.push_back(hyp::kLowerPartial);
    }
    return r;
}

}  // namespace hjrank

#endif  // HJRANK_BOUNDS_BOUNDS_HPP
