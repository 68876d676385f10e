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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hjrank/hjrank.hpp"

namespace hjrank::cli {
namespace {

unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

/// Evaluates fn(0..n-1) on `threads` workers; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned threads, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) out[i] = fn(i);
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return out;
}

/// "a..b" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    const auto lo = detail::parse_int(dots == std::string::npos ? s : s.substr(0, dots));
    const auto hi = dots == std::string::npos ? lo : detail::parse_int(s.substr(dots + 2));
    if (!lo || !hi || *lo > *hi) throw std::invalid_argument("bad range '" + s + "'");
    return {*lo, *hi};
}

BigRational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    const auto num = detail::parse_bigint(s.substr(0, slash));
    std::optional<BigInt> den = BigInt(1);
    if (slash != std::string::npos) den = detail::parse_bigint(s.substr(slash + 1));
    if (!num || !den || *den == 0) throw std::invalid_argument("bad rational '" + s + "'");
    BigRational r(*num, *den);
    r.canonicalize();
    return r;
}

RationalPoly parse_poly(const std::string& s) {
    std::vector<BigInt> c;
    for (const auto& part : detail::split(s, ',')) {
        auto v = detail::parse_bigint(detail::trim_view(part));
        if (!v) throw std::invalid_argument("bad coefficient '" + part + "'");
        c.push_back(*v);
    }
    return RationalPoly::from_integers(c);
}

ClassGroupStore load_store(const std::string& path) { return path.empty() ? ClassGroupStore{} : ingest_class_groups(path); }

struct Outcome {
    std::string line;
    std::string prose;
    std::string error;
    int code = kOk;
};

int cmd_minpoly(std::uint64_t q, const std::string& sign, const std::string& format, std::ostream& out) {
    const bool negate = sign == "auto" ? unit_constant_negate(q) : sign == "minus";
    const RationalPoly f = min_poly_2cos(q, negate);
    out << (format == "coeffs" ? f.coeff_string() : f.to_string()) << "\n";
    return kOk;
}

int cmd_scan_rho(std::uint64_t max_q, unsigned threads, std::ostream& out) {
    const auto certs = cyclo::scan_sophie_germain(max_q, threads);
    std::size_t failed = 0;
    for (const auto& c : certs) {
        out << c.pair.q() << " " << c.pair.p() << " " << c.d_infty << " " << (c.rho_infty_zero ? "true" : "false") << "\n";
        if (!c.rho_infty_zero) ++failed;
    }
    if (certs.empty()) return kOk;
    out << "# pairs=" << certs.size() << " certified=" << certs.size() - failed << " failed=" << failed << "\n";
    return failed == 0 ? kOk : kCertificationFailure;
}

int cmd_washington(const std::string& range, const std::string& clg, bool verbose, unsigned threads, std::ostream& out,
                   std::ostream& err) {
    const auto [lo, hi] = parse_range(range);
    if (lo < 0) throw std::invalid_argument("m must be non-negative");
    const ClassGroupStore store = load_store(clg);
    std::vector<std::int64_t> ms;
    for (std::int64_t m = lo; m <= hi; ++m) {
        if (washington_in_family(m)) ms.push_back(m);
    }
    const auto results = parallel_map<Outcome>(ms.size(), threads, [&](std::size_t i) {
        Outcome o;
        try {
            const BoundReport r = washington_bound(ms[i], store);
            o.line = serialize(r);
            o.prose = describe(r);
        } catch (const ClassGroupUnknown& e) {
            o.error = "m=" + std::to_string(ms[i]) + " " + e.what();
            o.code = kPartial;
        } catch (const CertificationFailure& e) {
            o.error = "m=" + std::to_string(ms[i]) + " " + e.what();
            o.code = kCertificationFailure;
        }
        return o;
    });
    int code = kOk;
    std::vector<std::string> missing;
    for (const auto& o : results) {
        if (!o.line.empty()) out << o.line << "\n";
        if (verbose && !o.prose.empty()) out << o.prose;
        if (!o.error.empty()) missing.push_back(o.error);
        code = std::max(code, o.code);
    }
    for (const auto& e : missing) err << "error: " << e << "\n";
    return code;
}

int cmd_sophie(const std::vector<std::uint64_t>& qs, const std::string& clg, const SophieOptions& opt, bool table,
               bool verbose, unsigned threads, std::ostream& out, std::ostream& err) {
    const ClassGroupStore store = load_store(clg);
    std::vector<std::optional<BoundReport>> reports(qs.size());
    const auto results = parallel_map<Outcome>(qs.size(), threads, [&](std::size_t i) {
        Outcome o;
        const std::string tag = "q=" + std::to_string(qs[i]) + " ";
        try {
            const BoundReport r = sophie_upper_bound(qs[i], store, opt);
            o.line = serialize(r);
            o.prose = describe(r);
            reports[i] = r;
            if (r.has(hyp::kLowerPartial)) o.code = kPartial;
        } catch (const ClassGroupUnknown& e) {
            o.error = tag + e.what();
            o.code = kPartial;
        } catch (const SquarenessUndetermined& e) {
            o.error = tag + e.what();
            o.code = kPartial;
        } catch (const CertificationFailure& e) {
            o.error = tag + e.what();
            o.code = kCertificationFailure;
        } catch (const std::invalid_argument& e) {
            o.error = tag + e.what();
            o.code = kInvalidInput;
        }
        return o;
    });
    int code = kOk;
    for (const auto& o : results) {
        if (!o.line.empty()) out << o.line << "\n";
        if (verbose && !o.prose.empty()) out << o.prose;
        code = std::max(code, o.code);
    }
    if (table) {
        std::string rows[3] = {"p    ", "upper", "lower"};
        char buf[32];
        for (const auto& r : reports) {
            if (!r) continue;
            const std::uint64_t q = std::stoull(r->curve.substr(8));
            std::snprintf(buf, sizeof buf, " %5llu", static_cast<unsigned long long>((q - 1) / 2));
            rows[0] += buf;
            std::snprintf(buf, sizeof buf, " %5u", r->upper_bound);
            rows[1] += buf;
            if (r->lower_bound) {
                std::snprintf(buf, sizeof buf, " %5u", *r->lower_bound);
            } else {
                std::snprintf(buf, sizeof buf, " %5s", "-");
            }
            rows[2] += buf;
        }
        for (const auto& row : rows) out << row << "\n";
    }
    for (const auto& o : results) {
        if (!o.error.empty()) err << "error: " << o.error << "\n";
    }
    return code;
}

int cmd_lower_bound(const std::string& poly, const std::string& y0s, std::size_t cap, std::ostream& out) {
    const RationalPoly f = parse_poly(poly);
    const BigRational y0 = parse_rational(y0s);
    const LowerBoundResult lb = lower_bound_from_points(f, y0, cap);
    out << "lower=" << lb.lower_bound << " factors=" << lb.factors.size() << " classes=" << lb.classes.size()
        << (lb.partial ? " partial=true" : "") << "\n";
    for (const auto& g : lb.factors) out << "factor " << g.to_string() << "\n";
    for (const auto& c : lb.classes.representatives()) out << "class " << c.to_string() << "\n";
    return lb.partial ? kPartial : kOk;
}

int cmd_stats(const std::string& ranks_path, const std::string& bounds_path, const std::string& intervals, std::ostream& out) {
    const RankStore ranks = ingest_rank_data(ranks_path);
    std::ifstream bin(bounds_path);
    if (!bin) throw std::runtime_error("cannot open bounds file: " + bounds_path);
    const auto bounds = washington_bounds_by_m(parse_bound_reports(bin));
    out << format_stats(sharpness_stats(ranks, bounds, parse_intervals(intervals)));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank bounds for Jacobians of y^2 = f(x) over totally real cyclic fields"};
    app.require_subcommand(1);

    unsigned threads = default_threads();
    bool verbose = false;

    auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of +-(zeta_q + zeta_q^-1)");
    std::uint64_t mp_q = 0;
    std::string mp_sign = "auto", mp_format = "pretty";
    minpoly->add_option("--q", mp_q, "prime q >= 5")->required();
    minpoly->add_option("--sign", mp_sign, "auto (constant term 1), plus, or minus")
        ->check(CLI::IsMember({"auto", "plus", "minus"}));
    minpoly->add_option("--format", mp_format, "pretty or coeffs (ascending)")->check(CLI::IsMember({"pretty", "coeffs"}));

    auto* scan = app.add_subcommand("scan-rho", "Certify rho_infty = 0 for all Sophie Germain pairs up to a bound");
    std::uint64_t scan_max = 0;
    scan->add_option("--max-q", scan_max, "largest q")->required();
    scan->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    auto* wash = app.add_subcommand("washington", "Upper bounds for the simplest cubic family");
    std::string wash_range, wash_clg;
    wash->add_option("--m", wash_range, "a..b or a single m")->required();
    wash->add_option("--clgroups", wash_clg, "class-group file");
    wash->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    wash->add_flag("--verbose", verbose, "human-readable block after each report");

    auto* sophie = app.add_subcommand("sophie", "Upper (and optionally lower) bounds for q = 2p + 1");
    std::vector<std::uint64_t> sophie_q;
    std::string sophie_clg, sophie_y0 = "1";
    bool sophie_lower = false, sophie_table = false;
    SophieOptions sopt;
    sopt.scan_bound = 92459;
    sophie->add_option("--q", sophie_q, "comma-separated primes q")->required()->delimiter(',');
    sophie->add_option("--clgroups", sophie_clg, "class-group file");
    sophie->add_flag("--lower", sophie_lower, "also compute a lower bound from points");
    sophie->add_flag("--table", sophie_table, "print a p / upper / lower summary table");
    sophie->add_flag("--assume-davis-taussky", sopt.assume_davis_taussky, "assume the Davis-Taussky conjecture");
    sophie->add_option("--scan-bound", sopt.scan_bound, "certify rho_infty directly when q is at most this bound");
    sophie->add_option("--y0", sophie_y0, "rational y0 for the lower bound (default 1)");
    sophie->add_option("--cap", sopt.independence_cap, "maximum number of classes in the independence sweep");
    sophie->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sophie->add_flag("--verbose", verbose, "human-readable block after each report");

    auto* lower = app.add_subcommand("lower-bound", "Rank lower bound from the factors of f - y0^2");
    std::string lb_poly, lb_y0 = "1";
    std::size_t lb_cap = kIndependenceCap;
    lower->add_option("--poly", lb_poly, "ascending integer coefficients c0,c1,...,1")->required();
    lower->add_option("--y0", lb_y0, "rational y0 (default 1)");
    lower->add_option("--cap", lb_cap, "maximum number of classes in the independence sweep");

    auto* stats = app.add_subcommand("stats", "Sharpness statistics for the simplest cubic family");
    std::string st_ranks, st_bounds, st_intervals = "1..20000/1000";
    stats->add_option("--ranks", st_ranks, "rank-data file")->required();
    stats->add_option("--bounds", st_bounds, "bound reports (output of washington)")->required();
    stats->add_option("--intervals", st_intervals, "a..b[/width][,c..d...]");

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalidInput;
    }

    try {
        if (*minpoly) return cmd_minpoly(mp_q, mp_sign, mp_format, out);
        if (*scan) return cmd_scan_rho(scan_max, threads, out);
        if (*wash) return cmd_washington(wash_range, wash_clg, verbose, threads, out, err);
        if (*sophie) {
            sopt.compute_lower = sophie_lower;
            sopt.y0 = parse_rational(sophie_y0);
            return cmd_sophie(sophie_q, sophie_clg, sopt, sophie_table, verbose, threads, out, err);
        }
        if (*lower) return cmd_lower_bound(lb_poly, lb_y0, lb_cap, out);
        if (*stats) return cmd_stats(st_ranks, st_bounds, st_intervals, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const SquarenessUndetermined& e) {
        err << "error: " << e.what() << "\n";
        return kPartial;
    } catch (const CertificationFailure& e) {
        err << "error: " << e.what() << "\n";
        return kCertificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace hjrank::cli
