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

#ifndef HJRANK_BOUNDS_STATS_HPP
#define HJRANK_BOUNDS_STATS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjrank/bounds/bounds.hpp"
#include "hjrank/bounds/certificates.hpp"
#include "hjrank/bounds/records.hpp"

namespace hjrank {

struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * "a..b" ranges separated by commas; "a..b/w" splits [a, b] into
 * consecutive blocks of width w (the last may be shorter). Intervals must be
 * non-empty and pairwise disjoint.
 */
inline std::vector<Interval> parse_intervals(const std::string& spec) {
    std::vector<Interval> out;
    for (const auto& part : detail::split(spec, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) throw std::invalid_argument("interval '" + part + "': expected a..b");
        const auto slash = part.find('/', dots);
        const auto lo = detail::parse_int(part.substr(0, dots));
        const auto hi = detail::parse_int(part.substr(dots + 2, slash == std::string::npos ? std::string::npos : slash - dots - 2));
        if (!lo || !hi || *lo > *hi) throw std::invalid_argument("interval '" + part + "': malformed bounds");
        if (slash == std::string::npos) {
            out.push_back({*lo, *hi});
            continue;
        }
        const auto w = detail::parse_int(part.substr(slash + 1));
        if (!w || *w <= 0) throw std::invalid_argument("interval '" + part + "': bad block width");
        for (std::int64_t a = *lo; a <= *hi; a += *w) out.push_back({a, std::min(*hi, a + *w - 1)});
    }
    std::vector<Interval> sorted = out;
    std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].lo <= sorted[i - 1].hi) throw std::invalid_argument("intervals overlap");
    }
    if (out.empty()) throw std::invalid_argument("no intervals given");
    return out;
}

struct SharpRow {
    Interval interval;
    std::size_t members = 0;  ///< #(M cap I)
    std::size_t sharp = 0;    ///< #(S cap I)

    [[nodiscard]] double ratio() const { return members == 0 ? 0.0 : static_cast<double>(sharp) / static_cast<double>(members); }
};

struct CrossRow {
    unsigned bound = 0;
    std::map<unsigned, std::size_t> by_rank;  ///< #(T(r) cap B(b)), exact ranks only
    std::size_t total = 0;                    ///< #B(b) among exact records

    [[nodiscard]] std::size_t sharp() const {
        auto it = by_rank.find(bound);
        return it == by_rank.end() ? 0 : it->second;
    }
    [[nodiscard]] double ratio() const { return total == 0 ? 0.0 : static_cast<double>(sharp()) / static_cast<double>(total); }
};

struct FirstOccurrence {
    unsigned rank = 0;
    unsigned bound = 0;
    std::int64_t m = 0;
};

struct SharpnessStats {
    std::vector<SharpRow> sharp;
    std::vector<unsigned> ranks;  ///< ranks occurring among exact records, ascending
    std::vector<CrossRow> cross;
    std::vector<FirstOccurrence> first;
};

/// Washington bounds keyed by m, from reports whose curve key is wash-m<m>.
inline std::map<std::int64_t, unsigned> washington_bounds_by_m(const std::vector<BoundReport>& reports) {
    std::map<std::int64_t, unsigned> out;
    for (const auto& r : reports) {
        if (r.curve.rfind("wash-m", 0) != 0) continue;
        const auto m = detail::parse_int(r.curve.substr(6));
        if (!m) throw std::invalid_argument("bad curve key " + r.curve);
        out[*m] = r.upper_bound;
    }
    return out;
}

/**
 * M cap I counts every m in I with m^2 + 3m + 9 square-free; S holds the m
 * whose rank is known exactly and equals the bound. Bounds-only records are
 * members of M but never of S.
 */
inline SharpnessStats sharpness_stats(const RankStore& ranks, const std::map<std::int64_t, unsigned>& bounds,
                                      const std::vector<Interval>& intervals) {
    for (const auto& [m, rec] : ranks) {
        if (!washington_in_family(m)) throw std::invalid_argument("rank record m=" + std::to_string(m) + " is outside the family");
        if (!bounds.contains(m)) throw std::invalid_argument("no bound report for m=" + std::to_string(m));
    }
    SharpnessStats st;
    for (const auto& I : intervals) {
        SharpRow row{I, 0, 0};
        for (std::int64_t m = std::max<std::int64_t>(I.lo, 0); m <= I.hi; ++m) {
            if (!washington_in_family(m)) continue;
            ++row.members;
            auto it = ranks.find(m);
            if (it != ranks.end() && it->second.status == RankStatus::Exact &&
                it->second.lo == static_cast<std::int64_t>(bounds.at(m))) {
                ++row.sharp;
            }
        }
        st.sharp.push_back(row);
    }
    std::set<unsigned> rank_set;
    std::map<unsigned, CrossRow> cross;
    std::map<std::pair<unsigned, unsigned>, std::int64_t> first;
    for (const auto& [m, rec] : ranks) {
        if (rec.status != RankStatus::Exact) continue;
        const auto r = static_cast<unsigned>(rec.lo);
        const unsigned b = bounds.at(m);
        rank_set.insert(r);
        CrossRow& row = cross[b];
        row.bound = b;
        ++row.by_rank[r];
        ++row.total;
        first.emplace(std::make_pair(r, b), m);  // ranks is ordered by m, so the first insert is the minimum
    }
    st.ranks.assign(rank_set.begin(), rank_set.end());
    for (auto& [b, row] : cross) st.cross.push_back(row);
    for (const auto& [rb, m] : first) st.first.push_back({rb.first, rb.second, m});
    return st;
}

inline std::string format_stats(const SharpnessStats& st) {
    std::string out;
    char buf[128];
    out += "# sharpness\n";
    std::snprintf(buf, sizeof buf, "%-17s %8s %8s %8s\n", "interval", "members", "sharp", "ratio");
    out += buf;
    for (const auto& row : st.sharp) {
        const std::string iv = "[" + std::to_string(row.interval.lo) + "," + std::to_string(row.interval.hi) + "]";
        std::snprintf(buf, sizeof buf, "%-17s %8zu %8zu %8.5f\n", iv.c_str(), row.members, row.sharp, row.ratio());
        out += buf;
    }
    out += "# rank-by-bound\n";
    std::snprintf(buf, sizeof buf, "%-6s", "b");
    out += buf;
    for (unsigned r : st.ranks) {
        std::snprintf(buf, sizeof buf, " %8s", ("T(" + std::to_string(r) + ")").c_str());
        out += buf;
    }
    std::snprintf(buf, sizeof buf, " %8s %8s\n", "#B(b)", "ratio");
    out += buf;
    std::map<unsigned, std::size_t> totals;
    for (const auto& row : st.cross) {
        std::snprintf(buf, sizeof buf, "%-6u", row.bound);
        out += buf;
        for (unsigned r : st.ranks) {
            auto it = row.by_rank.find(r);
            const std::size_t c = it == row.by_rank.end() ? 0 : it->second;
            totals[r] += c;
            std::snprintf(buf, sizeof buf, " %8zu", c);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, " %8zu %8.4f\n", row.total, row.ratio());
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "%-6s", "total");
    out += buf;
    for (unsigned r : st.ranks) {
        std::snprintf(buf, sizeof buf, " %8zu", totals[r]);
        out += buf;
    }
    out += "\n# first-occurrence\n";
    std::snprintf(buf, sizeof buf, "%-6s %-6s %8s\n", "r", "b", "m");
    out += buf;
    for (const auto& fo : st.first) {
        std::snprintf(buf, sizeof buf, "%-6u %-6u %8lld\n", fo.rank, fo.bound, static_cast<long long>(fo.m));
        out += buf;
    }
    return out;
}

}  // namespace hjrank

#endif  // HJRANK_BOUNDS_STATS_HPP
