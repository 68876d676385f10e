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

#ifndef HJRANK_BOUNDS_RECORDS_HPP
#define HJRANK_BOUNDS_RECORDS_HPP

#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hjrank/exact/integer.hpp"
#include "hjrank/exact/rational_poly.hpp"

namespace hjrank {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::string_view trim_view(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

/// Strict signed decimal integer (no sign-only, no spaces, no trailing junk).
inline std::optional<std::int64_t> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size() || s.size() - i > 18) return std::nullopt;
    std::int64_t v = 0;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') return std::nullopt;
        v = v * 10 + (s[k] - '0');
    }
    return s[0] == '-' ? -v : v;
}

inline std::optional<BigInt> parse_bigint(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') return std::nullopt;
    }
    BigInt v(std::string(s.substr(i)), 10);
    return s[0] == '-' ? BigInt(-v) : v;
}

/// Reads the next line that is neither blank nor a '#' comment.
inline bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim_view(line);
        if (t.empty() || t.front() == '#') continue;
        line = std::string(t);
        return true;
    }
    return false;
}

}  // namespace detail

/// Canonical key "c0,c1,...,cn" of an integral polynomial (ascending coefficients).
inline std::string poly_key(const RationalPoly& f) {
    if (!f.is_integral()) throw std::invalid_argument("poly_key: non-integral polynomial");
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i != 0) s += ",";
        s += f.coeffs()[i].get_num().get_str();
    }
    return s;
}

struct ClassGroupRecord {
    RationalPoly poly;
    unsigned cl2_rank = 0;
    std::optional<unsigned> narrow_cl2_rank;
    std::string source;

    friend bool operator==(const ClassGroupRecord& a, const ClassGroupRecord& b) {
        return a.poly == b.poly && a.cl2_rank == b.cl2_rank && a.narrow_cl2_rank == b.narrow_cl2_rank;
    }
};

class ClassGroupStore {
public:
    /// Adds a record; an identical duplicate is ignored, a conflicting one throws.
    void add(ClassGroupRecord rec) {
        if (rec.narrow_cl2_rank && *rec.narrow_cl2_rank < rec.cl2_rank) {
            throw std::invalid_argument("class group record: narrow_cl2 < cl2");
        }
        const std::string key = poly_key(rec.poly);
        auto it = records_.find(key);
        if (it != records_.end()) {
            if (!(it->second == rec)) throw std::invalid_argument("class group record: conflicting duplicate for poly=" + key);
            return;
        }
        records_.emplace(key, std::move(rec));
    }

    [[nodiscard]] const ClassGroupRecord* find(const RationalPoly& f) const {
        auto it = records_.find(poly_key(f));
        return it == records_.end() ? nullptr : &it->second;
    }

    [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }
    [[nodiscard]] bool empty() const noexcept { return records_.empty(); }

private:
    std::map<std::string, ClassGroupRecord> records_;
};

/**
 * Class-group file: header "clgroup v1", then one record per line
 *   poly=<c0,c1,...> cl2=<int> [narrow_cl2=<int>] source=<text to end of line>
 * Blank lines and lines starting with '#' are skipped. An empty file yields an empty store.
 */
inline ClassGroupStore parse_class_groups(std::istream& in) {
    ClassGroupStore store;
    std::string line;
    std::size_t lineno = 0;
    if (!detail::next_content_line(in, line, lineno)) return store;
    if (line != "clgroup v1") throw ParseError(lineno, "expected header 'clgroup v1'");
    while (detail::next_content_line(in, line, lineno)) {
        const auto src = line.find("source=");
        if (src == std::string::npos) throw ParseError(lineno, "missing source=");
        if (src != 0 && line[src - 1] != ' ' && line[src - 1] != '\t') throw ParseError(lineno, "malformed source= field");
        ClassGroupRecord rec;
        rec.source = std::string(detail::trim_view(std::string_view(line).substr(src + 7)));
        if (rec.source.empty()) throw ParseError(lineno, "empty source");
        bool have_poly = false, have_cl2 = false;
        for (const auto& tok : detail::split_ws(std::string_view(line).substr(0, src))) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, "expected key=value, got '" + tok + "'");
            const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "poly") {
                if (have_poly) throw ParseError(lineno, "duplicate poly=");
                std::vector<BigInt> c;
                for (const auto& part : detail::split(val, ',')) {
                    auto v = detail::parse_bigint(part);
                    if (!v) throw ParseError(lineno, "bad coefficient '" + part + "'");
                    c.push_back(*v);
                }
                rec.poly = RationalPoly::from_integers(c);
                if (rec.poly.degree() < 1 || !rec.poly.is_monic()) throw ParseError(lineno, "poly must be monic of degree >= 1");
                if (rec.poly.coeffs().size() != c.size()) throw ParseError(lineno, "poly has trailing zero coefficients");
                have_poly = true;
            } else if (key == "cl2" || key == "narrow_cl2") {
                auto v = detail::parse_int(val);
                if (!v || *v < 0) throw ParseError(lineno, "bad " + key + " value '" + val + "'");
                if (key == "cl2") {
                    if (have_cl2) throw ParseError(lineno, "duplicate cl2=");
                    rec.cl2_rank = static_cast<unsigned>(*v);
                    have_cl2 = true;
                } else {
                    if (rec.narrow_cl2_rank) throw ParseError(lineno, "duplicate narrow_cl2=");
                    rec.narrow_cl2_rank = static_cast<unsigned>(*v);
                }
            } else {
                throw ParseError(lineno, "unknown field '" + key + "'");
            }
        }
        if (!have_poly || !have_cl2) throw ParseError(lineno, "record needs poly= and cl2=");
        try {
            store.add(std::move(rec));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return store;
}

inline ClassGroupStore ingest_class_groups(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open class group file: " + path);
    return parse_class_groups(in);
}

enum class RankStatus { Exact, Bounds };

struct RankRecord {
    std::int64_t m = 0;
    RankStatus status = RankStatus::Exact;
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    friend bool operator==(const RankRecord&, const RankRecord&) = default;
};

using RankStore = std::map<std::int64_t, RankRecord>;

/// Rank-data file: header "ranks v1", then "m=<int> status=<exact|bounds> lo=<int> hi=<int>" per line.
inline RankStore parse_rank_data(std::istream& in) {
    RankStore store;
    std::string line;
    std::size_t lineno = 0;
    if (!detail::next_content_line(in, line, lineno)) return store;
    if (line != "ranks v1") throw ParseError(lineno, "expected header 'ranks v1'");
    while (detail::next_content_line(in, line, lineno)) {
        RankRecord rec;
        bool seen[4] = {false, false, false, false};
        for (const auto& tok : detail::split_ws(line)) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, "expected key=value, got '" + tok + "'");
            const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            int slot = -1;
            if (key == "status") {
                slot = 1;
                if (val == "exact") {
                    rec.status = RankStatus::Exact;
                } else if (val == "bounds") {
                    rec.status = RankStatus::Bounds;
                } else {
                    throw ParseError(lineno, "bad status '" + val + "'");
                }
            } else if (key == "m" || key == "lo" || key == "hi") {
                auto v = detail::parse_int(val);
                if (!v) throw ParseError(lineno, "bad " + key + " value '" + val + "'");
                slot = key == "m" ? 0 : (key == "lo" ? 2 : 3);
                (slot == 0 ? rec.m : (slot == 2 ? rec.lo : rec.hi)) = *v;
            } else {
                throw ParseError(lineno, "unknown field '" + key + "'");
            }
            if (seen[slot]) throw ParseError(lineno, "duplicate " + key + "=");
            seen[slot] = true;
        }
        for (bool s : seen) {
            if (!s) throw ParseError(lineno, "record needs m=, status=, lo=, hi=");
        }
        if (rec.lo < 0 || rec.lo > rec.hi) throw ParseError(lineno, "need 0 <= lo <= hi");
        if (rec.status == RankStatus::Exact && rec.lo != rec.hi) throw ParseError(lineno, "exact record with lo != hi");
        auto [it, inserted] = store.emplace(rec.m, rec);
        if (!inserted && !(it->second == rec)) throw ParseError(lineno, "conflicting duplicate for m=" + std::to_string(rec.m));
    }
    return store;
}

inline RankStore ingest_rank_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open rank data file: " + path);
    return parse_rank_data(in);
}

}  // namespace hjrank

#endif  // HJRANK_BOUNDS_RECORDS_HPP
