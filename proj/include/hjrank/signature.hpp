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

#ifndef HJRANK_SIGNATURE_HPP
#define HJRANK_SIGNATURE_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjrank/f2/matrix.hpp"

namespace hjrank {

/**
 * Signs of an element under the real embeddings, ordered by ascending root
 * of the defining polynomial.
 *
 * The map to F_2 sends -1 to 1 and +1 to 0, so totally positive elements
 * map to the zero vector.
 */
class SignatureVector {
public:
    SignatureVector() = default;

    explicit SignatureVector(std::vector<int> signs) : signs_(std::move(signs)) {
        for (int s : signs_) {
            if (s != 1 && s != -1) throw std::invalid_argument("SignatureVector: entries must be +1 or -1");
        }
    }

    SignatureVector(std::initializer_list<int> signs) : SignatureVector(std::vector<int>(signs)) {}

    [[nodiscard]] std::size_t size() const noexcept { return signs_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return signs_.at(i); }
    [[nodiscard]] const std::vector<int>& signs() const noexcept { return signs_; }

    [[nodiscard]] bool totally_positive() const {
        for (int s : signs_) {
            if (s < 0) return false;
        }
        return true;
    }

    [[nodiscard]] f2::VecF2 to_f2() const {
        f2::VecF2 v(signs_.size());
        for (std::size_t i = 0; i < signs_.size(); ++i) v.set(i, signs_[i] < 0);
        return v;
    }

    static SignatureVector from_f2(const f2::VecF2& v) {
        std::vector<int> s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) s[i] = v.get(i) ? -1 : 1;
        return SignatureVector(std::move(s));
    }

    /// Componentwise product (the signature of a product of elements).
    friend SignatureVector operator*(const SignatureVector& a, const SignatureVector& b) {
        if (a.size() != b.size()) throw std::invalid_argument("SignatureVector: length mismatch");
        std::vector<int> s(a.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.signs_[i] * b.signs_[i];
        return SignatureVector(std::move(s));
    }

    friend bool operator==(const SignatureVector&, const SignatureVector&) = default;

    /// Compact form such as "(-,-,+)".
    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < signs_.size(); ++i) {
            if (i != 0) s += ",";
            s += signs_[i] < 0 ? "-" : "+";
        }
        return s + ")";
    }

private:
    std::vector<int> signs_;
};

}  // namespace hjrank

#endif  // HJRANK_SIGNATURE_HPP
