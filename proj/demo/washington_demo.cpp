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

// Local and sign certificates for the first few simplest cubics.

#include <iostream>

#include "hjrank/hjrank.hpp"

int main() {
    using namespace hjrank;
    for (std::int64_t m = 0; m <= 12; ++m) {
        if (!washington_in_family(m)) {
            std::cout << "m=" << m << "  D=" << washington_D(m) << " not square-free, skipped\n";
            continue;
        }
        const auto local = washington_local_certificate(m);
        const auto rho = washington_rho_certificate(m);
        std::cout << "m=" << m << "  f=" << washington_poly(m).to_string() << "  S={";
        for (std::size_t i = 0; i < local.bad_set.size(); ++i) std::cout << (i ? "," : "") << local.bad_set[i];
        std::cout << "}  G-trivial=" << (local.conclusion ? "yes" : "no") << "  span=" << rho.span << "\n";
    }
}
