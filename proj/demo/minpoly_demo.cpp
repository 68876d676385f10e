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

// Prints the minimal polynomials of the real cyclotomic units for small q.

#include <iostream>

#include "hjrank/hjrank.hpp"

int main() {
    for (std::uint64_t q : {7, 11, 13, 23}) {
        const auto f = hjrank::min_poly_2cos(q, hjrank::unit_constant_negate(q));
        std::cout << "q=" << q << "  " << f.to_string() << "\n";
    }
}
