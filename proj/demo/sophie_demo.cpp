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

// Upper and lower bounds for q = 23 with the bundled class-group data.

#include <iostream>

#include "hjrank/hjrank.hpp"

#ifndef HJRANK_DATA_DIR
#define HJRANK_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
    using namespace hjrank;
    const std::string path = argc > 1 ? argv[1] : HJRANK_DATA_DIR "/clgroups.clg";
    const ClassGroupStore store = ingest_class_groups(path);
    SophieOptions opt;
    opt.compute_lower = true;
    opt.scan_bound = 100000;
    for (std::uint64_t q : {11, 23}) std::cout << describe(sophie_upper_bound(q, store, opt)) << "\n";
}
