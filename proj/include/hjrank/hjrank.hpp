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

#ifndef HJRANK_HJRANK_HPP
#define HJRANK_HJRANK_HPP

#include "hjrank/exact/integer.hpp"
#include "hjrank/exact/rational_poly.hpp"
#include "hjrank/exact/prime_poly.hpp"
#include "hjrank/exact/factor_q.hpp"
#include "hjrank/exact/roots.hpp"
#include "hjrank/exact/cyclotomic.hpp"
#include "hjrank/f2/matrix.hpp"
#include "hjrank/f2/poly.hpp"
#include "hjrank/signature.hpp"
#include "hjrank/cyclo/signatures.hpp"
#include "hjrank/field/number_field.hpp"
#include "hjrank/field/square.hpp"
#include "hjrank/bounds/records.hpp"
#include "hjrank/bounds/certificates.hpp"
#include "hjrank/bounds/bounds.hpp"
#include "hjrank/bounds/stats.hpp"

#endif  // HJRANK_HJRANK_HPP
