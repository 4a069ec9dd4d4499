// Copyright 2026 The Coset Game Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COSETGAME_F2_GAUSSIAN_BINOMIAL_H
#define COSETGAME_F2_GAUSSIAN_BINOMIAL_H

#include <boost/multiprecision/cpp_int.hpp>

namespace cosetgame::f2 {

using BigInt = boost::multiprecision::cpp_int;

/// Number of k-dimensional subspaces of F2^n, exactly. Zero when k > n.
BigInt gaussian_binomial(unsigned n, unsigned k);

/// 2^e as a big integer.
BigInt pow2(unsigned e);

}  // namespace cosetgame::f2

#endif
