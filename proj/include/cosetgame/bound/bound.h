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

#ifndef COSETGAME_BOUND_BOUND_H
#define COSETGAME_BOUND_BOUND_H

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cosetgame/f2/gaussian_binomial.h"

namespace cosetgame::bound {

using f2::BigInt;
/// Always normalized: positive denominator, coprime parts.
using Rational = boost::multiprecision::cpp_rational;

/// Largest joint winning probability of the coset guessing game on 2m qubits:
///
///     (1 / C(2m,m)_2) * sum_{k=0}^{m} 2^{k^2} C(m,k)_2^2 2^{-k}
Rational upper_bound(unsigned m);

/// Number of W in G(2m, m) with dim(W ∩ span{e_{m+1}, ..., e_{2m}}) = k,
/// namely 2^{(m-k)^2} C(m, m-k)_2^2.
BigInt count_by_intersection(unsigned m, unsigned k);

/// f(m, k) = 2^{k^2} C(m,k)_2^2 / C(2m,m)_2, the weight of the k-th term of
/// upper_bound before the 2^{-k} factor.
Rational bound_weight(unsigned m, unsigned k);

/// sum_k 2^{k^2} C(m,k)_2^2, which equals C(2m,m)_2.
BigInt vandermonde_sum(unsigned m);

struct RateEnvelope {
    Rational lower;
    Rational upper;

    bool contains(const Rational &value) const {
        return lower <= value && value <= upper;
    }
};

/// [2^{-m}, (11/2) 2^{-m}]; requires m >= 1.
RateEnvelope rate_envelope(unsigned m);

/// 2^{-e} exactly.
Rational inverse_pow2(unsigned e);

/// "p/q", or "p" for integers.
std::string to_string(const Rational &r);
double to_double(const Rational &r);

}  // namespace cosetgame::bound

#endif
