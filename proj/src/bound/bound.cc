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

#include "cosetgame/bound/bound.h"

#include <stdexcept>

namespace cosetgame::bound {

using f2::gaussian_binomial;
using f2::pow2;

Rational inverse_pow2(unsigned e) {
    return Rational(BigInt(1), pow2(e));
}

Rational upper_bound(unsigned m) {
    Rational sum = 0;
    for (unsigned k = 0; k <= m; k++) {
        BigInt c = gaussian_binomial(m, k);
        sum += Rational(pow2(k * k) * c * c) * inverse_pow2(k);
    }
    return sum / Rational(gaussian_binomial(2 * m, m));
}

BigInt count_by_intersection(unsigned m, unsigned k) {
    if (k > m) {
        throw std::invalid_argument("count_by_intersection: need k <= m");
    }
    BigInt c = gaussian_binomial(m, m - k);
    return pow2((m - k) * (m - k)) * c * c;
}

Rational bound_weight(unsigned m, unsigned k) {
    BigInt c = gaussian_binomial(m, k);
    return Rational(pow2(k * k) * c * c, gaussian_binomial(2 * m, m));
}

BigInt vandermonde_sum(unsigned m) {
    BigInt sum = 0;
    for (unsigned k = 0; k <= m; k++) {
        BigInt c = gaussian_binomial(m, k);
        sum += pow2(k * k) * c * c;
    }
    return sum;
}

RateEnvelope rate_envelope(unsigned m) {
    if (m < 1) {
        throw std::invalid_argument("rate_envelope: need m >= 1");
    }
    return RateEnvelope{inverse_pow2(m), Rational(11, 2) * inverse_pow2(m)};
}

std::string to_string(const Rational &r) {
    return r.str();
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

}  // namespace cosetgame::bound
