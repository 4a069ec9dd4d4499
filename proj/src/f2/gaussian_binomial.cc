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

#include "cosetgame/f2/gaussian_binomial.h"

namespace cosetgame::f2 {

BigInt pow2(unsigned e) {
    BigInt one = 1;
    return one << e;
}

BigInt gaussian_binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    // Each partial product is itself C(n, j+1)_2, so every division is exact.
    BigInt acc = 1;
    for (unsigned j = 0; j < k; j++) {
        acc *= pow2(n - j) - 1;
        acc /= pow2(j + 1) - 1;
    }
    return acc;
}

}  // namespace cosetgame::f2
