/*
 * Copyright 2026 The abel3 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Reduced DT invariants of curve classes of type (1,1,d):
//   sum DT_{d,n} q^n t^d
//     = (q + 2 + 1/q) prod_{m>=1} (1 + q t^m)^2 (1 + t^m / q)^2 / (1 - t^m)^4.

#include "abel3/scalar.hpp"

#include <vector>

namespace abel3 {

struct QTTable {
    int d_max = -1;
    std::vector<std::vector<Int>> rows; // rows[d][n + n_max(d)]

    static int n_max(int d); // ceil(2 sqrt d) + 4
    Int at(int d, long n) const;
};

QTTable expand_dt(int d_max);

Int distinct_partitions(int a, int b);
Int squared_product_coefficient(int n, int d);

/* Exact DT_{d,n} for arbitrary d through the triple-product identity
 *   (q + 2 + 1/q) prod (1+qt^m)^2 (1+t^m/q)^2 = q (sum_k q^k t^{k(k+1)/2})^2 / prod (1-t^m)^2,
 * so DT_{d,n} = sum_{k1+k2=n-1} p6(d - T_k1 - T_k2), p6 the coefficients of
 * prod (1-t^m)^-6. Cost grows like J^1.5 with J ~ d - n^2/4; throws
 * std::range_error when J exceeds max_index. */
Int dt_coefficient(const Int& d, const Int& n, long max_index = 2000000);

// Number of nonnegative arguments in the sum above (each term is >= 1).
long dt_positive_terms(const Int& d, const Int& n);

struct DTVerdict {
    Int d, n;
    Rat delta; // d - n^2/4
    bool applicable = false; // delta >= 0
    bool value_known = false;
    Int value;
    long positive_terms = 0;
    bool positive = false;
    bool implication_holds = false; // delta >= 0 => DT > 0
};

DTVerdict dt_positive(const Int& d, const Int& n, long max_index = 2000000);

} // namespace abel3
