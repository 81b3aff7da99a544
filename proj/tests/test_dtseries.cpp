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
#include "abel3/dtseries.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace abel3;
using namespace abel3::testing;

namespace {

// Subsets of {1..b} with a elements summing to b, by plain enumeration.
long subsets_with_sum(int a, int b, int smallest = 1)
{
    if (a == 0)
        return b == 0;
    long c = 0;
    for (int k = smallest; k <= b; ++k)
        c += subsets_with_sum(a - 1, b - k, k + 1);
    return c;
}

} // namespace

TEST_CASE("low-degree coefficients")
{
    QTTable t = expand_dt(3);
    CHECK(t.at(0, 0) == 2);
    CHECK(t.at(0, 1) == 1);
    CHECK(t.at(0, -1) == 1);
    CHECK(t.at(0, 2) == 0);
    CHECK(t.at(0, -7) == 0);
    CHECK(t.at(1, 0) == 12);
    CHECK(t.at(1, 1) == 8);
    CHECK(t.at(1, -1) == 8);
    CHECK(t.at(1, 2) == 2);
    CHECK(t.at(1, -2) == 2);
    CHECK_THROWS_AS(t.at(4, 0), std::out_of_range);
    CHECK(QTTable::n_max(0) == 4);
    CHECK(QTTable::n_max(4) == 8);
    CHECK(QTTable::n_max(5) == 9);
}

TEST_CASE("table against direct series multiplication")
{
    const int D = 20;
    QTTable t = expand_dt(D);
    Series s = naive_dt_series(D);
    for (int d = 0; d <= D; ++d)
        for (int n = -(d + 2); n <= d + 2; ++n) {
            CHECK(t.at(d, n) == s.at(d, n));
            CHECK(t.at(d, n) == t.at(d, -n));
        }
}

TEST_CASE("closed form agrees with the table")
{
    QTTable t = expand_dt(40);
    for (int d = 0; d <= 40; ++d)
        for (int n = -QTTable::n_max(d); n <= QTTable::n_max(d); ++n) {
            CHECK(dt_coefficient(d, n) == t.at(d, n));
            // the closed-form terms are each >= 1
            if (t.at(d, n) > 0)
                CHECK(dt_positive_terms(d, n) > 0);
            if (dt_positive_terms(d, n) == 0)
                CHECK(t.at(d, n) == 0);
        }
}

TEST_CASE("closed form at large degree")
{
    // symmetric and positive well away from the table
    Int a = dt_coefficient(5000, 37), b = dt_coefficient(5000, -37);
    CHECK(a == b);
    CHECK(a > 0);
    CHECK(dt_coefficient(10, 12) == 0);
    CHECK_THROWS_AS(dt_coefficient(Int("1000000000000"), 0, 1000), std::range_error);
}

TEST_CASE("distinct partitions")
{
    CHECK(distinct_partitions(1, 3) == 1);
    CHECK(distinct_partitions(2, 3) == 1);
    CHECK(distinct_partitions(0, 0) == 1);
    CHECK(distinct_partitions(0, 4) == 0);
    CHECK(distinct_partitions(-1, 4) == 0);
    for (int k = 1; k <= 10; ++k)
        CHECK(distinct_partitions(k, k * (k + 1) / 2) == 1);
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 24; ++b)
            CHECK(distinct_partitions(a, b) == subsets_with_sum(a, b));
}

TEST_CASE("squared product coefficient")
{
    CHECK(squared_product_coefficient(1, 0) == 1);
    CHECK(squared_product_coefficient(3, 4) > 0);
    CHECK(squared_product_coefficient(0, 4) == 0);
    const int D = 20;
    Series s = naive_squared_product(D);
    for (int d = 0; d <= D; ++d)
        for (int n = 1; n <= 12; ++n)
            CHECK(squared_product_coefficient(n, d) == s.at(d, n - 1));
    for (int d = 1; d <= 30; ++d) {
        // q^0 t^d needs an empty product, so n = 1 gives 0 for d > 0
        CHECK(squared_product_coefficient(1, d) == 0);
        for (int n = 2; n * n <= 4 * d; ++n)
            CHECK(squared_product_coefficient(n, d) > 0);
    }
}

TEST_CASE("positivity verdicts")
{
    DTVerdict v = dt_positive(1, 2);
    CHECK(v.delta == 0);
    CHECK(v.applicable);
    CHECK(v.value_known);
    CHECK(v.value == 2);
    CHECK(v.implication_holds);

    v = dt_positive(1, 3);
    CHECK(v.delta < 0);
    CHECK_FALSE(v.applicable);
    CHECK(v.implication_holds);

    v = dt_positive(4, 4);
    CHECK(v.delta == 0);
    CHECK(v.positive);

    // beyond the index cap positivity still follows from the term count
    v = dt_positive(Int("69533262865603"), Int("-16677313"), 1000);
    CHECK_FALSE(v.value_known);
    CHECK(v.applicable);
    CHECK(v.positive_terms > 0);
    CHECK(v.positive);

    CHECK_THROWS_AS(dt_positive(0, 0), std::invalid_argument);
}
