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

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace abel3 {

int QTTable::n_max(int d)
{
    int r = 0;
    while (r * r < 4 * d) // r = ceil(sqrt(4d)) = ceil(2 sqrt d)
        ++r;
    return r + 4;
}

Int QTTable::at(int d, long n) const
{
    if (d < 0 || d > d_max)
        throw std::out_of_range("QTTable: degree outside the computed range");
    long m = n_max(d);
    if (n < -m || n > m)
        return 0;
    return rows[d][n + m];
}

QTTable expand_dt(int d_max)
{
    if (d_max < 0 || d_max > 500)
        throw std::invalid_argument("expand_dt: need 0 <= d_max <= 500");
    // Laurent in q with offset; the q-degree at t^d never exceeds d + 1.
    const int off = d_max + 1, width = 2 * d_max + 3;
    std::vector<std::vector<Int>> c(d_max + 1, std::vector<Int>(width, Int(0)));
    c[0][off] = 1;

    auto times_binomial = [&](int m, int shift) { // *(1 + q^shift t^m)
        for (int d = d_max; d >= m; --d)
            for (int e = 0; e < width; ++e) {
                int src = e - shift;
                if (src >= 0 && src < width && c[d - m][src] != 0)
                    c[d][e] += c[d - m][src];
            }
    };
    for (int m = 1; m <= d_max; ++m) {
        times_binomial(m, 1);
        times_binomial(m, 1);
        times_binomial(m, -1);
        times_binomial(m, -1);
        // (1 - t^m)^-4 = sum_k C(k+3,3) t^{mk}
        for (int d = d_max; d >= m; --d)
            for (int k = 1; k * m <= d; ++k) {
                long binom = long(k + 3) * (k + 2) * (k + 1) / 6;
                for (int e = 0; e < width; ++e)
                    if (c[d - k * m][e] != 0)
                        c[d][e] += binom * c[d - k * m][e];
            }
    }

    QTTable t;
    t.d_max = d_max;
    t.rows.resize(d_max + 1);
    for (int d = 0; d <= d_max; ++d) {
        const int nm = QTTable::n_max(d);
        t.rows[d].assign(2 * nm + 1, Int(0));
        for (int e = 0; e < width; ++e) {
            // prefactor q + 2 + 1/q
            Int v = 2 * c[d][e];
            if (e - 1 >= 0)
                v += c[d][e - 1];
            if (e + 1 < width)
                v += c[d][e + 1];
            if (v == 0)
                continue;
            int n = e - off;
            if (n < -nm || n > nm)
                throw std::logic_error("expand_dt: coefficient outside the storage margin");
            t.rows[d][n + nm] = v;
        }
    }
    return t;
}

namespace {

// Partitions of b into exactly a distinct parts, each at most cap.
Int count_distinct(int a, int b, int cap, std::map<std::array<int, 3>, Int>& memo)
{
    if (a == 0)
        return b == 0 ? 1 : 0;
    if (b <= 0 || cap <= 0)
        return 0;
    // largest a parts below cap: cap + (cap-1) + ... ; smallest: 1 + ... + a
    if (long(a) * (a + 1) / 2 > b || long(a) * (2L * cap - a + 1) / 2 < b)
        return 0;
    auto key = std::array<int, 3>{a, b, cap};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Int s = 0;
    for (int top = std::min(cap, b); top >= 1; --top)
        s += count_distinct(a - 1, b - top, top - 1, memo);
    memo.emplace(key, s);
    return s;
}

} // namespace

Int distinct_partitions(int a, int b)
{
    if (a < 0 || b < 0)
        return 0;
    std::map<std::array<int, 3>, Int> memo;
    return count_distinct(a, b, b, memo);
}

Int squared_product_coefficient(int n, int d)
{
    if (n < 1 || d < 0)
        return 0;
    std::vector<std::vector<Int>> q(n, std::vector<Int>(d + 1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b <= d; ++b)
            q[a][b] = distinct_partitions(a, b);
    Int s = 0;
    for (int a1 = 0; a1 <= n - 1; ++a1)
        for (int b1 = 0; b1 <= d; ++b1)
            s += q[a1][b1] * q[n - 1 - a1][d - b1];
    return s;
}

namespace {

Int tri(const Int& k) { return k * (k + 1) / 2; }

// Arguments d - T_k1 - T_k2 >= 0 over k1 + k2 = n - 1. The sum T_k1 + T_k2
// is a convex function of k1 minimized near (n-1)/2.
std::vector<Int> closed_form_arguments(const Int& d, const Int& n)
{
    std::vector<Int> out;
    const Int s = n - 1;
    const Int mid = floor_div(s, 2);
    for (int dir : {0, 1}) {
        for (Int k1 = dir == 0 ? mid : mid + 1;; k1 += dir == 0 ? -1 : 1) {
            Int j = d - tri(k1) - tri(s - k1);
            if (j < 0)
                break;
            out.push_back(j);
        }
    }
    return out;
}

} // namespace

long dt_positive_terms(const Int& d, const Int& n) { return long(closed_form_arguments(d, n).size()); }

Int dt_coefficient(const Int& d, const Int& n, long max_index)
{
    auto args = closed_form_arguments(d, n);
    if (args.empty())
        return 0;
    Int J = *std::max_element(args.begin(), args.end());
    if (J > max_index)
        throw std::range_error("dt_coefficient: index " + J.str() + " above the configured cap");
    const long N = J.convert_to<long>();

    // prod (1 - t^m)^3 = sum_k (-1)^k (2k+1) t^{T_k}
    std::vector<std::pair<long, long>> jac;
    for (long k = 1; k * (k + 1) / 2 <= N; ++k)
        jac.emplace_back(k * (k + 1) / 2, (k % 2 ? -1 : 1) * (2 * k + 1));
    // c = 1 / J, then p6 = c / J
    auto divide = [&](const std::vector<Int>& num) {
        std::vector<Int> r(N + 1);
        for (long j = 0; j <= N; ++j) {
            Int v = num[j];
            for (auto [tk, coef] : jac) {
                if (tk > j)
                    break;
                v -= coef * r[j - tk];
            }
            r[j] = v;
        }
        return r;
    };
    std::vector<Int> one(N + 1, Int(0));
    one[0] = 1;
    std::vector<Int> p6 = divide(divide(one));
    Int s = 0;
    for (const Int& j : args)
        s += p6[j.convert_to<long>()];
    return s;
}

DTVerdict dt_positive(const Int& d, const Int& n, long max_index)
{
    if (d <= 0)
        throw std::invalid_argument("dt_positive: need d > 0");
    DTVerdict v;
    v.d = d;
    v.n = n;
    v.delta = Rat(d) - Rat(n * n, 4);
    v.applicable = v.delta >= 0;
    v.positive_terms = dt_positive_terms(d, n);
    try {
        v.value = dt_coefficient(d, n, max_index);
        v.value_known = true;
        v.positive = v.value > 0;
    } catch (const std::range_error&) {
        // every closed-form term is a positive p6 value
        v.positive = v.positive_terms > 0;
    }
    v.implication_holds = !v.applicable || v.positive;
    return v;
}

} // namespace abel3
