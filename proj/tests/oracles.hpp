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

// Independent reference computations shared by the unit and acceptance
// tests. Nothing here calls into the routine it is used to check.

#include "abel3/evenring.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace abel3::testing {

inline long uniform(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline TwoClassQ random_two(std::mt19937_64& rng, long lo = -9, long hi = 9)
{
    TwoClassQ b;
    for (int k = 0; k < ext::kPairs; ++k)
        b.c(k) = uniform(rng, lo, hi);
    return b;
}

inline FourClassQ random_four(std::mt19937_64& rng, long lo = -9, long hi = 9)
{
    return star(random_two(rng, lo, hi));
}

inline EvenClassQ random_even(std::mt19937_64& rng, long lo = -9, long hi = 9)
{
    return {Rat(uniform(rng, lo, hi)), random_two(rng, lo, hi), random_four(rng, lo, hi), Rat(uniform(rng, lo, hi))};
}

inline IMat random_int_matrix(std::mt19937_64& rng, int r, int c, long lo, long hi)
{
    IMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m(i, j) = uniform(rng, lo, hi);
    return m;
}

inline IMat random_alternating(std::mt19937_64& rng, int n, long lo, long hi)
{
    IMat m = IMat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m(i, j) = uniform(rng, lo, hi);
            m(j, i) = -m(i, j);
        }
    return m;
}

// Product of elementary matrices, so det = 1 by construction.
inline IMat random_unimodular(std::mt19937_64& rng, int n, int steps = 12, long c = 2)
{
    IMat g = IMat::Identity(n, n);
    for (int s = 0; s < steps; ++s) {
        int i = int(uniform(rng, 0, n - 1)), j = int(uniform(rng, 0, n - 2));
        if (j >= i)
            ++j;
        long f = uniform(rng, -c, c);
        g.row(i) += Int(f) * g.row(j);
    }
    return g;
}

// Sum over all 720 permutations; exact but only for 6x6.
inline Int det_leibniz6(const IMat& m)
{
    std::array<int, 6> p{0, 1, 2, 3, 4, 5};
    Int total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (p[i] > p[j])
                    ++inv;
        Int t = 1;
        for (int i = 0; i < 6; ++i)
            t *= m(i, p[i]);
        total += inv % 2 ? Int(-t) : t;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// x ^ y for 1-forms given in the basis x1..x6.
inline TwoClassQ wedge(const std::array<long, 6>& x, const std::array<long, 6>& y)
{
    TwoClassQ b;
    for (int k = 0; k < ext::kPairs; ++k) {
        auto [i, j] = ext::pairs[k];
        b.c(k) = Rat(x[i] * y[j] - x[j] * y[i]);
    }
    return b;
}

inline std::array<long, 6> basis_vector(int i)
{
    std::array<long, 6> e{};
    e[i] = 1;
    return e;
}

// Real roots of a cubic from companion-matrix eigenvalues.
inline bool float_positive_real_roots(const Cubic& c)
{
    double a3 = c.a3.convert_to<double>(), a2 = c.a2.convert_to<double>();
    double a1 = c.a1.convert_to<double>(), a0 = c.a0.convert_to<double>();
    Eigen::Matrix3d comp;
    comp << -a2 / a3, -a1 / a3, -a0 / a3, 1, 0, 0, 0, 1, 0;
    Eigen::EigenSolver<Eigen::Matrix3d> es(comp);
    for (int i = 0; i < 3; ++i) {
        std::complex<double> z = es.eigenvalues()(i);
        double scale = std::max(1.0, std::abs(z));
        if (std::abs(z.imag()) > 1e-7 * scale || z.real() <= 1e-9 * scale)
            return false;
    }
    return true;
}

// Integer cubic has a root mod ell (brute force); leading coefficient assumed a unit.
inline bool has_root_mod(const Cubic& c, long ell)
{
    for (long t = 0; t < ell; ++t) {
        Rat v = c(Rat(t));
        if (numer(v) % ell == 0)
            return true;
    }
    return false;
}

// Rational-root search over p/q with p | a0, q | a3 (integer coefficients).
inline bool has_rational_root(const Cubic& c)
{
    Int a0 = to_int(c.a0), a3 = to_int(c.a3);
    if (a0 == 0)
        return true;
    auto divisors = [](Int n) {
        n = mp::abs(n);
        std::vector<Int> d;
        for (Int k = 1; k * k <= n; ++k)
            if (n % k == 0) {
                d.push_back(k);
                d.push_back(n / k);
            }
        return d;
    };
    for (const Int& p : divisors(a0))
        for (const Int& q : divisors(a3))
            for (int s : {1, -1})
                if (c(Rat(s * p, q)) == 0)
                    return true;
    return false;
}

/* Coefficients c[i][j][k] of x^i y^j z^k (i, j, k <= 4) of the polynomial
 * taking values f[a][b][c] at (x, y, z) = (a-2, b-2, c-2). Exact for any
 * polynomial of degree at most 4 in each variable. */
using Grid5 = std::array<std::array<std::array<Rat, 5>, 5>, 5>;

inline Grid5 interpolate_grid5(const Grid5& f)
{
    RMat V(5, 5);
    for (int a = 0; a < 5; ++a) {
        Rat p = 1;
        for (int k = 0; k < 5; ++k) {
            V(a, k) = p;
            p *= Rat(a - 2);
        }
    }
    const RMat Vi = V.partialPivLu().inverse();
    auto along = [&](const Grid5& in, int axis) {
        Grid5 out{};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k) {
                    Rat acc = 0;
                    for (int m = 0; m < 5; ++m) {
                        const Rat& v = axis == 0 ? in[m][j][k] : axis == 1 ? in[i][m][k] : in[i][j][m];
                        acc += Vi(axis == 0 ? i : axis == 1 ? j : k, m) * v;
                    }
                    out[i][j][k] = acc;
                }
        return out;
    };
    return along(along(along(f, 0), 1), 2);
}

/* Truncated Laurent series in (q, t): coefficient of q^e t^d stored at
 * rows[d][e + off]. Factors are applied in place one at a time. */
struct Series {
    int D, off;
    std::vector<std::vector<Int>> rows;
    Series(int D_, int off_) : D(D_), off(off_), rows(D_ + 1, std::vector<Int>(2 * off_ + 1, Int(0))) {}
    Int at(int d, int e) const
    {
        if (d < 0 || d > D || e < -off || e > off)
            return 0;
        return rows[d][e + off];
    }
    // *= (1 + q^e t^m)
    void times_binomial(int m, int e)
    {
        for (int d = D; d >= m; --d)
            for (int i = 0; i < 2 * off + 1; ++i) {
                int j = i - e;
                if (j < 0 || j > 2 * off || rows[d - m][j] == 0)
                    continue;
                rows[d][i] += rows[d - m][j];
            }
    }
    // *= 1 / (1 - t^m)
    void times_geometric(int m)
    {
        for (int d = m; d <= D; ++d)
            for (int i = 0; i < 2 * off + 1; ++i)
                rows[d][i] += rows[d - m][i];
    }
};

// (q + 2 + 1/q) prod_m (1 + q t^m)^2 (1 + t^m/q)^2 / (1 - t^m)^4, through t^D.
inline Series naive_dt_series(int D)
{
    Series s(D, D + 3);
    s.rows[0][s.off - 1] = 1;
    s.rows[0][s.off] = 2;
    s.rows[0][s.off + 1] = 1;
    for (int m = 1; m <= D; ++m) {
        for (int r = 0; r < 2; ++r) {
            s.times_binomial(m, 1);
            s.times_binomial(m, -1);
        }
        for (int r = 0; r < 4; ++r)
            s.times_geometric(m);
    }
    return s;
}

// prod_m (1 + q t^m)^2 through t^D.
inline Series naive_squared_product(int D)
{
    Series s(D, D + 1);
    s.rows[0][s.off] = 1;
    for (int m = 1; m <= D; ++m)
        for (int r = 0; r < 2; ++r)
            s.times_binomial(m, 1);
    return s;
}

} // namespace abel3::testing
