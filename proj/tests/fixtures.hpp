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

// Fixed instances and random generators used by more than one test binary.

#include "abel3/brauerhodge.hpp"
#include "abel3/pipeline.hpp"
#include "oracles.hpp"

namespace abel3::testing {

// x_i = e_{2i-1}, y_i = e_{2i}; H = sum x_i ^ y_i is the principal form.
inline std::array<long, 6> xv(int i) { return basis_vector(2 * (i - 1)); }
inline std::array<long, 6> yv(int i) { return basis_vector(2 * (i - 1) + 1); }
inline std::array<long, 6> add(std::array<long, 6> a, const std::array<long, 6>& b, long s = 1)
{
    for (int i = 0; i < 6; ++i)
        a[i] += s * b[i];
    return a;
}

// b = x1^(y1+y2) + x2^(y1+y3) + x3^(y1+y2+y3)
inline TwoClassQ sample_b()
{
    return wedge(xv(1), add(yv(1), yv(2))) + wedge(xv(2), add(yv(1), yv(3)))
        + wedge(xv(3), add(add(yv(1), yv(2)), yv(3)));
}

inline TwoClassQ unit_pair(int i, int j)
{
    TwoClassQ b;
    b(i, j) = 1;
    return b;
}

inline bool is_zero(const CMat& m)
{
    for (Eigen::Index i = 0; i < m.size(); ++i)
        if (m.data()[i] != GaussRat())
            return false;
    return true;
}

inline HodgeDatum random_datum(std::mt19937_64& rng)
{
    HodgeDatum d;
    d.n = uniform(rng, 1, 6);
    TwoClassQ b = random_two(rng, -6, 6);
    d.B = Rat(1) / Rat(d.n) * b;
    switch (uniform(rng, 0, 3)) {
    case 0:
        break;
    case 1:
        d.ns2 = {principal_form()};
        d.hdg4 = {half_square(principal_form())};
        break;
    case 2: {
        const TwoClassQ e12 = unit_pair(0, 1), e34 = unit_pair(2, 3), e56 = unit_pair(4, 5);
        d.ns2 = {e12, e34, e56};
        d.hdg4 = {cup(e12, e34).C, cup(e12, e56).C, cup(e34, e56).C};
        break;
    }
    default:
        d.ns2 = {random_two(rng, -2, 2)};
        break;
    }
    return d;
}

// ch^D term by term in the cohomology ring, D = bH:
//   ch0, ch1 - D ch0, ch2 - D ch1 + D^2/2 ch0, ch3 - D ch2 + D^2/2 ch1 - D^3/6 ch0
inline EvenClassQ twisted_by_display(const EvenClassQ& v, const TwoClassQ& H, const Rat& b)
{
    const EvenClassQ D = EvenClassQ::of(TwoClassQ(b * H));
    const EvenClassQ D2 = cup(D, D), D3 = cup(D2, D);
    const EvenClassQ c0{v.a, {}, {}, Rat(0)}, c1 = EvenClassQ::of(v.B), c2 = EvenClassQ::of(v.C);
    EvenClassQ r;
    r.a = v.a;
    r.B = (c1 - cup(D, c0)).B;
    r.C = (c2 - cup(D, c1) + Rat(1, 2) * cup(D2, c0)).C;
    r.d = v.d - cup(D, c2).d + Rat(1, 2) * cup(D2, c1).d - Rat(1, 6) * cup(D3, c0).d;
    return r;
}

// A random u with Pf(u) > 0 whose H-split matrix meets the orbit genericity.
inline TwoClassQ random_generic_form(std::mt19937_64& rng, const TwoClassQ& H, long range = 5)
{
    const IMat P = symplectic_basis(to_int(H.matrix())).P;
    for (;;) {
        TwoClassQ u = random_two(rng, -range, range);
        Rat pf = pfaffian(u.matrix());
        if (pf == 0)
            continue;
        if (pf < 0)
            u = -u;
        if (orbit_genericity(IMat(P.transpose() * to_int(u.matrix()) * P)).ok())
            return u;
    }
}

inline bool congruent(const TwoClassQ& a, const TwoClassQ& b, const Int& m)
{
    for (int k = 0; k < ext::kPairs; ++k)
        if (mod(to_int(a.c(k) - b.c(k)), m) != 0)
            return false;
    return true;
}

} // namespace abel3::testing
