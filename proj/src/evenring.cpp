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
#include "abel3/evenring.hpp"

namespace abel3 {

namespace {

// Pfaffian of the 4x4 block left after deleting indices i and j.
Rat sub_pfaffian(const TwoClassQ& b, int i, int j)
{
    int r[4], k = 0;
    for (int s = 0; s < 6; ++s)
        if (s != i && s != j)
            r[k++] = s;
    return b(r[0], r[1]) * b(r[2], r[3]) - b(r[0], r[2]) * b(r[1], r[3]) + b(r[0], r[3]) * b(r[1], r[2]);
}

} // namespace

Rat igusa_discriminant(const EvenClassQ& v)
{
    const TwoClassQ Cm(v.C.c);
    Rat delta = -v.a * pfaffian(v.C) - v.d * pfaffian(v.B);
    Rat pairing = 0;
    for (int k = 0; k < ext::kPairs; ++k) {
        auto [i, j] = ext::pairs[k];
        delta += sub_pfaffian(v.B, i, j) * sub_pfaffian(Cm, i, j);
        pairing += v.B.c(k) * v.C.c(k);
    }
    Rat q = v.a * v.d - pairing;
    return delta - q * q / 4;
}

namespace {

Cubic interpolate(const std::array<Rat, 4>& y)
{
    // Newton forward differences on t = 0, 1, 2, 3.
    Rat d1 = y[1] - y[0], d2 = y[2] - 2 * y[1] + y[0], d3 = y[3] - 3 * y[2] + 3 * y[1] - y[0];
    // y0 + d1 t + d2 t(t-1)/2 + d3 t(t-1)(t-2)/6
    Cubic c;
    c.a3 = d3 / 6;
    c.a2 = d2 / 2 - d3 / 2;
    c.a1 = d1 - d2 / 2 + d3 / 3;
    c.a0 = y[0];
    return c;
}

} // namespace

CharPfaffian char_pfaffian(const TwoClassQ& u, const TwoClassQ& H)
{
    const Rat pfH = pfaffian(H);
    if (pfH == 0)
        throw std::invalid_argument("char_pfaffian: H is degenerate");
    const Rat s = pfH > 0 ? 1 : -1;

    std::array<Rat, 4> y;
    for (int t = 0; t < 4; ++t)
        y[t] = s * pfaffian(TwoClassQ(Rat(t) * H - u));
    CharPfaffian r;
    r.interpolated = interpolate(y);

    // sum_i (-1)^(3-i) H^i u^(3-i) / ((3-i)! i!) t^i
    const EvenClassQ h = EvenClassQ::of(H), uu = EvenClassQ::of(u);
    auto power = [](const EvenClassQ& x, int k) {
        EvenClassQ p = EvenClassQ::unit();
        for (int i = 0; i < k; ++i)
            p = cup(p, x);
        return p;
    };
    static const int fact[4] = {1, 1, 2, 6};
    std::array<Rat, 4> co;
    for (int i = 0; i <= 3; ++i) {
        Rat v = integrate(cup(power(h, i), power(uu, 3 - i))) / (fact[3 - i] * fact[i]);
        co[i] = s * ((3 - i) % 2 ? -v : v);
    }
    r.closed = {co[3], co[2], co[1], co[0]};
    r.agree = r.closed == r.interpolated;
    return r;
}

Cubic char_pfaffian_cubic(const TwoClassQ& u, const TwoClassQ& H)
{
    auto r = char_pfaffian(u, H);
    if (!r.agree)
        throw std::logic_error("char_pfaffian: routes disagree");
    return r.closed;
}

TwoClassQ principal_form() { return form_of_type({1, 1, 1}); }

TwoClassQ form_of_type(const std::array<Int, 3>& d)
{
    TwoClassQ h;
    for (int i = 0; i < 3; ++i)
        h(2 * i, 2 * i + 1) = Rat(d[i]);
    return h;
}

AltType alt_type(const TwoClassQ& b)
{
    if (!b.is_integral())
        throw std::invalid_argument("alt_type: class is not integral");
    return alt_type(to_int(b.matrix()));
}

AltType alt_type(const FourClassQ& c) { return alt_type(star(c)); }

} // namespace abel3
