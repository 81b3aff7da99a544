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
#include "abel3/tiltstab.hpp"

namespace abel3 {

ChernQuadruple reduce_along_H(const EvenClassQ& v, const TwoClassQ& H, const Rat& b)
{
    const EvenClassQ h = EvenClassQ::of(H);
    const EvenClassQ h2 = cup(h, h), h3 = cup(h2, h);
    if (integrate(h3) == 0)
        throw std::invalid_argument("reduce_along_H: H^3 = 0");
    const EvenClassQ w = exp_mul(TwoClassQ(-b * H), v);
    ChernQuadruple q;
    q.q0 = w.a * integrate(h3);
    q.q1 = integrate(cup(h2, EvenClassQ::of(w.B)));
    q.q2 = integrate(cup(h, EvenClassQ::of(w.C)));
    q.q3 = w.d;
    return q;
}

ChernQuadruple twist(const ChernQuadruple& q, const Rat& b)
{
    return {q.q0,
            q.q1 - b * q.q0,
            q.q2 - b * q.q1 + b * b * q.q0 / 2,
            q.q3 - b * q.q2 + b * b * q.q1 / 2 - b * b * b * q.q0 / 6};
}

ExtRat slope_mu(const ChernQuadruple& q)
{
    if (q.q0 == 0)
        return ExtRat::inf();
    return ExtRat::of(q.q1 / q.q0);
}

ExtRat tilt_slope_nu(const ChernQuadruple& q, const Rat& a)
{
    if (a <= 0)
        throw std::invalid_argument("tilt_slope_nu: need a > 0");
    if (q.q1 == 0)
        return ExtRat::inf();
    return ExtRat::of((q.q2 - a * a * q.q0 / 2) / q.q1);
}

Bogomolov bogomolov(const ChernQuadruple& q)
{
    Bogomolov r;
    r.value = q.q1 * q.q1 - 2 * q.q0 * q.q2;
    r.nonnegative = r.value >= 0;
    return r;
}

CentralCharge central_charge(const ChernQuadruple& q, int dim, const Rat& a)
{
    const Rat s2 = 3 * a * a;
    switch (dim) {
    case 1:
        return {-q.q1, q.q0};
    case 2:
        return {-q.q2 + s2 / 2 * q.q0, q.q1};
    case 3:
        return {-q.q3 + s2 / 2 * q.q1, q.q2 - s2 / 6 * q.q0};
    default:
        throw std::invalid_argument("central_charge: dim must be 1, 2 or 3");
    }
}

bool params_valid(const StabParams& p)
{
    return p.a > 0 && p.c > p.a * p.a / 6 + abs(p.d) * p.a / 2;
}

CentralCharge central_charge_abcd(const ChernQuadruple& q, const StabParams& p)
{
    const ChernQuadruple t = twist(q, p.b);
    return {-t.q3 + p.d * t.q2 + p.c * t.q1, t.q2 - p.a * p.a / 2 * t.q0};
}

bool bg_inequality(const ChernQuadruple& q, const Rat& a) { return q.q3 <= 3 * a * a * q.q1 / 18; }

} // namespace abel3
