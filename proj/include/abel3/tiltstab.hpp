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

// Numerical layer of tilt stability on the slice w = sqrt(3) a H, D = b H.
//
// Gauge: a class is reduced to q = (H^3 ch0, H^2 ch1, H ch2, ch3). Every
// w-power then becomes a power of s = sqrt(3) a times the matching q_i, so
// all quantities are rational once odd powers of s are factored out.

#include "abel3/evenring.hpp"

#include <compare>
#include <string>

namespace abel3 {

// Rationals extended by a single +infinity, ordered above everything.
struct ExtRat {
    bool infinite = false;
    Rat value;

    static ExtRat inf() { return {true, Rat(0)}; }
    static ExtRat of(const Rat& v) { return {false, v}; }

    std::strong_ordering operator<=>(const ExtRat& o) const
    {
        if (infinite || o.infinite)
            return int(infinite) <=> int(o.infinite);
        return value < o.value ? std::strong_ordering::less
            : value > o.value  ? std::strong_ordering::greater
                               : std::strong_ordering::equal;
    }
    bool operator==(const ExtRat& o) const { return infinite == o.infinite && (infinite || value == o.value); }
    std::string str() const { return infinite ? "+inf" : to_string(value); }
};

struct ChernQuadruple {
    Rat q0, q1, q2, q3;
    bool operator==(const ChernQuadruple&) const = default;
};

struct StabParams {
    Rat a, b, c, d;
};

// re + s * im_per_s * i where s = sqrt(3) a; central_charge_abcd has no
// hidden factor, so there im_per_s is the imaginary part itself.
struct CentralCharge {
    Rat re, im_per_s;
    bool operator==(const CentralCharge&) const = default;
};

// q_i = int exp(-bH) v H^{3-i}, degree-2i part paired against H^{3-i}.
ChernQuadruple reduce_along_H(const EvenClassQ& v, const TwoClassQ& H, const Rat& b = 0);

// Twist of an already reduced quadruple by D = bH.
ChernQuadruple twist(const ChernQuadruple& q, const Rat& b);

ExtRat slope_mu(const ChernQuadruple& q);

// (q2 - a^2 q0 / 2) / q1 = sqrt(3) a * (w ch2 - w^3 ch0 / 6) / (w^2 ch1)
ExtRat tilt_slope_nu(const ChernQuadruple& q, const Rat& a);

struct Bogomolov {
    Rat value; // q1^2 - 2 q0 q2
    bool nonnegative = false;
};
Bogomolov bogomolov(const ChernQuadruple& q);

/* dim 3: (-ch3 + w^2/2 ch1) + i (w ch2 - w^3/6 ch0)
 * dim 2: (-ch2 + w^2/2 ch0) + i w ch1, with q read as (H^2 ch0, H ch1, ch2)
 * dim 1: -ch1 + i w ch0, with q read as (H ch0, ch1). */
CentralCharge central_charge(const ChernQuadruple& q, int dim, const Rat& a);

bool params_valid(const StabParams& p); // a > 0, c > a^2/6 + |d| a / 2

// (-ch3 + d H ch2 + c H^2 ch1) + i (H ch2 - a^2/2 H^3 ch0), all b-twisted;
// q is the untwisted reduction.
CentralCharge central_charge_abcd(const ChernQuadruple& q, const StabParams& p);

// ch3 <= w^2/18 ch1, i.e. q3 <= 3 a^2 q1 / 18 (non-strict).
bool bg_inequality(const ChernQuadruple& q, const Rat& a);

} // namespace abel3
