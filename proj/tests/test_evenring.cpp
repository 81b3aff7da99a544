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
#include "oracles.hpp"

#include <doctest.h>

using namespace abel3;
using namespace abel3::testing;

namespace {

EvenClassQ omega() { return EvenClassQ::point(); }

// (1, 0, -beta, -n) with beta = star(x12 + x34 + d x56)
EvenClassQ curve_class(long d, long n)
{
    FourClassQ beta = star(form_of_type({1, 1, d}));
    return {Rat(1), {}, -beta, Rat(-n)};
}

} // namespace

TEST_CASE("coordinate tables")
{
    for (int k = 0; k < ext::kPairs; ++k) {
        auto [i, j] = ext::pairs[k];
        CHECK(ext::pair_index(i, j) == k);
        CHECK(ext::pair_index(j, i) == k);
        // x_ij ^ x*_ij = w
        unsigned s = ext::pair_mask(k), t = 63u ^ s;
        CHECK(ext::wedge_sign(s, t) * ext::dual_sign(k) == 1);
    }
}

TEST_CASE("cup product: unit, signs, commutativity, associativity")
{
    std::mt19937_64 rng(21);
    EvenClassQ v = random_even(rng);
    CHECK(cup(EvenClassQ::unit(), v) == v);

    // x1^x4 . x2^x5 = x1^x4^x2^x5 = -x1^x2^x4^x5 = -x*_36
    TwoClassQ a, b;
    a(0, 3) = 1;
    b(1, 4) = 1;
    FourClassQ expect;
    expect(2, 5) = -1;
    CHECK(cup(a, b).C == expect);
    CHECK(cup(a, a).C == FourClassQ());

    for (int t = 0; t < 30; ++t) {
        EvenClassQ x = random_even(rng), y = random_even(rng), z = random_even(rng);
        CHECK(cup(x, y) == cup(y, x));
        CHECK(cup(cup(x, y), z) == cup(x, cup(y, z)));
        CHECK(cup(x, y + z) == cup(x, y) + cup(x, z));
    }
}

TEST_CASE("integration and the degree-2 by degree-4 pairing")
{
    CHECK(integrate(omega()) == 1);
    CHECK(integrate(EvenClassQ::unit()) == 0);
    const TwoClassQ H = principal_form();
    CHECK(integrate(cup(H, cup(H, H))) == 6);
    CHECK(integrate(exp_class(H)) == 1);

    std::mt19937_64 rng(22);
    for (int t = 0; t < 50; ++t) {
        TwoClassQ B = random_two(rng), b = random_two(rng);
        // with x_ij ^ x*_ij = w, the pairing is the coordinate dot product
        CHECK(integrate(cup(EvenClassQ::of(B), EvenClassQ::of(star(b)))) == B.c.dot(b.c));
        // B^3 / 6 = Pf(B) w
        CHECK(integrate(exp_class(B)) == pfaffian(B.matrix()));
        CHECK(integrate(cup(B, cup(B, B))) == 6 * pfaffian(B.matrix()));
    }
}

TEST_CASE("exp_mul: identity, group law, degree-4 part")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        TwoClassQ B = random_two(rng, -4, 4), B2 = random_two(rng, -4, 4);
        EvenClassQ v = random_even(rng);
        CHECK(exp_mul(TwoClassQ(), v) == v);
        CHECK(exp_mul(B, exp_mul(B2, v)) == exp_mul(B + B2, v));
        CHECK(exp_mul(-B, exp_mul(B, v)) == v);
        // r B^2/2 + B x + y
        FourClassQ c4 = v.a * half_square(B) + cup(B, v.B).C + v.C;
        CHECK(exp_mul(B, v).C == c4);
        CHECK(exp_mul(B, v).B == v.B + v.a * B);
        CHECK(exp_mul(B, v).a == v.a);
    }
}

TEST_CASE("star")
{
    const TwoClassQ H = principal_form();
    CHECK(star(half_square(H)) == H);
    TwoClassQ x12;
    x12(0, 1) = 1;
    // x*_12 is the dual monomial of x3^x4^x5^x6, one coordinate
    CHECK(star(x12).c == x12.c);
    std::mt19937_64 rng(24);
    for (int t = 0; t < 100; ++t) {
        FourClassQ c = random_four(rng);
        CHECK(star(star(c)) == c);
    }
}

TEST_CASE("Igusa discriminant values")
{
    CHECK(igusa_discriminant(EvenClassQ::unit() + omega()) == Rat(-1, 4));
    CHECK(igusa_discriminant(EvenClassQ::unit()) == 0);
    CHECK(igusa_discriminant(exp_class(principal_form())) == 0);
    for (long d = 1; d <= 20; ++d)
        for (long n = -10; n <= 10; ++n)
            CHECK(igusa_discriminant(curve_class(d, n)) == Rat(d) - Rat(n * n, 4));
}

TEST_CASE("Igusa discriminant invariance")
{
    std::mt19937_64 rng(25);
    for (int t = 0; t < 200; ++t) {
        TwoClassQ w = random_two(rng);
        EvenClassQ v = random_even(rng);
        Rat dv = igusa_discriminant(v);
        CHECK(igusa_discriminant(exp_mul(w, v)) == dv);
        CHECK(igusa_discriminant(fm_transform(v)) == dv);
        CHECK(igusa_discriminant(Rat(3) * v) == 81 * dv); // quartic
        // semihomogeneous classes
        long r = uniform(rng, -5, 5);
        CHECK(igusa_discriminant(Rat(r) * exp_mul(w, EvenClassQ::unit())) == 0);
    }
}

TEST_CASE("Euler pairing")
{
    CHECK(euler_pairing(EvenClassQ::unit(), omega()) == 1);
    std::mt19937_64 rng(26);
    for (int t = 0; t < 100; ++t) {
        EvenClassQ v = random_even(rng), w = random_even(rng);
        TwoClassQ B = random_two(rng, -4, 4);
        CHECK(euler_pairing(v, w) == -euler_pairing(w, v));
        CHECK(euler_pairing(exp_mul(B, v), exp_mul(B, w)) == euler_pairing(v, w));
        CHECK(euler_pairing(fm_transform(v), fm_transform(w)) == euler_pairing(v, w));
    }
}

TEST_CASE("FM transform")
{
    CHECK(fm_transform(EvenClassQ::unit()) == -omega());
    std::mt19937_64 rng(27);
    for (int t = 0; t < 100; ++t) {
        EvenClassQ v = random_even(rng);
        CHECK(fm_transform(fm_transform(v)) == -v);
    }
    // v0 = (n^2, -nAu, (A^2 u^2 - n^k H^2)/2, 1) maps to
    // w0 = (1, -(A^2 (u^2)* - n^k (H^2)*)/2, -nA u*, -n^2)
    const Rat n = 3, A = 2, nk = 27;
    TwoClassQ u = random_two(rng, -3, 3);
    const TwoClassQ H = principal_form();
    EvenClassQ v0{n * n, -(n * A) * u, A * A * half_square(u) - nk * half_square(H), Rat(1)};
    EvenClassQ w0{Rat(1), -(A * A * star(half_square(u)) - nk * star(half_square(H))), -(n * A) * star(u),
                  -n * n};
    CHECK(fm_transform(v0) == w0);
    CHECK(igusa_discriminant(v0) == igusa_discriminant(w0));
}

TEST_CASE("characteristic Pfaffian")
{
    const TwoClassQ H = principal_form();
    CHECK(char_pfaffian_cubic(H, H) == Cubic{1, -3, 3, -1});
    CHECK(char_pfaffian_cubic(TwoClassQ(), H) == Cubic{1, 0, 0, 0});
    CHECK(char_pfaffian_cubic(TwoClassQ(), form_of_type({1, 2, 4})) == Cubic{8, 0, 0, 0});

    // block-diagonal in both the adjacent and the split layout
    TwoClassQ u = form_of_type({2, -3, 5});
    CHECK(char_pfaffian_cubic(u, H) == Cubic{1, -4, -11, 30}); // (t-2)(t+3)(t-5)
    TwoClassQ Hs, us;
    for (int i = 0; i < 3; ++i) {
        Hs(i, i + 3) = 1;
        us(i, i + 3) = std::array<long, 3>{2, -3, 5}[i];
    }
    CHECK(char_pfaffian_cubic(us, Hs) == Cubic{1, -4, -11, 30});

    std::mt19937_64 rng(28);
    int checked = 0;
    while (checked < 100) {
        TwoClassQ h = random_two(rng, -3, 3), v = random_two(rng, -5, 5);
        Rat pfh = pfaffian(h.matrix());
        if (pfh == 0)
            continue;
        ++checked;
        CharPfaffian cp = char_pfaffian(v, h);
        CHECK(cp.agree);
        CHECK(cp.interpolated == cp.closed);
        CHECK(cp.closed.a3 == abs(pfh));
        CHECK(cp.closed.a0 == sign(pfh) * -pfaffian(v.matrix()));
        // points outside the interpolation set
        for (long t : {-2, 5, 11}) {
            Rat direct = pfaffian((Rat(t) * h - v).matrix());
            CHECK(sign(pfh) * direct == cp.closed(Rat(t)));
        }
    }
}

TEST_CASE("alternating type of classes")
{
    AltType t = alt_type(form_of_type({1, 1, 7}));
    CHECK(t.d == std::vector<Int>{1, 1, 7});
    CHECK(alt_type(star(form_of_type({2, 4, 8}))).d == std::vector<Int>{2, 4, 8});
}
