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

// Even cohomology of a rank-6 lattice with basis x1..x6 and volume form
// w = x1^x2^...^x6. Degree-2 classes carry coordinates b_ij (i < j,
// lexicographic) on x_i^x_j; degree-4 classes carry c_ij on the dual
// monomials x*_ij, normalized by x_ij ^ x*_ij = w.

#include "abel3/exactalg.hpp"

#include <array>
#include <bit>
#include <utility>

namespace abel3 {

namespace ext {

inline constexpr int kPairs = 15;

constexpr std::array<std::pair<int, int>, kPairs> make_pairs()
{
    std::array<std::pair<int, int>, kPairs> p{};
    int k = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            p[k++] = {i, j};
    return p;
}
inline constexpr auto pairs = make_pairs();

// 0-based (i, j), i != j, to coordinate index.
constexpr int pair_index(int i, int j)
{
    if (i > j)
        std::swap(i, j);
    return i * 5 - i * (i - 1) / 2 + (j - i - 1);
}

constexpr unsigned pair_mask(int k) { return (1u << pairs[k].first) | (1u << pairs[k].second); }

// Sign of x_S ^ x_T for disjoint sorted monomials S, T.
constexpr int wedge_sign(unsigned s, unsigned t)
{
    int inv = 0;
    for (int a = 0; a < 6; ++a)
        if (s & (1u << a))
            for (int b = 0; b < a; ++b)
                if (t & (1u << b))
                    ++inv;
    return inv % 2 ? -1 : 1;
}

// x*_ij = dual_sign(k) * x_{complement}
constexpr int dual_sign(int k) { return wedge_sign(pair_mask(k), 63u ^ pair_mask(k)); }

} // namespace ext

template <class T> using Coords = Eigen::Matrix<T, ext::kPairs, 1>;

template <class T> struct TwoClass {
    Coords<T> c = Coords<T>::Zero();

    TwoClass() = default;
    explicit TwoClass(const Coords<T>& v) : c(v) {}

    T& operator()(int i, int j) { return c(ext::pair_index(i, j)); }
    T operator()(int i, int j) const
    {
        T v = c(ext::pair_index(i, j));
        return i < j ? v : T(-v);
    }

    // Alternating 6x6 matrix with M(i,j) = b_ij for i < j.
    Mat<T> matrix() const
    {
        Mat<T> M = Mat<T>::Zero(6, 6);
        for (int k = 0; k < ext::kPairs; ++k) {
            auto [i, j] = ext::pairs[k];
            M(i, j) = c(k);
            M(j, i) = -c(k);
        }
        return M;
    }
    static TwoClass from_matrix(const Mat<T>& M)
    {
        if (M.rows() != 6 || !is_alternating(M))
            throw std::invalid_argument("TwoClass: need an alternating 6x6 matrix");
        TwoClass r;
        for (int k = 0; k < ext::kPairs; ++k)
            r.c(k) = M(ext::pairs[k].first, ext::pairs[k].second);
        return r;
    }
    bool is_integral() const
    {
        if constexpr (std::is_same_v<T, Rat>) {
            for (int k = 0; k < ext::kPairs; ++k)
                if (!abel3::is_integer(c(k)))
                    return false;
        }
        return true;
    }

    TwoClass operator+(const TwoClass& o) const { return TwoClass(Coords<T>(c + o.c)); }
    TwoClass operator-(const TwoClass& o) const { return TwoClass(Coords<T>(c - o.c)); }
    TwoClass operator-() const { return TwoClass(Coords<T>(-c)); }
    friend TwoClass operator*(const T& s, const TwoClass& v) { return TwoClass(Coords<T>(s * v.c)); }
    bool operator==(const TwoClass& o) const { return c == o.c; }
};

// Same coordinate layout as TwoClass, but on the dual monomials x*_ij.
template <class T> struct FourClass {
    Coords<T> c = Coords<T>::Zero();

    FourClass() = default;
    explicit FourClass(const Coords<T>& v) : c(v) {}

    T& operator()(int i, int j) { return c(ext::pair_index(i, j)); }
    Mat<T> matrix() const { return TwoClass<T>(c).matrix(); }
    bool is_integral() const { return TwoClass<T>(c).is_integral(); }

    FourClass operator+(const FourClass& o) const { return FourClass(Coords<T>(c + o.c)); }
    FourClass operator-(const FourClass& o) const { return FourClass(Coords<T>(c - o.c)); }
    FourClass operator-() const { return FourClass(Coords<T>(-c)); }
    friend FourClass operator*(const T& s, const FourClass& v) { return FourClass(Coords<T>(s * v.c)); }
    bool operator==(const FourClass& o) const { return c == o.c; }
};

template <class T> struct EvenClass {
    T a{0};
    TwoClass<T> B;
    FourClass<T> C;
    T d{0};

    EvenClass() = default;
    EvenClass(T a_, TwoClass<T> B_, FourClass<T> C_, T d_)
        : a(std::move(a_)), B(std::move(B_)), C(std::move(C_)), d(std::move(d_))
    {
    }

    static EvenClass unit() { return EvenClass(T(1), {}, {}, T(0)); }
    static EvenClass point() { return EvenClass(T(0), {}, {}, T(1)); }
    static EvenClass of(const TwoClass<T>& b) { return EvenClass(T(0), b, {}, T(0)); }
    static EvenClass of(const FourClass<T>& c) { return EvenClass(T(0), {}, c, T(0)); }

    bool is_integral() const
    {
        if constexpr (std::is_same_v<T, Rat>)
            return abel3::is_integer(a) && abel3::is_integer(d) && B.is_integral() && C.is_integral();
        return true;
    }

    EvenClass operator+(const EvenClass& o) const { return {a + o.a, B + o.B, C + o.C, d + o.d}; }
    EvenClass operator-(const EvenClass& o) const { return {a - o.a, B - o.B, C - o.C, d - o.d}; }
    EvenClass operator-() const { return {-a, -B, -C, -d}; }
    friend EvenClass operator*(const T& s, const EvenClass& v) { return {s * v.a, s * v.B, s * v.C, s * v.d}; }
    bool operator==(const EvenClass& o) const { return a == o.a && B == o.B && C == o.C && d == o.d; }
};

using TwoClassQ = TwoClass<Rat>;
using FourClassQ = FourClass<Rat>;
using EvenClassQ = EvenClass<Rat>;

template <class T> TwoClass<Rat> to_rat(const TwoClass<T>& v) { return TwoClass<Rat>(v.c.template cast<Rat>()); }

// Full 64-entry exterior-algebra vector, indexed by monomial bitmask.
template <class T> using Exterior = std::array<T, 64>;

template <class T> Exterior<T> to_exterior(const EvenClass<T>& v)
{
    Exterior<T> e;
    e.fill(T(0));
    e[0] = v.a;
    e[63] = v.d;
    for (int k = 0; k < ext::kPairs; ++k) {
        e[ext::pair_mask(k)] = v.B.c(k);
        e[63u ^ ext::pair_mask(k)] = ext::dual_sign(k) * v.C.c(k);
    }
    return e;
}

template <class T> EvenClass<T> from_exterior(const Exterior<T>& e)
{
    EvenClass<T> v;
    v.a = e[0];
    v.d = e[63];
    for (int k = 0; k < ext::kPairs; ++k) {
        v.B.c(k) = e[ext::pair_mask(k)];
        v.C.c(k) = ext::dual_sign(k) * e[63u ^ ext::pair_mask(k)];
    }
    return v;
}

// Graded-commutative product, truncated above degree 6.
template <class T> EvenClass<T> cup(const EvenClass<T>& u, const EvenClass<T>& v)
{
    auto eu = to_exterior(u), ev = to_exterior(v);
    Exterior<T> r;
    r.fill(T(0));
    for (unsigned s = 0; s < 64; ++s) {
        if (std::popcount(s) % 2 || eu[s] == 0)
            continue;
        for (unsigned t = 0; t < 64; ++t) {
            if ((s & t) || std::popcount(t) % 2 || ev[t] == 0)
                continue;
            T term = eu[s] * ev[t];
            if (ext::wedge_sign(s, t) < 0)
                r[s | t] -= term;
            else
                r[s | t] += term;
        }
    }
    return from_exterior(r);
}

template <class T> EvenClass<T> cup(const TwoClass<T>& u, const EvenClass<T>& v) { return cup(EvenClass<T>::of(u), v); }

template <class T> EvenClass<T> cup(const TwoClass<T>& u, const TwoClass<T>& v)
{
    return cup(EvenClass<T>::of(u), EvenClass<T>::of(v));
}

// Degree-4 part of u^2 / 2.
template <class T> FourClass<T> half_square(const TwoClass<T>& u)
{
    FourClass<T> c = cup(u, u).C;
    return T(1) / T(2) * c;
}

template <class T> T integrate(const EvenClass<T>& v) { return v.d; }

// exp(B) = 1 + B + B^2/2 + B^3/6
template <class T> EvenClass<T> exp_class(const TwoClass<T>& B)
{
    EvenClass<T> b = EvenClass<T>::of(B);
    EvenClass<T> b2 = cup(b, b);
    EvenClass<T> b3 = cup(b2, b);
    return EvenClass<T>::unit() + b + T(1) / T(2) * b2 + T(1) / T(6) * b3;
}

template <class T> EvenClass<T> exp_mul(const TwoClass<T>& B, const EvenClass<T>& v) { return cup(exp_class(B), v); }

// Contraction against w; with the x*_ij normalization it is the identity on
// coordinates, so star(star(x)) = x in every degree.
template <class T> TwoClass<T> star(const FourClass<T>& c) { return TwoClass<T>(c.c); }
template <class T> FourClass<T> star(const TwoClass<T>& b) { return FourClass<T>(b.c); }

// v^ = (a, -B, C, -d)
template <class T> EvenClass<T> dual(const EvenClass<T>& v) { return {v.a, -v.B, v.C, -v.d}; }

template <class T> T euler_pairing(const EvenClass<T>& v, const EvenClass<T>& w)
{
    return integrate(cup(dual(v), w));
}

// (a, B, C, d) -> (d, -star C, star B, -a)
template <class T> EvenClass<T> fm_transform(const EvenClass<T>& v)
{
    return {v.d, -star(v.C), star(v.B), -v.a};
}

template <class T> T pfaffian(const TwoClass<T>& b) { return pfaffian(b.matrix()); }
template <class T> T pfaffian(const FourClass<T>& c) { return pfaffian(c.matrix()); }

Rat igusa_discriminant(const EvenClassQ& v);

struct CharPfaffian {
    Cubic interpolated; // from Pf(tH - u) at t = 0..3
    Cubic closed;       // from the binomial expansion of (tH - u)^3 / 6
    bool agree = false;
};

// p_u(t) = sign(Pf H) * Pf(tH - u): leading coefficient |Pf H| > 0.
CharPfaffian char_pfaffian(const TwoClassQ& u, const TwoClassQ& H);
Cubic char_pfaffian_cubic(const TwoClassQ& u, const TwoClassQ& H); // asserts agreement

// x1^x2 + x3^x4 + x5^x6
TwoClassQ principal_form();
// Sum of d_i * x_{2i-1} ^ x_{2i}.
TwoClassQ form_of_type(const std::array<Int, 3>& d);

AltType alt_type(const TwoClassQ& b);
AltType alt_type(const FourClassQ& c);

} // namespace abel3
