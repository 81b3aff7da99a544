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

// Twisted Mukai lattices exp(B) * H^ev(X, Z) of an abelian threefold with a
// rational B-field, and the Hodge-theoretic invariants read off them.

#include "abel3/evenring.hpp"

#include <vector>

namespace abel3 {

/* B-field datum. ns2 spans the rational Hodge classes in degree 2, hdg4 those
 * in degree 4; an empty list means no Hodge classes in that degree. */
struct HodgeDatum {
    TwoClassQ B;
    Int n = 1;
    std::vector<TwoClassQ> ns2;
    std::vector<FourClassQ> hdg4;

    void validate() const; // n > 0, n B integral, ns2 integral
};

// n B integral and n B = theta mod n.
bool theta_field_check(const TwoClassQ& B, const Int& n, const TwoClassQ& theta);

// Least N >= 1 with N B in NS_Q + H^2(Z).
Int period(const HodgeDatum& d);

/* Least N with H1 in NS_Q, H2 in Hdg4_Q such that
 *   N B - H1          is integral (= lambda),
 *   N B^2/2 - B H1 + H2 is integral (= mu).
 * Equivalently (N, -lambda, mu, 0) is an integral class whose exp(B)-twist is
 * Hodge in degrees 0, 2, 4. */
struct IndexWitness {
    Int N;
    TwoClassQ H1;
    FourClassQ H2;
    RVec h1_coeffs; // over ns2
    RVec h2_coeffs; // over hdg4
    TwoClassQ lambda;
    FourClassQ mu;
    EvenClassQ hodge_class() const { return {Rat(N), -lambda, mu, Rat(0)}; }
};

IndexWitness hodge_theoretic_index(const HodgeDatum& d);
bool verify_index_witness(const HodgeDatum& d, const IndexWitness& w);

// Same minimum, from a single lattice solve with N as an extra unknown.
Int hodge_theoretic_index_lattice(const HodgeDatum& d);

// True iff exp(B) v is Hodge in degrees 0, 2, 4 (degree 6 is always Hodge).
bool is_twisted_hodge(const HodgeDatum& d, const EvenClassQ& v);

struct HodgeSublattice {
    std::vector<EvenClassQ> basis; // integral; only basis[0] has nonzero rank
    Int min_rank;                  // rank coordinate of basis[0]
    RMat gram;                     // euler_pairing(basis[i], basis[j])
    Int gram_gcd;
};

HodgeSublattice hodge_sublattice(const HodgeDatum& d);

// theta given by integral representatives.
int symbol_length_prime_power(const TwoClassQ& theta, const Int& p, int e);
int symbol_length(const TwoClassQ& theta, const Int& n);

struct BrauerSymbolLength {
    int value = 0;
    TwoClassQ minimizer;
    long coset_size = 0;
};
BrauerSymbolLength brauer_symbol_length(const TwoClassQ& theta, const Int& n,
                                        const std::vector<TwoClassQ>& ns_gens, long cap = 1000000);

HodgeDatum gabber_instance(const Int& ell);

// (n^2, -n^2 B, n^2 B^2/2 + x H^2/2, y w)
EvenClassQ hodge_class_family(const Int& n, const TwoClassQ& B, const Rat& x, const Rat& y, const TwoClassQ& H);

// #V = ind / ind_Hdg for an externally supplied ind.
Int voisin_order(const Int& ind, const Int& ind_hdg);

/* Datum with NS = Z H, Hdg4 = Z H^2/2 (H principal) and a class b, prime ell
 * with: ind_Hdg(b/ell) = ell^2 and b H - c H^2/2 not in ell H^4(Z) for every
 * c mod ell. On such data every Euler pairing of twisted Hodge classes is
 * divisible by ell. */
struct PathologyInstance {
    HodgeDatum datum;
    TwoClassQ b;
    Int ell;
    bool picard_rank_one = false;
    bool index_is_ell_squared = false;
    bool bH_not_hodge_mod_ell = false;
};
bool bH_not_hodge_mod_ell(const TwoClassQ& b, const TwoClassQ& H, const Int& ell);
PathologyInstance euler_pathology_instance(const Int& ell);

// Gaussian rationals p/q + i r/s.
struct GaussRat {
    Rat re, im;

    GaussRat() = default;
    GaussRat(const Rat& r) : re(r) {}
    GaussRat(int r) : re(r) {}
    GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    GaussRat operator/(const GaussRat& o) const
    {
        Rat n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

} // namespace abel3

namespace Eigen {
template <> struct NumTraits<abel3::GaussRat> : GenericNumTraits<abel3::GaussRat> {
    using Real = abel3::GaussRat;
    using NonInteger = abel3::GaussRat;
    using Nested = abel3::GaussRat;
    using Literal = abel3::GaussRat;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 16
    };
};
} // namespace Eigen

namespace abel3 {

using CMat = Mat<GaussRat>;

struct SiegelPoint {
    CMat Z; // 3x3
};

// Z symmetric and Im Z positive definite (exact leading minors).
bool in_siegel_domain(const SiegelPoint& z);

/* M = [[A, B], [-B^T, C]] in a symplectic basis x1..x3, y1..y3. Returns
 * A - B Z + Z B^T + Z C Z, which vanishes iff M is of type (1,1) on the
 * abelian threefold with period matrix Z. */
CMat hodge_locus_residual(const RMat& M, const SiegelPoint& z);

} // namespace abel3
