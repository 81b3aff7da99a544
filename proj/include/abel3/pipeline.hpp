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

// Verified search for the lattice data behind the period-index bound:
// lift -> orbit trick -> prime avoidance -> v0 -> FM -> line-bundle twist ->
// curve class of type (1,1,d) -> DT positivity.

#include "abel3/dtseries.hpp"
#include "abel3/evenring.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace abel3 {

struct SearchConfig {
    std::uint64_t seed = 7;
    long lift_attempts = 400000;
    int lift_candidates = 8;  // positive-root lifts collected before choosing
    int lift_max_weight = 2;  // |entries| of the perturbation w in u = theta + n w
    int lift_max_support = 6; // nonzero entries of w
    long prime_bound = 200;   // scan for ell
    long genericity_attempts = 20000;
    long orbit_max_m = 10000;
    int A_max = 15;
    int k_min = 1, k_max = 12;
    long dt_max_index = 2000000;
};

// g = identity mod N, det g = 1; checked on construction.
struct Gamma6Element {
    IMat g;
    Int level;

    Gamma6Element(IMat g_, Int level_);
    static Gamma6Element identity(const Int& level);
};

// g^* u = g^T u g
TwoClassQ act(const IMat& g, const TwoClassQ& u);

/* Integral symplectic basis: P unimodular with P^T M P = [[0, D], [-D, 0]],
 * D = diag(d1, d2, d3), d1 | d2 | d3, d_i >= 0. */
struct SymplecticBasis {
    IMat P;
    std::array<Int, 3> d;
};
SymplecticBasis symplectic_basis(const IMat& M);

/* Pullback along the sublattice spanned by e1 x1, e2 x2, e3 x3, y1, y2, y3 of
 * an adapted basis of u; the result is written in that sublattice basis and
 * has type (e1 d1, e2 d2, e3 d3). */
struct IsogenyPullback {
    TwoClassQ form;
    IMat basis; // adapted basis of the original lattice (columns)
    std::array<Int, 3> type;
};
IsogenyPullback isogeny_pullback(const TwoClassQ& u, const std::array<Int, 3>& e);

// Genericity quantities of an alternating matrix in split coordinates.
struct OrbitGenericity {
    Int a16, g; // a16 and a13 a26 - a16 a23 - a12 a36
    bool ok() const { return a16 != 0 && g != 0; }
};
OrbitGenericity orbit_genericity(const IMat& A_split);

// The unipotent E(x, y, z) of the orbit trick, in split coordinates.
IMat orbit_unipotent(const Int& x, const Int& y, const Int& z);

struct OrbitResult {
    bool found = false;
    long randomization_steps = 0;
    Int m;
    std::array<Int, 3> xyz;
    OrbitGenericity genericity;
    IMat P;         // H-symplectic basis
    IMat T;         // preliminary randomization (split coordinates)
    IMat E;         // orbit unipotent (split coordinates)
    IMat g;         // P T E P^-1, acting in the original coordinates
    TwoClassQ v;    // g^* u
    Cubic cubic;    // p_v(t)
    std::string failure;
};

OrbitResult orbit_search(const TwoClassQ& u, const TwoClassQ& H, const Int& N, const SearchConfig& cfg,
                         std::mt19937_64& rng);

struct LiftResult {
    bool found = false;
    TwoClassQ u;
    Int ell;
    Cubic cubic;
    bool positive_roots = false;
    long attempts = 0;
    std::string failure;
};

LiftResult find_lift(const TwoClassQ& theta, const Int& n, const TwoClassQ& H, const SearchConfig& cfg,
                     std::mt19937_64& rng);

struct PrimeAvoidance {
    bool found = false;
    Int A;
    int k = 0;
    FourClassQ z;
    AltType z_type;
    Int d;
    Rat delta_v0;
    // checking-lemma certificate
    std::array<Int, 3> coefficients; // of u^2/2, u H, H^2/2
    Int coefficient_gcd;
    std::vector<Int> bad_primes;     // P0
    std::vector<int> ranks_mod_p;
    bool lemma_certificate = false;
    std::string failure;
};

/* z = (A^2 u - n^k H)^2 / 2 + n A u^2 / 2, the squares taken on the dual
 * torus: u and H enter through star(u^2/2) and star(H^2/2). This is exactly
 * the degree-4 part -beta of the reduced class, see run_pipeline. */
FourClassQ prime_avoidance_class(const TwoClassQ& u, const TwoClassQ& H, const Int& n, const Int& A, int k);
// v0 = (n^2, -n A u, (A^2 u^2 - n^k H^2) / 2, 1)
EvenClassQ initial_class(const TwoClassQ& u, const TwoClassQ& H, const Int& n, const Int& A, int k);

PrimeAvoidance prime_avoidance_search(const TwoClassQ& u, const TwoClassQ& H, const Int& n,
                                      const SearchConfig& cfg);

struct Stage {
    std::string name;
    bool passed = false;
    std::string note;
};

struct PipelineCertificate {
    Int n;
    std::array<Int, 3> h_type;
    TwoClassQ H, theta;
    SearchConfig cfg;
    LiftResult lift;
    OrbitResult orbit;
    PrimeAvoidance avoidance;
    EvenClassQ v0, w0, terminal;
    TwoClassQ line_bundle;   // degree-2 part of w0 (rank 1), removed by exp(-L)
    FourClassQ beta;         // terminal = (1, 0, -beta, -chi)
    Int chi;                 // Euler characteristic of the terminal class
    AltType beta_type;
    Rat delta_v0, delta_w0, delta_terminal;
    DTVerdict dt;
    std::vector<Stage> stages;

    bool passed() const;
    std::optional<std::string> failed_stage() const;
};

PipelineCertificate run_pipeline(const Int& n, const std::array<Int, 3>& h_type, const TwoClassQ& theta,
                                 const SearchConfig& cfg);

inline constexpr int kCertificateSchema = 1;

nlohmann::json certificate_to_json(const PipelineCertificate& c);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> checks;   // every check performed
    std::vector<std::string> failures;
};

// Replays every recorded equality and inequality from the JSON record alone.
VerifyReport verify_certificate(const nlohmann::json& cert);

} // namespace abel3
