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
#include "abel3/pipeline.hpp"
#include "abel3/io.hpp"

#include <algorithm>
#include <numeric>

namespace abel3 {

namespace {

IMat eye6() { return IMat::Identity(6, 6); }

IMat form_matrix(const TwoClassQ& u)
{
    if (!u.is_integral())
        throw std::invalid_argument("expected an integral 2-class");
    return to_int(u.matrix());
}

TwoClassQ form_of(const IMat& M) { return TwoClassQ::from_matrix(to_rat(M)); }

IMat inverse_unimodular(const IMat& P)
{
    RMat inv = to_rat(P).partialPivLu().inverse();
    return to_int(inv);
}

Rat cube(const TwoClassQ& u) { return integrate(cup(u, cup(u, u))); }

Int ipow(const Int& b, int e)
{
    Int r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

std::vector<Int> primes_up_to(long bound)
{
    std::vector<Int> ps;
    for (long p = 2; p <= bound; ++p)
        if (is_prime(Int(p)))
            ps.push_back(Int(p));
    return ps;
}

// basis vector i += c * basis vector j, applied to the Gram matrix and to P
void add_basis(IMat& M, IMat& P, int i, int j, const Int& c)
{
    P.col(i) += c * P.col(j);
    M.col(i) += c * M.col(j);
    M.row(i) += c * M.row(j);
}

void swap_basis(IMat& M, IMat& P, int i, int j)
{
    if (i == j)
        return;
    P.col(i).swap(P.col(j));
    M.col(i).swap(M.col(j));
    M.row(i).swap(M.row(j));
}

bool is_type(const AltType& t, const Int& d3)
{
    return t.rank == 6 && t.d.size() == 3 && t.d[0] == 1 && t.d[1] == 1 && t.d[2] == d3;
}

} // namespace

Gamma6Element::Gamma6Element(IMat g_, Int level_) : g(std::move(g_)), level(std::move(level_))
{
    if (g.rows() != 6 || g.cols() != 6)
        throw std::invalid_argument("Gamma6Element: need a 6x6 matrix");
    if (level <= 0)
        throw std::invalid_argument("Gamma6Element: level must be positive");
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (mod(g(i, j) - (i == j ? 1 : 0), level) != 0)
                throw std::invalid_argument("Gamma6Element: not congruent to the identity mod " + level.str());
    if (determinant(g) != 1)
        throw std::invalid_argument("Gamma6Element: determinant is not 1");
}

Gamma6Element Gamma6Element::identity(const Int& level) { return Gamma6Element(eye6(), level); }

TwoClassQ act(const IMat& g, const TwoClassQ& u)
{
    return TwoClassQ::from_matrix(to_rat(g).transpose() * u.matrix() * to_rat(g));
}

SymplecticBasis symplectic_basis(const IMat& Min)
{
    if (Min.rows() != 6 || !is_alternating(Min))
        throw std::invalid_argument("symplectic_basis: need an alternating 6x6 matrix");
    IMat M = Min, P = eye6();
    SymplecticBasis out;
    for (int r = 0; r < 6; r += 2) {
        for (;;) {
            // smallest nonzero entry of the remaining block
            int bi = -1, bj = -1;
            for (int i = r; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j)
                    if (M(i, j) != 0 && (bi < 0 || mp::abs(M(i, j)) < mp::abs(M(bi, bj))))
                        bi = i, bj = j;
            if (bi < 0)
                break;
            swap_basis(M, P, r, bi);
            swap_basis(M, P, r + 1, bj == r ? bi : bj);
            if (M(r, r + 1) < 0)
                swap_basis(M, P, r, r + 1);
            const Int a = M(r, r + 1);
            bool clean = true;
            for (int j = r + 2; j < 6; ++j) {
                add_basis(M, P, j, r + 1, -floor_div(M(r, j), a));
                add_basis(M, P, j, r, floor_div(M(r + 1, j), a));
                if (M(r, j) != 0 || M(r + 1, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // a must divide the rest; otherwise fold a bad row into row r
            int bad = -1;
            for (int i = r + 2; i < 6 && bad < 0; ++i)
                for (int j = i + 1; j < 6; ++j)
                    if (M(i, j) % a != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            add_basis(M, P, r, bad, Int(1));
        }
        out.d[r / 2] = M(r, r + 1);
    }
    // adjacent pairs (x1,y1,x2,y2,x3,y3) -> split order (x1,x2,x3,y1,y2,y3)
    static constexpr int order[6] = {0, 2, 4, 1, 3, 5};
    out.P.resize(6, 6);
    for (int k = 0; k < 6; ++k)
        out.P.col(k) = P.col(order[k]);
    return out;
}

IsogenyPullback isogeny_pullback(const TwoClassQ& u, const std::array<Int, 3>& e)
{
    IMat M = form_matrix(u);
    for (const auto& x : e)
        if (x <= 0)
            throw std::invalid_argument("isogeny_pullback: multipliers must be positive");
    SymplecticBasis sb = symplectic_basis(M);
    IsogenyPullback out;
    for (int i = 0; i < 3; ++i)
        out.type[i] = e[i] * sb.d[i];
    for (int i = 0; i + 1 < 3; ++i)
        if (out.type[i + 1] % out.type[i] != 0 && out.type[i] != 0)
            throw std::invalid_argument("isogeny_pullback: products e_i d_i do not form a divisibility chain");
    IMat S = eye6();
    for (int i = 0; i < 3; ++i)
        S(i, i) = e[i];
    IMat Q = sb.P * S;
    out.basis = sb.P;
    out.form = form_of(Q.transpose() * M * Q);
    return out;
}

OrbitGenericity orbit_genericity(const IMat& A)
{
    return {A(0, 5), A(0, 2) * A(1, 5) - A(0, 5) * A(1, 2) - A(0, 1) * A(2, 5)};
}

IMat orbit_unipotent(const Int& x, const Int& y, const Int& z)
{
    IMat E = eye6();
    E(0, 1) = x;
    E(0, 2) = x * y;
    E(1, 2) = y;
    E(2, 3) = z;
    return E;
}

OrbitResult orbit_search(const TwoClassQ& u, const TwoClassQ& H, const Int& N, const SearchConfig& cfg,
                         std::mt19937_64& rng)
{
    OrbitResult r;
    if (N <= 0)
        throw std::invalid_argument("orbit_search: level must be positive");
    const IMat U = form_matrix(u);
    SymplecticBasis sb = symplectic_basis(form_matrix(H));
    for (const auto& d : sb.d)
        if (d == 0)
            throw std::invalid_argument("orbit_search: H is degenerate");
    // the constant term -u^3/6 does not move; it must be negative
    if (char_pfaffian_cubic(u, H).a0 >= 0) {
        r.failure = "constant term of p_u is nonnegative (need u^3 > 0)";
        return r;
    }
    r.P = sb.P;
    const IMat Pinv = inverse_unimodular(r.P);
    IMat A = r.P.transpose() * U * r.P;

    r.T = eye6();
    r.genericity = orbit_genericity(A);
    // identity first: genericity only matters for the large-m argument
    if (Cubic p = char_pfaffian_cubic(u, H); cubic_positive_real_roots(p)) {
        r.found = true;
        r.m = 0;
        r.xyz = {Int(0), Int(0), Int(0)};
        r.E = eye6();
        r.g = eye6();
        r.v = u;
        r.cubic = p;
        return r;
    }
    std::uniform_int_distribution<int> pick(0, 5), coin(0, 1);
    while (!orbit_genericity(A).ok()) {
        if (r.randomization_steps >= cfg.genericity_attempts) {
            r.failure = "genericity not reached within the randomization cap";
            return r;
        }
        int i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        IMat G = eye6();
        G(i, j) = coin(rng) ? N : Int(-N);
        r.T = r.T * G;
        A = G.transpose() * A * G;
        ++r.randomization_steps;
    }
    r.genericity = orbit_genericity(A);
    const int sx = 1, sy = sign(r.genericity.a16), sz = sy * sign(r.genericity.g);

    for (long m = 0; m <= cfg.orbit_max_m; ++m) {
        Int x = sx * m * N, y = sy * m * N, z = sz * m * N;
        IMat E = orbit_unipotent(x, y, z);
        IMat V = Pinv.transpose() * (E.transpose() * A * E) * Pinv;
        TwoClassQ v = form_of(V);
        Cubic p = char_pfaffian_cubic(v, H);
        r.cubic = p;
        if (!cubic_positive_real_roots(p))
            continue;
        r.found = true;
        r.m = m;
        r.xyz = {x, y, z};
        r.E = E;
        r.g = Gamma6Element(r.P * r.T * E * Pinv, N).g;
        r.v = act(r.g, u);
        if (!(r.v == v))
            throw std::logic_error("orbit_search: g^* u disagrees with the split-coordinate computation");
        return r;
    }
    r.failure = "no good choice up to m = " + std::to_string(cfg.orbit_max_m) + "; last cubic a2 = "
        + to_string(r.cubic.a2) + ", a1 = " + to_string(r.cubic.a1);
    return r;
}

namespace {

// Exact for entries below ~1e5; used only as a prefilter.
long long pfaffian6(const std::array<std::array<long long, 6>, 6>& m)
{
    auto pf4 = [&](int a, int b, int c, int d) { return m[a][b] * m[c][d] - m[a][c] * m[b][d] + m[a][d] * m[b][c]; };
    long long acc = 0;
    int sgn = 1;
    for (int j = 1; j < 6; ++j, sgn = -sgn) {
        int rest[4], q = 0;
        for (int i = 1; i < 6; ++i)
            if (i != j)
                rest[q++] = i;
        acc += sgn * m[0][j] * pf4(rest[0], rest[1], rest[2], rest[3]);
    }
    return acc;
}

std::array<std::array<long long, 6>, 6> small_matrix(const IMat& M)
{
    std::array<std::array<long long, 6>, 6> m{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            m[i][j] = M(i, j).convert_to<long long>();
    return m;
}

} // namespace

LiftResult find_lift(const TwoClassQ& theta, const Int& n, const TwoClassQ& H, const SearchConfig& cfg,
                     std::mt19937_64& rng)
{
    LiftResult r;
    if (n < 2)
        throw std::invalid_argument("find_lift: need n >= 2");
    const IMat th = form_matrix(theta);
    // a lift with Pf = 1 exists only if Pf(theta) = 1 mod n
    if (mod(pfaffian(th) - 1, n) != 0) {
        r.failure = "Pf(theta) = " + mod(pfaffian(th), n).str() + " mod " + n.str()
            + ": no lift of type (1,1,1) with u^3 > 0";
        return r;
    }
    // symmetric residues on the upper triangle, mirrored
    auto residue = [&](const IMat& M) {
        IMat R = IMat::Zero(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                Int x = mod(M(i, j), n);
                R(i, j) = 2 * x > n ? Int(x - n) : x;
                R(j, i) = -R(i, j);
            }
        return R;
    };
    // Two families of lifts, alternating:
    //  sparse: theta + n w, w with a few entries of size <= lift_max_weight;
    //  split:  in an H-symplectic basis only the x-y block moves, by n S with
    //          S symmetric, 0 <= diag(S) <= lift_max_weight + 1, so p_u has
    //          real roots near 1 + n diag(S).
    const IMat base = residue(th);
    const SymplecticBasis sb = symplectic_basis(form_matrix(H));
    const IMat Pinv = inverse_unimodular(sb.P);
    const IMat base_split = residue(IMat(sb.P.transpose() * th * sb.P));
    const int pf_sign = sign(determinant(sb.P)); // Pf(u) = det(P) Pf(P^T u P)

    const auto primes = primes_up_to(cfg.prime_bound);
    const int W = std::max(1, cfg.lift_max_weight);
    const int K = std::clamp(cfg.lift_max_support, 1, ext::kPairs);
    std::uniform_int_distribution<int> support(1, K), weight(1, W), coin(0, 1), diag(0, W + 1), off(-1, 1);

    struct Candidate {
        TwoClassQ u;
        Int ell;
        Cubic p;
    };
    std::vector<Candidate> positive;
    std::optional<Candidate> fallback;

    for (long t = 0; t < cfg.lift_attempts; ++t) {
        r.attempts = t + 1;
        IMat U;
        if (t % 2 == 0) {
            U = base;
            if (t > 0) {
                std::array<int, ext::kPairs> idx;
                std::iota(idx.begin(), idx.end(), 0);
                std::shuffle(idx.begin(), idx.end(), rng);
                int s = support(rng);
                for (int i = 0; i < s; ++i) {
                    auto [a, b] = ext::pairs[idx[i]];
                    int w = weight(rng);
                    Int step = n * (coin(rng) ? w : -w);
                    U(a, b) += step;
                    U(b, a) -= step;
                }
            }
            if (pfaffian6(small_matrix(U)) != 1)
                continue;
        } else {
            IMat S = base_split;
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j) {
                    Int step = n * (i == j ? diag(rng) : off(rng));
                    S(i, 3 + j) += step;
                    S(3 + j, i) -= step;
                    if (i != j) {
                        S(j, 3 + i) += step;
                        S(3 + i, j) -= step;
                    }
                }
            if (pf_sign * pfaffian6(small_matrix(S)) != 1)
                continue;
            U = Pinv.transpose() * S * Pinv;
        }
        // Pf = 1 forces type (1,1,1) and u^3 = 6 Pf = 6
        if (pfaffian(U) != 1)
            continue;
        TwoClassQ u = form_of(U);
        Cubic p = char_pfaffian_cubic(u, H);
        bool pos = cubic_positive_real_roots(p);
        if (!pos && fallback)
            continue;
        std::optional<Int> ell;
        for (const Int& l : primes)
            if (n % l != 0 && cubic_irreducible_mod(p, l)) {
                ell = l;
                break;
            }
        if (!ell)
            continue;
        Candidate c{u, *ell, p};
        if (pos) {
            positive.push_back(c);
            if (int(positive.size()) >= cfg.lift_candidates)
                break;
        } else {
            fallback = c;
        }
    }
    const Candidate* best = nullptr;
    // the smallest root sum keeps the later discriminants small
    for (const auto& c : positive)
        if (!best || -c.p.a2 / c.p.a3 < -best->p.a2 / best->p.a3)
            best = &c;
    if (!best && fallback)
        best = &*fallback;
    if (!best) {
        r.failure = "no lift found within " + std::to_string(cfg.lift_attempts) + " attempts";
        return r;
    }
    r.found = true;
    r.u = best->u;
    r.ell = best->ell;
    r.cubic = best->p;
    r.positive_roots = cubic_positive_real_roots(best->p);
    return r;
}

FourClassQ prime_avoidance_class(const TwoClassQ& u, const TwoClassQ& H, const Int& n, const Int& A, int k)
{
    const FourClassQ U = half_square(u), Hd = half_square(H);
    const FourClassQ M = Rat(A * A) * U - Rat(ipow(n, k)) * Hd;
    return half_square(star(M)) + Rat(n * A) * half_square(star(U));
}

EvenClassQ initial_class(const TwoClassQ& u, const TwoClassQ& H, const Int& n, const Int& A, int k)
{
    FourClassQ c = Rat(A * A) * half_square(u) - Rat(ipow(n, k)) * half_square(H);
    return {Rat(n * n), Rat(-n * A) * u, c, Rat(1)};
}

namespace {

void checking_lemma(PrimeAvoidance& pa, const TwoClassQ& u, const TwoClassQ& H, const Int& n)
{
    const TwoClassQ Us = star(half_square(u)), Hs = star(half_square(H));
    const FourClassQ g1 = half_square(Us), g2 = cup(Us, Hs).C, g3 = half_square(Hs);
    const Int nk = ipow(n, pa.k);
    pa.coefficients = {pa.A * pa.A * pa.A * pa.A + n * pa.A, -pa.A * pa.A * nk, nk * nk};
    FourClassQ comb = Rat(pa.coefficients[0]) * g1 + Rat(pa.coefficients[1]) * g2 + Rat(pa.coefficients[2]) * g3;
    if (!(comb == pa.z))
        throw std::logic_error("prime_avoidance: z is not the expected combination");
    pa.coefficient_gcd = gcd(gcd(pa.coefficients[0], pa.coefficients[1]), pa.coefficients[2]);

    IMat G(ext::kPairs, 3);
    G.col(0) = to_int(RMat(g1.c));
    G.col(1) = to_int(RMat(g2.c));
    G.col(2) = to_int(RMat(g3.c));
    SmithForm s = smith_normal_form(G);
    pa.bad_primes.clear();
    pa.ranks_mod_p.clear();
    if (s.rank < 3) {
        pa.lemma_certificate = false; // generators dependent: no finite prime set
        return;
    }
    for (const Int& x : s.invariants())
        for (const Int& p : prime_factors(x))
            if (std::find(pa.bad_primes.begin(), pa.bad_primes.end(), p) == pa.bad_primes.end())
                pa.bad_primes.push_back(p);
    std::sort(pa.bad_primes.begin(), pa.bad_primes.end());
    bool ok = pa.coefficient_gcd == 1;
    const IMat Z = to_int(pa.z.matrix());
    for (const Int& p : pa.bad_primes) {
        int rk = rank_mod_p(Z, p);
        pa.ranks_mod_p.push_back(rk);
        ok = ok && rk >= 4;
    }
    pa.lemma_certificate = ok;
}

} // namespace

PrimeAvoidance prime_avoidance_search(const TwoClassQ& u, const TwoClassQ& H, const Int& n,
                                      const SearchConfig& cfg)
{
    PrimeAvoidance pa;
    for (int a = 1; a <= cfg.A_max; ++a) {
        const Int A(a);
        if (gcd(A, n) != 1)
            continue;
        for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
            EvenClassQ v0 = initial_class(u, H, n, A, k);
            Rat delta = igusa_discriminant(v0);
            if (delta <= 0)
                continue;
            FourClassQ z = prime_avoidance_class(u, H, n, A, k);
            AltType t = alt_type(z);
            if (t.rank != 6 || t.d[0] != 1 || t.d[1] != 1 || pfaffian(z) != Rat(t.d[2]))
                continue;
            pa.found = true;
            pa.A = A;
            pa.k = k;
            pa.z = z;
            pa.z_type = t;
            pa.d = t.d[2];
            pa.delta_v0 = delta;
            checking_lemma(pa, u, H, n);
            return pa;
        }
    }
    pa.failure = "no (A, k) in the configured grid gives Delta(v0) > 0 and z of type (1,1,d)";
    return pa;
}

bool PipelineCertificate::passed() const
{
    return stages.size() == 8
        && std::all_of(stages.begin(), stages.end(), [](const Stage& s) { return s.passed; });
}

std::optional<std::string> PipelineCertificate::failed_stage() const
{
    for (const auto& s : stages)
        if (!s.passed)
            return s.name;
    return std::nullopt;
}

PipelineCertificate run_pipeline(const Int& n, const std::array<Int, 3>& h_type, const TwoClassQ& theta,
                                 const SearchConfig& cfg)
{
    if (n < 2)
        throw std::invalid_argument("run_pipeline: need n >= 2");
    if (h_type[0] <= 0 || h_type[1] % h_type[0] != 0 || h_type[2] % h_type[1] != 0)
        throw std::invalid_argument("run_pipeline: H type must satisfy 0 < d1 | d2 | d3");
    for (const Int& d : h_type)
        for (const Int& p : prime_factors(d))
            if (n % p != 0)
                throw std::invalid_argument("run_pipeline: H type entries must divide a power of n");

    PipelineCertificate c;
    c.n = n;
    c.h_type = h_type;
    c.H = form_of_type(h_type);
    c.theta = theta;
    c.cfg = cfg;
    std::mt19937_64 rng(cfg.seed);
    auto stage = [&](std::string name, bool ok, std::string note) {
        c.stages.push_back({std::move(name), ok, std::move(note)});
        return ok;
    };

    c.lift = find_lift(theta, n, c.H, cfg, rng);
    if (!stage("lift", c.lift.found, c.lift.failure))
        return c;

    c.orbit = orbit_search(c.lift.u, c.H, n * c.lift.ell, cfg, rng);
    if (c.orbit.found && !cubic_irreducible_mod(c.orbit.cubic, c.lift.ell))
        c.orbit.failure = "p_v reducible mod ell";
    if (!stage("orbit", c.orbit.found && c.orbit.failure.empty(), c.orbit.failure))
        return c;
    const TwoClassQ& v = c.orbit.v;

    c.avoidance = prime_avoidance_search(v, c.H, n, cfg);
    if (!stage("prime_avoidance", c.avoidance.found, c.avoidance.failure))
        return c;
    const Int& A = c.avoidance.A;
    const int k = c.avoidance.k;

    c.v0 = initial_class(v, c.H, n, A, k);
    c.delta_v0 = igusa_discriminant(c.v0);
    if (!stage("initial_class", c.delta_v0 > 0 && c.v0.a == Rat(n * n), "Delta(v0) = " + to_string(c.delta_v0)))
        return c;

    c.w0 = fm_transform(c.v0);
    c.delta_w0 = igusa_discriminant(c.w0);
    if (!stage("fourier_mukai", c.delta_w0 == c.delta_v0, ""))
        return c;

    c.line_bundle = c.w0.B;
    c.terminal = exp_mul(TwoClassQ(-c.line_bundle), c.w0);
    c.beta = -c.terminal.C;
    c.delta_terminal = igusa_discriminant(c.terminal);
    bool shape = c.w0.a == 1 && c.terminal.a == 1 && c.terminal.B == TwoClassQ() && is_integer(c.terminal.d);
    if (shape)
        c.chi = to_int(-c.terminal.d);
    if (!stage("line_bundle_reduction",
               shape && c.delta_terminal == c.delta_v0 && c.beta == c.avoidance.z,
               shape ? "" : "terminal class is not of the form (1, 0, -beta, -chi)"))
        return c;

    c.beta_type = alt_type(c.beta);
    const Int& d = c.avoidance.d;
    bool curve = is_type(c.beta_type, d) && pfaffian(c.beta) == Rat(d)
        && c.delta_terminal == Rat(d) - Rat(c.chi * c.chi, 4) && c.delta_terminal >= 0;
    if (!stage("curve_class", curve, "d = " + d.str() + ", chi = " + c.chi.str()))
        return c;

    c.dt = dt_positive(d, c.chi, cfg.dt_max_index);
    stage("curve_count", c.dt.positive,
          c.dt.value_known ? "DT computed exactly"
                           : "DT above the index cap; positivity from " + std::to_string(c.dt.positive_terms)
                  + " positive closed-form terms");
    return c;
}

namespace {

using io::json;
using io::to_json;

json config_json(const SearchConfig& c)
{
    return {{"seed", c.seed},
            {"lift_attempts", c.lift_attempts},
            {"lift_candidates", c.lift_candidates},
            {"lift_max_weight", c.lift_max_weight},
            {"lift_max_support", c.lift_max_support},
            {"prime_bound", c.prime_bound},
            {"genericity_attempts", c.genericity_attempts},
            {"orbit_max_m", c.orbit_max_m},
            {"A_max", c.A_max},
            {"k_min", c.k_min},
            {"k_max", c.k_max},
            {"dt_max_index", c.dt_max_index}};
}

SearchConfig config_from(const json& j)
{
    SearchConfig c;
    c.seed = j.at("seed").get<std::uint64_t>();
    c.lift_attempts = j.at("lift_attempts").get<long>();
    c.lift_candidates = j.at("lift_candidates").get<int>();
    c.lift_max_weight = j.at("lift_max_weight").get<int>();
    c.lift_max_support = j.at("lift_max_support").get<int>();
    c.prime_bound = j.at("prime_bound").get<long>();
    c.genericity_attempts = j.at("genericity_attempts").get<long>();
    c.orbit_max_m = j.at("orbit_max_m").get<long>();
    c.A_max = j.at("A_max").get<int>();
    c.k_min = j.at("k_min").get<int>();
    c.k_max = j.at("k_max").get<int>();
    c.dt_max_index = j.at("dt_max_index").get<long>();
    return c;
}

json ints_json(const std::vector<Int>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.str());
    return a;
}

} // namespace

json certificate_to_json(const PipelineCertificate& c)
{
    json j;
    j["schema_version"] = kCertificateSchema;
    j["kind"] = "abel3.pipeline_certificate";
    j["inputs"] = {{"n", c.n.str()},
                   {"h_type", ints_json({c.h_type.begin(), c.h_type.end()})},
                   {"H", to_json(c.H)},
                   {"theta", to_json(c.theta)},
                   {"config", config_json(c.cfg)}};
    j["search_replaced"] = {
        "generic lift of theta: seeded search over u = theta + n w with Pf(u) = 1",
        "prime with p_u irreducible: ascending scan of primes up to prime_bound",
        "orbit trick: least m >= 0 along the sign pattern fixed by a16 and the second genericity minor",
        "k sufficiently large: least k in [k_min, k_max] for each A in ascending order",
        "effectivity of the curve class: d > 0 only (informational)"};
    json stages = json::array();
    for (const auto& s : c.stages)
        stages.push_back({{"name", s.name}, {"passed", s.passed}, {"note", s.note}});
    j["stages"] = stages;
    j["passed"] = c.passed();
    const auto reached = c.stages.size();

    if (reached >= 1 && c.lift.found)
        j["lift"] = {{"u", to_json(c.lift.u)},
                     {"u_cubed", to_json(cube(c.lift.u))},
                     {"type", to_json(alt_type(c.lift.u))},
                     {"ell", c.lift.ell.str()},
                     {"cubic", to_json(c.lift.cubic)},
                     {"positive_roots", c.lift.positive_roots},
                     {"attempts", c.lift.attempts}};
    if (reached >= 2 && c.orbit.found)
        j["orbit"] = {{"N", (c.n * c.lift.ell).str()},
                      {"randomization_steps", c.orbit.randomization_steps},
                      {"m", c.orbit.m.str()},
                      {"xyz", ints_json({c.orbit.xyz.begin(), c.orbit.xyz.end()})},
                      {"a16", c.orbit.genericity.a16.str()},
                      {"genericity_minor", c.orbit.genericity.g.str()},
                      {"P", to_json(c.orbit.P)},
                      {"T", to_json(c.orbit.T)},
                      {"E", to_json(c.orbit.E)},
                      {"g", to_json(c.orbit.g)},
                      {"v", to_json(c.orbit.v)},
                      {"cubic", to_json(c.orbit.cubic)},
                      {"cubic_discriminant", to_json(c.orbit.cubic.discriminant())},
                      {"positive_real_roots", cubic_positive_real_roots(c.orbit.cubic)},
                      {"irreducible_mod_ell", cubic_irreducible_mod(c.orbit.cubic, c.lift.ell)}};
    if (reached >= 3 && c.avoidance.found) {
        const auto& pa = c.avoidance;
        json lemma = {{"coefficients", ints_json({pa.coefficients.begin(), pa.coefficients.end()})},
                      {"coefficient_gcd", pa.coefficient_gcd.str()},
                      {"primes", ints_json(pa.bad_primes)},
                      {"ranks_mod_p", pa.ranks_mod_p},
                      {"holds", pa.lemma_certificate}};
        j["prime_avoidance"] = {{"A", pa.A.str()},
                                {"k", pa.k},
                                {"z", to_json(pa.z)},
                                {"z_type", to_json(pa.z_type)},
                                {"d", pa.d.str()},
                                {"checking_lemma", lemma}};
    }
    if (reached >= 4)
        j["classes"]["v0"] = to_json(c.v0);
    if (reached >= 5)
        j["classes"]["w0"] = to_json(c.w0);
    if (reached >= 6) {
        j["classes"]["line_bundle"] = to_json(c.line_bundle);
        j["classes"]["terminal"] = to_json(c.terminal);
        j["classes"]["beta"] = to_json(c.beta);
        j["classes"]["chi"] = c.chi.str();
    }
    if (reached >= 4) {
        json& D = j["discriminants"];
        D["v0"] = to_json(c.delta_v0);
        if (reached >= 5)
            D["w0"] = to_json(c.delta_w0);
        if (reached >= 6)
            D["terminal"] = to_json(c.delta_terminal);
    }
    if (reached >= 7)
        j["curve_class"] = {{"beta_type", to_json(c.beta_type)},
                            {"pf_beta", to_json(pfaffian(c.beta))},
                            {"d", c.avoidance.d.str()},
                            {"d_minus_chi_sq_over_4", to_json(Rat(c.avoidance.d) - Rat(c.chi * c.chi, 4))}};
    if (reached >= 8) {
        json dt = {{"d", c.dt.d.str()},
                   {"n", c.dt.n.str()},
                   {"delta", to_json(c.dt.delta)},
                   {"value_known", c.dt.value_known},
                   {"positive_terms", c.dt.positive_terms},
                   {"positive", c.dt.positive}};
        if (c.dt.value_known)
            dt["value"] = c.dt.value.str();
        j["dt"] = dt;
    }
    return j;
}

VerifyReport verify_certificate(const json& cert)
{
    VerifyReport rep;
    auto check = [&](const std::string& what, bool ok) {
        rep.checks.push_back(what);
        if (!ok) {
            rep.ok = false;
            rep.failures.push_back(what);
        }
        return ok;
    };
    auto guarded = [&](const std::string& section, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(section + ": " + e.what(), false);
        }
    };

    if (!check("schema_version", cert.value("schema_version", -1) == kCertificateSchema))
        return rep;

    Int n, ell, N, A, d, chi;
    int k = 0;
    SearchConfig cfg;
    TwoClassQ H, theta, u, v;
    FourClassQ z;
    EvenClassQ v0, w0, terminal;
    Rat delta;
    bool have_lift = false, have_orbit = false, have_pa = false, have_classes = false;

    guarded("inputs", [&] {
        const json& in = cert.at("inputs");
        n = io::int_from(in.at("n"));
        std::array<Int, 3> ht;
        for (int i = 0; i < 3; ++i)
            ht[i] = io::int_from(in.at("h_type").at(i));
        H = io::two_from(in.at("H"));
        theta = io::two_from(in.at("theta"));
        cfg = config_from(in.at("config"));
        check("n >= 2", n >= 2);
        check("H = form of the recorded type", H == form_of_type(ht));
    });

    if (cert.contains("lift"))
        guarded("lift", [&] {
            const json& L = cert["lift"];
            u = io::two_from(L.at("u"));
            ell = io::int_from(L.at("ell"));
            check("lift: u integral", u.is_integral());
            bool congruent = true;
            for (int i = 0; i < ext::kPairs; ++i)
                congruent = congruent && mod(to_int(u.c(i) - theta.c(i)), n) == 0;
            check("lift: u = theta mod n", congruent);
            check("lift: type (1,1,1)", is_type(alt_type(u), Int(1)));
            Rat u3 = cube(u);
            check("lift: u^3 recorded", u3 == io::rat_from(L.at("u_cubed")));
            check("lift: u^3 > 0", u3 > 0);
            Cubic p = char_pfaffian_cubic(u, H);
            check("lift: p_u recorded", p == io::cubic_from(L.at("cubic")));
            check("lift: ell prime, ell does not divide n", is_prime(ell) && n % ell != 0);
            check("lift: p_u irreducible mod ell", cubic_irreducible_mod(p, ell));
            have_lift = true;
        });

    if (have_lift && cert.contains("orbit"))
        guarded("orbit", [&] {
            const json& O = cert["orbit"];
            N = io::int_from(O.at("N"));
            check("orbit: N = n ell", N == n * ell);
            IMat P = io::imat_from(O.at("P")), T = io::imat_from(O.at("T")), E = io::imat_from(O.at("E"));
            IMat g = io::imat_from(O.at("g"));
            std::array<Int, 3> xyz;
            for (int i = 0; i < 3; ++i)
                xyz[i] = io::int_from(O.at("xyz").at(i));
            check("orbit: x, y, z in N Z", xyz[0] % N == 0 && xyz[1] % N == 0 && xyz[2] % N == 0);
            const Int m = io::int_from(O.at("m"));
            check("orbit: |x| = |y| = |z| = m N",
                  m >= 0 && mp::abs(xyz[0]) == m * N && mp::abs(xyz[1]) == m * N && mp::abs(xyz[2]) == m * N);
            check("orbit: E = E(x, y, z)", E == orbit_unipotent(xyz[0], xyz[1], xyz[2]));
            check("orbit: P unimodular", mp::abs(determinant(P)) == 1);
            IMat PHP = P.transpose() * form_matrix(H) * P;
            bool split = true;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j)
                    split = split && (PHP(i, j) == 0) == !(j == i + 3 || i == j + 3);
            check("orbit: P splits H", split);
            check("orbit: g P = P T E", g * P == P * T * E);
            bool gamma = true;
            try {
                Gamma6Element(g, N);
                Gamma6Element(T, N);
            } catch (const std::invalid_argument&) {
                gamma = false;
            }
            check("orbit: g, T in Gamma(N), det 1", gamma);
            v = io::two_from(O.at("v"));
            check("orbit: v = g^* u", v == act(g, u));
            Cubic p = char_pfaffian_cubic(v, H);
            check("orbit: p_v recorded", p == io::cubic_from(O.at("cubic")));
            check("orbit: discriminant recorded", p.discriminant() == io::rat_from(O.at("cubic_discriminant")));
            check("orbit: p_v has positive real roots", cubic_positive_real_roots(p));
            check("orbit: p_v irreducible mod ell", cubic_irreducible_mod(p, ell));
            have_orbit = true;
        });

    if (have_orbit && cert.contains("prime_avoidance"))
        guarded("prime_avoidance", [&] {
            const json& Pa = cert["prime_avoidance"];
            A = io::int_from(Pa.at("A"));
            k = Pa.at("k").get<int>();
            d = io::int_from(Pa.at("d"));
            z = io::four_from(Pa.at("z"));
            check("prime_avoidance: gcd(A, n) = 1", gcd(A, n) == 1);
            check("prime_avoidance: z recomputed", z == prime_avoidance_class(v, H, n, A, k));
            check("prime_avoidance: z of type (1,1,d), Pf(z) = d > 0",
                  is_type(alt_type(z), d) && pfaffian(z) == Rat(d) && d > 0);
            if (Pa.contains("checking_lemma")) {
                PrimeAvoidance pa;
                pa.A = A;
                pa.k = k;
                pa.z = z;
                checking_lemma(pa, v, H, n);
                const json& Lm = Pa["checking_lemma"];
                check("checking lemma: coefficients",
                      ints_json({pa.coefficients.begin(), pa.coefficients.end()}) == Lm.at("coefficients"));
                check("checking lemma: prime set", ints_json(pa.bad_primes) == Lm.at("primes"));
                check("checking lemma: ranks mod p", json(pa.ranks_mod_p) == Lm.at("ranks_mod_p"));
                check("checking lemma: verdict", pa.lemma_certificate == Lm.at("holds").get<bool>());
            }
            have_pa = true;
        });

    if (have_pa && cert.contains("classes"))
        guarded("classes", [&] {
            const json& C = cert["classes"];
            const json& D = cert.at("discriminants");
            v0 = io::even_from(C.at("v0"));
            check("v0 recomputed", v0 == initial_class(v, H, n, A, k));
            check("rank of v0 = n^2", v0.a == Rat(n * n));
            delta = igusa_discriminant(v0);
            check("Delta(v0) recorded", delta == io::rat_from(D.at("v0")));
            check("Delta(v0) > 0", delta > 0);
            if (!C.contains("w0"))
                return;
            w0 = io::even_from(C.at("w0"));
            check("w0 = fm(v0)", w0 == fm_transform(v0));
            check("Delta(w0) = Delta(v0)", igusa_discriminant(w0) == delta && io::rat_from(D.at("w0")) == delta);
            if (!C.contains("terminal"))
                return;
            TwoClassQ L = io::two_from(C.at("line_bundle"));
            terminal = io::even_from(C.at("terminal"));
            FourClassQ beta = io::four_from(C.at("beta"));
            chi = io::int_from(C.at("chi"));
            check("line bundle = degree-2 part of w0, rank w0 = 1", L == w0.B && w0.a == 1);
            check("terminal = exp(-L) w0", terminal == exp_mul(TwoClassQ(-L), w0));
            check("terminal = (1, 0, -beta, -chi)",
                  terminal.a == 1 && terminal.B == TwoClassQ() && terminal.C == -beta && terminal.d == Rat(-chi));
            check("beta = z", beta == z);
            check("Delta(terminal) = Delta(v0)",
                  igusa_discriminant(terminal) == delta && io::rat_from(D.at("terminal")) == delta);
            have_classes = true;
        });

    if (have_classes && cert.contains("curve_class"))
        guarded("curve_class", [&] {
            const json& Cc = cert["curve_class"];
            check("curve class: d recorded", io::int_from(Cc.at("d")) == d);
            FourClassQ beta = -terminal.C;
            check("curve class: beta of type (1,1,d)", is_type(alt_type(beta), d));
            check("curve class: Pf(beta) = d", pfaffian(beta) == Rat(d) && io::rat_from(Cc.at("pf_beta")) == Rat(d));
            Rat rhs = Rat(d) - Rat(chi * chi, 4);
            check("Delta = d - chi^2/4", delta == rhs && io::rat_from(Cc.at("d_minus_chi_sq_over_4")) == rhs);
            check("Delta >= 0", delta >= 0);
        });

    if (have_classes && cert.contains("dt"))
        guarded("dt", [&] {
            const json& T = cert["dt"];
            DTVerdict dv = dt_positive(d, chi, cfg.dt_max_index);
            check("dt: (d, n) = (d, chi)", io::int_from(T.at("d")) == d && io::int_from(T.at("n")) == chi);
            check("dt: value_known recorded", dv.value_known == T.at("value_known").get<bool>());
            if (dv.value_known)
                check("dt: value recomputed", T.contains("value") && io::int_from(T.at("value")) == dv.value);
            check("dt: positive terms recomputed", dv.positive_terms == T.at("positive_terms").get<long>());
            check("dt: DT > 0", dv.positive && T.at("positive").get<bool>());
        });

    // the recorded per-stage outcomes must agree with what was replayed
    if (cert.contains("stages")) {
        bool all = true;
        for (const auto& s : cert["stages"])
            all = all && s.at("passed").get<bool>();
        check("recorded verdict matches stages", cert.value("passed", false) == (all && cert["stages"].size() == 8));
    }
    if (cert.value("passed", false))
        check("passing certificate carries every section",
              have_classes && cert.contains("curve_class") && cert.contains("dt"));
    return rep;
}

} // namespace abel3
