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
#include "abel3/brauerhodge.hpp"

#include <algorithm>

namespace abel3 {

void HodgeDatum::validate() const
{
    if (n <= 0)
        throw std::invalid_argument("HodgeDatum: n must be positive");
    if (!TwoClassQ(Rat(n) * B).is_integral())
        throw std::invalid_argument("HodgeDatum: n B is not integral");
    for (const auto& g : ns2)
        if (!g.is_integral())
            throw std::invalid_argument("HodgeDatum: NS generators must be integral");
}

bool theta_field_check(const TwoClassQ& B, const Int& n, const TwoClassQ& theta)
{
    const TwoClassQ nB = Rat(n) * B;
    if (!nB.is_integral() || !theta.is_integral())
        return false;
    for (int k = 0; k < ext::kPairs; ++k)
        if (mod(to_int(nB.c(k) - theta.c(k)), n) != 0)
            return false;
    return true;
}

namespace {

template <class C> RMat columns(const std::vector<C>& gens)
{
    RMat G(ext::kPairs, Eigen::Index(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i)
        G.col(Eigen::Index(i)) = gens[i].c;
    return G;
}

// Matrix of x -> (B x) from degree 2 to degree 4.
RMat cup_matrix(const TwoClassQ& B)
{
    RMat M(ext::kPairs, ext::kPairs);
    for (int k = 0; k < ext::kPairs; ++k) {
        TwoClassQ e;
        e.c(k) = 1;
        M.col(k) = cup(B, e).C.c;
    }
    return M;
}

// Scales each row of [A | rhs] by the lcm of its denominators.
void clear_system(const RMat& A, const RVec& rhs, IMat& Ai, IVec& bi)
{
    Ai.resize(A.rows(), A.cols());
    bi.resize(A.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        Int l = denom(rhs(i));
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            l = lcm(l, denom(A(i, j)));
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            Ai(i, j) = to_int(A(i, j) * Rat(l));
        bi(i) = to_int(rhs(i) * Rat(l));
    }
}

struct IndexSystem {
    RMat P2, P4, MB;
    FourClassQ halfB2;
    SmithForm smith; // of the joint (lambda, mu) system
    IVec rhs_unit;   // right-hand side at N = 1
    Eigen::Index r2 = 0;
};

IndexSystem build_index_system(const HodgeDatum& d, bool degree_two_only)
{
    IndexSystem s;
    s.P2 = annihilator(columns(d.ns2), ext::kPairs);
    s.P4 = annihilator(columns(d.hdg4), ext::kPairs);
    s.MB = cup_matrix(d.B);
    s.halfB2 = half_square(d.B);
    s.r2 = s.P2.rows();
    const Eigen::Index r4 = degree_two_only ? 0 : s.P4.rows();
    const Eigen::Index nv = degree_two_only ? ext::kPairs : 2 * ext::kPairs;
    RMat A = RMat::Zero(s.r2 + r4, nv);
    RVec rhs(s.r2 + r4);
    // P2 lambda = N P2 B
    A.topLeftCorner(s.r2, ext::kPairs) = s.P2;
    rhs.head(s.r2) = s.P2 * d.B.c;
    if (!degree_two_only) {
        // P4 (MB lambda - mu) = N P4 (B^2/2)
        A.bottomLeftCorner(r4, ext::kPairs) = s.P4 * s.MB;
        A.bottomRightCorner(r4, ext::kPairs) = -s.P4;
        rhs.tail(r4) = s.P4 * s.halfB2.c;
    }
    IMat Ai;
    clear_system(A, rhs, Ai, s.rhs_unit);
    s.smith = smith_normal_form(Ai);
    return s;
}

} // namespace

Int period(const HodgeDatum& d)
{
    d.validate();
    IndexSystem s = build_index_system(d, true);
    for (Int N = 1; N <= d.n; ++N)
        if (solve_diophantine(s.smith, IVec(s.rhs_unit * N)).feasible)
            return N;
    throw std::logic_error("period: n B should always be feasible");
}

IndexWitness hodge_theoretic_index(const HodgeDatum& d)
{
    d.validate();
    IndexSystem s = build_index_system(d, false);
    const Int cap = d.n * d.n;
    for (Int N = 1; N <= cap; ++N) {
        auto sol = solve_diophantine(s.smith, IVec(s.rhs_unit * N));
        if (!sol.feasible)
            continue;
        IndexWitness w;
        w.N = N;
        for (int k = 0; k < ext::kPairs; ++k) {
            w.lambda.c(k) = Rat(sol.x0(k));
            w.mu.c(k) = Rat(sol.x0(ext::kPairs + k));
        }
        const Rat NR(N);
        w.H1 = NR * d.B - w.lambda;
        w.H2 = w.mu + NR * s.halfB2 - cup(d.B, w.lambda).C;
        if (!d.ns2.empty())
            w.h1_coeffs = *solve_rational(columns(d.ns2), w.H1.c);
        if (!d.hdg4.empty())
            w.h2_coeffs = *solve_rational(columns(d.hdg4), w.H2.c);
        if (!verify_index_witness(d, w))
            throw std::logic_error("hodge_theoretic_index: witness failed to re-verify");
        return w;
    }
    throw std::logic_error("hodge_theoretic_index: fallback witness at n^2 not found");
}

bool verify_index_witness(const HodgeDatum& d, const IndexWitness& w)
{
    const Rat N(w.N);
    const TwoClassQ deg2 = N * d.B - w.H1;
    const FourClassQ deg4 = N * half_square(d.B) - cup(d.B, w.H1).C + w.H2;
    if (!deg2.is_integral() || !deg4.is_integral())
        return false;
    if (!(deg2 == w.lambda) || !(deg4 == w.mu))
        return false;
    // H1, H2 in the rational Hodge spans, checked through the coefficients
    RVec h1 = d.ns2.empty() ? RVec(RVec::Zero(ext::kPairs)) : RVec(columns(d.ns2) * w.h1_coeffs);
    RVec h2 = d.hdg4.empty() ? RVec(RVec::Zero(ext::kPairs)) : RVec(columns(d.hdg4) * w.h2_coeffs);
    if (h1 != w.H1.c || h2 != w.H2.c)
        return false;
    return is_twisted_hodge(d, w.hodge_class());
}

bool is_twisted_hodge(const HodgeDatum& d, const EvenClassQ& v)
{
    const EvenClassQ t = exp_mul(d.B, v);
    const RMat P2 = annihilator(columns(d.ns2), ext::kPairs);
    const RMat P4 = annihilator(columns(d.hdg4), ext::kPairs);
    return (P2 * t.B.c).isZero() && (P4 * t.C.c).isZero();
}

namespace {

// Integral kernel of the twisted Hodge conditions on (r, x, y); columns.
IMat hodge_kernel(const HodgeDatum& d)
{
    const RMat P2 = annihilator(columns(d.ns2), ext::kPairs);
    const RMat P4 = annihilator(columns(d.hdg4), ext::kPairs);
    const RMat MB = cup_matrix(d.B);
    const FourClassQ hb = half_square(d.B);
    const Eigen::Index r2 = P2.rows(), r4 = P4.rows();
    RMat A = RMat::Zero(r2 + r4, 1 + 2 * ext::kPairs);
    // P2 (r B + x) = 0
    A.block(0, 0, r2, 1) = P2 * d.B.c;
    A.block(0, 1, r2, ext::kPairs) = P2;
    // P4 (r B^2/2 + B x + y) = 0
    A.block(r2, 0, r4, 1) = P4 * hb.c;
    A.block(r2, 1, r4, ext::kPairs) = P4 * MB;
    A.block(r2, 1 + ext::kPairs, r4, ext::kPairs) = P4;
    if (A.rows() == 0)
        return IMat::Identity(A.cols(), A.cols());
    IMat Ai;
    IVec unused;
    clear_system(A, RVec::Zero(A.rows()), Ai, unused);
    SmithForm s = smith_normal_form(Ai);
    return s.V.rightCols(A.cols() - s.rank);
}

EvenClassQ class_from_coords(const IVec& v, const Int& z)
{
    EvenClassQ c;
    c.a = Rat(v(0));
    for (int k = 0; k < ext::kPairs; ++k) {
        c.B.c(k) = Rat(v(1 + k));
        c.C.c(k) = Rat(v(1 + ext::kPairs + k));
    }
    c.d = Rat(z);
    return c;
}

} // namespace

Int hodge_theoretic_index_lattice(const HodgeDatum& d)
{
    d.validate();
    IMat K = hodge_kernel(d);
    Int g = 0;
    for (Eigen::Index j = 0; j < K.cols(); ++j)
        g = gcd(g, K(0, j));
    return g;
}

HodgeSublattice hodge_sublattice(const HodgeDatum& d)
{
    d.validate();
    IMat K = hodge_kernel(d);
    // Euclid on the rank row so that a single column carries it.
    for (;;) {
        Eigen::Index piv = -1;
        for (Eigen::Index j = 0; j < K.cols(); ++j)
            if (K(0, j) != 0 && (piv < 0 || mp::abs(K(0, j)) < mp::abs(K(0, piv))))
                piv = j;
        if (piv < 0)
            throw std::logic_error("hodge_sublattice: no class of positive rank");
        bool done = true;
        for (Eigen::Index j = 0; j < K.cols(); ++j) {
            if (j == piv || K(0, j) == 0)
                continue;
            Int q = floor_div(K(0, j), K(0, piv));
            K.col(j) -= q * K.col(piv);
            if (K(0, j) != 0)
                done = false;
        }
        if (done) {
            if (K(0, piv) < 0)
                K.col(piv) *= Int(-1);
            if (piv != 0)
                K.col(0).swap(K.col(piv));
            break;
        }
    }
    HodgeSublattice h;
    for (Eigen::Index j = 0; j < K.cols(); ++j)
        h.basis.push_back(class_from_coords(K.col(j), 0));
    h.basis.push_back(EvenClassQ::point()); // degree 6 is unconstrained
    h.min_rank = K(0, 0);
    const Eigen::Index m = Eigen::Index(h.basis.size());
    h.gram.resize(m, m);
    h.gram_gcd = 0;
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) {
            h.gram(i, j) = euler_pairing(h.basis[i], h.basis[j]);
            h.gram_gcd = gcd(h.gram_gcd, to_int(h.gram(i, j)));
        }
    return h;
}

namespace {

// e_k <- e_k + c e_src, as the congruence P^T M P.
void add_basis(IMat& M, int k, int src, const Int& c, const Int& q)
{
    for (int x = 0; x < 6; ++x)
        M(x, k) = mod(M(x, k) + c * M(x, src), q);
    for (int y = 0; y < 6; ++y)
        M(k, y) = mod(M(k, y) + c * M(src, y), q);
}

int valuation(Int a, const Int& p, int cap)
{
    if (a == 0)
        return cap;
    int v = 0;
    while (v < cap && a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

} // namespace

int symbol_length_prime_power(const TwoClassQ& theta, const Int& p, int e)
{
    if (!theta.is_integral())
        throw std::invalid_argument("symbol_length: theta must be integral");
    Int q = mp::pow(p, unsigned(e));
    IMat M = to_int(theta.matrix());
    for (Eigen::Index i = 0; i < M.size(); ++i)
        M.data()[i] = mod(M.data()[i], q);
    std::vector<int> live{0, 1, 2, 3, 4, 5};
    int count = 0;
    while (live.size() >= 2) {
        int bi = -1, bj = -1, bv = e;
        for (std::size_t x = 0; x < live.size(); ++x)
            for (std::size_t y = x + 1; y < live.size(); ++y) {
                int v = valuation(M(live[x], live[y]), p, e);
                if (v < bv) {
                    bv = v;
                    bi = live[x];
                    bj = live[y];
                }
            }
        if (bi < 0)
            break;
        ++count;
        // a = p^v u; clear row/column bi, bj against every other live index
        Int a = M(bi, bj);
        Int pv = mp::pow(p, unsigned(bv));
        Int u = a / pv;
        Int uinv = mp::powm(mod(u, q), mp::pow(p, unsigned(e - 1)) * (p - 1) - 1, q);
        for (int k : live) {
            if (k == bi || k == bj)
                continue;
            // e_k <- e_k - (M(bi,k)/a) e_bj + (M(bj,k)/a) e_bi
            Int ci = mod(M(bi, k) / pv * uinv, q);
            Int cj = mod(M(bj, k) / pv * uinv, q);
            add_basis(M, k, bj, mod(-ci, q), q);
            add_basis(M, k, bi, cj, q);
        }
        live.erase(std::remove_if(live.begin(), live.end(), [&](int k) { return k == bi || k == bj; }),
                   live.end());
    }
    return count;
}

int symbol_length(const TwoClassQ& theta, const Int& n)
{
    if (n < 2)
        throw std::invalid_argument("symbol_length: need n >= 2");
    int best = 0;
    Int rest = n;
    for (const Int& p : prime_factors(n)) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        best = std::max(best, symbol_length_prime_power(theta, p, e));
    }
    return best;
}

BrauerSymbolLength brauer_symbol_length(const TwoClassQ& theta, const Int& n,
                                        const std::vector<TwoClassQ>& ns_gens, long cap)
{
    Int size = 1;
    for (std::size_t i = 0; i < ns_gens.size(); ++i)
        size *= n;
    if (size > cap)
        throw std::length_error("brauer_symbol_length: coset larger than the cap");
    BrauerSymbolLength r;
    r.coset_size = size.convert_to<long>();
    r.value = 4;
    std::vector<Int> c(ns_gens.size(), Int(0));
    for (;;) {
        TwoClassQ t = theta;
        for (std::size_t i = 0; i < c.size(); ++i)
            t = t + Rat(c[i]) * ns_gens[i];
        int v = symbol_length(t, n);
        if (v < r.value) {
            r.value = v;
            r.minimizer = t;
        }
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == n)
            c[i++] = 0;
        if (i == c.size())
            break;
    }
    return r;
}

HodgeDatum gabber_instance(const Int& ell)
{
    if (!is_prime(ell))
        throw std::invalid_argument("gabber_instance: ell must be prime");
    // (x1, x2, y1, y2, z1, z2) of E1 x E2 x E3 relabeled as e1..e6.
    HodgeDatum d;
    d.n = ell;
    TwoClassQ b;
    b(0, 4) = 1; // x1 ^ z1
    b(2, 5) = 1; // y1 ^ z2
    d.B = Rat(1, 1) / Rat(ell) * b;
    TwoClassQ e12, e34, e56;
    e12(0, 1) = 1;
    e34(2, 3) = 1;
    e56(4, 5) = 1;
    d.ns2 = {e12, e34, e56};
    d.hdg4 = {cup(e12, e34).C, cup(e12, e56).C, cup(e34, e56).C};
    return d;
}

EvenClassQ hodge_class_family(const Int& n, const TwoClassQ& B, const Rat& x, const Rat& y, const TwoClassQ& H)
{
    const Rat n2 = Rat(n * n);
    return {n2, -(n2 * B), n2 * half_square(B) + x * half_square(H), y};
}

Int voisin_order(const Int& ind, const Int& ind_hdg)
{
    if (ind_hdg <= 0 || ind % ind_hdg != 0)
        throw std::invalid_argument("voisin_order: ind_Hdg must divide ind");
    return ind / ind_hdg;
}

bool bH_not_hodge_mod_ell(const TwoClassQ& b, const TwoClassQ& H, const Int& ell)
{
    const FourClassQ bH = cup(b, H).C, h = half_square(H);
    for (Int c = 0; c < ell; ++c) {
        FourClassQ t = bH - Rat(c) * h;
        bool divisible = true;
        for (int k = 0; k < ext::kPairs && divisible; ++k)
            divisible = mod(to_int(t.c(k)), ell) == 0;
        if (divisible)
            return false;
    }
    return true;
}

PathologyInstance euler_pathology_instance(const Int& ell)
{
    if (!is_prime(ell))
        throw std::invalid_argument("euler_pathology_instance: ell must be prime");
    const TwoClassQ H = principal_form();
    PathologyInstance inst;
    inst.ell = ell;
    // Candidates b = e_i ^ e_j + e_k ^ e_l, in lexicographic order.
    for (int s = 0; s < ext::kPairs; ++s)
        for (int t = s; t < ext::kPairs; ++t) {
            TwoClassQ b;
            b.c(s) += 1;
            if (t != s)
                b.c(t) += 1;
            HodgeDatum d;
            d.n = ell;
            d.B = Rat(1) / Rat(ell) * b;
            d.ns2 = {H};
            d.hdg4 = {half_square(H)};
            if (!bH_not_hodge_mod_ell(b, H, ell))
                continue;
            if (hodge_theoretic_index(d).N != ell * ell)
                continue;
            inst.datum = d;
            inst.b = b;
            inst.picard_rank_one = true; // NS2 = {H} by construction
            inst.index_is_ell_squared = true;
            inst.bH_not_hodge_mod_ell = true;
            return inst;
        }
    throw std::runtime_error("euler_pathology_instance: no candidate found");
}

bool in_siegel_domain(const SiegelPoint& z)
{
    const CMat& Z = z.Z;
    if (Z.rows() != Z.cols())
        return false;
    for (Eigen::Index i = 0; i < Z.rows(); ++i)
        for (Eigen::Index j = 0; j < Z.cols(); ++j)
            if (Z(i, j) != Z(j, i))
                return false;
    RMat Y(Z.rows(), Z.cols());
    for (Eigen::Index i = 0; i < Z.rows(); ++i)
        for (Eigen::Index j = 0; j < Z.cols(); ++j)
            Y(i, j) = Z(i, j).im;
    for (Eigen::Index k = 1; k <= Y.rows(); ++k)
        if (determinant(RMat(Y.topLeftCorner(k, k))) <= 0)
            return false;
    return true;
}

CMat hodge_locus_residual(const RMat& M, const SiegelPoint& z)
{
    if (M.rows() != 6 || !is_alternating(M))
        throw std::invalid_argument("hodge_locus_residual: need an alternating 6x6 matrix");
    if (z.Z.rows() != 3 || !in_siegel_domain(z))
        throw std::invalid_argument("hodge_locus_residual: Z is not in the Siegel upper half-space");
    auto lift = [](const RMat& R) {
        CMat C(R.rows(), R.cols());
        for (Eigen::Index i = 0; i < R.rows(); ++i)
            for (Eigen::Index j = 0; j < R.cols(); ++j)
                C(i, j) = GaussRat(R(i, j));
        return C;
    };
    const CMat A = lift(M.topLeftCorner(3, 3));
    const CMat B = lift(M.topRightCorner(3, 3));
    const CMat C = lift(M.bottomRightCorner(3, 3));
    const CMat& Z = z.Z;
    return A - B * Z + Z * B.transpose() + Z * C * Z;
}

} // namespace abel3
