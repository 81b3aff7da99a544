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
#include "abel3/exactalg.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>

namespace abel3 {

std::vector<Int> SmithForm::invariants() const
{
    std::vector<Int> d;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i)
        d.push_back(D(i, i));
    return d;
}

namespace {

void swap_rows(IMat& M, Eigen::Index a, Eigen::Index b)
{
    if (a != b)
        M.row(a).swap(M.row(b));
}
void swap_cols(IMat& M, Eigen::Index a, Eigen::Index b)
{
    if (a != b)
        M.col(a).swap(M.col(b));
}
// row a += f * row b
void add_row(IMat& M, Eigen::Index a, Eigen::Index b, const Int& f)
{
    for (Eigen::Index j = 0; j < M.cols(); ++j)
        M(a, j) += f * M(b, j);
}
void add_col(IMat& M, Eigen::Index a, Eigen::Index b, const Int& f)
{
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        M(i, a) += f * M(i, b);
}

} // namespace

SmithForm smith_normal_form(const IMat& M)
{
    const Eigen::Index m = M.rows(), n = M.cols();
    SmithForm s;
    s.D = M;
    s.U = IMat::Identity(m, m);
    s.V = IMat::Identity(n, n);
    IMat& D = s.D;
    Eigen::Index t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            Eigen::Index pi = -1, pj = -1;
            for (Eigen::Index i = t; i < m; ++i)
                for (Eigen::Index j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pi < 0 || mp::abs(D(i, j)) < mp::abs(D(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                s.rank = int(t);
                return s;
            }
            swap_rows(D, t, pi);
            swap_rows(s.U, t, pi);
            swap_cols(D, t, pj);
            swap_cols(s.V, t, pj);

            bool clean = true;
            for (Eigen::Index i = t + 1; i < m; ++i) {
                if (D(i, t) == 0)
                    continue;
                Int q = floor_div(D(i, t), D(t, t));
                add_row(D, i, t, -q);
                add_row(s.U, i, t, -q);
                if (D(i, t) != 0)
                    clean = false;
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (D(t, j) == 0)
                    continue;
                Int q = floor_div(D(t, j), D(t, t));
                add_col(D, j, t, -q);
                add_col(s.V, j, t, -q);
                if (D(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // divisibility: fold an offending row into row t and retry
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            add_row(D, t, bad, Int(1));
            add_row(s.U, t, bad, Int(1));
        }
        if (D(t, t) < 0) {
            D.row(t) *= Int(-1);
            s.U.row(t) *= Int(-1);
        }
    }
    s.rank = int(t);
    for (Eigen::Index i = 0; i < std::min(m, n); ++i)
        if (D(i, i) == 0) {
            s.rank = int(i);
            break;
        }
    return s;
}

Rat pfaffian_elimination(RMat M)
{
    const Eigen::Index n = M.rows();
    Rat pf = 1;
    for (Eigen::Index k = 0; k < n; k += 2) {
        Eigen::Index p = -1;
        for (Eigen::Index j = k + 1; j < n; ++j)
            if (M(k, j) != 0) {
                p = j;
                break;
            }
        if (p < 0)
            return 0;
        if (p != k + 1) {
            M.row(p).swap(M.row(k + 1));
            M.col(p).swap(M.col(k + 1));
            pf = -pf;
        }
        const Rat a = M(k, k + 1);
        pf *= a;
        // Pf(M) = Pf(A) * Pf(C + B^T A^{-1} B) for the leading 2x2 block A.
        for (Eigen::Index i = k + 2; i < n; ++i)
            for (Eigen::Index j = i + 1; j < n; ++j) {
                M(i, j) += (M(k + 1, i) * M(k, j) - M(k, i) * M(k + 1, j)) / a;
                M(j, i) = -M(i, j);
            }
    }
    return pf;
}

Int determinant(const IMat& Min)
{
    if (Min.rows() != Min.cols())
        throw std::invalid_argument("determinant: square matrix required");
    IMat M = Min;
    const Eigen::Index n = M.rows();
    if (n == 0)
        return 1;
    Int prev = 1;
    int s = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            Eigen::Index r = k + 1;
            while (r < n && M(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            M.row(k).swap(M.row(r));
            s = -s;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return s * M(n - 1, n - 1);
}

Rat determinant(const RMat& Min)
{
    RMat M = Min;
    const Eigen::Index n = M.rows();
    Rat det = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index r = k;
        while (r < n && M(r, k) == 0)
            ++r;
        if (r == n)
            return 0;
        if (r != k) {
            M.row(k).swap(M.row(r));
            det = -det;
        }
        det *= M(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (M(i, k) == 0)
                continue;
            Rat f = M(i, k) / M(k, k);
            for (Eigen::Index j = k; j < n; ++j)
                M(i, j) -= f * M(k, j);
        }
    }
    return det;
}

AltType alt_type(const IMat& M)
{
    if (M.rows() % 2 != 0 || !is_alternating(M))
        throw std::invalid_argument("alt_type: need an alternating matrix of even size");
    auto inv = smith_normal_form(M).invariants();
    AltType t;
    for (std::size_t i = 0; i < inv.size(); i += 2) {
        if (inv[i] != inv[i + 1])
            throw std::logic_error("alt_type: invariant factors do not pair up");
        t.d.push_back(inv[i]);
        if (inv[i] != 0)
            t.rank += 2;
    }
    return t;
}

bool is_prime(const Int& p)
{
    if (p < 2)
        return false;
    if (p < 1000000) {
        long v = p.convert_to<long>();
        for (long q = 2; q * q <= v; ++q)
            if (v % q == 0)
                return false;
        return true;
    }
    return mp::miller_rabin_test(p, 40);
}

namespace {

Int pollard_rho(const Int& n)
{
    if (n % 2 == 0)
        return 2;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = gcd(mp::abs(x - y), n);
        }
        if (d != n)
            return d;
    }
}

void factor_into(Int n, std::vector<Int>& out)
{
    if (n == 1)
        return;
    for (long q = 2; q < 10000 && Int(q) * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<Int> prime_factors(Int n)
{
    n = mp::abs(n);
    std::vector<Int> out;
    if (n == 0)
        return out;
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int rank_mod_p(const IMat& M, const Int& p)
{
    if (!is_prime(p))
        throw std::invalid_argument("rank_mod_p: modulus is not prime");
    IMat A(M.rows(), M.cols());
    for (Eigen::Index i = 0; i < M.size(); ++i)
        A.data()[i] = mod(M.data()[i], p);
    int r = 0;
    for (Eigen::Index c = 0; c < A.cols() && r < A.rows(); ++c) {
        Eigen::Index piv = r;
        while (piv < A.rows() && A(piv, c) == 0)
            ++piv;
        if (piv == A.rows())
            continue;
        A.row(r).swap(A.row(piv));
        Int inv = mp::powm(A(r, c), p - 2, p);
        for (Eigen::Index i = r + 1; i < A.rows(); ++i) {
            if (A(i, c) == 0)
                continue;
            Int f = A(i, c) * inv % p;
            for (Eigen::Index j = c; j < A.cols(); ++j)
                A(i, j) = mod(A(i, j) - f * A(r, j), p);
        }
        ++r;
    }
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> rref(RMat& A)
{
    std::vector<Eigen::Index> piv;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < A.cols() && r < A.rows(); ++c) {
        Eigen::Index p = r;
        while (p < A.rows() && A(p, c) == 0)
            ++p;
        if (p == A.rows())
            continue;
        A.row(r).swap(A.row(p));
        Rat inv = 1 / A(r, c);
        for (Eigen::Index j = c; j < A.cols(); ++j)
            A(r, j) *= inv;
        for (Eigen::Index i = 0; i < A.rows(); ++i) {
            if (i == r || A(i, c) == 0)
                continue;
            Rat f = A(i, c);
            for (Eigen::Index j = c; j < A.cols(); ++j)
                A(i, j) -= f * A(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

} // namespace

int rank(const RMat& M)
{
    RMat A = M;
    return int(rref(A).size());
}

RMat rational_kernel(const RMat& M)
{
    RMat A = M;
    auto piv = rref(A);
    const Eigen::Index n = M.cols();
    std::vector<bool> is_piv(n, false);
    for (auto c : piv)
        is_piv[c] = true;
    RMat K(n, n - Eigen::Index(piv.size()));
    Eigen::Index k = 0;
    for (Eigen::Index f = 0; f < n; ++f) {
        if (is_piv[f])
            continue;
        RVec v = RVec::Zero(n);
        v(f) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            v(piv[r]) = -A(Eigen::Index(r), f);
        K.col(k++) = v;
    }
    return K;
}

RMat annihilator(const RMat& G, Eigen::Index ambient)
{
    if (G.cols() == 0)
        return RMat::Identity(ambient, ambient);
    RMat K = rational_kernel(G.transpose());
    return K.transpose();
}

std::optional<RVec> solve_rational(const RMat& A, const RVec& b)
{
    RMat aug(A.rows(), A.cols() + 1);
    aug << A, b;
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == A.cols())
        return std::nullopt;
    RVec x = RVec::Zero(A.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        x(piv[r]) = aug(Eigen::Index(r), A.cols());
    return x;
}

IMat clear_rows(const RMat& M)
{
    IMat R(M.rows(), M.cols());
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        Int l = 1;
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            l = lcm(l, denom(M(i, j)));
        Int g = 0;
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            R(i, j) = numer(M(i, j)) * (l / denom(M(i, j)));
            g = gcd(g, R(i, j));
        }
        if (g > 1)
            for (Eigen::Index j = 0; j < M.cols(); ++j)
                R(i, j) /= g;
    }
    return R;
}

DiophantineResult solve_diophantine(const IMat& A, const IVec& b)
{
    if (A.rows() != b.size())
        throw std::invalid_argument("solve_diophantine: dimension mismatch");
    return solve_diophantine(smith_normal_form(A), b);
}

DiophantineResult solve_diophantine(const SmithForm& s, const IVec& b)
{
    if (s.U.rows() != b.size())
        throw std::invalid_argument("solve_diophantine: dimension mismatch");
    IVec c = s.U * b;
    DiophantineResult res;
    const Eigen::Index n = s.V.rows();
    const Eigen::Index diag = std::min(s.D.rows(), s.D.cols());
    IVec y = IVec::Zero(n);
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        Int di = i < diag ? s.D(i, i) : Int(0);
        bool ok = di == 0 ? c(i) == 0 : c(i) % di == 0;
        if (!ok) {
            res.feasible = false;
            res.cert_row = int(i);
            res.cert_divisor = di;
            res.cert_target = c(i);
            return res;
        }
        if (di != 0)
            y(i) = c(i) / di;
    }
    res.feasible = true;
    res.x0 = s.V * y;
    res.kernel = s.V.rightCols(n - s.rank);
    return res;
}

bool cubic_positive_real_roots(const Cubic& c)
{
    if (c.degenerate())
        throw std::invalid_argument("cubic: leading coefficient is zero");
    Cubic p = c;
    if (p.a3 < 0)
        p = {-p.a3, -p.a2, -p.a1, -p.a0};
    return p.discriminant() >= 0 && p.a2 < 0 && p.a1 > 0 && p.a0 < 0;
}

namespace {

// Integer coefficients (c3, c2, c1, c0) proportional to the cubic.
std::array<Int, 4> integral_coefficients(const Cubic& c)
{
    Int l = lcm(lcm(denom(c.a3), denom(c.a2)), lcm(denom(c.a1), denom(c.a0)));
    auto f = [&](const Rat& q) { return numer(q) * (l / denom(q)); };
    return {f(c.a3), f(c.a2), f(c.a1), f(c.a0)};
}

Int eval_monic(const Int& b, const Int& cc, const Int& d, const Int& s)
{
    return ((s + b) * s + cc) * s + d;
}

bool has_integer_root_monic(const Int& b, const Int& cc, const Int& d)
{
    // s^3 + b s^2 + cc s + d; roots bounded by 1 + max |coeff|
    Int R = 1 + std::max({mp::abs(b), mp::abs(cc), mp::abs(d)});
    std::vector<Int> cuts{-R, R};
    // critical points of 3s^2 + 2b s + cc
    Int disc = b * b - 3 * cc;
    if (disc >= 0) {
        Int r = mp::sqrt(disc);
        for (Int num : {-b - r - 1, -b - r, -b + r, -b + r + 1}) {
            Int lo = floor_div(num, 3);
            for (Int k = lo - 1; k <= lo + 1; ++k)
                if (k > -R && k < R)
                    cuts.push_back(k);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (const Int& k : cuts)
        if (eval_monic(b, cc, d, k) == 0)
            return true;
    auto sgn = [&](const Int& s) { return sign(eval_monic(b, cc, d, s)); };
    // f is monotone between consecutive cuts: the critical points lie
    // strictly inside unit windows whose endpoints are all cuts.
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Int lo = cuts[i], hi = cuts[i + 1];
        int slo = sgn(lo), shi = sgn(hi);
        if (slo == shi)
            continue;
        while (hi - lo > 1) {
            Int mid = floor_div(lo + hi, 2);
            int sm = sgn(mid);
            if (sm == 0)
                return true;
            if (sm == slo)
                lo = mid;
            else
                hi = mid;
        }
    }
    return false;
}

} // namespace

bool cubic_irreducible_Q(const Cubic& c)
{
    if (c.degenerate())
        throw std::invalid_argument("cubic: leading coefficient is zero");
    auto [c3, c2, c1, c0] = integral_coefficients(c);
    if (c0 == 0)
        return false;
    // s = c3 t turns c3^2 p(t) into the monic s^3 + c2 s^2 + c1 c3 s + c0 c3^2
    return !has_integer_root_monic(c2, c1 * c3, c0 * c3 * c3);
}

bool cubic_irreducible_mod(const Cubic& c, const Int& ell)
{
    if (!is_prime(ell))
        throw std::invalid_argument("cubic_irreducible_mod: modulus is not prime");
    if (c.degenerate())
        throw std::invalid_argument("cubic: leading coefficient is zero");
    auto red = [&](const Rat& q) {
        if (denom(q) % ell == 0)
            throw std::domain_error("cubic_irreducible_mod: denominator divisible by the prime");
        return mod(numer(q) * mp::powm(mod(denom(q), ell), ell - 2, ell), ell);
    };
    Int k3 = red(c.a3), k2 = red(c.a2), k1 = red(c.a1), k0 = red(c.a0);
    if (k3 == 0)
        return false; // not a cubic over F_ell
    for (Int x = 0; x < ell; ++x)
        if (((k3 * x + k2) * x + k1) * x % ell == mod(-k0, ell))
            return false;
    return true;
}

} // namespace abel3
