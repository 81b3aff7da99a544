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

#include "abel3/scalar.hpp"

#include <optional>
#include <vector>

namespace abel3 {

/* Smith normal form: U * M * V = D, U and V unimodular, d_1 | d_2 | ... on
 * the diagonal of D, all diagonal entries nonnegative. */
struct SmithForm {
    IMat U, D, V;
    int rank = 0;
    std::vector<Int> invariants() const;
};

SmithForm smith_normal_form(const IMat& M);

template <class Derived> bool is_alternating(const Eigen::MatrixBase<Derived>& M)
{
    if (M.rows() != M.cols())
        return false;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        if (M(i, i) != 0)
            return false;
        for (Eigen::Index j = i + 1; j < M.cols(); ++j)
            if (M(i, j) != -M(j, i))
                return false;
    }
    return true;
}

namespace detail {

// Expansion along the first remaining row; idx lists the surviving indices.
template <class T, class Derived>
T pfaffian_expand(const Eigen::MatrixBase<Derived>& M, std::vector<int>& idx)
{
    if (idx.empty())
        return T(1);
    int i0 = idx[0];
    T acc(0);
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const auto& m = M(i0, idx[k]);
        if (m == 0)
            continue;
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t r = 1; r < idx.size(); ++r)
            if (r != k)
                rest.push_back(idx[r]);
        T sub = pfaffian_expand<T>(M, rest);
        if (k % 2 == 1)
            acc += T(m) * sub;
        else
            acc -= T(m) * sub;
    }
    return acc;
}

} // namespace detail

/* Pfaffian with Pf([[0,a],[-a,0]]) = a. Block-diagonal J (pairs 2i,2i+1) has
 * Pf = 1. Recursive expansion for size <= 8, skew elimination above. */
Rat pfaffian_elimination(RMat M);

template <class Derived> auto pfaffian(const Eigen::MatrixBase<Derived>& M)
{
    using T = typename Derived::Scalar;
    if (M.rows() % 2 != 0 || !is_alternating(M))
        throw std::invalid_argument("pfaffian: need an alternating matrix of even size");
    if (M.rows() <= 8) {
        std::vector<int> idx(M.rows());
        for (int i = 0; i < int(M.rows()); ++i)
            idx[i] = i;
        return detail::pfaffian_expand<T>(M, idx);
    }
    Rat p = pfaffian_elimination(to_rat(M));
    if constexpr (std::is_same_v<T, Int>)
        return to_int(p);
    else
        return T(p);
}

Int determinant(const IMat& M); // Bareiss
Rat determinant(const RMat& M);

struct AltType {
    std::vector<Int> d; // d_1 | d_2 | ... , length g
    int rank = 0;
};

AltType alt_type(const IMat& M);

bool is_prime(const Int& p);
std::vector<Int> prime_factors(Int n); // distinct, ascending

int rank_mod_p(const IMat& M, const Int& p);
int rank(const RMat& M);

struct DiophantineResult {
    bool feasible = false;
    IVec x0;     // particular solution
    IMat kernel; // columns span {x : A x = 0}
    // Infeasibility witness: row of D*y = U*b that fails.
    int cert_row = -1;
    Int cert_divisor, cert_target;
};

DiophantineResult solve_diophantine(const IMat& A, const IVec& b);
// Same, reusing a precomputed Smith form of A (many right-hand sides).
DiophantineResult solve_diophantine(const SmithForm& s, const IVec& b);

// Columns form a basis of the rational kernel of M.
RMat rational_kernel(const RMat& M);
// Rows cut out the column span of G: P * x = 0 iff x in span(G).
RMat annihilator(const RMat& G, Eigen::Index ambient);
std::optional<RVec> solve_rational(const RMat& A, const RVec& b);
// Scale each row to a primitive integer row.
IMat clear_rows(const RMat& M);

struct Cubic {
    Rat a3, a2, a1, a0;

    Rat discriminant() const
    {
        return 18 * a3 * a2 * a1 * a0 - 4 * a2 * a2 * a2 * a0 + a2 * a2 * a1 * a1
            - 4 * a3 * a1 * a1 * a1 - 27 * a3 * a3 * a0 * a0;
    }
    Rat operator()(const Rat& t) const { return ((a3 * t + a2) * t + a1) * t + a0; }
    bool degenerate() const { return a3 == 0; }
    bool operator==(const Cubic&) const = default;
};

bool cubic_positive_real_roots(const Cubic& c);
bool cubic_irreducible_Q(const Cubic& c);
bool cubic_irreducible_mod(const Cubic& c, const Int& ell);

} // namespace abel3
