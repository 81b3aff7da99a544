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

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>

namespace abel3 {

namespace mp = boost::multiprecision;

// Expression templates are off so that Eigen sees plain value types.
using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

template <class T> using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T> using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
using IMat = Mat<Int>;
using RMat = Mat<Rat>;
using IVec = Vec<Int>;
using RVec = Vec<Rat>;

inline Int numer(const Rat& q) { return mp::numerator(q); }
inline Int denom(const Rat& q) { return mp::denominator(q); }
inline bool is_integer(const Rat& q) { return denom(q) == 1; }

inline Int to_int(const Rat& q)
{
    if (!is_integer(q))
        throw std::domain_error("non-integral rational " + q.str());
    return numer(q);
}

inline Int gcd(const Int& a, const Int& b) { return mp::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b)
{
    if (a == 0 || b == 0)
        return 0;
    return mp::abs(a / mp::gcd(a, b) * b);
}

// Floor division and nonnegative remainder.
inline Int floor_div(const Int& a, const Int& b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}
inline Int mod(const Int& a, const Int& m)
{
    Int r = a % m;
    if (r < 0)
        r += mp::abs(m);
    return r;
}

inline int sign(const Int& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }
inline int sign(const Rat& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

// "p/q" with q omitted when 1.
inline std::string to_string(const Rat& q)
{
    if (is_integer(q))
        return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}
inline std::string to_string(const Int& a) { return a.str(); }

inline Rat parse_rat(std::string_view s)
{
    auto trim = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ')
            v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ')
            v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty())
        throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rat(Int(std::string(s)));
        Int p(std::string(trim(s.substr(0, slash))));
        Int q(std::string(trim(s.substr(slash + 1))));
        if (q == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational \"" + std::string(s) + "\"");
    }
}

template <class Derived> RMat to_rat(const Eigen::MatrixBase<Derived>& m)
{
    RMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(i, j) = Rat(m(i, j));
    return r;
}

// Requires every entry integral.
inline IMat to_int(const RMat& m)
{
    IMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(i, j) = to_int(m(i, j));
    return r;
}

inline Int common_denominator(const RMat& m)
{
    Int l = 1;
    for (Eigen::Index i = 0; i < m.size(); ++i)
        l = lcm(l, denom(m.data()[i]));
    return l;
}

} // namespace abel3
