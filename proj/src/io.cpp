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
#include "abel3/io.hpp"

#include <fstream>
#include <stdexcept>

namespace abel3::io {

json to_json(const Rat& q) { return abel3::to_string(q); }
json to_json(const Int& a) { return a.str(); }

Rat rat_from(const json& j)
{
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    if (j.is_number_integer())
        return Rat(j.get<long long>());
    throw std::invalid_argument("expected a rational, got " + j.dump());
}

Int int_from(const json& j) { return to_int(rat_from(j)); }

namespace {

std::string pair_key(int k)
{
    auto [i, j] = ext::pairs[k];
    return std::string{char('1' + i), char('1' + j)};
}

int key_index(const std::string& key)
{
    if (key.size() != 2 || key[0] < '1' || key[0] > '6' || key[1] < '1' || key[1] > '6' || key[0] >= key[1])
        throw std::invalid_argument("bad coordinate key \"" + key + "\" (want \"ij\", 1 <= i < j <= 6)");
    return ext::pair_index(key[0] - '1', key[1] - '1');
}

json coords_json(const Coords<Rat>& c)
{
    json j = json::object();
    for (int k = 0; k < ext::kPairs; ++k)
        if (c(k) != 0)
            j[pair_key(k)] = to_json(c(k));
    return j;
}

Coords<Rat> coords_from(const json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("expected a coordinate object, got " + j.dump());
    Coords<Rat> c = Coords<Rat>::Zero();
    for (auto& [key, val] : j.items())
        c(key_index(key)) = rat_from(val);
    return c;
}

} // namespace

json to_json(const TwoClassQ& b) { return coords_json(b.c); }
json to_json(const FourClassQ& c) { return coords_json(c.c); }
TwoClassQ two_from(const json& j) { return TwoClassQ(coords_from(j)); }
FourClassQ four_from(const json& j) { return FourClassQ(coords_from(j)); }

json to_json(const EvenClassQ& v)
{
    return {{"a", to_json(v.a)}, {"B", to_json(v.B)}, {"C", to_json(v.C)}, {"d", to_json(v.d)}};
}

EvenClassQ even_from(const json& j)
{
    EvenClassQ v;
    if (j.contains("a"))
        v.a = rat_from(j["a"]);
    if (j.contains("B"))
        v.B = two_from(j["B"]);
    if (j.contains("C"))
        v.C = four_from(j["C"]);
    if (j.contains("d"))
        v.d = rat_from(j["d"]);
    return v;
}

json to_json(const IMat& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            r.push_back(m(i, k).str());
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(const RMat& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            r.push_back(to_json(m(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

RMat rmat_from(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected a matrix (array of rows)");
    Eigen::Index rows = Eigen::Index(j.size()), cols = rows ? Eigen::Index(j[0].size()) : 0;
    RMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (Eigen::Index(j[i].size()) != cols)
            throw std::invalid_argument("ragged matrix");
        for (Eigen::Index k = 0; k < cols; ++k)
            m(i, k) = rat_from(j[i][k]);
    }
    return m;
}

IMat imat_from(const json& j) { return to_int(rmat_from(j)); }

json to_json(const Cubic& c) { return {to_json(c.a3), to_json(c.a2), to_json(c.a1), to_json(c.a0)}; }

Cubic cubic_from(const json& j)
{
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("expected a cubic [a3, a2, a1, a0]");
    return {rat_from(j[0]), rat_from(j[1]), rat_from(j[2]), rat_from(j[3])};
}

json to_json(const AltType& t)
{
    json d = json::array();
    for (const auto& x : t.d)
        d.push_back(x.str());
    return {{"d", d}, {"rank", t.rank}};
}

json to_json(const HodgeDatum& d)
{
    json ns = json::array(), hd = json::array();
    for (const auto& b : d.ns2)
        ns.push_back(to_json(b));
    for (const auto& c : d.hdg4)
        hd.push_back(to_json(c));
    return {{"B", to_json(d.B)}, {"n", d.n.str()}, {"ns2", ns}, {"hdg4", hd}};
}

HodgeDatum datum_from(const json& j)
{
    HodgeDatum d;
    d.B = two_from(j.at("B"));
    d.n = int_from(j.at("n"));
    if (j.contains("ns2"))
        for (const auto& b : j["ns2"])
            d.ns2.push_back(two_from(b));
    if (j.contains("hdg4"))
        for (const auto& c : j["hdg4"])
            d.hdg4.push_back(four_from(c));
    d.validate();
    return d;
}

json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void write_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace abel3::io
