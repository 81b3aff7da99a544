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
#include "abel3/dtseries.hpp"
#include "abel3/io.hpp"
#include "abel3/pipeline.hpp"
#include "abel3/tiltstab.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace abel3;
using io::json;
using io::to_json;

namespace {

std::array<Int, 3> parse_type(const std::string& s)
{
    std::array<Int, 3> t;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = s.find(',', pos);
        if ((i < 2) != (comma != std::string::npos))
            throw std::invalid_argument("type must be d1,d2,d3");
        t[i] = to_int(parse_rat(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        pos = comma + 1;
    }
    return t;
}

TwoClassQ form_or_principal(const std::string& path)
{
    return path.empty() ? principal_form() : io::two_from(io::read_file(path));
}

json ext_json(const ExtRat& x) { return x.str(); }

json charge_json(const CentralCharge& z) { return {{"re", to_json(z.re)}, {"im_per_s", to_json(z.im_per_s)}}; }

json quad_json(const ChernQuadruple& q)
{
    return json::array({to_json(q.q0), to_json(q.q1), to_json(q.q2), to_json(q.q3)});
}

json witness_json(const IndexWitness& w)
{
    return {{"N", w.N.str()},
            {"H1", to_json(w.H1)},
            {"H2", to_json(w.H2)},
            {"lambda", to_json(w.lambda)},
            {"mu", to_json(w.mu)},
            {"hodge_class", to_json(w.hodge_class())}};
}

CMat complex_matrix(const json& j)
{
    RMat re = io::rmat_from(j.at("re"));
    RMat im = j.contains("im") ? io::rmat_from(j.at("im")) : RMat::Zero(re.rows(), re.cols());
    if (re.rows() != im.rows() || re.cols() != im.cols())
        throw std::invalid_argument("real and imaginary parts differ in shape");
    CMat z(re.rows(), re.cols());
    for (Eigen::Index i = 0; i < re.rows(); ++i)
        for (Eigen::Index k = 0; k < re.cols(); ++k)
            z(i, k) = GaussRat(re(i, k), im(i, k));
    return z;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"abel3: exact lattice computations for twisted abelian threefolds"};
    app.require_subcommand(1);

    std::string cls, form, hpath, theta, ns, datum, siegel, out, cert, htype = "1,1,1", format = "tsv";
    std::string n_str = "2", d_str, ell_str = "5", a = "1", b = "0", c = "1", dd = "0";
    std::uint64_t seed = 7;
    int dmax = 60;
    bool four = false;

    auto* igusa = app.add_subcommand("igusa", "quartic discriminant of an even class");
    igusa->add_option("--class", cls, "EvenClass JSON")->required();

    auto* charpf = app.add_subcommand("char-pf", "characteristic Pfaffian p_u(t) = sign(Pf H) Pf(tH - u)");
    charpf->add_option("--form", form, "TwoClass JSON for u")->required();
    charpf->add_option("--H", hpath, "TwoClass JSON for H (default principal)");

    auto* type = app.add_subcommand("type", "type (d1,d2,d3) and Pfaffian of an integral form");
    type->add_option("--form", form, "TwoClass (or FourClass with --four) JSON")->required();
    type->add_flag("--four", four, "read the form as a degree-4 class");

    auto* fm = app.add_subcommand("fm", "Fourier-Mukai image (a,B,C,d) -> (d,-C,B,-a)");
    fm->add_option("--class", cls, "EvenClass JSON")->required();

    auto* dttable = app.add_subcommand("dt-table", "DT_{d,n} for 0 <= d <= dmax");
    dttable->add_option("--dmax", dmax)->check(CLI::Range(0, 500));
    dttable->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

    auto* dtcheck = app.add_subcommand("dt-check", "DT_{d,n} and the positivity verdict");
    dtcheck->add_option("--d", d_str)->required();
    dtcheck->add_option("--n", n_str)->required();

    auto* hindex = app.add_subcommand("hodge-index", "Hodge-theoretic index with witness");
    hindex->add_option("--datum", datum, "HodgeDatum JSON")->required();

    auto* per = app.add_subcommand("period", "period of the B-field");
    per->add_option("--datum", datum, "HodgeDatum JSON")->required();

    auto* symlen = app.add_subcommand("symbol-length", "symbol length of theta mod n");
    symlen->add_option("--n", n_str)->required();
    symlen->add_option("--theta", theta, "TwoClass JSON")->required();
    symlen->add_option("--ns", ns, "JSON array of NS generators (TwoClass)");

    auto* gabber = app.add_subcommand("gabber", "index of the ell-torsion instance with b = x1^x5 + x3^x6");
    gabber->add_option("--ell", ell_str)->required();

    auto* stab = app.add_subcommand("stab", "slopes, discriminant and central charges along H");
    stab->add_option("--class", cls, "EvenClass JSON")->required();
    stab->add_option("--H", hpath, "TwoClass JSON (default principal)");
    stab->add_option("--a", a);
    stab->add_option("--b", b);
    stab->add_option("--c", c);
    stab->add_option("--d", dd);

    auto* locus = app.add_subcommand("hodge-locus", "residual A - BZ + ZB^T + ZCZ of a form at a Siegel point");
    locus->add_option("--form", form, "6x6 alternating matrix JSON in a symplectic basis")->required();
    locus->add_option("--siegel", siegel, "{\"re\": 3x3, \"im\": 3x3}")->required();

    auto* pipe = app.add_subcommand("pipeline", "search and certify the lattice chain for one Brauer class");
    pipe->add_option("--n", n_str)->required();
    pipe->add_option("--h-type", htype);
    pipe->add_option("--theta", theta, "TwoClass JSON (default principal form)");
    pipe->add_option("--seed", seed);
    pipe->add_option("--out", out, "certificate path (default stdout)");

    auto* verify = app.add_subcommand("verify", "replay every check of a certificate");
    verify->add_option("cert", cert)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*igusa) {
            emit({{"delta", to_json(igusa_discriminant(io::even_from(io::read_file(cls))))}});
        } else if (*charpf) {
            TwoClassQ u = io::two_from(io::read_file(form)), H = form_or_principal(hpath);
            CharPfaffian p = char_pfaffian(u, H);
            emit({{"cubic", to_json(p.closed)},
                  {"interpolation_agrees", p.agree},
                  {"discriminant", to_json(p.closed.discriminant())},
                  {"positive_real_roots", cubic_positive_real_roots(p.closed)},
                  {"irreducible_over_Q", cubic_irreducible_Q(p.closed)}});
        } else if (*type) {
            json j = io::read_file(form);
            TwoClassQ u = four ? star(io::four_from(j)) : io::two_from(j);
            emit({{"type", to_json(alt_type(u))}, {"pfaffian", to_json(pfaffian(u))}});
        } else if (*fm) {
            emit(to_json(fm_transform(io::even_from(io::read_file(cls)))));
        } else if (*dttable) {
            QTTable t = expand_dt(dmax);
            json rows = json::array();
            for (int d = 0; d <= dmax; ++d)
                for (long n = -QTTable::n_max(d); n <= QTTable::n_max(d); ++n) {
                    Int v = t.at(d, n);
                    if (v == 0)
                        continue;
                    if (format == "tsv")
                        std::cout << d << '\t' << n << '\t' << v << '\n';
                    else
                        rows.push_back({d, n, v.str()});
                }
            if (format == "json")
                emit(rows);
        } else if (*dtcheck) {
            DTVerdict v = dt_positive(to_int(parse_rat(d_str)), to_int(parse_rat(n_str)));
            json j = {{"d", v.d.str()},
                      {"n", v.n.str()},
                      {"delta", to_json(v.delta)},
                      {"applicable", v.applicable},
                      {"positive_terms", v.positive_terms},
                      {"positive", v.positive},
                      {"implication_holds", v.implication_holds}};
            if (v.value_known)
                j["value"] = v.value.str();
            emit(j);
        } else if (*hindex) {
            HodgeDatum d = io::datum_from(io::read_file(datum));
            IndexWitness w = hodge_theoretic_index(d);
            json j = witness_json(w);
            j["period"] = period(d).str();
            j["witness_verified"] = verify_index_witness(d, w);
            emit(j);
        } else if (*per) {
            emit({{"period", period(io::datum_from(io::read_file(datum))).str()}});
        } else if (*symlen) {
            Int n = to_int(parse_rat(n_str));
            TwoClassQ t = io::two_from(io::read_file(theta));
            json j = {{"n", n.str()}, {"symbol_length", symbol_length(t, n)}};
            if (!ns.empty()) {
                std::vector<TwoClassQ> gens;
                for (const auto& g : io::read_file(ns))
                    gens.push_back(io::two_from(g));
                BrauerSymbolLength bl = brauer_symbol_length(t, n, gens);
                j["brauer_symbol_length"] = bl.value;
                j["minimizer"] = to_json(bl.minimizer);
                j["coset_size"] = bl.coset_size;
            }
            emit(j);
        } else if (*gabber) {
            HodgeDatum d = gabber_instance(to_int(parse_rat(ell_str)));
            IndexWitness w = hodge_theoretic_index(d);
            json j = witness_json(w);
            j["datum"] = to_json(d);
            j["period"] = period(d).str();
            emit(j);
        } else if (*stab) {
            EvenClassQ v = io::even_from(io::read_file(cls));
            TwoClassQ H = form_or_principal(hpath);
            StabParams p{parse_rat(a), parse_rat(b), parse_rat(c), parse_rat(dd)};
            ChernQuadruple q = reduce_along_H(v, H), qb = twist(q, p.b);
            Bogomolov bg = bogomolov(qb);
            json j = {{"q", quad_json(q)},
                      {"q_twisted", quad_json(qb)},
                      {"mu", ext_json(slope_mu(qb))},
                      {"bogomolov", to_json(bg.value)},
                      {"bogomolov_nonnegative", bg.nonnegative},
                      {"params_valid", params_valid(p)},
                      {"bg_inequality", p.a > 0 ? json(bg_inequality(qb, p.a)) : json(nullptr)}};
            if (p.a > 0) {
                j["nu"] = ext_json(tilt_slope_nu(qb, p.a));
                j["Z"] = charge_json(central_charge(qb, 3, p.a));
                j["Z_abcd"] = charge_json(central_charge_abcd(q, p));
            }
            emit(j);
        } else if (*locus) {
            RMat M = io::rmat_from(io::read_file(form));
            SiegelPoint z{complex_matrix(io::read_file(siegel))};
            CMat r = hodge_locus_residual(M, z);
            json re = json::array(), im = json::array();
            bool zero = true;
            for (Eigen::Index i = 0; i < r.rows(); ++i) {
                json rr = json::array(), ii = json::array();
                for (Eigen::Index k = 0; k < r.cols(); ++k) {
                    rr.push_back(to_json(r(i, k).re));
                    ii.push_back(to_json(r(i, k).im));
                    zero = zero && r(i, k) == GaussRat(0);
                }
                re.push_back(rr);
                im.push_back(ii);
            }
            emit({{"residual", {{"re", re}, {"im", im}}}, {"in_hodge_locus", zero}});
        } else if (*pipe) {
            SearchConfig cfg;
            cfg.seed = seed;
            Int n = to_int(parse_rat(n_str));
            std::array<Int, 3> t = parse_type(htype);
            TwoClassQ th = theta.empty() ? form_of_type(t) : io::two_from(io::read_file(theta));
            PipelineCertificate pc = run_pipeline(n, t, th, cfg);
            json j = certificate_to_json(pc);
            if (out.empty())
                emit(j);
            else
                io::write_file(out, j);
            if (!pc.passed()) {
                std::cerr << "pipeline: stage \"" << pc.failed_stage().value_or("?") << "\" failed\n";
                return 1;
            }
        } else if (*verify) {
            json j = io::read_file(cert);
            VerifyReport r = verify_certificate(j);
            bool complete = j.value("passed", false);
            emit({{"ok", r.ok}, {"complete", complete}, {"checks", r.checks.size()}, {"failures", r.failures}});
            return r.ok && complete ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "abel3: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
