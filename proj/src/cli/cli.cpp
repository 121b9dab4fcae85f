#include "skelcollar/cli.hpp"

#include "skelcollar/birmaps.hpp"
#include "skelcollar/bundles.hpp"
#include "skelcollar/deform.hpp"
#include "skelcollar/duality.hpp"
#include "skelcollar/error.hpp"
#include "skelcollar/exact/poly_json.hpp"
#include "skelcollar/potential.hpp"
#include "skelcollar/skeleton.hpp"
#include "skelcollar/toric.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace skelcollar::cli {

using exact::LaurentPoly;
using exact::poly_to_json;
using exact::Rational;
using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

template <class T, class F>
std::string join_map(const std::vector<T>& items, const std::string& sep, F f) {
    std::vector<std::string> parts;
    for (const auto& x : items) parts.push_back(f(x));
    return join(parts, sep);
}

std::string ints(const std::vector<int>& v) {
    return "(" + join_map(v, ", ", [](int x) { return std::to_string(x); }) + ")";
}

std::string vec2(const toric::Vec2& v) { return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")"; }

std::string cutoff_text(const RunConfig& c) {
    return c.cutoff ? std::to_string(*c.cutoff) : std::string("max(3, 2j)");
}

json header_json(const RunConfig& c) {
    json h{{"command", c.subcommand}, {"seed", c.seed}};
    if (c.cutoff) {
        h["cutoff"] = *c.cutoff;
    } else {
        h["cutoff"] = "max(3, 2j)";
    }
    return h;
}

std::string header_text(const RunConfig& c) {
    return "skelcollar " + c.subcommand + (c.mode.empty() ? "" : " " + c.mode) + " | seed " + std::to_string(c.seed) +
           " | cutoff " + cutoff_text(c);
}

json polys_json(const std::vector<LaurentPoly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(poly_to_json(p));
    return a;
}

json matrix_strings(const exact::PolyMatrix& m) {
    json a = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.to_string());
        a.push_back(r);
    }
    return a;
}

/// Writes either the JSON document or the text body, each with the header.
void emit(std::ostream& out, const RunConfig& c, json doc, const std::string& text) {
    if (c.format == "json") {
        doc["header"] = header_json(c);
        out << doc.dump(2) << '\n';
    } else {
        out << "# " << header_text(c) << '\n' << text;
    }
}

void require_format(const RunConfig& c, bool svg_allowed) {
    if (c.format == "svg" && !svg_allowed) {
        throw Error(Errc::InvalidInput, "svg output is available for resolve and fan only");
    }
}

skeleton::TorusAction action_for(const RunConfig& c) {
    if (c.weights.empty()) return skeleton::TorusAction::standard(c.n);
    if (static_cast<int>(c.weights.size()) != c.n) {
        throw Error(Errc::InvalidInput, "expected " + std::to_string(c.n) + " weights");
    }
    return skeleton::TorusAction{c.weights};
}

int cmd_skeleton(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    if (c.n < 1) throw Error(Errc::InvalidInput, "--n must be at least 1");
    const auto action = action_for(c);
    const auto comps = skeleton::skeleton(c.n, action);
    std::ostringstream t;
    t << "T*P^" << c.n << ", weights " << ints(action.weights) << '\n';
    json arr = json::array();
    for (const auto& comp : comps) {
        const auto cls = comp.classification.to_string();
        t << "L_" << comp.index << " = " << cls << " : {" << join(comp.forced_zero, " = ")
          << (comp.forced_zero.empty() ? "" : " = 0") << "}\n";
        arr.push_back({{"index", comp.index},
                       {"classification", cls},
                       {"base_dim", comp.classification.base_dim},
                       {"rank", comp.classification.rank},
                       {"twists", comp.classification.twists},
                       {"forced_zero", comp.forced_zero},
                       {"equations", polys_json(comp.equations())},
                       {"chart_equations", polys_json(comp.chart_equations)},
                       {"free_base", comp.free_base},
                       {"free_fiber", comp.free_fiber}});
    }
    emit(out, c, {{"n", c.n}, {"weights", action.weights}, {"components", arr}}, t.str());
    return kOk;
}

int cmd_potential(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    if (c.n < 1) throw Error(Errc::InvalidInput, "--n must be at least 1");
    const auto action = action_for(c);
    const auto field = potential::action_vector_field(action);
    const potential::SymplecticStructure omega{c.n};
    const auto kappa = Rational::parse(c.kappa);
    const auto p = potential::solve_potential(field, omega, kappa);
    const auto residual = potential::hamiltonian_residual(p, field, omega, potential::VectorField::symbolic(c.n));
    std::ostringstream t;
    t << "weights " << ints(action.weights) << ", kappa " << kappa.to_string() << '\n';
    t << "X = (" << join_map(field.components, ", ", [](const LaurentPoly& f) { return f.to_string(); }) << ")\n";
    t << "h = " << p.h.to_string() << '\n';
    t << "residual = " << residual.to_string() << '\n';
    emit(out, c,
         {{"n", c.n},
          {"weights", action.weights},
          {"kappa", exact::rational_to_json(kappa)},
          {"vector_field", polys_json(field.components)},
          {"potential", poly_to_json(p.h)},
          {"residual", poly_to_json(residual)}},
         t.str());
    return residual.is_zero() ? kOk : kVerificationFailed;
}

json cone_json(const toric::Cone2D& cone) { return json::array({cone.ray1, cone.ray2}); }

int cmd_resolve(const RunConfig& c, std::ostream& out) {
    const auto s = toric::QuotientSingularity::make(c.n, c.a);
    const auto chain = toric::minimal_resolution(s);
    const std::string title = "1/" + std::to_string(c.n) + "(1," + std::to_string(c.a) + ")";
    if (c.format == "svg") {
        out << fan_svg({{chain.cone.ray1, chain.cone.ray2}}, {chain.rays}, {title}, header_text(c));
        return kOk;
    }
    std::ostringstream t;
    t << title << " cone <" << vec2(chain.cone.ray1) << ", " << vec2(chain.cone.ray2) << ">\n";
    t << "rays " << join_map(chain.rays, " ", vec2) << '\n';
    t << "self-intersections " << ints(chain.self_intersections) << '\n';
    t << "intersection matrix\n";
    for (const auto& row : chain.intersection_matrix) t << "  " << ints(row) << '\n';
    emit(out, c,
         {{"cone", cone_json(chain.cone)},
          {"rays", chain.rays},
          {"self_intersections", chain.self_intersections},
          {"intersection_matrix", chain.intersection_matrix}},
         t.str());
    return kOk;
}

int cmd_fan(const RunConfig& c, std::ostream& out) {
    const auto s = toric::QuotientSingularity::make(c.n, c.a);
    const auto cone = toric::quotient_cone(s);
    const auto dual = toric::dual_cone(cone);
    const auto nf = toric::normal_form(cone);
    const auto dnf = toric::normal_form(dual);
    const std::string title = "1/" + std::to_string(c.n) + "(1," + std::to_string(c.a) + ")";
    if (c.format == "svg") {
        out << fan_svg({{cone.ray1, cone.ray2}, {dual.ray1, dual.ray2}}, {}, {title, "dual of " + title},
                       header_text(c));
        return kOk;
    }
    std::ostringstream t;
    t << title << " cone <" << vec2(cone.ray1) << ", " << vec2(cone.ray2) << "> normal form (" << nf.n << ", " << nf.q
      << ")\n";
    t << "dual cone <" << vec2(dual.ray1) << ", " << vec2(dual.ray2) << "> normal form (" << dnf.n << ", " << dnf.q
      << ")\n";
    emit(out, c,
         {{"cone", cone_json(cone)},
          {"dual_cone", cone_json(dual)},
          {"normal_form", {nf.n, nf.q}},
          {"dual_normal_form", {dnf.n, dnf.q}}},
         t.str());
    return kOk;
}

json map_json(const birmaps::RationalMap& m) {
    json comps = json::array();
    for (const auto& f : m.components) comps.push_back(polys_json(f));
    return {{"source", m.source},
            {"target", m.target},
            {"components", comps},
            {"indeterminacy", m.indeterminacy},
            {"notes", m.notes}};
}

std::string map_text(const std::string& name, const birmaps::RationalMap& m) {
    std::string s = name + ": " + join_map(m.source, " x ", [](int d) { return "P^" + std::to_string(d); }) + " -> " +
                    join_map(m.target, " x ", [](int d) { return "P^" + std::to_string(d); }) + "\n";
    for (const auto& f : m.components) {
        s += "  [" + join_map(f, " : ", [](const LaurentPoly& p) { return p.to_string(); }) + "]\n";
    }
    s += "  indeterminacy: " + m.indeterminacy + "\n";
    for (const auto& n : m.notes) s += "  note: " + n + "\n";
    return s;
}

json verdict_json(const birmaps::Verdict& v) {
    return {{"checked", v.checked}, {"skipped", v.skipped}, {"failed", v.failed}, {"ok", v.ok()},
            {"first_failure", v.first_failure}};
}

std::string verdict_text(const std::string& name, const birmaps::Verdict& v) {
    return name + ": " + (v.ok() ? "ok" : "FAILED") + " (" + std::to_string(v.checked) + " checked, " +
           std::to_string(v.skipped) + " skipped, " + std::to_string(v.failed) + " failed)\n";
}

int report_pair(const RunConfig& c, std::ostream& out, const birmaps::ProjectivePair& pp, json extra) {
    const auto fwd = birmaps::verify_birational(pp.forward, pp.inverse, c.samples, c.seed);
    const auto back = birmaps::verify_birational(pp.inverse, pp.forward, c.samples, c.seed);
    std::string t = map_text("forward", pp.forward) + map_text("inverse", pp.inverse);
    if (!pp.keep_set.empty()) t += "keep set " + ints(pp.keep_set) + "\n";
    t += verdict_text("inverse o forward", fwd) + verdict_text("forward o inverse", back);
    extra["forward"] = map_json(pp.forward);
    extra["inverse"] = map_json(pp.inverse);
    extra["keep_set"] = pp.keep_set;
    extra["round_trip_forward"] = verdict_json(fwd);
    extra["round_trip_backward"] = verdict_json(back);
    emit(out, c, extra, t);
    return fwd.ok() && back.ok() ? kOk : kVerificationFailed;
}

int cmd_birmap(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    return report_pair(c, out, birmaps::product_to_projective(c.a, c.b), {{"a", c.a}, {"b", c.b}});
}

int cmd_birstep(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    return report_pair(c, out, birmaps::bir_step(c.n, c.j), {{"n", c.n}, {"j", c.j}});
}

json certificate_json(int n, const bundles::IsoCertificate& cert) {
    json a = json::array();
    for (const auto& row : cert.a) {
        json r = json::array();
        for (const auto& e : row) r.push_back(bundles::v_chart_string(n, e));
        a.push_back(r);
    }
    return {{"A_in_xi_v", a}, {"B_in_z_u", matrix_strings(cert.b)}};
}

int cmd_collar(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    if (c.mode == "pic") {
        const auto pic = bundles::picard_group(c.n);
        const auto top = bundles::collar_topology(c.n);
        bool ok = true;
        std::ostringstream t;
        t << "Pic of the collar of Z_" << c.n << ": tensor table of L(0.." << c.n - 1 << ")\n";
        for (const auto& row : pic.table) t << "  " << ints(row) << '\n';
        json certs = json::array();
        for (const auto& row : pic.certificates) {
            for (const auto& cert : row) {
                ok = ok && cert.verifies();
                certs.push_back({{"j", cert.j},
                                 {"residue", cert.residue},
                                 {"k", cert.k},
                                 {"v_side", cert.v_side.to_string()},
                                 {"u_side", cert.u_side.to_string()},
                                 {"verified", cert.verifies()}});
            }
        }
        t << "generator L(1) has order " << pic.generator_order() << '\n';
        t << "c1 mod n " << ints(pic.chern_residues) << '\n';
        t << "certificates " << (ok ? "verified" : "FAILED") << '\n';
        t << "pi1 = H1 = H2 = Z/" << top.pi1 << '\n';
        for (const auto& s : top.steps) t << "  " << s << '\n';
        emit(out, c,
             {{"n", c.n},
              {"table", pic.table},
              {"generator_order", pic.generator_order()},
              {"chern_residues", pic.chern_residues},
              {"certificates", certs},
              {"topology", {{"pi1", top.pi1}, {"H1", top.h1}, {"H2", top.h2}, {"steps", top.steps}}}},
             t.str());
        return ok ? kOk : kVerificationFailed;
    }
    if (c.rank != 1 && c.rank != 2) throw Error(Errc::InvalidInput, "--rank must be 1 or 2");
    const auto make = [&](int j) {
        return c.rank == 1 ? bundles::BundleTransition::line(c.n, j) : bundles::BundleTransition::canonical(c.n, j);
    };
    const auto m1 = make(c.j1);
    const auto m2 = make(c.j2);
    const int bound = c.bound ? *c.bound : bundles::default_iso_bound(c.n, c.j1, c.j2);
    const auto v = bundles::collar_iso_verdict(m1, m2, bound);
    std::ostringstream t;
    t << "M1 = " << exact::to_string(m1.matrix) << ", M2 = " << exact::to_string(m2.matrix) << ", bound " << bound
      << '\n';
    t << "verdict: " << bundles::to_string(v.status) << " (" << v.reason << ")\n";
    json doc{{"n", c.n},         {"rank", c.rank},    {"j1", c.j1},
             {"j2", c.j2},       {"bound", bound},    {"status", bundles::to_string(v.status)},
             {"reason", v.reason}};
    if (v.certificate) {
        const auto cj = certificate_json(c.n, *v.certificate);
        t << "A (xi, v) = " << cj["A_in_xi_v"].dump() << '\n';
        t << "B (z, u) = " << cj["B_in_z_u"].dump() << '\n';
        doc["certificate"] = cj;
    }
    emit(out, c, doc, t.str());
    return kOk;
}

int cmd_splitting(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    std::ifstream in(c.matrix_path);
    if (!in) throw Error(Errc::InvalidInput, "cannot open " + c.matrix_path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    bundles::BundleTransition m;
    m.n = c.n > 0 ? c.n : 1;
    if (doc.is_object()) {
        if (doc.contains("n")) m.n = doc.at("n").get<int>();
        m.matrix = exact::matrix_from_json(doc.at("matrix"));
    } else {
        m.matrix = exact::matrix_from_json(doc);
    }
    const auto [j, mj] = bundles::splitting_type(m);
    std::ostringstream t;
    t << "M = " << exact::to_string(m.matrix) << '\n';
    t << "splitting type (" << j << ", " << mj << ")\n";
    emit(out, c, {{"n", m.n}, {"splitting", {j, mj}}}, t.str());
    return kOk;
}

int cmd_moduli(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    const auto d = bundles::moduli_dimension(c.n, c.j);
    std::ostringstream t;
    t << "n = " << c.n << ", j = " << c.j << ": " << (d.value ? std::to_string(*d.value) : std::string("Empty"))
      << " (" << d.note << ")\n";
    json doc{{"n", c.n}, {"j", c.j}, {"note", d.note}};
    doc["dimension"] = d.value ? json(*d.value) : json(nullptr);
    emit(out, c, doc, t.str());
    return kOk;
}

int cmd_ext1(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    const int cutoff = c.cutoff ? *c.cutoff : deform::default_cutoff(c.j);
    const auto basis = deform::ext1_basis(c.n, c.j, cutoff);
    std::ostringstream t;
    t << "H^1(Z_" << c.n << ", O(" << -2 * c.j << ")) = Ext^1(O(" << c.j << "), O(" << -c.j << ")), dimension "
      << basis.monomials.size() << ", cutoff " << cutoff << '\n';
    for (const auto& m : basis.monomials) t << "  q = " << m.to_string() << "   p = " << (m * exact::var("z", c.j)).to_string() << '\n';
    emit(out, c, {{"n", c.n}, {"j", c.j}, {"cutoff", cutoff}, {"basis", polys_json(basis.monomials)}}, t.str());
    return kOk;
}

int cmd_deform(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    const auto basis = deform::ext1_basis(c.n, c.j, c.cutoff ? *c.cutoff : deform::default_cutoff(c.j));
    LaurentPoly q;
    if (!c.coeffs.empty()) {
        if (c.coeffs.size() != basis.monomials.size()) {
            throw Error(Errc::InvalidInput, "expected " + std::to_string(basis.monomials.size()) + " coefficients");
        }
        for (std::size_t i = 0; i < c.coeffs.size(); ++i) q += basis.monomials[i].scaled(Rational::parse(c.coeffs[i]));
    }
    const auto cls = deform::make_class(c.n, c.j, q);
    const auto fam = deform::deformation_family(cls, c.s);
    std::vector<Rational> taus;
    if (c.taus.empty()) {
        taus = {0, 1, 2, Rational(1, 3)};
    } else {
        for (const auto& s : c.taus) taus.push_back(Rational::parse(s));
    }
    const auto profile = deform::family_splitting_profile(fam, taus);
    std::ostringstream t;
    t << "class p = " << cls.p().to_string() << " in Ext^1(O(" << c.j << "), O(" << -c.j << ")), s = " << c.s << '\n';
    t << "family F(tau) = " << exact::to_string(fam.matrix) << '\n';
    t << "F(1) ~ [[z^j, p], [0, z^-j]]: " << (fam.endpoint_verified ? "certificate verified" : "FAILED") << '\n';
    json prof = json::array();
    for (std::size_t i = 0; i < taus.size(); ++i) {
        t << "  tau = " << taus[i].to_string() << ": splitting (" << profile[i] << ", " << -profile[i] << ")\n";
        prof.push_back({{"tau", taus[i].to_string()}, {"splitting", profile[i]}});
    }
    json doc{{"n", c.n},
             {"j", c.j},
             {"s", c.s},
             {"p", poly_to_json(cls.p())},
             {"family", matrix_strings(fam.matrix)},
             {"endpoint_verified", fam.endpoint_verified},
             {"profile", prof}};
    if (fam.endpoint_certificate) doc["endpoint_certificate"] = certificate_json(c.n, *fam.endpoint_certificate);
    emit(out, c, doc, t.str());
    return fam.endpoint_verified ? kOk : kVerificationFailed;
}

std::string pair_text(const duality::CollarPair& p) {
    return "O(" + std::to_string(p.first) + ") + O(" + std::to_string(p.second) + ")";
}

int cmd_duality(const RunConfig& c, std::ostream& out) {
    require_format(c, false);
    duality::SquareOptions opt;
    opt.s = c.s;
    opt.samples = c.samples;
    opt.seed = c.seed;
    const auto rep = duality::duality_report(c.n, opt);
    std::ostringstream t;
    t << "T*P^" << c.n - 1 << " skeleton <-> rank 2 bundles on the collar of Z_" << c.n << '\n';
    json entries = json::array();
    for (const auto& e : rep.entries) {
        t << "  L_" << e.j << " = " << e.component.classification.to_string() << "  <->  " << pair_text(e.pair) << '\n';
        entries.push_back({{"j", e.j},
                           {"component", e.component.classification.to_string()},
                           {"forced_zero", e.component.forced_zero},
                           {"pair", {e.pair.first, e.pair.second}}});
    }
    json squares = json::array();
    for (const auto& s : rep.squares) {
        t << "  square " << s.j << " -> " << s.bir_index << ": bir " << ints(s.bir_source) << " -> "
          << ints(s.bir_target) << (s.bir_forward.ok() && s.bir_backward.ok() ? " ok" : " FAILED") << ", def profile "
          << ints(s.def_profile) << (s.def_endpoint_verified ? " certified" : " uncertified") << ", "
          << (s.verdict ? "commutes" : "FAILS: " + s.first_failure) << '\n';
        squares.push_back({{"j", s.j},
                           {"s", s.s},
                           {"bir_source", s.bir_source},
                           {"bir_target", s.bir_target},
                           {"bir_index", s.bir_index},
                           {"bir_forward", verdict_json(s.bir_forward)},
                           {"bir_backward", verdict_json(s.bir_backward)},
                           {"bir_shapes_match", s.bir_shapes_match},
                           {"dual_top", {s.dual_top.first, s.dual_top.second}},
                           {"dual_bottom", {s.dual_bottom.first, s.dual_bottom.second}},
                           {"def_profile", s.def_profile},
                           {"def_endpoint_verified", s.def_endpoint_verified},
                           {"def_source", {s.def_source.first, s.def_source.second}},
                           {"verdict", s.verdict},
                           {"first_failure", s.first_failure}});
    }
    t << (rep.all_verified() ? "all squares commute" : "some squares FAIL") << '\n';
    emit(out, c, {{"n", c.n}, {"entries", entries}, {"squares", squares}, {"all_verified", rep.all_verified()}},
         t.str());
    return rep.all_verified() ? kOk : kVerificationFailed;
}

int exit_for(Errc code) {
    switch (code) {
        case Errc::InvalidInput:
        case Errc::IndexOutOfRange:
        case Errc::NotAPair:
        case Errc::ParseError:
        case Errc::Unsupported: return kUsage;
        case Errc::ClassNotGeneric:
        case Errc::BoundTooSmall:
        case Errc::WindowUnstable:
        case Errc::DegenerateSampler: return kVerificationFailed;
        default: return kComputationError;
    }
}

}  // namespace

int dispatch(const RunConfig& c, std::ostream& out) {
    const auto& s = c.subcommand;
    if (s == "skeleton") return cmd_skeleton(c, out);
    if (s == "potential") return cmd_potential(c, out);
    if (s == "resolve") return cmd_resolve(c, out);
    if (s == "fan") return cmd_fan(c, out);
    if (s == "birmap") return cmd_birmap(c, out);
    if (s == "birstep") return cmd_birstep(c, out);
    if (s == "collar") return cmd_collar(c, out);
    if (s == "splitting") return cmd_splitting(c, out);
    if (s == "moduli-dim") return cmd_moduli(c, out);
    if (s == "ext1") return cmd_ext1(c, out);
    if (s == "deform") return cmd_deform(c, out);
    if (s == "duality") return cmd_duality(c, out);
    throw Error(Errc::InvalidInput, "unknown subcommand " + s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    c.seed = birmaps::default_seed();
    CLI::App app{"Skeleta of T*P^n, toric resolutions and bundles on collars of Z_n", "skelcollar"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json", "svg"};

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "text, json or svg")->check(CLI::IsMember(formats));
        sub->add_option("--output,-o", c.output, "write the report to a file");
        sub->add_option("--seed", c.seed, "sampler seed (default 1 or SKELCOLLAR_SEED)");
        sub->add_option("--samples", c.samples, "sample points per round trip")->check(CLI::PositiveNumber);
        sub->add_option("--cutoff", c.cutoff, "ext1 window cutoff")->check(CLI::NonNegativeNumber);
    };

    auto* skel = app.add_subcommand("skeleton", "Lagrangian skeleton of T*P^n");
    skel->add_option("--n", c.n)->required();
    skel->add_option("--weights", c.weights)->delimiter(',');
    auto* pot = app.add_subcommand("potential", "Hamiltonian potential of the torus action");
    pot->add_option("--n", c.n)->required();
    pot->add_option("--weights", c.weights)->delimiter(',');
    pot->add_option("--kappa", c.kappa);
    auto* res = app.add_subcommand("resolve", "minimal resolution of 1/n(1,a)");
    res->add_option("--n", c.n)->required();
    res->add_option("--a", c.a);
    auto* fan = app.add_subcommand("fan", "cone of 1/n(1,a) and its dual");
    fan->add_option("--n", c.n)->required();
    fan->add_option("--a", c.a);
    auto* bm = app.add_subcommand("birmap", "P^a x P^b to P^(a+b) through the Segre embedding");
    bm->add_option("--a", c.a)->required();
    bm->add_option("--b", c.b)->required();
    auto* bs = app.add_subcommand("birstep", "birational step between consecutive skeleton components");
    bs->add_option("--n", c.n)->required();
    bs->add_option("--j", c.j)->required();
    auto* col = app.add_subcommand("collar", "line bundles and isomorphisms on the collar");
    col->add_option("mode", c.mode, "pic or iso")->required()->check(CLI::IsMember({"pic", "iso"}));
    col->add_option("--n", c.n)->required();
    col->add_option("--j1", c.j1);
    col->add_option("--j2", c.j2);
    col->add_option("--rank", c.rank);
    col->add_option("--bound", c.bound);
    auto* sp = app.add_subcommand("splitting", "splitting type of a rank 2 transition matrix");
    sp->add_option("--matrix", c.matrix_path)->required();
    sp->add_option("--n", c.n);
    auto* md = app.add_subcommand("moduli-dim", "dimension 2j - n - 2 of the moduli space");
    md->add_option("--n", c.n)->required();
    md->add_option("--j", c.j)->required();
    auto* ext = app.add_subcommand("ext1", "monomial basis of Ext^1(O(j), O(-j)) on Z_n");
    ext->add_option("--n", c.n)->required();
    ext->add_option("--j", c.j)->required();
    auto* def = app.add_subcommand("deform", "deformation family from splitting type j+s to j");
    def->add_option("--n", c.n)->required();
    def->add_option("--j", c.j)->required();
    def->add_option("--s", c.s);
    def->add_option("--taus", c.taus)->delimiter(',');
    def->add_option("--coeffs", c.coeffs, "class coordinates on the ext1 basis")->delimiter(',');
    auto* dual = app.add_subcommand("duality", "index correspondence and commuting squares");
    dual->add_option("--n", c.n)->required();
    dual->add_option("--s", c.s, "inclusion step of the def arrow");
    for (auto* sub : {skel, pot, res, fan, bm, bs, col, sp, md, ext, def, dual}) common(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    try {
        if (c.output.empty()) return dispatch(c, out);
        std::ostringstream buffer;
        const int code = dispatch(c, buffer);
        std::ofstream file(c.output);
        if (!file) throw Error(Errc::InvalidInput, "cannot write " + c.output);
        file << buffer.str();
        return code;
    } catch (const Error& e) {
        err << "skelcollar: " << e.what() << '\n';
        return exit_for(e.code());
    } catch (const std::exception& e) {
        err << "skelcollar: " << e.what() << '\n';
        return kComputationError;
    }
}

}  // namespace skelcollar::cli
