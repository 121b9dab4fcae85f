#include "skelcollar/cli.hpp"
#include "skelcollar/exact/poly_json.hpp"
#include "skelcollar/skeleton.hpp"
#include "skelcollar/toric.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace skelcollar;
using nlohmann::json;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("skeleton n = 3 text lists the four components") {
    const auto r = call({"skeleton", "--n", "3", "--format", "text"});
    REQUIRE(r.code == cli::kOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0].rfind("# skelcollar skeleton", 0) == 0);
    CHECK(ls[0].find("seed") != std::string::npos);
    CHECK(ls[0].find("cutoff") != std::string::npos);
    CHECK(ls[2] == "L_0 = C^3 : {x1 = x2 = x3 = 0}");
    CHECK(ls[3] == "L_1 = O_P^1(-1) + O_P^1(-1) : {x2 = x3 = y1 = 0}");
    CHECK(ls[4] == "L_2 = O_P^2(-1) : {x3 = y1 = y2 = 0}");
    CHECK(ls[5] == "L_3 = P^3 : {y1 = y2 = y3 = 0}");
}

TEST_CASE("resolve n = 2 json is a single -2 curve") {
    const auto r = call({"resolve", "--n", "2", "--a", "1", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("self_intersections") == json::array({-2}));
    CHECK(doc.at("intersection_matrix") == json::parse("[[-2]]"));
    CHECK(doc.at("rays").size() == 1);
    CHECK(doc.at("cone").size() == 2);
    CHECK(doc.at("header").at("command") == "resolve");
}

TEST_CASE("resolve json agrees with the library for n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        for (int a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            const auto r = call({"resolve", "--n", std::to_string(n), "--a", std::to_string(a), "--format", "json"});
            REQUIRE(r.code == cli::kOk);
            const auto doc = json::parse(r.out);
            const auto chain = toric::minimal_resolution(toric::QuotientSingularity::make(n, a));
            CHECK(doc.at("self_intersections").get<std::vector<int>>() == chain.self_intersections);
            CHECK(doc.at("rays").size() == chain.rays.size());
        }
    }
}

TEST_CASE("duality n = 6 table") {
    const auto r = call({"duality", "--n", "6"});
    CHECK(r.code == cli::kOk);
    int rows = 0;
    for (const auto& l : lines(r.out)) rows += l.rfind("  L_", 0) == 0;
    CHECK(rows == 6);
    const auto bad = call({"duality", "--n", "6", "--s", "2"});
    CHECK(bad.code == cli::kVerificationFailed);
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> configs{
        {"skeleton", "--n", "4", "--format", "json"},
        {"potential", "--n", "3", "--weights", "1,3,2"},
        {"fan", "--n", "5", "--a", "2", "--format", "svg"},
        {"birmap", "--a", "2", "--b", "1", "--samples", "30", "--seed", "7"},
        {"collar", "iso", "--n", "3", "--j1", "1", "--j2", "4"},
        {"deform", "--n", "1", "--j", "2", "--coeffs", "0,0,0,1,0,0", "--format", "json"},
        {"duality", "--n", "3", "--format", "json"},
    };
    for (const auto& args : configs) {
        const auto a = call(args);
        const auto b = call(args);
        CHECK(a.code == cli::kOk);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("json output round-trips") {
    const std::vector<std::vector<std::string>> configs{
        {"skeleton", "--n", "3", "--format", "json"},
        {"potential", "--n", "2", "--format", "json"},
        {"collar", "pic", "--n", "4", "--format", "json"},
        {"ext1", "--n", "1", "--j", "2", "--format", "json"},
        {"birstep", "--n", "3", "--j", "1", "--format", "json"},
        {"moduli-dim", "--n", "2", "--j", "1", "--format", "json"},
    };
    for (const auto& args : configs) {
        const auto r = call(args);
        REQUIRE(r.code == cli::kOk);
        const auto doc = json::parse(r.out);
        CHECK(json::parse(doc.dump()) == doc);
        CHECK(doc.at("header").at("seed") == 1);
    }
    const auto skel = json::parse(call({"skeleton", "--n", "3", "--format", "json"}).out);
    const auto comps = skeleton::skeleton(3);
    REQUIRE(skel.at("components").size() == comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& eqs = skel.at("components")[i].at("equations");
        const auto expected = comps[i].equations();
        REQUIRE(eqs.size() == expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) CHECK(exact::poly_from_json(eqs[k]) == expected[k]);
    }
    const auto pot = json::parse(call({"potential", "--n", "2", "--format", "json"}).out);
    CHECK(exact::poly_from_json(pot.at("residual")).is_zero());
    CHECK(exact::poly_to_json(exact::poly_from_json(pot.at("potential"))) == pot.at("potential"));
}

TEST_CASE("header reports the seed override") {
    const auto r = call({"birmap", "--a", "1", "--b", "1", "--seed", "42", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    CHECK(json::parse(r.out).at("header").at("seed") == 42);
    const auto t = call({"ext1", "--n", "2", "--j", "3", "--cutoff", "5"});
    CHECK(lines(t.out).front().find("cutoff 5") != std::string::npos);
}

TEST_CASE("svg output for fan diagrams") {
    const auto r = call({"resolve", "--n", "5", "--a", "2", "--format", "svg"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.rfind("<?xml", 0) == 0);
    CHECK(r.out.find("<svg") != std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);
    const auto f = call({"fan", "--n", "3", "--a", "1", "--format", "svg"});
    CHECK(f.code == cli::kOk);
    CHECK(f.out.find("panel1") != std::string::npos);
    CHECK(call({"skeleton", "--n", "2", "--format", "svg"}).code == cli::kUsage);
}

TEST_CASE("usage and computation errors") {
    CHECK(call({}).code == cli::kUsage);
    CHECK(call({"bogus"}).code == cli::kUsage);
    CHECK(call({"skeleton"}).code == cli::kUsage);
    CHECK(call({"skeleton", "--n", "x"}).code == cli::kUsage);
    CHECK(call({"skeleton", "--n", "3", "--format", "xml"}).code == cli::kUsage);
    CHECK(call({"skeleton", "--n", "3", "--weights", "1,2"}).code == cli::kUsage);
    CHECK(call({"resolve", "--n", "4", "--a", "2"}).code == cli::kUsage);
    CHECK(call({"collar", "tensor", "--n", "3"}).code == cli::kUsage);
    CHECK(call({"splitting", "--matrix", "/nonexistent.json"}).code == cli::kUsage);
    const auto generic = call({"deform", "--n", "1", "--j", "1", "--coeffs", "1"});
    CHECK(generic.code == cli::kVerificationFailed);
    CHECK(generic.err.find("ClassNotGeneric") != std::string::npos);
    CHECK(call({"--help"}).code == cli::kOk);
}

TEST_CASE("splitting reads a matrix file and output files are written") {
    const std::string in = "skelcollar_test_matrix.json";
    const std::string out = "skelcollar_test_report.txt";
    {
        std::ofstream f(in);
        json m = json::array();
        const auto z = exact::LaurentPoly::variable("z");
        m.push_back({exact::poly_to_json(z.pow(3)), exact::poly_to_json(z.pow(4))});
        m.push_back({exact::poly_to_json(exact::LaurentPoly()), exact::poly_to_json(z.pow(-3))});
        f << json{{"n", 1}, {"matrix", m}}.dump();
    }
    const auto r = call({"splitting", "--matrix", in, "--format", "json", "--output", out});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.empty());
    std::ifstream f(out);
    const auto doc = json::parse(f);
    CHECK(doc.at("splitting") == json::array({3, -3}));
    std::remove(in.c_str());
    std::remove(out.c_str());
}
