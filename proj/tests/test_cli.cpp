#include <catch_amalgamated.hpp>

#include "partot/cli.hpp"
#include "partot/errors.hpp"
#include "partot/json_io.hpp"
#include "support/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace partot;
using namespace partot::testing;
using partot::cli::Json;

namespace {

struct Result {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "partot");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PARTOT_DATA_DIR) + "/" + name; }

std::string scratch(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("partot_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

} // namespace

TEST_CASE("poset command examples", "[cli]") {
    auto r = invoke({"poset", "--subset-size", "4", "--max-card", "2", "wedge-check"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["degree"] == 1);
    CHECK(j["rank"] == 3);
    CHECK(j["free"] == true);
    CHECK(j.contains("weakenings"));

    r = invoke({"poset", "--subspace", "q=2", "n=3", "--max-dim", "2", "wedge-check"});
    REQUIRE(r.code == 0);
    j = r.json();
    CHECK(j["degree"] == 1);
    CHECK(j["rank"] == 8);
    CHECK(j["free"] == true);

    r = invoke({"poset", "--subset-size", "5", "--min-card", "3", "dim"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["dim"] == 2);

    r = invoke({"poset", "--subset-size", "3"});
    REQUIRE(r.code == 0);
    // P({0,1,2}) has a maximum, so its order complex is a cone.
    for (const auto& [k, g] : r.json()["reduced_homology"].items()) CHECK(g == "0");

    r = invoke({"poset", "homology", scratch("poset.json", R"({"q": 2, "n": 2, "max_dim": 1})")});
    REQUIRE(r.code == 0);
    CHECK(r.json()["reduced_homology"]["0"] == "Z^2");
}

TEST_CASE("deloop command examples", "[cli]") {
    auto r = invoke({"deloop", "--tot", "2", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["bound"] == 3);
    CHECK(r.json()["valid"] == true);

    r = invoke({"deloop", "--tot", "1", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["valid"] == false);
    CHECK(!r.json().contains("bound"));

    r = invoke({"deloop", "--subset", "4", "2"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["p"] == 2);
    CHECK(j["complement_dim"] == 1);
    CHECK(j["d_max"] == 1);
    CHECK(j["pointwise"].size() == 15);

    r = invoke({"deloop", "--subspace", "q=2", "n=3", "r=2"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["d_max"] == 2);
    CHECK(r.json()["complement_dim"] == 0);

    r = invoke({"deloop", data("inclusion.json")});
    REQUIRE(r.code == 0);
    CHECK(r.json()["p"] == 2);
    CHECK(r.json()["d_max"] == 2);
}

TEST_CASE("cover command", "[cli]") {
    auto r = invoke({"cover", "--r", "1", data("suspension_cover.json")});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["acyclic_ok"] == true);
    CHECK(j["connectivity_ok"] == true);
    CHECK(j["hocolim_matches"] == true);
    CHECK(j["reduced_homology"]["2"] == "Z");
    CHECK(!j["weakenings"].empty());

    // Two arcs meeting in two points are not 2-acyclic; the report is still printed.
    r = invoke({"cover", "--r", "2", data("open_cover.json")});
    CHECK(r.code == 4);
    j = r.json();
    CHECK(j["acyclic_ok"] == false);
    CHECK(j["hocolim_matches"] == true);
    REQUIRE(j["precondition_failures"].size() == 1);
    CHECK(j["precondition_failures"][0]["pieces"] == Json::array({1, 2}));
}

TEST_CASE("tot and ss commands", "[cli]") {
    auto r = invoke({"tot", "--fiber", "1", "2", data("cech.json")});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["identification"]["matches"] == true);
    CHECK(j["fiber"]["homology"]["-2"] == "Z^2");

    r = invoke({"tot", data("cech.json")});
    REQUIRE(r.code == 0);
    CHECK(r.json()["stages"].size() == 3);
    CHECK(r.json()["stages"][0]["homology"]["0"] == "Z^2");

    r = invoke({"tot", "--tot", "2", data("constant.json")});
    REQUIRE(r.code == 0);
    CHECK(r.json()["tot"]["homology"]["0"] == "Z");

    r = invoke({"ss", "--pages", "3", data("constant.json")});
    REQUIRE(r.code == 0);
    j = r.json();
    CHECK(j["E2"] == Json{{"0,0", "Z"}});
    CHECK(j["converges"] == true);
    CHECK(j["e2_matches_levelwise_homology"] == true);

    r = invoke({"ss", "--fringe", "0", data("cech.json")});
    REQUIRE(r.code == 0);
    CHECK(r.json().contains("fringe"));
}

TEST_CASE("reports are byte-identical across runs", "[cli]") {
    const std::vector<std::string> args{"ss", "--pages", "3", data("cech.json")};
    const auto a = invoke(args), b = invoke(args);
    CHECK(a.out == b.out);
    const auto path = (std::filesystem::temp_directory_path() / "partot_test_report.json").string();
    auto with_output = args;
    with_output.insert(with_output.begin() + 1, {"--output", path});
    REQUIRE(invoke(with_output).code == 0);
    std::ifstream in(path);
    std::stringstream written;
    written << in.rdbuf();
    CHECK(written.str() == a.out);
}

TEST_CASE("exit codes", "[cli]") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"nope"}).code == 2);
    CHECK(invoke({"deloop"}).code == 2);
    CHECK(invoke({"homology", "/nonexistent/file.json"}).code == 2);
    CHECK(invoke({"homology", scratch("bad.json", "{\"facets\": 3}")}).code == 2);
    CHECK(invoke({"homology", scratch("garbage.json", "not json")}).code == 2);
    CHECK(invoke({"tot", "--fiber", "2", "1", data("cech.json")}).code == 2);
    CHECK(invoke({"ss", "--pages", "0", data("cech.json")}).code == 2);
    CHECK(invoke({"poset", "--subspace", "q=4", "n=2", "dim"}).code == 2);

    auto v = invoke({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(cli::kVersion) != std::string::npos);

    // A cofaces matrix that breaks d^1 d^0 = d^0 d^0.
    auto broken = json_io::to_json(cech_object(2, 2));
    broken["cofaces"][0][0][0][0][0] = 0;
    const auto path = scratch("broken.json", broken.dump());
    auto r = invoke({"tot", path});
    CHECK(r.code == 4);
    CHECK(r.err.find("d^") != std::string::npos);
}

TEST_CASE("cosimplicial JSON round trip", "[cli][property]") {
    for (const auto& x : cosimplicial_corpus(8, 77)) {
        const auto j = json_io::to_json(x);
        CHECK(json_io::cosimplicial_from_json(Json::parse(j.dump()), "x") == x);
    }
    const auto k = complex_from_facets({{0, 1, 2}, {Label("a"), 2}}, Label("a"));
    CHECK(json_io::complex_from_json(json_io::to_json(k), "k") == k);
}
