#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ringauto/basic.hpp"
#include "ringauto/cli.hpp"
#include "ringauto/fixedring.hpp"

using namespace ringauto;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("classes: json is bit-exact and round-trips") {
    const auto r = run_cli({"classes", "--modulus", "9", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "{\"modulus\":9,\"group_order\":54,\"count\":10,\"classes\":"
          "[{\"u\":1,\"a\":1,\"size\":6},{\"u\":1,\"a\":3,\"size\":2},"
          "{\"u\":1,\"a\":9,\"size\":1},{\"u\":2,\"a\":1,\"size\":9},"
          "{\"u\":4,\"a\":1,\"size\":6},{\"u\":4,\"a\":3,\"size\":3},"
          "{\"u\":5,\"a\":1,\"size\":9},{\"u\":7,\"a\":1,\"size\":6},"
          "{\"u\":7,\"a\":3,\"size\":3},{\"u\":8,\"a\":1,\"size\":9}]}\n");

    const auto parsed = nlohmann::json::parse(r.out);
    const auto classes = enumerate_classes(Modulus(9));
    REQUIRE(parsed["classes"].size() == classes.size());
    CHECK(parsed["count"].get<std::size_t>() == classes.size());
    CHECK(parsed["group_order"].get<std::uint64_t>() == 54);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        CHECK(parsed["classes"][i]["u"].get<std::uint64_t>() ==
              classes[i].rep.u());
        CHECK(parsed["classes"][i]["a"].get<std::uint64_t>() ==
              classes[i].rep.a());
        CHECK(parsed["classes"][i]["size"].get<std::uint64_t>() ==
              classes[i].size);
    }
}

TEST_CASE("classes: csv") {
    const auto r = run_cli({"classes", "--modulus", "9", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "u,a,size\n"
          "1,1,6\n"
          "1,3,2\n"
          "1,9,1\n"
          "2,1,9\n"
          "4,1,6\n"
          "4,3,3\n"
          "5,1,9\n"
          "7,1,6\n"
          "7,3,3\n"
          "8,1,9\n");
}

TEST_CASE("classes: brute-force cross-check and determinism") {
    const auto a = run_cli({"classes", "--modulus", "12", "--format", "json",
                            "--check-bruteforce"});
    CHECK(a.code == 0);
    const auto b = run_cli({"classes", "--modulus", "12", "--format", "json"});
    CHECK(a.out == b.out);
}

TEST_CASE("count") {
    const auto r = run_cli({"count", "--modulus", "9"});
    CHECK(r.code == 0);
    CHECK(r.out == "10\n");
    const auto checked =
        run_cli({"count", "--modulus", "12", "--check-bruteforce"});
    CHECK(checked.code == 0);
    CHECK(checked.out == "15\n");
}

TEST_CASE("conjugate") {
    const auto yes = run_cli(
        {"conjugate", "--modulus", "9", "--first", "2,1", "--second", "2,5"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "CONJUGATE\nwitness: 1,5\n");

    const auto no = run_cli(
        {"conjugate", "--modulus", "9", "--first", "1,3", "--second", "1,1"});
    CHECK(no.code == 0);
    CHECK(no.out == "NOT_CONJUGATE\n");

    const auto nonunit = run_cli(
        {"conjugate", "--modulus", "9", "--first", "3,1", "--second", "3,2"});
    CHECK(nonunit.code == 1);
    CHECK(nonunit.err.find("error:") == 0);
}

TEST_CASE("canon") {
    const auto r = run_cli({"canon", "--modulus", "9", "--elem", "4,5"});
    CHECK(r.code == 0);
    CHECK(r.out == "4*x+1\n");
    const auto id = run_cli({"canon", "--modulus", "9", "--elem", "1,0"});
    CHECK(id.out == "1*x+9\n");
}

TEST_CASE("auto-check") {
    const auto yes =
        run_cli({"auto-check", "--modulus", "4", "--image", "[0,1,2]"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "AUTOMORPHISM\na=0 u=1 f=[2]\n");

    const auto no =
        run_cli({"auto-check", "--modulus", "4", "--image", "[0,0,1]"});
    CHECK(no.code == 0);
    CHECK(no.out == "NOT_AUTOMORPHISM\n");

    const auto relaxed =
        run_cli({"auto-check", "--modulus", "6", "--image", "[0,1,2]"});
    CHECK(relaxed.out == "NOT_AUTOMORPHISM\n");
}

TEST_CASE("invert and order") {
    const auto inv =
        run_cli({"invert", "--modulus", "9", "--image", "[0,1,3]"});
    CHECK(inv.code == 0);
    CHECK(inv.out == "[0,1,6]\n");

    const auto failed =
        run_cli({"invert", "--modulus", "4", "--image", "[0,0,1]"});
    CHECK(failed.code == 1);

    const auto ord = run_cli({"order", "--modulus", "4", "--image", "[1,1]"});
    CHECK(ord.code == 0);
    CHECK(ord.out == "4\n");

    const auto capped = run_cli(
        {"order", "--modulus", "4", "--image", "[1,1]", "--cap", "3"});
    CHECK(capped.code == 1);
}

TEST_CASE("expand") {
    const auto r = run_cli({"expand", "--modulus", "4", "--f", "[0,1,1]",
                            "--g", "[0,2,3,2,1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "[[],[2],[1]]\n");
}

TEST_CASE("fixed") {
    const auto json = run_cli({"fixed", "--modulus", "4", "--gens", "[1,3]",
                               "--degree", "6", "--format", "json"});
    REQUIRE(json.code == 0);
    CHECK(json.out ==
          "{\"modulus\":4,\"degree_bound\":6,\"basis\":"
          "[[1],[0,1,0,0,3,2,2],[0,0,1,0,3,2,2],[0,0,0,1,1,3,3]]}\n");

    const auto certified =
        run_cli({"fixed", "--modulus", "4", "--gens", "[1,3]", "--degree", "6",
                 "--work-bound", "12", "--format", "json"});
    CHECK(certified.code == 0);
    CHECK(certified.out == json.out);

    const auto table = run_cli(
        {"fixed", "--modulus", "4", "--gens", "[1,3];[2,1]", "--degree", "4"});
    CHECK(table.code == 0);
    CHECK(table.out.find("fixed module over Z_4") != std::string::npos);

    // The emitted basis re-parses into the module that produced it.
    const auto parsed = nlohmann::json::parse(json.out);
    const Modulus m(parsed["modulus"].get<std::uint64_t>());
    std::vector<Poly> basis;
    for (const auto& row : parsed["basis"])
        basis.emplace_back(row.get<std::vector<std::int64_t>>(), m);
    const auto rebuilt = CoeffModule::from_generators(
        basis, m, parsed["degree_bound"].get<std::size_t>());
    CHECK(modules_equal(rebuilt,
                        fixed_module(SubgroupSpec(m, {Endo(Poly({1, 3}, m))}),
                                     6)));
}

TEST_CASE("z4 subcommands") {
    const auto theta =
        run_cli({"z4", "identify", "--gens", "beta:[0,2]", "--degree", "6"});
    CHECK(theta.code == 0);
    CHECK(theta.out == "Y2_2Y\n");

    const auto beta0 =
        run_cli({"z4", "identify", "--gens", "beta:[]", "--degree", "6"});
    CHECK(beta0.code == 0);
    CHECK(beta0.out == "Y_PLUS_XF f=[]\n");

    const auto stab = run_cli(
        {"z4", "stabilizer", "--ring-gens", "[0,1,3]", "--pool-degree", "2"});
    CHECK(stab.code == 0);
    CHECK(stab.out ==
          "[{\"kind\":\"alpha\",\"f\":[]},{\"kind\":\"beta\",\"f\":[]}]\n");

    const auto classes = run_cli({"z4", "classes", "--pool-degree", "1"});
    REQUIRE(classes.code == 0);
    const auto parsed = nlohmann::json::parse(classes.out);
    CHECK(parsed["pool_degree"] == 1);
    CHECK(parsed["count"] == 5);
    std::size_t total = 0;
    for (const auto& c : parsed["classes"])
        total += c["size"].get<std::size_t>();
    CHECK(total == 8);
}

TEST_CASE("verify") {
    const auto r = run_cli({"verify", "--suite", "residues"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verification passed") != std::string::npos);
}

TEST_CASE("usage and domain errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"classes"}).code == 2);            // missing --modulus
    CHECK(run_cli({"classes", "--modulus", "9", "--format", "yaml"}).code == 2);
    CHECK(run_cli({"auto-check", "--modulus", "4", "--image", "0,1"}).code == 2);
    CHECK(run_cli({"auto-check", "--modulus", "4", "--image", "[0,x]"}).code ==
          2);
    CHECK(run_cli({"classes", "--modulus", "1"}).code == 1); // domain error
    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("classes") != std::string::npos);
}
