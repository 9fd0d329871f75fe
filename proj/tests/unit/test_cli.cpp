#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "swaprobust/cli.hpp"
#include "swaprobust/labeling_io.hpp"

using namespace swaprobust;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "swaprobust");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "swaprobust_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

}  // namespace

TEST_CASE("construct then verify") {
    auto path = tmp("t16.json");
    CHECK(run({"construct", "t8q", "--q", "2", "--out", path}).code == 0);
    auto v = run({"verify", path, "--astray", "--b", "1"});
    CHECK(v.code == 0);
    CHECK(v.out.find("PASS") != std::string::npos);
    CHECK(run({"verify", path, "--astray", "--b", "0"}).code == 1);
    CHECK(run({"verify", path, "--alpha-max", "3"}).code == 1);
    auto j = run({"verify", path, "--p", "1", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["type_witness"]["claimed"]["certified"].get<bool>());
}

TEST_CASE("exit codes") {
    auto path = tmp("t16b.json");
    REQUIRE(run({"construct", "t8q", "--q", "2", "--out", path}).code == 0);
    auto e = run({"exact", path, "--p", "1"});
    CHECK(e.code == 3);
    CHECK(e.err.find("--cap") != std::string::npos);
    CHECK(run({"exact", path, "--p", "1", "--cap", "120", "--out", tmp("ex.json")}).code == 0);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"attack"}).code == 2);
    CHECK(run({"verify", tmp("missing.json")}).code == 2);
    CHECK(run({"construct", "nope"}).code == 2);
}

TEST_CASE("attack report respects theorem lower bound") {
    auto path = tmp("t16c.json");
    REQUIRE(run({"construct", "t8q", "--q", "2", "--out", path}).code == 0);
    auto a = run({"attack", path, "--p", "1"});
    REQUIRE(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["attack"]["discrepancy"].get<long>() >= j["theorem_lower"].get<long>());
}

TEST_CASE("recursive constructions via files round trip") {
    auto t16 = tmp("r16.json"), t18 = tmp("r18.json"), t17 = tmp("r17.json"), t32 = tmp("r32.json");
    REQUIRE(run({"construct", "t8q", "--q", "2", "--out", t16}).code == 0);
    REQUIRE(run({"construct", "extend-even", "--in", t16, "--plan", "tchain", "--out", t18}).code == 0);
    CHECK(run({"verify", t18, "--astray", "--b", "3"}).code == 0);
    REQUIRE(run({"construct", "extend-odd", "--in", t16, "--out", t17}).code == 0);
    CHECK(run({"verify", t17, "--alpha-max", "119"}).code == 0);
    REQUIRE(run({"construct", "double", "--in", t16, "--out", t32}).code == 0);
    CHECK(run({"verify", t32, "--astray"}).code == 0);
    auto pl = tmp("p66.json");
    REQUIRE(run({"construct", "pipeline", "--n", "66", "--s", "2", "--out", pl}).code == 0);
    CHECK(run({"verify", pl, "--astray", "--b", "3"}).code == 0);
}

TEST_CASE("square, sweep and simulate outputs") {
    auto sq = run({"square", "weaving", "--q", "1"});
    CHECK(sq.code == 0);
    CHECK(sq.out == "1,6,11,16\n7,4,13,10\n12,15,2,5\n14,9,8,3\n");
    auto sw = run({"sweep", "--family", "factorial", "--params", "1,2", "--p-rule", "const:1", "--exact"});
    CHECK(sw.code == 0);
    CHECK(sw.out.rfind("n,p,alpha,attack_lb,exact,upper,ratio_lb,ratio_exact,seconds\n", 0) == 0);
    auto sim = run({"simulate", "--construct", "t8q", "--param", "2", "--p", "1", "--epochs", "5", "--seed", "3"});
    CHECK(sim.code == 0);
    CHECK(sim.out == run({"simulate", "--construct", "t8q", "--param", "2", "--p", "1", "--epochs", "5", "--seed", "3"}).out);
}

#ifdef SWAPROBUST_CLI_PATH
TEST_CASE("installed binary exit code on bad flags") {
    std::string cmd = std::string(SWAPROBUST_CLI_PATH) + " construct t8q --q notanumber > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 2);
}
#endif
