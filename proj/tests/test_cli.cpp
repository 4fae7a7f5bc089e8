#include "negabase/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "negabase/automaton.hpp"

using namespace negabase;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    std::vector<const char*> argv = {"negabase"};
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli((int)argv.size(), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("intconvert golden values") {
    CliResult r = cli({"intconvert", "6", "--base", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "11010\n");
    CHECK(cli({"intconvert", "3", "--base", "2"}).out == "111\n");
    CHECK(cli({"intconvert", "4", "--base", "2"}).out == "100\n");
    CHECK(cli({"intconvert", "-9", "--base", "3"}).out == "1200\n");
}

TEST_CASE("expand") {
    CliResult r = cli({"expand", "0", "--base-neg-poly", "-1,-1,1", "-n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "00000\n");
    CHECK(cli({"expand", "1/6", "--base", "2"}).out == "0(1)\n");
    CHECK(cli({"expand", "0.25", "--base", "2"}).out == "01(0)\n");
    CHECK(cli({"expand", "1/3", "--base-pos-poly", "-2,1"}).out == "(01)\n");

    CliResult bad = cli({"expand", "5", "--base", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("ValueOutOfInterval") != std::string::npos);
}

TEST_CASE("expand with a float base warns and stays approximate") {
    CliResult r = cli({"expand", "0.1", "--base-float", "1.618", "-n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.size() == 7);  // six digits and a newline
    CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("classify") {
    CHECK(cli({"classify", "--base-neg-poly", "1,-3,1"}).out ==
          "finite-type; forbidden: 20\n");
    CHECK(cli({"classify", "--base-neg-poly", "-1,-1,1"}).out ==
          "sofic; not finite type\n");
    CHECK(cli({"classify", "--base", "2"}).out ==
          "finite-type; forbidden: 02, 20, 21\n");
}

TEST_CASE("automaton output forms") {
    CliResult r = cli({"automaton", "--base-neg-poly", "-1,-1,1"});
    CHECK(r.code == 0);
    Automaton a = parse_automaton(r.out);
    CHECK(a.num_states == 2);

    CliResult dot = cli({"automaton", "--base", "2", "--dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);

    CliResult js = cli({"automaton", "--base", "2", "--json"});
    CHECK(js.code == 0);
    CHECK(js.out.find("\"states\"") != std::string::npos);

    CHECK(cli({"automaton", "--base", "2", "--dot", "--json"}).code == 2);
}

TEST_CASE("normalize") {
    CHECK(cli({"normalize", "0(01)", "--base", "2"}).out == "1(10)\n");
    CHECK(cli({"normalize", "0(01)", "--base", "2", "--alphabet-bound", "2"})
              .out == "1(10)\n");
    CliResult bad = cli({"normalize", "xyz", "--base", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("ParseError") != std::string::npos);
}

TEST_CASE("online") {
    CHECK(cli({"online", "--delay", "--base-neg-poly", "-1,-1,1"}).out ==
          "delay: 4\n");
    CHECK(cli({"online", "--delay", "--base", "2"}).out == "delay: 2\n");
    CliResult r = cli({"online", "0(01)", "--base", "2", "-n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.size() == 9);  // eight digits and a newline
}

TEST_CASE("entropy agrees with log beta and is deterministic") {
    CliResult a = cli({"entropy", "--base", "2"});
    CliResult b = cli({"entropy", "--base", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    REQUIRE(a.out.rfind("entropy: ", 0) == 0);
    size_t nl = a.out.find('\n');
    double h = std::atof(a.out.substr(9, nl - 9).c_str());
    double lb = std::atof(a.out.substr(nl + 11).c_str());
    CHECK(std::abs(h - lb) < 1e-9);

    CliResult g = cli({"entropy", "--base-neg-poly", "-1,-1,1"});
    size_t gnl = g.out.find('\n');
    double gh = std::atof(g.out.substr(9, gnl - 9).c_str());
    double glb = std::atof(g.out.substr(gnl + 11).c_str());
    CHECK(std::abs(gh - glb) < 1e-9);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli({"expand", "0"}).code == 2);  // no base given
    CHECK(cli({"expand", "0", "--base", "2", "--base-neg-poly", "-1,-1,1"})
              .code == 2);
    CHECK(cli({"intconvert", "6"}).code == 2);
    CHECK(cli({"intconvert", "6", "--base", "1"}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"expand", "abc", "--base", "2"}).code == 2);
    CHECK(cli({}).code == 2);  // a subcommand is required
}

TEST_CASE("help exits cleanly") {
    CliResult r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
}
