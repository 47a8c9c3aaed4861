#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "knotlike/cli.hpp"
#include "knotlike/complex_io.hpp"
#include "support.hpp"

using namespace knotlike;
using knotlike::testing::fixture_path;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("knotlike_cli_" + name)).string();
}

}  // namespace

TEST_CASE("validate") {
  const Result r = call({"validate", fixture_path("fig1.cx")});
  CHECK(r.status == 0);
  CHECK(r.out == "valid: 5 generators, 4 differential entries\nreduced: yes\nknot-like: yes, shift (0, 0)\n");

  const Result shifted = call({"validate", fixture_path("fig2_shifted.cx")});
  CHECK(shifted.out.find("knot-like: yes, shift (-3, 5)") != std::string::npos);

  const Result two = call({"validate", fixture_path("two_towers.cx")});
  CHECK(two.status == 0);
  CHECK(two.out.find("knot-like: no") != std::string::npos);

  const Result bad = call({"validate", fixture_path("unknown_target.cx")});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("std, reduce, dual and tensor") {
  CHECK(call({"std", "1,-1"}).out == "gen x0 0 -2\ngen x1 -1 -1\ngen x2 -2 0\nd x1 = U^1 x0 + V^1 x2\n");
  CHECK(call({"std", "-1,1"}).status == 0);
  CHECK(call({"std", ""}).out == "gen x0 0 0\n");
  CHECK(call({"std", "1"}).status == 1);

  const Result red = call({"reduce", fixture_path("acyclic_pair.cx")});
  CHECK(red.out == "gen c 0 0\n");

  const Result d = call({"dual", fixture_path("unit.cx")});
  CHECK(d.out == "gen a* 0 0\n");

  const std::string out_file = temp_path("tensor.cx");
  CHECK(call({"tensor", fixture_path("fig1.cx"), fixture_path("unit.cx"), "-o", out_file}).status == 0);
  CHECK(parse_complex_file(read_text_file(out_file)).size() == 5);
  std::filesystem::remove(out_file);
}

TEST_CASE("rep and inv") {
  CHECK(call({"rep", fixture_path("fig1.cx")}).out == "[1,-2,2,-1]\n");
  CHECK(call({"rep", fixture_path("fig2_shifted.cx")}).out == "[]\n");
  CHECK(call({"rep", "--expr", "T(2,3) + T(2,3)"}).out == "[1,-1,1,-1]\n");

  const Result traced = call({"rep", "--expr", "T(2,3)", "--trace"});
  CHECK(traced.out.find("a1:") != std::string::npos);

  const Result inv = call({"inv", "--expr", "T(3,4)", "--json"});
  REQUIRE(inv.status == 0);
  const auto j = nlohmann::json::parse(inv.out);
  CHECK(j["rep"] == nlohmann::json::array({1, -2, 2, -1}));
  CHECK(j["phi"]["1"] == 1);
  CHECK(j["phi"]["2"] == 1);
  CHECK(j["tau"] == 3);
  CHECK(j["P"] == -6);
  CHECK(j["N"] == 2);
  CHECK(j["gc_lower"] == 1);
  CHECK(j["uc_lower"] == 2);
  CHECK(j["symmetric"] == true);
  CHECK(inv.out.find("{\"rep\":") == 0);

  const Result text = call({"inv", fixture_path("fig1.cx")});
  CHECK(text.out ==
        "rep: [1,-2,2,-1]\nphi: {1: 1, 2: 1}\ntau: 3\nP: -6\nN: 2\ngc_lower: 1\nuc_lower: 2\nsymmetric: true\n");

  const Result odd = call({"inv", "--expr", "Std(3,-1,1,-3)", "--json"});
  CHECK(nlohmann::json::parse(odd.out)["gc_lower"] == 1.5);
}

TEST_CASE("inv on a recipe matches inv on its materialized tensor") {
  const std::string file = temp_path("sum.cx");
  {
    std::ofstream f(file);
    f << call({"tensor", fixture_path("fig1.cx"), fixture_path("fig1.cx")}).out;
  }
  CHECK(call({"inv", file, "--json"}).out == call({"inv", "--expr", "2*T(3,4)", "--json"}).out);
  std::filesystem::remove(file);
}

TEST_CASE("cmp, shift, alex and lspace") {
  CHECK(call({"cmp", fixture_path("unit.cx"), fixture_path("fig1.cx")}).out == "<\n");
  CHECK(call({"cmp", fixture_path("fig2.cx"), fixture_path("unit.cx")}).out == "~\n");
  CHECK(call({"cmp", fixture_path("fig1.cx"), fixture_path("fig2_shifted.cx")}).out == ">\n");
  CHECK(call({"shift", "2", "1,-3,3,-1"}).out == "[1,-4,4,-1]\n");
  CHECK(call({"shift", "1", "2,-2", "--u"}).out == "[3,-2]\n");
  CHECK(call({"shift", "1", "2,-2", "--u", "--v"}).status == 2);
  CHECK(call({"alex", "torus", "3", "4"}).out == "t^6-t^5+t^3-t+1\n");
  CHECK(call({"alex", "torus", "2", "4"}).status == 1);
  CHECK(call({"alex", "cable", "2", "5", "t^2-t+1"}).out == "t^8-t^7+t^4-t+1\n");
  CHECK(call({"lspace", "t^8-t^7+t^4-t+1"}).out == "c: [1,3]\nrep: [1,-3,3,-1]\n");
  CHECK(call({"lspace", "t^2+1"}).status == 1);
}

TEST_CASE("usage errors") {
  CHECK(call({}).status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({"rep"}).status == 2);
  CHECK(call({"rep", fixture_path("fig1.cx"), "--expr", "D"}).status == 2);
  CHECK(call({"shift", "x", "1,-1"}).status == 2);
  CHECK(call({"--help"}).status == 0);
  CHECK(call({"rep", "--expr", "T(2,3"}).status == 1);
  CHECK(call({"rep", "/nonexistent.cx"}).status == 1);
}
