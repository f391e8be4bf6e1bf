#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "sgcat/docio.hpp"

using namespace sgcat;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return std::string(SGCAT_FIXTURES) + "/" + name; }

int run(const std::string& args) {
  std::string cmd = std::string(SGCAT_BIN) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string error_of(const std::string& text) {
  try {
    load_document(text);
  } catch (const DocError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("shell") {
  TEST_CASE("generators") {
    Document z = generate("zero", {}, fx::Q());
    CHECK(z.S.n() == 2);
    Document l = generate("linear_semigroup", {{"elements", "y,0"}, {"table", "y,0;0,0"}}, fx::Q());
    CHECK(l.S.C.labels == std::vector<std::string>{"y", "0"});
    CHECK(l.S.t(0, 0) == Obj{0});
    CHECK(l.S.t(0, 1) == Obj{1});
    CHECK(generate("bimodule_proj", {{"algebra", "kxk"}}, fx::Q()).S.n() == 4);
    Document g = generate("group_proj", {{"cyclic", "3"}}, Field::prime(3));
    CHECK(g.S.n() == 1);
    CHECK(g.S.C.homdim(0, 0) == 3);
    CHECK_THROWS_AS(generate("nonsense", {}, fx::Q()), std::invalid_argument);
  }

  TEST_CASE("round trip") {
    for (auto& [name, S] : fx::rigid()) {
      CAPTURE(name);
      Document d{S, std::nullopt, {}};
      std::string a = store_document(d);
      Document e = load_document(a);
      CHECK(validate_semigroup(e.S).pass);
      CHECK(store_document(e) == a);
    }
    for (const char* f : {"bimod_dualnumbers.json", "semisimplification.json", "zero_cat.json"}) {
      std::string text = slurp(fixture(f));
      CHECK(store_document(load_document(text)) == text);
    }
  }

  TEST_CASE("positioned errors") {
    json j = json::parse(slurp(fixture("zero_cat.json")));
    json bad = j;
    bad["category"]["identity"][0][1][0] = "1/0";
    CHECK(error_of(bad.dump()).find("category.identity[0]") != std::string::npos);

    bad = j;
    bad["category"]["compose"][0][3][0][2] = json::array({"1", "0"});
    std::string e = error_of(bad.dump());
    CHECK(e.find("category.compose[0]") != std::string::npos);
    CHECK(e.find("(X,X,X)") != std::string::npos);

    bad = j;
    bad["category"]["hom"][1][1] = "W";
    CHECK(error_of(bad.dump()).find("W") != std::string::npos);

    std::string cut = j.dump().substr(0, 40);
    CHECK_FALSE(error_of(cut).empty());
  }

  TEST_CASE("command line") {
    CHECK(run("decide-tensor " + fixture("gp_z2_char2.json")) == 0);
    CHECK(run("rigid " + fixture("gp_z2_char2.json")) == 0);
    CHECK(run("rigid " + fixture("zero_cat.json")) == 1);
    CHECK(run("validate " + fixture("semisimplification.json")) == 0);
    CHECK(run("lift " + fixture("bimod_dualnumbers_zero_action.json")) == 1);
    CHECK(run("lift --regular " + fixture("gp_z2_char2.json")) == 0);
    CHECK(run("rigid --field GF3 " + fixture("gp_z2_char2.json")) == 2);
    CHECK(run("rigid /nonexistent.json") == 2);
    CHECK(run("frobnicate") == 2);
  }
}
