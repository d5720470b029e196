#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "treewreath/io.hpp"
#include "treewreath/verify.hpp"

using namespace treewreath;
using testing::error_kind;

namespace {

std::string data_file(const char* name) { return std::string(TREEWREATH_DATA_DIR) + "/" + name; }

std::optional<ErrorKind> parse_kind(std::string_view text) {
  return error_kind([&] { parse_instance_text(text); });
}

}  // namespace

TEST_CASE("shipped instances match the reference instances") {
  const std::pair<const char*, char> files[] = {
      {"instance_a.json", 'A'}, {"instance_b.json", 'B'}, {"instance_c.json", 'C'}};
  for (const auto& [file, which] : files) {
    const Instance loaded = load_instance(data_file(file));
    const Instance ref = reference_instance(which);
    CHECK(loaded.degree() == ref.degree());
    CHECK(loaded.f() == ref.f());
    CHECK(loaded.fp() == ref.fp());
    CHECK(loaded.n() == ref.n());
    CHECK(instance_json(loaded) == instance_json(ref));
  }
}

TEST_CASE("instance parse errors") {
  CHECK(parse_kind("{") == ErrorKind::kParse);
  CHECK(parse_kind("[]") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"F":[[1,2,0]],"Fprime":[],"base_color":0})") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"d":"3","F":[[1,2,0]],"Fprime":[],"base_color":0})") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"d":3,"F":[[1,2,0]],"base_color":0})") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"d":3,"F":[1,2,0],"Fprime":[],"base_color":0})") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"d":3,"F":[[1,2,"x"]],"Fprime":[],"base_color":0})") == ErrorKind::kParse);
  CHECK(parse_kind(R"({"d":3,"F":[[1,1,0]],"Fprime":[[1,0,2]],"base_color":0})") ==
        ErrorKind::kMalformedPermutation);
  CHECK(parse_kind(R"({"d":3,"F":[[1,2,0],[1,0,2]],"Fprime":[[1,0,2],[1,2,0]],"base_color":0})") ==
        ErrorKind::kEqualGroups);
  CHECK(parse_kind(R"({"d":3,"F":[[1,2,0]],"Fprime":[[1,2,0],[1,0,2]],"base_color":5})") == ErrorKind::kDomain);
  CHECK(parse_kind(R"({"d":2,"F":[],"Fprime":[[1,0]],"base_color":0})") == ErrorKind::kDomain);
  CHECK(error_kind([] { load_instance(data_file("no_such_file.json")); }) == ErrorKind::kParse);
  CHECK_FALSE(parse_kind(R"({"d":3,"F":[[1,2,0]],"Fprime":[[1,2,0],[1,0,2]],"base_color":1})").has_value());
}

TEST_CASE("instance_json") {
  const auto j = instance_json(reference_instance('A'));
  CHECK(j["d"] == 3);
  CHECK(j["n"] == 2);
  CHECK(j["F"]["order"] == 3);
  CHECK(j["F"]["regular"] == true);
  CHECK(j["Fprime"]["order"] == 6);
  CHECK(j["Fprime_base_order"] == 2);
  CHECK(j["generators"].size() == 6);
  CHECK(j["generators"][0]["name"] == "g0.s0");
  CHECK(j["generators"][0]["sigma"] == "(1 2)");
  CHECK(j["generators"][0]["type"] == 2);
  CHECK(j["generators"][1]["type"] == 1);
  CHECK(instance_json(reference_instance('A')).dump() == j.dump());
}

TEST_CASE("words round-trip") {
  const Instance inst = reference_instance('B');
  CHECK(word_str(inst, Element{}) == "1");
  CHECK(parse_word(inst, "1").length() == 0);
  const Element g = parse_word(inst, "g0.s1 g1.s0^-1 g1.s3");
  CHECK(g.length() == 3);
  const std::string s = word_str(inst, g);
  CHECK(parse_word(inst, s).length() == 3);
  CHECK(word_str(inst, parse_word(inst, s)) == s);
  CHECK(equal(inst, parse_word(inst, s), g));
  CHECK(equal(inst, parse_word(inst, "g0.s2^-1"), invert(parse_word(inst, "g0.s2"))));

  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    const Element w = random_word(inst, rng, 6);
    CHECK(word_str(inst, parse_word(inst, word_str(inst, w))) == word_str(inst, w));
  }
  CHECK(error_kind([&] { parse_word(inst, "g0.s9"); }) == ErrorKind::kParse);
  CHECK(error_kind([&] { parse_word(inst, "g0"); }) == ErrorKind::kParse);
  CHECK(error_kind([&] { parse_word(inst, "g0.s1x"); }) == ErrorKind::kParse);
  CHECK(error_kind([&] { parse_word(inst, "g2.s1"); }) == ErrorKind::kDomain);
}

TEST_CASE("configuration and vertex text") {
  const LampConfig c = LampConfig::parse("2:1,e:1");
  CHECK(c.str() == "e:1,2:1");
  CHECK(LampConfig::parse("").empty());
  CHECK(LampConfig::parse("1:0").empty());
  const XVertex x = XVertex::parse("e:1,01:1|0:2");
  CHECK(x.str() == "e:1,01:1|0:2");
  CHECK(x.edge == EdgeRef{Vertex::parse("0"), 2});
  CHECK(XVertex::parse("|e:0") == XVertex{LampConfig{}, EdgeRef{Vertex{}, 0}});
  CHECK(error_kind([] { LampConfig::parse("1"); }).has_value());
  CHECK(error_kind([] { XVertex::parse("e:1"); }).has_value());
}

TEST_CASE("report json") {
  SuiteParams p;
  p.radius = 2;
  const Report r = run_suite("cocycle", p);
  const auto j = r.json();
  CHECK(j["suite"] == "cocycle");
  CHECK(j["params"]["radius"] == 2);
  CHECK(j["overall"] == r.overall());
  REQUIRE(j["checks"].size() == r.checks.size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    CHECK(j["checks"][i]["name"] == r.checks[i].name);
    CHECK(j["checks"][i]["pass"] == r.checks[i].pass);
  }
  CHECK(r.json().dump() == run_suite("cocycle", p).json().dump());
  CHECK(error_kind([] { run_suite("nonsense", SuiteParams{}); }) == ErrorKind::kUnknownSuite);
  CHECK(suite_names().size() == 9);
}

TEST_CASE("reduction and truncation json") {
  const Instance inst = reference_instance('A');
  const XVertex x = XVertex::parse("0:1|e:0");
  const auto j = reduction_json(x, reduce_to_zero(inst, x));
  CHECK(j["start"] == "0:1|e:0");
  REQUIRE(j["steps"].size() == 1);
  CHECK(j["steps"][0]["vertex"] == "0");
  CHECK(j["steps"][0]["sigma"] == "(1 2)");
  CHECK(j["steps"][0]["support"] == 0);
  CHECK(j["final"] == "|e:0");

  const Element h = parse_word(inst, "g0.s0");
  const auto t = truncation_json(embed(inst, h, 1), inst);
  CHECK(t["center"] == "e");
  CHECK(t["complete"] == true);
  CHECK(t["assignments"].size() == 1);
  CHECK(t["gamma"] == "g0.s0");

  const GammaGroup g(2, 3);
  const auto gj = gamma_json(gamma_generators(g).front());
  CHECK(gj["word"] == "1");
  CHECK(gj["lamp"].size() == 1);
}

TEST_CASE("parse_group") {
  CHECK(parse_group(nlohmann::json::parse("[]"), 4).order() == 1);
  CHECK(parse_group(nlohmann::json::parse("[]"), 4).degree() == 4);
  CHECK(parse_group(nlohmann::json::parse("[[1,2,3,0]]"), 0).order() == 4);
  CHECK(error_kind([] { parse_group(nlohmann::json::parse("[[1,2],[0]]"), 2); }).has_value());
  CHECK(error_kind([] { parse_group(nlohmann::json::parse("{}"), 2); }) == ErrorKind::kParse);
}
