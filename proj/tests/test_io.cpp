#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "toric/corpus.hpp"
#include "toric/io.hpp"

using namespace toric;

namespace {

const std::filesystem::path kCorpus = TORIC_CORPUS_DIR;

json parse_str(const std::string& s) { return json::parse(s); }

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary);
  out << body;
  return p;
}

}  // namespace

TEST_CASE("integer and rational JSON round trips") {
  CHECK(int_from_json(json(42)) == 42);
  CHECK(int_from_json(json(-7)) == -7);
  CHECK(int_from_json(json("123456789012345678901234567890")) ==
        Int("123456789012345678901234567890"));
  CHECK(int_to_json(Int("123456789012345678901234567890")).is_string());
  CHECK(int_to_json(Int(5)) == json(5));
  CHECK_THROWS_AS((void)int_from_json(json(1.5)), InputError);
  CHECK_THROWS_AS((void)int_from_json(json("abc")), InputError);

  Rat r = rat_from_json(parse_str("[2, 10]"));
  CHECK(r == Rat(1, 5));
  CHECK(rat_to_json(r) == parse_str("[1, 5]"));
  CHECK_THROWS_AS((void)rat_from_json(parse_str("[1, 0]")), InputError);
  CHECK_THROWS_AS((void)rat_from_json(parse_str("[1]")), InputError);
}

TEST_CASE("fan documents") {
  SUBCASE("document round trip is identity after a re-parse") {
    for (const char* name :
         {"p2.fan", "p1xp1.fan", "example2.fan", "example3.fan", "example4_p5.fan"}) {
      json j = load_json_file(kCorpus / name);
      FanDocument doc = parse_fan_document(j);
      FanDocument again = parse_fan_document(to_json(doc));
      CHECK(doc == again);
    }
  }
  SUBCASE("corpus files match the programmatic builders") {
    auto check = [](const char* file, const Fan& expected) {
      Fan loaded = build_fan(parse_fan_document(load_json_file(kCorpus / file)));
      CHECK(loaded == expected);
    };
    check("p2.fan", corpus::projective_space(2));
    check("p3.fan", corpus::projective_space(3));
    check("p4.fan", corpus::projective_space(4));
    check("p1xp1.fan", corpus::p1xp1());
    check("example2.fan", corpus::example2());
    check("example3.fan", corpus::example3());
    check("example4_p3.fan", corpus::example4(3));
    check("example4_p5.fan", corpus::example4(5));
    check("example4_p7.fan", corpus::example4(7));
  }
  SUBCASE("field validation") {
    CHECK_THROWS_AS((void)parse_fan_document(parse_str("{}")), InputError);
    CHECK_THROWS_AS((void)parse_fan_document(parse_str(
                        R"({"lattice_rank": 2, "rays": [[1,0],[0,1]],
                            "max_cones": [[0,5]]})")),
                    InputError);
    CHECK_THROWS_AS((void)parse_fan_document(parse_str(
                        R"({"lattice_rank": 2, "rays": [[1,0,0]],
                            "max_cones": [[0]]})")),
                    InputError);
    CHECK_THROWS_AS((void)parse_fan_document(parse_str(
                        R"({"lattice_rank": 2, "rays": [[0.5,1]],
                            "max_cones": [[0]]})")),
                    InputError);
  }
}

TEST_CASE("spec documents") {
  SUBCASE("weight form round trip") {
    SpecDocument doc = parse_spec_document(
        parse_str(R"({"weights": [1,1,2,3], "degrees": [6]})"));
    CHECK(doc.weight_form());
    CHECK(parse_spec_document(to_json(doc)) == doc);
    CiSpec spec = build_ci_spec(doc, kCorpus);
    CHECK(spec.weight_form());
    CHECK(spec.ci_dim() == 2);
  }
  SUBCASE("fan-reference form resolves against the corpus directory") {
    SpecDocument doc = parse_spec_document(parse_str(
        R"({"fan": "p1xp1.fan",
            "degree_classes": [{"witness": [1,0,1,0], "free": [1,1]}]})"));
    CHECK_FALSE(doc.weight_form());
    CHECK(parse_spec_document(to_json(doc)) == doc);
    CiSpec spec = build_ci_spec(doc, kCorpus);
    CHECK(spec.ci_dim() == 1);
    CHECK(spec.fan_degrees[0].cls.free_part == std::vector<Int>{1, 1});
  }
  SUBCASE("declared class parts are cross-checked") {
    SpecDocument doc = parse_spec_document(parse_str(
        R"({"fan": "p1xp1.fan",
            "degree_classes": [{"witness": [1,0,1,0], "free": [2,1]}]})"));
    CHECK_THROWS_AS((void)build_ci_spec(doc, kCorpus), InputError);
  }
  SUBCASE("exactly one ambient form") {
    CHECK_THROWS_AS((void)parse_spec_document(parse_str(
                        R"({"weights": [1,1], "fan": "p2.fan"})")),
                    InputError);
    CHECK_THROWS_AS((void)parse_spec_document(parse_str(R"({"degrees": [2]})")),
                    InputError);
  }
}

TEST_CASE("parse errors carry line and column") {
  auto p = write_temp("toric_bad.json", "{\n  \"lattice_rank\": 2,\n  oops\n}\n");
  try {
    (void)load_json_file(p);
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS((void)load_json_file(kCorpus / "does_not_exist.fan"), InputError);
}

TEST_CASE("file digests are stable and content-sensitive") {
  auto a = write_temp("toric_digest_a.json", "{\"x\": 1}");
  auto b = write_temp("toric_digest_b.json", "{\"x\": 2}");
  CHECK(file_digest(a) == file_digest(a));
  CHECK(file_digest(a) != file_digest(b));
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

TEST_CASE("verdict serialization is complete and deterministic") {
  SpecDocument doc = parse_spec_document(
      parse_str(R"({"weights": [1,1,1,1], "degrees": [6]})"));
  CiSpec spec = build_ci_spec(doc, kCorpus);
  TheoremVerdict v = theorem_verdict(spec);
  json j1 = verdict_to_json(v);
  json j2 = verdict_to_json(theorem_verdict(spec));
  CHECK(j1.dump() == j2.dump());
  CHECK(j1["conclusion"] == "hypotheses_not_met");
  CHECK(j1["flags"]["fano"] == "no");
  CHECK(j1["fano_index"] == -2);
}
