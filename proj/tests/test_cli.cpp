#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kBin = TORIC_WCI_BIN;
const std::string kCorpus = TORIC_CORPUS_DIR;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = kBin + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary);
  out << body;
  return p.string();
}

}  // namespace

TEST_CASE("cl subcommand") {
  RunResult r = run("cl " + kCorpus + "/example2.fan");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Z/5") != std::string::npos);
  CHECK(r.output.find("C*") != std::string::npos);
  CHECK(r.output.find("{0}") != std::string::npos);

  RunResult p2 = run("cl " + kCorpus + "/p2.fan");
  CHECK(p2.exit_code == 0);
  CHECK(p2.output.find("Cl(Y) = Z") != std::string::npos);

  SUBCASE("machine output is byte-stable") {
    RunResult a = run("--json cl " + kCorpus + "/example2.fan");
    RunResult b = run("--json cl " + kCorpus + "/example2.fan");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    auto j = nlohmann::json::parse(a.output);
    CHECK(j["class_group"]["torsion"] == nlohmann::json::array({5}));
    CHECK(j["group_d"]["connected"] == false);
    CHECK(j.contains("input_digest"));
    CHECK(j.contains("tool_version"));
  }
}

TEST_CASE("classify subcommand") {
  RunResult ex2 = run("classify " + kCorpus + "/example2.fan");
  CHECK(ex2.exit_code == 0);
  CHECK(ex2.output.find("quotient") != std::string::npos);
  CHECK(ex2.output.find("Z/5") != std::string::npos);

  RunResult ex3 = run("classify " + kCorpus + "/example3.fan");
  CHECK(ex3.exit_code == 0);
  CHECK(ex3.output.find("Z/3") != std::string::npos);

  RunResult quad = run("classify " + kCorpus + "/p1xp1.fan");
  CHECK(quad.exit_code == 0);
  CHECK(quad.output.find("not a generalized weighted projective space") !=
        std::string::npos);
}

TEST_CASE("wf subcommand") {
  RunResult r = run("wf " + kCorpus + "/x6_p111123.spec");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("well formed") != std::string::npos);
  CHECK(r.output.find("Fano index = 3") != std::string::npos);

  std::string nwf = temp_file("toric_nwf.spec",
                              R"({"weights": [1,2,2], "degrees": [4]})");
  RunResult bad = run("wf " + nwf);
  CHECK(bad.exit_code == 0);
  CHECK(bad.output.find("NOT well formed") != std::string::npos);

  RunResult quintic = run("wf " + kCorpus + "/quintic.spec");
  CHECK(quintic.exit_code == 0);
  CHECK(quintic.output.find("Fano index = 0") != std::string::npos);
  CHECK(quintic.output.find("not Fano") != std::string::npos);
}

TEST_CASE("betti subcommand") {
  RunResult fan = run("betti " + kCorpus + "/p2.fan");
  CHECK(fan.exit_code == 0);
  CHECK(fan.output.find("b_4 = 1") != std::string::npos);

  RunResult spec = run("betti " + kCorpus + "/quintic.spec");
  CHECK(spec.exit_code == 0);
  CHECK(spec.output.find("b_2(X) = 1") != std::string::npos);
}

TEST_CASE("verdict subcommand") {
  RunResult r = run("verdict " + kCorpus + "/ce_not_fano.spec");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("fano") != std::string::npos);
  CHECK(r.output.find("hypotheses_not_met") != std::string::npos);

  RunResult js = run("--json verdict " + kCorpus + "/ce_smooth.spec");
  CHECK(js.exit_code == 0);
  auto j = nlohmann::json::parse(js.output);
  CHECK(j["verdict"]["conclusion"] == "no_smooth_ci");
}

TEST_CASE("exit codes") {
  SUBCASE("input errors exit 2 with a diagnostic") {
    std::string corrupt = temp_file("toric_corrupt.fan", "{ this is not json");
    RunResult r = run("cl " + corrupt);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("parse error") != std::string::npos);
    CHECK(r.output.find("line") != std::string::npos);
  }
  SUBCASE("missing file exits 2") {
    RunResult r = run("cl /nonexistent/nowhere.fan");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("budget exhaustion exits 3") {
    RunResult r = run("verify-paper --corpus " + kCorpus +
                      " --filter example2.terminal --budget 1");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("budget") != std::string::npos);
  }
}

TEST_CASE("verify-paper subcommand") {
  RunResult all = run("verify-paper --corpus " + kCorpus);
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("FAIL") == std::string::npos);
  CHECK(all.output.find("example2.class_group") != std::string::npos);
  CHECK(all.output.find("all anchors pass") != std::string::npos);

  SUBCASE("filter narrows the scorecard") {
    RunResult f = run("verify-paper --corpus " + kCorpus + " --filter example3");
    CHECK(f.exit_code == 0);
    CHECK(f.output.find("example3.class_group") != std::string::npos);
    CHECK(f.output.find("example2.class_group") == std::string::npos);
  }
  SUBCASE("an unmatched filter is an input error") {
    RunResult f = run("verify-paper --corpus " + kCorpus + " --filter zzz");
    CHECK(f.exit_code == 2);
  }
  SUBCASE("json scorecard is deterministic") {
    RunResult a = run("--json verify-paper --corpus " + kCorpus);
    RunResult b = run("--json verify-paper --corpus " + kCorpus);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    auto j = nlohmann::json::parse(a.output);
    CHECK(j["all_pass"] == true);
  }
}
