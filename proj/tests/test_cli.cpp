#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = 0;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(CAPITULA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli text output") {
  auto r = run("conductor 418 --multiplicity");
  CHECK(r.code == 0);
  CHECK(r.out == "m=2; 836 4598\n");
  CHECK(run("tkt canon 0243").out == "d.23 (1320)\n");
  CHECK(run("tkt leq 1320 0320").out == "true\n");
  CHECK(run("tkt leq 0320 1000").out == "false\n");
  CHECK(run("residue 11 19").out == "residue\n");
  CHECK(run("shafarevich 2 0 3 1 --d2 4").code == 0);
  CHECK(run("shafarevich 2 0 3 1 --d2 7").code == 1);
  CHECK(run("group artin 243#3").code == 0);
}

TEST_CASE("cli exit codes") {
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("tkt canon 9999").code == 1);
  CHECK(run("admissible beta 1").code == 1);
  CHECK(run("admissible gamma 2").code == 1);
  CHECK(run("radicand 27").code == 1);
  CHECK(run("group info 5#5").code == 1);
  CHECK(run("group info " + std::string(CAPITULA_SOURCE_DIR) + "/catalog/groups.grp#81#7").code == 0);
  CHECK(run("validate --tables --catalog").code == 0);
  CHECK(run("--tables-dir /nonexistent validate --tables").code == 1);
}

TEST_CASE("cli json documents round-trip") {
  for (const char* args : {"--json conductor 418 --multiplicity", "--json group huppert 81#7", "--json tkt features 4001",
                           "--json validate --catalog", "--json radicand 27"}) {
    CAPTURE(args);
    const auto r = run(args);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.contains("command"));
    CHECK(doc.contains("result"));
    CHECK(doc.contains("warnings"));
    CHECK(doc["exit_code"] == r.code);
    CHECK(nlohmann::json::parse(doc.dump()) == doc);
    CHECK(nlohmann::json::parse(doc.dump(2)).dump(2) == doc.dump(2));
  }
  const auto doc = nlohmann::json::parse(run("--json group huppert 81#7").out);
  CHECK(doc["result"]["verdict"] == "hypothesis_not_met");
  CHECK(doc["result"]["conclusion"] == false);
  CHECK(doc["result"]["gamma1_abelianization"]["log"] == "111");
}
