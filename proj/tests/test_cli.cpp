#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dilog/relations.hpp"

#ifndef DILOGLAB_BIN
#error "DILOGLAB_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/diloglab_cli_out.txt";
  std::string cmd = std::string(DILOGLAB_BIN) + " " + args + " > " + tmp + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("exit code contract") {
  CHECK(run("verify --id kanade-main --digits 60").code == 0);
  CHECK(run("verify --id no-such-identity").code == 2);
  CHECK(run("qseries --identity 1 --printed-variant --order 20").code == 1);
  CHECK(run("totally-unknown-subcommand").code == 2);
  CHECK(run("verify --digits 5").code == 2);  // below the allowed range
  CHECK(run("polyid --digits 60").code == 0);
}

TEST_CASE("dropping a needed system row is a clean failure") {
  auto r = run("prove-kanade --digits 60 --drop-row reflection-z-y");
  CHECK(r.code == 1);
  CHECK(r.out.find("target outside row span") != std::string::npos);
  CHECK(run("prove-kanade --digits 60").code == 0);
}

TEST_CASE("json reports parse, round-trip, and are stable across runs") {
  auto a = run("verify --id euler-1 --id lima --digits 60 --report json");
  REQUIRE(a.code == 0);
  auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["command"] == "verify");
  CHECK(ja["status"] == "pass");
  CHECK(ja["items"].size() == 2);
  // emitted text is exactly the canonical dump of its own parse
  CHECK(ja.dump(2) + "\n" == a.out);

  auto b = run("verify --id euler-1 --id lima --digits 60 --report json");
  auto jb = nlohmann::json::parse(b.out);
  ja.erase("wall_ms");
  jb.erase("wall_ms");
  CHECK(ja == jb);
}

TEST_CASE("environment overrides with flag precedence") {
  auto r = run("verify --id euler-1 --report json --digits 60");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["digits"] == 60);
  std::string cmd = std::string("DILOGLAB_DIGITS=40 ") + DILOGLAB_BIN +
                    " verify --id euler-1 --report json > /tmp/diloglab_env.txt 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in("/tmp/diloglab_env.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  auto je = nlohmann::json::parse(ss.str());
  CHECK(je["config"]["digits"] == 40);
  std::string cmd2 = std::string("DILOGLAB_DIGITS=40 ") + DILOGLAB_BIN +
                     " verify --id euler-1 --digits 90 --report json > /tmp/diloglab_env.txt 2>/dev/null";
  REQUIRE(std::system(cmd2.c_str()) == 0);
  std::ifstream in2("/tmp/diloglab_env.txt");
  std::stringstream ss2;
  ss2 << in2.rdbuf();
  CHECK(nlohmann::json::parse(ss2.str())["config"]["digits"] == 90);
}

TEST_CASE("registry file loading") {
  using namespace dilog;
  auto regs = builtin_registry();
  std::string path = "/tmp/diloglab_registry.json";
  std::ofstream out(path);
  out << registry_to_json(regs);
  out.close();
  CHECK(run("verify --registry " + path + " --id kanade-main --digits 60").code == 0);
  CHECK(run("verify --registry /tmp/definitely-missing.json --id kanade-main").code == 1);
}
