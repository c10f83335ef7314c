#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "json.hpp"

using namespace semiflag;
using testing_helpers::a1_alcove;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" SEMIFLAG_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string lit(const Alcove& a) { return "'" + to_string(a) + "'"; }

fs::path fresh_dir(const std::string& tag) {
  fs::path d = fs::temp_directory_path() / ("semiflag-cli-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("kl tables") {
  Run r = run("kl --type A1 --w 's1 s0'");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["values"].size() == 4);
  for (const auto& row : j["values"]) CHECK(row["h"].size() == 1);

  r = run("kl --type A2 --w s1 --y e");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["h"] == json{{"1", 1}});

  r = run("kl --type A2 --w s1 --y s2");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["h"].empty());
}

TEST_CASE("generic and periodic values") {
  Run r = run("generic --type A1 --a " + lit(a1_alcove(0)) + " --b " + lit(a1_alcove(3)));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["q"] == json{{"3", 1}});
  CHECK(j.contains("n0"));

  r = run("periodic --type A1 --a " + lit(a1_alcove(-1)) + " --b " + lit(a1_alcove(0)));
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["p"] == json{{"1", 1}});

  r = run("periodic --type A1 --a " + lit(a1_alcove(2)) + " --b " + lit(a1_alcove(2)));
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["p"] == json{{"0", 1}});
}

TEST_CASE("graph exports") {
  Run r = run("graph --type A1 --kind bruhat --w s1 --format dot");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("v0 -- v1") != std::string::npos);
  CHECK(r.out.find("v1 --", r.out.find("v0 -- v1") + 1) == std::string::npos);

  r = run("graph --type A1 --kind semiinf --a " + lit(a1_alcove(-1)) + " --b " + lit(a1_alcove(1)));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["vertices"].size() == 3);
  CHECK(j["edges"].size() == 2);
  CHECK(j["order"] == "semiinfinite");

  fs::path d = fresh_dir("graph");
  r = run("graph --type A1 --kind bruhat --w s1 --output ''");
  CHECK(r.code == 2);
  r = run("graph --type A1 --kind bruhat --w 's1 s0' --output '" + (d / "g.json").string() + "'");
  CHECK(r.code == 0);
  CHECK(fs::exists(d / "g.json"));
  fs::remove_all(d);
}

TEST_CASE("exit codes") {
  CHECK(run("verify --suite kl-vs-bm --type A1 --max-length 8").code == 0);
  CHECK(run("verify --suite hecke-axioms --type A2").code == 0);
  CHECK(run("verify --suite no-such-suite").code == 2);
  CHECK(run("kl --type Z9 --w s1").code == 2);
  CHECK(run("kl --type A1 --w s1 --cutoff 3").code == 2);
  CHECK(run("kl").code == 2);
  CHECK(run("generic --type A1 --a " + lit(a1_alcove(3)) + " --b " + lit(a1_alcove(0))).code == 2);
  CHECK(run("bm-bruhat --type A2 --w 's1 s2 s0 s1' --cutoff 2").code == 3);
  CHECK(run("generic --type A1 --max-translation-depth 2 --stabilization-window 2 --a " + lit(a1_alcove(0)) + " --b " +
            lit(a1_alcove(3)))
            .code == 3);
  CHECK(run("kl --type A1 --w s1 --max-translation-depth 2 --stabilization-window 3").code == 2);
}

TEST_CASE("cache") {
  fs::path d = fresh_dir("cache");
  std::string args = "kl --type A2 --w 's1 s2 s0 s1'";
  Run plain = run(args);
  Run cold = run("--cache-dir '" + d.string() + "' " + args);
  Run warm = run("--cache-dir '" + d.string() + "' " + args);
  CHECK(plain.out == cold.out);
  CHECK(cold.out == warm.out);
  fs::path file = d / "semiflag-A2-kl.json";
  REQUIRE(fs::exists(file));
  CHECK(json::parse(std::ifstream(file))["format"] == "semiflag-cache");

  std::ofstream(file) << "{ not json";
  Run corrupt = run("--cache-dir '" + d.string() + "' " + args);
  CHECK(corrupt.code == 0);
  CHECK(corrupt.out == plain.out);

  fs::path other = fresh_dir("env");
  Run env = run(args, "SEMIFLAG_CACHE_DIR='" + other.string() + "'");
  CHECK(env.out == plain.out);
  CHECK(fs::exists(other / "semiflag-A2-kl.json"));

  fs::path flag = fresh_dir("flag");
  run("--cache-dir '" + flag.string() + "' " + args, "SEMIFLAG_CACHE_DIR='" + other.string() + "-unused'");
  CHECK(fs::exists(flag / "semiflag-A2-kl.json"));
  CHECK_FALSE(fs::exists(other.string() + "-unused"));
  for (const fs::path& p : {d, other, flag}) fs::remove_all(p);
}
