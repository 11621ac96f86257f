#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TRIGWEYL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("orbits up to norm 4") {
  const auto r = run("orbits --max-norm 4 --format json");
  REQUIRE(r.status == 0);
  const auto j = trigweyl::Json::parse(r.out);
  REQUIRE(j.size() == 5);
  CHECK(j[4]["label"] == "4");
  CHECK(j[4]["cardinal"] == 24);
  CHECK(j[4]["representatives"].size() == 2);
  const auto text = run("orbits --max-norm 4");
  CHECK(text.out.find("(4)\t2e1, e1 + e2 + e3 + e4\t| 24") != std::string::npos);
}

TEST_CASE("fusion output") {
  const auto r = run("fusion 1 2 --format json");
  REQUIRE(r.status == 0);
  CHECK(trigweyl::Json::parse(r.out)["product"].dump() == R"({"5":1,"3":3,"1":6})");
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("orbits --format yaml").status == 2);
  CHECK(run("fusion 1").status == 2);
  CHECK(run("fusion 1 77").status == 2);
  CHECK(run("spectrum --gamma 1/2").status == 2);
  CHECK(run("spectrum --level 2 --weights graded").status == 1);
  CHECK(run("factorize --max-norm 24").status == 1);
  CHECK(run("verify --criterion 2").status == 0);
  CHECK(run("verify --criterion 8").status == 1);
}

TEST_CASE("cache transparency") {
  const fs::path ws = fs::temp_directory_path() / "trigweyl-cli-ws";
  fs::remove_all(ws);
  for (const std::string cmd : {"chevalley --format json", "metric", "factorize --format json", "rcoeff",
                                "spectrum --gamma 1/3,1/5 --format json", "operator --gamma -2,7 --level 3",
                                "factorize --report diff"}) {
    CAPTURE(cmd);
    const auto plain = run(cmd);
    const auto cold = run(cmd + " --workspace " + ws.string());
    const auto warm = run(cmd + " --workspace " + ws.string());
    CHECK(plain.status == cold.status);
    CHECK(cold.status == warm.status);
    CHECK(plain.out == cold.out);
    CHECK(cold.out == warm.out);
  }
  CHECK(fs::exists(ws / "F4-norm56-xi1000000000_1000000_1000_1" / "manifest.json"));
  CHECK(fs::exists(ws / "F4-norm56-xi1000000000_1000000_1000_1" / "rcoeff.json"));
  // The environment variable supplies the default workspace.
  const fs::path env_ws = fs::temp_directory_path() / "trigweyl-cli-env";
  fs::remove_all(env_ws);
  const auto r = run("orbits");
  const auto e = run("orbits");
  const std::string with_env = "env TRIGWEYL_WORKSPACE=" + env_ws.string() + " " + TRIGWEYL_CLI + " orbits";
  CHECK(std::system(with_env.c_str()) == 0);
  (void)r;
  (void)e;
  CHECK(fs::exists(env_ws / "F4-norm24-xi1000000000_1000000_1000_1" / "orbits.json"));
  fs::remove_all(ws);
  fs::remove_all(env_ws);
}

TEST_CASE("diff reports") {
  CHECK(run("chevalley --report diff").status == 0);
  CHECK(run("metric --report diff").status == 0);
  CHECK(run("rcoeff --report diff").status == 0);
  const auto f = run("factorize --report diff");
  CHECK(f.status == 0);
  CHECK(f.out.find("[flagged] P2") != std::string::npos);
}
