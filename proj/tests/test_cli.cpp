#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef ENDOTRIV_CLI
#error "ENDOTRIV_CLI must name the command-line binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ENDOTRIV_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute S7 at p=3 over F_3") {
  const Run r = run("compute --group S7 --prime 3 --field 3 --json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["consistent"] == true);
  CHECK(j["T_characters"]["torsion"] == nlohmann::json::array({2, 2}));
  CHECK(j["q"] == 3);
  CHECK(run("compute --group S7 --prime 3 --field 3 --json").out == r.out);
}

TEST_CASE("errors exit with status 2") {
  CHECK(run("compute --group S4 --prime 5").code == 2);
  CHECK(run("compute --group Q8x --prime 2").code == 2);
  CHECK(run("compute --group S4 --prime 4").code == 2);
  CHECK(run("compute --group S7 --prime 3 --field 4").code == 2);
  CHECK(run("compute --group S7").code == 2);
  CHECK(run("h1-orbit --group S4 --prime 2 --collection xx").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("subcommands") {
  CHECK(run("h1-orbit --group S5 --prime 3").out.find("Z/2 + Z/2") != std::string::npos);
  {
    const Run r = run("ct --group S7 --prime 3 --json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["r"] == 1);
    CHECK(j["quotient"]["torsion"] == nlohmann::json::array({2, 2}));
  }
  {
    const Run r = run("normalizer --group S7 --prime 3 --collection ap --json");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["colimit"]["torsion"] == nlohmann::json::array({2, 2}));
  }
  CHECK(run("centralizer --group 3^1+2:8 --prime 3").code == 0);
  CHECK(run("fusion --group S6 --prime 3").code == 0);
  CHECK(run("webb --group A5 --prime 2").code == 0);
  {
    const Run r = run("steinberg --group S5 --prime 3 --json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["brown_ok"] == true);
    CHECK(j["characters"].size() == 4);
    CHECK(run("steinberg --group S5 --prime 3 --json --seed 4").out == r.out);
  }
}

TEST_CASE("groups from a JSON file") {
  const std::string path = "endotriv_cli_test_group.json";
  {
    std::ofstream f(path);
    f << R"j({"degree": 4, "generators": ["(1 2 3 4)", "(1 2)"]})j";
  }
  const Run r = run("compute --group " + path + " --prime 3 --json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["T_abstract"]["torsion"] == nlohmann::json::array({2}));
  {
    std::ofstream f(path);
    f << R"j({"degree": 4, "generators": ["(1 2 3 5)"]})j";
  }
  CHECK(run("compute --group " + path + " --prime 3").code == 2);
  std::remove(path.c_str());
}

}  // TEST_SUITE
