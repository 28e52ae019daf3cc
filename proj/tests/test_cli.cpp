#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "hooktab/io.hpp"
#include "test_util.hpp"

using namespace hooktab;
using testutil::run_command;

namespace {

const std::string kCli = HOOKTAB_CLI_PATH;
const std::string kFixtures = HOOKTAB_FIXTURE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("map reproduces the worked example") {
  auto r = run_command(kCli + " map --input " + kFixtures + "/reference_content.json --bound 7");
  REQUIRE(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out["tableau"] == json::parse(slurp(kFixtures + "/reference_tableau.json")));
  CHECK(out["hook"] == json::parse(slurp(kFixtures + "/reference_hook.json")));
}

TEST_CASE("unmap inverts the worked example") {
  std::string trace_path = "/tmp/hooktab_cli_unmap_trace.json";
  auto r = run_command(kCli + " unmap --tableau " + kFixtures + "/reference_tableau.json --hook " +
                       kFixtures + "/reference_hook.json --bound 7 --trace " + trace_path);
  REQUIRE(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out["content"] == json::parse(slurp(kFixtures + "/reference_content.json")));

  json trace = json::parse(slurp(trace_path));
  REQUIRE(trace.size() == 12);
  CHECK(trace[0]["distinguished"] == json::array({1, 1}));
  CHECK(trace[0]["path"]["start"] == json::array({3, 3}));  // the chosen candidate
  CHECK(trace[11]["T_after"] == json::parse(slurp(kFixtures + "/reference_content.json")));
  std::remove(trace_path.c_str());
}

TEST_CASE("map trace matches the transcribed loop snapshots") {
  std::string trace_path = "/tmp/hooktab_cli_trace.json";
  auto r = run_command(kCli + " map --input " + kFixtures +
                       "/reference_content.json --bound 7 --trace " + trace_path);
  REQUIRE(r.exit_code == 0);
  json actual = json::parse(slurp(trace_path));
  json expected = json::parse(slurp(kFixtures + "/reference_trace.json"));
  REQUIRE(actual.size() == expected.size());
  for (std::size_t k = 0; k < actual.size(); ++k) CHECK(actual[k] == expected[k]);
  std::remove(trace_path.c_str());
}

TEST_CASE("verify subcommands succeed on known instances") {
  auto id = run_command(kCli + " verify identity --shape 2,1 --bound 2 --which 1.3");
  CHECK(id.exit_code == 0);
  CHECK(id.out.substr(0, 4) == "PASS");

  auto fib = run_command(kCli + " verify fibers --shape 2,1 --bound 2");
  CHECK(fib.exit_code == 0);
  CHECK(fib.out.substr(0, 4) == "PASS");

  auto rt = run_command(kCli + " verify roundtrip --shape 2,2 --bound 3 --exhaustive");
  CHECK(rt.exit_code == 0);
  CHECK(rt.out.substr(0, 4) == "PASS");

  auto rts = run_command(kCli + " verify roundtrip --shape 4,3,3,2 --bound 7 --samples 20 --seed 1");
  CHECK(rts.exit_code == 0);
}

TEST_CASE("sampling from the command line") {
  auto r = run_command(kCli + " sample ssyt --shape 1 --bound 1 --count 3 --seed 0");
  REQUIRE(r.exit_code == 0);
  // three samples of the one-cell shape with bound 1 are all [[1]]
  int count = 0;
  std::size_t pos = 0;
  while ((pos = r.out.find(R"("rows":[[1]])", pos)) != std::string::npos) {
    ++count;
    pos += 1;
  }
  CHECK(count == 3);

  auto again = run_command(kCli + " sample ssyt --shape 1 --bound 1 --count 3 --seed 0");
  CHECK(again.out == r.out);

  auto moves = run_command(kCli + " sample pp --box 2,2,2 --count 2 --seed 9 --report-moves");
  REQUIRE(moves.exit_code == 0);
  json first = json::parse(moves.out.substr(0, moves.out.find('\n')));
  CHECK(first.contains("moves"));
  CHECK(check_plane_partition(filling_from_json(first["value"]), 2).empty());
}

TEST_CASE("identical invocations are byte identical; env seed works; flag wins") {
  auto a = run_command(kCli + " sample pp --box 2,2,2 --count 4 --seed 5");
  auto b = run_command(kCli + " sample pp --box 2,2,2 --count 4 --seed 5");
  CHECK(a.out == b.out);

  auto via_env = run_command("HOOKTAB_SEED=5 " + kCli + " sample pp --box 2,2,2 --count 4");
  CHECK(via_env.out == a.out);

  auto flag_wins = run_command("HOOKTAB_SEED=7 " + kCli + " sample pp --box 2,2,2 --count 4 --seed 5");
  CHECK(flag_wins.out == a.out);
}

TEST_CASE("counting and generating functions") {
  CHECK(run_command(kCli + " count --class pp --box 2,2,2").out == "20\n");
  CHECK(run_command(kCli + " count --class ssyt --shape 2,1 --bound 2").out == "2\n");
  CHECK(run_command(kCli + " count --class content --shape 2,1 --bound 2").out == "6\n");
  CHECK(run_command(kCli + " count --class hook --shape 2,1").out == "3\n");
  CHECK(run_command(kCli + " gf --shape 2,1 --bound 2").out == "q^4 + q^5\n");
}

TEST_CASE("rendering") {
  auto grid = run_command(kCli + " render --input " + kFixtures + "/reference_tableau.json");
  CHECK(grid.exit_code == 0);
  CHECK(grid.out == "1 1 2 5\n2 4 6\n4 5 7\n5 6\n");

  std::string pp_path = "/tmp/hooktab_cli_pp.json";
  std::ofstream(pp_path) << R"({"shape":[2,2],"rows":[[2,1],[1,0]]})";
  auto pp = run_command(kCli + " render --input " + pp_path + " --style pp3d");
  CHECK(pp.exit_code == 0);
  CHECK(pp.out == "#.\n##\n\n..\n#.\n");
  std::remove(pp_path.c_str());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_command(kCli + " 2>/dev/null").exit_code == 2);
  CHECK(run_command(kCli + " map --bound 7 2>/dev/null").exit_code == 2);
  CHECK(run_command(kCli + " map --input /nonexistent.json --bound 7 2>/dev/null").exit_code == 2);
  CHECK(run_command(kCli + " verify identity --shape 2,1 --bound 2 --which 9.9 2>/dev/null").exit_code == 2);
  CHECK(run_command(kCli + " sample ssyt --shape 2,1 --bound 1 --count 1 2>/dev/null").exit_code == 2);
  CHECK(run_command(kCli + " count --class bogus --shape 1 2>/dev/null").exit_code == 2);
}
