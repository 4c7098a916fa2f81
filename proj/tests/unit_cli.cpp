#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "graphbits/formats.hpp"
#include "graphbits/graph.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* env = std::getenv("GRAPHBITS_CLI");
  REQUIRE_MESSAGE(env != nullptr, "GRAPHBITS_CLI must point at the built binary");
  return env;
}

RunResult run(const std::string& args) {
  RunResult result;
  const std::string command = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/graphbits_test_") + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("gen is byte-deterministic and respects formats") {
  const RunResult a = run("gen --nodes 3 --seed 1 --format native");
  const RunResult b = run("gen --nodes 3 --seed 1 --format native");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(run("gen --nodes 3 --seed 2 --format native").out != a.out);

  const RunResult g6 = run("gen --nodes 5 --seed 3 --format graph6");
  CHECK(g6.exit_code == 0);
  std::string line = g6.out;
  while (!line.empty() && line.back() == '\n') line.pop_back();
  const graphbits::Graph parsed = graphbits::from_graph6(line);
  CHECK(parsed == graphbits::random_graph(5, 3));
}

TEST_CASE("gen usage errors exit 1") {
  CHECK(run("gen --nodes 0").exit_code == 1);
  CHECK(run("gen").exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
}

TEST_CASE("analyze reports the topology sections") {
  const std::string k5 = write_temp("k5.txt", graphbits::to_native(graphbits::Graph::complete(5)) + "\n");
  const RunResult res = run("analyze --in " + k5);
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["diameter"] == 1);
  CHECK(j["max_clique"] == 5);
  CHECK(j["automorphisms"]["aut_size"] == 120);
  CHECK(j["connectivity"] == 4);
  CHECK(j["graph"]["graph6"] == "D~{");

  const std::string empty3 = write_temp("e3.txt", "3:0\n");
  const json je = json::parse(run("analyze --in " + empty3).out);
  CHECK(je["diameter"] == "disconnected");

  const std::string c5 = write_temp("c5.txt", "Dhc\n");
  const json jc = json::parse(run("analyze --in " + c5).out);
  CHECK(jc["connectivity"] == 2);
  CHECK(jc["max_clique"] == 2);
  CHECK(jc["automorphisms"]["aut_size"] == 10);

  // deficiency record carries the full estimate schema
  for (const char* field : {"n", "encoded_len", "compressed_len",
                            "calibration_offset", "delta_hat", "compressor_id"})
    CHECK(jc["deficiency"].contains(field));
}

TEST_CASE("analyze is byte-deterministic") {
  const std::string c5 = write_temp("c5b.txt", "Dhc\n");
  CHECK(run("analyze --in " + c5).out == run("analyze --in " + c5).out);
}

TEST_CASE("census and enumerate are byte-deterministic") {
  const std::string census_args = "census --nodes 8 --k 2 --seed 3 --samples 10";
  CHECK(run(census_args).out == run(census_args).out);
  CHECK(run("enumerate --nodes 5").out == run("enumerate --nodes 5").out);
}

TEST_CASE("analyze accepts explicit input formats") {
  const std::string native = write_temp("fmt_native.txt", "3:a\n");
  const std::string g6 = write_temp("fmt_g6.txt", "Bg\n");
  const json a = json::parse(run("analyze --in " + native + " --format native").out);
  const json b = json::parse(run("analyze --in " + g6 + " --format graph6").out);
  CHECK(a["graph"]["graph6"] == "Bg");
  CHECK(b["graph"]["native"] == "3:a");
  // wrong explicit format is a parse failure
  CHECK(run("analyze --in " + native + " --format graph6").exit_code == 2);
}

TEST_CASE("analyze parse failures exit 2") {
  const std::string bad = write_temp("bad.txt", "8:zz@@\n");
  CHECK(run("analyze --in " + bad).exit_code == 2);
  CHECK(run("analyze --in /tmp/graphbits_missing_file").exit_code == 2);
  const std::string ok = write_temp("ok3.txt", "3:a\n");
  CHECK(run("analyze --in " + ok + " --compressor lz-unicorn").exit_code == 2);
}

TEST_CASE("census single-cover degenerate n = k and K_n counts") {
  const RunResult nk = run("census --nodes 4 --k 4 --seed 1");
  REQUIRE(nk.exit_code == 0);
  const json j = json::parse(nk.out);
  CHECK(j["h"] == 1);
  CHECK(j["covers_used"] == true);

  const std::string k6 = write_temp("k6.txt", graphbits::to_native(graphbits::Graph::complete(6)) + "\n");
  const json jc = json::parse(run("census --nodes 6 --k 2 --graph " + k6).out);
  // edge pattern "1" counts C(6,2)=15; empty pattern counts 0
  for (const auto& row : jc["patterns"]) {
    if (row["pattern"] == "1") CHECK(row["total"] == 15);
    if (row["pattern"] == "0") CHECK(row["total"] == 0);
  }
}

TEST_CASE("census cover mode requires k | n") {
  CHECK(run("census --nodes 5 --k 2 --seed 1").exit_code == 2);
  CHECK(run("census --nodes 5 --k 2 --seed 1 --no-covers").exit_code == 0);
}

TEST_CASE("enumerate table row n=4") {
  const RunResult res = run("enumerate --nodes 4");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  const json row = j["rows"][3];
  CHECK(row["n"] == 4);
  CHECK(row["g_enumerated"] == "11");
  CHECK(row["g_burnside"] == "11");
  CHECK(row["oracles_agree"] == true);
  CHECK(row["E_n"] == "33/8");       // 11 * 24 / 64
  CHECK(row["lower"] == "8/3");      // 64/24
  CHECK(row["upper"] == "520/3");    // 8/3 * (1 + 4*256/16) = 8/3 * 65
  CHECK(row["within_bounds"] == true);
  // enumerate respects the exhaustive cap
  CHECK(run("enumerate --nodes 9 --limit-enum 5").exit_code == 0);
}

TEST_CASE("enumerate n=1 row") {
  const json j = json::parse(run("enumerate --nodes 1").out);
  CHECK(j["rows"][0]["g_enumerated"] == "1");
  CHECK(j["rows"][0]["E_n"] == "1/1");
}

TEST_CASE("bounds subcommand evaluates the frozen examples") {
  const json block = json::parse(run("bounds --kind block --len-n 1024 --l 1 --ky 2").out);
  CHECK(block["value"] == "46.144860371228255");
  const json freq = json::parse(run("bounds --kind frequency --nodes 16 --k 2 --kh 1").out);
  CHECK(freq["value"] == "95.82918621426262");
  const json frac = json::parse(run("bounds --kind fraction --delta 2").out);
  CHECK(frac["value"] == "0.75");
  const json aut = json::parse(run("bounds --kind aut-size --nodes 4 --m 4").out);
  CHECK(aut["value"] == "256");
  const json prob = json::parse(run("bounds --kind class-prob --nodes 20 --m 2").out);
  CHECK(prob["value"] == "0.0010789593218788877");
  CHECK(prob["vacuous"] == false);
  CHECK(run("bounds --kind nosuch").exit_code == 2);
}

TEST_CASE("covers emits a validated family") {
  const json j = json::parse(run("covers --nodes 6 --k 3").out);
  CHECK(j["h"] == 10);
  CHECK(j["N"] == 2);
  CHECK(j["covers"].size() == 10);
  CHECK(run("covers --nodes 7 --k 3").exit_code == 2);
}

TEST_CASE("every report embeds its configuration") {
  for (const char* args :
       {"gen --nodes 4 --seed 9 --format json", "enumerate --nodes 2",
        "covers --nodes 4 --k 2", "census --nodes 4 --k 2 --seed 5"}) {
    const json j = json::parse(run(args).out);
    REQUIRE(j.contains("config"));
    CHECK(j["config"].contains("seed"));
    CHECK(j["config"].contains("generator"));
  }
}
