#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "tlsra/instance_io.hpp"
#include "tlsra/solution_io.hpp"

using namespace tlsra;
namespace fs = std::filesystem;

namespace {

const fs::path kData = TLSRA_TEST_DATA_DIR;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tlsra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path fresh_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / "tlsra_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("solve then verify is feasible for every algorithm") {
  auto dir = fresh_dir("roundtrip");
  auto inst = (dir / "i1.json").string();
  REQUIRE(invoke({"gen", "worst-case", "--k", "3", "--t", "1", "--out", inst}).code == 0);
  REQUIRE(fs::exists(dir / "i1.schedule.json"));

  for (std::string algo : {"greedy-k", "fast3", "spanning-tree", "exact"}) {
    CAPTURE(algo);
    auto sol = (dir / (algo + ".solution.json")).string();
    auto s = invoke({"solve", inst, "--algorithm", algo, "--out", sol});
    REQUIRE(s.code == 0);
    auto record = nlohmann::json::parse(s.out);
    CHECK(record["algorithm"] == algo);
    auto v = invoke({"verify", inst, sol});
    CHECK(v.code == 0);
    auto verdict = nlohmann::json::parse(v.out);
    CHECK(verdict["verdict"] == "feasible");
    CHECK(verdict["components"] == 1);
  }

  auto exact = nlohmann::json::parse(read_file(dir / "exact.solution.json"));
  CHECK(exact["size"] == 5);
  CHECK(exact["u_opt"] == nlohmann::json::array({0, 1, 2, 3, 4}));
  CHECK(exact["proof"] == "exhausted sizes < size");
}

TEST_CASE("verify rejects a mutated solution and a foreign digest") {
  auto dir = fresh_dir("mutate");
  auto inst = (dir / "i1.json").string();
  REQUIRE(invoke({"gen", "worst-case", "--k", "3", "--t", "1", "--out", inst}).code == 0);
  auto sol_path = dir / "greedy.solution.json";
  REQUIRE(invoke({"solve", inst, "--algorithm", "greedy-k", "--k", "3", "--schedule",
                  (dir / "i1.schedule.json").string(), "--out", sol_path.string()})
              .code == 0);

  auto sol = load_solution(sol_path);
  REQUIRE(sol.size() == 7);
  const auto& two = sol.trace.back();
  REQUIRE(two.phase_k == 2);
  std::erase(sol.u_set, two.nodes.front());
  auto bad_path = dir / "mutated.solution.json";
  save_solution(sol, bad_path);
  auto v = invoke({"verify", inst, bad_path.string()});
  CHECK(v.code == 1);
  auto verdict = nlohmann::json::parse(v.out);
  CHECK(verdict["verdict"] == "infeasible");
  CHECK(verdict["components"].get<int>() >= 2);

  auto other = (dir / "i2.json").string();
  REQUIRE(invoke({"gen", "worst-case", "--k", "3", "--t", "2", "--out", other}).code == 0);
  auto mismatch = invoke({"verify", other, sol_path.string()});
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find("digest") != std::string::npos);
  CHECK_THROWS_AS(cli::cmd_verify(other, sol_path), cli::DigestMismatch);
}

TEST_CASE("greedy-k with the worst-case schedule on I_5 has size 35") {
  auto dir = fresh_dir("i5");
  auto inst = (dir / "i5.json").string();
  REQUIRE(invoke({"gen", "worst-case", "--k", "3", "--t", "5", "--out", inst}).code == 0);
  cli::SolveRequest req;
  req.instance = inst;
  req.algorithm = "greedy-k";
  req.k = 3;
  req.schedule = dir / "i5.schedule.json";
  auto res = cli::cmd_solve(req);
  CHECK(res.solution.size() == 35);
  CHECK(res.record.size == 35);
  CHECK(res.record.cc_min == 21);
}

TEST_CASE("solve exact on I_1 (k=3)") {
  auto dir = fresh_dir("exact");
  auto inst = (dir / "i1.json").string();
  REQUIRE(invoke({"gen", "worst-case", "--k", "3", "--t", "1", "--out", inst}).code == 0);
  auto s = invoke({"solve", inst, "--algorithm", "exact"});
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["size"] == 5);
  auto b = invoke({"solve", inst, "--algorithm", "exact", "--budget", "4"});
  CHECK(b.code == 2);
}

TEST_CASE("golden fast3 solution on the pinned geometric instance") {
  auto dir = fresh_dir("golden");
  auto sol = dir / "fast3.solution.json";
  auto s = invoke({"solve", (kData / "geometric_n10_seed42.json").string(), "--algorithm",
                   "fast3", "--out", sol.string()});
  REQUIRE(s.code == 0);
  CHECK(read_file(sol) == read_file(kData / "geometric_n10_seed42.fast3.solution.json"));
}

TEST_CASE("gen geometric matches the pinned instance") {
  auto dir = fresh_dir("gen_golden");
  auto out = dir / "g.json";
  REQUIRE(invoke({"gen", "geometric", "--n", "10", "--rmin", "0.15", "--rmax", "0.45", "--side",
                  "1", "--seed", "42", "--out", out.string()})
              .code == 0);
  CHECK(read_file(out) == read_file(kData / "geometric_n10_seed42.json"));
}

TEST_CASE("bench CSV layout") {
  auto dir = fresh_dir("bench");
  REQUIRE(invoke({"gen", "worst-case", "--k", "3", "--t", "1", "--out",
                  (dir / "a_i1.json").string()})
              .code == 0);
  REQUIRE(invoke({"gen", "geometric", "--n", "12", "--rmin", "0.1", "--rmax", "0.5", "--seed",
                  "5", "--out", (dir / "b_geo.json").string()})
              .code == 0);
  write_file(dir / "c_broken.json", "{ not json");

  auto csv_path = dir / "out.csv";
  auto r = invoke({"bench", dir.string(), "--algorithms", "fast3,greedy-k", "--exact",
                   "--repetitions", "3", "--workers", "2", "--out", csv_path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("c_broken.json") != std::string::npos);

  auto lines = split(read_file(csv_path), '\n');
  REQUIRE(lines.size() == 1 + 4 + 1);  // header, 2 instances x 2 algorithms, trailing empty
  CHECK(lines[0] == cli::kCsvHeader);
  CHECK(lines.back().empty());
  const auto header = split(lines[0], ',');
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    auto cols = split(lines[i], ',');
    REQUIRE(cols.size() == header.size());
    CHECK(!cols[10].empty());  // ratio
    CHECK(std::stod(cols[10]) >= 1.0);
    CHECK(std::stod(cols[10]) <= 1.75);
    CHECK(cols[12] != "0");
    if (cols[2] == "fast3") {
      CHECK(!cols[11].empty());
    } else {
      CHECK(cols[11].empty());
    }
  }
  CHECK(split(lines[1], ',')[0] == "a_i1.json");
  CHECK(split(lines[1], ',')[2] == "fast3");
  CHECK(split(lines[1], ',')[8] == "5");
  CHECK(split(lines[1], ',')[9] == "5");
}

TEST_CASE("identical invocations give byte-identical files") {
  auto dir = fresh_dir("determinism");
  for (int run = 0; run < 2; ++run) {
    auto sub = dir / std::to_string(run);
    fs::create_directories(sub);
    REQUIRE(invoke({"gen", "random", "--n", "12", "--min-density", "0.2", "--max-density", "0.6",
                    "--seed", "9", "--out", (sub / "r.json").string()})
                .code == 0);
    REQUIRE(invoke({"solve", (sub / "r.json").string(), "--algorithm", "greedy-k", "--k", "4",
                    "--order", "perm", "--seed", "3", "--out", (sub / "r.solution.json").string()})
                .code == 0);
  }
  CHECK(read_file(dir / "0" / "r.json") == read_file(dir / "1" / "r.json"));
  CHECK(read_file(dir / "0" / "r.solution.json") == read_file(dir / "1" / "r.solution.json"));
}

TEST_CASE("ratio table") {
  auto r = invoke({"ratio-table", "--kmax", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("7/4") != std::string::npos);
  CHECK(r.out.find("61/36") != std::string::npos);
  CHECK(r.out.find("241/144") != std::string::npos);
}

TEST_CASE("error exits") {
  CHECK(invoke({"solve", "/nonexistent/instance.json"}).code == 2);
  CHECK(invoke({"solve"}).code != 0);
  CHECK(invoke({"gen", "worst-case", "--k", "2", "--t", "1", "--out", "-"}).code == 2);
}

TEST_CASE("installed binary runs") {
  const std::string cmd = std::string("\"") + TLSRA_CLI_PATH + "\" ratio-table --kmax 3 > " +
                          (fs::temp_directory_path() / "tlsra_ratio.txt").string();
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(read_file(fs::temp_directory_path() / "tlsra_ratio.txt").find("7/4") != std::string::npos);
}
