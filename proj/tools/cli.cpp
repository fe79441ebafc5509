#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tlsra/exact.hpp"
#include "tlsra/fast3.hpp"
#include "tlsra/generators.hpp"
#include "tlsra/instance_io.hpp"
#include "tlsra/random.hpp"
#include "tlsra/solution_io.hpp"

namespace tlsra::cli {

namespace {

using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

std::string format_ratio(const Ratio& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << to_double(r);
  return os.str();
}

struct Prepared {
  Instance instance;
  std::string name;
  std::string digest;
  PowerGraph graph;
};

Prepared prepare(const fs::path& path, bool repair) {
  Prepared p;
  p.instance = load_instance(path, {.repair_containment = repair}).instance;
  p.name = path.filename().string();
  p.digest = instance_digest(p.instance);
  return p;
}

RunRecord base_record(const Prepared& p) {
  RunRecord rec;
  rec.instance = p.name;
  rec.digest = p.digest;
  rec.n = p.instance.n;
  rec.s_min = relation_size_min(p.instance);
  rec.s_max = relation_size_max(p.instance);
  rec.cc_min = lower_bound_cc(derive_edges_unchecked(p.instance));
  return rec;
}

struct Timed {
  Solution solution;
  std::optional<std::uint64_t> op_count;
  std::optional<ExactResult> exact;
  std::uint64_t wall_ns = 0;
};

// Runs one algorithm end to end from the validated instance, edge
// derivation included in the timing.
Timed run_algorithm(const Instance& inst, const std::string& algorithm, std::size_t k,
                    const std::string& order, std::uint64_t seed,
                    const std::optional<std::vector<std::vector<NodeId>>>& schedule,
                    std::optional<std::size_t> budget) {
  if (order != "lex" && order != "perm") throw Error("unknown order '" + order + "'");
  Timed out;
  const auto start = Clock::now();
  const PowerGraph graph = derive_edges_unchecked(inst);
  if (algorithm == "greedy-k") {
    MergingOrder mo = schedule                 ? MergingOrder::explicit_schedule(*schedule)
                      : order == "perm"        ? MergingOrder::permutation(seed)
                                               : MergingOrder::lexicographic();
    out.solution = approx_2lsra_k(graph, k, mo);
  } else if (algorithm == "fast3") {
    Fast3Options opts;
    if (order == "perm") opts.scan_order = random_permutation(inst.n, seed);
    auto res = fast3_solve(graph, opts);
    out.op_count = res.op_count;
    out.solution = std::move(res.solution);
  } else if (algorithm == "spanning-tree") {
    out.solution = spanning_tree_baseline(graph);
  } else if (algorithm == "exact") {
    auto res = solve_exact(graph, {.budget = budget});
    out.solution.u_set = res.u_opt;
    out.solution.algorithm = "exact";
    out.solution.k = 0;
    out.exact = std::move(res);
  } else {
    throw Error("unknown algorithm '" + algorithm +
                "' (expected greedy-k, fast3, spanning-tree or exact)");
  }
  out.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
  return out;
}

std::size_t worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool is_instance_file(const fs::path& p) {
  const auto name = p.filename().string();
  auto ends_with = [&](std::string_view suffix) {
    return name.size() >= suffix.size() &&
           name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with(".json") && !ends_with(".schedule.json") && !ends_with(".solution.json");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_output(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_file(path, contents);
  }
}

fs::path default_schedule_path(const fs::path& out) {
  auto stem = out.filename().string();
  if (stem.size() > 5 && stem.ends_with(".json")) stem.resize(stem.size() - 5);
  return out.parent_path() / (stem + ".schedule.json");
}

}  // namespace

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream os;
  os << r.instance << ',' << r.digest << ',' << r.algorithm << ',' << r.k << ',' << r.n << ','
     << r.s_min << ',' << r.s_max << ',' << r.cc_min << ',' << r.size << ',';
  if (r.exact) os << *r.exact;
  os << ',';
  if (r.ratio) os << format_ratio(*r.ratio);
  os << ',';
  if (r.op_count) os << *r.op_count;
  os << ',' << r.wall_ns;
  return os.str();
}

std::string to_json_line(const RunRecord& r) {
  nlohmann::json j = {{"instance", r.instance}, {"digest", r.digest},   {"algorithm", r.algorithm},
                      {"k", r.k},               {"n", r.n},             {"s_min", r.s_min},
                      {"s_max", r.s_max},       {"cc_min", r.cc_min},   {"size", r.size},
                      {"exact", nullptr},       {"ratio", nullptr},     {"op_count", nullptr},
                      {"wall_ns", r.wall_ns}};
  if (r.exact) j["exact"] = *r.exact;
  if (r.ratio) j["ratio"] = to_double(*r.ratio);
  if (r.op_count) j["op_count"] = *r.op_count;
  return j.dump();
}

SolveOutput cmd_solve(const SolveRequest& req) {
  auto prepared = prepare(req.instance, req.repair_containment);
  std::optional<std::vector<std::vector<NodeId>>> schedule;
  if (req.schedule) {
    if (req.algorithm != "greedy-k") throw Error("--schedule applies to greedy-k only");
    schedule = load_schedule(*req.schedule);
  }
  auto timed = run_algorithm(prepared.instance, req.algorithm, req.k, req.order, req.seed,
                             schedule, req.budget);

  SolveOutput out;
  out.solution = std::move(timed.solution);
  out.solution.instance_digest = prepared.digest;
  auto doc = to_json(out.solution);
  if (timed.exact) doc.update(to_json(*timed.exact));
  out.file_contents = dump_canonical(doc);

  RunRecord& rec = out.record;
  rec = base_record(prepared);
  rec.algorithm = req.algorithm;
  rec.k = out.solution.k;
  rec.size = out.solution.size();
  rec.op_count = timed.op_count;
  rec.wall_ns = timed.wall_ns;
  if (timed.exact) {
    rec.exact = timed.exact->size;
    if (timed.exact->size > 0) rec.ratio = Ratio(1);
  }
  return out;
}

Verdict cmd_verify(const fs::path& instance, const fs::path& solution) {
  const Instance inst = load_instance(instance).instance;
  const Solution sol = load_solution(solution);
  const auto digest = instance_digest(inst);
  if (sol.instance_digest != digest) {
    throw DigestMismatch("solution digest " + sol.instance_digest +
                         " does not match instance digest " + digest);
  }
  const PowerGraph graph = derive_edges_unchecked(inst);
  for (NodeId v : sol.u_set) {
    if (v >= inst.n) throw Error("solution u_set contains id " + std::to_string(v) + " >= n");
  }
  Verdict verdict;
  verdict.components = min_max_component_count(graph, sol.u_set);
  verdict.feasible = verdict.components == 1;
  verdict.size = sol.u_set.size();
  return verdict;
}

std::vector<RunRecord> cmd_bench(const BenchRequest& req, std::ostream& log) {
  if (req.repetitions == 0) throw Error("bench: repetitions must be positive");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(req.corpus)) {
    if (entry.is_regular_file() && is_instance_file(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::vector<RunRecord>> results(files.size());
  std::vector<std::string> failures(files.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        auto prepared = prepare(files[i], false);
        auto base = base_record(prepared);
        std::optional<ExactResult> exact;
        if (req.with_exact && prepared.instance.n <= req.exact_max_n) {
          exact = solve_exact(derive_edges_unchecked(prepared.instance));
        }
        for (const auto& algo : req.algorithms) {
          std::vector<std::uint64_t> walls;
          Timed last;
          for (std::size_t rep = 0; rep < req.repetitions; ++rep) {
            last = run_algorithm(prepared.instance, algo, req.k, "lex", 0, std::nullopt,
                                 std::nullopt);
            walls.push_back(last.wall_ns);
          }
          std::sort(walls.begin(), walls.end());
          RunRecord rec = base;
          rec.algorithm = algo;
          rec.k = last.solution.k;
          rec.size = last.solution.size();
          rec.op_count = last.op_count;
          rec.wall_ns = walls[walls.size() / 2];
          if (exact) {
            rec.exact = exact->size;
            if (exact->size > 0) {
              rec.ratio = Ratio(static_cast<std::int64_t>(rec.size),
                                static_cast<std::int64_t>(exact->size));
            }
          }
          results[i].push_back(std::move(rec));
        }
      } catch (const std::exception& e) {
        results[i].clear();
        failures[i] = e.what();
      }
    }
  };

  const auto workers = std::min(worker_count(req.workers), std::max<std::size_t>(files.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<RunRecord> out;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!failures[i].empty()) {
      log << "warning: " << files[i].filename().string() << ": " << failures[i] << "\n";
      continue;
    }
    for (auto& rec : results[i]) out.push_back(std::move(rec));
  }
  return out;
}

std::string ratio_table(std::size_t k_max) {
  if (k_max < 2 || k_max > kMaxBoundK) {
    throw Error("ratio-table: --kmax must lie in [2, " + std::to_string(kMaxBoundK) + "]");
  }
  std::ostringstream os;
  os << std::left << std::setw(4) << "k" << std::setw(26) << "upper_bound" << std::setw(12)
     << "~" << std::setw(12) << "lower_limit" << "~\n";
  for (std::size_t k = 2; k <= k_max; ++k) {
    const auto ub = greedy_upper_bound(k);
    std::ostringstream frac;
    frac << ub.numerator() << "/" << ub.denominator();
    os << std::setw(4) << k << std::setw(26) << frac.str() << std::setw(12) << format_ratio(ub);
    if (k >= 3) {
      const auto lb = worst_case_limit(k);
      std::ostringstream lf;
      lf << lb.numerator() << "/" << lb.denominator();
      os << std::setw(12) << lf.str() << format_ratio(lb);
    } else {
      os << std::setw(12) << "-" << "-";
    }
    os << "\n";
  }
  os << "upper bound tends to pi^2/6 = " << std::fixed << std::setprecision(6)
     << std::numbers::pi * std::numbers::pi / 6.0 << "; lower limit tends to 3/2\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level symmetric range assignment: generators, solvers, verification"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->require_subcommand(1);
  std::string gen_out = "-";
  std::string schedule_out;
  WorstCaseParams wc_params;
  auto* gen_wc = gen->add_subcommand("worst-case", "Worst-case family I_t with its schedule");
  gen_wc->add_option("--k", wc_params.k, "Greedy parameter k (>= 3)")->required();
  gen_wc->add_option("--t", wc_params.t, "Number of gadgets t (>= 1)")->required();
  gen_wc->add_option("--out,-o", gen_out, "Instance output path ('-' for stdout)");
  gen_wc->add_option("--schedule-out", schedule_out,
                     "Schedule output path (default: <out>.schedule.json)");

  GeometricParams geo;
  auto* gen_geo = gen->add_subcommand("geometric", "Random two-radius unit-disk instance");
  gen_geo->add_option("--n", geo.n, "Node count")->required();
  gen_geo->add_option("--rmin", geo.r_min, "Min-power radius")->required();
  gen_geo->add_option("--rmax", geo.r_max, "Max-power radius")->required();
  gen_geo->add_option("--side", geo.side, "Square side length");
  gen_geo->add_option("--seed", geo.seed, "RNG seed");
  gen_geo->add_flag("!--no-points", geo.store_points, "Omit point coordinates from meta");
  gen_geo->add_option("--out,-o", gen_out, "Instance output path ('-' for stdout)");

  RandomAbstractParams rnd;
  auto* gen_rnd = gen->add_subcommand("random", "Random abstract (possibly asymmetric) instance");
  gen_rnd->add_option("--n", rnd.n, "Node count")->required();
  gen_rnd->add_option("--min-density", rnd.min_density, "P(u in dmin(v))")->required();
  gen_rnd->add_option("--max-density", rnd.max_density, "P(u in dmax(v))")->required();
  gen_rnd->add_option("--seed", rnd.seed, "RNG seed");
  gen_rnd->add_option("--out,-o", gen_out, "Instance output path ('-' for stdout)");

  // solve
  SolveRequest solve_req;
  std::string solve_out;
  std::string schedule_path;
  std::size_t budget = 0;
  auto* solve = app.add_subcommand("solve", "Solve an instance and write the solution JSON");
  solve->add_option("instance", solve_req.instance, "Instance file")->required();
  solve->add_option("--algorithm,-a", solve_req.algorithm, "greedy-k | fast3 | spanning-tree | exact")
      ->check(CLI::IsMember({"greedy-k", "fast3", "spanning-tree", "exact"}));
  solve->add_option("--k", solve_req.k, "Parameter k for greedy-k (>= 2)");
  solve->add_option("--order", solve_req.order, "Merging/scan order: lex | perm")
      ->check(CLI::IsMember({"lex", "perm"}));
  solve->add_option("--seed", solve_req.seed, "Seed for --order perm");
  solve->add_option("--schedule", schedule_path, "Explicit merging schedule (greedy-k)");
  solve->add_option("--budget", budget, "Largest subset size the exact solver may try");
  solve->add_flag("--repair-containment", solve_req.repair_containment,
                  "Replace dmax(v) by dmax(v) | dmin(v) instead of rejecting");
  solve->add_option("--out,-o", solve_out, "Solution output path ('-' for stdout)");

  // verify
  fs::path verify_instance, verify_solution;
  auto* verify = app.add_subcommand("verify", "Check a solution against its instance");
  verify->add_option("instance", verify_instance, "Instance file")->required();
  verify->add_option("solution", verify_solution, "Solution file")->required();

  // bench
  BenchRequest bench_req;
  std::string bench_algos = "fast3";
  std::string bench_out = "-";
  auto* bench = app.add_subcommand("bench", "Run solvers over a corpus directory, write CSV");
  bench->add_option("corpus", bench_req.corpus, "Directory of instance files")->required();
  bench->add_option("--algorithms", bench_algos, "Comma-separated algorithm list");
  bench->add_option("--k", bench_req.k, "Parameter k for greedy-k");
  bench->add_option("--repetitions,-r", bench_req.repetitions, "Timed runs per pair (median)");
  bench->add_flag("--exact", bench_req.with_exact, "Fill exact/ratio columns for small n");
  bench->add_option("--exact-max-n", bench_req.exact_max_n, "Largest n for --exact");
  bench->add_option("--workers", bench_req.workers,
                    std::string("Worker threads (default: $") + kWorkersEnv + " or all cores)");
  bench->add_option("--out,-o", bench_out, "CSV output path ('-' for stdout)");

  // ratio-table
  std::size_t k_max = 10;
  auto* table = app.add_subcommand("ratio-table", "Print approximation bounds per k");
  table->add_option("--kmax", k_max, "Largest k to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) {
      if (gen_wc->parsed()) {
        auto wc = gen_worst_case(wc_params);
        write_output(gen_out, to_canonical_json(wc.instance), out);
        std::string sched_path = schedule_out;
        if (sched_path.empty() && gen_out != "-") sched_path = default_schedule_path(gen_out).string();
        if (!sched_path.empty()) {
          write_file(sched_path, dump_canonical(schedule_to_json(wc.schedule)));
        }
      } else if (gen_geo->parsed()) {
        write_output(gen_out, to_canonical_json(gen_geometric(geo)), out);
      } else {
        write_output(gen_out, to_canonical_json(gen_random_abstract(rnd)), out);
      }
      return 0;
    }
    if (solve->parsed()) {
      if (!schedule_path.empty()) solve_req.schedule = schedule_path;
      if (solve->count("--budget")) solve_req.budget = budget;
      auto res = cmd_solve(solve_req);
      if (!solve_out.empty()) write_output(solve_out, res.file_contents, out);
      out << to_json_line(res.record) << "\n";
      return 0;
    }
    if (verify->parsed()) {
      auto v = cmd_verify(verify_instance, verify_solution);
      nlohmann::json j = {{"verdict", v.feasible ? "feasible" : "infeasible"},
                          {"components", v.components},
                          {"size", v.size}};
      out << j.dump() << "\n";
      return v.feasible ? 0 : 1;
    }
    if (bench->parsed()) {
      bench_req.algorithms = split_list(bench_algos);
      auto records = cmd_bench(bench_req, err);
      std::string csv = std::string(kCsvHeader) + "\n";
      for (const auto& r : records) csv += to_csv_row(r) + "\n";
      write_output(bench_out, csv, out);
      return 0;
    }
    if (table->parsed()) {
      out << ratio_table(k_max);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace tlsra::cli
