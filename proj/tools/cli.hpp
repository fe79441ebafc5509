#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tlsra/bounds.hpp"
#include "tlsra/greedy.hpp"
#include "tlsra/instance.hpp"

namespace tlsra::cli {

// Worker count for `bench`; unset or invalid means hardware concurrency.
inline constexpr const char* kWorkersEnv = "TLSRA_WORKERS";

inline constexpr const char* kCsvHeader =
    "instance,digest,algorithm,k,n,s_min,s_max,cc_min,size,exact,ratio,op_count,wall_ns";

struct RunRecord {
  std::string instance;
  std::string digest;
  std::string algorithm;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t s_min = 0;
  std::size_t s_max = 0;
  std::size_t cc_min = 0;  // lower_bound_cc
  std::size_t size = 0;
  std::optional<std::size_t> exact;
  std::optional<Ratio> ratio;  // size / exact
  std::optional<std::uint64_t> op_count;
  std::uint64_t wall_ns = 0;
};

std::string to_csv_row(const RunRecord& rec);
std::string to_json_line(const RunRecord& rec);

struct SolveRequest {
  std::filesystem::path instance;
  std::string algorithm = "fast3";  // greedy-k | fast3 | spanning-tree | exact
  std::size_t k = 3;
  std::string order = "lex";  // lex | perm
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> schedule;
  std::optional<std::size_t> budget;
  bool repair_containment = false;
};

struct SolveOutput {
  Solution solution;
  std::string file_contents;  // exact bytes written by `solve --out`
  RunRecord record;
};

// Throws tlsra::Error subclasses (ParseError, InvalidInstance,
// InvalidSchedule, BudgetExceeded) on bad input.
SolveOutput cmd_solve(const SolveRequest& req);

class DigestMismatch : public Error {
 public:
  using Error::Error;
};

struct Verdict {
  bool feasible = false;
  std::size_t components = 0;  // of G(U)
  std::size_t size = 0;
};

// Throws DigestMismatch when the solution was computed for another instance.
Verdict cmd_verify(const std::filesystem::path& instance, const std::filesystem::path& solution);

struct BenchRequest {
  std::filesystem::path corpus;
  std::vector<std::string> algorithms{"fast3"};
  std::size_t k = 3;
  std::size_t repetitions = 5;
  bool with_exact = false;
  std::size_t exact_max_n = 20;
  std::size_t workers = 0;  // 0: TLSRA_WORKERS or hardware concurrency
};

// One record per (instance, algorithm), instances in file-name order. wall_ns
// is the median over repetitions. Instances that fail to load or solve are
// reported on `log` and skipped.
std::vector<RunRecord> cmd_bench(const BenchRequest& req, std::ostream& log);

std::string ratio_table(std::size_t k_max);

// Full command line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tlsra::cli
