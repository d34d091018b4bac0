#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kcore/generate.hpp"

namespace kcore::cli {

/// Worker count used when no --workers flag is given: $KCORE_WORKERS if set
/// to a positive integer, otherwise the hardware thread count.
int default_workers();

struct DecomposeConfig {
  std::string algo;
  std::string input;
  std::string format;          // empty: infer from the file extension
  std::string output;          // coreness file; empty or "-" writes to `out`
  std::string metrics;         // metrics record; empty or "-" writes to `out`
  std::string metrics_format = "json";
  int workers = 1;
  bool trace = false;
  bool debug_invariants = false;
};

struct VerifyConfig {
  std::string input;
  std::string format;
  std::vector<std::string> algos;  // empty: every parallel algorithm
  std::string coreness;            // optional coreness file checked against bz
  int workers = 1;
};

struct BenchConfig {
  std::string input;
  std::string format;
  std::vector<std::string> algos;
  std::vector<int> workers{1};
  int repeat = 1;
  std::string output;
};

struct StatsConfig {
  std::string input;
  std::string format;
  std::string algo;
  int workers = 1;
};

struct GenerateConfig {
  std::string model;
  GraphSpec spec;
  std::string output;
};

int cmd_decompose(const DecomposeConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const StatsConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand first) and dispatches. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kcore::cli
