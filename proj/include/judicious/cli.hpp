#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "judicious/assign.hpp"
#include "judicious/highlow.hpp"
#include "judicious/hypergraph.hpp"
#include "judicious/lemma_solve.hpp"

namespace judicious::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kIoError = 3,
};

struct PartitionConfig {
  double alpha = 2.0 / 7.0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  int jobs = 0;
};

// Everything the partition command reports.
struct PartitionRun {
  HighLowSplit split;
  HighPartition high;
  EdgeProfile profile;
  QTriple q;
  bool degenerate = false;  // m == e3, q fixed to (1, 1, 0)
  FullPartition best;
  ConcentrationParams concentration;
};

PartitionRun run_partition(const Hypergraph& h, const PartitionConfig& config);

void write_partition(std::ostream& out, const FullPartition& p);
void write_summary(std::ostream& out, const Hypergraph& h, const PartitionConfig& config, const PartitionRun& run);
std::string summary_json(const Hypergraph& h, const PartitionConfig& config, const PartitionRun& run);

// Full command line, argv[0] included. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace judicious::cli
