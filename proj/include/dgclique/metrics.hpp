#ifndef DGCLIQUE_METRICS_HPP
#define DGCLIQUE_METRICS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgclique/bulk.hpp"
#include "dgclique/core.hpp"

namespace dgclique {

struct CliqueSummary {
  std::size_t count = 0;
  std::size_t max_cardinality = 0;
  Timestamp max_duration = 0;

  friend bool operator==(const CliqueSummary&, const CliqueSummary&) = default;
};

// Zeros for an empty set.
CliqueSummary summarize(const CliqueSet& cliques);

struct SweepRecord {
  Timestamp delta = 0;
  int gamma = 1;
  std::size_t clique_count = 0;
  std::size_t max_cardinality = 0;
  Timestamp max_duration = 0;
  // Left empty when cells run in parallel.
  std::optional<double> wall_time_s;
  std::optional<std::size_t> peak_mem_bytes;
  std::string note;
};

struct SweepOptions {
  unsigned threads = 1;  // per enumeration
  bool clamp_to_lifetime = false;
  std::size_t product_limit = kDefaultProductLimit;
  // Runs cells concurrently on `cell_workers` threads and drops timings.
  bool parallel_cells = false;
  unsigned cell_workers = 2;
};

inline constexpr const char* kGammaExceedsNote = "gamma exceeds delta+1";

// One record per (delta, gamma) in row-major grid order (deltas outer).
// Cells with gamma > delta + 1 are skipped with a zero record: a window of
// delta + 1 integer instants cannot hold more distinct link times. A cell that
// fails records the error in `note`; the sweep carries on.
std::vector<SweepRecord> run_sweep(const TemporalNetwork& network,
                                   std::span<const Timestamp> deltas,
                                   std::span<const int> gammas,
                                   const SweepOptions& options = {});

inline constexpr const char* kSweepCsvHeader =
    "delta,gamma,clique_count,max_cardinality,max_duration,wall_time_s,"
    "peak_mem_bytes,note";

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

// Peak resident set size of this process so far, in bytes. Best effort.
std::size_t peak_memory_bytes();

}  // namespace dgclique

#endif  // DGCLIQUE_METRICS_HPP
