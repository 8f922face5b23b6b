#include "dgclique/metrics.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "dgclique/enumerate.hpp"

namespace dgclique {

CliqueSummary summarize(const CliqueSet& cliques) {
  CliqueSummary s;
  s.count = cliques.size();
  for (const auto& c : cliques) {
    s.max_cardinality = std::max(s.max_cardinality, c.members.size());
    s.max_duration = std::max(s.max_duration, c.interval.duration());
  }
  return s;
}

std::size_t peak_memory_bytes() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
  // Linux reports kilobytes.
  return static_cast<std::size_t>(usage.ru_maxrss) * 1024;
}

namespace {

SweepRecord run_cell(const TemporalNetwork& network, Timestamp delta,
                     int gamma, const SweepOptions& options, bool timed) {
  SweepRecord rec;
  rec.delta = delta;
  rec.gamma = gamma;
  if (delta < 0 || gamma < 1) {
    rec.note = "error: invalid parameters";
    return rec;
  }
  const auto started = std::chrono::steady_clock::now();
  if (static_cast<Timestamp>(gamma) > delta + 1) {
    rec.note = kGammaExceedsNote;
  } else {
    try {
      EnumerationOptions eo;
      eo.threads = options.threads;
      eo.clamp_to_lifetime = options.clamp_to_lifetime;
      eo.product_limit = options.product_limit;
      auto s = summarize(enumerate_cliques(network, delta, gamma, eo));
      rec.clique_count = s.count;
      rec.max_cardinality = s.max_cardinality;
      rec.max_duration = s.max_duration;
    } catch (const std::exception& e) {
      rec.note = std::string("error: ") + e.what();
    }
  }
  if (timed) {
    rec.wall_time_s = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - started)
                          .count();
    rec.peak_mem_bytes = peak_memory_bytes();
  }
  return rec;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::vector<SweepRecord> run_sweep(const TemporalNetwork& network,
                                   std::span<const Timestamp> deltas,
                                   std::span<const int> gammas,
                                   const SweepOptions& options) {
  struct Cell {
    Timestamp delta;
    int gamma;
  };
  std::vector<Cell> cells;
  for (Timestamp d : deltas) {
    for (int g : gammas) cells.push_back({d, g});
  }
  std::vector<SweepRecord> records(cells.size());

  if (!options.parallel_cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      records[i] = run_cell(network, cells[i].delta, cells[i].gamma, options,
                            /*timed=*/true);
    }
    return records;
  }

  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, options.cell_workers);
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        records[i] = run_cell(network, cells[i].delta, cells[i].gamma,
                              options, /*timed=*/false);
      }
    });
  }
  pool.clear();
  return records;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.delta << ',' << r.gamma << ',' << r.clique_count << ','
        << r.max_cardinality << ',' << r.max_duration << ',';
    if (r.wall_time_s) {
      out << std::scientific << std::setprecision(6) << *r.wall_time_s
          << std::defaultfloat;
    }
    out << ',';
    if (r.peak_mem_bytes) out << *r.peak_mem_bytes;
    out << ',' << csv_field(r.note) << '\n';
  }
}

}  // namespace dgclique
