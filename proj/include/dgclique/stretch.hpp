#ifndef DGCLIQUE_STRETCH_HPP
#define DGCLIQUE_STRETCH_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dgclique/core.hpp"

namespace dgclique {

// Called with the scan buffer after every append or refill.
using StretchBufferObserver = std::function<void(std::span<const Timestamp>)>;

// Every duration-wise maximal (delta, gamma) interval of a single static edge
// whose occurrence times are `times` (strictly increasing). Sorted by start.
//
// The scan keeps a buffer of recent occurrences. A run continues while the
// next occurrence is within delta + 1 of the gamma-th last buffered entry;
// when it breaks, the run is emitted as
//   [first gamma-th entry - delta, last gamma-th entry + delta]
// and the buffer is refilled with the occurrences in the trailing delta
// window (current one included).
std::vector<TimeInterval> stretch_times(
    std::span<const Timestamp> times, Timestamp delta, int gamma,
    const StretchBufferObserver& observer = {});

CliqueSet stretch_edge(VertexId u, VertexId v,
                       std::span<const Timestamp> times, Timestamp delta,
                       int gamma);

// Initial clique set: stretch_edge over every edge with frequency >= gamma.
// `threads` > 1 splits edges across worker threads; the result is identical.
CliqueSet stretch_all(const EdgeOccurrenceIndex& index, Timestamp delta,
                      int gamma, unsigned threads = 1);

namespace detail {

// `run_slack` is the tolerance added to delta in the run-continuation test.
// Production code uses 1; other values exist for mutation testing only.
std::vector<TimeInterval> stretch_times_with_slack(
    std::span<const Timestamp> times, Timestamp delta, int gamma,
    Timestamp run_slack, const StretchBufferObserver& observer);

}  // namespace detail

}  // namespace dgclique

#endif  // DGCLIQUE_STRETCH_HPP
