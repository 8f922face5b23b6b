#ifndef DGCLIQUE_ENUMERATE_HPP
#define DGCLIQUE_ENUMERATE_HPP

#include <cstddef>

#include "dgclique/bulk.hpp"
#include "dgclique/core.hpp"

namespace dgclique {

struct EnumerationOptions {
  unsigned threads = 1;
  // Restrict intervals to the network lifetime.
  bool clamp_to_lifetime = false;
  std::size_t product_limit = kDefaultProductLimit;
  GenerationObserver observer;
};

// All maximal (delta, gamma)-cliques of `network`, in output order (see
// sort_for_output).
CliqueSet enumerate_cliques(const TemporalNetwork& network, Timestamp delta,
                            int gamma, const EnumerationOptions& options = {});

// Maps maximal cliques onto the lifetime-restricted problem: clamps every
// interval, then drops duplicates and cliques whose clamped interval is
// covered by a strictly larger vertex set.
void clamp_to_lifetime(CliqueSet& cliques, TimeInterval lifetime);

// Cardinality descending, then start, then members, then end.
void sort_for_output(CliqueSet& cliques);

}  // namespace dgclique

#endif  // DGCLIQUE_ENUMERATE_HPP
