#include "dgclique/enumerate.hpp"

#include <algorithm>
#include <map>

#include "dgclique/stretch.hpp"

namespace dgclique {

CliqueSet enumerate_cliques(const TemporalNetwork& network, Timestamp delta,
                            int gamma, const EnumerationOptions& options) {
  if (network.empty()) return {};
  EdgeOccurrenceIndex index(network);
  StaticGraph graph(index);
  CliqueSet initial = stretch_all(index, delta, gamma, options.threads);

  BulkOptions bulk;
  bulk.threads = options.threads;
  bulk.product_limit = options.product_limit;
  bulk.observer = options.observer;
  CliqueSet result = enumerate_maximal(initial, graph, delta, bulk);

  if (options.clamp_to_lifetime) clamp_to_lifetime(result, *network.lifetime());
  sort_for_output(result);
  return result;
}

void clamp_to_lifetime(CliqueSet& cliques, TimeInterval lifetime) {
  for (auto& c : cliques) {
    c.interval.start = std::max(c.interval.start, lifetime.start);
    c.interval.end = std::min(c.interval.end, lifetime.end);
  }
  normalize(cliques);

  std::map<TimeInterval, std::vector<const VertexSet*>> by_interval;
  for (const auto& c : cliques) by_interval[c.interval].push_back(&c.members);

  auto covered = [&](const Clique& c) {
    for (const VertexSet* other : by_interval[c.interval]) {
      if (other->size() > c.members.size() &&
          std::includes(other->begin(), other->end(), c.members.begin(),
                        c.members.end())) {
        return true;
      }
    }
    return false;
  };
  CliqueSet kept;
  kept.reserve(cliques.size());
  for (const auto& c : cliques) {
    if (!covered(c)) kept.push_back(c);
  }
  cliques = std::move(kept);
}

void sort_for_output(CliqueSet& cliques) {
  std::sort(cliques.begin(), cliques.end(),
            [](const Clique& a, const Clique& b) {
              if (a.members.size() != b.members.size()) {
                return a.members.size() > b.members.size();
              }
              if (a.interval.start != b.interval.start) {
                return a.interval.start < b.interval.start;
              }
              if (a.members != b.members) return a.members < b.members;
              return a.interval.end < b.interval.end;
            });
}

}  // namespace dgclique
