#ifndef DGCLIQUE_BULK_HPP
#define DGCLIQUE_BULK_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dgclique/core.hpp"

namespace dgclique {

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept;
};

// Vertex set -> intervals on which it forms a duration-wise maximal clique.
// Entries are written once; readers and the single writer of a key may run
// concurrently.
class CliqueDictionary {
 public:
  using Intervals = std::vector<TimeInterval>;

  CliqueDictionary();
  ~CliqueDictionary();
  CliqueDictionary(CliqueDictionary&&) noexcept;
  CliqueDictionary& operator=(CliqueDictionary&&) noexcept;

  // nullptr when absent. The pointee stays valid for the dictionary's lifetime.
  const Intervals* find(const VertexSet& key) const;
  bool contains(const VertexSet& key) const { return find(key) != nullptr; }

  // Stores `intervals` under `key` unless the key already exists. Returns the
  // stored entry and whether this call created it.
  std::pair<const Intervals*, bool> try_insert(const VertexSet& key,
                                               Intervals intervals);

  // Seeding helper: adds one interval to `key`, dropping contained intervals.
  // Not safe to call concurrently with anything else.
  void add_interval(const VertexSet& key, TimeInterval interval);

  std::size_t size() const;

 private:
  struct Layer;
  Layer& layer_for(std::size_t key_size);
  const Layer* find_layer(std::size_t key_size) const;

  // One map per key size; growing the vector only happens between
  // generations.
  std::vector<std::unique_ptr<Layer>> layers_;
  mutable std::shared_mutex layers_mutex_;
};

class CartesianLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultProductLimit = 1'000'000;

// Intervals on which `x_new` forms a clique, derived from the dictionary
// entries of its |x_new| - 1 sized subsets: intersect one interval from each
// subset in every combination, keep intersections lasting at least `delta`,
// drop duplicates and contained intervals. Empty when a subset is missing.
// Throws CartesianLimitExceeded when a partial product grows past `limit`.
std::vector<TimeInterval> generate_intervals_for(
    const VertexSet& x_new, const CliqueDictionary& dict, Timestamp delta,
    std::size_t limit = kDefaultProductLimit);

struct ExpandResult {
  bool is_max = true;
  CliqueSet generated;
};

// Tries every vertex adjacent to the clique. Cliques one vertex larger are
// generated for vertex sets not yet in `dict` (and recorded there); the clique
// stops being maximal when a larger vertex set holds its exact interval.
ExpandResult expand_clique(const Clique& c, const StaticGraph& g,
                           CliqueDictionary& dict, Timestamp delta,
                           std::size_t limit = kDefaultProductLimit);

// Called at the start of each generation with its (sorted) buffer; the
// cliques of generation i have i + 2 members.
using GenerationObserver =
    std::function<void(std::size_t generation, const CliqueSet& current)>;

struct BulkOptions {
  unsigned threads = 1;
  std::size_t product_limit = kDefaultProductLimit;
  GenerationObserver observer;
};

// Grows the initial size-2 cliques one vertex at a time until no generation
// produces anything new. Returns every maximal clique, sorted.
CliqueSet enumerate_maximal(const CliqueSet& initial, const StaticGraph& g,
                            Timestamp delta, const BulkOptions& options = {});

}  // namespace dgclique

#endif  // DGCLIQUE_BULK_HPP
