#ifndef DGCLIQUE_CORE_HPP
#define DGCLIQUE_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dgclique {

using Timestamp = std::int64_t;

// Dense vertex index assigned at ingestion. Index order matches label order.
using VertexId = std::uint32_t;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<VertexId>;

struct TimeInterval {
  Timestamp start = 0;
  Timestamp end = 0;

  Timestamp duration() const { return end - start; }
  bool contains(const TimeInterval& other) const {
    return start <= other.start && other.end <= end;
  }

  friend auto operator<=>(const TimeInterval&, const TimeInterval&) = default;
};

struct Link {
  VertexId u = 0;
  VertexId v = 0;
  Timestamp t = 0;

  // Orders the endpoints so that u < v.
  Link canonical() const {
    return u <= v ? *this : Link{v, u, t};
  }

  friend auto operator<=>(const Link&, const Link&) = default;
};

struct Clique {
  VertexSet members;
  TimeInterval interval;

  friend auto operator<=>(const Clique&, const Clique&) = default;
};

// Sorted, duplicate-free collection of cliques.
using CliqueSet = std::vector<Clique>;

// Sorts and deduplicates in place.
void normalize(CliqueSet& cliques);

// Link stream with labelled vertices. Links are canonical (u < v), free of
// self-loops, deduplicated and sorted by (u, v, t). Only vertices that are an
// endpoint of some link exist.
class TemporalNetwork {
 public:
  struct LabelledLink {
    std::string u;
    std::string v;
    Timestamp t = 0;
  };

  TemporalNetwork() = default;

  // Canonicalizes, drops self-loops and duplicates, and assigns dense ids in
  // label order (numeric labels compare numerically and sort before others).
  static TemporalNetwork from_labelled(std::span<const LabelledLink> links);

  // Convenience for tests and generators; labels are the decimal ids.
  static TemporalNetwork from_indexed(std::span<const Link> links);

  const std::vector<Link>& links() const { return links_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  bool empty() const { return links_.empty(); }

  // [min t, max t]; nullopt for an empty network.
  std::optional<TimeInterval> lifetime() const { return lifetime_; }

  const std::string& label(VertexId v) const { return labels_.at(v); }

  // Self-loops and duplicate links discarded during construction.
  std::size_t dropped_self_loops() const { return dropped_self_loops_; }
  std::size_t dropped_duplicates() const { return dropped_duplicates_; }

  std::vector<LabelledLink> labelled_links() const;

  friend bool operator==(const TemporalNetwork& a, const TemporalNetwork& b) {
    return a.links_ == b.links_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Link> links_;
  std::vector<std::string> labels_;
  std::optional<TimeInterval> lifetime_;
  std::size_t dropped_self_loops_ = 0;
  std::size_t dropped_duplicates_ = 0;
};

// Strict weak order on labels used for id assignment.
bool label_less(const std::string& a, const std::string& b);

// Occurrence times of every static edge.
class EdgeOccurrenceIndex {
 public:
  struct Entry {
    VertexId u = 0;
    VertexId v = 0;
    std::vector<Timestamp> times;  // strictly increasing

    std::size_t frequency() const { return times.size(); }
  };

  EdgeOccurrenceIndex() = default;
  explicit EdgeOccurrenceIndex(const TemporalNetwork& network);
  // Entries need not be sorted; times are sorted and deduplicated.
  explicit EdgeOccurrenceIndex(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // nullptr when the pair never interacts.
  const Entry* find(VertexId u, VertexId v) const;

 private:
  std::vector<Entry> entries_;  // sorted by (u, v)
};

class StaticGraph {
 public:
  StaticGraph() = default;
  explicit StaticGraph(const EdgeOccurrenceIndex& index);
  StaticGraph(std::size_t vertex_count,
              std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adjacency_.at(v);
  }
  bool adjacent(VertexId u, VertexId v) const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;  // each list sorted
};

// Union of the neighborhoods of `x`, minus `x` itself. Sorted.
VertexSet neighbors_of_set(const StaticGraph& g, std::span<const VertexId> x);

// [max of starts, min of ends], or nullopt when that is not a valid interval.
// Throws std::invalid_argument on an empty list.
std::optional<TimeInterval> interval_intersection(
    std::span<const TimeInterval> intervals);

}  // namespace dgclique

#endif  // DGCLIQUE_CORE_HPP
