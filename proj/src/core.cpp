#include "dgclique/core.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

namespace dgclique {

namespace {

std::optional<std::int64_t> as_integer(const std::string& s) {
  std::int64_t value = 0;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::optional<TimeInterval> span_of(const std::vector<Link>& links) {
  if (links.empty()) return std::nullopt;
  auto [lo, hi] = std::minmax_element(
      links.begin(), links.end(),
      [](const Link& a, const Link& b) { return a.t < b.t; });
  return TimeInterval{lo->t, hi->t};
}

}  // namespace

void normalize(CliqueSet& cliques) {
  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
}

bool label_less(const std::string& a, const std::string& b) {
  auto ia = as_integer(a);
  auto ib = as_integer(b);
  if (ia && ib) {
    if (*ia != *ib) return *ia < *ib;
    return a < b;  // "07" vs "7"
  }
  if (ia || ib) return ia.has_value();
  return a < b;
}

TemporalNetwork TemporalNetwork::from_labelled(
    std::span<const LabelledLink> links) {
  TemporalNetwork net;

  std::vector<std::string> labels;
  for (const auto& l : links) {
    if (l.u == l.v) continue;
    labels.push_back(l.u);
    labels.push_back(l.v);
  }
  std::sort(labels.begin(), labels.end(), label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::unordered_map<std::string, VertexId> ids;
  ids.reserve(labels.size());
  for (VertexId i = 0; i < labels.size(); ++i) ids.emplace(labels[i], i);

  net.links_.reserve(links.size());
  for (const auto& l : links) {
    if (l.u == l.v) {
      ++net.dropped_self_loops_;
      continue;
    }
    net.links_.push_back(Link{ids.at(l.u), ids.at(l.v), l.t}.canonical());
  }
  std::sort(net.links_.begin(), net.links_.end());
  auto last = std::unique(net.links_.begin(), net.links_.end());
  net.dropped_duplicates_ =
      static_cast<std::size_t>(std::distance(last, net.links_.end()));
  net.links_.erase(last, net.links_.end());

  net.labels_ = std::move(labels);
  net.lifetime_ = span_of(net.links_);
  return net;
}

TemporalNetwork TemporalNetwork::from_indexed(std::span<const Link> links) {
  std::vector<LabelledLink> labelled;
  labelled.reserve(links.size());
  for (const auto& l : links) {
    labelled.push_back({std::to_string(l.u), std::to_string(l.v), l.t});
  }
  return from_labelled(labelled);
}

std::vector<TemporalNetwork::LabelledLink> TemporalNetwork::labelled_links()
    const {
  std::vector<LabelledLink> out;
  out.reserve(links_.size());
  for (const auto& l : links_) {
    out.push_back({labels_[l.u], labels_[l.v], l.t});
  }
  return out;
}

EdgeOccurrenceIndex::EdgeOccurrenceIndex(const TemporalNetwork& network) {
  // Links are already sorted by (u, v, t) and unique.
  for (const auto& l : network.links()) {
    if (entries_.empty() || entries_.back().u != l.u ||
        entries_.back().v != l.v) {
      entries_.push_back(Entry{l.u, l.v, {}});
    }
    entries_.back().times.push_back(l.t);
  }
}

EdgeOccurrenceIndex::EdgeOccurrenceIndex(std::vector<Entry> entries) {
  for (auto& e : entries) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loop in edge index");
    std::sort(e.times.begin(), e.times.end());
    e.times.erase(std::unique(e.times.begin(), e.times.end()), e.times.end());
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  // Merge repeated keys.
  for (auto& e : entries) {
    if (e.times.empty()) continue;
    if (!entries_.empty() && entries_.back().u == e.u &&
        entries_.back().v == e.v) {
      auto& times = entries_.back().times;
      times.insert(times.end(), e.times.begin(), e.times.end());
      std::sort(times.begin(), times.end());
      times.erase(std::unique(times.begin(), times.end()), times.end());
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

const EdgeOccurrenceIndex::Entry* EdgeOccurrenceIndex::find(VertexId u,
                                                            VertexId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), std::pair(u, v),
      [](const Entry& e, const std::pair<VertexId, VertexId>& key) {
        return std::pair(e.u, e.v) < key;
      });
  if (it == entries_.end() || it->u != u || it->v != v) return nullptr;
  return &*it;
}

StaticGraph::StaticGraph(const EdgeOccurrenceIndex& index) {
  VertexId max_id = 0;
  for (const auto& e : index.entries()) max_id = std::max({max_id, e.u, e.v});
  adjacency_.resize(index.size() == 0 ? 0 : max_id + 1);
  for (const auto& e : index.entries()) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

StaticGraph::StaticGraph(std::size_t vertex_count,
                         std::span<const std::pair<VertexId, VertexId>> edges)
    : adjacency_(vertex_count) {
  for (auto [u, v] : edges) {
    if (u == v || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("invalid static edge");
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool StaticGraph::adjacent(VertexId u, VertexId v) const {
  if (u >= adjacency_.size()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

VertexSet neighbors_of_set(const StaticGraph& g, std::span<const VertexId> x) {
  VertexSet out;
  for (VertexId u : x) {
    if (u >= g.vertex_count()) continue;
    const auto& adj = g.neighbors(u);
    out.insert(out.end(), adj.begin(), adj.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  VertexSet members(x.begin(), x.end());
  std::sort(members.begin(), members.end());
  VertexSet result;
  result.reserve(out.size());
  std::set_difference(out.begin(), out.end(), members.begin(), members.end(),
                      std::back_inserter(result));
  return result;
}

std::optional<TimeInterval> interval_intersection(
    std::span<const TimeInterval> intervals) {
  if (intervals.empty()) {
    throw std::invalid_argument("interval_intersection of an empty list");
  }
  TimeInterval acc = intervals.front();
  for (const auto& iv : intervals.subspan(1)) {
    acc.start = std::max(acc.start, iv.start);
    acc.end = std::min(acc.end, iv.end);
  }
  if (acc.start > acc.end) return std::nullopt;
  return acc;
}

}  // namespace dgclique
