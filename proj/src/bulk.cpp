#include "dgclique/bulk.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace dgclique {

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  // FNV-1a over the ids.
  std::size_t h = 1469598103934665603ull;
  for (VertexId v : s) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

struct CliqueDictionary::Layer {
  mutable std::shared_mutex mutex;
  std::unordered_map<VertexSet, Intervals, VertexSetHash> entries;
};

CliqueDictionary::CliqueDictionary() = default;
CliqueDictionary::~CliqueDictionary() = default;
CliqueDictionary::CliqueDictionary(CliqueDictionary&& other) noexcept
    : layers_(std::move(other.layers_)) {}
CliqueDictionary& CliqueDictionary::operator=(
    CliqueDictionary&& other) noexcept {
  layers_ = std::move(other.layers_);
  return *this;
}

const CliqueDictionary::Layer* CliqueDictionary::find_layer(
    std::size_t key_size) const {
  std::shared_lock lock(layers_mutex_);
  if (key_size >= layers_.size()) return nullptr;
  return layers_[key_size].get();
}

CliqueDictionary::Layer& CliqueDictionary::layer_for(std::size_t key_size) {
  {
    std::shared_lock lock(layers_mutex_);
    if (key_size < layers_.size() && layers_[key_size]) {
      return *layers_[key_size];
    }
  }
  std::unique_lock lock(layers_mutex_);
  if (key_size >= layers_.size()) layers_.resize(key_size + 1);
  if (!layers_[key_size]) layers_[key_size] = std::make_unique<Layer>();
  return *layers_[key_size];
}

const CliqueDictionary::Intervals* CliqueDictionary::find(
    const VertexSet& key) const {
  const Layer* layer = find_layer(key.size());
  if (layer == nullptr) return nullptr;
  std::shared_lock lock(layer->mutex);
  auto it = layer->entries.find(key);
  return it == layer->entries.end() ? nullptr : &it->second;
}

std::pair<const CliqueDictionary::Intervals*, bool>
CliqueDictionary::try_insert(const VertexSet& key, Intervals intervals) {
  Layer& layer = layer_for(key.size());
  std::unique_lock lock(layer.mutex);
  auto [it, inserted] = layer.entries.try_emplace(key, std::move(intervals));
  return {&it->second, inserted};
}

void CliqueDictionary::add_interval(const VertexSet& key,
                                    TimeInterval interval) {
  Layer& layer = layer_for(key.size());
  auto& list = layer.entries[key];
  for (const auto& existing : list) {
    if (existing.contains(interval)) return;
  }
  std::erase_if(list, [&](const TimeInterval& existing) {
    return interval.contains(existing);
  });
  list.insert(std::upper_bound(list.begin(), list.end(), interval), interval);
}

std::size_t CliqueDictionary::size() const {
  std::shared_lock lock(layers_mutex_);
  std::size_t n = 0;
  for (const auto& layer : layers_) {
    if (!layer) continue;
    std::shared_lock inner(layer->mutex);
    n += layer->entries.size();
  }
  return n;
}

namespace {

// Keeps only intervals not contained in another one; sorted.
void drop_contained(std::vector<TimeInterval>& ivs) {
  std::sort(ivs.begin(), ivs.end(), [](const auto& a, const auto& b) {
    return a.start != b.start ? a.start < b.start : a.end > b.end;
  });
  std::vector<TimeInterval> kept;
  kept.reserve(ivs.size());
  for (const auto& iv : ivs) {
    // Sorted by start asc, end desc: iv is contained in some earlier interval
    // iff it ends no later than the furthest end seen so far.
    if (!kept.empty() && iv.end <= kept.back().end) continue;
    kept.push_back(iv);
  }
  ivs = std::move(kept);
}

}  // namespace

std::vector<TimeInterval> generate_intervals_for(const VertexSet& x_new,
                                                 const CliqueDictionary& dict,
                                                 Timestamp delta,
                                                 std::size_t limit) {
  std::vector<const CliqueDictionary::Intervals*> lists;
  lists.reserve(x_new.size());
  VertexSet subset(x_new.size() - 1);
  for (std::size_t skip = 0; skip < x_new.size(); ++skip) {
    std::copy(x_new.begin(), x_new.begin() + skip, subset.begin());
    std::copy(x_new.begin() + skip + 1, x_new.end(),
              subset.begin() + skip);
    const auto* entry = dict.find(subset);
    if (entry == nullptr || entry->empty()) return {};
    lists.push_back(entry);
  }
  std::sort(lists.begin(), lists.end(),
            [](const auto* a, const auto* b) { return a->size() < b->size(); });

  // Folds the cartesian product one factor at a time. A partial intersection
  // shorter than delta cannot recover, so it is pruned early.
  std::vector<TimeInterval> partial;
  for (const auto& iv : *lists.front()) {
    if (iv.duration() >= delta) partial.push_back(iv);
  }
  for (std::size_t k = 1; k < lists.size() && !partial.empty(); ++k) {
    const auto& factor = *lists[k];
    if (partial.size() * factor.size() > limit) {
      throw CartesianLimitExceeded(
          "interval product for a vertex set of size " +
          std::to_string(x_new.size()) + " exceeds " + std::to_string(limit) +
          " tuples");
    }
    std::vector<TimeInterval> next;
    for (const auto& p : partial) {
      for (const auto& q : factor) {
        TimeInterval both{std::max(p.start, q.start), std::min(p.end, q.end)};
        if (both.start <= both.end && both.duration() >= delta) {
          next.push_back(both);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    partial = std::move(next);
  }
  drop_contained(partial);
  return partial;
}

ExpandResult expand_clique(const Clique& c, const StaticGraph& g,
                           CliqueDictionary& dict, Timestamp delta,
                           std::size_t limit) {
  ExpandResult out;
  VertexSet x_new;
  x_new.reserve(c.members.size() + 1);
  for (VertexId v : neighbors_of_set(g, c.members)) {
    // A vertex missing an edge to some member leaves a subset of x_new
    // without dictionary entries.
    bool adjacent_to_all = std::all_of(
        c.members.begin(), c.members.end(),
        [&](VertexId m) { return g.adjacent(m, v); });
    if (!adjacent_to_all) continue;

    x_new.assign(c.members.begin(), c.members.end());
    x_new.insert(std::upper_bound(x_new.begin(), x_new.end(), v), v);

    if (const auto* existing = dict.find(x_new)) {
      if (std::find(existing->begin(), existing->end(), c.interval) !=
          existing->end()) {
        out.is_max = false;
      }
      continue;
    }
    auto [entry, inserted] =
        dict.try_insert(x_new, generate_intervals_for(x_new, dict, delta, limit));
    for (const auto& iv : *entry) {
      if (inserted) out.generated.push_back(Clique{x_new, iv});
      if (iv == c.interval) out.is_max = false;
    }
  }
  return out;
}

CliqueSet enumerate_maximal(const CliqueSet& initial, const StaticGraph& g,
                            Timestamp delta, const BulkOptions& options) {
  CliqueDictionary dict;
  for (const auto& c : initial) dict.add_interval(c.members, c.interval);

  CliqueSet current = initial;
  normalize(current);
  CliqueSet result;

  auto expand_range = [&](std::size_t begin, std::size_t end,
                          CliqueSet& maximal, CliqueSet& generated) {
    for (std::size_t i = begin; i < end; ++i) {
      auto r = expand_clique(current[i], g, dict, delta, options.product_limit);
      if (r.is_max) maximal.push_back(current[i]);
      generated.insert(generated.end(), r.generated.begin(),
                       r.generated.end());
    }
  };

  for (std::size_t generation = 0; !current.empty(); ++generation) {
    if (options.observer) options.observer(generation, current);

    CliqueSet next;
    const unsigned threads = std::max(
        1u, std::min<unsigned>(options.threads,
                               static_cast<unsigned>(current.size())));
    if (threads == 1) {
      expand_range(0, current.size(), result, next);
    } else {
      std::vector<CliqueSet> maximal(threads), generated(threads);
      std::vector<std::exception_ptr> errors(threads);
      {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (current.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
          const std::size_t begin = std::min(current.size(), t * chunk);
          const std::size_t end = std::min(current.size(), begin + chunk);
          pool.emplace_back([&, t, begin, end] {
            try {
              expand_range(begin, end, maximal[t], generated[t]);
            } catch (...) {
              errors[t] = std::current_exception();
            }
          });
        }
      }
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
      for (unsigned t = 0; t < threads; ++t) {
        result.insert(result.end(), maximal[t].begin(), maximal[t].end());
        next.insert(next.end(), generated[t].begin(), generated[t].end());
      }
    }
    normalize(next);
    current = std::move(next);
  }
  normalize(result);
  return result;
}

}  // namespace dgclique
