#include "dgclique/stretch.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace dgclique {

namespace {

class StretchBuffer {
 public:
  StretchBuffer(std::size_t gamma, const StretchBufferObserver& observer)
      : gamma_(gamma), observer_(observer) {}

  std::size_t size() const { return times_.size(); }
  Timestamp front() const { return times_.front(); }

  // Buffer positions are 0-based; these name the entries the run bounds use.
  Timestamp first_gamma_th() const { return times_[gamma_ - 1]; }
  Timestamp last_gamma_th() const { return times_[times_.size() - gamma_]; }

  void append(Timestamp t) {
    times_.push_back(t);
    notify();
  }

  // Replaces the contents with every occurrence in [now - delta, now].
  void refill(std::span<const Timestamp> seen, Timestamp now,
              Timestamp delta) {
    auto first = std::lower_bound(seen.begin(), seen.end(), now - delta);
    times_.assign(first, seen.end());
    notify();
  }

 private:
  void notify() const {
    if (observer_) observer_(times_);
  }

  std::size_t gamma_;
  const StretchBufferObserver& observer_;
  std::vector<Timestamp> times_;
};

}  // namespace

namespace detail {

std::vector<TimeInterval> stretch_times_with_slack(
    std::span<const Timestamp> times, Timestamp delta, int gamma,
    Timestamp run_slack, const StretchBufferObserver& observer) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  std::vector<TimeInterval> out;
  const auto g = static_cast<std::size_t>(gamma);
  if (times.size() < g) return out;

  StretchBuffer buffer(g, observer);
  auto emit = [&] {
    TimeInterval iv{buffer.first_gamma_th() - delta,
                    buffer.last_gamma_th() + delta};
    if (out.empty() || out.back() != iv) out.push_back(iv);
  };

  buffer.append(times[0]);
  for (std::size_t i = 1; i < times.size(); ++i) {
    const Timestamp now = times[i];
    if (buffer.size() < g) {
      if (now - buffer.front() <= delta) {
        buffer.append(now);
      } else {
        buffer.refill(times.first(i + 1), now, delta);
      }
    } else if (buffer.last_gamma_th() + run_slack + delta >= now) {
      buffer.append(now);
    } else {
      emit();
      buffer.refill(times.first(i + 1), now, delta);
    }
  }
  // Also covers single-occurrence edges, where the loop body never runs.
  if (buffer.size() >= g) emit();
  return out;
}

}  // namespace detail

std::vector<TimeInterval> stretch_times(std::span<const Timestamp> times,
                                        Timestamp delta, int gamma,
                                        const StretchBufferObserver& observer) {
  return detail::stretch_times_with_slack(times, delta, gamma, 1, observer);
}

CliqueSet stretch_edge(VertexId u, VertexId v,
                       std::span<const Timestamp> times, Timestamp delta,
                       int gamma) {
  if (u > v) std::swap(u, v);
  CliqueSet out;
  for (const auto& iv : stretch_times(times, delta, gamma)) {
    out.push_back(Clique{{u, v}, iv});
  }
  return out;
}

CliqueSet stretch_all(const EdgeOccurrenceIndex& index, Timestamp delta,
                      int gamma, unsigned threads) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  const auto& entries = index.entries();

  auto work = [&](std::size_t begin, std::size_t end, CliqueSet& out) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& e = entries[i];
      if (e.frequency() < static_cast<std::size_t>(gamma)) continue;
      auto part = stretch_edge(e.u, e.v, e.times, delta, gamma);
      out.insert(out.end(), part.begin(), part.end());
    }
  };

  CliqueSet result;
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(entries.size())));
  if (threads <= 1) {
    work(0, entries.size(), result);
  } else {
    std::vector<CliqueSet> parts(threads);
    std::vector<std::jthread> pool;
    const std::size_t chunk = (entries.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(entries.size(), t * chunk);
      const std::size_t end = std::min(entries.size(), begin + chunk);
      pool.emplace_back([&, t, begin, end] { work(begin, end, parts[t]); });
    }
    pool.clear();
    for (auto& p : parts) result.insert(result.end(), p.begin(), p.end());
  }
  normalize(result);
  return result;
}

}  // namespace dgclique
