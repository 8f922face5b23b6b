#include "dgclique/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dgclique::oracle {

bool is_dg_clique(const TemporalNetwork& network, std::span<const VertexId> x,
                  TimeInterval iv, Timestamp delta, int gamma) {
  if (x.size() < 2 || iv.start > iv.end) return false;
  const Timestamp last_tau = std::max(iv.end - delta, iv.start);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const VertexId u = std::min(x[i], x[j]);
      const VertexId v = std::max(x[i], x[j]);
      if (u == v) return false;
      std::vector<Timestamp> times;
      for (const auto& l : network.links()) {
        if (l.u == u && l.v == v) times.push_back(l.t);
      }
      for (Timestamp tau = iv.start; tau <= last_tau; ++tau) {
        const Timestamp hi = std::min(tau + delta, iv.end);
        auto n = std::count_if(times.begin(), times.end(), [&](Timestamp t) {
          return tau <= t && t <= hi;
        });
        if (n < gamma) return false;
      }
    }
  }
  return true;
}

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaskBits = 24;

struct CliqueFlags {
  bool vertex_extensible = false;
  bool left_extensible = false;
  bool right_extensible = false;
};

// Per-pair window tables over [base, top]; candidate endpoints lie in
// [lo, hi] = [base + 1, top - 1] so one-unit extensions stay inside.
class PairTables {
 public:
  PairTables(const TemporalNetwork& network, Timestamp lo, Timestamp hi,
             Timestamp delta, int gamma)
      : n_(network.vertex_count()),
        base_(lo - 1),
        top_(hi + 1),
        delta_(delta),
        gamma_(gamma),
        counts_(n_ * n_),
        bad_(n_ * n_) {
    const auto width = static_cast<std::size_t>(top_ - base_ + 1);
    for (auto& c : counts_) c.assign(width + 1, 0);
    for (const auto& l : network.links()) {
      ++counts_[l.u * n_ + l.v][static_cast<std::size_t>(l.t - base_) + 1];
    }
    for (std::size_t p = 0; p < counts_.size(); ++p) {
      auto& c = counts_[p];
      for (std::size_t k = 1; k < c.size(); ++k) c[k] += c[k - 1];
      // bad_[p][k]: taus in [base, base + k) whose delta window is short.
      auto& b = bad_[p];
      b.assign(width + 1, 0);
      for (std::size_t k = 0; k < width; ++k) {
        const Timestamp tau = base_ + static_cast<Timestamp>(k);
        b[k + 1] = b[k] + (count(p, tau, tau + delta_) < gamma_ ? 1 : 0);
      }
    }
  }

  bool pair_ok(VertexId u, VertexId v, Timestamp a, Timestamp b) const {
    const std::size_t p = std::min(u, v) * n_ + std::max(u, v);
    if (b - a <= delta_) return count(p, a, b) >= gamma_;
    const Timestamp last_tau = b - delta_;
    return bad_[p][index(last_tau) + 1] - bad_[p][index(a)] == 0;
  }

  bool clique_ok(Mask mask, Timestamp a, Timestamp b) const {
    for (Mask m = mask; m != 0; m &= m - 1) {
      const auto u = static_cast<VertexId>(std::countr_zero(m));
      for (Mask rest = m & (m - 1); rest != 0; rest &= rest - 1) {
        const auto v = static_cast<VertexId>(std::countr_zero(rest));
        if (!pair_ok(u, v, a, b)) return false;
      }
    }
    return true;
  }

 private:
  std::size_t index(Timestamp t) const {
    return static_cast<std::size_t>(t - base_);
  }

  // Links of pair p in [x, y], clipped to the table range.
  int count(std::size_t p, Timestamp x, Timestamp y) const {
    x = std::max(x, base_);
    y = std::min(y, top_);
    if (x > y) return 0;
    return counts_[p][index(y) + 1] - counts_[p][index(x)];
  }

  std::size_t n_;
  Timestamp base_;
  Timestamp top_;
  Timestamp delta_;
  int gamma_;
  std::vector<std::vector<int>> counts_;
  std::vector<std::vector<int>> bad_;
};

using CliqueVisitor =
    std::function<void(Mask, TimeInterval, const CliqueFlags&)>;

void visit_all_cliques(const TemporalNetwork& network, Timestamp delta,
                       int gamma, const OracleOptions& options,
                       const CliqueVisitor& visit) {
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  if (network.empty()) return;

  const std::size_t n = network.vertex_count();
  const TimeInterval life = *network.lifetime();
  if (n > options.budget.max_vertices) {
    throw BudgetExceeded("network has " + std::to_string(n) +
                         " vertices; oracle budget allows " +
                         std::to_string(options.budget.max_vertices));
  }
  if (life.duration() > options.budget.max_lifetime) {
    throw BudgetExceeded("network lifetime is " +
                         std::to_string(life.duration()) +
                         "; oracle budget allows " +
                         std::to_string(options.budget.max_lifetime));
  }
  if (n > kMaskBits) {
    throw BudgetExceeded("oracle supports at most " +
                         std::to_string(kMaskBits) + " vertices");
  }

  const bool clamp = options.clamp_to_lifetime;
  const Timestamp lo = clamp ? life.start : life.start - delta;
  const Timestamp hi = clamp ? life.end : life.end + delta;
  PairTables tables(network, lo, hi, delta, gamma);

  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<Mask> adj(n);
  std::vector<char> is_clique(std::size_t{full} + 1);

  for (Timestamp a = lo; a <= hi; ++a) {
    for (Timestamp b = a; b <= hi; ++b) {
      bool any = false;
      for (VertexId u = 0; u < n; ++u) {
        adj[u] = 0;
        for (VertexId v = 0; v < n; ++v) {
          if (u != v && tables.pair_ok(u, v, a, b)) adj[u] |= Mask{1} << v;
        }
        any = any || adj[u] != 0;
      }
      if (!any) continue;

      // Singletons count as cliques here so the recurrence can build on them.
      is_clique[0] = 1;
      for (Mask mask = 1; mask <= full; ++mask) {
        const Mask low = mask & (~mask + 1);
        const Mask rest = mask ^ low;
        const auto u = static_cast<std::size_t>(std::countr_zero(low));
        is_clique[mask] = is_clique[rest] && (adj[u] & rest) == rest;
      }

      for (Mask mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2 || !is_clique[mask]) continue;
        CliqueFlags flags;
        for (Mask out = full & ~mask; out != 0; out &= out - 1) {
          const Mask bit = out & (~out + 1);
          if (is_clique[mask | bit]) {
            flags.vertex_extensible = true;
            break;
          }
        }
        if (!clamp || a - 1 >= life.start) {
          flags.left_extensible = tables.clique_ok(mask, a - 1, b);
        }
        if (!clamp || b + 1 <= life.end) {
          flags.right_extensible = tables.clique_ok(mask, a, b + 1);
        }
        visit(mask, TimeInterval{a, b}, flags);
      }
    }
  }
}

VertexSet members_of(Mask mask) {
  VertexSet out;
  for (Mask m = mask; m != 0; m &= m - 1) {
    out.push_back(static_cast<VertexId>(std::countr_zero(m)));
  }
  return out;
}

}  // namespace

CliqueSet enumerate_maximal_bruteforce(const TemporalNetwork& network,
                                       Timestamp delta, int gamma,
                                       const OracleOptions& options) {
  CliqueSet out;
  visit_all_cliques(network, delta, gamma, options,
                    [&](Mask mask, TimeInterval iv, const CliqueFlags& f) {
                      if (f.vertex_extensible || f.left_extensible ||
                          f.right_extensible) {
                        return;
                      }
                      out.push_back(Clique{members_of(mask), iv});
                    });
  normalize(out);
  return out;
}

CliqueSet duration_maximal_bruteforce(const TemporalNetwork& network,
                                      std::size_t size, Timestamp delta,
                                      int gamma, const OracleOptions& options) {
  CliqueSet out;
  visit_all_cliques(network, delta, gamma, options,
                    [&](Mask mask, TimeInterval iv, const CliqueFlags& f) {
                      if (static_cast<std::size_t>(std::popcount(mask)) !=
                              size ||
                          f.left_extensible || f.right_extensible) {
                        return;
                      }
                      out.push_back(Clique{members_of(mask), iv});
                    });
  normalize(out);
  return out;
}

}  // namespace dgclique::oracle
