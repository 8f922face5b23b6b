#include "dgclique/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgclique::oracle {

TemporalNetwork random_network(std::mt19937_64& rng,
                               const RandomNetworkParams& params) {
  if (params.max_vertices < 2) {
    throw std::invalid_argument("random networks need at least 2 vertices");
  }
  if (params.max_lifetime < 0) {
    throw std::invalid_argument("max_lifetime must be >= 0");
  }
  std::uniform_int_distribution<std::size_t> vertex_dist(2,
                                                         params.max_vertices);
  std::uniform_int_distribution<Timestamp> life_dist(0, params.max_lifetime);
  std::bernoulli_distribution link_dist(std::clamp(params.density, 0.0, 1.0));

  const std::size_t n = vertex_dist(rng);
  const Timestamp span = life_dist(rng);

  std::vector<Link> links;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      for (Timestamp t = 0; t <= span; ++t) {
        if (link_dist(rng)) links.push_back({u, v, t});
      }
    }
  }
  if (links.empty()) {
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    std::uniform_int_distribution<Timestamp> when(0, span);
    VertexId u = pick(rng);
    VertexId v = pick(rng);
    while (v == u) v = pick(rng);
    links.push_back({u, v, when(rng)});
  }
  return TemporalNetwork::from_indexed(links);
}

namespace {

struct Outcome {
  CliqueSet expected;
  CliqueSet actual;
  bool agree() const { return expected == actual; }
};

Outcome run_both(const TemporalNetwork& network, const VerifyConfig& config,
                 const Enumerator& enumerate) {
  OracleOptions options;
  options.budget = config.budget;
  options.clamp_to_lifetime = config.clamp_to_lifetime;
  Outcome o;
  o.expected =
      enumerate_maximal_bruteforce(network, config.delta, config.gamma, options);
  o.actual = enumerate(network, config.delta, config.gamma);
  normalize(o.actual);
  return o;
}

VerifyFailure shrink(std::size_t trial, const TemporalNetwork& network,
                     const VerifyConfig& config, const Enumerator& enumerate) {
  auto links = network.labelled_links();
  bool progress = true;
  while (progress && links.size() > 1) {
    progress = false;
    for (std::size_t i = 0; i < links.size(); ++i) {
      auto candidate = links;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
      auto net = TemporalNetwork::from_labelled(candidate);
      if (!run_both(net, config, enumerate).agree()) {
        links = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  VerifyFailure failure;
  failure.trial = trial;
  failure.network = TemporalNetwork::from_labelled(links);
  auto o = run_both(failure.network, config, enumerate);
  failure.expected = std::move(o.expected);
  failure.actual = std::move(o.actual);
  return failure;
}

}  // namespace

VerifyReport verify_against_oracle(const VerifyConfig& config,
                                   const Enumerator& enumerate) {
  if (config.densities.empty()) {
    throw std::invalid_argument("at least one density level is required");
  }
  VerifyReport report;
  std::mt19937_64 rng(config.seed);
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    RandomNetworkParams params;
    params.max_vertices = config.budget.max_vertices;
    params.max_lifetime = config.budget.max_lifetime;
    params.density = config.densities[trial % config.densities.size()];
    auto network = random_network(rng, params);

    ++report.trials_run;
    if (run_both(network, config, enumerate).agree()) continue;
    ++report.mismatches;
    if (!report.first_failure) {
      report.first_failure = shrink(trial, network, config, enumerate);
    }
  }
  return report;
}

}  // namespace dgclique::oracle
