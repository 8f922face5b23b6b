#ifndef DGCLIQUE_VERIFY_HPP
#define DGCLIQUE_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "dgclique/core.hpp"
#include "dgclique/oracle.hpp"

namespace dgclique::oracle {

struct RandomNetworkParams {
  std::size_t max_vertices = 6;
  Timestamp max_lifetime = 20;
  // Probability of a link for each vertex pair and time unit.
  double density = 0.3;
};

// Vertex count is uniform in [2, max_vertices] and the observation window in
// [0, max_lifetime]; never returns an empty network.
TemporalNetwork random_network(std::mt19937_64& rng,
                               const RandomNetworkParams& params);

using Enumerator =
    std::function<CliqueSet(const TemporalNetwork&, Timestamp delta, int gamma)>;

struct VerifyConfig {
  Timestamp delta = 3;
  int gamma = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  OracleBudget budget{6, 20};
  // Trial i uses densities[i % size].
  std::vector<double> densities{0.3};
  bool clamp_to_lifetime = false;
};

struct VerifyFailure {
  std::size_t trial = 0;
  TemporalNetwork network;  // shrunk to a minimal failing link set
  CliqueSet expected;
  CliqueSet actual;
};

struct VerifyReport {
  std::size_t trials_run = 0;
  std::size_t mismatches = 0;
  std::optional<VerifyFailure> first_failure;
};

// Compares `enumerate` against the brute-force oracle on random networks.
// The first mismatching network is shrunk by removing links one at a time
// while the mismatch persists.
VerifyReport verify_against_oracle(const VerifyConfig& config,
                                   const Enumerator& enumerate);

}  // namespace dgclique::oracle

#endif  // DGCLIQUE_VERIFY_HPP
