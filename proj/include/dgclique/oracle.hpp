#ifndef DGCLIQUE_ORACLE_HPP
#define DGCLIQUE_ORACLE_HPP

// Brute-force reference for small networks. Nothing here shares code with the
// stretch or bulk phases.

#include <cstddef>
#include <span>
#include <stdexcept>

#include "dgclique/core.hpp"

namespace dgclique::oracle {

struct OracleBudget {
  std::size_t max_vertices = 10;
  Timestamp max_lifetime = 40;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every pair of `x` has at least `gamma` links in [tau, min(tau + delta, end)]
// for every tau in [start, max(end - delta, start)].
bool is_dg_clique(const TemporalNetwork& network, std::span<const VertexId> x,
                  TimeInterval iv, Timestamp delta, int gamma);

struct OracleOptions {
  OracleBudget budget;
  // Intervals must lie within the lifetime, and extensions past it are not
  // considered. Otherwise endpoints range over
  // [min t - delta, max t + delta].
  bool clamp_to_lifetime = false;
};

// All maximal cliques: no vertex can be added on the same interval, and the
// interval cannot grow by one unit on either side.
CliqueSet enumerate_maximal_bruteforce(const TemporalNetwork& network,
                                       Timestamp delta, int gamma,
                                       const OracleOptions& options = {});

// All cliques with exactly `size` members whose interval cannot grow by one
// unit on either side.
CliqueSet duration_maximal_bruteforce(const TemporalNetwork& network,
                                      std::size_t size, Timestamp delta,
                                      int gamma,
                                      const OracleOptions& options = {});

}  // namespace dgclique::oracle

#endif  // DGCLIQUE_ORACLE_HPP
