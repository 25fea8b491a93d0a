#ifndef ZETAKIRCH_RANDOM_GRAPHS_HPP
#define ZETAKIRCH_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>

#include "zetakirch/graph.hpp"

namespace zetakirch {

struct RandomGraphConfig {
  int max_n = 7;
  int max_m = 14;
  bool positive_weights = false;
  bool unit_weights = false;
  bool require_m_ge_n = false;
  bool require_nonzero_kappa = true;  // rejection-sample until kappa_w != 0
};

/// Seeded random connected graph with weights drawn from the pool
/// {±1, ±1/2, ±2, 3, 1/3, 5} (positive subset when requested).
/// mt19937_64 keeps the stream platform independent.
WeightedGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphConfig& cfg);

}  // namespace zetakirch

#endif
