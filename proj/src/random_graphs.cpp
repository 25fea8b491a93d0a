#include "zetakirch/random_graphs.hpp"

#include <algorithm>

#include "zetakirch/errors.hpp"
#include "zetakirch/spanning.hpp"

namespace zetakirch {

namespace {

Rational pick_weight(std::mt19937_64& rng, bool positive, bool unit) {
  if (unit) return Rational(1);
  static const std::pair<int, int> pool[] = {
      {1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {2, 1}, {-2, 1}, {3, 1}, {1, 3}, {5, 1}};
  static const std::pair<int, int> positive_pool[] = {
      {1, 1}, {1, 2}, {2, 1}, {3, 1}, {1, 3}, {5, 1}};
  if (positive) {
    const auto [p, q] = positive_pool[rng() % 6];
    return Rational(p, q);
  }
  const auto [p, q] = pool[rng() % 9];
  return Rational(p, q);
}

}  // namespace

WeightedGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphConfig& cfg) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(cfg.max_n - 1));
    const int full = n * (n - 1) / 2;
    const int lo = cfg.require_m_ge_n ? n : n - 1;
    if (lo > full) continue;
    const int hi = std::min(cfg.max_m, full);
    if (hi < lo) continue;
    const int m = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));

    // Random spanning tree (attach each new vertex to an earlier one), then
    // extra edges drawn from the remaining pairs.
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> used(static_cast<size_t>(n) * n, 0);
    std::vector<std::pair<int, int>> chosen;
    for (int v = 1; v < n; ++v) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(v));
      chosen.push_back({std::min(u, v), std::max(u, v)});
      used[static_cast<size_t>(std::min(u, v)) * n + std::max(u, v)] = 1;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!used[static_cast<size_t>(i) * n + j]) pairs.push_back({i, j});
    for (size_t i = pairs.size(); i > 1; --i)
      std::swap(pairs[i - 1], pairs[rng() % i]);
    for (int e = n - 1; e < m && !pairs.empty(); ++e) {
      chosen.push_back(pairs.back());
      pairs.pop_back();
    }
    std::sort(chosen.begin(), chosen.end());

    std::vector<Edge> edges;
    edges.reserve(chosen.size());
    for (const auto& [u, v] : chosen)
      edges.push_back({u, v, pick_weight(rng, cfg.positive_weights, cfg.unit_weights)});
    WeightedGraph g(n, std::move(edges));
    if (cfg.require_nonzero_kappa && weighted_complexity(g).is_zero()) continue;
    return g;
  }
  throw InternalError("random graph generation failed to meet the constraints");
}

}  // namespace zetakirch
