#include "reassembly/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace reassembly::graph {

AssemblyGraph build_complete(const Eigen::MatrixXd& features) {
  const int m = static_cast<int>(features.rows());
  if (m < 1) throw EmptyInputError("build_complete: need at least one piece");
  AssemblyGraph g;
  g.num_real = m;
  g.node_features = features;
  g.edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.edges.emplace_back(i, j);
  return g;
}

std::size_t retained_edge_count(int num_real, double prune_fraction) {
  const double complete = static_cast<double>(num_real) * (num_real - 1) / 2.0;
  return static_cast<std::size_t>(std::llround((1.0 - prune_fraction) * complete));
}

namespace {

std::vector<std::pair<int, int>> hamiltonian_cycle_edges(int m, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::size_t>(i) + 1)]);
  std::vector<std::pair<int, int>> out;
  if (m < 2) return out;
  if (m == 2) {
    out.emplace_back(0, 1);
    return out;
  }
  for (int i = 0; i < m; ++i) {
    int a = perm[static_cast<std::size_t>(i)];
    int b = perm[static_cast<std::size_t>((i + 1) % m)];
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

AssemblyGraph sparsify(const AssemblyGraph& g, const SparsifierConfig& cfg) {
  if (g.sparsified) throw ConfigError("sparsify: graph is already sparsified");
  if (cfg.prune_fraction < 0.0 || cfg.prune_fraction >= 1.0)
    throw ConfigError("sparsify: prune_fraction must be in [0, 1)");
  if (cfg.virtual_count < 0) throw ConfigError("sparsify: virtual_count must be >= 0");
  if (cfg.expander_degree < 1) throw ConfigError("sparsify: expander_degree must be >= 1");
  const int m = g.num_real;
  const std::size_t complete = static_cast<std::size_t>(m) * (m - 1) / 2;
  if (g.edges.size() != complete) throw ConfigError("sparsify: input graph must be complete");

  const std::size_t target = retained_edge_count(m, cfg.prune_fraction);
  // One full Hamiltonian cycle keeps the real nodes connected (a single edge
  // suffices for m = 2).
  const std::size_t connectivity_floor = (m >= 3) ? static_cast<std::size_t>(m)
                                                  : static_cast<std::size_t>(m - 1);
  if (cfg.virtual_count == 0 && target < connectivity_floor) {
    throw ConfigError("sparsify: retention below connectivity floor with no virtual nodes");
  }

  Rng rng(cfg.seed);
  std::set<std::pair<int, int>> chosen;
  std::vector<std::pair<int, int>> ordered;  // insertion order; first cycle first

  for (int d = 0; d < cfg.expander_degree; ++d) {
    for (const auto& e : hamiltonian_cycle_edges(m, rng)) {
      if (chosen.insert(e).second) ordered.push_back(e);
    }
  }
  if (ordered.size() > target) {
    // Trim to the target; without virtual nodes the first cycle is protected
    // so the real subgraph stays connected.
    const std::size_t keep = (cfg.virtual_count == 0) ? connectivity_floor : 0;
    for (std::size_t i = ordered.size() - 1; i > keep; --i) {
      const std::size_t j = keep + rng.below(i - keep + 1);
      std::swap(ordered[i], ordered[j]);
    }
    ordered.resize(target);
  } else {
    // Top up with uniformly sampled extra edges to hit the count exactly.
    while (ordered.size() < target) {
      int i = static_cast<int>(rng.below(static_cast<std::size_t>(m)));
      int j = static_cast<int>(rng.below(static_cast<std::size_t>(m)));
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      const std::pair<int, int> e{i, j};
      if (chosen.insert(e).second) ordered.push_back(e);
    }
  }

  AssemblyGraph out;
  out.num_real = m;
  out.node_features = g.node_features;
  std::sort(ordered.begin(), ordered.end());
  out.edges = std::move(ordered);
  out.virtual_count = cfg.virtual_count;
  out.sparsified = true;
  return out;
}

std::size_t edge_memory_estimate(const AssemblyGraph& g) {
  return g.real_edge_count() + g.virtual_edge_count();
}

bool is_connected(const AssemblyGraph& g) {
  const int n = static_cast<int>(g.total_nodes());
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [i, j] : g.edges) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  for (int v = 0; v < g.virtual_count; ++v) {
    const int vi = g.num_real + v;
    for (int i = 0; i < g.num_real; ++i) {
      adj[static_cast<std::size_t>(vi)].push_back(i);
      adj[static_cast<std::size_t>(i)].push_back(vi);
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++count;
        q.push(v);
      }
    }
  }
  return count == n;
}

std::string edges_to_csv(const AssemblyGraph& g) {
  std::ostringstream os;
  os << "src,dst\n";
  for (const auto& [i, j] : g.edges) os << i << ',' << j << '\n';
  for (int v = 0; v < g.virtual_count; ++v)
    for (int i = 0; i < g.num_real; ++i) os << (g.num_real + v) << ',' << i << '\n';
  return os.str();
}

}  // namespace reassembly::graph
