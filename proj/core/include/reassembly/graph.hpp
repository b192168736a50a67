#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reassembly/errors.hpp"
#include "reassembly/rng.hpp"

namespace reassembly::graph {

/// Piece graph: M real nodes carrying features and (externally managed)
/// poses, an undirected edge list over real nodes, and an optional block of
/// virtual nodes that are star-connected to every real node.
struct AssemblyGraph {
  int num_real = 0;
  Eigen::MatrixXd node_features;             // num_real x d
  std::vector<std::pair<int, int>> edges;    // undirected, i < j, real nodes only
  int virtual_count = 0;
  bool sparsified = false;

  std::size_t real_edge_count() const { return edges.size(); }
  std::size_t virtual_edge_count() const {
    return static_cast<std::size_t>(virtual_count) * static_cast<std::size_t>(num_real);
  }
  std::size_t total_nodes() const { return static_cast<std::size_t>(num_real + virtual_count); }
};

struct SparsifierConfig {
  double prune_fraction = 0.0;  // in [0, 1)
  int virtual_count = 0;
  int expander_degree = 3;
  std::uint64_t seed = 0;
};

/// Complete graph over the given per-piece feature rows.
AssemblyGraph build_complete(const Eigen::MatrixXd& features);

/// Number of real edges retained for M nodes under a prune fraction.
std::size_t retained_edge_count(int num_real, double prune_fraction);

/// Expander-style sparsification: the edge set is drawn from the union of
/// `expander_degree` random Hamiltonian cycles, topped up with uniform extra
/// edges to hit the retention count exactly. With virtual nodes present any
/// retained set keeps the graph connected (virtual stars); with none, the
/// first cycle is kept whole, so retention below M is a configuration error.
AssemblyGraph sparsify(const AssemblyGraph& g, const SparsifierConfig& cfg);

/// Edge-count memory proxy: |real edges| + |virtual star edges|.
std::size_t edge_memory_estimate(const AssemblyGraph& g);

/// BFS connectivity over real nodes plus virtual stars.
bool is_connected(const AssemblyGraph& g);

/// CSV export (src,dst; virtual nodes indexed from num_real).
std::string edges_to_csv(const AssemblyGraph& g);

}  // namespace reassembly::graph
