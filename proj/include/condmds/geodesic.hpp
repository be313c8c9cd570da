#pragma once

#include <cstddef>
#include <vector>

#include "condmds/smacof.hpp"
#include "condmds/weights.hpp"

namespace condmds {

enum class NeighborhoodMode { knn, epsilon };

struct NeighborhoodSpec {
  NeighborhoodMode mode = NeighborhoodMode::knn;
  int k = 5;
  double epsilon = 0.0;
  bool mutual = false;  // knn only: keep an edge only if both endpoints select each other

  static NeighborhoodSpec knn(int k, bool mutual = false) { return {NeighborhoodMode::knn, k, 0.0, mutual}; }
  static NeighborhoodSpec radius(double eps) { return {NeighborhoodMode::epsilon, 0, eps, false}; }

  void validate(Eigen::Index n) const;
};

struct Edge {
  std::size_t i;
  std::size_t j;  // i < j
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph; edges are sorted by (i, j) and carry delta_ij.
struct NeighborhoodGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  std::vector<std::size_t> degrees() const;
  bool has_edge(std::size_t a, std::size_t b) const;
  /// Connected components, each sorted ascending, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components() const;
};

struct GraphDistances {
  Matrix dg;
};

/// Ties among equal dissimilarities are broken by ascending index.
NeighborhoodGraph build_graph(const DissimilarityMatrix& d, const NeighborhoodSpec& spec);

/// Exact all-pairs shortest paths (Dijkstra from every source).
/// Throws DisconnectedGraphError when some pair has no path.
GraphDistances shortest_paths(const NeighborhoodGraph& g);

/// Induced subgraph on `keep` (ascending), with nodes renumbered 0..keep.size()-1.
NeighborhoodGraph induced_subgraph(const NeighborhoodGraph& g, const std::vector<std::size_t>& keep);

struct IsomapOptions {
  /// Fit only the largest connected component instead of failing.
  bool largest_component = false;
};

struct IsomapReport {
  FitReport fit;
  GraphDistances geodesics;
  std::vector<std::size_t> kept;     // input indices that were embedded
  std::vector<std::size_t> dropped;  // input indices outside the largest component
};

/// Conditional ISOMAP: condMDS on graph distances. Data-dependent weights are
/// computed on the graph distances, not on the input dissimilarities.
IsomapReport condisomap_fit(const DissimilarityMatrix& d, const AuxiliaryMatrix& v, const WeightSpec& w,
                            const NeighborhoodSpec& spec, const FitConfig& cfg, const IsomapOptions& opts = {});

/// Same, with an explicit weight matrix used as given.
IsomapReport condisomap_fit(const DissimilarityMatrix& d, const AuxiliaryMatrix& v, const WeightMatrix& w,
                            const NeighborhoodSpec& spec, const FitConfig& cfg, const IsomapOptions& opts = {});

}  // namespace condmds
