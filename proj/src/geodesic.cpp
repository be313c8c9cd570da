#include "condmds/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

#include "condmds/errors.hpp"

namespace condmds {

void NeighborhoodSpec::validate(Eigen::Index n) const {
  if (mode == NeighborhoodMode::knn) {
    if (k < 1 || k > n - 1) {
      throw InputError("neighborhood: k must be in [1, " + std::to_string(n - 1) + "] (got " + std::to_string(k) + ")");
    }
  } else if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("neighborhood: epsilon must be a positive finite number");
  }
}

std::vector<std::size_t> NeighborhoodGraph::degrees() const {
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg;
}

bool NeighborhoodGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), Edge{a, b, 0.0},
                            [](const Edge& x, const Edge& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
}

std::vector<std::vector<std::size_t>> NeighborhoodGraph::components() const {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    const std::size_t a = find(e.i), b = find(e.j);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t root = find(x);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(x);
  }
  return out;
}

NeighborhoodGraph build_graph(const DissimilarityMatrix& d, const NeighborhoodSpec& spec) {
  const Eigen::Index n = d.n();
  spec.validate(n);
  NeighborhoodGraph g;
  g.n = static_cast<std::size_t>(n);

  if (spec.mode == NeighborhoodMode::epsilon) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (d(i, j) <= spec.epsilon) g.edges.push_back({std::size_t(i), std::size_t(j), d(i, j)});
    return g;
  }

  // selected(i, j): j is among the k nearest neighbors of i.
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> selected =
      Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
  std::vector<Eigen::Index> order;
  for (Eigen::Index i = 0; i < n; ++i) {
    order.clear();
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) order.push_back(j);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return d(i, a) < d(i, b); });
    for (int r = 0; r < spec.k; ++r) selected(i, order[r]) = true;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const bool keep = spec.mutual ? (selected(i, j) && selected(j, i)) : (selected(i, j) || selected(j, i));
      if (keep) g.edges.push_back({std::size_t(i), std::size_t(j), d(i, j)});
    }
  }
  return g;
}

namespace {

std::string describe_components(const std::vector<std::vector<std::size_t>>& comps) {
  std::string s;
  for (const auto& c : comps) {
    s += " {";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(c[k] + 1);
    }
    s += "}";
  }
  return s;
}

}  // namespace

GraphDistances shortest_paths(const NeighborhoodGraph& g) {
  const auto comps = g.components();
  if (comps.size() > 1) {
    throw DisconnectedGraphError("neighborhood graph is disconnected into " + std::to_string(comps.size()) +
                                     " components:" + describe_components(comps) +
                                     "; increase k or epsilon",
                                 comps);
  }

  const std::size_t n = g.n;
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const Edge& e : g.edges) {
    adj[e.i].emplace_back(e.j, e.weight);
    adj[e.j].emplace_back(e.i, e.weight);
  }

  constexpr double inf = std::numeric_limits<double>::infinity();
  Matrix dg = Matrix::Constant(Eigen::Index(n), Eigen::Index(n), inf);
  using Item = std::pair<double, std::size_t>;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<double> dist(n, inf);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0.0;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du > dist[u]) continue;
      for (const auto& [v, w] : adj[u]) {
        const double nd = du + w;
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.emplace(nd, v);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) dg(Eigen::Index(s), Eigen::Index(t)) = dist[t];
  }
  // Both directions are computed independently; take the smaller so the result is exactly symmetric.
  dg = dg.cwiseMin(dg.transpose()).eval();
  return {std::move(dg)};
}

NeighborhoodGraph induced_subgraph(const NeighborhoodGraph& g, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> index(g.n, g.n);
  for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = k;
  NeighborhoodGraph out;
  out.n = keep.size();
  for (const Edge& e : g.edges) {
    if (index[e.i] != g.n && index[e.j] != g.n) out.edges.push_back({index[e.i], index[e.j], e.weight});
  }
  return out;
}

namespace {

Matrix select_rows_cols(const Matrix& m, const std::vector<std::size_t>& keep) {
  const Eigen::Index k = Eigen::Index(keep.size());
  Matrix out(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) out(a, b) = m(Eigen::Index(keep[a]), Eigen::Index(keep[b]));
  return out;
}

Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& keep) {
  Matrix out(Eigen::Index(keep.size()), m.cols());
  for (std::size_t a = 0; a < keep.size(); ++a) out.row(Eigen::Index(a)) = m.row(Eigen::Index(keep[a]));
  return out;
}

struct Reduced {
  GraphDistances geodesics;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
};

Reduced geodesics_for(const DissimilarityMatrix& d, const NeighborhoodSpec& spec, const IsomapOptions& opts) {
  NeighborhoodGraph graph = build_graph(d, spec);
  Reduced r;
  auto comps = graph.components();
  if (comps.size() > 1 && opts.largest_component) {
    // Largest first; on equal size the one holding the smallest index wins.
    std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    r.kept = comps.front();
    for (std::size_t c = 1; c < comps.size(); ++c) r.dropped.insert(r.dropped.end(), comps[c].begin(), comps[c].end());
    std::sort(r.dropped.begin(), r.dropped.end());
    if (r.kept.size() < 2) throw InputError("condisomap: largest component has fewer than 2 points");
    graph = induced_subgraph(graph, r.kept);
  } else {
    r.kept.resize(graph.n);
    std::iota(r.kept.begin(), r.kept.end(), std::size_t{0});
  }
  r.geodesics = shortest_paths(graph);
  return r;
}

IsomapReport finish(Reduced r, const DissimilarityMatrix& dg, const AuxiliaryMatrix& v, const WeightMatrix& w,
                    const FitConfig& cfg) {
  AuxiliaryMatrix vk = r.dropped.empty() ? v : AuxiliaryMatrix(select_rows(v.matrix(), r.kept), v.names());
  IsomapReport out;
  out.fit = fit(dg, vk, w, cfg);
  out.geodesics = std::move(r.geodesics);
  out.kept = std::move(r.kept);
  out.dropped = std::move(r.dropped);
  return out;
}

}  // namespace

IsomapReport condisomap_fit(const DissimilarityMatrix& d, const AuxiliaryMatrix& v, const WeightSpec& w,
                            const NeighborhoodSpec& spec, const FitConfig& cfg, const IsomapOptions& opts) {
  cfg.validate();
  if (v.n() != d.n()) throw InputError("dimension mismatch: auxiliary matrix rows differ from N");
  Reduced r = geodesics_for(d, spec, opts);
  const DissimilarityMatrix dg(r.geodesics.dg);
  const WeightMatrix wm = make_weights(w, dg);
  return finish(std::move(r), dg, v, wm, cfg);
}

IsomapReport condisomap_fit(const DissimilarityMatrix& d, const AuxiliaryMatrix& v, const WeightMatrix& w,
                            const NeighborhoodSpec& spec, const FitConfig& cfg, const IsomapOptions& opts) {
  cfg.validate();
  check_problem(d, w, v);
  Reduced r = geodesics_for(d, spec, opts);
  const DissimilarityMatrix dg(r.geodesics.dg);
  const WeightMatrix wk = r.dropped.empty() ? w : WeightMatrix(select_rows_cols(w.matrix(), r.kept), w.scheme());
  return finish(std::move(r), dg, v, wk, cfg);
}

}  // namespace condmds
