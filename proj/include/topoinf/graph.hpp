#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "topoinf/common.hpp"

namespace topoinf {

struct Edge {
  int u = 0;
  int v = 0;
  long weight = 1;
};

// Undirected multigraph with positive integer edge weights. Immutable after
// construction; edge ids are the positions in the constructor list, so arc
// ids and every downstream matrix index are stable and reproducible.
// Parallel edges are allowed, self-loops are not.
class Graph {
 public:
  Graph(int n_vertices, std::vector<Edge> edges)
      : n_(n_vertices), edges_(std::move(edges)) {
    require(n_ >= 0, errc::invalid_argument, "negative vertex count");
    for (const Edge& e : edges_) {
      require(e.u != e.v, errc::self_loop,
              "self-loop at vertex " + std::to_string(e.u));
      require(e.u >= 0 && e.u < n_ && e.v >= 0 && e.v < n_, errc::vertex_out_of_range,
              "edge endpoint outside 0.." + std::to_string(n_ - 1));
      require(e.weight >= 1, errc::zero_weight, "edge weight must be >= 1");
    }
    inc_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      inc_[static_cast<std::size_t>(edges_[id].u)].push_back(static_cast<int>(id));
      inc_[static_cast<std::size_t>(edges_[id].v)].push_back(static_cast<int>(id));
    }
  }

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  // Incident edge ids of v (parallel edges appear once per copy).
  const std::vector<int>& incident(int v) const {
    require(v >= 0 && v < n_, errc::vertex_out_of_range, "vertex out of range");
    return inc_[static_cast<std::size_t>(v)];
  }

  // Degree in the unit-weight sense: number of incident edge endpoints.
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  int opposite(int edge_id, int v) const {
    const Edge& e = edges_[static_cast<std::size_t>(edge_id)];
    return e.u == v ? e.v : e.u;
  }

  bool unit_weights() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.weight == 1; });
  }

  long total_weight() const {
    long s = 0;
    for (const Edge& e : edges_) s += e.weight;
    return s;
  }

  // chi(G) = |E| - |V|, invariant under inflation.
  long euler_characteristic() const { return static_cast<long>(edges_.size()) - n_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> inc_;
};

inline Graph build_graph(int n_vertices, std::vector<Edge> edges) {
  return Graph(n_vertices, std::move(edges));
}

// Replace each weight-w edge by a path of w unit edges through w-1 new
// degree-2 vertices. New vertices are appended in edge order, so the result
// is deterministic. Identity (up to nothing at all) on unit-weight graphs.
inline Graph inflate(const Graph& g) {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(g.total_weight()));
  int next_vertex = g.n_vertices();
  for (const Edge& e : g.edges()) {
    if (e.weight == 1) {
      out.push_back({e.u, e.v, 1});
      continue;
    }
    int prev = e.u;
    for (long step = 0; step + 1 < e.weight; ++step) {
      out.push_back({prev, next_vertex, 1});
      prev = next_vertex++;
    }
    out.push_back({prev, e.v, 1});
  }
  return Graph(next_vertex, std::move(out));
}

// Directed-arc view: edge id e yields arcs 2e (u->v) and 2e+1 (v->u).
struct ArcIndex {
  struct Arc {
    int tail = 0;
    int head = 0;
    int edge = 0;
  };
  std::vector<Arc> arcs;

  static ArcIndex build(const Graph& g) {
    ArcIndex idx;
    idx.arcs.reserve(2 * static_cast<std::size_t>(g.n_edges()));
    for (int e = 0; e < g.n_edges(); ++e) {
      const Edge& ed = g.edge(e);
      idx.arcs.push_back({ed.u, ed.v, e});
      idx.arcs.push_back({ed.v, ed.u, e});
    }
    return idx;
  }

  int reverse(int a) const { return a ^ 1; }
  int count() const { return static_cast<int>(arcs.size()); }
};

// Plain-text edge list: header "n m", then one "u v w" line per edge in id
// order. Exact round-trip, including edge order and weights.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.n_vertices() << ' ' << g.n_edges() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << ' ' << e.weight << '\n';
}

inline Graph read_edge_list(std::istream& is) {
  int n = 0, m = 0;
  if (!(is >> n >> m)) fail(errc::io_error, "missing edge-list header");
  require(m >= 0, errc::io_error, "negative edge count in header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Edge e;
    if (!(is >> e.u >> e.v >> e.weight)) fail(errc::io_error, "truncated edge list");
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

inline void save_graph(const std::string& path, const Graph& g) {
  std::ofstream os(path);
  if (!os) fail(errc::io_error, "cannot open " + path + " for writing");
  write_edge_list(os, g);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(errc::io_error, "cannot open " + path);
  return read_edge_list(is);
}

inline std::string to_edge_list_string(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace topoinf
