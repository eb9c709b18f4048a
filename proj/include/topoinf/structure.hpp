#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "topoinf/common.hpp"
#include "topoinf/graph.hpp"

namespace topoinf {

// Deterministic ground truth used as the oracle against the stochastic
// detector. Cuts count edges with multiplicity; the integer weight is a
// length (zeta convention), not a capacity, and does not enter here.
struct StructureReport {
  int component_count = 0;
  std::vector<int> component_labels;
  int global_min_cut = 0;
  bool disconnected = false;  // min cut reported as 0 with this flag set
  int bridge_count = 0;
};

inline std::vector<int> component_labels(const Graph& g) {
  const int n = g.n_vertices();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int eid : g.incident(v)) {
        int w = g.opposite(eid, v);
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  if (g.n_vertices() == 0) return false;
  auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

// Bridge count via lowlink DFS, skipping the entering edge by id so parallel
// edges are handled correctly (a doubled edge is never a bridge).
inline int count_bridges(const Graph& g) {
  const int n = g.n_vertices();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  int bridges = 0;

  struct Frame {
    int v;
    int parent_edge;
    std::size_t next_idx;
  };
  std::vector<Frame> stack;
  for (int s = 0; s < n; ++s) {
    if (disc[static_cast<std::size_t>(s)] != -1) continue;
    stack.push_back({s, -1, 0});
    disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next_idx < inc.size()) {
        int eid = inc[f.next_idx++];
        if (eid == f.parent_edge) continue;
        int w = g.opposite(eid, f.v);
        if (disc[static_cast<std::size_t>(w)] == -1) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, eid, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
          if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)]) ++bridges;
          (void)pe;
        }
      }
    }
  }
  return bridges;
}

// Stoer-Wagner minimum cut on the multigraph (each edge counts 1).
// Deterministic: ties resolved by lowest vertex id.
inline int stoer_wagner_min_cut(const Graph& g) {
  const int n = g.n_vertices();
  require(n >= 2, errc::invalid_argument, "min cut needs at least 2 vertices");
  std::vector<std::vector<long>> w(static_cast<std::size_t>(n),
                                   std::vector<long>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += 1;
    w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += 1;
  }
  std::vector<int> active(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;
  long best = std::numeric_limits<long>::max();
  std::vector<long> key(static_cast<std::size_t>(n));
  std::vector<char> in_a(static_cast<std::size_t>(n));
  while (active.size() > 1) {
    std::fill(key.begin(), key.end(), 0L);
    std::fill(in_a.begin(), in_a.end(), char(0));
    int prev = -1, last = -1;
    for (std::size_t step = 0; step < active.size(); ++step) {
      int pick = -1;
      for (int v : active) {
        if (in_a[static_cast<std::size_t>(v)]) continue;
        if (pick == -1 || key[static_cast<std::size_t>(v)] > key[static_cast<std::size_t>(pick)])
          pick = v;
      }
      in_a[static_cast<std::size_t>(pick)] = 1;
      prev = last;
      last = pick;
      for (int v : active) {
        if (!in_a[static_cast<std::size_t>(v)])
          key[static_cast<std::size_t>(v)] += w[static_cast<std::size_t>(pick)][static_cast<std::size_t>(v)];
      }
    }
    best = std::min(best, key[static_cast<std::size_t>(last)]);
    // merge `last` into `prev`
    for (int v : active) {
      if (v == last || v == prev) continue;
      w[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)] +=
          w[static_cast<std::size_t>(last)][static_cast<std::size_t>(v)];
      w[static_cast<std::size_t>(v)][static_cast<std::size_t>(prev)] =
          w[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)];
    }
    active.erase(std::find(active.begin(), active.end(), last));
  }
  return static_cast<int>(best);
}

// Exhaustive min cut over all vertex bipartitions; the small-case oracle.
inline int min_cut_exhaustive(const Graph& g) {
  const int n = g.n_vertices();
  require(n >= 2 && n <= 24, errc::budget_exceeded, "exhaustive min cut limited to n <= 24");
  long best = std::numeric_limits<long>::max();
  const unsigned long limit = 1UL << (n - 1);  // fix vertex n-1 on one side
  for (unsigned long mask = 1; mask < limit; ++mask) {
    long cut = 0;
    for (const Edge& e : g.edges()) {
      bool su = (mask >> e.u) & 1UL;
      bool sv = (mask >> e.v) & 1UL;
      if (e.u == n - 1) su = false;
      if (e.v == n - 1) sv = false;
      if (su != sv) ++cut;
    }
    best = std::min(best, cut);
  }
  return static_cast<int>(best);
}

inline StructureReport structure_report(const Graph& g) {
  require(g.n_vertices() >= 1, errc::empty_graph, "structure report of the empty graph");
  StructureReport r;
  r.component_labels = component_labels(g);
  r.component_count = r.component_labels.empty()
                          ? 0
                          : 1 + *std::max_element(r.component_labels.begin(),
                                                  r.component_labels.end());
  r.bridge_count = count_bridges(g);
  if (r.component_count > 1 || g.n_vertices() < 2) {
    r.disconnected = r.component_count > 1;
    r.global_min_cut = 0;
  } else {
    r.disconnected = false;
    r.global_min_cut = stoer_wagner_min_cut(g);
    // Test-oracle correctness outranks speed: cross-check small instances.
    if (g.n_vertices() <= 12) {
      int exact = min_cut_exhaustive(g);
      require(exact == r.global_min_cut, errc::inconsistency,
              "Stoer-Wagner disagrees with exhaustive min cut");
    }
  }
  return r;
}

}  // namespace topoinf
