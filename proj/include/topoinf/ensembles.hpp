#pragma once

#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "topoinf/common.hpp"
#include "topoinf/graph.hpp"
#include "topoinf/parallel.hpp"
#include "topoinf/rng.hpp"

namespace topoinf {

struct ErdosRenyi {
  int n = 0;
  double p = 0.0;
};

struct BipartiteRegular {
  int n_bits = 0;
  int m_checks = 0;
  int q = 0;        // bit degree (row sum)
  int r = 0;        // check degree (column sum)
  long burn_in = -1;  // -1: default 10 * n_bits * q chain steps
};

struct PlantedBridge {
  int n1 = 0;
  int n2 = 0;
  int k = 0;  // cross edges; k = 0 is truly disconnected
  double p_intra = 0.0;
};

using EnsembleSpec = std::variant<ErdosRenyi, BipartiteRegular, PlantedBridge>;

namespace detail {

// Appends ER(n, p) edges among vertices [base, base+n) using geometric pair
// skipping, O(edges) RNG draws. Identical output for identical seeds.
inline void append_er_edges(std::vector<Edge>& out, int base, int n, double p, Rng& rng) {
  if (n < 2 || p <= 0.0) return;
  if (p >= 1.0) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back({base + i, base + j, 1});
    return;
  }
  const double log_q = std::log1p(-p);
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  long long pos = -1;
  for (;;) {
    double u = rng.uniform_pos();
    pos += 1 + static_cast<long long>(std::floor(std::log(u) / log_q));
    if (pos >= total) break;
    // Decode the linear pair index: row i owns n-1-i consecutive slots.
    long long rem = pos;
    int i = 0;
    while (rem >= n - 1 - i) {
      rem -= n - 1 - i;
      ++i;
    }
    int j = i + 1 + static_cast<int>(rem);
    out.push_back({base + i, base + j, 1});
  }
}

}  // namespace detail

inline Graph sample_er(int n, double p, std::uint64_t seed) {
  require(n >= 1, errc::invalid_argument, "Erdos-Renyi needs n >= 1");
  require(p >= 0.0 && p <= 1.0, errc::invalid_argument, "edge probability outside [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  detail::append_er_edges(edges, 0, n, p, rng);
  return Graph(n, std::move(edges));
}

// 0/1 bit-check adjacency with exact row sums q and column sums r, sampled
// by a lazy checkerboard-switch Markov chain from a canonical start. Row and
// column sums are invariant under every accepted switch.
//
// burn_in counts chain steps (lazy holds and rejected proposals included).
// Counting accepted switches only would make the small cases provably
// non-uniform: the switch moves connect the support as a bipartite graph,
// so the parity of the accepted count pins half the support. The lazy chain
// is aperiodic and loses that parity.
class BipartiteMatrix {
 public:
  BipartiteMatrix(int n, int m) : n_(n), m_(m), a_(static_cast<std::size_t>(n * m), 0) {}

  int rows() const { return n_; }
  int cols() const { return m_; }
  std::uint8_t at(int i, int j) const { return a_[static_cast<std::size_t>(i * m_ + j)]; }
  void set(int i, int j, std::uint8_t v) { a_[static_cast<std::size_t>(i * m_ + j)] = v; }

  bool operator<(const BipartiteMatrix& o) const { return a_ < o.a_; }
  bool operator==(const BipartiteMatrix& o) const { return a_ == o.a_; }

  std::vector<int> row_sums() const {
    std::vector<int> s(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j) s[static_cast<std::size_t>(i)] += at(i, j);
    return s;
  }
  std::vector<int> col_sums() const {
    std::vector<int> s(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j) s[static_cast<std::size_t>(j)] += at(i, j);
    return s;
  }

 private:
  int n_, m_;
  std::vector<std::uint8_t> a_;
};

inline BipartiteMatrix sample_bipartite_matrix(int n, int m, int q, int r, long burn_in,
                                               std::uint64_t seed) {
  require(n >= 1 && m >= 1 && q >= 0 && r >= 0, errc::invalid_argument,
          "bipartite ensemble needs positive sizes");
  require(static_cast<long long>(n) * q == static_cast<long long>(m) * r, errc::infeasible,
          "infeasible bipartite ensemble: n*q != m*r");
  require(q <= m && r <= n, errc::infeasible, "bipartite degree exceeds opposite side");
  if (burn_in < 0) burn_in = 10L * n * q;

  // Canonical start: row i takes the q consecutive columns starting at
  // (i*q) mod m. Concatenated over rows this walks n*q consecutive residues,
  // so every column is hit exactly n*q/m = r times.
  BipartiteMatrix a(n, m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < q; ++k) a.set(i, static_cast<int>((static_cast<long long>(i) * q + k) % m), 1);

  if (n < 2 || m < 2) return a;  // support is a single matrix
  Rng rng(seed);
  for (long step = 0; step < burn_in; ++step) {
    if (rng.bernoulli(0.5)) continue;  // lazy hold
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (j >= i) ++j;
    int a_col = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    int b_col = static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 1)));
    if (b_col >= a_col) ++b_col;
    std::uint8_t x = a.at(i, a_col), y = a.at(j, b_col);
    std::uint8_t xb = a.at(i, b_col), yb = a.at(j, a_col);
    if (x == y && xb == yb && x != xb) {
      // checkerboard: swap the diagonal
      a.set(i, a_col, xb);
      a.set(j, b_col, xb);
      a.set(i, b_col, x);
      a.set(j, a_col, x);
    }
  }
  return a;
}

inline Graph bipartite_matrix_to_graph(const BipartiteMatrix& a) {
  std::vector<Edge> edges;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j)) edges.push_back({i, a.rows() + j, 1});
  return Graph(a.rows() + a.cols(), std::move(edges));
}

// Bits are vertices 0..n-1, checks n..n+m-1.
inline Graph sample_bipartite_regular(int n, int m, int q, int r, long burn_in,
                                      std::uint64_t seed) {
  return bipartite_matrix_to_graph(sample_bipartite_matrix(n, m, q, r, burn_in, seed));
}

// Two independent ER(n_i, p_intra) blocks plus exactly k distinct uniformly
// random cross edges. k = 0 yields a truly disconnected graph.
inline Graph sample_planted_bridge(int n1, int n2, int k, double p_intra,
                                   std::uint64_t seed) {
  require(n1 >= 1 && n2 >= 1, errc::invalid_argument, "planted bridge needs n1, n2 >= 1");
  require(p_intra >= 0.0 && p_intra <= 1.0, errc::invalid_argument,
          "edge probability outside [0,1]");
  require(k >= 0 && static_cast<long long>(k) <= static_cast<long long>(n1) * n2,
          errc::invalid_argument, "bridge count exceeds available cross pairs");
  Rng rng(seed);
  std::vector<Edge> edges;
  detail::append_er_edges(edges, 0, n1, p_intra, rng);
  detail::append_er_edges(edges, n1, n2, p_intra, rng);
  std::set<std::pair<int, int>> chosen;
  while (static_cast<int>(chosen.size()) < k) {
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n1)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n2)));
    if (chosen.insert({i, j}).second) edges.push_back({i, n1 + j, 1});
  }
  return Graph(n1 + n2, std::move(edges));
}

inline Graph sample_graph(const EnsembleSpec& spec, std::uint64_t seed) {
  return std::visit(
      [&](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ErdosRenyi>) {
          return sample_er(s.n, s.p, seed);
        } else if constexpr (std::is_same_v<T, BipartiteRegular>) {
          return sample_bipartite_regular(s.n_bits, s.m_checks, s.q, s.r, s.burn_in, seed);
        } else {
          return sample_planted_bridge(s.n1, s.n2, s.k, s.p_intra, seed);
        }
      },
      spec);
}

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long n_samples = 0;
  std::uint64_t seed = 0;
};

// Sample mean and standard error of f over independent draws. Replica i is
// seeded with derive_seed(seed, i) and results reduce in index order, so the
// estimate does not depend on the worker count.
inline MonteCarloEstimate ensemble_expectation(const EnsembleSpec& spec,
                                               const std::function<double(const Graph&)>& f,
                                               long n_samples, std::uint64_t seed,
                                               int workers = 1) {
  require(n_samples >= 1, errc::invalid_argument, "need n_samples >= 1");
  std::vector<double> values(static_cast<std::size_t>(n_samples), 0.0);
  parallel_for(static_cast<std::size_t>(n_samples), workers, [&](std::size_t i) {
    Graph g = sample_graph(spec, derive_seed(seed, i));
    try {
      values[i] = f(g);
    } catch (const std::exception& ex) {
      fail(errc::invalid_argument,
           "observable failed on sample " + std::to_string(i) + ": " + ex.what());
    }
  });
  double sum = 0.0;
  for (double v : values) sum += v;
  double mean = sum / double(n_samples);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  double std_error =
      n_samples > 1 ? std::sqrt(ss / (double(n_samples) * double(n_samples - 1))) : 0.0;
  return {mean, std_error, n_samples, seed};
}

}  // namespace topoinf
