#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "topoinf/common.hpp"
#include "topoinf/graph.hpp"
#include "topoinf/matrix.hpp"
#include "topoinf/polynomial.hpp"
#include "topoinf/structure.hpp"

namespace topoinf {

namespace detail {

inline void check_zeta_preconditions(const Graph& g) {
  require(g.unit_weights(), errc::weighted_input,
          "zeta pipeline needs unit weights; inflate the graph first");
  require(g.n_vertices() >= 1, errc::empty_graph, "zeta of the empty graph");
  require(is_connected(g), errc::disconnected, "zeta pipeline needs a connected graph");
  for (int v = 0; v < g.n_vertices(); ++v)
    require(g.degree(v) >= 2, errc::degree_too_low,
            "vertex " + std::to_string(v) + " has degree < 2 (md2 condition)");
}

}  // namespace detail

// Non-backtracking arc adjacency: B[a][b] = 1 iff head(a) = tail(b) and
// b != reverse(a). Arc b may run through a parallel copy of a's edge.
inline Mat<BigInt> hashimoto_matrix(const Graph& g) {
  require(g.unit_weights(), errc::weighted_input,
          "Hashimoto matrix needs unit weights; inflate the graph first");
  ArcIndex idx = ArcIndex::build(g);
  const int na = idx.count();
  Mat<BigInt> b(static_cast<std::size_t>(na), static_cast<std::size_t>(na));
  for (int a = 0; a < na; ++a) {
    const auto& arc = idx.arcs[static_cast<std::size_t>(a)];
    for (int eid : g.incident(arc.head)) {
      for (int succ : {2 * eid, 2 * eid + 1}) {
        if (idx.arcs[static_cast<std::size_t>(succ)].tail != arc.head) continue;
        if (succ == idx.reverse(a)) continue;
        b(static_cast<std::size_t>(a), static_cast<std::size_t>(succ)) = 1;
      }
    }
  }
  return b;
}

// Reciprocal of the Ihara zeta function as an exact integer polynomial:
//   1/zeta(u) = (1 - u^2)^(|E|-|V|) det(I - uA + u^2 (D - I)).
// The determinant of the degree-2 polynomial matrix is obtained by exact
// evaluation at the integer nodes 0, 1, -1, 2, -2, ... followed by exact
// rational interpolation; the result has degree exactly 2|E|.
inline IntPoly zeta_reciprocal(const Graph& g) {
  detail::check_zeta_preconditions(g);
  const int n = g.n_vertices();
  const int m = g.n_edges();
  const long chi = g.euler_characteristic();  // |E| - |V| >= 0 under md2

  Mat<BigInt> adj(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::vector<BigInt> deg(static_cast<std::size_t>(n), BigInt(0));
  for (const Edge& e : g.edges()) {
    adj(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) += 1;
    adj(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) += 1;
    deg[static_cast<std::size_t>(e.u)] += 1;
    deg[static_cast<std::size_t>(e.v)] += 1;
  }

  const std::size_t n_nodes = 2 * static_cast<std::size_t>(m) + 1;
  std::vector<BigInt> xs(n_nodes), ys(n_nodes);
  for (std::size_t k = 0; k < n_nodes; ++k) {
    // 0, 1, -1, 2, -2, ...
    BigInt x = (k % 2 == 1) ? BigInt((k + 1) / 2) : -BigInt(k / 2);
    Mat<BigInt> mat(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        BigInt v = -x * adj(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (i == j) v += 1 + x * x * (deg[static_cast<std::size_t>(i)] - 1);
        mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      }
    }
    BigInt factor = 1;
    BigInt one_minus_x2 = 1 - x * x;
    for (long c = 0; c < chi; ++c) factor *= one_minus_x2;
    xs[k] = x;
    ys[k] = factor * det_bareiss(std::move(mat));
  }
  IntPoly p = interpolate_integer_polynomial(xs, ys);
  require(p.coeff(0) == 1, errc::inconsistency, "zeta reciprocal must have constant term 1");
  require(p.degree() == 2 * static_cast<std::size_t>(m), errc::inconsistency,
          "zeta reciprocal must have degree 2|E|");
  return p;
}

// Weighted zeta through the inflation identity: zeta(u, G, w) = zeta(u, G_w, 1).
inline IntPoly weighted_zeta_reciprocal(const Graph& g) {
  return zeta_reciprocal(inflate(g));
}

// Exhaustive census of prime loops: primitive, cyclically non-backtracking
// closed arc sequences counted up to rotation. Orientation reversal is NOT
// identified: a loop and its reverse are distinct classes. Exponential in
// max_len; this is the oracle, not the fast path.
inline std::vector<long long> prime_loop_counts(const Graph& g, int max_len) {
  require(g.unit_weights(), errc::weighted_input, "prime loop census needs unit weights");
  require(max_len >= 1 && max_len <= 14, errc::budget_exceeded,
          "prime loop census limited to max_len <= 14");
  ArcIndex idx = ArcIndex::build(g);
  const int na = idx.count();

  // based_all[m] = closed, cyclically non-backtracking arc sequences of
  // length m with a marked starting arc (= trace of B^m, counted directly).
  std::vector<long long> based_all(static_cast<std::size_t>(max_len) + 1, 0);

  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(max_len));
  // Iterative DFS over arc sequences starting at `start`.
  for (int start = 0; start < na; ++start) {
    struct Frame {
      int arc;
      std::size_t next_choice;
      std::vector<int> succs;
    };
    auto successors = [&](int a) {
      std::vector<int> out;
      int head = idx.arcs[static_cast<std::size_t>(a)].head;
      for (int eid : g.incident(head)) {
        for (int cand : {2 * eid, 2 * eid + 1}) {
          if (idx.arcs[static_cast<std::size_t>(cand)].tail != head) continue;
          if (cand == idx.reverse(a)) continue;
          out.push_back(cand);
        }
      }
      return out;
    };
    std::vector<Frame> stack;
    stack.push_back({start, 0, successors(start)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const int depth = static_cast<int>(stack.size());
      if (f.next_choice == 0) {
        // First visit: does the sequence close up at this length?
        bool closes = idx.arcs[static_cast<std::size_t>(f.arc)].head ==
                      idx.arcs[static_cast<std::size_t>(start)].tail;
        bool cyclic_nbt = idx.reverse(f.arc) != start;  // wrap-around step
        if (closes && cyclic_nbt) based_all[static_cast<std::size_t>(depth)] += 1;
      }
      if (depth == max_len || f.next_choice >= f.succs.size()) {
        stack.pop_back();
        continue;
      }
      int nxt = f.succs[f.next_choice++];
      stack.push_back({nxt, 0, successors(nxt)});
    }
  }

  // Strip imprimitive sequences: based_all(m) = sum over d | m of based_prim(d),
  // and each primitive rotation class of length m has exactly m based marks.
  std::vector<long long> based_prim = based_all;
  for (int mlen = 1; mlen <= max_len; ++mlen) {
    for (int d = 1; d < mlen; ++d) {
      if (mlen % d == 0) based_prim[static_cast<std::size_t>(mlen)] -= based_prim[static_cast<std::size_t>(d)];
    }
  }
  std::vector<long long> pi(static_cast<std::size_t>(max_len) + 1, 0);
  for (int mlen = 1; mlen <= max_len; ++mlen) {
    require(based_prim[static_cast<std::size_t>(mlen)] % mlen == 0, errc::inconsistency,
            "primitive based count not divisible by loop length");
    pi[static_cast<std::size_t>(mlen)] = based_prim[static_cast<std::size_t>(mlen)] / mlen;
  }
  return pi;
}

// Truncated Euler product prod_m (1 - u^m)^pi(m) mod u^(M+1); the
// independent oracle for the Bass determinant route.
inline IntPoly euler_product_truncation(const std::vector<long long>& prime_counts,
                                        std::size_t M) {
  IntPoly acc = IntPoly::one();
  for (std::size_t m = 1; m < prime_counts.size() && m <= M; ++m) {
    long long pm = prime_counts[m];
    require(pm >= 0, errc::invalid_argument, "negative prime count");
    if (pm == 0) continue;
    IntPoly factor = IntPoly::one_minus_power(m).pow_truncated(static_cast<unsigned>(pm), M);
    acc = acc.mul_truncated(factor, M);
  }
  return acc;
}

// N_m computed two ways, asserted equal:
//  (a) trace of the m-th power of the Hashimoto matrix;
//  (b) series coefficients of -u d/du log(1/zeta) from the polynomial.
inline std::vector<BigInt> loop_counts(const Graph& g, int max_m) {
  require(max_m >= 1, errc::invalid_argument, "loop_counts needs max_m >= 1");
  detail::check_zeta_preconditions(g);
  Mat<BigInt> b = hashimoto_matrix(g);
  std::vector<BigInt> via_trace(static_cast<std::size_t>(max_m) + 1, BigInt(0));
  Mat<BigInt> power = b;
  for (int m = 1; m <= max_m; ++m) {
    via_trace[static_cast<std::size_t>(m)] = power.trace();
    if (m < max_m) power = mat_mul(power, b);
  }

  IntPoly zp = zeta_reciprocal(g);
  std::vector<BigInt> series = log_derivative_series(zp, static_cast<std::size_t>(max_m));
  for (int m = 1; m <= max_m; ++m) {
    BigInt via_log = -series[static_cast<std::size_t>(m)];
    require(via_log == via_trace[static_cast<std::size_t>(m)], errc::inconsistency,
            "loop count mismatch between trace and log-derivative routes at m=" +
                std::to_string(m));
  }
  return via_trace;
}

// Matrix-tree count: any cofactor of the combinatorial Laplacian.
inline BigInt spanning_tree_count(const Graph& g) {
  require(g.n_vertices() >= 1, errc::empty_graph, "spanning trees of the empty graph");
  require(is_connected(g), errc::disconnected, "spanning tree count needs a connected graph");
  const int n = g.n_vertices();
  if (n == 1) return 1;
  Mat<BigInt> lap(static_cast<std::size_t>(n) - 1, static_cast<std::size_t>(n) - 1);
  for (const Edge& e : g.edges()) {
    if (e.u < n - 1) lap(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.u)) += 1;
    if (e.v < n - 1) lap(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.v)) += 1;
    if (e.u < n - 1 && e.v < n - 1) {
      lap(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) -= 1;
      lap(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) -= 1;
    }
  }
  return det_bareiss(std::move(lap));
}

// Spanning trees from the zeta polynomial via
//   [d/du]^n (1/zeta)(u) at u=1  =  n! (-1)^(n+1) 2^n (n-1) kappa,  n = circuit rank.
// Vacuous at rank 1 (the n-1 factor kills the identity), reported as such.
inline BigInt kappa_from_zeta(const IntPoly& zeta_recip, long circuit_rank) {
  require(circuit_rank >= 2, errc::identity_degenerate,
          "spanning-tree identity is vacuous at circuit rank < 2");
  const unsigned n = static_cast<unsigned>(circuit_rank);
  BigInt value = zeta_recip.derivative_at(1, n);
  BigInt denom = big_factorial(n) * (BigInt(1) << n) * BigInt(n - 1);
  if (n % 2 == 0) denom = -denom;  // (-1)^(n+1)
  require(denom != 0 && value % denom == 0, errc::inconsistency,
          "spanning-tree identity produced a non-integer");
  BigInt kappa = value / denom;
  require(kappa >= 1, errc::inconsistency, "spanning-tree identity produced kappa < 1");
  return kappa;
}

struct RadiusEstimate {
  double value = 0.0;  // R_G = 1 / Perron eigenvalue of the Hashimoto matrix
  double err = 0.0;
};

// Power iteration with Collatz-Wielandt bounds on B + I (the shift keeps the
// iteration aperiodic; cycles and bipartite-like arc graphs converge too).
inline RadiusEstimate radius_of_convergence(const Graph& g) {
  detail::check_zeta_preconditions(g);
  ArcIndex idx = ArcIndex::build(g);
  const int na = idx.count();
  // Sparse successor lists instead of the dense matrix.
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(na));
  for (int a = 0; a < na; ++a) {
    int head = idx.arcs[static_cast<std::size_t>(a)].head;
    for (int eid : g.incident(head)) {
      for (int cand : {2 * eid, 2 * eid + 1}) {
        if (idx.arcs[static_cast<std::size_t>(cand)].tail != head) continue;
        if (cand == idx.reverse(a)) continue;
        succ[static_cast<std::size_t>(a)].push_back(cand);
      }
    }
  }
  std::vector<double> v(static_cast<std::size_t>(na), 1.0), w(static_cast<std::size_t>(na));
  const double tol = 1e-10;
  const int max_iter = 200000;
  for (int iter = 0; iter < max_iter; ++iter) {
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    for (int a = 0; a < na; ++a) {
      double acc = v[static_cast<std::size_t>(a)];  // the +I shift
      for (int s : succ[static_cast<std::size_t>(a)]) acc += v[static_cast<std::size_t>(s)];
      w[static_cast<std::size_t>(a)] = acc;
      double ratio = acc / v[static_cast<std::size_t>(a)];
      rmin = std::min(rmin, ratio);
      rmax = std::max(rmax, ratio);
    }
    double lambda_shifted = 0.5 * (rmin + rmax);
    double lambda = lambda_shifted - 1.0;
    if (rmax - rmin <= tol * lambda_shifted && lambda > 0.0) {
      double gap = rmax - rmin;
      RadiusEstimate est;
      est.value = 1.0 / lambda;
      est.err = gap / (lambda * lambda);
      return est;
    }
    double norm = *std::max_element(w.begin(), w.end());
    for (auto& x : w) x /= norm;
    v.swap(w);
  }
  fail(errc::no_convergence, "power iteration did not converge");
}

struct TopologicalSummary {
  std::vector<BigInt> loop_counts;       // N_1..N_M at index 1..M
  BigInt spanning_trees;                 // kappa
  double radius = 0.0;                   // R_G
  double radius_err = 0.0;
  long delta = 0;                        // gcd of prime loop lengths seen up to M
  std::vector<long long> prime_counts;   // pi(1)..pi(M) at index 1..M
};

inline TopologicalSummary summarize_topology(const Graph& g, int max_m) {
  TopologicalSummary s;
  s.loop_counts = loop_counts(g, max_m);
  s.spanning_trees = spanning_tree_count(g);
  RadiusEstimate r = radius_of_convergence(g);
  s.radius = r.value;
  s.radius_err = r.err;
  s.prime_counts = prime_loop_counts(g, max_m);
  long d = 0;
  for (std::size_t m = 1; m < s.prime_counts.size(); ++m)
    if (s.prime_counts[m] > 0) d = std::gcd(d, static_cast<long>(m));
  s.delta = d;  // 0 means no prime loop seen within range
  return s;
}

struct AsymptoticRow {
  int m = 0;
  long long pi_m = 0;
  double leading_term = 0.0;  // Delta * R^(-m) / m
  double relative_error = 0.0;
};

// Compares pi(m) against the leading asymptotic term at multiples of Delta.
inline std::vector<AsymptoticRow> prime_asymptotics_check(const TopologicalSummary& s,
                                                          int max_m) {
  require(s.delta > 0, errc::degenerate_data,
          "no prime loops within range; Delta undefined");
  std::vector<AsymptoticRow> rows;
  for (int m = static_cast<int>(s.delta); m <= max_m; m += static_cast<int>(s.delta)) {
    if (static_cast<std::size_t>(m) >= s.prime_counts.size()) break;
    AsymptoticRow row;
    row.m = m;
    row.pi_m = s.prime_counts[static_cast<std::size_t>(m)];
    row.leading_term = double(s.delta) * std::pow(s.radius, -m) / double(m);
    double denom = std::max(1.0, double(row.pi_m));
    row.relative_error = std::abs(double(row.pi_m) - row.leading_term) / denom;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace topoinf
