// Test-only oracles, written independently of the library code paths they
// check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "distspec/graph.hpp"

namespace oracle {

using distspec::Graph;
using distspec::IntMatrix;

/// Laplace expansion along the first row.
inline std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * a[0][c] * cofactor_det(minor);
  }
  return det;
}

inline std::vector<std::vector<std::int64_t>> rows(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> r(m.order(), std::vector<std::int64_t>(m.order()));
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) r[i][j] = m(i, j);
  return r;
}

/// det(x I - m) by cofactor expansion at an integer point.
inline std::int64_t char_poly_at(const IntMatrix& m, std::int64_t x) {
  auto r = rows(m);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r[i][j] = (i == j ? x : 0) - r[i][j];
  return cofactor_det(r);
}

/// graph6 built as an explicit '0'/'1' string, n <= 62.
inline std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += g.has_edge(i, j) ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t k = 0; k < bits.size(); k += 6) out += static_cast<char>(63 + std::stoi(bits.substr(k, 6), nullptr, 2));
  return out;
}

/// Floyd-Warshall distances; -1 where unreachable.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.order(), inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Canonical string of a tree: minimum AHU encoding over every root.
inline std::string tree_code(const Graph& t) {
  std::function<std::string(int, int)> enc = [&](int v, int p) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(v))
      if (w != p) kids.push_back(enc(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "0";
    for (auto& k : kids) s += k;
    return s + "1";
  };
  std::string best;
  for (int r = 0; r < t.order(); ++r) {
    auto s = enc(r, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

inline Graph prufer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1, w = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) (u < 0 ? u : w) = v;
  edges.emplace_back(u, w);
  return Graph(n, edges);
}

/// Unlabeled tree count from every labeled tree (Pruefer sequences) with
/// isomorphism dedup. n^(n-2) sequences, so keep n small.
inline std::size_t prufer_tree_count(int n) {
  if (n <= 2) return 1;
  std::set<std::string> seen;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    seen.insert(tree_code(prufer_decode(seq, n)));
    int k = n - 3;
    while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
    if (k < 0) break;
    ++seq[k];
  }
  return seen.size();
}

/// Otter's formula over rooted-tree counts.
inline std::vector<long long> otter_tree_counts(int n_max) {
  std::vector<long long> r(n_max + 1, 0), t(n_max + 1, 0);
  r[1] = 1;
  for (int n = 1; n < n_max; ++n) {
    long long s = 0;
    for (int k = 1; k <= n; ++k) {
      long long inner = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) inner += d * r[d];
      s += inner * r[n - k + 1];
    }
    r[n + 1] = s / n;
  }
  for (int n = 1; n <= n_max; ++n) {
    long long pairs = 0;
    for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
    long long twice = 2 * r[n] - pairs + (n % 2 == 0 ? r[n / 2] : 0);
    t[n] = twice / 2;
  }
  return t;
}

/// Connected unlabeled graph count by brute force over all labeled graphs.
inline std::size_t brute_connected_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::set<std::vector<char>> seen;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) e.push_back(pairs[k]);
    Graph g(n, e);
    auto d = floyd(g);
    if (std::any_of(d[0].begin(), d[0].end(), [](int x) { return x < 0; })) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> best;
    do {
      std::vector<char> code;
      for (auto [a, b] : pairs) code.push_back(g.has_edge(perm[a], perm[b]));
      if (best.empty() || code > best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    seen.insert(best);
  }
  return seen.size();
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

/// Random spanning tree plus extra edges: always connected.
inline Graph random_connected(std::mt19937& rng, int n, double extra) {
  std::vector<std::pair<int, int>> e;
  std::set<std::pair<int, int>> have;
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    e.emplace_back(u, v);
    have.insert({u, v});
  }
  std::bernoulli_distribution coin(extra);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!have.count({i, j}) && coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph random_tree(std::mt19937& rng, int n) { return random_connected(rng, n, 0.0); }

inline std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
