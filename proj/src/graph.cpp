#include "distspec/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "distspec/error.hpp"

namespace distspec {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order_) throw DomainError("IntMatrix: rows must be square");
    int j = 0;
    for (auto x : row) (*this)(i, j++) = x;
    ++i;
  }
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::principal(const std::vector<int>& idx) const {
  IntMatrix out(static_cast<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = (*this)(idx[a], idx[b]);
  return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw DomainError("graph needs at least one vertex");
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has a label outside 0.." + std::to_string(n - 1));
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw DomainError("duplicate edge at vertex " + std::to_string(v));
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(order());
  for (int v = 0; v < order(); ++v) d[v] = degree(v);
  return d;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != order()) throw DomainError("permutation size mismatch");
  auto es = edges();
  for (auto& [u, v] : es) {
    u = perm[u];
    v = perm[v];
  }
  return Graph(order(), es);
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> pos(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : edges())
    if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  return Graph(static_cast<int>(keep.size()), es);
}

// graph6: size header, then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, offset 63.
Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  std::string_view body = text.substr(base);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);

  for (std::size_t i = 0; i < body.size(); ++i) {
    auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + i);
  }
  if (body.empty()) throw ParseError("graph6: empty input", base);

  std::size_t pos = 0;
  auto take6 = [&](int count) {
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= body.size()) throw ParseError("graph6: truncated size header", base + pos);
      v = (v << 6) | static_cast<std::uint64_t>(body[pos++] - 63);
    }
    return v;
  };

  std::uint64_t n = 0;
  if (body[0] != '~') {
    n = take6(1);
  } else if (body.size() > 1 && body[1] == '~') {
    pos = 2;
    n = take6(6);
  } else {
    pos = 1;
    n = take6(3);
    if (n < 63) throw ParseError("graph6: non-canonical long size header", base);
  }
  if (n == 0) throw ParseError("graph6: zero-vertex graph not supported", base);
  if (n > 100000) throw ParseError("graph6: vertex count too large", base);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (body.size() - pos < need) throw ParseError("graph6: truncated edge data", base + body.size());
  if (body.size() - pos > need) throw ParseError("graph6: trailing bytes", base + pos + need);

  std::vector<std::pair<int, int>> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      int byte = body[pos + k / 6] - 63;
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (k % 6 != 0) {
    int last = body[pos + need - 1] - 63;
    if (last & ((1 << (6 - k % 6)) - 1))
      throw ParseError("graph6: nonzero padding bits", base + pos + need - 1);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

IntMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix d(n);
  for (int s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    for (int t = 0; t < n; ++t) {
      if (row[t] < 0) throw DisconnectedError(s, t);
      d(s, t) = row[t];
    }
  }
  return d;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix l(g.order());
  for (int v = 0; v < g.order(); ++v) l(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) l(u, v) = l(v, u) = -1;
  return l;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (int t = 0; t < g.order(); ++t) {
      if (row[t] < 0) throw DisconnectedError(s, t);
      best = std::max(best, row[t]);
    }
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    parent[s] = -1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

bool is_c3c4_free(const Graph& g) {
  auto gi = girth(g);
  return !gi || *gi >= 5;
}

bool is_tree(const Graph& g) {
  return g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

PendantCounts pendant_counts(const Graph& g) {
  if (!is_tree(g) || g.order() < 2) throw DomainError("pendant_counts requires a tree with n >= 2");
  PendantCounts pc;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) ++pc.pendant;
    const auto& nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](int w) { return g.degree(w) == 1; }))
      ++pc.pendant_neighbors;
  }
  return pc;
}

// Complement is a disjoint union of cliques iff non-adjacency is an
// equivalence relation; the classes are the parts.
std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
  const int n = g.order();
  std::vector<int> part(n, -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (int w = v; w < n; ++w) {
      if (w == v || !g.has_edge(v, w)) {
        if (part[w] >= 0) return std::nullopt;
        part[w] = id;
        ++sizes[id];
      }
    }
  }
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if ((part[u] == part[w]) == g.has_edge(u, w)) return std::nullopt;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_complete_multipartite(const Graph& g) { return multipartite_parts(g).has_value(); }

bool is_regular(const Graph& g) {
  auto d = g.degrees();
  return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return std::nullopt;
  auto da = a.degrees(), db = b.degrees();
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Map a's vertices in BFS-ish order (highest degree first, then neighbors)
  // so that adjacency constraints prune early.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int x, int y) { return da[x] > da[y]; });
  for (int root : by_degree) {
    if (seen[root]) continue;
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      order.push_back(u);
      for (int w : a.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }

  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> extend = [&](int k) -> bool {
    if (k == n) return true;
    const int u = order[k];
    for (int c = 0; c < n; ++c) {
      if (used[c] || db[c] != da[u]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int w = order[j];
        if (a.has_edge(u, w) != b.has_edge(c, map[w])) ok = false;
      }
      if (!ok) continue;
      map[u] = c;
      used[c] = 1;
      if (extend(k + 1)) return true;
      used[c] = 0;
      map[u] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace distspec
