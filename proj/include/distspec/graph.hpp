#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distspec {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int order, std::int64_t fill = 0)
      : order_(order), data_(static_cast<std::size_t>(order) * order, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  int order() const noexcept { return order_; }
  std::int64_t& operator()(int i, int j) { return data_[index(i, j)]; }
  std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }

  bool is_symmetric() const;
  /// Principal submatrix on the given (ordered) index list.
  IntMatrix principal(const std::vector<int>& idx) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * order_ + j;
  }
  int order_ = 0;
  std::vector<std::int64_t> data_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Builds from an edge list. Self-loops, out-of-range labels and
  /// duplicate edges are rejected.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> degrees() const;

  /// Relabels so that vertex v becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const;
  /// Subgraph induced by keep (new labels follow keep's order).
  Graph induced(const std::vector<int>& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// BFS distances from one source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);
bool is_connected(const Graph& g);

IntMatrix distance_matrix(const Graph& g);
IntMatrix adjacency_matrix(const Graph& g);
IntMatrix laplacian_matrix(const Graph& g);

int diameter(const Graph& g);
/// Shortest cycle length, nullopt for forests.
std::optional<int> girth(const Graph& g);
bool is_c3c4_free(const Graph& g);
bool is_tree(const Graph& g);

struct PendantCounts {
  int pendant = 0;            // degree-1 vertices
  int pendant_neighbors = 0;  // vertices adjacent to at least one of them
};
PendantCounts pendant_counts(const Graph& g);

bool is_complete_multipartite(const Graph& g);
/// Part sizes (ascending) when g is complete multipartite.
std::optional<std::vector<int>> multipartite_parts(const Graph& g);
bool is_regular(const Graph& g);

/// Isomorphism by degree-sequence filter and backtracking over
/// degree-compatible assignments. Returns the mapping a -> b if found.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace distspec
