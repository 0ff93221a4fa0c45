#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

// Labelings:
//   path(n)      0-1-2-...-(n-1)
//   star(n)      center 0, leaves 1..n-1
//   cycle(n)     0-1-...-(n-1)-0
//   double_star  centers 0 and 1; a leaves on 0 labeled 2..a+1, b leaves on 1 after them
//   t42_spider   center 0; leg i is 0-(2i+1)-(2i+2)
//   petersen     2-subsets of {0..4} in lexicographic order, adjacent iff disjoint
Graph path(int n);
Graph star(int n);
Graph cycle(int n);
Graph complete(int n);
Graph double_star(int a, int b);
Graph petersen();
Graph complete_multipartite(const std::vector<int>& parts);
Graph t42_spider(int q);

/// Attaches a new path w1-w2-w3-w4 (labels n..n+3) with w1 joined to v.
Graph attach_pendant_p4(const Graph& g, int v);

/// Members of the recursive P4-attachment family rooted at P2. Step i
/// (1-based) attaches a new pendant P4 to vertex steps[i-1] of the tree built
/// so far, so steps[i-1] must lie in [0, 4i-3].
struct TreeRecipe {
  std::vector<int> steps;

  int vertex_count() const { return 4 * static_cast<int>(steps.size()) + 2; }
  /// "1,2,5"; empty recipe is "".
  std::string to_string() const;
  static TreeRecipe parse(std::string_view csv);
  friend bool operator==(const TreeRecipe&, const TreeRecipe&) = default;
};

Graph build_t_family(const TreeRecipe& recipe);
/// Every recipe with exactly `steps` steps, in lexicographic order.
std::vector<TreeRecipe> all_recipes(int steps);

/// Distance matrices of the two induced 5-vertex configurations used to
/// bound the second distance eigenvalue of C3-free graphs with girth 4.
IntMatrix f1_submatrix();
IntMatrix f2_submatrix();

/// Family mini-language: "path:n", "star:n", "cycle:n", "complete:n",
/// "kpart:a,b,...", "dstar:a,b", "petersen", "t42:q", "tfam:a1,a2,...",
/// or "g6:<graph6>".
Graph parse_family_spec(std::string_view spec);

}  // namespace distspec
