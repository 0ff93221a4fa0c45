#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/report.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

inline constexpr int kDefaultMaxTreeOrder = 18;
inline constexpr int kDefaultMaxGraphOrder = 7;
/// Enumeration bounds; DISTSPEC_MAX_N overrides both (graphs stay <= 9).
int max_tree_order();
int max_graph_order();

/// Unlabeled free trees on n vertices, each exactly once, from canonical
/// level sequences (Wright-Richmond-Odlyzko-McKay successor rule).
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n);
  std::optional<Graph> next();
  /// Level sequence of the tree most recently returned by next().
  const std::vector<int>& level_sequence() const { return current_; }

 private:
  int n_;
  bool done_ = false;
  bool first_ = true;
  std::vector<int> layout_;
  std::vector<int> current_;
};

FreeTreeGenerator enumerate_free_trees(int n);
std::vector<Graph> all_free_trees(int n);

/// Tree isomorphism invariant: AHU encoding rooted at the center(s).
std::string tree_canonical_string(const Graph& t);

/// Minimum upper-triangle bitstring over all vertex permutations (n <= 9).
std::uint64_t canonical_code(const Graph& g);
/// A canonically relabeled copy: isomorphic inputs give identical graphs.
/// Trees of any order (center-rooted AHU preorder) and other graphs with
/// n <= 9 (minimum code); nullopt otherwise.
std::optional<Graph> canonical_form(const Graph& g);
/// Every unlabeled connected graph on n vertices once, ordered by canonical code.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Recipe of an isomorphic member of the P4-attachment family, found by
/// peeling pendant P4s down to P2. The returned map sends t's labels to the
/// labels of build_t_family(recipe).
struct RecognizedRecipe {
  TreeRecipe recipe;
  std::vector<int> relabel;
};
std::optional<RecognizedRecipe> recognize_t_family(const Graph& t);

/// Distance eigenvalues of a tree in [-1, 0), with multiplicity. The -1
/// boundary is decided by exact nullity.
int count_eigs_in_interval(const Graph& t);

struct SearchOptions {
  double tol = kDefaultGroupTol;
  int workers = 1;
  /// When nonempty, progress is saved here every kCheckpointEvery graphs and
  /// a matching checkpoint is resumed from.
  std::string checkpoint;
};
inline constexpr std::size_t kCheckpointEvery = 10000;

struct SearchHit {
  std::string graph6;
  int n = 0;
  std::string category;
  Json detail;
};

struct SearchReport {
  std::string kind;
  Json parameters;
  std::vector<SearchHit> hits;
  std::size_t scanned = 0;
  double elapsed_ms = 0;
  Json summary;

  Json to_json(bool include_meta = true) const;
  /// graph6,n,category,spectrum (spectrum as "v^m v^m ...").
  std::string to_csv() const;
};

SearchReport search_three_distinct_trees(int n_max, const SearchOptions& opts = {});
SearchReport search_trees_with_minus_one(int n_max, const SearchOptions& opts = {});
SearchReport search_c3c4free_minus3(int n_max, const SearchOptions& opts = {}, bool inject_petersen = true);
SearchReport search_interval_count(int n_max, const SearchOptions& opts = {});

}  // namespace distspec
