#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "distspec/exact.hpp"
#include "distspec/graph.hpp"

namespace distspec {

/// Ordered list of disjoint nonempty vertex blocks covering 0..n-1. The block
/// order fixes the row order of the quotient matrix.
struct Partition {
  std::vector<std::vector<int>> blocks;

  /// Throws DomainError unless the blocks are disjoint, nonempty and cover 0..n-1.
  void validate(int n) const;
  std::vector<int> sizes() const;
  /// Blocks sorted internally and ordered by ascending minimum label.
  Partition normalized() const;
  /// "0,1;2;3,4"
  std::string to_string() const;
  static Partition parse(std::string_view text);
  static Partition singletons(int n);
};

struct QuotientResult {
  RatMatrix matrix;
  bool equitable = false;
};

/// Entry (i,j) is the average row sum of block (i,j); equitability is tested
/// exactly on integer row sums.
QuotientResult quotient(const IntMatrix& m, const Partition& p);

/// Blocks by vertex degree, ascending degree.
Partition degree_partition(const Graph& g);

/// Quotient of D(S_{s+1,t+1}) for the orbit partition
/// (left leaves, left center, right center, right leaves).
RatMatrix double_star_quotient(int s, int t);
/// That orbit partition under the double_star(s+1, t+1) labeling.
Partition double_star_orbit_partition(int s, int t);

/// Eigenvalues (ascending) of a quotient of a symmetric matrix. The quotient
/// is similar to diag(sqrt n_i) B diag(1/sqrt n_j), which is symmetric.
std::vector<double> quotient_eigenvalues(const RatMatrix& b, const std::vector<int>& block_sizes);

/// Every quotient eigenvalue appears in spec(m) within tol, and for a
/// nonnegative irreducible m the largest eigenvalues coincide. Throws
/// DomainError if the partition is not equitable.
bool quotient_eigs_subset_check(const IntMatrix& m, const Partition& p, double tol);

}  // namespace distspec
