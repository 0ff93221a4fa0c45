#pragma once

#include <span>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Dense symmetric matrix of doubles, row-major.
struct SymMatrix {
  int order = 0;
  std::vector<double> data;

  static SymMatrix from(const IntMatrix& m);
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * order + j]; }
};

/// Eigenvalues (ascending) by cyclic-by-row Jacobi rotations. Throws
/// DomainError on asymmetric input and Error after 100 sweeps.
std::vector<double> eig_symmetric(const SymMatrix& m);
std::vector<double> eig_symmetric(const IntMatrix& m);

struct SpectrumItem {
  double value = 0;
  int multiplicity = 0;
  /// Value is an integer confirmed by exact nullity (and snapped).
  bool exact = false;
};

/// Distinct eigenvalues, strictly descending, with multiplicities.
struct Spectrum {
  std::vector<SpectrumItem> items;
  int n = 0;
  double group_tol = 0;

  /// Values with multiplicity, descending.
  std::vector<double> expanded() const;
  double largest() const { return items.front().value; }
  double smallest() const { return items.back().value; }
};

inline constexpr double kDefaultGroupTol = 1e-7;
inline constexpr double kDefaultSnapTol = 1e-6;

struct SpectrumOptions {
  double group_tol = kDefaultGroupTol;
  double snap_tol = kDefaultSnapTol;
};

/// Single-linkage grouping of an ascending list; each group is represented
/// by its mean.
Spectrum group_spectrum(std::span<const double> ascending, double tol);

/// Groups eig(m) and snaps near-integer groups whose exact multiplicity
/// matches the numeric one.
Spectrum matrix_spectrum(const IntMatrix& m, const SpectrumOptions& opts = {});
Spectrum distance_spectrum(const Graph& g, const SpectrumOptions& opts = {});
Spectrum laplacian_spectrum(const Graph& g, const SpectrumOptions& opts = {});

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};
Inertia inertia(const Spectrum& s, double zero_tol = kDefaultSnapTol);

inline int count_distinct(const Spectrum& s) { return static_cast<int>(s.items.size()); }

}  // namespace distspec
