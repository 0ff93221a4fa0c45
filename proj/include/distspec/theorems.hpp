#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distspec/exact.hpp"
#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/report.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

/// Outcome of one claim check. The witness is always filled when the claim
/// fails; passing checks carry the computed quantities as well.
struct Verdict {
  std::string claim_id;
  bool holds = false;
  Json witness;
};
Json to_json(const Verdict& v);

inline constexpr double kDefaultCheckTol = 1e-8;

// Tree theorems. All throw DomainError on non-tree input.
Verdict check_graham_pollack(const Graph& t);
/// 0 > -2/mu_1 >= lambda_2 >= -2/mu_2 >= ... >= -2/mu_{n-1} >= lambda_n, with
/// tol slack on the weak steps. witness.first_equality flags trees where the
/// first step is tight.
Verdict check_merris_interlacing(const Graph& t, double tol = kDefaultCheckTol);
Verdict check_tree_inertia(const Graph& t);
Verdict check_collins_bound(const Graph& t);

// Connected-graph bounds. Throw DisconnectedError on disconnected input.
Verdict check_smallest_eig_bound(const Graph& g, double tol = kDefaultCheckTol);
Verdict check_laplacian_distinct_bound(const Graph& g);

/// Distance spectrum (descending) of a k-regular graph with diameter <= 2
/// from its adjacency spectrum (descending, first entry k).
std::vector<double> regular_d2_distance_spectrum(const std::vector<double>& adj_desc, int n, int k);

struct MooreEigs {
  double degree, plus, minus;
};
MooreEigs moore_adjacency_eigs(int k);

enum class ThreeDistinctClass {
  CompleteBipartite,             // (i)
  RegularCompleteMultipartite,   // (ii)
  OddOrderMultiple,              // (iii)
  Integral,                      // (iv)
};
std::string to_string(ThreeDistinctClass c);

struct ThreeDistinctClassification {
  bool three_distinct = false;
  std::vector<ThreeDistinctClass> classes;
  Spectrum spectrum;
  /// Holds vacuously when the spectrum does not have three distinct values.
  Verdict verdict() const;
};
ThreeDistinctClassification classify_three_distinct(const Graph& g, double tol = kDefaultGroupTol);

/// Exact eigenvector for -1 of D(T) with zero component sum, built step by
/// step along the recipe and verified before returning.
std::vector<Rational> build_minus_one_eigenvector(const TreeRecipe& recipe);

/// Eigenvalues of D(P_n) (ascending) from the path secular equations.
std::vector<double> path_secular_spectrum(int n);

struct MinusOneResult {
  bool has = false;
  int multiplicity = 0;
};
MinusOneResult path_minus_one(int k);

struct StarCharPoly {
  int linear_power = 0;   // exponent of (x + 2)
  Polynomial quadratic;   // x^2 - (2t+2)x - (t+2)
  Polynomial expanded;
};
/// Distance characteristic polynomial of K_{1,t+2}.
StarCharPoly star_char_poly(int t);

/// Characteristic polynomial of the double-star quotient for S_{s+1,t+1}.
Polynomial double_star_char_quartic(int s, int t);
/// Characteristic polynomial of the T_4^2 degree-partition quotient.
Polynomial t42_cubic(int q);
/// The quotient matrix B(T_4^2) itself.
RatMatrix t42_quotient(int q);

/// Closed-form candidate spectrum for an odd tree of order 2q+1 with three
/// distinct distance eigenvalues; case 1 has l2*l3 = 1, case 2 has l2*l3 = 2.
struct ThreeDistinctCandidate {
  int q = 0;
  int which = 0;
  double lambda1 = 0, lambda2 = 0, lambda3 = 0;
  BigInt c;            // lambda1 = c * q
  BigInt sum23;        // lambda2 + lambda3 = -lambda1 / q
  BigInt product23;    // lambda2 * lambda3
  /// 4^q == c * product23^q (exact).
  bool determinant_identity() const;
  /// lambda1 + q (lambda2 + lambda3) == 0 (exact).
  bool trace_identity() const;
};
ThreeDistinctCandidate three_distinct_candidates(int q, int which);

/// One row of the sign table for h1, h2, l1, l2. Values are floating point
/// (cancellation-free forms); signs are decided exactly from a + sqrt(b).
struct ExclusionRow {
  int q = 0;
  double h1 = 0, h2 = 0, l1 = 0, l2 = 0;
  int sign_h1 = 0, sign_h2 = 0, sign_l1 = 0, sign_l2 = 0;
};
std::vector<ExclusionRow> form_exclusions(int q_max);
/// Checks the sign pattern the three-distinct tree argument needs.
Verdict check_form_exclusions(int q_max);

std::pair<double, double> remark3_second_eigenvalues();

/// Grows S_{2,2} by every sequence of up to `depth` pendant-P4 attachments
/// and reports the exact multiplicity of -1 for each.
Verdict s22_plus_p4_negative_check(int depth);

}  // namespace distspec
