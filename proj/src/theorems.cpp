#include "distspec/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "distspec/error.hpp"
#include "distspec/quotient.hpp"

namespace distspec {

namespace {

void require_tree(const Graph& t, const char* what) {
  if (t.order() < 2 || !is_tree(t)) throw DomainError(std::string(what) + ": input must be a tree with n >= 2");
}

void require_connected(const Graph& g) {
  auto d = bfs_distances(g, 0);
  auto it = std::find(d.begin(), d.end(), -1);
  if (it != d.end()) throw DisconnectedError(0, static_cast<int>(it - d.begin()));
}

BigInt pow_big(long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

// sign(a + sqrt(b)) for b >= 0.
int sign_plus_sqrt(const BigInt& a, const BigInt& b) {
  if (a >= 0) return (a > 0 || b > 0) ? 1 : 0;
  const BigInt a2 = a * a;
  return b > a2 ? 1 : (b == a2 ? 0 : -1);
}

// sign(a - sqrt(b)) = -sign(-a + sqrt(b)).
int sign_minus_sqrt(const BigInt& a, const BigInt& b) { return -sign_plus_sqrt(-a, b); }

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

Json to_json(const Verdict& v) {
  Json j;
  j["claim_id"] = v.claim_id;
  j["holds"] = v.holds;
  j["witness"] = v.witness;
  return j;
}

// -- Tree checks -------------------------------------------------------------

Verdict check_graham_pollack(const Graph& t) {
  require_tree(t, "check_graham_pollack");
  const int n = t.order();
  const BigInt det = det_bareiss(distance_matrix(t));
  BigInt expected = BigInt(n - 1) * pow_big(2, n - 2);
  if ((n - 1) % 2) expected = -expected;
  Verdict v{"graham-pollack", det == expected, {}};
  v.witness["n"] = n;
  v.witness["det"] = det.get_str();
  v.witness["expected"] = expected.get_str();
  return v;
}

Verdict check_merris_interlacing(const Graph& t, double tol) {
  require_tree(t, "check_merris_interlacing");
  const int n = t.order();
  const auto lam = distance_spectrum(t).expanded();    // descending
  const auto mu = laplacian_spectrum(t).expanded();    // descending, mu[n-1] = 0
  // bounds[i] = -2 / mu_{i+1}, i = 0..n-2
  std::vector<double> bounds(n - 1);
  for (int i = 0; i < n - 1; ++i) bounds[i] = -2.0 / mu[i];

  Verdict v{"merris", true, {}};
  auto fail = [&](const std::string& where, double lhs, double rhs) {
    if (!v.holds) return;
    v.holds = false;
    v.witness["violated"] = where;
    v.witness["lhs"] = lhs;
    v.witness["rhs"] = rhs;
  };
  if (!(bounds[0] < 0)) fail("0 > -2/mu_1", 0, bounds[0]);
  // Printed as strict, but equality is attained: P4 has lambda_2 = sqrt(2)-2
  // = -2/mu_1 exactly (likewise P2, P6 and other even-order trees). Checked
  // weak, and equality is reported.
  if (lam[1] > bounds[0] + tol) fail("-2/mu_1 >= lambda_2", bounds[0], lam[1]);
  const bool first_equal = std::abs(lam[1] - bounds[0]) <= tol;
  for (int i = 1; i < n - 1; ++i) {
    // lambda_{i+1} >= -2/mu_{i+1} >= lambda_{i+2}
    if (lam[i] < bounds[i] - tol) fail("lambda_" + std::to_string(i + 1) + " >= -2/mu_" + std::to_string(i + 1), lam[i], bounds[i]);
    if (bounds[i] < lam[i + 1] - tol) fail("-2/mu_" + std::to_string(i + 1) + " >= lambda_" + std::to_string(i + 2), bounds[i], lam[i + 1]);
  }
  v.witness["distance"] = lam;
  v.witness["neg2_over_mu"] = bounds;
  v.witness["first_equality"] = first_equal;
  return v;
}

Verdict check_tree_inertia(const Graph& t) {
  require_tree(t, "check_tree_inertia");
  const auto in = inertia(distance_spectrum(t));
  Verdict v{"inertia", in == Inertia{1, 0, t.order() - 1}, {}};
  v.witness["positive"] = in.positive;
  v.witness["zero"] = in.zero;
  v.witness["negative"] = in.negative;
  return v;
}

Verdict check_collins_bound(const Graph& t) {
  require_tree(t, "check_collins_bound");
  const auto pc = pendant_counts(t);
  const int mult = eigen_multiplicity_exact(distance_matrix(t), -2);
  Verdict v{"collins", mult >= pc.pendant - pc.pendant_neighbors, {}};
  v.witness["multiplicity_minus2"] = mult;
  v.witness["n1"] = pc.pendant;
  v.witness["n1p"] = pc.pendant_neighbors;
  return v;
}

// -- Connected-graph bounds ----------------------------------------------------

Verdict check_smallest_eig_bound(const Graph& g, double tol) {
  require_connected(g);
  const int d = diameter(g);
  const double smallest = distance_spectrum(g).smallest();
  const bool below = smallest <= -d + tol;
  const bool equal = std::abs(smallest + d) <= tol;
  const bool multipartite = is_complete_multipartite(g);
  Verdict v{"smallest-bound", below && (equal == multipartite), {}};
  v.witness["lambda_min"] = smallest;
  v.witness["diameter"] = d;
  v.witness["equality"] = equal;
  v.witness["complete_multipartite"] = multipartite;
  return v;
}

Verdict check_laplacian_distinct_bound(const Graph& g) {
  require_connected(g);
  const int d = diameter(g);
  const int distinct = count_distinct(laplacian_spectrum(g));
  Verdict v{"laplacian-distinct", distinct >= d + 1, {}};
  v.witness["distinct"] = distinct;
  v.witness["diameter"] = d;
  return v;
}

std::vector<double> regular_d2_distance_spectrum(const std::vector<double>& adj_desc, int n, int k) {
  if (adj_desc.empty() || std::abs(adj_desc.front() - k) > 1e-9)
    throw DomainError("regular_d2_distance_spectrum: leading adjacency eigenvalue must equal k");
  if (static_cast<int>(adj_desc.size()) != n)
    throw DomainError("regular_d2_distance_spectrum: expected n adjacency eigenvalues");
  std::vector<double> out{2.0 * n - 2 - k};
  for (std::size_t i = 1; i < adj_desc.size(); ++i) out.push_back(-(2 + adj_desc[i]));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MooreEigs moore_adjacency_eigs(int k) {
  if (k < 2) throw DomainError("moore_adjacency_eigs: k must be >= 2");
  const double r = std::sqrt(4.0 * k - 3);
  return {static_cast<double>(k), (-1 + r) / 2, (-1 - r) / 2};
}

// -- Three distinct eigenvalues ------------------------------------------------

std::string to_string(ThreeDistinctClass c) {
  switch (c) {
    case ThreeDistinctClass::CompleteBipartite: return "complete-bipartite";
    case ThreeDistinctClass::RegularCompleteMultipartite: return "regular-complete-multipartite";
    case ThreeDistinctClass::OddOrderMultiple: return "odd-order-multiple";
    case ThreeDistinctClass::Integral: return "integral";
  }
  return "?";
}

Verdict ThreeDistinctClassification::verdict() const {
  Verdict v{"three-distinct-class", !three_distinct || !classes.empty(), {}};
  v.witness["three_distinct"] = three_distinct;
  Json cls = Json::array();
  for (auto c : classes) cls.push_back(to_string(c));
  v.witness["classes"] = cls;
  v.witness["spectrum"] = spectrum_json(spectrum);
  return v;
}

ThreeDistinctClassification classify_three_distinct(const Graph& g, double tol) {
  require_connected(g);
  ThreeDistinctClassification out;
  out.spectrum = distance_spectrum(g, {tol, kDefaultSnapTol});
  out.three_distinct = count_distinct(out.spectrum) == 3;
  if (!out.three_distinct) return out;

  const auto& it = out.spectrum.items;
  const int n = g.order();
  if (auto parts = multipartite_parts(g)) {
    if (parts->size() == 2) out.classes.push_back(ThreeDistinctClass::CompleteBipartite);
    if (parts->front() == parts->back()) out.classes.push_back(ThreeDistinctClass::RegularCompleteMultipartite);
  }
  if (n % 2 == 1 && it[0].exact && it[1].multiplicity == it[2].multiplicity && it[1].multiplicity >= 2) {
    const long l1 = std::lround(it[0].value);
    const long half = (n - 1) / 2;
    if (l1 % half == 0 && l1 / half >= 3) out.classes.push_back(ThreeDistinctClass::OddOrderMultiple);
  }
  if (it[0].exact && it[1].exact && it[2].exact && it[1].value >= 0 && it[2].value <= -3)
    out.classes.push_back(ThreeDistinctClass::Integral);
  return out;
}

// -- The -1 eigenvector family ---------------------------------------------------

std::vector<Rational> build_minus_one_eigenvector(const TreeRecipe& recipe) {
  const Graph t = build_t_family(recipe);  // validates the recipe
  std::vector<Rational> x{Rational(1), Rational(-1)};
  for (int p : recipe.steps) {
    const Rational xp = x[p];
    x.push_back(xp);
    x.push_back(-xp);
    x.push_back(-xp);
    x.push_back(xp);
  }
  const auto dx = mat_vec(distance_matrix(t), x);
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (dx[i] != -x[i])
      throw Error("build_minus_one_eigenvector: D x != -x at component " + std::to_string(i) +
                  " for recipe '" + recipe.to_string() + "'");
    sum += x[i];
  }
  if (sum != 0) throw Error("build_minus_one_eigenvector: component sum is " + rational_str(sum));
  return x;
}

// -- Path spectra -----------------------------------------------------------------

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> path_secular_spectrum(int n) {
  if (n <= 2) throw DomainError("path_secular_spectrum: n must be > 2");
  const double nd = n;
  std::vector<double> out;

  // Largest: tanh(t/2) tanh(n t/2) = 1/n, d = 1/(cosh t - 1) = 1/(2 sinh^2(t/2)).
  auto hyper = [&](double t) { return std::tanh(t / 2) * std::tanh(nd * t / 2) - 1 / nd; };
  double hi = 1.0;
  while (hyper(hi) <= 0) {
    hi *= 2;
    if (hi > 1e6) throw Error("path_secular_spectrum: no bracket for the hyperbolic equation");
  }
  const double th = bisect(hyper, 0.0, hi);
  out.push_back(1 / (2 * std::sinh(th / 2) * std::sinh(th / 2)));

  // Family (I): tan(t/2) tan(n t/2) = -1/n on (0, pi). Multiplying through by
  // cos(t/2) cos(n t/2) removes the poles without adding roots.
  auto trig = [&](double t) {
    return std::sin(t / 2) * std::sin(nd * t / 2) + std::cos(t / 2) * std::cos(nd * t / 2) / nd;
  };
  const int want = (n - 1) / 2;
  const int cells = 64 * n;
  const double h = std::numbers::pi / cells;
  int found = 0;
  for (int c = 1; c + 1 < cells; ++c) {
    const double a = c * h, b = (c + 1) * h;
    const double fa = trig(a), fb = trig(b);
    if ((fa < 0) != (fb < 0) || fa == 0) {
      const double t = fa == 0 ? a : bisect(trig, a, b);
      out.push_back(-1 / (2 * std::sin(t / 2) * std::sin(t / 2)));
      ++found;
    }
  }
  if (found != want)
    throw Error("path_secular_spectrum: found " + std::to_string(found) + " roots of the trigonometric equation, expected " +
                std::to_string(want));

  // Family (II): t = (2m-1) pi / n.
  for (int m = 1; m <= n / 2; ++m) {
    const double t = (2 * m - 1) * std::numbers::pi / nd;
    out.push_back(-1 / (2 * std::sin(t / 2) * std::sin(t / 2)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MinusOneResult path_minus_one(int k) {
  if (k < 2) throw DomainError("path_minus_one: k must be >= 2");
  const int mult = eigen_multiplicity_exact(distance_matrix(path(k)), -1);
  return {mult > 0, mult};
}

// -- Closed-form polynomials --------------------------------------------------------

StarCharPoly star_char_poly(int t) {
  if (t < 0) throw DomainError("star_char_poly: t must be >= 0");
  StarCharPoly s;
  s.linear_power = t + 1;
  s.quadratic = Polynomial::from_ints({-(t + 2L), -(2L * t + 2), 1});
  s.expanded = Polynomial::from_ints({2, 1}).pow(t + 1) * s.quadratic;
  return s;
}

Polynomial double_star_char_quartic(int s, int t) {
  if (s < 0 || t < 0) throw DomainError("double_star_char_quartic: s and t must be >= 0");
  const long S = s, T = t;
  return Polynomial::from_ints({-4 * S - 4 * T - 12, -(4 * S * T + 16 * S + 16 * T + 32),
                                -(5 * S * T + 14 * S + 14 * T + 20), -(2 * T + 2 * S), 1});
}

Polynomial t42_cubic(int q) {
  if (q < 2) throw DomainError("t42_cubic: q must be >= 2");
  const long Q = q;
  return Polynomial::from_ints({-4 * Q, -(Q * Q + 9 * Q - 4), -(6 * Q - 6), 1});
}

RatMatrix t42_quotient(int q) {
  if (q < 2) throw DomainError("t42_quotient: q must be >= 2");
  const long Q = q;
  const long rows[3][3] = {{0, Q, 2 * Q}, {1, 2 * (Q - 1), 3 * (Q - 1) + 1}, {2, 3 * (Q - 1) + 1, 4 * (Q - 1)}};
  RatMatrix b(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = rows[i][j];
  return b;
}

bool ThreeDistinctCandidate::determinant_identity() const {
  BigInt rhs = c;
  for (int k = 0; k < q; ++k) rhs *= product23;
  return pow_big(4, q) == rhs;
}

bool ThreeDistinctCandidate::trace_identity() const { return c * q + BigInt(q) * sum23 == 0; }

ThreeDistinctCandidate three_distinct_candidates(int q, int which) {
  if (q < 2) throw DomainError("three_distinct_candidates: q must be >= 2");
  if (which != 1 && which != 2) throw DomainError("three_distinct_candidates: case must be 1 or 2");
  ThreeDistinctCandidate r;
  r.q = q;
  r.which = which;
  // case 1: c = 4^q, l2 l3 = 1; case 2: c = 2^q, l2 l3 = 2.
  r.c = pow_big(which == 1 ? 4 : 2, q);
  r.product23 = which;
  r.sum23 = -r.c;
  const double a = r.c.get_d();                 // -(l2 + l3)
  const double p = which;                        // l2 l3
  const double root = std::sqrt(a * a - 4 * p);
  r.lambda1 = a * q;
  r.lambda3 = (-a - root) / 2;
  r.lambda2 = -2 * p / (a + root);               // (-a + root)/2 without cancellation
  return r;
}

// -- Sign table for h1, h2, l1, l2 ---------------------------------------------------

std::vector<ExclusionRow> form_exclusions(int q_max) {
  if (q_max < 2) throw DomainError("form_exclusions: q_max must be >= 2");
  std::vector<ExclusionRow> rows;
  for (int q = 2; q <= q_max; ++q) {
    const BigInt four_q = pow_big(4, q), two_q = pow_big(2, q);
    // h1, l1 = (q-1) 4^q - 6q + 6 +- sqrt(16^q - 4)
    // h2, l2 = (q-1) 2^q - 6q + 6 +- sqrt(4^q - 8)
    const BigInt a1 = BigInt(q - 1) * four_q - 6 * q + 6, b1 = four_q * four_q - 4;
    const BigInt a2 = BigInt(q - 1) * two_q - 6 * q + 6, b2 = four_q - 8;

    const double f = four_q.get_d(), t = two_q.get_d();
    const double r1 = std::sqrt(f * f - 4), r2 = std::sqrt(f - 8);
    ExclusionRow row;
    row.q = q;
    row.h1 = a1.get_d() + r1;
    row.h2 = a2.get_d() + r2;
    // 4^q - sqrt(16^q - 4) = 4 / (4^q + sqrt(16^q - 4)), likewise for 2^q.
    row.l1 = (q - 2) * f - 6.0 * q + 6 + 4 / (f + r1);
    row.l2 = (q - 2) * t - 6.0 * q + 6 + 8 / (t + r2);
    row.sign_h1 = sign_plus_sqrt(a1, b1);
    row.sign_h2 = sign_plus_sqrt(a2, b2);
    row.sign_l1 = sign_minus_sqrt(a1, b1);
    row.sign_l2 = sign_minus_sqrt(a2, b2);
    rows.push_back(row);
  }
  return rows;
}

Verdict check_form_exclusions(int q_max) {
  const auto rows = form_exclusions(std::max(q_max, 3));
  Verdict v{"form-exclusions", true, {}};
  Json failures = Json::array();
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      v.holds = false;
      failures.push_back(what);
    }
  };
  for (const auto& r : rows) {
    const std::string q = std::to_string(r.q);
    expect(r.sign_h1 > 0, "h1(" + q + ") > 0");
    expect(r.sign_h2 != 0, "h2(" + q + ") != 0");
    expect(r.sign_l1 != 0, "l1(" + q + ") != 0");
    expect(r.sign_l2 != 0, "l2(" + q + ") != 0");
    if (r.q >= 3) expect(r.sign_h2 > 0, "h2(" + q + ") > 0");
    if (r.q >= 3) expect(r.sign_l1 > 0, "l1(" + q + ") > 0");
    if (r.q >= 4) expect(r.sign_l2 > 0, "l2(" + q + ") > 0");
  }
  Json table = Json::array();
  for (const auto& r : rows)
    table.push_back({{"q", r.q}, {"h1", r.h1}, {"h2", r.h2}, {"l1", r.l1}, {"l2", r.l2}});
  v.witness["failures"] = failures;
  v.witness["table"] = table;
  return v;
}

std::pair<double, double> remark3_second_eigenvalues() {
  const auto e1 = eig_symmetric(f1_submatrix());
  const auto e2 = eig_symmetric(f2_submatrix());
  return {e1[e1.size() - 2], e2[e2.size() - 2]};
}

Verdict s22_plus_p4_negative_check(int depth) {
  if (depth < 1) throw DomainError("s22_plus_p4_negative_check: depth must be >= 1");
  Verdict v{"s22-p4-growth", true, {}};
  Json levels = Json::array();
  Json hits = Json::array();
  std::vector<std::pair<Graph, std::vector<int>>> frontier{{double_star(2, 2), {}}};
  for (int level = 1; level <= depth; ++level) {
    std::vector<std::pair<Graph, std::vector<int>>> next;
    int nonzero = 0;
    for (const auto& [g, seq] : frontier) {
      for (int v_attach = 0; v_attach < g.order(); ++v_attach) {
        Graph h = attach_pendant_p4(g, v_attach);
        auto s = seq;
        s.push_back(v_attach);
        const int mult = eigen_multiplicity_exact(distance_matrix(h), -1);
        if (mult != 0) {
          ++nonzero;
          hits.push_back({{"attachments", s}, {"multiplicity", mult}, {"graph6", encode_graph6(h)}});
        }
        next.emplace_back(std::move(h), std::move(s));
      }
    }
    levels.push_back({{"depth", level}, {"trees", next.size()}, {"with_minus_one", nonzero}});
    if (nonzero) v.holds = false;
    frontier = std::move(next);
  }
  v.witness["levels"] = levels;
  v.witness["hits"] = hits;
  return v;
}

}  // namespace distspec
