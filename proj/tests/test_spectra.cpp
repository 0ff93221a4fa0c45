#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "distspec/error.hpp"
#include "distspec/exact.hpp"
#include "distspec/families.hpp"
#include "distspec/spectra.hpp"
#include "oracles.hpp"

using namespace distspec;

TEST_SUITE("spectra") {

TEST_CASE("jacobi small cases") {
  auto e = eig_symmetric(IntMatrix{{0, 1}, {1, 0}});
  REQUIRE(e.size() == 2);
  CHECK(e[0] == doctest::Approx(-1));
  CHECK(e[1] == doctest::Approx(1));
  auto k4 = eig_symmetric(distance_matrix(complete(4)));
  CHECK(k4[0] == doctest::Approx(-1));
  CHECK(k4[2] == doctest::Approx(-1));
  CHECK(k4[3] == doctest::Approx(3));
  auto f1 = eig_symmetric(f1_submatrix());
  CHECK(std::abs(f1[3] - 0.0841) < 5e-5);
  CHECK_THROWS_AS(eig_symmetric(IntMatrix{{0, 1}, {2, 0}}), DomainError);
  CHECK(eig_symmetric(IntMatrix(1, 5)) == std::vector<double>{5});
}

TEST_CASE("grouping") {
  std::vector<double> v{-3.0000000001, -2.9999999999, 0, 15};
  auto s = group_spectrum(v, 1e-6);
  REQUIRE(s.items.size() == 3);
  CHECK(s.items[0].value == 15);
  CHECK(s.items[1].value == 0);
  CHECK(s.items[2].value == doctest::Approx(-3));
  CHECK(s.items[2].multiplicity == 2);
  CHECK(s.n == 4);
  CHECK(group_spectrum(std::vector<double>{}, 1e-7).items.empty());
  // single linkage: a chain of close values merges even if the ends are far apart
  auto chain = group_spectrum(std::vector<double>{0, 0.5e-7, 1e-7, 1.5e-7}, 0.6e-7);
  CHECK(chain.items.size() == 1);
}

TEST_CASE("petersen distance spectrum") {
  auto s = distance_spectrum(petersen());
  REQUIRE(s.items.size() == 3);
  CHECK(s.items[0].value == 15);
  CHECK(s.items[1].value == 0);
  CHECK(s.items[2].value == -3);
  CHECK(s.items[0].multiplicity == 1);
  CHECK(s.items[1].multiplicity == 4);
  CHECK(s.items[2].multiplicity == 5);
  for (const auto& it : s.items) CHECK(it.exact);
  CHECK(inertia(s) == Inertia{1, 4, 5});
  CHECK(count_distinct(s) == 3);
}

TEST_CASE("closed form spectra") {
  // star K_{1,4}: n-2 +- sqrt(n^2-3n+3) with n = 5, and -2 three times
  auto k14 = distance_spectrum(star(5));
  REQUIRE(k14.items.size() == 3);
  CHECK(std::abs(k14.items[0].value - (3 + std::sqrt(13.0))) < 1e-8);
  CHECK(std::abs(k14.items[1].value - (3 - std::sqrt(13.0))) < 1e-8);
  CHECK(k14.items[2].value == -2);
  CHECK(k14.items[2].multiplicity == 3);

  auto p4 = distance_spectrum(path(4));
  REQUIRE(p4.items.size() == 4);
  CHECK(std::abs(p4.items[0].value - (2 + std::sqrt(10.0))) < 1e-8);
  CHECK(std::abs(p4.items[1].value - (std::sqrt(2.0) - 2)) < 1e-8);
  CHECK(std::abs(p4.items[2].value - (2 - std::sqrt(10.0))) < 1e-8);
  CHECK(std::abs(p4.items[3].value - (-2 - std::sqrt(2.0))) < 1e-8);

  auto s22 = distance_spectrum(double_star(2, 2));
  REQUIRE(s22.items.size() == 5);
  CHECK(s22.items[0].value == 10);
  CHECK(std::abs(s22.items[1].value - (-2.5 + std::sqrt(17.0) / 2)) < 1e-8);
  CHECK(s22.items[2].value == -1);
  CHECK(s22.items[3].value == -2);
  CHECK(s22.items[3].multiplicity == 2);
  CHECK(std::abs(s22.items[4].value - (-2.5 - std::sqrt(17.0) / 2)) < 1e-8);
}

TEST_CASE("near-integer values are only snapped when exact") {
  // sqrt(2)-2 is nowhere near an integer; 15 in Petersen is snapped.
  auto p4 = distance_spectrum(path(4));
  for (const auto& it : p4.items) CHECK_FALSE(it.exact);
  // a loose snap tolerance must still refuse a non-eigenvalue
  SpectrumOptions loose;
  loose.snap_tol = 0.6;
  auto s = distance_spectrum(path(4), loose);
  for (const auto& it : s.items) CHECK_FALSE(it.exact);
}

TEST_CASE("disconnected input") {
  CHECK_THROWS_AS(distance_spectrum(Graph(3, {{0, 1}})), DisconnectedError);
  CHECK_THROWS_AS(laplacian_spectrum(Graph(3, {{0, 1}})), DisconnectedError);
}

TEST_CASE("inertia and count_distinct") {
  CHECK(inertia(distance_spectrum(complete(3))) == Inertia{1, 0, 2});
  CHECK(count_distinct(distance_spectrum(complete(6))) == 2);
  CHECK(count_distinct(distance_spectrum(path(4))) == 4);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 12;
    CHECK(inertia(distance_spectrum(oracle::random_tree(rng, n))) == Inertia{1, 0, n - 1});
  }
}

TEST_CASE("laplacian spectra") {
  auto k2 = laplacian_spectrum(path(2));
  REQUIRE(k2.items.size() == 2);
  CHECK(k2.items[0].value == 2);
  CHECK(k2.items[1].value == 0);
  auto p3 = laplacian_spectrum(path(3));
  REQUIRE(p3.items.size() == 3);
  CHECK(p3.items[0].value == 3);
  CHECK(p3.items[1].value == 1);
  CHECK(p3.items[2].value == 0);
  auto k14 = laplacian_spectrum(star(5));
  // oracle: integer roots of the Laplacian characteristic polynomial
  auto roots = poly_integer_roots(char_poly(laplacian_matrix(star(5))));
  REQUIRE(roots.size() == k14.items.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CHECK(k14.items[i].value == roots[i].root);
    CHECK(k14.items[i].multiplicity == roots[i].multiplicity);
  }
  CHECK(roots == std::vector<IntegerRoot>{{5, 1}, {1, 3}, {0, 1}});
}

TEST_CASE("trace and sum of squares") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 20;
    auto g = oracle::random_connected(rng, n, 0.1);
    auto d = distance_matrix(g);
    auto s = distance_spectrum(g);
    double tr = 0, sq = 0, want_sq = 0, dmax = 0;
    for (const auto& it : s.items) {
      tr += it.value * it.multiplicity;
      sq += it.value * it.value * it.multiplicity;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        want_sq += double(d(i, j)) * d(i, j);
        dmax = std::max<double>(dmax, d(i, j));
      }
    double tol = 1e-8 * n * dmax;
    CHECK(std::abs(tr) <= tol);
    CHECK(std::abs(sq - want_sq) <= tol * std::max(1.0, want_sq));
  }
}

TEST_CASE("relabeling invariance") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + trial % 12;
    auto g = oracle::random_connected(rng, n, 0.2);
    auto a = distance_spectrum(g).expanded();
    auto b = distance_spectrum(g.relabeled(oracle::random_perm(rng, n))).expanded();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-8);
  }
}

TEST_CASE("cauchy interlacing on principal submatrices") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 12;
    auto d = distance_matrix(oracle::random_connected(rng, n, 0.2));
    auto perm = oracle::random_perm(rng, n);
    int m = 1 + static_cast<int>(rng() % n);
    std::vector<int> idx(perm.begin(), perm.begin() + m);
    auto a = eig_symmetric(d), b = eig_symmetric(d.principal(idx));
    std::reverse(a.begin(), a.end());
    std::reverse(b.begin(), b.end());
    for (int i = 0; i < m; ++i) {
      CHECK(b[i] <= a[i] + 1e-8);
      CHECK(a[n - m + i] <= b[i] + 1e-8);
    }
  }
}

TEST_CASE("jacobi agrees with exact integer roots when char poly splits over Z") {
  for (const auto& g : {petersen(), complete_multipartite({2, 2, 2}), complete_multipartite({3, 3}),
                        complete(5), double_star(2, 2)}) {
    auto d = distance_matrix(g);
    auto roots = poly_integer_roots(char_poly(d));
    int total = 0;
    for (auto& r : roots) total += r.multiplicity;
    if (total != g.order()) continue;
    auto s = distance_spectrum(g);
    REQUIRE(s.items.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(s.items[i].value == roots[i].root);
      CHECK(s.items[i].multiplicity == roots[i].multiplicity);
      CHECK(s.items[i].exact);
    }
  }
}

}  // TEST_SUITE
