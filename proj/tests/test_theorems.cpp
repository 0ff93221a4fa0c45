#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "distspec/enumeration.hpp"
#include "distspec/error.hpp"
#include "distspec/families.hpp"
#include "distspec/quotient.hpp"
#include "distspec/spectra.hpp"
#include "distspec/theorems.hpp"
#include "oracles.hpp"

using namespace distspec;

namespace {

std::vector<double> adjacency_desc(const Graph& g) {
  auto e = eig_symmetric(adjacency_matrix(g));
  std::reverse(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("tree determinant closed form") {
  auto v = check_graham_pollack(path(4));
  CHECK(v.holds);
  CHECK(v.claim_id == "graham-pollack");
  CHECK(v.witness["det"] == "-12");
  CHECK(check_graham_pollack(star(6)).witness["det"] == "-80");
  for (const auto& t : all_free_trees(10)) CHECK(check_graham_pollack(t).holds);
  CHECK_THROWS_AS(check_graham_pollack(cycle(4)), DomainError);
}

TEST_CASE("merris interlacing") {
  CHECK(check_merris_interlacing(path(6)).holds);
  CHECK(check_merris_interlacing(star(8)).holds);
  auto p2 = check_merris_interlacing(path(2));
  CHECK(p2.holds);
  CHECK(p2.witness["first_equality"] == true);
  // lambda_2(D(P4)) = sqrt(2) - 2 = -2/mu_1(P4): the first inequality is tight
  CHECK(check_merris_interlacing(path(4)).witness["first_equality"] == true);
  CHECK(check_merris_interlacing(path(5)).witness["first_equality"] == false);
  for (int n = 3; n <= 9; ++n)
    for (const auto& t : all_free_trees(n)) CHECK(check_merris_interlacing(t).holds);
  CHECK_THROWS_AS(check_merris_interlacing(cycle(5)), DomainError);
}

TEST_CASE("tree inertia") {
  auto v = check_tree_inertia(path(2));
  CHECK(v.holds);
  CHECK(v.witness["negative"] == 1);
  auto s = check_tree_inertia(double_star(2, 2));
  CHECK(s.holds);
  CHECK(s.witness["negative"] == 5);
}

TEST_CASE("collins bound") {
  auto k15 = check_collins_bound(star(6));
  CHECK(k15.holds);
  CHECK(k15.witness["multiplicity_minus2"] == 4);
  auto s22 = check_collins_bound(double_star(2, 2));
  CHECK(s22.holds);
  CHECK(s22.witness["multiplicity_minus2"] == 2);
  CHECK(check_collins_bound(path(6)).holds);
}

TEST_CASE("smallest eigenvalue bound") {
  auto k23 = check_smallest_eig_bound(complete_multipartite({2, 3}));
  CHECK(k23.holds);
  CHECK(k23.witness["equality"] == true);
  CHECK(k23.witness["lambda_min"].get<double>() == doctest::Approx(-2));
  auto p5 = check_smallest_eig_bound(path(5));
  CHECK(p5.holds);
  CHECK(p5.witness["equality"] == false);
  auto pet = check_smallest_eig_bound(petersen());
  CHECK(pet.holds);
  CHECK(pet.witness["equality"] == false);
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) CHECK(check_smallest_eig_bound(g).holds);
  CHECK_THROWS_AS(check_smallest_eig_bound(Graph(2, {})), DisconnectedError);
}

TEST_CASE("laplacian distinct bound") {
  auto p4 = check_laplacian_distinct_bound(path(4));
  CHECK(p4.holds);
  CHECK(p4.witness["distinct"] == 4);
  CHECK(check_laplacian_distinct_bound(complete(6)).witness["distinct"] == 2);
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) CHECK(check_laplacian_distinct_bound(g).holds);
}

TEST_CASE("regular diameter-two distance spectra") {
  auto pet = regular_d2_distance_spectrum(adjacency_desc(petersen()), 10, 3);
  auto want = distance_spectrum(petersen()).expanded();
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(pet[i] - want[i]) < 1e-8);
  auto c5 = regular_d2_distance_spectrum(adjacency_desc(cycle(5)), 5, 2);
  auto dc5 = distance_spectrum(cycle(5)).expanded();
  for (std::size_t i = 0; i < dc5.size(); ++i) CHECK(std::abs(c5[i] - dc5[i]) < 1e-8);
  auto k4 = regular_d2_distance_spectrum({3, -1, -1, -1}, 4, 3);
  CHECK(k4[0] == 3);
  CHECK(k4[3] == -1);
  CHECK_THROWS_AS(regular_d2_distance_spectrum({2, 0, 0}, 3, 3), DomainError);
  // Random strongly regular-ish check on complete multipartite regular graphs.
  for (int parts = 2; parts <= 4; ++parts) {
    auto g = complete_multipartite(std::vector<int>(parts, 3));
    int k = g.degree(0);
    auto got = regular_d2_distance_spectrum(adjacency_desc(g), g.order(), k);
    auto ref = distance_spectrum(g).expanded();
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(got[i] - ref[i]) < 1e-8);
  }
}

TEST_CASE("moore graph adjacency eigenvalues") {
  auto k2 = moore_adjacency_eigs(2);
  auto c5 = adjacency_desc(cycle(5));
  CHECK(k2.degree == 2);
  CHECK(std::abs(k2.plus - c5[1]) < 1e-12);
  CHECK(std::abs(k2.minus - c5[4]) < 1e-12);
  auto k3 = moore_adjacency_eigs(3);
  CHECK(k3.plus == doctest::Approx(1));
  CHECK(k3.minus == doctest::Approx(-2));
  auto k7 = moore_adjacency_eigs(7);
  CHECK(k7.plus == doctest::Approx(2));
  CHECK(k7.minus == doctest::Approx(-3));
}

TEST_CASE("three distinct eigenvalue classification") {
  auto k23 = classify_three_distinct(complete_multipartite({2, 3}));
  CHECK(k23.three_distinct);
  REQUIRE_FALSE(k23.classes.empty());
  CHECK(k23.classes[0] == ThreeDistinctClass::CompleteBipartite);
  auto pet = classify_three_distinct(petersen());
  CHECK(pet.three_distinct);
  CHECK(std::find(pet.classes.begin(), pet.classes.end(), ThreeDistinctClass::Integral) != pet.classes.end());
  CHECK(pet.spectrum.items[2].value == -3);
  CHECK(pet.spectrum.items[2].exact);
  CHECK(pet.verdict().holds);
  auto p4 = classify_three_distinct(path(4));
  CHECK_FALSE(p4.three_distinct);
  CHECK(p4.verdict().holds);
  auto k222 = classify_three_distinct(complete_multipartite({2, 2, 2}));
  CHECK(std::find(k222.classes.begin(), k222.classes.end(),
                  ThreeDistinctClass::RegularCompleteMultipartite) != k222.classes.end());
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) CHECK(classify_three_distinct(g).verdict().holds);
}

TEST_CASE("minus one eigenvectors") {
  CHECK(build_minus_one_eigenvector(TreeRecipe{}) == std::vector<Rational>{1, -1});
  auto x6 = build_minus_one_eigenvector(TreeRecipe{{1}});
  CHECK(x6 == std::vector<Rational>{1, -1, -1, 1, 1, -1});
  // oracle: exact nullspace of D(P6)+I is one-dimensional and proportional
  auto basis = nullspace(RatMatrix(distance_matrix(build_t_family(TreeRecipe{{1}}))).shifted(-1));
  REQUIRE(basis.size() == 1);
  Rational ratio = basis[0][0] / x6[0];
  for (std::size_t i = 0; i < x6.size(); ++i) CHECK(basis[0][i] == ratio * x6[i]);
  auto x10 = build_minus_one_eigenvector(TreeRecipe{{1, 2}});
  CHECK(x10.size() == 10);
  CHECK_THROWS_AS(build_minus_one_eigenvector(TreeRecipe{{2}}), DomainError);
}

TEST_CASE("path secular spectra") {
  auto p4 = path_secular_spectrum(4);
  REQUIRE(p4.size() == 4);
  CHECK(std::abs(p4[0] - (-2 - std::sqrt(2.0))) < 1e-10);
  CHECK(std::abs(p4[2] - (std::sqrt(2.0) - 2)) < 1e-10);
  auto p6 = path_secular_spectrum(6);
  CHECK(std::count_if(p6.begin(), p6.end(), [](double x) { return std::abs(x + 1) < 1e-12; }) == 1);
  for (int n = 3; n <= 40; ++n) {
    auto a = path_secular_spectrum(n);
    auto b = eig_symmetric(distance_matrix(path(n)));
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
  }
  CHECK_THROWS_AS(path_secular_spectrum(2), DomainError);
}

TEST_CASE("path minus one") {
  CHECK(path_minus_one(2).has);
  CHECK(path_minus_one(2).multiplicity == 1);
  CHECK_FALSE(path_minus_one(8).has);
  CHECK(path_minus_one(10).multiplicity == 1);
  CHECK(path_minus_one(14).has);
}

TEST_CASE("star characteristic polynomial") {
  for (int t = 0; t <= 8; ++t) {
    auto s = star_char_poly(t);
    CHECK(s.linear_power == t + 1);
    CHECK(s.expanded == char_poly(distance_matrix(star(t + 3))));
    // quadratic roots equal n-2 +- sqrt(n^2-3n+3) with n = t+3
    int n = t + 3;
    double disc = double(n) * n - 3 * n + 3;
    CHECK(std::abs(poly_eval(s.quadratic, 0).get_d() - ((n - 2) * (n - 2) - disc)) < 1e-9);
  }
  auto x = Polynomial::from_ints({0, 1});
  CHECK(star_char_poly(1).expanded ==
        (x + Polynomial::from_ints({2})).pow(2) * Polynomial::from_ints({-3, -4, 1}));
}

TEST_CASE("double star quartic") {
  for (int s = 0; s <= 5; ++s)
    for (int t = 0; t <= 5; ++t) {
      auto f = double_star_char_quartic(s, t);
      CHECK(f == char_poly(double_star_quotient(s, t)));
      CHECK(poly_eval(f, -1) == -s * t + 1);
      CHECK(poly_eval(f, -2) == -12 * s * t - 12 * s - 12 * t - 12);
    }
  CHECK(poly_eval(double_star_char_quartic(1, 1), -1) == 0);
  CHECK(poly_eval(double_star_char_quartic(2, 3), -1) == -5);
  CHECK(poly_eval(double_star_char_quartic(2, 3), -2) == -144);
  CHECK(double_star_char_quartic(0, 0) == char_poly(distance_matrix(path(4))));
}

TEST_CASE("t42 cubic") {
  CHECK(t42_cubic(2) == Polynomial::from_ints({-8, -18, -6, 1}));
  CHECK(t42_cubic(3) == Polynomial::from_ints({-12, -32, -12, 1}));
  for (int q = 2; q <= 10; ++q) CHECK(t42_cubic(q) == char_poly(t42_quotient(q)));
}

TEST_CASE("three distinct candidates") {
  auto c1 = three_distinct_candidates(2, 1);
  CHECK(c1.lambda1 == 32);
  CHECK(c1.product23 == 1);
  CHECK(c1.lambda2 * c1.lambda3 == doctest::Approx(1));
  auto c2 = three_distinct_candidates(2, 2);
  CHECK(c2.lambda1 == 8);
  CHECK(c2.lambda2 * c2.lambda3 == doctest::Approx(2));
  auto c3 = three_distinct_candidates(3, 2);
  CHECK(std::abs(c3.lambda2 - (-8 + std::sqrt(56.0)) / 2) < 1e-12);
  for (int q = 2; q <= 30; ++q)
    for (int which : {1, 2}) {
      auto c = three_distinct_candidates(q, which);
      CHECK(c.determinant_identity());
      CHECK(c.trace_identity());
      double scale = std::abs(c.lambda1);
      CHECK(std::abs(c.lambda1 + q * c.lambda2 + q * c.lambda3) <= 1e-9 * scale);
      CHECK(std::abs(c.lambda2 * c.lambda3 - which) <= 1e-9 * which);
    }
}

TEST_CASE("form exclusions") {
  auto rows = form_exclusions(20);
  CHECK(std::abs(rows[0].h2 - (2 * std::sqrt(2.0) - 2)) < 1e-10);
  CHECK(std::abs(rows[0].l1 - (10 - 6 * std::sqrt(7.0))) < 1e-10);
  CHECK(std::abs(rows[1].l2 - (4 - 2 * std::sqrt(14.0))) < 1e-10);
  CHECK(rows[0].sign_l2 < 0);
  CHECK(std::abs(rows[0].l2 - (-2 - 2 * std::sqrt(2.0))) < 1e-10);
  for (const auto& r : rows) {
    // float value agrees in sign with the exact decision
    for (auto [val, sg] : {std::pair{r.h1, r.sign_h1}, {r.h2, r.sign_h2}, {r.l1, r.sign_l1}, {r.l2, r.sign_l2}})
      CHECK((val > 0) == (sg > 0));
  }
  CHECK(check_form_exclusions(20).holds);
}

TEST_CASE("remark values") {
  auto [a, b] = remark3_second_eigenvalues();
  CHECK(std::abs(a - 0.0841) < 5e-5);
  CHECK(std::abs(b - 0.3542) < 5e-5);
}

TEST_CASE("s22 growth") {
  CHECK(eigen_multiplicity_exact(distance_matrix(double_star(2, 2)), -1) == 1);
  auto v = s22_plus_p4_negative_check(1);
  CHECK(v.holds);
  CHECK(v.witness["levels"][0]["trees"] == 6);
  CHECK(v.witness["levels"][0]["with_minus_one"] == 0);
  CHECK(s22_plus_p4_negative_check(2).holds);
}

TEST_CASE("random trees pass every tree check") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = oracle::random_tree(rng, 2 + trial % 18);
    CHECK(check_graham_pollack(t).holds);
    CHECK(check_merris_interlacing(t).holds);
    CHECK(check_tree_inertia(t).holds);
    CHECK(check_collins_bound(t).holds);
  }
}

}  // TEST_SUITE
