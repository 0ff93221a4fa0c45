#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

using BigInt = mpz_class;
/// Exact rational. gmpxx keeps arithmetic results in lowest terms with a
/// positive denominator; make_rational canonicalizes explicit fractions.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
bool is_normalized(const Rational& q);
bool is_integer(const Rational& q);

class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int order) : order_(order), data_(static_cast<std::size_t>(order) * order) {}
  explicit RatMatrix(const IntMatrix& m);

  int order() const noexcept { return order_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * order_ + j]; }
  const Rational& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * order_ + j];
  }
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  /// this - lam*I
  RatMatrix shifted(const Rational& lam) const;
  std::vector<double> to_double() const;

 private:
  int order_ = 0;
  std::vector<Rational> data_;
};

/// Coefficients ascending by degree; trailing zeros are trimmed so the zero
/// polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial from_ints(std::initializer_list<long> ascending);
  /// x - root
  static Polynomial linear(const Rational& root);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(int k) const;
  bool has_integer_coeffs() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(unsigned e) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

BigInt det_bareiss(const IntMatrix& m);

struct RankNullity {
  int rank = 0;
  int nullity = 0;
};
RankNullity rank_nullity(const RatMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column of the RREF.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

/// Nullity of m - lam*I.
int eigen_multiplicity_exact(const IntMatrix& m, long lam);

inline constexpr int kDefaultCharPolyBound = 64;
/// det(xI - m) by Faddeev-LeVerrier.
Polynomial char_poly(const IntMatrix& m, int max_order = kDefaultCharPolyBound);
Polynomial char_poly(const RatMatrix& m, int max_order = kDefaultCharPolyBound);

Rational poly_eval(const Polynomial& p, const Rational& x);

struct IntegerRoot {
  long root;
  int multiplicity;
  friend bool operator==(const IntegerRoot&, const IntegerRoot&) = default;
};
/// All integer roots (descending) of an integer-coefficient polynomial.
std::vector<IntegerRoot> poly_integer_roots(const Polynomial& p);

std::vector<Rational> mat_vec(const IntMatrix& m, const std::vector<Rational>& x);

}  // namespace distspec
