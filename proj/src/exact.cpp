#include "distspec/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <type_traits>

#include "distspec/error.hpp"

namespace distspec {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_normalized(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1 || (q.get_num() == 0 && q.get_den() == 1);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.order()) {
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) (*this)(i, j) = static_cast<long>(m(i, j));
}

RatMatrix RatMatrix::shifted(const Rational& lam) const {
  RatMatrix out = *this;
  for (int i = 0; i < order_; ++i) out(i, i) -= lam;
  return out;
}

std::vector<double> RatMatrix::to_double() const {
  std::vector<double> out(data_.size());
  std::transform(data_.begin(), data_.end(), out.begin(), [](const Rational& q) { return q.get_d(); });
  return out;
}

// -- Polynomial ---------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_ints(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

bool Polynomial::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), is_integer);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = from_ints({1});
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

// -- Determinant / rank ---------------------------------------------------

BigInt det_bareiss(const IntMatrix& m) {
  const int n = m.order();
  if (n == 0) return 1;
  std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at(i, j) = static_cast<long>(m(i, j));

  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

namespace {

std::size_t bit_cost(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rational>>& rows, int cols) {
  const int nrows = static_cast<int>(rows.size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < nrows; ++c) {
    int best = -1;
    std::size_t best_cost = 0;
    for (int i = r; i < nrows; ++i) {
      if (rows[i][c] == 0) continue;
      std::size_t cost = bit_cost(rows[i][c]);
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) continue;
    std::swap(rows[r], rows[best]);
    const Rational inv = 1 / rows[r][c];
    for (int j = c; j < cols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> to_rows(const RatMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.order(), std::vector<Rational>(m.order()));
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

RankNullity rank_nullity(const RatMatrix& m) {
  auto rows = to_rows(m);
  const int rank = static_cast<int>(rref(rows, m.order()).size());
  return {rank, m.order() - rank};
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
  const int n = m.order();
  auto rows = to_rows(m);
  auto pivots = rref(rows, n);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(n);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

int eigen_multiplicity_exact(const IntMatrix& m, long lam) {
  return rank_nullity(RatMatrix(m).shifted(Rational(lam))).nullity;
}

// -- Characteristic polynomial --------------------------------------------

namespace {

// Faddeev-LeVerrier: M_1 = I, c_{n-1} = -tr(A)
//   M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
template <typename Scalar, typename Mat>
std::vector<Scalar> faddeev_leverrier(const Mat& mat, int n) {
  std::vector<Scalar> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = mat(i, j);

  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  std::vector<Scalar> mk(static_cast<std::size_t>(n) * n), am(mk.size());
  for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i) * n + i] = 1;

  for (int k = 1; k <= n; ++k) {
    // am = A * mk
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Scalar s = 0;
        for (int l = 0; l < n; ++l) {
          const Scalar& x = a[static_cast<std::size_t>(i) * n + l];
          if (x != 0) s += x * mk[static_cast<std::size_t>(l) * n + j];
        }
        am[static_cast<std::size_t>(i) * n + j] = std::move(s);
      }
    }
    Scalar tr = 0;
    for (int i = 0; i < n; ++i) tr += am[static_cast<std::size_t>(i) * n + i];
    if constexpr (std::is_same_v<Scalar, BigInt>) {
      BigInt q;
      mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
      c[n - k] = -q;
    } else {
      c[n - k] = -tr / k;
    }
    mk = am;
    for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i) * n + i] += c[n - k];
  }
  return c;
}

void check_bound(int n, int max_order) {
  if (n > max_order)
    throw DomainError("char_poly: order " + std::to_string(n) + " exceeds bound " +
                      std::to_string(max_order) + "; use the numeric eigensolver instead");
}

}  // namespace

Polynomial char_poly(const IntMatrix& m, int max_order) {
  check_bound(m.order(), max_order);
  auto c = faddeev_leverrier<BigInt>(
      [&](int i, int j) { return BigInt(static_cast<long>(m(i, j))); }, m.order());
  std::vector<Rational> q(c.begin(), c.end());
  return Polynomial(std::move(q));
}

Polynomial char_poly(const RatMatrix& m, int max_order) {
  check_bound(m.order(), max_order);
  return Polynomial(faddeev_leverrier<Rational>(m, m.order()));
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// -- Integer roots ----------------------------------------------------------

namespace {

// Synthetic division by (x - r); returns remainder.
BigInt synthetic_divide(std::vector<BigInt>& c, long r) {
  // c ascending; quotient overwrites c[1..] shifted down.
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<BigInt> q(d);
  BigInt acc = c[d];
  for (int k = d - 1; k >= 0; --k) {
    q[k] = acc;
    acc = acc * r + c[k];
  }
  if (acc == 0) c = std::move(q);
  return acc;
}

std::vector<long> candidate_roots(const std::vector<BigInt>& c) {
  // Divisors of the constant term when it fits a machine word, otherwise
  // every integer inside the Cauchy bound.
  std::vector<long> out;
  const BigInt c0 = abs(c.front());
  if (c0.fits_slong_p() && c0.get_si() <= (1L << 50)) {
    const long v = c0.get_si();
    for (long d = 1; d * d <= v; ++d) {
      if (v % d) continue;
      out.push_back(d);
      if (d != v / d) out.push_back(v / d);
    }
  } else {
    BigInt bound = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) bound = std::max(bound, BigInt(abs(c[k])));
    bound = bound / abs(c.back()) + 1;
    if (bound > 10'000'000) throw DomainError("poly_integer_roots: coefficients too large");
    for (long d = 1; d <= bound.get_si(); ++d) out.push_back(d);
  }
  std::vector<long> both;
  for (long d : out) {
    both.push_back(d);
    both.push_back(-d);
  }
  std::sort(both.begin(), both.end(), std::greater<>());
  return both;
}

}  // namespace

std::vector<IntegerRoot> poly_integer_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("poly_integer_roots: zero polynomial has every root");
  if (!p.has_integer_coeffs()) throw DomainError("poly_integer_roots: non-integer coefficient");
  std::vector<BigInt> c;
  for (const auto& q : p.coeffs()) c.push_back(q.get_num());

  std::vector<IntegerRoot> roots;
  int zero_mult = 0;
  while (c.size() > 1 && c.front() == 0) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (c.size() > 1) {
    for (long r : candidate_roots(c)) {
      int mult = 0;
      while (c.size() > 1) {
        auto copy = c;
        if (synthetic_divide(copy, r) != 0) break;
        c = std::move(copy);
        ++mult;
      }
      if (mult > 0) roots.push_back({r, mult});
    }
  }
  if (zero_mult > 0) roots.push_back({0, zero_mult});
  std::sort(roots.begin(), roots.end(), [](auto& x, auto& y) { return x.root > y.root; });
  return roots;
}

std::vector<Rational> mat_vec(const IntMatrix& m, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != m.order()) throw DomainError("mat_vec: size mismatch");
  std::vector<Rational> y(x.size());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j)
      if (m(i, j) != 0) y[i] += x[j] * static_cast<long>(m(i, j));
  return y;
}

}  // namespace distspec
