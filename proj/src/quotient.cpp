#include "distspec/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

#include "distspec/error.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

void Partition::validate(int n) const {
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("partition has an empty block");
    for (int v : b) {
      if (v < 0 || v >= n) throw DomainError("partition label " + std::to_string(v) + " out of range");
      if (seen[v]) throw DomainError("partition label " + std::to_string(v) + " appears twice");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw DomainError("partition does not cover all " + std::to_string(n) + " vertices");
}

std::vector<int> Partition::sizes() const {
  std::vector<int> s;
  for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
  return s;
}

Partition Partition::normalized() const {
  Partition p = *this;
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return p;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks[i][j]);
    }
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  Partition p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    std::string_view block = text.substr(pos, semi == text.npos ? text.npos : semi - pos);
    std::vector<int> b;
    std::size_t q = 0;
    while (q <= block.size() && !block.empty()) {
      std::size_t comma = block.find(',', q);
      std::string tok(block.substr(q, comma == block.npos ? block.npos : comma - q));
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (tok.empty() || used != tok.size()) throw DomainError("bad partition label '" + tok + "'");
      b.push_back(v);
      if (comma == block.npos) break;
      q = comma + 1;
    }
    p.blocks.push_back(std::move(b));
    if (semi == text.npos) break;
    pos = semi + 1;
  }
  return p;
}

Partition Partition::singletons(int n) {
  Partition p;
  for (int v = 0; v < n; ++v) p.blocks.push_back({v});
  return p;
}

QuotientResult quotient(const IntMatrix& m, const Partition& p) {
  p.validate(m.order());
  const int k = static_cast<int>(p.blocks.size());
  QuotientResult r{RatMatrix(k), true};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      BigInt total = 0;
      std::int64_t first = 0;
      for (std::size_t a = 0; a < p.blocks[i].size(); ++a) {
        std::int64_t row = 0;
        for (int v : p.blocks[j]) row += m(p.blocks[i][a], v);
        if (a == 0) first = row;
        else if (row != first) r.equitable = false;
        total += static_cast<long>(row);
      }
      r.matrix(i, j) = make_rational(total, static_cast<long>(p.blocks[i].size()));
    }
  }
  return r;
}

Partition degree_partition(const Graph& g) {
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < g.order(); ++v) by_degree[g.degree(v)].push_back(v);
  Partition p;
  for (auto& [deg, vs] : by_degree) p.blocks.push_back(std::move(vs));
  return p;
}

RatMatrix double_star_quotient(int s, int t) {
  if (s < 0 || t < 0) throw DomainError("double_star_quotient: s and t must be >= 0");
  const long rows[4][4] = {{2L * s, 1, 2, 3L * (t + 1)},
                           {s + 1L, 0, 1, 2L * (t + 1)},
                           {2L * (s + 1), 1, 0, t + 1L},
                           {3L * (s + 1), 2, 1, 2L * t}};
  RatMatrix b(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = rows[i][j];
  return b;
}

Partition double_star_orbit_partition(int s, int t) {
  if (s < 0 || t < 0) throw DomainError("double_star_orbit_partition: s and t must be >= 0");
  Partition p;
  std::vector<int> left(s + 1), right(t + 1);
  std::iota(left.begin(), left.end(), 2);
  std::iota(right.begin(), right.end(), 2 + s + 1);
  p.blocks = {left, {0}, {1}, right};
  return p;
}

std::vector<double> quotient_eigenvalues(const RatMatrix& b, const std::vector<int>& block_sizes) {
  const int k = b.order();
  if (static_cast<int>(block_sizes.size()) != k) throw DomainError("quotient_eigenvalues: size mismatch");
  SymMatrix s{k, std::vector<double>(static_cast<std::size_t>(k) * k)};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      s.data[static_cast<std::size_t>(i) * k + j] =
          b(i, j).get_d() * std::sqrt(static_cast<double>(block_sizes[i]) / block_sizes[j]);
  // Symmetric up to rounding; average the two triangles.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      double avg = 0.5 * (s.data[static_cast<std::size_t>(i) * k + j] + s.data[static_cast<std::size_t>(j) * k + i]);
      s.data[static_cast<std::size_t>(i) * k + j] = s.data[static_cast<std::size_t>(j) * k + i] = avg;
    }
  return eig_symmetric(s);
}

namespace {

bool nonnegative_irreducible(const IntMatrix& m) {
  const int n = m.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) < 0) return false;
  // Symmetric pattern: irreducible iff the nonzero pattern is connected.
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && m(u, v) != 0) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == n;
}

}  // namespace

bool quotient_eigs_subset_check(const IntMatrix& m, const Partition& p, double tol) {
  if (!m.is_symmetric()) throw DomainError("quotient_eigs_subset_check: matrix must be symmetric");
  auto q = quotient(m, p);
  if (!q.equitable) throw DomainError("quotient_eigs_subset_check: partition is not equitable");
  auto full = eig_symmetric(m);
  auto part = quotient_eigenvalues(q.matrix, p.sizes());
  for (double x : part) {
    auto it = std::lower_bound(full.begin(), full.end(), x - tol);
    if (it == full.end() || *it > x + tol) return false;
  }
  if (m.order() > 1 && nonnegative_irreducible(m) && std::abs(full.back() - part.back()) > tol) return false;
  return true;
}

}  // namespace distspec
