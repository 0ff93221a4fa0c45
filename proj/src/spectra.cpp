#include "distspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "distspec/error.hpp"
#include "distspec/exact.hpp"

namespace distspec {

SymMatrix SymMatrix::from(const IntMatrix& m) {
  SymMatrix s{m.order(), std::vector<double>(static_cast<std::size_t>(m.order()) * m.order())};
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) s.data[static_cast<std::size_t>(i) * m.order() + j] = static_cast<double>(m(i, j));
  return s;
}

std::vector<double> eig_symmetric(const SymMatrix& m) {
  const int n = m.order;
  std::vector<double> a = m.data;
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  double frob = 0;
  for (double x : a) frob += x * x;
  frob = std::sqrt(frob);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(at(i, j) - at(j, i)) > 1e-12 * std::max(1.0, frob))
        throw DomainError("eig_symmetric: matrix is not symmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");

  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  const double target = 1e-12 * frob;
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > kMaxSweeps) throw Error("eig_symmetric: Jacobi did not converge in 100 sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = at(q, p) = 0;
      }
    }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> eig_symmetric(const IntMatrix& m) { return eig_symmetric(SymMatrix::from(m)); }

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  out.reserve(n);
  for (const auto& it : items) out.insert(out.end(), it.multiplicity, it.value);
  return out;
}

Spectrum group_spectrum(std::span<const double> ascending, double tol) {
  Spectrum s;
  s.group_tol = tol;
  s.n = static_cast<int>(ascending.size());
  std::size_t start = 0;
  for (std::size_t i = 1; i <= ascending.size(); ++i) {
    if (i < ascending.size() && ascending[i] - ascending[i - 1] <= tol) continue;
    double sum = 0;
    for (std::size_t k = start; k < i; ++k) sum += ascending[k];
    if (i > start) s.items.push_back({sum / static_cast<double>(i - start), static_cast<int>(i - start), false});
    start = i;
  }
  std::reverse(s.items.begin(), s.items.end());
  return s;
}

Spectrum matrix_spectrum(const IntMatrix& m, const SpectrumOptions& opts) {
  auto eig = eig_symmetric(m);
  Spectrum s = group_spectrum(eig, opts.group_tol);
  for (auto& item : s.items) {
    const double r = std::round(item.value);
    if (std::abs(item.value - r) > opts.snap_tol) continue;
    if (eigen_multiplicity_exact(m, static_cast<long>(r)) == item.multiplicity) {
      item.value = r;
      item.exact = true;
    }
  }
  return s;
}

Spectrum distance_spectrum(const Graph& g, const SpectrumOptions& opts) {
  return matrix_spectrum(distance_matrix(g), opts);
}

Spectrum laplacian_spectrum(const Graph& g, const SpectrumOptions& opts) {
  if (!is_connected(g)) {
    auto d = bfs_distances(g, 0);
    int far = static_cast<int>(std::find(d.begin(), d.end(), -1) - d.begin());
    throw DisconnectedError(0, far);
  }
  return matrix_spectrum(laplacian_matrix(g), opts);
}

Inertia inertia(const Spectrum& s, double zero_tol) {
  Inertia in;
  for (const auto& it : s.items) {
    if (std::abs(it.value) <= zero_tol)
      in.zero += it.multiplicity;
    else if (it.value > 0)
      in.positive += it.multiplicity;
    else
      in.negative += it.multiplicity;
  }
  return in;
}

}  // namespace distspec
