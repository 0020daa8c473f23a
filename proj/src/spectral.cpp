#include "estrada/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "estrada/errors.hpp"

namespace estrada {

namespace {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

void rotate(SymmetricMatrix& a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < a.order(); ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
}

}  // namespace

SymmetricMatrix SymmetricMatrix::adjacency(const Graph& g) {
  SymmetricMatrix a(g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double SymmetricMatrix::off_diagonal_norm() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) s += data_[i * n_ + j] * data_[i * n_ + j];
  return std::sqrt(s);
}

Spectrum eigen_symmetric(SymmetricMatrix a) {
  const std::size_t n = a.order();
  if (n == 0) throw DegenerateGraphError("eigendecomposition of an empty matrix");
  const double threshold = kJacobiRelativeTolerance * std::max(1.0, a.frobenius_norm());

  Spectrum out;
  double off = a.off_diagonal_norm();
  while (off >= threshold) {
    if (out.sweeps == kMaxJacobiSweeps) {
      throw NumericError("Jacobi iteration did not converge after " +
                         std::to_string(kMaxJacobiSweeps) + " sweeps (off-diagonal norm " +
                         std::to_string(off) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    ++out.sweeps;
    off = a.off_diagonal_norm();
  }

  out.residual = off;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

Spectrum spectrum(const Graph& g) {
  if (g.order() == 0) throw DegenerateGraphError("spectrum of the null graph");
  return eigen_symmetric(SymmetricMatrix::adjacency(g));
}

double spectral_moment(const Spectrum& s, unsigned k) {
  CompensatedSum sum;
  for (double x : s.values) sum.add(std::pow(x, static_cast<double>(k)));
  return sum.value();
}

double estrada_index(const Spectrum& s) {
  CompensatedSum sum;
  for (auto it = s.values.rbegin(); it != s.values.rend(); ++it) sum.add(std::exp(*it));
  return sum.value();
}

double graph_energy(const Spectrum& s) {
  CompensatedSum sum;
  for (double x : s.values) sum.add(std::abs(x));
  return sum.value();
}

double estrada_index_series(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw DomainError("series tolerance must be positive");
  const std::size_t n = g.order();
  if (n == 0) return 0.0;

  std::size_t rho = 0;
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v);
    rho = std::max(rho, adj[v].size());
  }

  // power holds A^k / k!.
  std::vector<double> power(n * n, 0.0), next(n * n);
  for (std::size_t i = 0; i < n; ++i) power[i * n + i] = 1.0;

  CompensatedSum sum;
  sum.add(static_cast<double>(n));
  const double r = static_cast<double>(rho);
  double scale = static_cast<double>(n);  // n * rho^k / k!
  for (std::size_t k = 1;; ++k) {
    const double remainder_ratio = 1.0 - r / static_cast<double>(k + 1);
    if (remainder_ratio > 0.0 && scale * r / static_cast<double>(k) / remainder_ratio < tol) {
      // Even the tail from k onward is negligible.
      break;
    }
    scale *= r / static_cast<double>(k);
    const double inv_k = 1.0 / static_cast<double>(k);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (Vertex l : adj[j]) acc += power[i * n + l];
        next[i * n + j] = acc * inv_k;
      }
      trace += next[i * n + i];
    }
    power.swap(next);
    sum.add(trace);
  }
  return sum.value();
}

bool symmetric_about_zero(const Spectrum& s, double tol) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(s.values[i] + s.values[n - 1 - i]) > tol) return false;
  }
  return true;
}

}  // namespace estrada
