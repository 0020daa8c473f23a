#pragma once

#include <cstddef>
#include <vector>

#include "estrada/graph.hpp"

namespace estrada {

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static SymmetricMatrix adjacency(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }

  double frobenius_norm() const noexcept;
  double off_diagonal_norm() const noexcept;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Adjacency eigenvalues, sorted descending.
struct Spectrum {
  std::vector<double> values;
  /// Off-diagonal Frobenius norm when the iteration stopped.
  double residual = 0.0;
  std::size_t sweeps = 0;

  std::size_t size() const noexcept { return values.size(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

inline constexpr std::size_t kMaxJacobiSweeps = 100;
inline constexpr double kJacobiRelativeTolerance = 1e-12;

/// Cyclic Jacobi rotations until the off-diagonal norm drops below
/// 1e-12 * max(1, ||A||_F). Throws NumericError after kMaxJacobiSweeps
/// sweeps and DegenerateGraphError for an empty matrix.
Spectrum eigen_symmetric(SymmetricMatrix a);

/// Spectrum of the 0/1 adjacency matrix; requires n >= 1.
Spectrum spectrum(const Graph& g);

/// Sum of lambda_i^k.
double spectral_moment(const Spectrum& s, unsigned k);

/// Sum of exp(lambda_i), accumulated from the smallest term upward.
double estrada_index(const Spectrum& s);

/// Sum of |lambda_i|.
double graph_energy(const Spectrum& s);

/// Estrada index from the moment series sum_k tr(A^k)/k!, without any
/// eigenvalue computation. Terms are added until the remainder bound
/// n * rho^K / K! / (1 - rho/(K+1)), with rho the maximum degree, is below
/// `tol`. Throws DomainError unless tol > 0.
double estrada_index_series(const Graph& g, double tol);

/// lambda_i == -lambda_{n+1-i} for all i, within `tol`.
bool symmetric_about_zero(const Spectrum& s, double tol);

}  // namespace estrada
