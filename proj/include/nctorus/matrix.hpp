#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nctorus/error.hpp"
#include "nctorus/phase.hpp"

namespace nctorus {

/// Dense row-major square matrix over an arbitrary value type (algebra
/// elements, forms). Numeric matrices use Eigen::MatrixXcd instead.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix(std::size_t rank, const T& fill) : rank_(rank), data_(rank * rank, fill) {
    if (rank == 0) throw Error(ErrorCode::InvalidRank, "matrix rank must be positive");
  }

  std::size_t rank() const noexcept { return rank_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * rank_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * rank_ + j]; }

  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

 private:
  std::size_t rank_;
  std::vector<T> data_;
};

template <class T, class F>
auto map_entries(const SquareMatrix<T>& m, F&& f) {
  using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
  SquareMatrix<R> out(m.rank(), f(m(0, 0)));
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t j = 0; j < m.rank(); ++j) out(i, j) = f(m(i, j));
  }
  return out;
}

using ComplexMatrix = Eigen::MatrixXcd;

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
inline ComplexMatrix expm(const ComplexMatrix& a) {
  const auto n = a.rows();
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = a / std::ldexp(1.0, squarings);

  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  // ||scaled|| <= 1/2, so 30 terms is far below double epsilon.
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// Largest entrywise modulus of a - b.
inline double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Rotation [[cos, -sin], [sin, cos]] by 2 pi * turns.
inline ComplexMatrix rotation(double turns) {
  const complex z = cis_turns(turns);
  ComplexMatrix r(2, 2);
  r << z.real(), -z.imag(), z.imag(), z.real();
  return r;
}

}  // namespace nctorus
