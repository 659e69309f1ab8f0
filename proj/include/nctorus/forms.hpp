#pragma once

// Differential calculus over the torus algebra. The basis one-forms du, dv
// are central and anticommute; du pairs with delta_u = delta_(1,0) and dv
// with delta_v = delta_(0,1).

#include <algorithm>
#include <cstddef>
#include <utility>

#include "nctorus/algebra.hpp"
#include "nctorus/matrix.hpp"

namespace nctorus {

/// du * du_coeff + dv * dv_coeff
struct OneForm {
  TorusElement du;
  TorusElement dv;

  explicit OneForm(TorusParams params) : du(params), dv(params) {}
  OneForm(TorusElement du_coeff, TorusElement dv_coeff)
      : du(std::move(du_coeff)), dv(std::move(dv_coeff)) {
    du.require_same_params(dv);
  }

  const TorusParams& params() const { return du.params(); }
  bool empty() const { return du.empty() && dv.empty(); }

  friend OneForm operator+(const OneForm& a, const OneForm& b) { return {a.du + b.du, a.dv + b.dv}; }
  friend OneForm operator-(const OneForm& a, const OneForm& b) { return {a.du - b.du, a.dv - b.dv}; }
  friend OneForm operator*(const TorusElement& a, const OneForm& w) { return {a * w.du, a * w.dv}; }
  friend OneForm operator*(const OneForm& w, const TorusElement& a) { return {w.du * a, w.dv * a}; }
  friend OneForm operator*(complex s, const OneForm& w) { return {s * w.du, s * w.dv}; }
};

/// dudv * du^dv
struct TwoForm {
  TorusElement dudv;

  explicit TwoForm(TorusParams params) : dudv(params) {}
  explicit TwoForm(TorusElement coeff) : dudv(std::move(coeff)) {}

  const TorusParams& params() const { return dudv.params(); }
  bool empty() const { return dudv.empty(); }

  friend TwoForm operator+(const TwoForm& a, const TwoForm& b) { return TwoForm(a.dudv + b.dudv); }
  friend TwoForm operator-(const TwoForm& a, const TwoForm& b) { return TwoForm(a.dudv - b.dudv); }
};

template <class Form>
using MatrixForm = SquareMatrix<Form>;

inline OneForm d0(const TorusElement& a) {
  return {apply_derivation(WeightVector::u(), a), apply_derivation(WeightVector::v(), a)};
}

inline TwoForm d1(const OneForm& w) {
  return TwoForm(apply_derivation(WeightVector::u(), w.dv) -
                 apply_derivation(WeightVector::v(), w.du));
}

/// Left factor's coefficients multiply from the left.
inline TwoForm wedge(const OneForm& a, const OneForm& b) {
  return TwoForm(a.du * b.dv - a.dv * b.du);
}

inline MatrixForm<TwoForm> d1(const MatrixForm<OneForm>& w) {
  return map_entries(w, [](const OneForm& entry) { return d1(entry); });
}

/// Matrix product with wedge in place of scalar multiplication.
inline MatrixForm<TwoForm> wedge(const MatrixForm<OneForm>& a, const MatrixForm<OneForm>& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "wedge of different ranks");
  const std::size_t n = a.rank();
  MatrixForm<TwoForm> out(n, TwoForm(a(0, 0).params()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      TwoForm acc(a(0, 0).params());
      for (std::size_t k = 0; k < n; ++k) acc = acc + wedge(a(i, k), b(k, j));
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

inline bool symbolically_zero(const MatrixForm<TwoForm>& m) {
  for (const auto& entry : m) {
    if (!entry.empty()) return false;
  }
  return true;
}

inline double max_abs_coefficient(const MatrixForm<TwoForm>& m) {
  double out = 0.0;
  for (const auto& entry : m) out = std::max(out, max_abs_coefficient(entry.dudv));
  return out;
}

}  // namespace nctorus
