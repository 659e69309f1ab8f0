#pragma once

// Connections on free modules A^n. A connection is given by two coefficient
// matrices (theta_u, theta_v); for a weight X = (alpha, beta)
//
//   nabla_X(xi) = delta_X(xi) + (alpha theta_u + beta theta_v) xi
//
// acting on column vectors xi. Module elements act on the right by algebra
// elements, entrywise.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "nctorus/algebra.hpp"
#include "nctorus/forms.hpp"
#include "nctorus/matrix.hpp"
#include "nctorus/random.hpp"

namespace nctorus {

using ModuleVector = std::vector<TorusElement>;
using ElementMatrix = SquareMatrix<TorusElement>;

/// Tolerance below which a curvature coefficient counts as zero.
inline constexpr double flatness_tolerance = 1e-12;

class Connection {
 public:
  Connection(ElementMatrix theta_u, ElementMatrix theta_v)
      : theta_u_(std::move(theta_u)), theta_v_(std::move(theta_v)) {
    if (theta_u_.rank() != theta_v_.rank()) {
      throw Error(ErrorCode::RankMismatch, "theta_u and theta_v have different ranks");
    }
    const TorusParams p = theta_u_(0, 0).params();
    for (const auto* m : {&theta_u_, &theta_v_}) {
      for (const auto& entry : *m) {
        if (!(entry.params() == p)) {
          throw Error(ErrorCode::ParamMismatch, "connection entries over different theta");
        }
      }
    }
  }

  /// Connection whose coefficients are complex multiples of 1.
  static Connection constant(TorusParams params, const ComplexMatrix& theta_u,
                             const ComplexMatrix& theta_v) {
    if (theta_u.rows() != theta_u.cols() || theta_v.rows() != theta_v.cols() ||
        theta_u.rows() != theta_v.rows() || theta_u.rows() == 0) {
      throw Error(ErrorCode::RankMismatch, "coefficient matrices must be square of equal size");
    }
    const auto n = static_cast<std::size_t>(theta_u.rows());
    ElementMatrix tu(n, TorusElement(params));
    ElementMatrix tv(n, TorusElement(params));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto r = static_cast<Eigen::Index>(i);
        const auto c = static_cast<Eigen::Index>(j);
        tu(i, j) = TorusElement::scalar(params, theta_u(r, c));
        tv(i, j) = TorusElement::scalar(params, theta_v(r, c));
      }
    }
    return {std::move(tu), std::move(tv)};
  }

  std::size_t rank() const noexcept { return theta_u_.rank(); }
  const TorusParams& params() const { return theta_u_(0, 0).params(); }
  const ElementMatrix& theta_u() const noexcept { return theta_u_; }
  const ElementMatrix& theta_v() const noexcept { return theta_v_; }

  /// alpha theta_u + beta theta_v
  ElementMatrix theta(const WeightVector& w) const {
    ElementMatrix out(rank(), TorusElement(params()));
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t j = 0; j < rank(); ++j) {
        out(i, j) = complex(w.alpha) * theta_u_(i, j) + complex(w.beta) * theta_v_(i, j);
      }
    }
    return out;
  }

  bool constant_coefficients() const {
    auto scalar = [](const TorusElement& e) { return e.is_scalar(); };
    return std::all_of(theta_u_.begin(), theta_u_.end(), scalar) &&
           std::all_of(theta_v_.begin(), theta_v_.end(), scalar);
  }

  /// Numeric alpha theta_u + beta theta_v; requires constant coefficients.
  ComplexMatrix constant_theta(const WeightVector& w) const {
    if (!constant_coefficients()) {
      throw Error(ErrorCode::NonConstantConnection,
                  "transport needs coefficients that are multiples of 1");
    }
    const auto n = static_cast<Eigen::Index>(rank());
    ComplexMatrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto r = static_cast<std::size_t>(i);
        const auto c = static_cast<std::size_t>(j);
        out(i, j) = w.alpha * theta_u_(r, c).scalar_part() + w.beta * theta_v_(r, c).scalar_part();
      }
    }
    return out;
  }

  /// The connection form theta = theta_u du + theta_v dv.
  MatrixForm<OneForm> form() const {
    MatrixForm<OneForm> out(rank(), OneForm(params()));
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t j = 0; j < rank(); ++j) out(i, j) = OneForm(theta_u_(i, j), theta_v_(i, j));
    }
    return out;
  }

  /// theta_X^* = -theta_X for both basis directions, entrywise star with transpose.
  bool is_antihermitian(double tol = coefficient_tolerance) const {
    for (const auto* m : {&theta_u_, &theta_v_}) {
      for (std::size_t i = 0; i < rank(); ++i) {
        for (std::size_t j = 0; j < rank(); ++j) {
          if (!approx_equal(star((*m)(j, i)), -(*m)(i, j), tol)) return false;
        }
      }
    }
    return true;
  }

 private:
  ElementMatrix theta_u_;
  ElementMatrix theta_v_;
};

inline ModuleVector operator*(const ElementMatrix& m, const ModuleVector& xi) {
  if (m.rank() != xi.size()) throw Error(ErrorCode::RankMismatch, "matrix/vector size mismatch");
  ModuleVector out;
  out.reserve(xi.size());
  for (std::size_t i = 0; i < m.rank(); ++i) {
    TorusElement acc(m(0, 0).params());
    for (std::size_t j = 0; j < m.rank(); ++j) acc += m(i, j) * xi[j];
    out.push_back(std::move(acc));
  }
  return out;
}

/// Right module action xi . a
inline ModuleVector operator*(const ModuleVector& xi, const TorusElement& a) {
  ModuleVector out;
  out.reserve(xi.size());
  for (const auto& e : xi) out.push_back(e * a);
  return out;
}

inline double max_abs_diff(const ModuleVector& a, const ModuleVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::RankMismatch, "vectors of different length");
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, max_abs_diff(a[i], b[i]));
  return out;
}

/// Standard basis vector e_k of A^n.
inline ModuleVector basis_vector(TorusParams params, std::size_t rank, std::size_t k) {
  ModuleVector out(rank, TorusElement(params));
  out.at(k) = TorusElement::one(params);
  return out;
}

inline ModuleVector nabla(const Connection& conn, const WeightVector& w, const ModuleVector& xi) {
  if (xi.size() != conn.rank()) {
    throw Error(ErrorCode::RankMismatch, "vector length " + std::to_string(xi.size()) +
                                             " does not match connection rank " +
                                             std::to_string(conn.rank()));
  }
  ModuleVector out = conn.theta(w) * xi;
  for (std::size_t i = 0; i < xi.size(); ++i) out[i] += apply_derivation(w, xi[i]);
  return out;
}

/// d(theta) + theta ^ theta. The module is free, so the grassmannian term
/// 1 (d1 ^ d1) vanishes identically.
inline MatrixForm<TwoForm> curvature_form(const Connection& conn) {
  const auto theta = conn.form();
  const auto dtheta = d1(theta);
  const auto square = wedge(theta, theta);
  MatrixForm<TwoForm> out(conn.rank(), TwoForm(conn.params()));
  for (std::size_t i = 0; i < conn.rank(); ++i) {
    for (std::size_t j = 0; j < conn.rank(); ++j) out(i, j) = dtheta(i, j) + square(i, j);
  }
  return out;
}

/// nabla_X nabla_Y - nabla_Y nabla_X as a module endomorphism, column k being
/// its value on e_k. Torus flows commute, so nabla_[X,Y] = 0.
inline ElementMatrix curvature_commutator(const Connection& conn, const WeightVector& x,
                                          const WeightVector& y) {
  ElementMatrix out(conn.rank(), TorusElement(conn.params()));
  for (std::size_t k = 0; k < conn.rank(); ++k) {
    const auto e = basis_vector(conn.params(), conn.rank(), k);
    const auto xy = nabla(conn, x, nabla(conn, y, e));
    const auto yx = nabla(conn, y, nabla(conn, x, e));
    for (std::size_t i = 0; i < conn.rank(); ++i) out(i, k) = xy[i] - yx[i];
  }
  return out;
}

inline bool is_flat(const Connection& conn) {
  return max_abs_coefficient(curvature_form(conn)) < flatness_tolerance;
}

/// Phi_tau(s) = M phi_tau(s), with phi_tau applied entrywise.
class TransportOperator {
 public:
  TransportOperator(ComplexMatrix matrix, WeightVector weight, double tau)
      : matrix_(std::move(matrix)), weight_(weight), tau_(tau) {}

  std::size_t rank() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const WeightVector& weight() const noexcept { return weight_; }
  double tau() const noexcept { return tau_; }

  ModuleVector operator()(const ModuleVector& s) const {
    if (s.size() != rank()) throw Error(ErrorCode::RankMismatch, "transport applied to wrong rank");
    const TorusParams params = s.front().params();
    ModuleVector out(rank(), TorusElement(params));
    for (std::size_t j = 0; j < rank(); ++j) {
      const auto twisted = apply_auto(weight_, tau_, s[j]);
      for (std::size_t i = 0; i < rank(); ++i) {
        out[i] += matrix_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * twisted;
      }
    }
    return out;
  }

  bool is_unitary(double tol = 1e-10) const {
    const auto n = matrix_.rows();
    return max_entry_distance(matrix_ * matrix_.adjoint(), ComplexMatrix::Identity(n, n)) < tol;
  }

 private:
  ComplexMatrix matrix_;
  WeightVector weight_;
  double tau_;
};

/// Parallel transport along the flow of w for time tau:
/// M = exp(2 pi tau (alpha theta_u + beta theta_v)).
inline TransportOperator transport(const Connection& conn, const WeightVector& w, double tau) {
  return {expm((two_pi * tau) * conn.constant_theta(w)), w, tau};
}

struct TransportAxiomReport {
  double module_twist = 0.0;  // Phi(s a) vs Phi(s) phi(a)
  double identity = 0.0;      // Phi_0 vs id
  double group_law = 0.0;     // Phi_{t+s} vs Phi_t Phi_s
  int samples = 0;

  double max_residual() const { return std::max({module_twist, identity, group_law}); }
};

/// Checks the three module-transport axioms on random (tau, sigma, s, a).
inline TransportAxiomReport check_transport_axioms(const Connection& conn, const WeightVector& w,
                                                   int samples, std::uint64_t seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time(-2.0, 2.0);
  const ElementShape shape{3, 3, 1};
  const auto identity = transport(conn, w, 0.0);

  TransportAxiomReport report;
  report.samples = samples;
  for (int k = 0; k < samples; ++k) {
    const double tau = time(rng);
    const double sigma = time(rng);
    ModuleVector s;
    for (std::size_t i = 0; i < conn.rank(); ++i) s.push_back(random_element(rng, conn.params(), shape));
    const auto a = random_element(rng, conn.params(), shape);

    const auto phi_tau = transport(conn, w, tau);
    const auto phi_sigma = transport(conn, w, sigma);
    const auto phi_sum = transport(conn, w, tau + sigma);

    report.module_twist = std::max(report.module_twist,
                                   max_abs_diff(phi_tau(s * a), phi_tau(s) * apply_auto(w, tau, a)));
    report.identity = std::max(report.identity, max_abs_diff(identity(s), s));
    report.group_law = std::max(report.group_law, max_abs_diff(phi_sum(s), phi_tau(phi_sigma(s))));
  }
  return report;
}

namespace presets {

/// Rank-one connection with form i (c_u du + c_v dv).
inline Connection scalar_flat(TorusParams params, double c_u, double c_v) {
  ComplexMatrix tu(1, 1), tv(1, 1);
  tu(0, 0) = complex(0.0, c_u);
  tv(0, 0) = complex(0.0, c_v);
  return Connection::constant(params, tu, tv);
}

/// Rank-four connection with nabla e1 = c_u e2 du, nabla e2 = -c_u e1 du,
/// nabla e3 = c_v e4 dv, nabla e4 = -c_v e3 dv.
inline Connection rotation_pair(TorusParams params, double c_u, double c_v) {
  ComplexMatrix tu = ComplexMatrix::Zero(4, 4);
  ComplexMatrix tv = ComplexMatrix::Zero(4, 4);
  tu(1, 0) = c_u;
  tu(0, 1) = -c_u;
  tv(3, 2) = c_v;
  tv(2, 3) = -c_v;
  return Connection::constant(params, tu, tv);
}

}  // namespace presets

}  // namespace nctorus
