#pragma once

// Smooth noncommutative torus as twisted Laurent polynomials in two unitaries
// u, v with u v = lambda v u, lambda = exp(2 pi i theta).
//
// A stored term is c * lambda^lk * u^m v^n. The lambda-exponent lk is kept as
// an exact integer and only folded into c when an element is compared or
// printed, so the commutation relation holds exactly for any floating theta.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "nctorus/error.hpp"
#include "nctorus/phase.hpp"

namespace nctorus {

/// Coefficient tolerance used by element comparison.
inline constexpr double coefficient_tolerance = 1e-12;

class TorusParams {
 public:
  /// theta must lie in (0,1). Irrationality is not (and cannot be) checked.
  explicit TorusParams(double theta) : theta_(theta) {
    if (!(theta > 0.0 && theta < 1.0)) {
      throw Error(ErrorCode::InvalidTheta, "theta must lie in (0,1), got " + std::to_string(theta));
    }
  }

  double theta() const noexcept { return theta_; }

  /// lambda^k = exp(2 pi i k theta).
  complex lambda_power(std::int64_t k) const { return cis_turns(static_cast<double>(k) * theta_); }

  friend bool operator==(const TorusParams&, const TorusParams&) = default;

 private:
  double theta_;
};

/// Generator (alpha, beta) of the torus-action flow
/// u^m v^n -> exp(2 pi i tau (alpha m + beta n)) u^m v^n.
struct WeightVector {
  double alpha = 0.0;
  double beta = 0.0;

  static constexpr WeightVector u() { return {1.0, 0.0}; }
  static constexpr WeightVector v() { return {0.0, 1.0}; }

  bool is_integral() const { return alpha == std::floor(alpha) && beta == std::floor(beta); }
  bool is_zero() const { return alpha == 0.0 && beta == 0.0; }

  /// Weight of the monomial u^m v^n under this flow.
  double weight_of(std::int64_t m, std::int64_t n) const {
    return alpha * static_cast<double>(m) + beta * static_cast<double>(n);
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct MonomialKey {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t lk = 0;

  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

using Exponent = std::pair<std::int64_t, std::int64_t>;

class TorusElement {
 public:
  using TermMap = std::map<MonomialKey, complex>;
  using FoldedMap = std::map<Exponent, complex>;

  explicit TorusElement(TorusParams params) : params_(params) {}

  static TorusElement monomial(TorusParams params, std::int64_t m, std::int64_t n,
                               complex c = 1.0, std::int64_t lk = 0) {
    TorusElement out(params);
    out.add_term({m, n, lk}, c);
    return out;
  }

  static TorusElement scalar(TorusParams params, complex c) { return monomial(params, 0, 0, c); }
  static TorusElement one(TorusParams params) { return scalar(params, 1.0); }
  static TorusElement u(TorusParams params) { return monomial(params, 1, 0); }
  static TorusElement v(TorusParams params) { return monomial(params, 0, 1); }

  const TorusParams& params() const noexcept { return params_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Accumulates c into the term at key; a coefficient that becomes exactly
  /// zero is erased.
  TorusElement& add_term(const MonomialKey& key, complex c) {
    if (c == complex{}) return *this;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == complex{}) terms_.erase(it);
    }
    return *this;
  }

  /// One coefficient per exponent pair, lambda-powers folded in numerically.
  FoldedMap folded() const {
    FoldedMap out;
    for (const auto& [key, c] : terms_) {
      out[{key.m, key.n}] += c * params_.lambda_power(key.lk);
    }
    return out;
  }

  /// True iff every term is a multiple of the identity.
  bool is_scalar() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.m == 0 && t.first.n == 0; });
  }

  /// Folded coefficient of the identity monomial.
  complex scalar_part() const {
    complex out{};
    for (const auto& [key, c] : terms_) {
      if (key.m == 0 && key.n == 0) out += c * params_.lambda_power(key.lk);
    }
    return out;
  }

  /// Applies f(key, c) -> c' to every coefficient, keeping keys.
  template <class F>
  TorusElement map_coefficients(F&& f) const {
    TorusElement out(params_);
    for (const auto& [key, c] : terms_) out.add_term(key, f(key, c));
    return out;
  }

  TorusElement& operator+=(const TorusElement& other) {
    require_same_params(other);
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
  }

  TorusElement& operator-=(const TorusElement& other) {
    require_same_params(other);
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
  }

  TorusElement operator-() const {
    return map_coefficients([](const MonomialKey&, complex c) { return -c; });
  }

  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }

  friend TorusElement operator*(complex s, const TorusElement& a) {
    return a.map_coefficients([s](const MonomialKey&, complex c) { return s * c; });
  }
  friend TorusElement operator*(const TorusElement& a, complex s) { return s * a; }

  /// (u^m v^n)(u^p v^q) = lambda^{-np} u^{m+p} v^{n+q}.
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    a.require_same_params(b);
    TorusElement out(a.params_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        out.add_term({ka.m + kb.m, ka.n + kb.n, ka.lk + kb.lk - ka.n * kb.m}, ca * cb);
      }
    }
    return out;
  }

  void require_same_params(const TorusElement& other) const {
    if (!(params_ == other.params_)) {
      throw Error(ErrorCode::ParamMismatch, "elements live over different theta (" +
                                                std::to_string(params_.theta()) + " vs " +
                                                std::to_string(other.params_.theta()) + ")");
    }
  }

 private:
  TorusParams params_;
  TermMap terms_;
};

/// c u^m v^n
inline TorusElement mono(std::int64_t m, std::int64_t n, complex c, TorusParams params) {
  return TorusElement::monomial(params, m, n, c);
}

inline TorusElement add(const TorusElement& a, const TorusElement& b) { return a + b; }
inline TorusElement mul(const TorusElement& a, const TorusElement& b) { return a * b; }

/// Multiplies by lambda^k without touching the numeric coefficients.
inline TorusElement lambda_shift(const TorusElement& a, std::int64_t k) {
  TorusElement out(a.params());
  for (const auto& [key, c] : a.terms()) out.add_term({key.m, key.n, key.lk + k}, c);
  return out;
}

/// Antilinear involution, (c lambda^k u^m v^n)* = conj(c) lambda^{-k-mn} u^{-m} v^{-n}.
inline TorusElement star(const TorusElement& a) {
  TorusElement out(a.params());
  for (const auto& [key, c] : a.terms()) {
    out.add_term({-key.m, -key.n, -key.lk - key.m * key.n}, std::conj(c));
  }
  return out;
}

/// The flow phi_tau of weight w.
inline TorusElement apply_auto(const WeightVector& w, double tau, const TorusElement& a) {
  return a.map_coefficients([&](const MonomialKey& key, complex c) {
    return c * cis_turns(tau * w.weight_of(key.m, key.n));
  });
}

/// Infinitesimal generator of apply_auto: delta_w(u^m v^n) = 2 pi i (alpha m + beta n) u^m v^n.
inline TorusElement apply_derivation(const WeightVector& w, const TorusElement& a) {
  return a.map_coefficients([&](const MonomialKey& key, complex c) {
    return c * complex(0.0, two_pi * w.weight_of(key.m, key.n));
  });
}

inline double max_abs_coefficient(const TorusElement& a) {
  double out = 0.0;
  for (const auto& [e, c] : a.folded()) out = std::max(out, std::abs(c));
  return out;
}

/// Largest folded-coefficient difference; elements must share params.
inline double max_abs_diff(const TorusElement& a, const TorusElement& b) {
  return max_abs_coefficient(a - b);
}

inline bool approx_equal(const TorusElement& a, const TorusElement& b,
                         double tol = coefficient_tolerance) {
  if (!(a.params() == b.params())) return false;
  const auto fa = a.folded();
  const auto fb = b.folded();
  for (const auto& [e, c] : fa) {
    auto it = fb.find(e);
    if (std::abs(c - (it == fb.end() ? complex{} : it->second)) > tol) return false;
  }
  for (const auto& [e, c] : fb) {
    if (!fa.contains(e) && std::abs(c) > tol) return false;
  }
  return true;
}

}  // namespace nctorus
