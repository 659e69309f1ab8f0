#pragma once

// Finite coverings A_theta -> A_theta' of degree (k1, k2):
//   theta' = theta / (k1 k2),  u -> x^k1,  v -> y^k2,
// with deck group Z_k1 x Z_k2 acting by g(x^p y^q) = exp(2 pi i (a p/k1 + b q/k2)) x^p y^q.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nctorus/algebra.hpp"
#include "nctorus/connections.hpp"

namespace nctorus {

/// Tolerance for the path-independence certificate of the Wilson map.
inline constexpr double path_independence_tolerance = 1e-10;

struct DeckElement {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool is_identity() const { return a == 0 && b == 0; }
  friend bool operator==(const DeckElement&, const DeckElement&) = default;
};

class CoveringSpec {
 public:
  CoveringSpec(TorusParams base, std::int64_t k1, std::int64_t k2)
      : base_(base), k1_(k1), k2_(k2), cover_(checked_cover_theta(base, k1, k2)) {}

  const TorusParams& base() const noexcept { return base_; }
  const TorusParams& cover() const noexcept { return cover_; }
  std::int64_t k1() const noexcept { return k1_; }
  std::int64_t k2() const noexcept { return k2_; }
  std::int64_t order() const noexcept { return k1_ * k2_; }

  /// Reduces (a, b) into the canonical range 0 <= a < k1, 0 <= b < k2.
  DeckElement deck(std::int64_t a, std::int64_t b) const {
    return {floor_mod(a, k1_), floor_mod(b, k2_)};
  }

  DeckElement compose(const DeckElement& g, const DeckElement& h) const {
    return deck(g.a + h.a, g.b + h.b);
  }

  std::vector<DeckElement> deck_group() const {
    std::vector<DeckElement> out;
    for (std::int64_t a = 0; a < k1_; ++a) {
      for (std::int64_t b = 0; b < k2_; ++b) out.push_back({a, b});
    }
    return out;
  }

  /// g(x^p y^q) / (x^p y^q), from exact residues.
  complex deck_phase(const DeckElement& g, std::int64_t p, std::int64_t q) const {
    const std::int64_t num = floor_mod(g.a * p, k1_) * k2_ + floor_mod(g.b * q, k2_) * k1_;
    return cis_rational(num, order());
  }

 private:
  static TorusParams checked_cover_theta(TorusParams base, std::int64_t k1, std::int64_t k2) {
    if (k1 < 1 || k2 < 1) {
      throw Error(ErrorCode::InvalidDegree, "covering degrees must be positive, got (" +
                                                std::to_string(k1) + "," + std::to_string(k2) + ")");
    }
    return TorusParams(base.theta() / static_cast<double>(k1 * k2));
  }

  TorusParams base_;
  std::int64_t k1_;
  std::int64_t k2_;
  TorusParams cover_;
};

/// u^m v^n lambda^k -> x^{k1 m} y^{k2 n} lambda'^{k k1 k2}.
inline TorusElement project(const CoveringSpec& spec, const TorusElement& a) {
  if (!(a.params() == spec.base())) {
    throw Error(ErrorCode::ParamMismatch, "projected element is not over the base theta");
  }
  TorusElement out(spec.cover());
  for (const auto& [key, c] : a.terms()) {
    out.add_term({key.m * spec.k1(), key.n * spec.k2(), key.lk * spec.order()}, c);
  }
  return out;
}

inline TorusElement deck_act(const CoveringSpec& spec, const DeckElement& g, const TorusElement& a) {
  if (!(a.params() == spec.cover())) {
    throw Error(ErrorCode::ParamMismatch, "deck transformations act on the cover algebra");
  }
  return a.map_coefficients(
      [&](const MonomialKey& key, complex c) { return c * spec.deck_phase(g, key.m, key.n); });
}

/// Lift of the flow of w to the cover:
/// x^p y^q -> exp(2 pi i tau (alpha p/k1 + beta q/k2)) x^p y^q.
class LiftedFlow {
 public:
  LiftedFlow(CoveringSpec spec, WeightVector weight) : spec_(std::move(spec)), weight_(weight) {}

  const WeightVector& weight() const noexcept { return weight_; }

  TorusElement operator()(double tau, const TorusElement& a) const {
    if (!(a.params() == spec_.cover())) {
      throw Error(ErrorCode::ParamMismatch, "lifted flow acts on the cover algebra");
    }
    const double k1 = static_cast<double>(spec_.k1());
    const double k2 = static_cast<double>(spec_.k2());
    return a.map_coefficients([&](const MonomialKey& key, complex c) {
      const double turns = tau * (weight_.alpha * static_cast<double>(key.m) / k1 +
                                  weight_.beta * static_cast<double>(key.n) / k2);
      return c * cis_turns(turns);
    });
  }

  /// The deck element equal to the lifted map at time tau, if any. The map
  /// scales x by exp(2 pi i tau alpha/k1) and y by exp(2 pi i tau beta/k2),
  /// so it is a deck element exactly when tau alpha and tau beta are integers.
  std::optional<DeckElement> deck_at(double tau, double tol = 1e-12) const {
    const double ta = tau * weight_.alpha;
    const double tb = tau * weight_.beta;
    const double ra = std::round(ta);
    const double rb = std::round(tb);
    if (std::abs(ta - ra) > tol || std::abs(tb - rb) > tol) return std::nullopt;
    return spec_.deck(static_cast<std::int64_t>(ra), static_cast<std::int64_t>(rb));
  }

 private:
  CoveringSpec spec_;
  WeightVector weight_;
};

inline LiftedFlow lift_group(const CoveringSpec& spec, const WeightVector& w) {
  if (!w.is_integral()) {
    throw Error(ErrorCode::NonIntegralWeight, "only integral weights lift to closed flows");
  }
  return {spec, w};
}

struct ClosedPathReport {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  bool closed = false;
  std::optional<DeckElement> associated;
  /// Smallest tau in (0,1) at which the lift is already a deck element.
  std::optional<double> witness;
};

/// Closed iff the lift meets the deck group at tau = 1 and nowhere in (0,1),
/// i.e. iff gcd(|alpha|, |beta|) == 1 (with gcd(0, n) = n).
inline ClosedPathReport classify_path(const CoveringSpec& spec, const WeightVector& w) {
  if (!w.is_integral()) {
    throw Error(ErrorCode::NonIntegralWeight, "closed paths need integral weights");
  }
  if (w.is_zero()) throw Error(ErrorCode::ZeroWeight, "the zero weight is not a path");
  ClosedPathReport report;
  report.alpha = static_cast<std::int64_t>(w.alpha);
  report.beta = static_cast<std::int64_t>(w.beta);
  const std::int64_t g = std::gcd(report.alpha, report.beta);
  report.closed = (g == 1);
  if (report.closed) {
    report.associated = spec.deck(report.alpha, report.beta);
  } else {
    report.witness = 1.0 / static_cast<double>(g);
  }
  return report;
}

/// Wilson line of g: transport at tau = 1 along the canonical weight (a, b).
inline TransportOperator wilson(const CoveringSpec& spec, const DeckElement& g,
                                const Connection& conn) {
  if (!(conn.params() == spec.base())) {
    throw Error(ErrorCode::ParamMismatch, "connection is not over the base theta");
  }
  if (!is_flat(conn)) throw Error(ErrorCode::NotFlat, "Wilson lines need a flat connection");
  const DeckElement canonical = spec.deck(g.a, g.b);
  return transport(conn, {static_cast<double>(canonical.a), static_cast<double>(canonical.b)}, 1.0);
}

struct PathIndependenceReport {
  std::vector<TransportOperator> transports;
  double max_distance = 0.0;
  bool certified = true;
};

/// Transports along every given path for tau = 1 and compares them pairwise.
inline PathIndependenceReport check_path_independence(const CoveringSpec& spec,
                                                      const DeckElement& g,
                                                      const Connection& conn,
                                                      const std::vector<WeightVector>& weights) {
  const DeckElement target = spec.deck(g.a, g.b);
  PathIndependenceReport report;
  for (const auto& w : weights) {
    const auto path = classify_path(spec, w);
    if (!path.closed || !(path.associated == target)) {
      throw Error(ErrorCode::PathNotAssociated,
                  "weight (" + std::to_string(path.alpha) + "," + std::to_string(path.beta) +
                      ") is not a closed path associated with (" + std::to_string(target.a) + "," +
                      std::to_string(target.b) + ")");
    }
    report.transports.push_back(transport(conn, w, 1.0));
  }
  for (std::size_t i = 0; i < report.transports.size(); ++i) {
    for (std::size_t j = i + 1; j < report.transports.size(); ++j) {
      report.max_distance =
          std::max(report.max_distance, max_entry_distance(report.transports[i].matrix(),
                                                           report.transports[j].matrix()));
    }
  }
  report.certified = report.max_distance < path_independence_tolerance;
  return report;
}

}  // namespace nctorus
