#pragma once

// Character model of the infinite Z^2 covering of the torus. Elements are
// words in two commuting-free families of leg operators pi_u(e^{iax}) and
// pi_v(e^{ibx}); adjacent factors on the same leg multiply by adding
// frequencies. The relation between the two legs is never used: any product
// that does not reduce to normal order (u-leg left of v-leg) is rejected.
//
// The deck generator n1 shifts the u-leg argument by 2 pi, n2 the v-leg.

#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "nctorus/connections.hpp"
#include "nctorus/error.hpp"
#include "nctorus/phase.hpp"

namespace nctorus {

/// x -> e^{i a x} on the real line.
struct Character {
  double frequency = 0.0;

  complex operator()(double x) const { return std::polar(1.0, frequency * x); }
  friend auto operator<=>(const Character&, const Character&) = default;
};

enum class Leg { u, v };

/// Shift f(x) -> f(x + 2 pi). Characters are eigenvectors:
/// e^{ia(x + 2pi)} = e^{2 pi i a} e^{iax}.
inline std::pair<complex, Character> shift_up(const Character& ch) {
  return {cis_turns(ch.frequency), ch};
}

inline std::pair<complex, Character> shift_down(const Character& ch) {
  return {cis_turns(-ch.frequency), ch};
}

/// c pi_u(e^{iax}) pi_v(e^{ibx}) in normal order.
struct CharacterMonomial {
  complex c{1.0, 0.0};
  Character uleg;
  Character vleg;

  bool is_unitary(double tol = 1e-12) const { return std::abs(std::abs(c) - 1.0) < tol; }
};

struct LegFactor {
  Leg leg = Leg::u;
  Character character;

  friend auto operator<=>(const LegFactor&, const LegFactor&) = default;
};

/// Scalar times a reduced word of leg factors. The empty word is 1.
class LegWord {
 public:
  LegWord() = default;
  explicit LegWord(complex c) : scalar_(c) {}

  static LegWord from(const CharacterMonomial& m) {
    LegWord w(m.c);
    w.push({Leg::u, m.uleg});
    w.push({Leg::v, m.vleg});
    return w;
  }

  static LegWord leg(Leg which, double frequency, complex c = 1.0) {
    LegWord w(c);
    w.push({which, {frequency}});
    return w;
  }

  complex scalar() const noexcept { return scalar_; }
  const std::vector<LegFactor>& factors() const noexcept { return factors_; }
  bool is_scalar() const noexcept { return factors_.empty(); }

  friend LegWord operator*(const LegWord& a, const LegWord& b) {
    LegWord out(a.scalar_ * b.scalar_);
    out.factors_ = a.factors_;
    for (const auto& f : b.factors_) out.push(f);
    return out;
  }

  LegWord inverse() const {
    LegWord out(1.0 / scalar_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
      out.push({it->leg, {-it->character.frequency}});
    }
    return out;
  }

  /// Adjoint; equals inverse() for unit scalars.
  LegWord adjoint() const {
    LegWord out(std::conj(scalar_));
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
      out.push({it->leg, {-it->character.frequency}});
    }
    return out;
  }

  /// Applies the deck element n1^p n2^q by repeated unit shifts of each leg.
  LegWord deck_act(std::int64_t p, std::int64_t q) const {
    LegWord out(scalar_);
    for (const auto& f : factors_) {
      const std::int64_t count = f.leg == Leg::u ? p : q;
      Character ch = f.character;
      for (std::int64_t k = 0; k < std::abs(count); ++k) {
        auto [phase, shifted] = count > 0 ? shift_up(ch) : shift_down(ch);
        out.scalar_ *= phase;
        ch = shifted;
      }
      out.push({f.leg, ch});
    }
    return out;
  }

  /// Normal-ordered form; throws UnsupportedProduct if the word does not reduce to one.
  CharacterMonomial normal_form() const {
    CharacterMonomial m{scalar_, {}, {}};
    std::size_t i = 0;
    if (i < factors_.size() && factors_[i].leg == Leg::u) m.uleg = factors_[i++].character;
    if (i < factors_.size() && factors_[i].leg == Leg::v) m.vleg = factors_[i++].character;
    if (i != factors_.size()) {
      throw Error(ErrorCode::UnsupportedProduct,
                  "product needs the commutation rule between the two legs");
    }
    return m;
  }

 private:
  void push(LegFactor f) {
    if (!factors_.empty() && factors_.back().leg == f.leg) {
      factors_.back().character.frequency += f.character.frequency;
      if (factors_.back().character.frequency == 0.0) factors_.pop_back();
      return;
    }
    if (f.character.frequency != 0.0) factors_.push_back(f);
  }

  complex scalar_{1.0, 0.0};
  std::vector<LegFactor> factors_;
};

inline LegWord operator*(const CharacterMonomial& a, const CharacterMonomial& b) {
  return LegWord::from(a) * LegWord::from(b);
}

inline CharacterMonomial deck_act_inf(std::int64_t p, std::int64_t q, const CharacterMonomial& m) {
  return LegWord::from(m).deck_act(p, q).normal_form();
}

/// Multiplication by the image of u (resp. v): the u-leg (resp. v-leg)
/// function is multiplied by e^{ix}.
inline CharacterMonomial base_act(Leg generator, const CharacterMonomial& m) {
  CharacterMonomial out = m;
  if (generator == Leg::u) {
    out.uleg.frequency += 1.0;
  } else {
    out.vleg.frequency += 1.0;
  }
  return out;
}

/// (n1^p n2^q U) U^{-1} for the gauge U = pi_u(e^{i c_u x}) pi_v(e^{i c_v x}).
inline complex wilson_relation(std::int64_t p, std::int64_t q, double c_u, double c_v) {
  const LegWord gauge = LegWord::from({1.0, {c_u}, {c_v}});
  const LegWord result = gauge.deck_act(p, q) * gauge.inverse();
  if (!result.is_scalar()) {
    throw Error(ErrorCode::UnsupportedProduct, "(gU)U^{-1} did not reduce to a scalar");
  }
  return result.scalar();
}

/// Linear combination of reduced words.
class CharacterSum {
 public:
  CharacterSum() = default;
  explicit CharacterSum(const LegWord& w) { add(w); }

  CharacterSum& add(const LegWord& w) {
    terms_[w.factors()] += w.scalar();
    return *this;
  }

  const std::map<std::vector<LegFactor>, complex>& terms() const noexcept { return terms_; }

  friend CharacterSum operator+(CharacterSum a, const CharacterSum& b) {
    for (const auto& [factors, c] : b.terms_) a.terms_[factors] += c;
    return a;
  }

  friend CharacterSum operator*(const CharacterSum& a, const CharacterSum& b) {
    CharacterSum out;
    for (const auto& [fa, ca] : a.terms_) {
      for (const auto& [fb, cb] : b.terms_) out.add(make(fa, ca) * make(fb, cb));
    }
    return out;
  }

  CharacterSum deck_act(std::int64_t p, std::int64_t q) const {
    CharacterSum out;
    for (const auto& [f, c] : terms_) out.add(make(f, c).deck_act(p, q));
    return out;
  }

  CharacterSum adjoint() const {
    CharacterSum out;
    for (const auto& [f, c] : terms_) out.add(make(f, c).adjoint());
    return out;
  }

  /// Coefficient of the empty word.
  complex scalar_part() const {
    auto it = terms_.find({});
    return it == terms_.end() ? complex{} : it->second;
  }

  /// Largest coefficient on a non-empty word.
  double non_scalar_residual() const {
    double out = 0.0;
    for (const auto& [f, c] : terms_) {
      if (!f.empty()) out = std::max(out, std::abs(c));
    }
    return out;
  }

 private:
  static LegWord make(const std::vector<LegFactor>& factors, complex c) {
    LegWord w(c);
    for (const auto& f : factors) w = w * LegWord::leg(f.leg, f.character.frequency);
    return w;
  }

  std::map<std::vector<LegFactor>, complex> terms_;
};

using GaugeMatrix = SquareMatrix<CharacterSum>;

/// cos(c x) and sin(c x) on one leg, expanded into characters.
inline CharacterSum cos_leg(Leg leg, double c) {
  return CharacterSum(LegWord::leg(leg, c, 0.5)) + CharacterSum(LegWord::leg(leg, -c, 0.5));
}

inline CharacterSum sin_leg(Leg leg, double c) {
  return CharacterSum(LegWord::leg(leg, c, complex(0.0, -0.5))) +
         CharacterSum(LegWord::leg(leg, -c, complex(0.0, 0.5)));
}

/// The 1x1 gauge pi_u(e^{i c_u x}) pi_v(e^{i c_v x}).
inline GaugeMatrix scalar_gauge(double c_u, double c_v) {
  return GaugeMatrix(1, CharacterSum(LegWord::from({1.0, {c_u}, {c_v}})));
}

/// The 4x4 block-rotation gauge: R(c_u x) on the u-leg, R(c_v x) on the v-leg.
inline GaugeMatrix rotation_gauge(double c_u, double c_v) {
  GaugeMatrix g(4, CharacterSum{});
  g(0, 0) = cos_leg(Leg::u, c_u);
  g(0, 1) = CharacterSum(LegWord(-1.0)) * sin_leg(Leg::u, c_u);
  g(1, 0) = sin_leg(Leg::u, c_u);
  g(1, 1) = cos_leg(Leg::u, c_u);
  g(2, 2) = cos_leg(Leg::v, c_v);
  g(2, 3) = CharacterSum(LegWord(-1.0)) * sin_leg(Leg::v, c_v);
  g(3, 2) = sin_leg(Leg::v, c_v);
  g(3, 3) = cos_leg(Leg::v, c_v);
  return g;
}

inline GaugeMatrix operator*(const GaugeMatrix& a, const GaugeMatrix& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::RankMismatch, "gauge matrices of different rank");
  GaugeMatrix out(a.rank(), CharacterSum{});
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      CharacterSum acc;
      for (std::size_t k = 0; k < a.rank(); ++k) acc = acc + a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

inline GaugeMatrix adjoint(const GaugeMatrix& m) {
  GaugeMatrix out(m.rank(), CharacterSum{});
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t j = 0; j < m.rank(); ++j) out(i, j) = m(j, i).adjoint();
  }
  return out;
}

struct GaugeWilsonResult {
  ComplexMatrix value;
  /// Largest coefficient left on a non-scalar word; zero when (gU)U^* is constant.
  double residual = 0.0;
};

/// (n1^p n2^q U) U^* for a unitary gauge matrix, reduced blockwise to scalars.
inline GaugeWilsonResult wilson_relation(std::int64_t p, std::int64_t q, const GaugeMatrix& gauge) {
  const GaugeMatrix shifted = map_entries(gauge, [&](const CharacterSum& s) { return s.deck_act(p, q); });
  const GaugeMatrix product = shifted * adjoint(gauge);
  const auto n = static_cast<Eigen::Index>(gauge.rank());
  GaugeWilsonResult out{ComplexMatrix::Zero(n, n), 0.0};
  for (std::size_t i = 0; i < gauge.rank(); ++i) {
    for (std::size_t j = 0; j < gauge.rank(); ++j) {
      out.value(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = product(i, j).scalar_part();
      out.residual = std::max(out.residual, product(i, j).non_scalar_residual());
    }
  }
  return out;
}

/// Both sides of X~ U = nabla~_X~ U for the scalar gauge and the connection
/// i (c_u du + c_v dv). X~ differentiates each leg along x -> x + 2 pi tau
/// with speed alpha (u-leg) and beta (v-leg); the connection side multiplies
/// U by 2 pi theta_X. Returns |X~ U - nabla~ U| over all word coefficients.
inline double check_nc_Ag(double c_u, double c_v, const WeightVector& w) {
  const LegWord gauge = LegWord::from({1.0, {c_u}, {c_v}});

  // Characters are eigenvectors of d/dx, so X~ acts on the word by the sum of
  // per-leg rates (Leibniz).
  double rate = 0.0;
  for (const auto& f : gauge.factors()) {
    rate += (f.leg == Leg::u ? w.alpha : w.beta) * f.character.frequency;
  }
  const CharacterSum lhs(LegWord(complex(0.0, two_pi * rate)) * gauge);

  const Connection conn = presets::scalar_flat(TorusParams(0.5), c_u, c_v);
  const complex theta_x = conn.constant_theta(w)(0, 0);
  const CharacterSum rhs(LegWord(two_pi * theta_x) * gauge);

  const CharacterSum difference = lhs + CharacterSum(LegWord(-1.0)) * rhs;
  double residual = 0.0;
  for (const auto& [f, c] : difference.terms()) {
    residual = std::max(residual, std::abs(c));
  }
  return residual;
}

}  // namespace nctorus
