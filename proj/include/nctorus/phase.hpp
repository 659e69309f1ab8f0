#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace nctorus {

using complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr complex imag_unit{0.0, 1.0};

/// exp(2*pi*i*turns). Quarter turns are returned exactly.
inline complex cis_turns(double turns) {
  double frac = turns - std::floor(turns);
  const double quarters = frac * 4.0;
  if (quarters == std::floor(quarters)) {
    switch (static_cast<int>(quarters) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, two_pi * frac);
}

/// exp(2*pi*i*num/den) computed from the reduced residue num mod den.
inline complex cis_rational(std::int64_t num, std::int64_t den) {
  std::int64_t r = num % den;
  if (r < 0) r += den;
  return cis_turns(static_cast<double>(r) / static_cast<double>(den));
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace nctorus
