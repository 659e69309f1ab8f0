#pragma once

#include <cstdint>
#include <random>

#include "nctorus/algebra.hpp"

namespace nctorus {

struct ElementShape {
  int max_terms = 5;
  int max_exponent = 3;
  int max_lambda_exponent = 2;
};

/// Random sparse element with 1..max_terms monomials, exponents in
/// [-max_exponent, max_exponent] and coefficients in the unit square.
template <class Rng>
TorusElement random_element(Rng& rng, TorusParams params, ElementShape shape = {}) {
  std::uniform_int_distribution<int> count(1, shape.max_terms);
  std::uniform_int_distribution<std::int64_t> exponent(-shape.max_exponent, shape.max_exponent);
  std::uniform_int_distribution<std::int64_t> lk(-shape.max_lambda_exponent,
                                                 shape.max_lambda_exponent);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  TorusElement out(params);
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    const MonomialKey key{exponent(rng), exponent(rng), lk(rng)};
    const double re = coeff(rng);
    const double im = coeff(rng);
    out.add_term(key, {re, im});
  }
  return out;
}

}  // namespace nctorus
