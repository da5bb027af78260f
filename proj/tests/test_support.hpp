#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "canonrep/curve.hpp"
#include "canonrep/group.hpp"

namespace canonrep::testing {

inline constexpr std::uint64_t kSeed = 0x5eed2024;
inline const std::vector<int> kPrimes = {3, 5, 7, 11, 13};

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Fq base(const QuadraticField& f) { return f(integer(0, static_cast<int>(f.characteristic()) - 1)); }

  Fq element(const QuadraticField& f) {
    const int p = static_cast<int>(f.characteristic());
    const int a = integer(0, p - 1);
    return f.make(a, integer(0, p - 1));
  }

  Fq nonzero(const QuadraticField& f) {
    Fq x = element(f);
    while (x.is_zero()) x = element(f);
    return x;
  }

  // Sum of `terms` monomials c (x - t)^k with t in F_p and |k| <= max_power.
  CurveFunction rational_in_x(const Curve& curve, int terms, int max_power) {
    CurveFunction out = curve.constant(0);
    for (int k = 0; k < terms; ++k) {
      out += element(curve.field()) *
             curve.x_shift_power(integer(0, static_cast<int>(curve.p()) - 1),
                                 integer(-max_power, max_power));
    }
    return out;
  }

  // A + B y with A, B supported on the Weierstrass points.
  CurveFunction function(const Curve& curve, int terms = 3, int max_power = 3) {
    return rational_in_x(curve, terms, max_power) +
           rational_in_x(curve, terms, max_power) * curve.y();
  }

  CurveFunction nonzero_function(const Curve& curve) {
    CurveFunction f = function(curve);
    while (f.is_zero()) f = function(curve);
    return f;
  }

  Differential differential(const Curve& curve) { return function(curve) * curve.dx(); }

  const GroupElement& group_element(const AutGroup& g) {
    return g.elements()[static_cast<std::size_t>(integer(0, static_cast<int>(g.order()) - 1))];
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace canonrep::testing
