#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canonrep/finite_field.hpp"

namespace canonrep {

// Dense univariate polynomial over F_{p^2}; coefficient k multiplies x^k.
// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const QuadraticField* field) : field_(field) {}
  Poly(const QuadraticField* field, std::vector<Fq> coeffs);

  static Poly constant(const Fq& c);
  static Poly constant(const QuadraticField* field, std::int64_t c) {
    return constant((*field)(c));
  }
  // c * x^k
  static Poly monomial(const Fq& c, int k);
  // x - t
  static Poly linear_root(const Fq& t);

  const QuadraticField* field() const { return field_; }
  const std::vector<Fq>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Fq coeff(int k) const;
  Fq leading() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Fq& s, const Poly& rhs);
  Poly operator-() const;
  Poly pow(unsigned e) const;

  // Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly monic() const;
  Poly derivative() const;
  Fq evaluate(const Fq& x) const;
  // q(s) = this(s + t).
  Poly taylor_shift(const Fq& t) const;
  // Multiplicity of t as a root.
  int order_at(const Fq& t) const;
  // Divides out (x - t)^order_at(t).
  Poly strip_root(const Fq& t) const;

  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  const QuadraticField* field_ = nullptr;
  std::vector<Fq> c_;
};

Poly gcd(Poly a, Poly b);

// Factorisation of a nonzero polynomial over the F_p-rational linear factors:
// poly = unit * prod (x - t)^e * remainder with remainder free of F_p roots.
struct RationalRootSplit {
  Fq unit;
  std::map<std::uint32_t, int> multiplicities;
  Poly remainder;  // monic
  bool splits() const { return remainder.degree() == 0; }
};
RationalRootSplit split_over_base_field(const Poly& poly);

// num / den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(const QuadraticField* field);
  RationalFunction(Poly num);
  RationalFunction(Poly num, Poly den);

  static RationalFunction constant(const Fq& c) {
    return RationalFunction(Poly::constant(c));
  }
  // (x - t)^k for any integer k.
  static RationalFunction linear_power(const Fq& t, int k);

  const QuadraticField* field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // deg(num) - deg(den)
  int degree() const;
  // (x - t)-adic order; zero has no finite order, caller must check.
  int order_at(const Fq& t) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
    return a /= b;
  }
  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;
  RationalFunction derivative() const;

  // this((a x + b) / (c x + d)).
  RationalFunction compose_mobius(const Fq& a, const Fq& b, const Fq& c,
                                  const Fq& d) const;

  // Laurent polynomial in (x - t): exponent -> coefficient. Requires the
  // denominator to be a power of (x - t).
  std::optional<std::map<int, Fq>> laurent_terms_at(const Fq& t) const;

  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::string to_string() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace canonrep
