#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "canonrep/curve.hpp"
#include "canonrep/finite_field.hpp"
#include "canonrep/linalg.hpp"

namespace canonrep {

class InsufficientPrecision : public std::runtime_error {
 public:
  explicit InsufficientPrecision(const std::string& what) : std::runtime_error(what) {}
};

// Truncated Laurent series sum_{e < order} c_e u^e. Coefficients below the
// leading exponent are zero; nothing is known at or beyond `order`.
class LaurentSeries {
 public:
  // Order used for series that are exact (finite sums).
  static constexpr int kExact = 1 << 28;

  LaurentSeries() = default;
  // O(u^order)
  LaurentSeries(const QuadraticField* field, int order)
      : field_(field), val_(order), order_(order) {}
  // coeffs[k] multiplies u^(leading + k); order = leading + coeffs.size().
  LaurentSeries(const QuadraticField* field, int leading, std::vector<Fq> coeffs);
  LaurentSeries(const QuadraticField* field, int leading, std::vector<Fq> coeffs,
                int order);

  static LaurentSeries monomial(const Fq& c, int exponent, int order = kExact);

  const QuadraticField* field() const { return field_; }
  // Leading exponent; equals order() for a series with no known nonzero term.
  int valuation() const { return val_; }
  int order() const { return order_; }
  int relative_precision() const { return order_ - val_; }
  bool is_zero() const { return coeffs_.empty(); }
  Fq leading() const;
  // Throws InsufficientPrecision when exponent >= order().
  Fq coefficient(int exponent) const;

  LaurentSeries truncated(int order) const;
  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
  }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Fq& s, const LaurentSeries& a);
  LaurentSeries inverse() const;
  LaurentSeries pow(int e) const;
  LaurentSeries derivative() const;

  std::string to_string() const;

 private:
  void normalize();

  const QuadraticField* field_ = nullptr;
  int val_ = kExact;
  int order_ = kExact;
  std::vector<Fq> coeffs_;
};

// Truncation order used when the caller does not specify one: 4p + 4.
int default_series_order(const Curve& curve);

// The canonical uniformizer is u = y at P_t and u = y / x^((p+1)/2) at
// infinity. Expansions are exact through u^(order - 1).
LaurentSeries laurent_at(const CurveFunction& f, const Place& at, int order);
// Expansion of w / du.
LaurentSeries laurent_at(const Differential& w, const Place& at, int order);
// dx/du = -2y at P_t and -2 u x^2 at infinity.
LaurentSeries dx_du(const Curve& curve, const Place& at, int order);
// x - t at P_t (that is -sum u^(2 p^i)) or 1/x at infinity (sum u^(2 p^i)).
LaurentSeries local_coordinate(const Curve& curve, const Place& at, int order);

Fq residue(const Differential& w, const Place& at);

// <w, f> = sum over P in X - Q of res_P(f w) = -res_Q(f w), where f is an
// overlap function on the cover {X - Q, X - Q'} and w is a global form.
Fq serre_pair(const Differential& w, const CurveFunction& f,
              const Place& excluded = Place::finite(0));

// y x^-j for j = 1..g; their classes span H^1(X, O) on {X - P0, X - Pinf}.
CurveFunction h1o_basis_function(const Curve& curve, int j);
// Entry (i, j - 1) is <x^i dx / y, y x^-j>.
Matrix gram_matrix(const Curve& curve);

}  // namespace canonrep
