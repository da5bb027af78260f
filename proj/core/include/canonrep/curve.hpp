#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "canonrep/finite_field.hpp"
#include "canonrep/poly.hpp"

namespace canonrep {

class UnsupportedPlace : public std::runtime_error {
 public:
  explicit UnsupportedPlace(const std::string& what) : std::runtime_error(what) {}
};

class ZeroFunction : public std::domain_error {
 public:
  ZeroFunction() : std::domain_error("the zero function has no finite valuation") {}
};

// One of the p + 1 Weierstrass points: P_t = (t, 0) for t in F_p, or the
// point at infinity.
struct Place {
  bool infinite = false;
  std::uint32_t t = 0;

  static Place finite(std::uint32_t t) { return Place{false, t}; }
  static Place infinity() { return Place{true, 0}; }

  std::string name() const;
  friend bool operator==(const Place&, const Place&) = default;
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (auto c = a.infinite <=> b.infinite; c != 0) return c;
    return a.t <=> b.t;
  }
};

using Divisor = std::map<Place, int>;
int degree(const Divisor& d);
Divisor operator+(const Divisor& a, const Divisor& b);
std::string to_string(const Divisor& d);

class CurveFunction;
class Differential;

// The smooth projective model of y^2 = x^p - x over F_{p^2}.
class Curve {
 public:
  explicit Curve(std::int64_t p);
  Curve(const Curve&) = delete;
  Curve& operator=(const Curve&) = delete;

  std::uint32_t p() const { return field_->characteristic(); }
  int genus() const { return static_cast<int>((p() - 1) / 2); }
  const QuadraticField& field() const { return *field_; }
  const QuadraticField* field_ptr() const { return field_.get(); }
  // x^p - x
  const Poly& rhs() const { return rhs_; }
  std::vector<Place> places() const;

  Fq scalar(std::int64_t v) const { return (*field_)(v); }
  CurveFunction constant(const Fq& c) const;
  CurveFunction constant(std::int64_t c) const;
  CurveFunction x() const;
  CurveFunction y() const;
  // c * (x - t)^k
  CurveFunction x_shift_power(std::int64_t t, int k) const;
  // (a x + b) / (c x + d)
  CurveFunction mobius(const Fq& a, const Fq& b, const Fq& c, const Fq& d) const;
  Differential dx() const;
  Differential dy() const;

 private:
  std::shared_ptr<const QuadraticField> field_;
  Poly rhs_;
};

// a(x) + b(x) * y, always reduced modulo y^2 = x^p - x.
class CurveFunction {
 public:
  CurveFunction() = default;
  CurveFunction(const Curve* curve, RationalFunction a, RationalFunction b)
      : curve_(curve), a_(std::move(a)), b_(std::move(b)) {}

  const Curve& curve() const { return *curve_; }
  const Curve* curve_ptr() const { return curve_; }
  const RationalFunction& a() const { return a_; }
  const RationalFunction& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  CurveFunction& operator+=(const CurveFunction& rhs);
  CurveFunction& operator-=(const CurveFunction& rhs);
  friend CurveFunction operator+(CurveFunction f, const CurveFunction& g) { return f += g; }
  friend CurveFunction operator-(CurveFunction f, const CurveFunction& g) { return f -= g; }
  friend CurveFunction operator*(const CurveFunction& f, const CurveFunction& g);
  friend CurveFunction operator*(const Fq& s, const CurveFunction& g);
  friend CurveFunction operator/(const CurveFunction& f, const CurveFunction& g);
  CurveFunction operator-() const;
  // (a + b y)^{-1} = (a - b y) / (a^2 - b^2 (x^p - x))
  CurveFunction inverse() const;
  CurveFunction pow(int e) const;
  // a - b y, the hyperelliptic conjugate.
  CurveFunction conjugate() const;
  // a^2 - b^2 (x^p - x)
  RationalFunction norm() const;

  friend bool operator==(const CurveFunction& f, const CurveFunction& g) {
    return f.a_ == g.a_ && f.b_ == g.b_;
  }

  std::string to_string() const;

 private:
  const Curve* curve_ = nullptr;
  RationalFunction a_;
  RationalFunction b_;
};

// coefficient * dx
class Differential {
 public:
  Differential() = default;
  explicit Differential(CurveFunction coefficient) : coeff_(std::move(coefficient)) {}

  const CurveFunction& coefficient() const { return coeff_; }
  const Curve& curve() const { return coeff_.curve(); }
  bool is_zero() const { return coeff_.is_zero(); }

  Differential& operator+=(const Differential& rhs) {
    coeff_ += rhs.coeff_;
    return *this;
  }
  Differential& operator-=(const Differential& rhs) {
    coeff_ -= rhs.coeff_;
    return *this;
  }
  friend Differential operator+(Differential a, const Differential& b) { return a += b; }
  friend Differential operator-(Differential a, const Differential& b) { return a -= b; }
  friend Differential operator*(const CurveFunction& f, const Differential& w) {
    return Differential(f * w.coeff_);
  }
  friend Differential operator*(const Fq& s, const Differential& w) {
    return Differential(s * w.coeff_);
  }
  Differential operator-() const { return Differential(-coeff_); }
  friend bool operator==(const Differential& a, const Differential& b) {
    return a.coeff_ == b.coeff_;
  }

  std::string to_string() const { return "(" + coeff_.to_string() + ") dx"; }

 private:
  CurveFunction coeff_;
};

// v_{P_t}(A + B y) = min(2 ord_{x-t} A, 2 ord_{x-t} B + 1),
// v_inf(A + B y) = min(-2 deg A, -2 deg B - p).
int valuation(const CurveFunction& f, const Place& at);
// v_P(u dx) = v_P(u) + v_P(dx); v_{P_t}(dx) = 1, v_inf(dx) = -3.
int valuation(const Differential& w, const Place& at);

struct DivisorInfo {
  // Valuations at the p + 1 Weierstrass points (zero entries omitted).
  Divisor divisor;
  // False when the function also vanishes at other places; `divisor` is then
  // the restriction to the Weierstrass points.
  bool complete = true;
  // All poles lie in the excluded set.
  bool regular = true;
};

// Throws UnsupportedPlace when a denominator has a factor other than (x - t)
// with t in F_p, i.e. when a pole could sit at a place we do not model.
DivisorInfo divisor_and_regularity(const CurveFunction& f,
                                   const std::set<Place>& excluded = {});
DivisorInfo divisor_and_regularity(const Differential& w,
                                   const std::set<Place>& excluded = {});
bool is_regular_on(const CurveFunction& f, const std::set<Place>& excluded);
bool is_regular_on(const Differential& w, const std::set<Place>& excluded);

// d(A + B y) = (A' + B' y - B / (2 y)) dx, using 2 y dy = -dx.
Differential differential_d(const CurveFunction& f);

// The g-dimensional basis x^i dx / y of global forms.
Differential holomorphic_basis_form(const Curve& curve, int i);
// Coordinates of a global form in the basis x^i dx / y, or nullopt when the
// form is not global.
std::optional<std::vector<Fq>> holomorphic_coordinates(const Differential& w);

}  // namespace canonrep
