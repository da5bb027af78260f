#include "canonrep/curve.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace canonrep {

std::string Place::name() const {
  return infinite ? std::string("Pinf") : "P" + std::to_string(t);
}

int degree(const Divisor& d) {
  int total = 0;
  for (const auto& [place, mult] : d) total += mult;
  return total;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor out = a;
  for (const auto& [place, mult] : b) {
    const int v = (out[place] += mult);
    if (v == 0) out.erase(place);
  }
  return out;
}

std::string to_string(const Divisor& d) {
  if (d.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [place, mult] : d) {
    if (!first) os << " + ";
    first = false;
    os << mult << "*" << place.name();
  }
  return os.str();
}

Curve::Curve(std::int64_t p) : field_(std::make_shared<QuadraticField>(p)) {
  const QuadraticField* f = field_.get();
  rhs_ = Poly::monomial(f->one(), static_cast<int>(this->p())) -
         Poly::monomial(f->one(), 1);
}

std::vector<Place> Curve::places() const {
  std::vector<Place> out;
  for (std::uint32_t t = 0; t < p(); ++t) out.push_back(Place::finite(t));
  out.push_back(Place::infinity());
  return out;
}

CurveFunction Curve::constant(const Fq& c) const {
  return CurveFunction(this, RationalFunction::constant(c),
                       RationalFunction(field_ptr()));
}

CurveFunction Curve::constant(std::int64_t c) const { return constant(scalar(c)); }

CurveFunction Curve::x() const {
  return CurveFunction(this, RationalFunction(Poly::monomial(field_->one(), 1)),
                       RationalFunction(field_ptr()));
}

CurveFunction Curve::y() const {
  return CurveFunction(this, RationalFunction(field_ptr()),
                       RationalFunction::constant(field_->one()));
}

CurveFunction Curve::x_shift_power(std::int64_t t, int k) const {
  return CurveFunction(this, RationalFunction::linear_power(scalar(t), k),
                       RationalFunction(field_ptr()));
}

CurveFunction Curve::mobius(const Fq& a, const Fq& b, const Fq& c,
                            const Fq& d) const {
  const QuadraticField* f = field_ptr();
  return CurveFunction(this, RationalFunction(Poly(f, {b, a}), Poly(f, {d, c})),
                       RationalFunction(f));
}

Differential Curve::dx() const { return Differential(constant(1)); }

Differential Curve::dy() const {
  // dy = -dx / (2y) = -y / (2 (x^p - x)) dx
  const QuadraticField* f = field_ptr();
  RationalFunction b(Poly::constant(-(f->one() / scalar(2))), rhs_);
  return Differential(CurveFunction(this, RationalFunction(f), std::move(b)));
}

CurveFunction& CurveFunction::operator+=(const CurveFunction& rhs) {
  if (curve_ == nullptr) return *this = rhs;
  if (rhs.curve_ == nullptr) return *this;
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

CurveFunction& CurveFunction::operator-=(const CurveFunction& rhs) {
  if (rhs.curve_ == nullptr) return *this;
  return *this += -rhs;
}

CurveFunction CurveFunction::operator-() const {
  if (curve_ == nullptr) return *this;
  return CurveFunction(curve_, -a_, -b_);
}

CurveFunction operator*(const CurveFunction& f, const CurveFunction& g) {
  const RationalFunction rhs(f.curve_->rhs());
  RationalFunction a = f.a_ * g.a_;
  if (!f.b_.is_zero() && !g.b_.is_zero()) a += f.b_ * g.b_ * rhs;
  RationalFunction b = f.a_ * g.b_ + f.b_ * g.a_;
  return CurveFunction(f.curve_, std::move(a), std::move(b));
}

CurveFunction operator*(const Fq& s, const CurveFunction& g) {
  return CurveFunction(g.curve_, RationalFunction::constant(s) * g.a_,
                       RationalFunction::constant(s) * g.b_);
}

CurveFunction operator/(const CurveFunction& f, const CurveFunction& g) {
  return f * g.inverse();
}

RationalFunction CurveFunction::norm() const {
  RationalFunction out = a_ * a_;
  if (!b_.is_zero()) out -= b_ * b_ * RationalFunction(curve_->rhs());
  return out;
}

CurveFunction CurveFunction::conjugate() const {
  return CurveFunction(curve_, a_, -b_);
}

CurveFunction CurveFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const RationalFunction n_inv = norm().inverse();
  return CurveFunction(curve_, a_ * n_inv, -b_ * n_inv);
}

CurveFunction CurveFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  CurveFunction result = curve_->constant(1);
  CurveFunction base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string CurveFunction::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (!a_.is_zero()) out = a_.to_string();
  if (!b_.is_zero()) {
    if (!out.empty()) out += " + ";
    out += "[" + b_.to_string() + "]*y";
  }
  return out;
}

namespace {

constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

int rational_valuation_finite(const RationalFunction& r, const Fq& t) {
  if (r.is_zero()) return kInfiniteValuation;
  return 2 * r.order_at(t);
}

}  // namespace

int valuation(const CurveFunction& f, const Place& at) {
  if (f.is_zero()) throw ZeroFunction();
  const int p = static_cast<int>(f.curve().p());
  if (at.infinite) {
    const int va = f.a().is_zero() ? kInfiniteValuation : -2 * f.a().degree();
    const int vb = f.b().is_zero() ? kInfiniteValuation : -2 * f.b().degree() - p;
    return std::min(va, vb);
  }
  const Fq t(f.curve().field_ptr(), at.t, 0);
  const int va = rational_valuation_finite(f.a(), t);
  const int vb = f.b().is_zero() ? kInfiniteValuation
                                 : rational_valuation_finite(f.b(), t) + 1;
  return std::min(va, vb);
}

int valuation(const Differential& w, const Place& at) {
  return valuation(w.coefficient(), at) + (at.infinite ? -3 : 1);
}

namespace {

void require_split_denominator(const RationalFunction& r) {
  if (r.is_zero()) return;
  if (!split_over_base_field(r.den()).splits()) {
    throw UnsupportedPlace("denominator " + r.den().to_string() +
                           " has a factor without an F_p root");
  }
}

bool numerator_splits(const RationalFunction& r) {
  return split_over_base_field(r.num()).splits();
}

}  // namespace

DivisorInfo divisor_and_regularity(const CurveFunction& f,
                                   const std::set<Place>& excluded) {
  if (f.is_zero()) throw ZeroFunction();
  require_split_denominator(f.a());
  require_split_denominator(f.b());
  DivisorInfo out;
  for (const Place& place : f.curve().places()) {
    const int v = valuation(f, place);
    if (v != 0) out.divisor[place] = v;
    if (v < 0 && !excluded.contains(place)) out.regular = false;
  }
  if (f.a().is_zero()) {
    out.complete = numerator_splits(f.b());
  } else if (f.b().is_zero()) {
    out.complete = numerator_splits(f.a());
  } else {
    out.complete = numerator_splits(f.norm());
  }
  return out;
}

DivisorInfo divisor_and_regularity(const Differential& w,
                                   const std::set<Place>& excluded) {
  DivisorInfo out = divisor_and_regularity(w.coefficient(), {});
  Divisor dx_div;
  for (const Place& place : w.curve().places()) dx_div[place] = place.infinite ? -3 : 1;
  out.divisor = out.divisor + dx_div;
  out.regular = true;
  for (const auto& [place, mult] : out.divisor) {
    if (mult < 0 && !excluded.contains(place)) out.regular = false;
  }
  return out;
}

bool is_regular_on(const CurveFunction& f, const std::set<Place>& excluded) {
  if (f.is_zero()) return true;
  require_split_denominator(f.a());
  require_split_denominator(f.b());
  for (const Place& place : f.curve().places()) {
    if (excluded.contains(place)) continue;
    if (valuation(f, place) < 0) return false;
  }
  return true;
}

bool is_regular_on(const Differential& w, const std::set<Place>& excluded) {
  if (w.is_zero()) return true;
  require_split_denominator(w.coefficient().a());
  require_split_denominator(w.coefficient().b());
  for (const Place& place : w.curve().places()) {
    if (excluded.contains(place)) continue;
    if (valuation(w, place) < 0) return false;
  }
  return true;
}

Differential differential_d(const CurveFunction& f) {
  const Curve& curve = f.curve();
  const QuadraticField* field = curve.field_ptr();
  // B * dy/dx = -B / (2y) = -B y / (2 (x^p - x))
  const RationalFunction half_over_rhs(Poly::constant(field->one() / curve.scalar(2)),
                                       curve.rhs());
  RationalFunction a = f.a().derivative();
  RationalFunction b = f.b().derivative() - f.b() * half_over_rhs;
  return Differential(CurveFunction(&curve, std::move(a), std::move(b)));
}

Differential holomorphic_basis_form(const Curve& curve, int i) {
  // x^i / y = x^i y / (x^p - x)
  const QuadraticField* field = curve.field_ptr();
  RationalFunction b(Poly::monomial(field->one(), i), curve.rhs());
  return Differential(CurveFunction(&curve, RationalFunction(field), std::move(b)));
}

std::optional<std::vector<Fq>> holomorphic_coordinates(const Differential& w) {
  const Curve& curve = w.curve();
  const int g = curve.genus();
  std::vector<Fq> coords(static_cast<std::size_t>(g), curve.field().zero());
  if (w.is_zero()) return coords;
  const CurveFunction prod = w.coefficient() * curve.y();
  if (!prod.b().is_zero() || !prod.a().is_polynomial()) return std::nullopt;
  const Poly& poly = prod.a().num();
  if (poly.degree() > g - 1) return std::nullopt;
  for (int k = 0; k <= poly.degree(); ++k) coords[static_cast<std::size_t>(k)] = poly.coeff(k);
  return coords;
}

}  // namespace canonrep
