#include "canonrep/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace canonrep {

namespace {

constexpr int kMaxMaterialised = 1 << 20;

}  // namespace

LaurentSeries::LaurentSeries(const QuadraticField* field, int leading,
                             std::vector<Fq> coeffs)
    : field_(field),
      val_(leading),
      order_(leading + static_cast<int>(coeffs.size())),
      coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentSeries::LaurentSeries(const QuadraticField* field, int leading,
                             std::vector<Fq> coeffs, int order)
    : field_(field), val_(leading), order_(order), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) > order_ - val_) {
    coeffs_.resize(static_cast<std::size_t>(std::max(0, order_ - val_)));
  }
  normalize();
}

LaurentSeries LaurentSeries::monomial(const Fq& c, int exponent, int order) {
  if (order <= exponent) return LaurentSeries(c.field(), order);
  return LaurentSeries(c.field(), exponent, {c}, order);
}

void LaurentSeries::normalize() {
  // Trailing zeros inside the known range are implicit.
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) val_ = order_;
}

Fq LaurentSeries::leading() const {
  return coeffs_.empty() ? field_->zero() : coeffs_.front();
}

Fq LaurentSeries::coefficient(int exponent) const {
  if (exponent >= order_) {
    throw InsufficientPrecision("coefficient of u^" + std::to_string(exponent) +
                                " requested from a series known to O(u^" +
                                std::to_string(order_) + ")");
  }
  const int k = exponent - val_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return field_->zero();
  return coeffs_[static_cast<std::size_t>(k)];
}

LaurentSeries LaurentSeries::truncated(int order) const {
  if (order >= order_) return *this;
  std::vector<Fq> c = coeffs_;
  const int keep = std::max(0, order - val_);
  if (static_cast<int>(c.size()) > keep) c.resize(static_cast<std::size_t>(keep));
  return LaurentSeries(field_, std::min(val_, order), std::move(c), order);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (Fq& c : out.coeffs_) c = -c;
  return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const QuadraticField* f = a.field_ != nullptr ? a.field_ : b.field_;
  const int order = std::min(a.order_, b.order_);
  const int val = std::min(a.val_, b.val_);
  if (val >= order) return LaurentSeries(f, order);
  const int end_a = a.val_ + static_cast<int>(a.coeffs_.size());
  const int end_b = b.val_ + static_cast<int>(b.coeffs_.size());
  const int end = std::min(order, std::max(end_a, end_b));
  std::vector<Fq> c(static_cast<std::size_t>(std::max(0, end - val)), f->zero());
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    const int e = a.val_ + static_cast<int>(k);
    if (e >= end) break;
    c[static_cast<std::size_t>(e - val)] += a.coeffs_[k];
  }
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
    const int e = b.val_ + static_cast<int>(k);
    if (e >= end) break;
    c[static_cast<std::size_t>(e - val)] += b.coeffs_[k];
  }
  return LaurentSeries(f, val, std::move(c), order);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const QuadraticField* f = a.field_ != nullptr ? a.field_ : b.field_;
  const int val = a.val_ + b.val_;
  const int rel = std::min(a.relative_precision(), b.relative_precision());
  const int order = val + rel;
  if (a.is_zero() || b.is_zero() || rel <= 0) return LaurentSeries(f, order);
  const std::size_t n = std::min<std::size_t>(
      static_cast<std::size_t>(rel), a.coeffs_.size() + b.coeffs_.size() - 1);
  std::vector<Fq> c(n, f->zero());
  for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries(f, val, std::move(c), order);
}

LaurentSeries operator*(const Fq& s, const LaurentSeries& a) {
  LaurentSeries out = a;
  for (Fq& c : out.coeffs_) c = s * c;
  out.normalize();
  return out;
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const int rel = relative_precision();
  if (rel > kMaxMaterialised) {
    throw InsufficientPrecision("truncate an exact series before inverting it");
  }
  // b_0 = 1/a_0, b_k = -(sum_{j=1..k} a_j b_{k-j}) / a_0
  const Fq inv0 = coeffs_.front().inverse();
  std::vector<Fq> b(static_cast<std::size_t>(rel), field_->zero());
  b[0] = inv0;
  for (int k = 1; k < rel; ++k) {
    Fq acc = field_->zero();
    const int top = std::min<int>(k, static_cast<int>(coeffs_.size()) - 1);
    for (int j = 1; j <= top; ++j) {
      acc += coeffs_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return LaurentSeries(field_, -val_, std::move(b), -val_ + rel);
}

LaurentSeries LaurentSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentSeries result = monomial(field_->one(), 0);
  LaurentSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Fq> c(coeffs_.size(), field_ != nullptr ? field_->zero() : Fq());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const int e = val_ + static_cast<int>(k);
    c[k] = (*field_)(e) * coeffs_[k];
  }
  return LaurentSeries(field_, val_ - 1, std::move(c), order_ - 1);
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    os << "(" << coeffs_[k] << ")u^" << val_ + static_cast<int>(k) << " + ";
  }
  if (order_ >= kExact / 2) {
    if (coeffs_.empty()) os << "0";
    std::string s = os.str();
    if (s.size() >= 3 && s.ends_with(" + ")) s.resize(s.size() - 3);
    return s;
  }
  os << "O(u^" << order_ << ")";
  return os.str();
}

int default_series_order(const Curve& curve) {
  return 4 * static_cast<int>(curve.p()) + 4;
}

namespace {

// zeta with z = u^2 * zeta, where z = x - t (finite) or 1/x (infinity):
// z = eps * sum_{i >= 0} u^(2 p^i), eps = -1 at P_t and +1 at infinity.
LaurentSeries unit_part(const Curve& curve, const Place& at, int rel) {
  const QuadraticField* f = curve.field_ptr();
  const Fq eps = at.infinite ? f->one() : -f->one();
  std::vector<Fq> c(static_cast<std::size_t>(std::max(rel, 1)), f->zero());
  for (long long pw = 1; 2 * pw - 2 < rel; pw *= curve.p()) {
    c[static_cast<std::size_t>(2 * pw - 2)] = eps;
  }
  return LaurentSeries(f, 0, std::move(c), rel);
}

// Horner evaluation of a polynomial with nonzero constant term at z.
LaurentSeries evaluate_unit_poly(const Poly& h, const LaurentSeries& z) {
  const QuadraticField* f = h.field();
  LaurentSeries acc = LaurentSeries::monomial(h.leading(), 0);
  for (int k = h.degree() - 1; k >= 0; --k) {
    acc = acc * z;
    const Fq& c = h.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) acc = acc + LaurentSeries::monomial(c, 0);
  }
  (void)f;
  return acc;
}

// Splits a nonzero polynomial q(x) as z^e * h(z) with h(0) != 0, where z is
// the local coordinate at `at`.
std::pair<int, Poly> local_form(const Poly& q, const Curve& curve, const Place& at) {
  const QuadraticField* f = curve.field_ptr();
  if (at.infinite) {
    std::vector<Fq> rev(q.coeffs().rbegin(), q.coeffs().rend());
    return {-q.degree(), Poly(f, std::move(rev))};
  }
  const Poly shifted = q.taylor_shift(Fq(f, at.t, 0));
  int m = 0;
  while (shifted.coeffs()[static_cast<std::size_t>(m)].is_zero()) ++m;
  std::vector<Fq> rest(shifted.coeffs().begin() + m, shifted.coeffs().end());
  return {m, Poly(f, std::move(rest))};
}

struct LocalData {
  LaurentSeries zeta;  // unit, relative precision rel
  LaurentSeries z;     // u^2 * zeta
};

LocalData local_data(const Curve& curve, const Place& at, int rel) {
  LocalData d;
  d.zeta = unit_part(curve, at, rel + 2);
  d.z = LaurentSeries::monomial(curve.field().one(), 2) * d.zeta;
  return d;
}

// Series of a nonzero rational function of x with relative precision rel.
LaurentSeries rational_series(const RationalFunction& r, const Curve& curve,
                              const Place& at, const LocalData& d, int rel) {
  auto [en, hn] = local_form(r.num(), curve, at);
  auto [ed, hd] = local_form(r.den(), curve, at);
  const int e = en - ed;
  const LaurentSeries num = evaluate_unit_poly(hn, d.z).truncated(rel);
  const LaurentSeries den = evaluate_unit_poly(hd, d.z).truncated(rel);
  LaurentSeries zpow = LaurentSeries::monomial(curve.field().one(), 2 * e) *
                       d.zeta.truncated(rel).pow(e);
  return (zpow * num * den.inverse());
}

LaurentSeries y_series(const Curve& curve, const Place& at, const LocalData& d,
                       int rel) {
  const Fq one = curve.field().one();
  if (!at.infinite) return LaurentSeries::monomial(one, 1);
  // y = u * x^((p+1)/2) = u * z^(-(p+1)/2)
  const int h = static_cast<int>(curve.p() + 1) / 2;
  return LaurentSeries::monomial(one, 1 - 2 * h) * d.zeta.truncated(rel).pow(-h);
}

LaurentSeries function_series(const CurveFunction& f, const Place& at, int rel) {
  const Curve& curve = f.curve();
  const LocalData d = local_data(curve, at, rel + 2);
  LaurentSeries out(curve.field_ptr(), LaurentSeries::kExact);
  bool first = true;
  if (!f.a().is_zero()) {
    out = rational_series(f.a(), curve, at, d, rel);
    first = false;
  }
  if (!f.b().is_zero()) {
    LaurentSeries by = rational_series(f.b(), curve, at, d, rel) *
                       y_series(curve, at, d, rel);
    out = first ? by : out + by;
  }
  return out;
}

}  // namespace

LaurentSeries local_coordinate(const Curve& curve, const Place& at, int order) {
  const LocalData d = local_data(curve, at, std::max(order, 1));
  return d.z.truncated(order);
}

LaurentSeries laurent_at(const CurveFunction& f, const Place& at, int order) {
  const QuadraticField* field = f.curve().field_ptr();
  if (f.is_zero()) return LaurentSeries(field, order);
  const int v = valuation(f, at);
  if (order <= v) {
    throw InsufficientPrecision("order " + std::to_string(order) +
                                " does not exceed the valuation " + std::to_string(v) +
                                " at " + at.name());
  }
  return function_series(f, at, order - v).truncated(order);
}

LaurentSeries dx_du(const Curve& curve, const Place& at, int order) {
  const Fq minus_two = curve.scalar(-2);
  if (!at.infinite) return LaurentSeries::monomial(minus_two, 1, order);
  // -2 u x^2 = -2 u^-3 zeta^-2
  const int rel = std::max(order + 3, 1);
  const LocalData d = local_data(curve, at, rel);
  return (LaurentSeries::monomial(minus_two, -3) * d.zeta.truncated(rel).pow(-2))
      .truncated(order);
}

LaurentSeries laurent_at(const Differential& w, const Place& at, int order) {
  const Curve& curve = w.curve();
  if (w.is_zero()) return LaurentSeries(curve.field_ptr(), order);
  const int v = valuation(w, at);
  if (order <= v) {
    throw InsufficientPrecision("order " + std::to_string(order) +
                                " does not exceed the valuation " + std::to_string(v) +
                                " at " + at.name());
  }
  const int rel = order - v;
  const LaurentSeries c = function_series(w.coefficient(), at, rel);
  const int dx_val = at.infinite ? -3 : 1;
  const LaurentSeries dxdu = dx_du(curve, at, dx_val + rel);
  return (c * dxdu).truncated(order);
}

Fq residue(const Differential& w, const Place& at) {
  const QuadraticField* field = w.curve().field_ptr();
  if (w.is_zero()) return field->zero();
  if (valuation(w, at) >= 0) return field->zero();
  return laurent_at(w, at, 0).coefficient(-1);
}

Fq serre_pair(const Differential& w, const CurveFunction& f, const Place& excluded) {
  if (w.is_zero() || f.is_zero()) return w.curve().field().zero();
  return -residue(f * w, excluded);
}

CurveFunction h1o_basis_function(const Curve& curve, int j) {
  return curve.y() * curve.x_shift_power(0, -j);
}

Matrix gram_matrix(const Curve& curve) {
  const int g = curve.genus();
  Matrix m(curve.field_ptr(), g, g);
  for (int i = 0; i < g; ++i) {
    const Differential w = holomorphic_basis_form(curve, i);
    for (int j = 1; j <= g; ++j) m(i, j - 1) = serre_pair(w, h1o_basis_function(curve, j));
  }
  return m;
}

}  // namespace canonrep
