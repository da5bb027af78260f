#include "canonrep/poly.hpp"

#include <algorithm>
#include <sstream>

namespace canonrep {

Poly::Poly(const QuadraticField* field, std::vector<Fq> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(const Fq& c) {
  return Poly(c.field(), std::vector<Fq>{c});
}

Poly Poly::monomial(const Fq& c, int k) {
  std::vector<Fq> v(static_cast<std::size_t>(k) + 1, c.field()->zero());
  v.back() = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::linear_root(const Fq& t) {
  const QuadraticField* f = t.field();
  return Poly(f, {-t, f->one()});
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  for (const Fq& c : c_) {
    if (field_ == nullptr) field_ = c.field();
  }
}

Fq Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) {
    return field_ != nullptr ? field_->zero() : Fq();
  }
  return c_[static_cast<std::size_t>(k)];
}

Fq Poly::leading() const {
  return c_.empty() ? (field_ != nullptr ? field_->zero() : Fq()) : c_.back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (field_ == nullptr) field_ = rhs.field_;
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), field_->zero());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (field_ == nullptr) field_ = rhs.field_;
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), field_->zero());
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  const QuadraticField* f = lhs.field_ != nullptr ? lhs.field_ : rhs.field_;
  if (lhs.is_zero() || rhs.is_zero()) return Poly(f);
  std::vector<Fq> out(lhs.c_.size() + rhs.c_.size() - 1, f->zero());
  for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
    if (lhs.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
  }
  return Poly(f, std::move(out));
}

Poly operator*(const Fq& s, const Poly& rhs) {
  const QuadraticField* f = rhs.field_ != nullptr ? rhs.field_ : s.field();
  std::vector<Fq> out = rhs.c_;
  for (Fq& c : out) c = s * c;
  return Poly(f, std::move(out));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Fq& c : out.c_) c = -c;
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(field_->one());
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  const QuadraticField* f = field_ != nullptr ? field_ : divisor.field_;
  Poly rem = *this;
  rem.field_ = f;
  if (rem.degree() < divisor.degree()) return {Poly(f), rem};
  const int dd = divisor.degree();
  std::vector<Fq> quot(static_cast<std::size_t>(rem.degree() - dd) + 1, f->zero());
  const Fq inv_lead = divisor.leading().inverse();
  for (int k = rem.degree(); k >= dd; --k) {
    const Fq c = rem.c_[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem.c_[static_cast<std::size_t>(k - dd + j)] -= c * divisor.c_[static_cast<std::size_t>(j)];
    }
  }
  rem.trim();
  return {Poly(f, std::move(quot)), rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Fq> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    out[k - 1] = (*field_)(static_cast<std::int64_t>(k)) * c_[k];
  }
  return Poly(field_, std::move(out));
}

Fq Poly::evaluate(const Fq& x) const {
  Fq acc = field_ != nullptr ? field_->zero() : Fq();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::taylor_shift(const Fq& t) const {
  // Horner in the ring: p(s + t) = (...(c_n (s+t) + c_{n-1})(s+t) + ...).
  if (is_zero()) return *this;
  const Poly shift(field_, {t, field_->one()});
  Poly acc(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * shift + Poly::constant(*it);
  }
  return acc;
}

int Poly::order_at(const Fq& t) const {
  if (is_zero()) throw std::invalid_argument("order of the zero polynomial");
  const Poly shifted = taylor_shift(t);
  int k = 0;
  while (shifted.c_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

Poly Poly::strip_root(const Fq& t) const {
  Poly out = *this;
  const Poly lin = linear_root(t);
  while (!out.is_zero() && out.evaluate(t).is_zero()) out = out.divmod(lin).first;
  return out;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Fq& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || !c.is_one()) os << "(" << c << ")";
    if (k >= 1) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalRootSplit split_over_base_field(const Poly& poly) {
  if (poly.is_zero()) throw std::invalid_argument("cannot split the zero polynomial");
  const QuadraticField* f = poly.field();
  RationalRootSplit out;
  out.unit = poly.leading();
  Poly rest = poly.monic();
  for (std::uint32_t t = 0; t < f->characteristic() && rest.degree() > 0; ++t) {
    const Fq root(f, t, 0);
    int mult = 0;
    const Poly lin = Poly::linear_root(root);
    while (rest.degree() > 0 && rest.evaluate(root).is_zero()) {
      rest = rest.divmod(lin).first;
      ++mult;
    }
    if (mult > 0) out.multiplicities[t] = mult;
  }
  out.remainder = rest;
  return out;
}

RationalFunction::RationalFunction(const QuadraticField* field)
    : num_(field), den_(Poly::constant(field->one())) {}

RationalFunction::RationalFunction(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.field()->one())) {}

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RationalFunction RationalFunction::linear_power(const Fq& t, int k) {
  const Poly lin = Poly::linear_root(t);
  const Poly one = Poly::constant(t.field()->one());
  if (k >= 0) return RationalFunction(lin.pow(static_cast<unsigned>(k)), one);
  return RationalFunction(one, lin.pow(static_cast<unsigned>(-k)));
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  const QuadraticField* f = num_.field() != nullptr ? num_.field() : den_.field();
  if (num_.is_zero()) {
    num_ = Poly(f);
    den_ = Poly::constant(f->one());
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Fq lead = den_.leading();
  if (!lead.is_one()) {
    const Fq inv = lead.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

int RationalFunction::degree() const { return num_.degree() - den_.degree(); }

int RationalFunction::order_at(const Fq& t) const {
  return num_.order_at(t) - den_.order_at(t);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = rhs;
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  return *this *= rhs.inverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction out(num_.pow(static_cast<unsigned>(e)),
                       den_.pow(static_cast<unsigned>(e)));
  return out;
}

RationalFunction RationalFunction::derivative() const {
  Poly n = num_.derivative() * den_ - num_ * den_.derivative();
  return RationalFunction(std::move(n), den_ * den_);
}

namespace {

// Homogenised substitution: returns P with q((a x + b)/(c x + d)) =
// P / (c x + d)^deg(q).
Poly homogenised_compose(const Poly& q, const Poly& top, const Poly& bottom) {
  const QuadraticField* f = top.field();
  if (q.is_zero()) return Poly(f);
  const int n = q.degree();
  std::vector<Poly> top_pow{Poly::constant(f->one())};
  std::vector<Poly> bottom_pow{Poly::constant(f->one())};
  for (int k = 1; k <= n; ++k) {
    top_pow.push_back(top_pow.back() * top);
    bottom_pow.push_back(bottom_pow.back() * bottom);
  }
  Poly acc(f);
  for (int k = 0; k <= n; ++k) {
    const Fq& c = q.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    acc += c * (top_pow[static_cast<std::size_t>(k)] *
                bottom_pow[static_cast<std::size_t>(n - k)]);
  }
  return acc;
}

}  // namespace

RationalFunction RationalFunction::compose_mobius(const Fq& a, const Fq& b,
                                                  const Fq& c,
                                                  const Fq& d) const {
  const QuadraticField* f = field();
  const Poly top(f, {b, a});
  const Poly bottom(f, {d, c});
  Poly n = homogenised_compose(num_, top, bottom);
  Poly m = homogenised_compose(den_, top, bottom);
  const int shift = num_.degree() - den_.degree();
  if (shift > 0) {
    m = m * bottom.pow(static_cast<unsigned>(shift));
  } else if (shift < 0) {
    n = n * bottom.pow(static_cast<unsigned>(-shift));
  }
  return RationalFunction(std::move(n), std::move(m));
}

std::optional<std::map<int, Fq>> RationalFunction::laurent_terms_at(
    const Fq& t) const {
  std::map<int, Fq> out;
  if (is_zero()) return out;
  const int e = den_.degree();
  if (!(den_ == Poly::linear_root(t).pow(static_cast<unsigned>(e)))) {
    return std::nullopt;
  }
  const Poly shifted = num_.taylor_shift(t);
  for (int k = 0; k <= shifted.degree(); ++k) {
    const Fq& c = shifted.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) out.emplace(k - e, c);
  }
  return out;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace canonrep
