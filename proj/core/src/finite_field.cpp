#include "canonrep/finite_field.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace canonrep {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

const QuadraticField* pick(const Fq& x, const Fq& y) {
  return x.field() != nullptr ? x.field() : y.field();
}

}  // namespace

Fq Fq::operator-() const {
  if (field_ == nullptr || is_zero()) return *this;
  const std::uint32_t p = field_->characteristic();
  return Fq(field_, a_ == 0 ? 0 : p - a_, b_ == 0 ? 0 : p - b_);
}

Fq& Fq::operator+=(const Fq& rhs) {
  field_ = pick(*this, rhs);
  if (field_ == nullptr) return *this;
  const std::uint32_t p = field_->characteristic();
  a_ += rhs.a_;
  if (a_ >= p) a_ -= p;
  b_ += rhs.b_;
  if (b_ >= p) b_ -= p;
  return *this;
}

Fq& Fq::operator-=(const Fq& rhs) {
  field_ = pick(*this, rhs);
  if (field_ == nullptr) return *this;
  const std::uint32_t p = field_->characteristic();
  a_ = a_ >= rhs.a_ ? a_ - rhs.a_ : a_ + p - rhs.a_;
  b_ = b_ >= rhs.b_ ? b_ - rhs.b_ : b_ + p - rhs.b_;
  return *this;
}

Fq& Fq::operator*=(const Fq& rhs) {
  field_ = pick(*this, rhs);
  if (field_ == nullptr) return *this;
  const std::uint64_t p = field_->characteristic();
  const std::uint64_t n = field_->nonresidue();
  const std::uint64_t a = a_, b = b_, c = rhs.a_, d = rhs.b_;
  const std::uint64_t bd = b * d % p;
  a_ = static_cast<std::uint32_t>((a * c + n * bd) % p);
  b_ = static_cast<std::uint32_t>((a * d + b * c) % p);
  return *this;
}

Fq& Fq::operator/=(const Fq& rhs) { return *this *= rhs.inverse(); }

std::uint32_t Fq::norm() const {
  if (field_ == nullptr) return 0;
  const std::uint64_t p = field_->characteristic();
  const std::uint64_t n = field_->nonresidue();
  const std::uint64_t aa = static_cast<std::uint64_t>(a_) * a_ % p;
  const std::uint64_t bb = static_cast<std::uint64_t>(b_) * b_ % p * n % p;
  return static_cast<std::uint32_t>((aa + p - bb) % p);
}

Fq Fq::inverse() const {
  if (field_ == nullptr || is_zero()) throw DivisionByZero();
  // (a + b delta)^{-1} = (a - b delta) / (a^2 - n b^2)
  const std::uint32_t inv_norm = field_->inv_mod(norm());
  const Fq c = conjugate();
  return Fq(field_, field_->mul_mod(c.a_, inv_norm),
            field_->mul_mod(c.b_, inv_norm));
}

Fq Fq::conjugate() const {
  if (field_ == nullptr) return *this;
  const std::uint32_t p = field_->characteristic();
  return Fq(field_, a_, b_ == 0 ? 0 : p - b_);
}

Fq Fq::pow(std::int64_t e) const {
  Fq base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Fq result = field_ != nullptr ? field_->one() : Fq();
  if (field_ == nullptr) {
    // Field-less zero: 0^0 is undefined without a field, 0^e = 0.
    return Fq();
  }
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Fq::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Fq& x) {
  if (x.im() == 0) return os << x.re();
  if (x.re() == 0) return os << x.im() << "d";
  return os << x.re() << "+" << x.im() << "d";
}

QuadraticField::QuadraticField(std::int64_t p) {
  if (p <= 2 || p > 65521 || !is_prime(p)) throw NotAnOddPrime(p);
  p_ = static_cast<std::uint32_t>(p);
  nonresidue_ = 0;
  for (std::uint32_t a = 2; a < p_; ++a) {
    if (legendre(a) == -1) {
      nonresidue_ = a;
      break;
    }
  }
  i_ = sqrt((*this)(-1)).root;
}

std::uint32_t QuadraticField::pow_mod(std::uint32_t base, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t b = base % p_;
  while (e > 0) {
    if (e & 1) result = result * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t QuadraticField::inv_mod(std::uint32_t x) const {
  if (x % p_ == 0) throw DivisionByZero();
  return pow_mod(x, p_ - 2);
}

int QuadraticField::legendre(std::uint32_t a) const {
  a %= p_;
  if (a == 0) return 0;
  return pow_mod(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::uint32_t QuadraticField::tonelli_shanks(std::uint32_t a) const {
  // p - 1 = q * 2^s with q odd.
  std::uint32_t q = p_ - 1;
  std::uint32_t s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint32_t m = s;
  std::uint32_t c = pow_mod(nonresidue_, q);
  std::uint32_t t = pow_mod(a, q);
  std::uint32_t r = pow_mod(a, (q + 1) / 2);
  while (t != 1) {
    std::uint32_t i = 0;
    std::uint32_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2);
      ++i;
    }
    std::uint32_t b = c;
    for (std::uint32_t k = 0; k + i + 1 < m; ++k) b = mul_mod(b, b);
    m = i;
    c = mul_mod(b, b);
    t = mul_mod(t, c);
    r = mul_mod(r, b);
  }
  return r;
}

SquareRoot QuadraticField::sqrt(const Fq& a) const {
  if (a.is_zero()) throw ZeroInput();
  if (!a.in_base_field()) {
    throw std::invalid_argument("square roots are only taken of F_p elements");
  }
  const std::uint32_t v = a.re();
  SquareRoot out;
  if (legendre(v) == 1) {
    std::uint32_t r = tonelli_shanks(v);
    r = std::min(r, p_ - r);
    out.root = Fq(this, r, 0);
    out.in_base_field = true;
  } else {
    // a = n * s^2 with s in F_p, root = s * delta.
    const std::uint32_t quotient = mul_mod(v, inv_mod(nonresidue_));
    std::uint32_t s = tonelli_shanks(quotient);
    s = std::min(s, p_ - s);
    out.root = Fq(this, 0, s);
    out.in_base_field = false;
  }
  return out;
}

std::vector<Fq> QuadraticField::base_elements() const {
  std::vector<Fq> out;
  out.reserve(p_);
  for (std::uint32_t a = 0; a < p_; ++a) out.emplace_back(this, a, 0);
  return out;
}

std::vector<Fq> QuadraticField::all_elements() const {
  std::vector<Fq> out;
  out.reserve(static_cast<std::size_t>(p_) * p_);
  for (std::uint32_t a = 0; a < p_; ++a) {
    for (std::uint32_t b = 0; b < p_; ++b) out.emplace_back(this, a, b);
  }
  return out;
}

std::uint32_t QuadraticField::primitive_root() const {
  for (std::uint32_t g = 2; g < p_ + 1; ++g) {
    std::uint32_t candidate = g % p_;
    if (candidate == 0) continue;
    bool ok = true;
    std::uint32_t n = p_ - 1;
    for (std::uint32_t f = 2; f * f <= n; ++f) {
      if (n % f == 0) {
        if (pow_mod(candidate, (p_ - 1) / f) == 1) ok = false;
        while (n % f == 0) n /= f;
      }
    }
    if (n > 1 && pow_mod(candidate, (p_ - 1) / n) == 1) ok = false;
    if (ok) return candidate;
  }
  return 1;  // p == 2 is rejected in the constructor, so unreachable.
}

}  // namespace canonrep
