#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace canonrep {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class ZeroInput : public std::invalid_argument {
 public:
  ZeroInput() : std::invalid_argument("square root of zero requested") {}
};

class NotAnOddPrime : public std::invalid_argument {
 public:
  explicit NotAnOddPrime(std::int64_t p)
      : std::invalid_argument("not an odd prime > 2: " + std::to_string(p)) {}
};

bool is_prime(std::int64_t n);

class QuadraticField;

// Element a + b*delta of F_{p^2}, where delta^2 = n for the smallest
// quadratic nonresidue n mod p. F_p sits inside as b == 0.
//
// A default-constructed element is zero and carries no field; it adopts the
// field of whatever it is combined with.
class Fq {
 public:
  Fq() = default;
  Fq(const QuadraticField* field, std::uint32_t a, std::uint32_t b = 0)
      : field_(field), a_(a), b_(b) {}

  const QuadraticField* field() const { return field_; }
  std::uint32_t re() const { return a_; }
  std::uint32_t im() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool in_base_field() const { return b_ == 0; }

  Fq operator-() const;
  Fq& operator+=(const Fq& rhs);
  Fq& operator-=(const Fq& rhs);
  Fq& operator*=(const Fq& rhs);
  Fq& operator/=(const Fq& rhs);

  friend Fq operator+(Fq lhs, const Fq& rhs) { return lhs += rhs; }
  friend Fq operator-(Fq lhs, const Fq& rhs) { return lhs -= rhs; }
  friend Fq operator*(Fq lhs, const Fq& rhs) { return lhs *= rhs; }
  friend Fq operator/(Fq lhs, const Fq& rhs) { return lhs /= rhs; }

  Fq inverse() const;
  Fq pow(std::int64_t e) const;
  // a - b*delta, i.e. x -> x^p.
  Fq conjugate() const;
  // (a + b delta)(a - b delta) = a^2 - n b^2, an element of F_p.
  std::uint32_t norm() const;

  friend bool operator==(const Fq& x, const Fq& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Lexicographic on (a, b) with representatives in [0, p).
  friend std::strong_ordering operator<=>(const Fq& x, const Fq& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

  std::string to_string() const;

 private:
  const QuadraticField* field_ = nullptr;
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fq& x);

struct SquareRoot {
  Fq root;
  bool in_base_field = false;
};

// F_{p^2} = F_p(delta), delta^2 = nonresidue. Immutable after construction;
// elements hold a raw pointer to it, so it must outlive them.
class QuadraticField {
 public:
  explicit QuadraticField(std::int64_t p);

  QuadraticField(const QuadraticField&) = delete;
  QuadraticField& operator=(const QuadraticField&) = delete;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t nonresidue() const { return nonresidue_; }

  Fq zero() const { return Fq(this, 0, 0); }
  Fq one() const { return Fq(this, 1, 0); }
  Fq delta() const { return Fq(this, 0, 1); }
  // Canonical square root of -1.
  const Fq& i() const { return i_; }
  Fq operator()(std::int64_t v) const { return Fq(this, reduce(v), 0); }
  Fq make(std::int64_t a, std::int64_t b) const {
    return Fq(this, reduce(a), reduce(b));
  }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  // Legendre symbol of a mod p: 0, 1 or -1.
  int legendre(std::uint32_t a) const;
  // Root r with r^2 = a, in_base_field iff a is a square in F_p. Among r, -r
  // the lexicographically smaller representation is returned.
  SquareRoot sqrt(const Fq& a) const;

  std::vector<Fq> base_elements() const;
  std::vector<Fq> all_elements() const;
  // Smallest generator of F_p^*.
  std::uint32_t primitive_root() const;

  std::uint32_t mul_mod(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p_);
  }
  std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e) const;
  std::uint32_t inv_mod(std::uint32_t x) const;

 private:
  std::uint32_t tonelli_shanks(std::uint32_t a) const;

  std::uint32_t p_;
  std::uint32_t nonresidue_;
  Fq i_;
};

}  // namespace canonrep
