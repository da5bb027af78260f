#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "canonrep/curve.hpp"
#include "canonrep/finite_field.hpp"

namespace canonrep {

class InvariantViolation : public std::invalid_argument {
 public:
  explicit InvariantViolation(const std::string& what) : std::invalid_argument(what) {}
};

// A pair (m, u) with m = [[a, b], [c, d]] in GL_2(F_p) and u^2 = det m.
// Values of this type produced by AutGroup are canonical representatives of
// their class modulo lambda (m, u) = (lambda m, lambda^((p+1)/2) u).
struct GroupElement {
  std::uint32_t a = 1, b = 0, c = 0, d = 1;
  Fq u;

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.u == y.u;
  }
  std::string to_string() const;
};

struct SubgroupInfo {
  std::size_t group_order = 0;
  std::size_t h_order = 0;
  int index = 0;
  int kernel_size = 0;
  // Powers of alpha (p = 1 mod 4) or beta (p = 3 mod 4).
  std::vector<GroupElement> alpha_cosets;
  bool alpha_cosets_tile = false;
  // Representatives that do tile G; equal to alpha_cosets when those tile.
  std::vector<GroupElement> cosets;
  bool alpha_in_h = false;
};

struct OrbitInfo {
  std::vector<Place> orbit;
  std::size_t stabilizer_order = 0;
};

// Aut(X) for X: y^2 = x^p - x, enumerated in full.
class AutGroup {
 public:
  explicit AutGroup(const Curve& curve);
  AutGroup(const AutGroup&) = delete;
  AutGroup& operator=(const AutGroup&) = delete;

  const Curve& curve() const { return curve_; }
  std::uint32_t p() const { return p_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t index_of(const GroupElement& g) const;
  std::uint64_t key(const GroupElement& g) const;

  // Throws InvariantViolation when u^2 != det m or det m = 0.
  GroupElement canonicalize(std::int64_t a, std::int64_t b, std::int64_t c,
                            std::int64_t d, const Fq& u) const;
  GroupElement identity() const;
  GroupElement mul(const GroupElement& x, const GroupElement& y) const;
  GroupElement inv(const GroupElement& x) const;
  GroupElement pow(const GroupElement& x, long long e) const;
  std::size_t element_order(const GroupElement& x) const;

  // Class of (m, 1) for m in SL_2(F_p).
  GroupElement theta(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const;
  bool in_h(const GroupElement& g) const;

  GroupElement sigma() const;  // ([[1,1],[0,1]], 1)
  GroupElement s() const;      // ([[0,-1],[1,0]], 1)
  GroupElement torus(std::uint32_t t) const;  // (diag(t^2, 1), t)
  GroupElement alpha() const;  // (I, -1)
  GroupElement beta() const;   // (diag(-1, 1), i)
  GroupElement gamma() const;  // (diag(n, 1), delta), n the nonresidue
  std::uint32_t primitive_root() const { return field().primitive_root(); }

  std::vector<GroupElement> generators() const;
  std::vector<GroupElement> h_generators() const;

  SubgroupInfo theta_and_subgroup() const;
  OrbitInfo orbit_stabilizer(const Place& place) const;

  // Image of a point under (x, y) -> ((a x + b)/(c x + d), ...).
  Place point_image(const GroupElement& g, const Place& place) const;
  // Place Q' with v_{Q'}(act(g, f)) = v_Q(f): the image of Q under g^-1.
  Place pullback(const GroupElement& g, const Place& place) const;

  // Substitution x -> (a x + b)/(c x + d), y -> u y / (c x + d)^((p+1)/2).
  CurveFunction act(const GroupElement& g, const CurveFunction& f) const;
  Differential act(const GroupElement& g, const Differential& w) const;

  // Measured at construction: act(g, act(h, f)) == act(h g, f).
  bool substitution_is_right_action() const { return right_action_; }

 private:
  const QuadraticField& field() const { return curve_.field(); }
  void enumerate();
  bool measure_convention() const;

  const Curve& curve_;
  std::uint32_t p_;
  std::vector<GroupElement> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  bool right_action_ = true;
};

}  // namespace canonrep
