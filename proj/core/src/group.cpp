#include "canonrep/group.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace canonrep {

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "([[" << a << "," << b << "],[" << c << "," << d << "]], " << u << ")";
  return os.str();
}

AutGroup::AutGroup(const Curve& curve) : curve_(curve), p_(curve.p()) {
  if (p_ > 31) {
    throw std::invalid_argument("group enumeration is limited to p <= 31, got " +
                                std::to_string(p_));
  }
  enumerate();
  right_action_ = measure_convention();
}

std::uint64_t AutGroup::key(const GroupElement& g) const {
  const std::uint64_t p = p_;
  std::uint64_t k = ((static_cast<std::uint64_t>(g.a) * p + g.b) * p + g.c) * p + g.d;
  return (k * p + g.u.re()) * p + g.u.im();
}

std::size_t AutGroup::index_of(const GroupElement& g) const {
  auto it = index_.find(key(g));
  if (it == index_.end()) throw InvariantViolation("element not in G: " + g.to_string());
  return it->second;
}

GroupElement AutGroup::canonicalize(std::int64_t a, std::int64_t b, std::int64_t c,
                                    std::int64_t d, const Fq& u) const {
  const QuadraticField& f = field();
  std::uint32_t m[4] = {f.reduce(a), f.reduce(b), f.reduce(c), f.reduce(d)};
  const std::uint32_t det = f.reduce(static_cast<std::int64_t>(f.mul_mod(m[0], m[3])) -
                                     static_cast<std::int64_t>(f.mul_mod(m[1], m[2])));
  if (det == 0) throw InvariantViolation("singular matrix");
  if (!(u * u == Fq(&f, det, 0))) {
    throw InvariantViolation("u^2 != det m for u = " + u.to_string());
  }
  std::uint32_t lead = 0;
  for (std::uint32_t e : m) {
    if (e != 0) {
      lead = e;
      break;
    }
  }
  const std::uint32_t lambda = f.inv_mod(lead);
  GroupElement g;
  g.a = f.mul_mod(lambda, m[0]);
  g.b = f.mul_mod(lambda, m[1]);
  g.c = f.mul_mod(lambda, m[2]);
  g.d = f.mul_mod(lambda, m[3]);
  g.u = Fq(&f, f.pow_mod(lambda, (p_ + 1) / 2), 0) * u;
  return g;
}

GroupElement AutGroup::identity() const { return canonicalize(1, 0, 0, 1, field().one()); }

GroupElement AutGroup::mul(const GroupElement& x, const GroupElement& y) const {
  const QuadraticField& f = field();
  auto dot = [&](std::uint32_t p1, std::uint32_t q1, std::uint32_t p2, std::uint32_t q2) {
    return static_cast<std::int64_t>(f.mul_mod(p1, q1)) + f.mul_mod(p2, q2);
  };
  return canonicalize(dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d),
                      dot(x.c, y.a, x.d, y.c), dot(x.c, y.b, x.d, y.d), x.u * y.u);
}

GroupElement AutGroup::inv(const GroupElement& x) const {
  const std::int64_t p = p_;
  const Fq& u = x.u;
  const QuadraticField& f = field();
  // m^-1 = adj(m) / det
  const std::uint32_t dinv = f.inv_mod((u * u).re());
  return canonicalize(f.mul_mod(dinv, x.d), f.mul_mod(dinv, f.reduce(p - x.b)),
                      f.mul_mod(dinv, f.reduce(p - x.c)), f.mul_mod(dinv, x.a),
                      u.inverse());
}

GroupElement AutGroup::pow(const GroupElement& x, long long e) const {
  if (e < 0) return pow(inv(x), -e);
  GroupElement result = identity();
  GroupElement base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::size_t AutGroup::element_order(const GroupElement& x) const {
  const GroupElement e = identity();
  GroupElement y = x;
  std::size_t n = 1;
  while (!(y == e)) {
    y = mul(y, x);
    ++n;
  }
  return n;
}

GroupElement AutGroup::theta(std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t d) const {
  return canonicalize(a, b, c, d, field().one());
}

bool AutGroup::in_h(const GroupElement& g) const {
  const QuadraticField& f = field();
  const Fq det = g.u * g.u;
  for (std::uint32_t lambda = 1; lambda < p_; ++lambda) {
    if (f.mul_mod(f.mul_mod(lambda, lambda), det.re()) != 1) continue;
    if ((Fq(&f, f.pow_mod(lambda, (p_ + 1) / 2), 0) * g.u).is_one()) return true;
  }
  return false;
}

GroupElement AutGroup::sigma() const { return theta(1, 1, 0, 1); }
GroupElement AutGroup::s() const { return theta(0, -1, 1, 0); }
GroupElement AutGroup::torus(std::uint32_t t) const {
  return canonicalize(static_cast<std::int64_t>(t) * t, 0, 0, 1, field()(t));
}
GroupElement AutGroup::alpha() const { return canonicalize(1, 0, 0, 1, -field().one()); }
GroupElement AutGroup::beta() const { return canonicalize(-1, 0, 0, 1, field().i()); }
GroupElement AutGroup::gamma() const {
  return canonicalize(field().nonresidue(), 0, 0, 1, field().delta());
}

std::vector<GroupElement> AutGroup::generators() const {
  std::vector<GroupElement> out;
  for (const GroupElement& g :
       {sigma(), s(), torus(primitive_root()), alpha(), beta(), gamma()}) {
    bool seen = false;
    for (const GroupElement& h : out) seen = seen || h == g;
    if (!seen) out.push_back(g);
  }
  return out;
}

std::vector<GroupElement> AutGroup::h_generators() const { return {sigma(), s()}; }

void AutGroup::enumerate() {
  const QuadraticField& f = field();
  for (std::uint32_t a = 0; a < p_; ++a) {
    for (std::uint32_t b = 0; b < p_; ++b) {
      for (std::uint32_t c = 0; c < p_; ++c) {
        for (std::uint32_t d = 0; d < p_; ++d) {
          const std::uint32_t lead = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
          if (lead != 1) continue;
          const std::int64_t det = static_cast<std::int64_t>(f.mul_mod(a, d)) -
                                   static_cast<std::int64_t>(f.mul_mod(b, c));
          if (f.reduce(det) == 0) continue;
          const Fq root = f.sqrt(f(det)).root;
          for (const Fq& u : {root, -root}) {
            GroupElement g{a, b, c, d, u};
            index_.emplace(key(g), elements_.size());
            elements_.push_back(g);
          }
        }
      }
    }
  }
}

bool AutGroup::measure_convention() const {
  const CurveFunction probe = curve_.x() + curve_.y();
  const GroupElement pairs[][2] = {{sigma(), s()}, {s(), gamma()}, {beta(), sigma()}};
  bool right = true;
  bool left = true;
  for (const auto& pr : pairs) {
    const CurveFunction nested = act(pr[0], act(pr[1], probe));
    right = right && nested == act(mul(pr[1], pr[0]), probe);
    left = left && nested == act(mul(pr[0], pr[1]), probe);
  }
  if (right == left) throw InvariantViolation("substitution action convention is ambiguous");
  return right;
}

SubgroupInfo AutGroup::theta_and_subgroup() const {
  SubgroupInfo info;
  info.group_order = order();
  const QuadraticField& f = field();
  const GroupElement e = identity();
  std::unordered_set<std::uint64_t> h_keys;
  int kernel = 0;
  for (std::uint32_t a = 0; a < p_; ++a) {
    for (std::uint32_t b = 0; b < p_; ++b) {
      for (std::uint32_t c = 0; c < p_; ++c) {
        for (std::uint32_t d = 0; d < p_; ++d) {
          const std::int64_t det = static_cast<std::int64_t>(f.mul_mod(a, d)) -
                                   static_cast<std::int64_t>(f.mul_mod(b, c));
          if (f.reduce(det) != 1) continue;
          const GroupElement g = theta(a, b, c, d);
          if (g == e) ++kernel;
          h_keys.insert(key(g));
        }
      }
    }
  }
  info.h_order = h_keys.size();
  info.kernel_size = kernel;
  info.index = static_cast<int>(info.group_order / info.h_order);
  info.alpha_in_h = h_keys.contains(key(alpha()));

  auto coset_of = [&](const GroupElement& g, const std::vector<GroupElement>& reps) {
    // Right cosets H r: g in H r iff g r^-1 in H.
    int hits = 0;
    int which = -1;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      if (h_keys.contains(key(mul(g, inv(reps[k]))))) {
        ++hits;
        which = static_cast<int>(k);
      }
    }
    return hits == 1 ? which : -1;
  };
  auto tiles = [&](const std::vector<GroupElement>& reps) {
    if (reps.size() * info.h_order != info.group_order) return false;
    for (const GroupElement& g : elements_) {
      if (coset_of(g, reps) < 0) return false;
    }
    return true;
  };

  const GroupElement gen = (p_ % 4 == 1) ? alpha() : beta();
  const int count = (p_ % 4 == 1) ? 2 : 4;
  for (int k = 0; k < count; ++k) info.alpha_cosets.push_back(pow(gen, k));
  info.alpha_cosets_tile = tiles(info.alpha_cosets);
  if (info.alpha_cosets_tile) {
    info.cosets = info.alpha_cosets;
    return info;
  }
  // Greedy: identity, powers of gamma, then everything else.
  std::vector<GroupElement> candidates;
  for (int k = 0; k < info.index; ++k) candidates.push_back(pow(gamma(), k));
  candidates.insert(candidates.end(), elements_.begin(), elements_.end());
  for (const GroupElement& g : candidates) {
    if (static_cast<int>(info.cosets.size()) == info.index) break;
    bool covered = false;
    for (const GroupElement& r : info.cosets) {
      covered = covered || h_keys.contains(key(mul(g, inv(r))));
    }
    if (!covered) info.cosets.push_back(g);
  }
  if (!tiles(info.cosets)) throw InvariantViolation("could not tile G by right H-cosets");
  return info;
}

Place AutGroup::point_image(const GroupElement& g, const Place& place) const {
  const QuadraticField& f = field();
  if (place.infinite) {
    if (g.c == 0) return Place::infinity();
    return Place::finite(f.mul_mod(g.a, f.inv_mod(g.c)));
  }
  const std::uint32_t den = f.reduce(static_cast<std::int64_t>(f.mul_mod(g.c, place.t)) + g.d);
  if (den == 0) return Place::infinity();
  const std::uint32_t num = f.reduce(static_cast<std::int64_t>(f.mul_mod(g.a, place.t)) + g.b);
  return Place::finite(f.mul_mod(num, f.inv_mod(den)));
}

Place AutGroup::pullback(const GroupElement& g, const Place& place) const {
  return point_image(inv(g), place);
}

OrbitInfo AutGroup::orbit_stabilizer(const Place& place) const {
  std::set<Place> orbit;
  OrbitInfo info;
  for (const GroupElement& g : elements_) {
    const Place q = point_image(g, place);
    orbit.insert(q);
    if (q == place) ++info.stabilizer_order;
  }
  info.orbit.assign(orbit.begin(), orbit.end());
  return info;
}

CurveFunction AutGroup::act(const GroupElement& g, const CurveFunction& f) const {
  if (f.is_zero()) return f;
  const QuadraticField* field = curve_.field_ptr();
  const Fq a(field, g.a), b(field, g.b), c(field, g.c), d(field, g.d);
  RationalFunction new_a(field);
  RationalFunction new_b(field);
  if (!f.a().is_zero()) new_a = f.a().compose_mobius(a, b, c, d);
  if (!f.b().is_zero()) {
    const Poly lin(field, {d, c});
    const RationalFunction twist(Poly::constant(g.u),
                                 lin.pow(static_cast<unsigned>((p_ + 1) / 2)));
    new_b = f.b().compose_mobius(a, b, c, d) * twist;
  }
  return CurveFunction(&curve_, std::move(new_a), std::move(new_b));
}

Differential AutGroup::act(const GroupElement& g, const Differential& w) const {
  if (w.is_zero()) return w;
  const Differential dx_image = differential_d(act(g, curve_.x()));
  return act(g, w.coefficient()) * dx_image;
}

}  // namespace canonrep
