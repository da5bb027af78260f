#include "canonrep/rep.hpp"

#include <deque>

#include "canonrep/laurent.hpp"

namespace canonrep {

MatrixRep::MatrixRep(const AutGroup* group, std::string name,
                     std::vector<GroupElement> generators, std::vector<Matrix> images)
    : group_(group),
      name_(std::move(name)),
      generators_(std::move(generators)),
      images_(std::move(images)),
      cache_(std::make_shared<Cache>()) {
  if (generators_.size() != images_.size() || images_.empty()) {
    throw std::invalid_argument("representation needs one image per generator");
  }
  dim_ = images_.front().rows();
  for (const Matrix& m : images_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw std::invalid_argument("generator images have inconsistent shapes");
    }
  }
}

const QuadraticField* MatrixRep::field() const { return images_.front().field(); }

void MatrixRep::build() const {
  std::call_once(cache_->once, [this] {
    auto& matrices = cache_->matrices;
    ClosureReport& report = cache_->report;
    const GroupElement e = group_->identity();
    matrices.emplace(group_->key(e), Matrix::identity(field(), dim_));
    std::deque<GroupElement> queue{e};
    while (!queue.empty()) {
      const GroupElement x = queue.front();
      queue.pop_front();
      const Matrix rx = matrices.at(group_->key(x));
      for (std::size_t k = 0; k < generators_.size(); ++k) {
        const GroupElement y = group_->mul(x, generators_[k]);
        Matrix ry = rx * images_[k];
        auto [it, inserted] = matrices.emplace(group_->key(y), std::move(ry));
        if (inserted) {
          queue.push_back(y);
        } else if (report.homomorphism && !(it->second == rx * images_[k])) {
          report.homomorphism = false;
          report.first_failure = name_ + ": rho(x s) != rho(x) rho(s) for x = " +
                                 x.to_string() + ", s = " + generators_[k].to_string();
        }
      }
    }
    report.reached = matrices.size();
  });
}

const Matrix& MatrixRep::operator()(const GroupElement& g) const {
  build();
  auto it = cache_->matrices.find(group_->key(g));
  if (it == cache_->matrices.end()) {
    throw std::out_of_range(name_ + ": element outside the generated subgroup: " +
                            g.to_string());
  }
  return it->second;
}

bool MatrixRep::contains(const GroupElement& g) const {
  build();
  return cache_->matrices.contains(group_->key(g));
}

const ClosureReport& MatrixRep::closure() const {
  build();
  return cache_->report;
}

Matrix rep_from_substitution(const AutGroup& group, const Matrix& substitution) {
  return group.substitution_is_right_action() ? substitution.inverse() : substitution;
}

Matrix canonical_substitution_matrix(const AutGroup& group, const GroupElement& g) {
  const Curve& curve = group.curve();
  const int n = curve.genus();
  std::vector<Vec> columns;
  for (int i = 0; i < n; ++i) {
    const Differential image = group.act(g, holomorphic_basis_form(curve, i));
    auto coords = holomorphic_coordinates(image);
    if (!coords) {
      throw ExpansionFailure("image of x^" + std::to_string(i) + " dx / y under " +
                             g.to_string() + " is not a global form");
    }
    columns.push_back(std::move(*coords));
  }
  return Matrix::from_columns(curve.field_ptr(), n, columns);
}

MatrixRep canonical_rep(const AutGroup& group) {
  std::vector<GroupElement> gens = group.generators();
  std::vector<Matrix> images;
  for (const GroupElement& g : gens) {
    images.push_back(rep_from_substitution(group, canonical_substitution_matrix(group, g)));
  }
  return MatrixRep(&group, "H0(Omega1)", std::move(gens), std::move(images));
}

Matrix sym_power_matrix(const QuadraticField* field, int m, std::int64_t a, std::int64_t b,
                        std::int64_t c, std::int64_t d) {
  // Dehomogenise at v = 1: u^i v^(m-i) -> (a u + b)^i (c u + d)^(m-i).
  const Poly top(field, {(*field)(b), (*field)(a)});
  const Poly bottom(field, {(*field)(d), (*field)(c)});
  Matrix out(field, m + 1, m + 1);
  for (int i = 0; i <= m; ++i) {
    const Poly image =
        top.pow(static_cast<unsigned>(i)) * bottom.pow(static_cast<unsigned>(m - i));
    for (int k = 0; k <= m; ++k) out(k, i) = image.coeff(k);
  }
  return out;
}

namespace {

struct SlMatrix {
  std::int64_t a, b, c, d;
};

// Generators of SL_2(F_p) whose images under theta generate H.
std::vector<SlMatrix> sl2_generators() { return {{1, 1, 0, 1}, {0, -1, 1, 0}}; }

}  // namespace

MatrixRep sym_power_rep(const AutGroup& group, int m) {
  if (m < 0 || m >= static_cast<int>(group.p())) {
    throw std::invalid_argument("symmetric power out of range: " + std::to_string(m));
  }
  std::vector<GroupElement> gens;
  std::vector<Matrix> images;
  for (const SlMatrix& s : sl2_generators()) {
    gens.push_back(group.theta(s.a, s.b, s.c, s.d));
    images.push_back(rep_from_substitution(
        group, sym_power_matrix(group.curve().field_ptr(), m, s.a, s.b, s.c, s.d)));
  }
  return MatrixRep(&group, "Sym^" + std::to_string(m), std::move(gens), std::move(images));
}

PhiReport check_phi_equivariance(const AutGroup& group) {
  PhiReport report;
  const int m = group.curve().genus() - 1;
  for (const SlMatrix& s : sl2_generators()) {
    const Matrix lhs = canonical_substitution_matrix(group, group.theta(s.a, s.b, s.c, s.d));
    const Matrix rhs = sym_power_matrix(group.curve().field_ptr(), m, s.a, s.b, s.c, s.d);
    if (!(lhs == rhs)) {
      report.pass = false;
      report.counterexample = "[[" + std::to_string(s.a) + "," + std::to_string(s.b) +
                              "],[" + std::to_string(s.c) + "," + std::to_string(s.d) +
                              "]]: " + lhs.to_string() + " vs " + rhs.to_string();
      return report;
    }
  }
  return report;
}

Subspace spin(const std::vector<Vec>& seeds, const std::vector<Matrix>& generators) {
  const int n = generators.front().rows();
  Subspace space(generators.front().field(), n);
  std::deque<Vec> queue;
  for (const Vec& v : seeds) {
    if (space.add(v)) queue.push_back(v);
  }
  while (!queue.empty() && space.dim() < n) {
    const Vec v = queue.front();
    queue.pop_front();
    for (const Matrix& g : generators) {
      Vec w = g * v;
      if (space.add(w)) queue.push_back(std::move(w));
    }
  }
  return space;
}

Subspace spin(const std::vector<Vec>& seeds, const MatrixRep& rep) {
  return spin(seeds, rep.images());
}

namespace {

// Deterministic sweep of the enveloping algebra: for each word w_i of length
// <= 3 in the generators, try w_i, w_i + w_(i+1) and w_i + w_(i+1) + w_(i+2).
std::vector<Matrix> algebra_candidates(const std::vector<Matrix>& gens, int budget) {
  std::vector<Matrix> words = gens;
  std::vector<Matrix> layer = gens;
  for (int len = 2; len <= 3; ++len) {
    std::vector<Matrix> next;
    for (const Matrix& w : layer) {
      for (const Matrix& g : gens) next.push_back(w * g);
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<Matrix> out;
  const std::size_t n = words.size();
  for (std::size_t i = 0; i < n && static_cast<int>(out.size()) < budget; ++i) {
    out.push_back(words[i]);
    if (i + 1 < n) out.push_back(words[i] + words[i + 1]);
    if (i + 2 < n) out.push_back(words[i] + words[i + 1] + words[i + 2]);
  }
  if (static_cast<int>(out.size()) > budget) out.resize(static_cast<std::size_t>(budget));
  return out;
}

std::vector<Vec> annihilator(const Subspace& dual, const QuadraticField* field, int n) {
  Matrix rows(field, dual.dim(), n);
  for (int r = 0; r < dual.dim(); ++r) {
    for (int c = 0; c < n; ++c) rows(r, c) = dual.basis()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return nullspace(rows);
}

}  // namespace

IrreducibilityResult is_absolutely_irreducible(const std::vector<Matrix>& generators,
                                               int budget) {
  IrreducibilityResult result;
  const QuadraticField* field = generators.front().field();
  const int n = generators.front().rows();
  std::vector<Matrix> transposed;
  for (const Matrix& g : generators) transposed.push_back(g.transpose());
  const std::vector<Fq> scalars = field->all_elements();
  const Matrix id = Matrix::identity(field, n);

  bool decided = false;
  for (const Matrix& a : algebra_candidates(generators, budget)) {
    if (decided) break;
    ++result.attempts;
    for (const Fq& lambda : scalars) {
      const Matrix theta = a - lambda * id;
      const std::vector<Vec> kernel = nullspace(theta);
      if (kernel.empty()) continue;
      const Subspace s = spin({kernel.front()}, generators);
      if (s.dim() < n) {
        result.irreducible = false;
        result.witness = s.basis();
        decided = true;
        break;
      }
      if (kernel.size() != 1) continue;
      const std::vector<Vec> co_kernel = nullspace(theta.transpose());
      const Subspace t = spin({co_kernel.front()}, transposed);
      if (t.dim() < n) {
        result.irreducible = false;
        result.witness = annihilator(t, field, n);
      } else {
        result.irreducible = true;
      }
      decided = true;
      break;
    }
  }
  if (!decided) {
    throw Inconclusive("Norton test found no usable algebra element in " +
                       std::to_string(result.attempts) + " attempts");
  }
  result.end_dim = commutant_dim(generators);
  result.absolutely_irreducible = result.irreducible && result.end_dim == 1;
  return result;
}

IrreducibilityResult is_absolutely_irreducible(const MatrixRep& rep, int budget) {
  return is_absolutely_irreducible(rep.images(), budget);
}

std::vector<Matrix> hom_space(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("hom_space needs matching generator lists");
  }
  const QuadraticField* field = a.front().field();
  const int da = a.front().rows();
  const int db = b.front().rows();
  const int unknowns = da * db;
  Matrix system(field, static_cast<int>(a.size()) * db * da, unknowns);
  int eq = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Matrix& ma = a[k];
    const Matrix& mb = b[k];
    // (X A - B X)_{rc} = sum_s X_{rs} A_{sc} - sum_t B_{rt} X_{tc}
    for (int r = 0; r < db; ++r) {
      for (int c = 0; c < da; ++c, ++eq) {
        for (int s = 0; s < da; ++s) system(eq, r * da + s) += ma(s, c);
        for (int t = 0; t < db; ++t) system(eq, t * da + c) -= mb(r, t);
      }
    }
  }
  std::vector<Matrix> basis;
  for (const Vec& v : nullspace(system)) {
    Matrix x(field, db, da);
    for (int r = 0; r < db; ++r) {
      for (int c = 0; c < da; ++c) x(r, c) = v[static_cast<std::size_t>(r * da + c)];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Matrix> hom_space(const MatrixRep& a, const MatrixRep& b) {
  if (!(a.generators() == b.generators())) {
    throw std::invalid_argument("hom_space: representations use different generators");
  }
  return hom_space(a.images(), b.images());
}

int commutant_dim(const std::vector<Matrix>& generators) {
  return static_cast<int>(hom_space(generators, generators).size());
}

MatrixRep contragredient(const MatrixRep& rep) {
  std::vector<Matrix> images;
  for (const Matrix& m : rep.images()) images.push_back(m.inverse().transpose());
  return MatrixRep(&rep.group(), rep.name() + "*", rep.generators(), std::move(images));
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
  if (!(a.generators() == b.generators())) {
    throw std::invalid_argument("direct_sum: representations use different generators");
  }
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < a.images().size(); ++k) {
    Matrix m(a.field(), a.dim() + b.dim(), a.dim() + b.dim());
    m.set_block(0, 0, a.images()[k]);
    m.set_block(a.dim(), a.dim(), b.images()[k]);
    images.push_back(std::move(m));
  }
  return MatrixRep(&a.group(), a.name() + "+" + b.name(), a.generators(), std::move(images));
}

Matrix h1o_substitution_matrix(const AutGroup& group, const GroupElement& g) {
  const Curve& curve = group.curve();
  const int n = curve.genus();
  const Matrix gram = gram_matrix(curve);
  const Fq c = gram(0, 0);
  if (!(gram == c * Matrix::identity(curve.field_ptr(), n))) {
    throw InvariantViolation("Gram matrix is not a multiple of the identity");
  }
  const Fq c_inv = c.inverse();
  const Place excluded = group.pullback(g, Place::finite(0));
  Matrix out(curve.field_ptr(), n, n);
  for (int j = 1; j <= n; ++j) {
    const CurveFunction image = group.act(g, h1o_basis_function(curve, j));
    for (int k = 0; k < n; ++k) {
      out(k, j - 1) =
          c_inv * serre_pair(holomorphic_basis_form(curve, k), image, excluded);
    }
  }
  return out;
}

H1OReport check_h1o_geometric(const AutGroup& group) {
  H1OReport report;
  for (const GroupElement& g : group.generators()) {
    const Matrix geometric = h1o_substitution_matrix(group, g);
    const Matrix expected = canonical_substitution_matrix(group, g).inverse().transpose();
    if (!(geometric == expected)) {
      report.matches_contragredient = false;
      report.counterexample = g.to_string() + ": " + geometric.to_string() + " vs " +
                              expected.to_string();
      return report;
    }
  }
  return report;
}

MatrixRep induced_rep(const MatrixRep& v, const std::vector<GroupElement>& cosets) {
  const AutGroup& group = v.group();
  const std::size_t h_order = v.closure().reached;
  if (cosets.size() * h_order != group.order()) {
    throw CosetMismatch(std::to_string(cosets.size()) + " cosets of a subgroup of order " +
                        std::to_string(h_order) + " cannot tile a group of order " +
                        std::to_string(group.order()));
  }
  const int d = v.dim();
  const int n = static_cast<int>(cosets.size());
  std::vector<GroupElement> inverses;
  for (const GroupElement& r : cosets) inverses.push_back(group.inv(r));
  std::vector<GroupElement> gens = group.generators();
  std::vector<Matrix> images;
  for (const GroupElement& g : gens) {
    Matrix m(v.field(), n * d, n * d);
    for (int k = 0; k < n; ++k) {
      const GroupElement gr = group.mul(g, cosets[static_cast<std::size_t>(k)]);
      int hits = 0;
      for (int j = 0; j < n; ++j) {
        const GroupElement h = group.mul(inverses[static_cast<std::size_t>(j)], gr);
        if (!v.contains(h)) continue;
        ++hits;
        m.set_block(j * d, k * d, v(h));
      }
      if (hits != 1) {
        throw CosetMismatch("g r_k lies in " + std::to_string(hits) +
                            " of the given cosets for g = " + g.to_string());
      }
    }
    images.push_back(std::move(m));
  }
  return MatrixRep(&group, "Ind(" + v.name() + ")", std::move(gens), std::move(images));
}

namespace {

bool intertwines(const Matrix& t, const MatrixRep& source, const MatrixRep& target) {
  for (std::size_t k = 0; k < source.images().size(); ++k) {
    if (!(t * source.images()[k] == target.images()[k] * t)) return false;
  }
  return true;
}

}  // namespace

EmbeddingReport check_embedding(const AutGroup& group) {
  EmbeddingReport report;
  const Curve& curve = group.curve();
  const QuadraticField* field = curve.field_ptr();
  const int g = curve.genus();
  const MatrixRep canonical = canonical_rep(group);
  const MatrixRep sym = sym_power_rep(group, g - 1);
  const SubgroupInfo info = group.theta_and_subgroup();
  report.cosets = info.cosets;
  report.alpha_cosets_tile = info.alpha_cosets_tile;
  const MatrixRep induced = induced_rep(sym, info.cosets);
  report.hom_dim = static_cast<int>(hom_space(canonical, induced).size());

  const int n = static_cast<int>(info.cosets.size());
  Matrix frobenius(field, n * g, g);
  for (int k = 0; k < n; ++k) {
    frobenius.set_block(k * g, 0, canonical(info.cosets[static_cast<std::size_t>(k)]).inverse());
  }
  report.frobenius_equivariant = intertwines(frobenius, canonical, induced);
  report.frobenius_injective = frobenius.rank() == g;

  Matrix literal(field, n * g, g);
  const Fq one = field->one();
  for (int j = 0; j < g; ++j) {
    const Fq sign = (j % 2 == 0) ? one : -one;
    if (n == 2) {
      literal(j, j) = one;
      literal(g + j, j) = -one;
    } else {
      literal(j, j) = one;
      literal(g + j, j) = sign * field->i();
      literal(2 * g + j, j) = -one;
      literal(3 * g + j, j) = -(sign * field->i());
    }
  }
  report.literal_equivariant = intertwines(literal, canonical, induced);
  report.literal_injective = literal.rank() == g;
  report.literal_equals_frobenius = literal == frobenius;
  return report;
}

}  // namespace canonrep
