#include "canonrep/derham.hpp"

#include <sstream>

#include "canonrep/laurent.hpp"

namespace canonrep {

Cover Cover::standard() { return Cover{{Place::finite(0), Place::infinity()}}; }
Cover Cover::shifted() { return Cover{{Place::finite(1), Place::infinity()}}; }
Cover Cover::triple() {
  return Cover{{Place::finite(0), Place::infinity(), Place::finite(1)}};
}

std::string Cover::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < excluded.size(); ++k) {
    if (k > 0) out += ", ";
    out += "X-" + excluded[k].name();
  }
  return out + "}";
}

CurveFunction HyperCocycle::f(int j, int k) const {
  if (j < k) return overlaps.at({j, k});
  return -overlaps.at({k, j});
}

namespace {

void require_same_cover(const HyperCocycle& a, const HyperCocycle& b) {
  if (!(a.cover == b.cover)) {
    throw std::invalid_argument("cocycles live on different covers: " + a.cover.to_string() +
                                " and " + b.cover.to_string());
  }
}

}  // namespace

HyperCocycle operator+(const HyperCocycle& a, const HyperCocycle& b) {
  require_same_cover(a, b);
  HyperCocycle out = a;
  for (std::size_t k = 0; k < out.forms.size(); ++k) out.forms[k] += b.forms[k];
  for (auto& [key, f] : out.overlaps) f += b.overlaps.at(key);
  return out;
}

HyperCocycle operator-(const HyperCocycle& a, const HyperCocycle& b) {
  return a + (-a.forms.front().curve().field().one()) * b;
}

HyperCocycle operator*(const Fq& s, const HyperCocycle& a) {
  HyperCocycle out = a;
  for (Differential& w : out.forms) w = s * w;
  for (auto& [key, f] : out.overlaps) f = s * f;
  return out;
}

bool operator==(const HyperCocycle& a, const HyperCocycle& b) {
  return a.cover == b.cover && a.forms == b.forms && a.overlaps == b.overlaps;
}

HyperCocycle two_open_cocycle(Cover cover, Differential w1, Differential w2,
                              CurveFunction f12) {
  HyperCocycle c;
  c.cover = std::move(cover);
  c.forms = {std::move(w1), std::move(w2)};
  c.overlaps.emplace(std::make_pair(0, 1), std::move(f12));
  return c;
}

HyperCocycle coboundary(const Cover& cover, const CurveFunction& f1, const CurveFunction& f2) {
  return two_open_cocycle(cover, differential_d(f1), differential_d(f2), f1 - f2);
}

ValidationResult validate_cocycle(const HyperCocycle& c) {
  ValidationResult result;
  auto fail = [&](std::string what) {
    result.valid = false;
    result.failures.push_back(std::move(what));
  };
  const std::size_t n = c.cover.size();
  if (c.forms.size() != n) fail("expected one form per open");
  for (std::size_t k = 0; k < c.forms.size() && k < n; ++k) {
    if (!is_regular_on(c.forms[k], {c.cover.excluded[k]})) {
      fail("omega_" + std::to_string(k + 1) + " is not regular on X-" +
           c.cover.excluded[k].name());
    }
  }
  for (const auto& [key, f] : c.overlaps) {
    const auto [j, k] = key;
    const std::string name = "f_" + std::to_string(j + 1) + std::to_string(k + 1);
    const std::set<Place> excluded{c.cover.excluded[static_cast<std::size_t>(j)],
                                   c.cover.excluded[static_cast<std::size_t>(k)]};
    if (!is_regular_on(f, excluded)) fail(name + " is not regular on its overlap");
    if (!(differential_d(f) == c.forms[static_cast<std::size_t>(j)] -
                                   c.forms[static_cast<std::size_t>(k)])) {
      fail("d" + name + " != omega_" + std::to_string(j + 1) + " - omega_" +
           std::to_string(k + 1));
    }
  }
  if (n == 3 && c.overlaps.size() == 3) {
    if (!(c.f(1, 2) - c.f(0, 2) + c.f(0, 1)).is_zero()) fail("f_23 - f_13 + f_12 != 0");
  }
  return result;
}

Fq binomial(const QuadraticField& field, int n, int k) {
  if (k < 0 || n < 0 || k > n) return field.zero();
  const int p = static_cast<int>(field.characteristic());
  // Lucas: product of binomials of base-p digits.
  Fq out = field.one();
  while (n > 0 || k > 0) {
    const int nd = n % p;
    const int kd = k % p;
    if (kd > nd) return field.zero();
    Fq num = field.one();
    Fq den = field.one();
    for (int r = 0; r < kd; ++r) {
      num *= field(nd - r);
      den *= field(r + 1);
    }
    out *= num / den;
    n /= p;
    k /= p;
  }
  return out;
}

HyperCocycle tau_cocycle(const Curve& curve, int i) {
  const Differential w = holomorphic_basis_form(curve, i);
  return two_open_cocycle(Cover::standard(), w, w, curve.constant(0));
}

HyperCocycle eta_cocycle(const Curve& curve, int l) {
  const int g = curve.genus();
  const CurveFunction y = curve.y();
  const Differential dy_top = differential_d(y * curve.x_shift_power(0, -g - 1));
  const Differential w1 = (curve.scalar(1 - 2 * l) * curve.x_shift_power(0, 1 - g - l)) * dy_top;
  const Differential w2 = (curve.scalar(-2 * l) * curve.x_shift_power(0, 2 * g - l)) * curve.dy();
  return two_open_cocycle(Cover::standard(), w1, w2, y * curve.x_shift_power(0, -l));
}

HyperCocycle nu_cocycle(const Curve& curve, int i, bool literal_sign) {
  const int g = curve.genus();
  const int p = static_cast<int>(curve.p());
  const QuadraticField& field = curve.field();
  const HyperCocycle eta = eta_cocycle(curve, i);
  const CurveFunction y = curve.y();
  const Differential shifted_top = differential_d(y * curve.x_shift_power(1, -g - 1));
  Differential w3(curve.constant(0));
  CurveFunction sum = curve.constant(0);
  for (int m = 1; m <= p - i; ++m) {
    const Fq b = binomial(field, p - i, m);
    w3 += (b * curve.scalar(1 + 2 * m) * curve.x_shift_power(1, m - 3 * g)) * shifted_top;
    sum += b * (y * curve.x_shift_power(1, m - p));
  }
  const CurveFunction f23 = literal_sign ? sum : -sum;
  HyperCocycle c;
  c.cover = Cover::triple();
  c.forms = {eta.forms[0], eta.forms[1], w3};
  c.overlaps.emplace(std::make_pair(0, 1), eta.f(0, 1));
  c.overlaps.emplace(std::make_pair(0, 2), eta.f(0, 1) + f23);
  c.overlaps.emplace(std::make_pair(1, 2), f23);
  return c;
}

HyperCocycle restrict_to(const HyperCocycle& c, int a, int b) {
  return two_open_cocycle(
      Cover{{c.cover.excluded[static_cast<std::size_t>(a)],
             c.cover.excluded[static_cast<std::size_t>(b)]}},
      c.forms[static_cast<std::size_t>(a)], c.forms[static_cast<std::size_t>(b)], c.f(a, b));
}

namespace {

void require_valid(const HyperCocycle& c, const std::string& name) {
  const ValidationResult r = validate_cocycle(c);
  if (!r.valid) throw ValidationFailure(name + ": " + r.failures.front());
}

}  // namespace

DeRhamBasis build_basis(const Curve& curve) {
  DeRhamBasis basis;
  const int g = curve.genus();
  for (int i = 0; i < g; ++i) {
    basis.tau.push_back(tau_cocycle(curve, i));
    require_valid(basis.tau.back(), "tau_" + std::to_string(i));
  }
  for (int i = 1; i <= g; ++i) {
    basis.eta.push_back(eta_cocycle(curve, i));
    require_valid(basis.eta.back(), "eta_" + std::to_string(i));
    basis.nu.push_back(nu_cocycle(curve, i));
    require_valid(basis.nu.back(), "nu_" + std::to_string(i));
  }
  return basis;
}

NuDiagnostics nu_diagnostics(const Curve& curve, int i, int series_order) {
  NuDiagnostics d;
  const HyperCocycle nu = nu_cocycle(curve, i);
  d.valid = validate_cocycle(nu).valid;
  const ValidationResult literal = validate_cocycle(nu_cocycle(curve, i, true));
  d.literal_sign_valid = literal.valid;
  if (!literal.valid) d.literal_sign_failure = literal.failures.front();
  const CurveFunction f13 = nu.f(0, 2);
  d.f13_valuation_at_infinity =
      f13.is_zero() ? series_order
                    : laurent_at(f13, Place::infinity(), series_order).valuation();
  d.projects_to_eta = restrict_to(nu, 0, 1) == eta_cocycle(curve, i);
  const int p = static_cast<int>(curve.p());
  const QuadraticField* field = curve.field_ptr();
  const RationalFunction closed(
      Poly::monomial(field->one(), p - i) - Poly::constant(field->one()),
      Poly::linear_root(field->one()).pow(static_cast<unsigned>(p)));
  const CurveFunction closed_form(&curve, RationalFunction(field), closed);
  d.sum_equals_closed_form = nu.f(2, 1) == closed_form;
  return d;
}

DeRham::DeRham(const AutGroup& group) : group_(group) {
  const Curve& c = group.curve();
  const Matrix gram = gram_matrix(c);
  gram_ = gram(0, 0);
  if (!(gram == gram_ * Matrix::identity(c.field_ptr(), c.genus()))) {
    throw InvariantViolation("Gram matrix is not a multiple of the identity: " +
                             gram.to_string());
  }
  basis_ = build_basis(c);
}

HyperCocycle DeRham::substitute(const GroupElement& g, const HyperCocycle& c) const {
  HyperCocycle out;
  for (const Place& q : c.cover.excluded) out.cover.excluded.push_back(group_.pullback(g, q));
  for (const Differential& w : c.forms) out.forms.push_back(group_.act(g, w));
  for (const auto& [key, f] : c.overlaps) out.overlaps.emplace(key, group_.act(g, f));
  return out;
}

HyperCocycle DeRham::to_standard_cover(const HyperCocycle& c) const {
  if (c.cover.size() != 2) {
    throw UnsupportedGenerator("expected a two-open cover, got " + c.cover.to_string());
  }
  if (c.cover == Cover::standard()) return c;
  const Place& q1 = c.cover.excluded[0];
  const Place& q2 = c.cover.excluded[1];
  if (q1.infinite && !q2.infinite) {
    return to_standard_cover(
        two_open_cocycle(Cover{{q2, q1}}, c.forms[1], c.forms[0], c.f(1, 0)));
  }
  if (q1.infinite || !q2.infinite) {
    throw UnsupportedGenerator("cannot refine " + c.cover.to_string() +
                               " to the standard cover");
  }
  // Cover {X - P_t, X - Pinf}: cancel the principal part of f at P_t with a
  // function whose other poles sit at P0 only.
  const Curve& curve = this->curve();
  const QuadraticField& field = curve.field();
  const int g = curve.genus();
  const Fq t(&field, q1.t, 0);
  const CurveFunction& f = c.f(0, 1);
  const auto a_terms = f.a().laurent_terms_at(t);
  const auto b_terms = f.b().laurent_terms_at(t);
  if (!a_terms || !b_terms) {
    throw ResidualClassError("overlap function has poles away from " + q1.name() +
                             " and Pinf");
  }
  const CurveFunction y = curve.y();
  CurveFunction f0q = curve.constant(0);
  for (const auto& [k, a] : *a_terms) {
    if (k < 0) f0q -= a * curve.x_shift_power(q1.t, k);
  }
  for (const auto& [k, b] : *b_terms) {
    if (k >= 0) continue;
    const int order = -k;
    CurveFunction term = y * curve.x_shift_power(q1.t, k);
    for (int m = 0; m <= g - order; ++m) {
      term -= (binomial(field, order + m - 1, m) * t.pow(m)) *
              (y * curve.x_shift_power(0, -order - m));
    }
    f0q -= b * term;
  }
  return two_open_cocycle(Cover::standard(), c.forms[0] + differential_d(f0q), c.forms[1],
                          f0q + f);
}

Vec DeRham::class_to_coordinates(const HyperCocycle& input) const {
  const Curve& curve = this->curve();
  const QuadraticField* field = curve.field_ptr();
  const int g = curve.genus();
  HyperCocycle rest = to_standard_cover(input);
  Vec out(static_cast<std::size_t>(2 * g), field->zero());
  const Fq gram_inv = gram_.inverse();
  const CurveFunction f = rest.f(0, 1);
  for (int j = 1; j <= g; ++j) {
    const Fq cj =
        gram_inv * serre_pair(holomorphic_basis_form(curve, j - 1), f, Place::finite(0));
    out[static_cast<std::size_t>(g + j - 1)] = cj;
    if (!cj.is_zero()) rest = rest - cj * basis_.eta[static_cast<std::size_t>(j - 1)];
  }

  const CurveFunction residual = rest.f(0, 1);
  const Fq zero = field->zero();
  const auto a_terms = residual.a().laurent_terms_at(zero);
  const auto b_terms = residual.b().laurent_terms_at(zero);
  if (!a_terms || !b_terms) {
    throw ResidualClassError("overlap function has poles away from P0 and Pinf");
  }
  const CurveFunction y = curve.y();
  CurveFunction f1 = curve.constant(0);
  CurveFunction f2 = curve.constant(0);
  for (const auto& [k, a] : *a_terms) {
    const CurveFunction term = a * curve.x_shift_power(0, k);
    if (k < 0) {
      f1 += term;
    } else {
      f2 -= term;
    }
  }
  for (const auto& [k, b] : *b_terms) {
    const CurveFunction term = b * (y * curve.x_shift_power(0, k));
    if (k >= 0) {
      f2 -= term;
    } else if (-k >= g + 1) {
      f1 += term;
    } else {
      throw ResidualClassError("monomial y x^" + std::to_string(k) +
                               " survives the H^1(O) projection");
    }
  }
  const Differential w1 = rest.forms[0] - differential_d(f1);
  const Differential w2 = rest.forms[1] - differential_d(f2);
  if (!(w1 == w2)) throw ResidualClassError("input is not a hypercocycle");
  const auto coords = holomorphic_coordinates(w1);
  if (!coords) throw ResidualClassError("corrected form is not global");
  for (int i = 0; i < g; ++i) out[static_cast<std::size_t>(i)] = (*coords)[static_cast<std::size_t>(i)];
  return out;
}

Vec DeRham::sigma_eta_via_lift(int i) const {
  const HyperCocycle& nu = basis_.nu[static_cast<std::size_t>(i - 1)];
  // Restriction to (X - P1, X - Pinf); sigma pulls P1 back to P0.
  return class_to_coordinates(substitute(group_.sigma(), restrict_to(nu, 2, 1)));
}

Vec DeRham::sigma_eta_direct(int i) const {
  return class_to_coordinates(
      substitute(group_.sigma(), basis_.eta[static_cast<std::size_t>(i - 1)]));
}

Matrix DeRham::substitution_matrix(const GroupElement& g) const {
  bool known = false;
  for (const GroupElement& s : group_.generators()) known = known || s == g;
  if (!known) throw UnsupportedGenerator("not a fixed generator: " + g.to_string());
  const Curve& curve = this->curve();
  const int n = curve.genus();
  const bool is_sigma = g == group_.sigma();
  std::vector<Vec> columns;
  for (int i = 0; i < n; ++i) {
    const auto coords = holomorphic_coordinates(group_.act(g, holomorphic_basis_form(curve, i)));
    if (!coords) throw ExpansionFailure("translate of a global form is not global");
    Vec col(static_cast<std::size_t>(2 * n), curve.field().zero());
    for (int k = 0; k < n; ++k) col[static_cast<std::size_t>(k)] = (*coords)[static_cast<std::size_t>(k)];
    columns.push_back(std::move(col));
  }
  for (int j = 1; j <= n; ++j) {
    columns.push_back(is_sigma ? sigma_eta_via_lift(j)
                               : class_to_coordinates(substitute(
                                     g, basis_.eta[static_cast<std::size_t>(j - 1)])));
  }
  return Matrix::from_columns(curve.field_ptr(), 2 * n, columns);
}

MatrixRep DeRham::assemble_rep() const {
  std::vector<GroupElement> gens = group_.generators();
  std::vector<Matrix> images;
  for (const GroupElement& g : gens) {
    images.push_back(rep_from_substitution(group_, substitution_matrix(g)));
  }
  return MatrixRep(&group_, "H1dR", std::move(gens), std::move(images));
}

SplittingCertificate splitting_certificate(const MatrixRep& rep) {
  SplittingCertificate cert;
  const QuadraticField* field = rep.field();
  const int g = rep.dim() / 2;
  const int unknowns = g * g;

  // Route 1: A X - X Q = -B for every generator, section = [X; I].
  const std::size_t ngen = rep.images().size();
  Matrix system(field, static_cast<int>(ngen) * g * g, unknowns);
  Vec rhs(static_cast<std::size_t>(static_cast<int>(ngen) * g * g), field->zero());
  int eq = 0;
  for (const Matrix& m : rep.images()) {
    const Matrix a = m.block(0, 0, g, g);
    const Matrix b = m.block(0, g, g, g);
    const Matrix q = m.block(g, g, g, g);
    for (int r = 0; r < g; ++r) {
      for (int c = 0; c < g; ++c, ++eq) {
        for (int s = 0; s < g; ++s) {
          system(eq, s * g + c) += a(r, s);
          system(eq, r * g + s) -= q(s, c);
        }
        rhs[static_cast<std::size_t>(eq)] = -b(r, c);
      }
    }
  }
  if (const auto x = solve(system, rhs)) {
    cert.section_exists = true;
    Matrix s(field, 2 * g, g);
    for (int r = 0; r < g; ++r) {
      for (int c = 0; c < g; ++c) s(r, c) = (*x)[static_cast<std::size_t>(r * g + c)];
    }
    s.set_block(g, 0, Matrix::identity(field, g));
    cert.section = s;
  }

  // Route 2.
  const AutGroup& group = rep.group();
  const Matrix& t = rep(group.torus(group.primitive_root()));
  bool diagonal = true;
  for (int r = 0; r < 2 * g; ++r) {
    for (int c = 0; c < 2 * g; ++c) {
      if (r != c && !t(r, c).is_zero()) diagonal = false;
    }
  }
  cert.eigenspaces_as_expected = diagonal;
  for (int l = 0; l < g && diagonal; ++l) {
    const Fq ev = t(g - l - 1, g - l - 1);
    if (!(ev == t(g + l, g + l))) cert.eigenspaces_as_expected = false;
    for (int m = 0; m < l; ++m) {
      if (t(g + m, g + m) == ev) cert.eigenspaces_as_expected = false;
    }
  }
  const Matrix& sigma = rep(group.sigma());
  Matrix eigen(field, g * g, g);
  Vec eigen_rhs(static_cast<std::size_t>(g * g), field->zero());
  eq = 0;
  for (int l = 0; l < g; ++l) {
    for (int m = 0; m < g; ++m, ++eq) {
      // r_l [sigma tau_(g-l-1)]_(tau_(g-m-1)) + [sigma eta_(l+1)]_(tau_(g-m-1))
      //   - r_m [sigma eta_(l+1)]_(eta_(m+1)) = 0
      eigen(eq, l) += sigma(g - m - 1, g - l - 1);
      eigen(eq, m) -= sigma(g + m, g + l);
      eigen_rhs[static_cast<std::size_t>(eq)] = -sigma(g - m - 1, g + l);
    }
  }
  cert.eigen_system_feasible = solve(eigen, eigen_rhs).has_value();
  cert.routes_agree = cert.section_exists == cert.eigen_system_feasible;
  cert.splits = cert.section_exists;
  return cert;
}

MatrixRep block_diagonal_control(const MatrixRep& rep) {
  const int g = rep.dim() / 2;
  std::vector<Matrix> images;
  for (const Matrix& m : rep.images()) {
    Matrix c = m;
    c.set_block(0, g, Matrix(rep.field(), g, g));
    images.push_back(std::move(c));
  }
  return MatrixRep(&rep.group(), rep.name() + " (block diagonal)", rep.generators(),
                   std::move(images));
}

IndecomposabilityCertificate indecomposability_certificate(const MatrixRep& rep,
                                                           int norton_budget) {
  IndecomposabilityCertificate cert;
  const int g = rep.dim() / 2;
  std::vector<Matrix> sub;
  std::vector<Matrix> quotient;
  for (const Matrix& m : rep.images()) {
    sub.push_back(m.block(0, 0, g, g));
    quotient.push_back(m.block(g, g, g, g));
  }
  cert.sub_absolutely_irreducible =
      is_absolutely_irreducible(sub, norton_budget).absolutely_irreducible;
  cert.quotient_absolutely_irreducible =
      is_absolutely_irreducible(quotient, norton_budget).absolutely_irreducible;
  cert.splits = splitting_certificate(rep).splits;
  cert.indecomposable =
      cert.sub_absolutely_irreducible && cert.quotient_absolutely_irreducible && !cert.splits;
  cert.end_dim = commutant_dim(rep.images());
  cert.nonprojective = rep.dim() % static_cast<int>(rep.group().p()) != 0;
  return cert;
}

RewritingCheck check_rewriting(const DeRham& dr) {
  RewritingCheck check;
  const Curve& curve = dr.curve();
  const int g = curve.genus();
  const int p = static_cast<int>(curve.p());
  for (int j = 1; j <= g; ++j) {
    const Vec coords = dr.class_to_coordinates(eta_cocycle(curve, p - j));
    Vec expected(coords.size(), curve.field().zero());
    expected[static_cast<std::size_t>(j - 1)] = curve.scalar(-2 * j);
    if (!(coords == expected)) check.matches_printed = false;
    check.measured.push_back(coords[static_cast<std::size_t>(j - 1)]);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (k != static_cast<std::size_t>(j - 1) && !coords[k].is_zero()) check.pure_tau = false;
    }
  }
  return check;
}

SigmaCrossCheck check_sigma_expansion(const DeRham& dr) {
  SigmaCrossCheck check;
  const Curve& curve = dr.curve();
  const QuadraticField& field = curve.field();
  const int g = curve.genus();
  const int p = static_cast<int>(curve.p());
  const GroupElement sigma = dr.group().sigma();
  const Matrix m_sigma = dr.substitution_matrix(sigma);
  for (int i = 1; i <= g; ++i) {
    const HyperCocycle image =
        dr.substitute(sigma, restrict_to(dr.basis().nu[static_cast<std::size_t>(i - 1)], 2, 1));
    const Fq prefactor = -(field(i) / field(p - i));
    HyperCocycle expected = field.zero() * image;
    for (int j = 1; j <= p - i; ++j) {
      expected = expected + (prefactor * binomial(field, p - i, j)) * eta_cocycle(curve, p - j);
    }
    if (!(image == expected)) {
      check.cocycle_identity_holds = false;
      check.diffs.push_back("i=" + std::to_string(i) + ": substituted cocycle differs");
    }

    // Printed expansion of sigma eta_(l+1), l = i - 1.
    Vec printed(static_cast<std::size_t>(2 * g), field.zero());
    const int l = i - 1;
    const Fq c0 = -(field(l + 1) / field(p - l - 1));
    for (int k = 1; k <= g; ++k) {
      printed[static_cast<std::size_t>(k - 1)] +=
          c0 * field(-2) * binomial(field, p - l - 1, k) * field(k);
    }
    for (int k = g + 1; k <= p - l - 1; ++k) {
      printed[static_cast<std::size_t>(g + (p - k) - 1)] += c0 * binomial(field, p - l - 1, k);
    }
    const Vec measured = m_sigma.column(g + i - 1);
    if (!(printed == measured)) {
      check.printed_expansion_matches = false;
      std::ostringstream os;
      os << "sigma eta_" << i << ": printed [";
      for (std::size_t k = 0; k < printed.size(); ++k) os << (k ? " " : "") << printed[k];
      os << "] measured [";
      for (std::size_t k = 0; k < measured.size(); ++k) os << (k ? " " : "") << measured[k];
      os << "]";
      check.diffs.push_back(os.str());
    }
    if (!(dr.sigma_eta_via_lift(i) == dr.sigma_eta_direct(i))) check.routes_agree = false;
  }
  return check;
}

}  // namespace canonrep
