#include "ckgeom/lineal.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace ckgeom {

namespace {

// Squared-norm threshold below which a projection counts as null.
constexpr double kNullTol2 = 1e-18;
// Stray numerator mass tolerated at undefined-ratio slots.
constexpr double kStrayTol = 1e-11;

std::vector<Grade> prefix_weights(const Specification& spec, int count) {
  std::vector<Grade> w(count);
  for (int i = 0; i < count; ++i) w[i] = spec.K_grade(i);
  return w;
}

// Symbolic coefficient (v (.) l) / W with undefined terms dropped (they
// correspond to the arbitrary-coefficient license of degenerate slots).
double sym_coeff(const Eigen::VectorXd& v, const Eigen::VectorXd& l, const Grade& w,
                 const Specification& spec) {
  double sum = 0.0;
  for (int p = 0; p <= spec.n(); ++p) {
    const auto g = spec.K_grade(p).over(w);
    if (!g) continue;
    const int gv = g->value();
    if (gv != 0) sum += gv * v[p] * l[p];
  }
  return sum;
}

// Symbolic weighted norm (1/W) u (.) u; nullopt when u has real mass at a
// slot the weight cannot absorb.
std::optional<double> slot_norm(const Eigen::VectorXd& u, const Grade& w,
                                const Specification& spec) {
  double sum = 0.0;
  for (int p = 0; p <= spec.n(); ++p) {
    const auto g = spec.K_grade(p).over(w);
    if (!g) {
      if (std::abs(u[p]) > 1e-9) return std::nullopt;
      continue;
    }
    const int gv = g->value();
    if (gv != 0) sum += gv * u[p] * u[p];
  }
  return sum;
}

// Discover the natural weight of a vector: the lowest K-grade over its
// support, with the signed mass at that grade.
struct DiscoveredWeight {
  Grade grade;
  double norm;  // positive mass; the grade sign already carries the sign
};

std::optional<DiscoveredWeight> discover_weight(const Eigen::VectorXd& u,
                                                const Specification& spec) {
  int zmin = -1;
  for (int p = 0; p <= spec.n(); ++p) {
    if (std::abs(u[p]) <= 1e-9) continue;
    const int z = spec.K_grade(p).zeros;
    if (zmin < 0 || z < zmin) zmin = z;
  }
  if (zmin < 0) return std::nullopt;
  double nu = 0.0;
  for (int p = 0; p <= spec.n(); ++p) {
    const Grade g = spec.K_grade(p);
    if (g.zeros == zmin) nu += g.sign * u[p] * u[p];
  }
  if (std::abs(nu) <= kNullTol2) return std::nullopt;
  return DiscoveredWeight{Grade{nu > 0 ? 1 : -1, zmin}, std::abs(nu)};
}

Eigen::MatrixXd state_weighted(const Eigen::MatrixXd& v, const std::vector<Grade>& w,
                               const Specification& spec) {
  const int cols = static_cast<int>(v.cols());
  Eigen::MatrixXd m(cols, cols);
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < cols; ++j) {
      double sum = 0.0;
      for (int p = 0; p <= spec.n(); ++p) {
        const double prod = v(p, i) * v(p, j);
        const auto g = spec.K_grade(p).over(w[i]);
        if (!g) {
          if (std::abs(prod) > kStrayTol)
            throw NotABasis("state matrix entry is infinite: vectors do not fit their slots");
          continue;
        }
        const int gv = g->value();
        if (gv != 0) sum += gv * prod;
      }
      m(i, j) = sum;
    }
  }
  return m;
}

}  // namespace

CoordinateMatrix::CoordinateMatrix(Eigen::MatrixXd m, Specification s)
    : v(std::move(m)), spec(std::move(s)) {
  if (v.rows() != spec.ambient_dim())
    throw ShapeError("coordinate matrix needs n+1 rows");
  if (v.cols() < 1 || v.cols() > v.rows())
    throw ShapeError("coordinate matrix needs between 1 and n+1 columns");
  for (int j = 0; j < v.cols(); ++j) {
    if (v.col(j).squaredNorm() == 0.0) throw ShapeError("coordinate matrix column is zero");
  }
}

Eigen::MatrixXd state_matrix(const CoordinateMatrix& vectors) {
  return state_weighted(vectors.v, prefix_weights(vectors.spec, vectors.v.cols()),
                        vectors.spec);
}

double parallelepiped_volume(const CoordinateMatrix& vectors) {
  const double det = state_matrix(vectors).determinant();
  if (det < -1e-12) throw NotABasis("state matrix determinant is negative");
  return std::sqrt(std::max(det, 0.0));
}

Lineal make_lineal_unchecked(Eigen::MatrixXd basis, std::vector<Grade> weights,
                             Specification ambient, std::optional<std::vector<int>> cols) {
  return Lineal(std::move(basis), std::move(weights), std::move(ambient), std::move(cols));
}

Lineal Lineal::from_columns(const Motion& m, const std::vector<int>& indices) {
  const Specification& spec = m.spec();
  if (indices.empty()) throw ShapeError("at least one column index required");
  for (size_t t = 0; t < indices.size(); ++t) {
    if (indices[t] < 0 || indices[t] > spec.n()) throw ShapeError("column index out of range");
    if (t > 0 && indices[t] <= indices[t - 1])
      throw ShapeError("column indices must be strictly increasing");
  }
  Eigen::MatrixXd basis(spec.ambient_dim(), indices.size());
  std::vector<Grade> weights(indices.size());
  for (size_t t = 0; t < indices.size(); ++t) {
    basis.col(t) = m.matrix().col(indices[t]);
    weights[t] = spec.K_grade(indices[t]);
  }
  return make_lineal_unchecked(std::move(basis), std::move(weights), spec, indices);
}

std::vector<Characteristic> Lineal::derived_spec() const {
  std::vector<Characteristic> ks;
  for (size_t p = 1; p < weights_.size(); ++p) {
    const auto g = weights_[p].over(weights_[p - 1]);
    if (!g) throw DomainError("derived specification undefined for this slot ordering");
    ks.push_back(g->value());
  }
  return ks;
}

namespace {

struct CanonicalResult {
  Eigen::MatrixXd basis;
  std::vector<Grade> weights;
};

// The unique-basis engine. Feeds the ambient coordinate vectors through the
// span projector, orthogonalizes against the accepted set and places each
// survivor in a slot. With expected weights the slot search is the
// first-free-positive rule; otherwise slots are discovered in sweep order.
CanonicalResult canonicalize_span(const Eigen::MatrixXd& span, const Specification& spec,
                                  const std::vector<Grade>* expected) {
  const int dim = spec.ambient_dim();
  if (span.rows() != dim) throw ShapeError("basis matrix needs n+1 rows");

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(span, Eigen::ComputeThinU);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  int rank = 0;
  for (int t = 0; t < svd.singularValues().size(); ++t) {
    if (svd.singularValues()(t) > 1e-10 * std::max(smax, 1.0)) ++rank;
  }
  if (rank == 0) throw DegenerateLineal("spanning set is empty");
  const Eigen::MatrixXd q = svd.matrixU().leftCols(rank);

  const int want = expected ? static_cast<int>(expected->size()) : rank;
  if (expected && want != rank)
    throw DegenerateLineal("basis rank does not match the lineal dimension");

  std::vector<Eigen::VectorXd> accepted(want);
  std::vector<Grade> weights(want);
  std::vector<bool> filled(want, false);
  int placed = 0;

  for (int p = 0; p < dim && placed < want; ++p) {
    // Projection of e_p onto the span (the span projector is basis-free,
    // which is what makes the output unique).
    Eigen::VectorXd u = q * q.row(p).transpose();
    if (u.squaredNorm() <= kNullTol2) continue;
    for (int t = 0; t < want; ++t) {
      if (!filled[t]) continue;
      u -= sym_coeff(u, accepted[t], weights[t], spec) * accepted[t];
    }
    if (u.squaredNorm() <= kNullTol2) continue;

    if (expected) {
      for (int slot = 0; slot < want; ++slot) {
        if (filled[slot]) continue;
        const auto norm = slot_norm(u, (*expected)[slot], spec);
        if (!norm || *norm <= kNullTol2) continue;
        accepted[slot] = canonical_sign(u / std::sqrt(*norm));
        weights[slot] = (*expected)[slot];
        filled[slot] = true;
        ++placed;
        break;
      }
    } else {
      const auto disc = discover_weight(u, spec);
      if (!disc) continue;
      accepted[placed] = canonical_sign(u / std::sqrt(disc->norm));
      weights[placed] = disc->grade;
      filled[placed] = true;
      ++placed;
    }
  }

  if (placed != want)
    throw DegenerateLineal("unique-basis search could not fill every slot");

  CanonicalResult out;
  out.basis.resize(dim, want);
  for (int t = 0; t < want; ++t) out.basis.col(t) = accepted[t];
  out.weights = std::move(weights);
  return out;
}

}  // namespace

Lineal Lineal::from_basis(const Eigen::MatrixXd& basis, const Specification& spec) {
  CanonicalResult r = canonicalize_span(basis, spec, nullptr);
  return make_lineal_unchecked(std::move(r.basis), std::move(r.weights), spec, std::nullopt);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> project(const Eigen::VectorXd& v,
                                                    const Lineal& l) {
  const Specification& spec = l.ambient();
  if (v.size() != spec.ambient_dim()) throw ShapeError("vector length mismatch");
  Eigen::VectorXd on = Eigen::VectorXd::Zero(v.size());
  for (int j = 0; j <= l.dim(); ++j) {
    const int w = l.weights()[j].value();
    if (w == 0) continue;  // arbitrary coefficient; 0 is a valid choice
    on += (dot(v, l.basis().col(j), spec) / w) * l.basis().col(j);
  }
  return {on, v - on};
}

Lineal change_basis(const Lineal& l, const Eigen::MatrixXd& interior) {
  const int cols = l.dim() + 1;
  if (interior.rows() != cols || interior.cols() != cols)
    throw ShapeError("interior motion must be (m+1)x(m+1)");
  // Orthogonality of the interior map under the derived weights (the leading
  // weight cancels out of every ratio).
  double worst = 0.0;
  for (int i = 0; i < cols; ++i) {
    for (int j = i; j < cols; ++j) {
      double sum = 0.0;
      for (int p = 0; p < cols; ++p) {
        const double prod = interior(p, i) * interior(p, j);
        const auto g = l.weights()[p].over(l.weights()[i]);
        if (!g) {
          sum += std::abs(prod);
          continue;
        }
        if (g->value() != 0) sum += g->value() * prod;
      }
      worst = std::max(worst, std::abs(sum - (i == j ? 1.0 : 0.0)));
    }
  }
  if (worst > 1e-9)
    throw NotOrthogonal("interior map is not orthogonal under the lineal's specification");
  return make_lineal_unchecked(l.basis() * interior, l.weights(), l.ambient(), std::nullopt);
}

Lineal canonical_basis(const Lineal& l) {
  CanonicalResult r = canonicalize_span(l.basis(), l.ambient(), &l.weights());
  return make_lineal_unchecked(std::move(r.basis), std::move(r.weights), l.ambient(),
                               l.column_indices());
}

Lineal orthogonal_completion(const Lineal& l) {
  const Specification& spec = l.ambient();
  const int dim = spec.ambient_dim();
  const Lineal lc = canonical_basis(l);
  const int have = lc.dim() + 1;
  const int need = dim - have;
  if (need <= 0) throw DegenerateLineal("lineal already spans the whole space");

  std::vector<Eigen::VectorXd> accepted;
  std::vector<Grade> weights;
  for (int t = 0; t < have; ++t) {
    accepted.push_back(lc.basis().col(t));
    weights.push_back(lc.weights()[t]);
  }
  std::vector<Eigen::VectorXd> extra;
  std::vector<Grade> extra_w;

  for (int p = 0; p < dim && static_cast<int>(extra.size()) < need; ++p) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(dim);
    u[p] = 1.0;
    for (size_t t = 0; t < accepted.size(); ++t)
      u -= sym_coeff(u, accepted[t], weights[t], spec) * accepted[t];
    if (u.squaredNorm() <= kNullTol2) continue;
    const auto disc = discover_weight(u, spec);
    if (!disc) continue;
    const Eigen::VectorXd v = canonical_sign(u / std::sqrt(disc->norm));
    accepted.push_back(v);
    weights.push_back(disc->grade);
    extra.push_back(v);
    extra_w.push_back(disc->grade);
  }
  if (static_cast<int>(extra.size()) != need)
    throw DegenerateLineal("orthogonal completion could not be constructed");

  Eigen::MatrixXd basis(dim, need);
  for (int t = 0; t < need; ++t) basis.col(t) = extra[t];
  return make_lineal_unchecked(std::move(basis), std::move(extra_w), spec, std::nullopt);
}

Lineal transformed(const Motion& m, const Lineal& l) {
  if (!(m.spec() == l.ambient())) throw ShapeError("motion and lineal specs differ");
  return make_lineal_unchecked(m.matrix() * l.basis(), l.weights(), l.ambient(), std::nullopt);
}

namespace {

// Projection with symbolic coefficients: unlike the public project(), the
// components held in zero-weight slots are kept (divisibility cancellation),
// which is what the measure construction needs in degenerate specs.
Eigen::VectorXd project_symbolic(const Eigen::VectorXd& v, const Lineal& l) {
  Eigen::VectorXd on = Eigen::VectorXd::Zero(v.size());
  for (int j = 0; j <= l.dim(); ++j)
    on += sym_coeff(v, l.basis().col(j), l.weights()[j], l.ambient()) * l.basis().col(j);
  return on;
}

}  // namespace

std::pair<double, double> measure_determinants(const Lineal& x, const Lineal& y) {
  if (!(x.ambient() == y.ambient())) throw ShapeError("lineals live in different spaces");
  if (x.dim() > y.dim())
    throw DomainError("measure_between needs dim X <= dim Y (swap the arguments)");
  const Specification& spec = x.ambient();
  const int n = spec.n();

  const Lineal xc = canonical_basis(x);
  const Lineal yc = canonical_basis(y);
  const int p = xc.dim(), q = yc.dim();

  Eigen::MatrixXd x_on(spec.ambient_dim(), p + 1);
  Eigen::MatrixXd x_perp(spec.ambient_dim(), p + 1);
  for (int i = 0; i <= p; ++i) {
    x_on.col(i) = project_symbolic(xc.basis().col(i), yc);
    x_perp.col(i) = xc.basis().col(i) - x_on.col(i);
  }

  double det_on = 0.0, det_perp = 0.0;
  try {
    det_on = state_weighted(x_on, xc.weights(), spec).determinant();
    if (n - q >= p + 1) {
      det_perp = state_weighted(x_perp, xc.weights(), spec).determinant();
    } else if (q == n) {
      det_perp = 0.0;  // Y is the whole space; X lies inside it
    } else {
      // The completion is too small to host X; project it onto X instead.
      const Lineal yp = orthogonal_completion(yc);
      Eigen::MatrixXd z(spec.ambient_dim(), yp.dim() + 1);
      for (int t = 0; t <= yp.dim(); ++t) z.col(t) = project_symbolic(yp.basis().col(t), xc);
      det_perp = state_weighted(z, yp.weights(), spec).determinant();
    }
  } catch (const NotABasis& e) {
    throw MeasureUndefined(std::string("projected state matrix is not finite: ") + e.what());
  }
  return {det_on, det_perp};
}

std::pair<Measure, Measure> measure_between(const Lineal& x, const Lineal& y) {
  const auto [det_on, det_perp] = measure_determinants(x, y);

  const double tol = 1e-9;
  const double dp = det_on, ds = det_perp;
  const double sp = std::sqrt(std::max(dp, 0.0));
  const double ss = std::sqrt(std::max(ds, 0.0));

  if (std::abs(dp + ds - 1.0) <= tol) {
    return {Measure::measurable(std::atan2(ss, sp), 1),
            Measure::measurable(std::atan2(sp, ss), 1)};
  }
  if (std::abs(dp - 1.0) <= tol) {
    return {Measure::measurable(ss, 0),
            Measure{ExtendedReal::infinity(1), 0, MeasureClass::limit}};
  }
  if (std::abs(ds - 1.0) <= tol) {
    return {Measure{ExtendedReal::infinity(1), 0, MeasureClass::limit},
            Measure::measurable(sp, 0)};
  }
  if (std::abs(dp - ds - 1.0) <= tol) {
    const double ratio = std::min(ss / sp, 1.0 - 1e-16);
    return {Measure::measurable(std::atanh(ratio), -1),
            Measure{ExtendedReal::undefined(), -1, MeasureClass::immeasurable}};
  }
  if (std::abs(ds - dp - 1.0) <= tol) {
    const double ratio = std::min(sp / ss, 1.0 - 1e-16);
    return {Measure{ExtendedReal::undefined(), -1, MeasureClass::immeasurable},
            Measure::measurable(std::atanh(ratio), -1)};
  }
  if (std::abs(dp - ds) <= tol) {
    return {Measure{ExtendedReal::infinity(1), -1, MeasureClass::limit},
            Measure{ExtendedReal::infinity(1), -1, MeasureClass::limit}};
  }
  throw MeasureUndefined("determinants det M' = " + std::to_string(dp) + ", det M'' = " +
                         std::to_string(ds) + " fit no characteristic case");
}

namespace {

// Enumerate barycentric grid points and track the box of the projected base.
void scan_base_box(const Eigen::MatrixXd& vertices, const Specification& spec,
                   int divisions, Eigen::VectorXd& lo, Eigen::VectorXd& hi, bool& any) {
  const int cols = static_cast<int>(vertices.cols());
  std::vector<int> comp(cols, 0);
  comp[0] = divisions;
  while (true) {
    Eigen::VectorXd pbar = Eigen::VectorXd::Zero(vertices.rows());
    for (int t = 0; t < cols; ++t) pbar += (double(comp[t]) / divisions) * vertices.col(t);
    const double s = dot(pbar, pbar, spec);
    if (s > 1e-12) {
      const Eigen::VectorXd b = pbar / std::sqrt(s);
      if (!any) {
        lo = b;
        hi = b;
        any = true;
      } else {
        lo = lo.cwiseMin(b);
        hi = hi.cwiseMax(b);
      }
    }
    // next composition of `divisions` into cols nonnegative parts
    int t = cols - 2;
    while (t >= 0 && comp[t] == 0) --t;
    if (t < 0) break;
    int rest = 0;
    for (int u = t + 1; u < cols; ++u) {
      rest += comp[u];
      comp[u] = 0;
    }
    comp[t] -= 1;
    comp[t + 1] = rest + 1;
  }
}

}  // namespace

ConeVolume cone_volume(const Eigen::MatrixXd& vertices, const Specification& spec,
                       std::uint64_t samples, std::uint64_t seed) {
  const int dim = spec.ambient_dim();
  if (vertices.rows() != dim) throw ShapeError("vertices need n+1 coordinates");
  const int cols = static_cast<int>(vertices.cols());
  if (cols < 1) throw DegenerateFigure("no vertices");
  if (cols > dim) throw DegenerateFigure("a simplex figure has at most n+1 vertices");
  if (samples == 0) throw DomainError("sample count must be positive");
  for (int j = 0; j < cols; ++j) {
    const double s = dot(vertices.col(j), vertices.col(j), spec);
    if (std::abs(s - 1.0) > 1e-9)
      throw DegenerateFigure("vertex " + std::to_string(j) + " is not on the space sphere");
  }

  ConeVolume out;
  out.samples = samples;
  if (cols < dim) return out;  // flat figure: zero (n+1)-volume

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(vertices);
  if (std::abs(lu.determinant()) <= 1e-12) return out;  // zero-content figure

  // Bounding box of the solid cone. For all-elliptic specs the sphere is the
  // Euclidean unit sphere and [-1, 1] per axis is exact; otherwise the
  // projected base is scanned on a barycentric grid and padded.
  Eigen::VectorXd lo(dim), hi(dim);
  bool pure_elliptic = true;
  for (int i = 1; i <= spec.n(); ++i) pure_elliptic = pure_elliptic && spec.k(i) == 1;
  if (pure_elliptic) {
    lo.setConstant(-1.0);
    hi.setConstant(1.0);
  } else {
    bool any = false;
    scan_base_box(vertices, spec, 16, lo, hi, any);
    if (!any) throw DegenerateFigure("figure base does not meet the space sphere");
    const Eigen::VectorXd pad = 0.25 * (hi - lo).cwiseMax(1e-6);
    lo = lo.cwiseMin(Eigen::VectorXd::Zero(dim)) - pad;
    hi = hi.cwiseMax(Eigen::VectorXd::Zero(dim)) + pad;
  }

  double box_volume = 1.0;
  for (int a = 0; a < dim; ++a) box_volume *= hi[a] - lo[a];

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uint64_t hits = 0;
  Eigen::VectorXd z(dim);
  for (std::uint64_t t = 0; t < samples; ++t) {
    for (int a = 0; a < dim; ++a) z[a] = lo[a] + (hi[a] - lo[a]) * unit(rng);
    const double s = dot(z, z, spec);
    if (s <= 0.0 || s > 1.0) continue;
    const Eigen::VectorXd w = lu.solve(z);
    bool inside = true;
    for (int a = 0; a < dim; ++a) {
      if (w[a] < -1e-12) {
        inside = false;
        break;
      }
    }
    if (inside) ++hits;
  }

  const double p = double(hits) / double(samples);
  out.value = dim * box_volume * p;
  out.std_error = dim * box_volume * std::sqrt(p * (1.0 - p) / double(samples));
  return out;
}

}  // namespace ckgeom
