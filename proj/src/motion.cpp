#include "ckgeom/motion.hpp"

#include <cmath>
#include <string>

namespace ckgeom {

namespace {

// Absolute threshold below which a matrix element counts as zero during
// decomposition.
constexpr double kZeroTol = 1e-11;

void check_specs(const Specification& a, const Specification& b) {
  if (!(a == b)) throw ShapeError("motions/points have different specifications");
}

}  // namespace

Motion make_motion_unchecked(Eigen::MatrixXd m, const Specification& spec) {
  return Motion(std::move(m), spec);
}

Motion Motion::identity(const Specification& spec) {
  return make_motion_unchecked(Eigen::MatrixXd::Identity(spec.ambient_dim(), spec.ambient_dim()),
                               spec);
}

Motion Motion::from_matrix(Eigen::MatrixXd m, const Specification& spec) {
  if (m.rows() != spec.ambient_dim() || m.cols() != spec.ambient_dim())
    throw ShapeError("motion matrix must be (n+1)x(n+1)");
  if (!is_generalized_orthogonal(m, spec))
    throw NotOrthogonal("matrix is not generalized orthogonal for this specification");
  if (std::abs(std::abs(m.determinant()) - 1.0) > 1e-9)
    throw NotOrthogonal("motion matrix must have |det| = 1");
  return make_motion_unchecked(std::move(m), spec);
}

Motion main_rotation(int i, double phi, const Specification& spec) {
  if (i < 1 || i > spec.n()) throw DomainError("main rotation index out of range");
  const Characteristic k = spec.k(i);
  const double arg = phi / spec.scale(i);
  const RotationBlock b = rotation_block(arg, k);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(spec.ambient_dim(), spec.ambient_dim());
  m(i - 1, i - 1) = b.c00;
  m(i - 1, i) = b.c01;
  m(i, i - 1) = b.c10;
  m(i, i) = b.c11;
  return make_motion_unchecked(std::move(m), spec);
}

Motion rotation_ij(int i, int j, double phi, const Specification& spec) {
  if (i < 0 || j > spec.n() || i >= j) throw DomainError("rotation indices need 0 <= i < j <= n");
  const auto kappa = spec.ratio_grade(i, j);
  if (!kappa) throw DegenerateRotation("rotation characteristic K_j/K_i is undefined");
  const Characteristic k = kappa->value();
  const double scale = (j == i + 1) ? spec.scale(j) : 1.0;
  const RotationBlock b = rotation_block(phi / scale, k);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(spec.ambient_dim(), spec.ambient_dim());
  m(i, i) = b.c00;
  m(i, j) = b.c01;  // -(K_j/K_i) S = -kappa S
  m(j, i) = b.c10;
  m(j, j) = b.c11;
  return make_motion_unchecked(std::move(m), spec);
}

Motion translation(int i, double phi, const Specification& spec) {
  if (i < 1 || i > spec.n()) throw DomainError("translation index out of range");
  return rotation_ij(0, i, phi, spec);
}

Eigen::VectorXd apply_raw(const Motion& m, const Eigen::VectorXd& v) {
  if (v.size() != m.spec().ambient_dim()) throw ShapeError("vector length mismatch");
  return m.matrix() * v;
}

Point apply(const Motion& m, const Point& p) {
  check_specs(m.spec(), p.spec());
  return Point(m.matrix() * p.coords(), m.spec());
}

Motion compose(const Motion& a, const Motion& b) {
  check_specs(a.spec(), b.spec());
  return make_motion_unchecked(a.matrix() * b.matrix(), a.spec());
}

namespace {

// Inverse for a block whose levels are `ks` (ks[t] = k_{t+1} of the block).
Eigen::MatrixXd inverse_block(const Eigen::MatrixXd& x,
                              const std::vector<Characteristic>& ks) {
  const int dim = static_cast<int>(x.rows());
  int first_zero = -1;
  for (size_t t = 0; t < ks.size(); ++t) {
    if (ks[t] == 0) {
      first_zero = static_cast<int>(t);
      break;
    }
  }
  if (first_zero < 0) {
    // All weights are +-1: the weighted transpose x'_{ji} = (K_i/K_j) x_{ij}.
    std::vector<int> K(dim, 1);
    for (int p = 1; p < dim; ++p) K[p] = K[p - 1] * ks[p - 1];
    Eigen::MatrixXd y(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) y(j, i) = (K[i] * K[j]) * x(i, j);
    return y;
  }

  const int m = first_zero + 1;  // leading block covers coordinates 0..m-1
  const Eigen::MatrixXd a = x.topLeftCorner(m, m);
  const Eigen::MatrixXd b = x.bottomLeftCorner(dim - m, m);
  const Eigen::MatrixXd c = x.bottomRightCorner(dim - m, dim - m);

  const std::vector<Characteristic> ka(ks.begin(), ks.begin() + first_zero);
  const std::vector<Characteristic> kc(ks.begin() + first_zero + 1, ks.end());
  const Eigen::MatrixXd ainv = inverse_block(a, ka);
  const Eigen::MatrixXd cinv = inverse_block(c, kc);

  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(dim, dim);
  y.topLeftCorner(m, m) = ainv;
  y.bottomLeftCorner(dim - m, m) = -cinv * b * ainv;
  y.bottomRightCorner(dim - m, dim - m) = cinv;
  return y;
}

}  // namespace

Motion inverse(const Motion& m) {
  return make_motion_unchecked(inverse_block(m.matrix(), m.spec().ks()), m.spec());
}

double upper_orthogonality_residual(const Eigen::MatrixXd& m, const Specification& spec) {
  const int dim = spec.ambient_dim();
  if (m.rows() != dim || m.cols() != dim) throw ShapeError("matrix must be (n+1)x(n+1)");
  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      // (1/K_min) c_i (.) c_j, divisions resolved per grade; stray mass in
      // infinite-weight slots is charged to the residual directly.
      double sum = 0.0;
      for (int p = 0; p < dim; ++p) {
        const double prod = m(p, i) * m(p, j);
        const auto w = spec.ratio_grade(i, p);  // K_p / K_i, i = min(i, j)
        if (!w)
          sum += std::abs(prod);
        else if (w->value() != 0)
          sum += w->value() * prod;
      }
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(sum - target));
    }
  }
  return worst;
}

double lower_orthogonality_residual(const Eigen::MatrixXd& m, const Specification& spec) {
  const int dim = spec.ambient_dim();
  if (m.rows() != dim || m.cols() != dim) throw ShapeError("matrix must be (n+1)x(n+1)");
  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      // K_max sum_p r_ip r_jp / K_p over rows i and j.
      double sum = 0.0;
      for (int p = 0; p < dim; ++p) {
        const double prod = m(i, p) * m(j, p);
        const auto w = spec.ratio_grade(p, j);  // K_j / K_p, j = max(i, j)
        if (!w)
          sum += std::abs(prod);
        else if (w->value() != 0)
          sum += w->value() * prod;
      }
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(sum - target));
    }
  }
  return worst;
}

bool is_generalized_orthogonal(const Eigen::MatrixXd& m, const Specification& spec,
                               double tol) {
  return upper_orthogonality_residual(m, spec) <= tol &&
         lower_orthogonality_residual(m, spec) <= tol;
}

namespace {

struct AppliedRotation {
  int i, j;
  double phi;  // unscaled argument of the applied block
  RotationKind kind;
};

// Right-multiply x by the rotation R_{ij}(phi) with characteristic kappa:
// only columns i and j change.
void apply_right_rotation(Eigen::MatrixXd& x, int i, int j, double phi, Characteristic kappa) {
  const double c = c_fn(phi, kappa);
  const double s = s_fn(phi, kappa);
  const Eigen::VectorXd ci = x.col(i);
  const Eigen::VectorXd cj = x.col(j);
  x.col(i) = ci * c + cj * s;
  x.col(j) = -static_cast<double>(kappa) * ci * s + cj * c;
}

RotationKind kind_of(Characteristic kappa) {
  return kappa == 1   ? RotationKind::elliptic
         : kappa == 0 ? RotationKind::parabolic
                      : RotationKind::hyperbolic;
}

}  // namespace

Decomposition decompose(const Motion& motion) {
  const Specification& spec = motion.spec();
  const int dim = spec.ambient_dim();
  if (!is_generalized_orthogonal(motion.matrix(), spec))
    throw NotOrthogonal("decompose: input violates the orthogonality invariants");

  Eigen::MatrixXd x = motion.matrix();
  std::vector<AppliedRotation> applied;

  auto eliminate_elliptic = [&](int row, int i, int j) {
    // Zero x(row, i) against x(row, j); the pair has characteristic 1.
    const double a = x(row, i);
    const double d = x(row, j);
    if (std::abs(a) <= kZeroTol) return;
    const double phi = std::atan2(-a, d);
    apply_right_rotation(x, i, j, phi, 1);
    applied.push_back({i, j, phi, RotationKind::elliptic});
  };

  for (int row = dim - 1; row >= 1; --row) {
    std::vector<int> cat1, catm1, cat0;
    for (int i = 0; i < row; ++i) {
      switch (spec.ratio_grade(i, row)->value()) {
        case 1:
          cat1.push_back(i);
          break;
        case -1:
          catm1.push_back(i);
          break;
        default:
          cat0.push_back(i);
          break;
      }
    }

    for (int i : cat1) eliminate_elliptic(row, i, row);

    // Category -1 entries collapse left-to-right into the last one, then one
    // hyperbolic rotation against the diagonal removes the survivor.
    for (size_t t = 0; t + 1 < catm1.size(); ++t)
      eliminate_elliptic(row, catm1[t], catm1[t + 1]);
    if (!catm1.empty()) {
      const int p = catm1.back();
      const double a = x(row, p);
      const double d = x(row, row);
      if (std::abs(a) > kZeroTol) {
        if (std::abs(a) >= std::abs(d))
          throw NotOrthogonal("decompose: hyperbolic elimination impossible (row not normalized)");
        const double phi = std::atanh(-a / d);
        apply_right_rotation(x, p, row, phi, -1);
        applied.push_back({p, row, phi, RotationKind::hyperbolic});
      }
    }

    for (int i : cat0) {
      const double a = x(row, i);
      const double d = x(row, row);
      if (std::abs(a) <= kZeroTol) continue;
      const double phi = -a / d;
      apply_right_rotation(x, i, row, phi, 0);
      applied.push_back({i, row, phi, RotationKind::parabolic});
    }
  }

  Reflection e;
  e.diagonal.resize(dim);
  double residual = 0.0;
  for (int i = 0; i < dim; ++i) {
    e.diagonal[i] = x(i, i) >= 0.0 ? 1 : -1;
    for (int j = 0; j < dim; ++j) {
      const double want = (i == j) ? e.diagonal[i] : 0.0;
      residual = std::max(residual, std::abs(x(i, j) - want));
    }
  }
  if (residual > 1e-6)
    throw NotOrthogonal("decompose: did not reduce to a reflection (residual " +
                        std::to_string(residual) + ")");

  // x * R(applied...) = E, hence M = E * R(applied_q)^-1 ... R(applied_1)^-1.
  Decomposition out;
  out.reflection = std::move(e);
  out.steps.reserve(applied.size());
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
    const double scale = (it->j == it->i + 1) ? spec.scale(it->j) : 1.0;
    out.steps.push_back({it->i, it->j, -it->phi * scale, it->kind});
  }
  return out;
}

Motion reconstruct(const Decomposition& d, const Specification& spec) {
  const int dim = spec.ambient_dim();
  if (static_cast<int>(d.reflection.diagonal.size()) != dim)
    throw ShapeError("reflection size mismatch");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = d.reflection.diagonal[i];
  Motion out = make_motion_unchecked(std::move(m), spec);
  for (const RotationStep& s : d.steps) out = compose(out, rotation_ij(s.i, s.j, s.phi, spec));
  return out;
}

bool is_proper(const Motion& m) { return decompose(m).reflection.is_identity(); }

}  // namespace ckgeom
