#ifndef CKGEOM_MOTION_HPP
#define CKGEOM_MOTION_HPP

#include <Eigen/Dense>
#include <vector>

#include "ckgeom/space.hpp"

namespace ckgeom {

/// A motion of B^n: a generalized orthogonal (n+1)x(n+1) matrix acting on
/// homogeneous coordinates. Instances are immutable.
class Motion {
 public:
  static Motion identity(const Specification& spec);

  /// Wrap a raw matrix, validating generalized orthogonality (upper and
  /// lower, 1e-9) and |det| = 1. Throws NotOrthogonal.
  static Motion from_matrix(Eigen::MatrixXd m, const Specification& spec);

  const Eigen::MatrixXd& matrix() const { return m_; }
  const Specification& spec() const { return spec_; }

 private:
  friend Motion make_motion_unchecked(Eigen::MatrixXd, const Specification&);
  Motion(Eigen::MatrixXd m, Specification spec) : m_(std::move(m)), spec_(std::move(spec)) {}
  Eigen::MatrixXd m_;
  Specification spec_;
};

/// Main rotation R_i: the 2x2 generalized rotation block at rows/cols
/// (i-1, i) with characteristic k_i, scale r_i folded into the argument.
Motion main_rotation(int i, double phi, const Specification& spec);

/// General rotation R_ij, 0 <= i < j <= n, with characteristic
/// K_j/K_i = k_{i+1}...k_j. Adjacent pairs reduce to main rotations.
Motion rotation_ij(int i, int j, double phi, const Specification& spec);

/// Translation T_i = R_{0i}.
Motion translation(int i, double phi, const Specification& spec);

/// Matrix action on a point. The image is kept as produced (no sign
/// canonicalization) so the form-invariance of (.) is preserved verbatim.
Point apply(const Motion& m, const Point& p);
Eigen::VectorXd apply_raw(const Motion& m, const Eigen::VectorXd& v);

Motion compose(const Motion& a, const Motion& b);

/// Inverse through the weighted-transpose rule, with the block formula
/// [[A^-1, O], [-C^-1 B A^-1, C^-1]] applied recursively around every zero
/// characteristic.
Motion inverse(const Motion& m);

enum class RotationKind { elliptic, parabolic, hyperbolic };

inline const char* to_string(RotationKind k) {
  switch (k) {
    case RotationKind::elliptic:
      return "elliptic";
    case RotationKind::parabolic:
      return "parabolic";
    default:
      return "hyperbolic";
  }
}

struct RotationStep {
  int i = 0;
  int j = 0;
  double phi = 0.0;
  RotationKind kind = RotationKind::elliptic;
};

struct Reflection {
  std::vector<int> diagonal;  // entries +-1
  bool is_identity() const {
    for (int d : diagonal)
      if (d != 1) return false;
    return true;
  }
};

struct Decomposition {
  Reflection reflection;
  std::vector<RotationStep> steps;
};

/// Factor a motion into a reflection E and rotations so that
/// M = E * R(steps[0]) * R(steps[1]) * ... Row entries are eliminated from
/// the last row up, category 1 first, then -1, then 0.
Decomposition decompose(const Motion& m);

Motion reconstruct(const Decomposition& d, const Specification& spec);

/// True iff the reflection part of the decomposition is the identity.
bool is_proper(const Motion& m);

/// Max absolute violation of the upper (column) orthogonality conditions;
/// infinite-weight slots contribute their stray mass directly.
double upper_orthogonality_residual(const Eigen::MatrixXd& m, const Specification& spec);

/// Dual residual over rows.
double lower_orthogonality_residual(const Eigen::MatrixXd& m, const Specification& spec);

bool is_generalized_orthogonal(const Eigen::MatrixXd& m, const Specification& spec,
                               double tol = 1e-9);

}  // namespace ckgeom

#endif  // CKGEOM_MOTION_HPP
