#ifndef CKGEOM_GTRIG_HPP
#define CKGEOM_GTRIG_HPP

#include "ckgeom/extended_real.hpp"
#include "ckgeom/errors.hpp"

namespace ckgeom {

/// Rotation characteristic: 1 selects elliptic, 0 parabolic, -1 hyperbolic
/// behaviour of one measure level.
using Characteristic = int;

inline bool is_characteristic(int k) { return k == -1 || k == 0 || k == 1; }

/// Generalized cosine: cos x / 1 / cosh x for k = 1 / 0 / -1.
double c_fn(double x, Characteristic k);

/// Generalized sine: sin x / x / sinh x for k = 1 / 0 / -1.
double s_fn(double x, Characteristic k);

/// Generalized tangent S/C. For k = 1 the zeros of cos are reported as a
/// signed infinity instead of an error: the lineal measure cases treat an
/// infinite angle as a legitimate outcome.
ExtendedReal t_fn(double x, Characteristic k);

/// Principal inverse of C. k = 1 needs |v| <= 1 and returns phi in [0, pi];
/// k = -1 needs v >= 1 and returns phi >= 0. k = 0 is not invertible (C == 1).
double inverse_c(double v, Characteristic k);

/// Principal inverse of S. k = 1 needs |v| <= 1, result in [-pi/2, pi/2];
/// k = 0 is the identity; k = -1 is defined for all reals.
double inverse_s(double v, Characteristic k);

/// Principal inverse of T. k = 1 accepts the infinity markers (-> +-pi/2);
/// k = 0 is the identity; k = -1 needs |v| < 1.
double inverse_t(const ExtendedReal& v, Characteristic k);

/// Scaled variants: the scale parameter folds into the argument, C(x/r).
double scaled_c_fn(double x, Characteristic k, double r);
double scaled_s_fn(double x, Characteristic k, double r);
ExtendedReal scaled_t_fn(double x, Characteristic k, double r);

/// The 2x2 generalized rotation block [[C, -kS], [S, C]] written into the
/// caller's entries. Used by the motion module and by the addition-law tests.
struct RotationBlock {
  double c00, c01, c10, c11;
};
RotationBlock rotation_block(double phi, Characteristic k);

}  // namespace ckgeom

#endif  // CKGEOM_GTRIG_HPP
