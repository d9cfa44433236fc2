#ifndef CKGEOM_TRIANGLE_HPP
#define CKGEOM_TRIANGLE_HPP

#include <array>
#include <optional>

#include "ckgeom/measure.hpp"
#include "ckgeom/space.hpp"

namespace ckgeom {

/// A solved triangle: sides carry the distance characteristic k_1, angles
/// the planar-angle characteristic k_2. The interior angle at B exists only
/// when k_2 = 1; the exterior angle beta' always does.
struct TriangleSolution {
  Measure a, b, c;
  Measure alpha, gamma;
  Measure beta_ext;
  std::optional<Measure> beta_int;
};

/// Cosine I law, solved for the side opposite the angle:
/// C1(a) = C1(b)C1(c) + k1 S1(b)S1(c)C2(alpha). For k1 = 0 the C-form is an
/// identity and the T-form applies, reducing to the planar law of cosines.
Measure cosine1_side(double b, double c, double alpha, const Specification& spec);

/// S1(side) / S2(angle); equal at all three vertices of a valid triangle.
double sine_ratio(double side, double angle, const Specification& spec);

/// Cosine II law, solved for the angle opposite the side:
/// C2(alpha) = C2(beta')C2(gamma) + k2 S2(beta')S2(gamma)C1(a), with the
/// T-form taking over at k2 = 0.
Measure cosine2_angle(double beta_ext, double gamma, double a, const Specification& spec);

/// Solve side-angle-side by constructing the vertices with motions and
/// reading the remaining quantities off the image components. This is the
/// oracle the closed-form laws are checked against.
TriangleSolution solve_sas(double b, double c, double alpha, const Specification& spec);

/// Right quasi-triangle quantities (the half-isosceles figure): hypotenuse c,
/// legs b and a (a carries the mixed characteristic k1 k2), angles alpha and
/// beta'.
struct RightTriangle {
  Measure a, b, c;
  Measure alpha, beta_ext;
};

struct RightKnowns {
  std::optional<double> a, b, c, alpha, beta_ext;
};

/// Solve the right quasi-triangle from exactly two known quantities.
/// Throws SolveError for underdetermined or inconsistent combinations.
RightTriangle right_relations(const RightKnowns& knowns, const Specification& spec);

/// Residuals of the ten component relations plus the two C-free T-forms,
/// evaluated at the given quantities. All vanish on a genuine figure.
std::array<double, 12> right_relation_residuals(double a, double b, double c, double alpha,
                                                double beta_ext, const Specification& spec);

enum class Ordering { less, equal, greater };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less:
      return "<";
    case Ordering::equal:
      return "=";
    default:
      return ">";
  }
}

/// Which side/angle inequalities a solution satisfies, against the ones its
/// characteristics predict. Side orderings are driven by k_2, angle
/// orderings by k_1.
struct InequalityReport {
  Ordering side_diff;   // a vs |b - c|
  Ordering side_sum;    // b vs a + c
  Ordering angle_diff;  // alpha vs |beta' - gamma|
  Ordering angle_sum;   // beta' vs alpha + gamma
  Ordering expected_side_diff, expected_side_sum;
  Ordering expected_angle_diff, expected_angle_sum;
  bool matches;
};

InequalityReport triangle_inequality_class(const TriangleSolution& sol,
                                           const Specification& spec);

}  // namespace ckgeom

#endif  // CKGEOM_TRIANGLE_HPP
