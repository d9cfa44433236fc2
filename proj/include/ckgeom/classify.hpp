#ifndef CKGEOM_CLASSIFY_HPP
#define CKGEOM_CLASSIFY_HPP

#include <string>
#include <vector>

#include "ckgeom/space.hpp"

namespace ckgeom {

/// Diagonal signs of a distance (or invariant) quadric form. `linear` marks
/// an affine space, which fixes k_1 = 0 and reads the signs as the distance
/// form weights; otherwise the signs are the cumulative weights K_0..K_n of
/// the invariant form itself.
struct QuadricSignature {
  std::vector<int> signs;  // entries +1, -1 or 0
  bool linear = true;
};

/// Infer the specification from a quadric signature. Consecutive sign ratios
/// give the characteristics; a zero sign forces that characteristic to zero
/// and no nonzero sign may follow one.
Specification spec_from_quadric(const QuadricSignature& q);

/// The quadric signature a specification induces (inverse of the above).
std::vector<int> quadric_signs(const Specification& spec, bool linear);

/// Named spaces. euclidean/elliptic/hyperbolic/minkowski take a dimension
/// (defaults 3, 3, 3, 4); galilean and cylinder-complete are planar.
Specification preset(const std::string& name, int n = 0);

std::vector<std::string> preset_names();

/// Gaussian curvature k_1 / r_1^2.
double curvature(const Specification& spec);

}  // namespace ckgeom

#endif  // CKGEOM_CLASSIFY_HPP
