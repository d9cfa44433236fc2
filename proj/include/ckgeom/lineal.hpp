#ifndef CKGEOM_LINEAL_HPP
#define CKGEOM_LINEAL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ckgeom/measure.hpp"
#include "ckgeom/motion.hpp"
#include "ckgeom/space.hpp"

namespace ckgeom {

/// Vectors as columns of an (n+1) x (m+1) matrix over an ambient space.
struct CoordinateMatrix {
  Eigen::MatrixXd v;
  Specification spec;

  CoordinateMatrix(Eigen::MatrixXd m, Specification s);
};

/// Gram-style state matrix m_ij = (v_i (.) v_j) / K_i, divisions resolved
/// symbolically. Throws NotABasis when an infinite entry survives.
Eigen::MatrixXd state_matrix(const CoordinateMatrix& vectors);

/// sqrt(det of the state matrix); equals |det V| for square V.
double parallelepiped_volume(const CoordinateMatrix& vectors);

/// An m-dimensional sub-object spanned by orthonormal basis columns, with
/// slot weights derived from the ambient cumulative products. Improper
/// lineals (leading weight != 1) have no image on the space sphere.
class Lineal {
 public:
  /// Select columns of an orthogonal matrix; the derived specification is
  /// the product rule over the index gaps.
  static Lineal from_columns(const Motion& m, const std::vector<int>& indices);

  /// Orthonormalize an arbitrary spanning set (the unique-basis algorithm
  /// run over the span). Throws DegenerateLineal when a null direction
  /// cannot be normalized.
  static Lineal from_basis(const Eigen::MatrixXd& basis, const Specification& spec);

  int dim() const { return static_cast<int>(basis_.cols()) - 1; }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const Specification& ambient() const { return ambient_; }
  const std::vector<Grade>& weights() const { return weights_; }
  const std::optional<std::vector<int>>& column_indices() const { return column_indices_; }

  /// Leading weight K'_0 (a value in {-1, 0, 1}).
  int leading_weight() const { return weights_.front().value(); }
  bool improper() const { return leading_weight() != 1; }

  /// Derived characteristics k'_1..k'_m (empty for point lineals).
  std::vector<Characteristic> derived_spec() const;

 private:
  friend Lineal make_lineal_unchecked(Eigen::MatrixXd, std::vector<Grade>, Specification,
                                      std::optional<std::vector<int>>);
  Lineal(Eigen::MatrixXd basis, std::vector<Grade> weights, Specification ambient,
         std::optional<std::vector<int>> cols)
      : basis_(std::move(basis)),
        weights_(std::move(weights)),
        ambient_(std::move(ambient)),
        column_indices_(std::move(cols)) {}

  Eigen::MatrixXd basis_;
  std::vector<Grade> weights_;
  Specification ambient_;
  std::optional<std::vector<int>> column_indices_;
};

/// Split v into its projection on L and the orthogonal remainder,
/// v = v_on + v_perp with v_perp (.) l_j = 0 for every basis column.
/// Coefficients over zero-weight slots are taken as 0.
std::pair<Eigen::VectorXd, Eigen::VectorXd> project(const Eigen::VectorXd& v, const Lineal& l);

/// Re-express the lineal in a new basis via an interior motion (a motion of
/// the lineal's own derived specification).
Lineal change_basis(const Lineal& l, const Eigen::MatrixXd& interior);

/// The unique-basis form: deterministic, idempotent, independent of the
/// input basis of the same span.
Lineal canonical_basis(const Lineal& l);

/// Complete a lineal's basis to the whole ambient space; the returned
/// lineal spans the orthogonal completion.
Lineal orthogonal_completion(const Lineal& l);

/// Image of a lineal under an ambient motion.
Lineal transformed(const Motion& m, const Lineal& l);

/// Determinants (det M', det M'') of the state matrices of X's basis
/// projected onto Y and onto its orthogonal completion.
std::pair<double, double> measure_determinants(const Lineal& x, const Lineal& y);

/// The measures (phi, psi) between two lineals with dim X <= dim Y, from the
/// determinants of the projected state matrices. The characteristic and the
/// measurability class come out of the det M' +- det M'' case analysis.
std::pair<Measure, Measure> measure_between(const Lineal& x, const Lineal& y);

struct ConeVolume {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Monte-Carlo volume of the figure cut on the space sphere by the simplex
/// cone over the given vertices (columns), scaled by (n+1). Deterministic
/// for a fixed seed.
ConeVolume cone_volume(const Eigen::MatrixXd& vertices, const Specification& spec,
                       std::uint64_t samples = 1000000, std::uint64_t seed = 1);

}  // namespace ckgeom

#endif  // CKGEOM_LINEAL_HPP
