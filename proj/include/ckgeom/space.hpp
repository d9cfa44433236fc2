#ifndef CKGEOM_SPACE_HPP
#define CKGEOM_SPACE_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckgeom/errors.hpp"
#include "ckgeom/extended_real.hpp"
#include "ckgeom/gtrig.hpp"
#include "ckgeom/measure.hpp"

namespace ckgeom {

/// A product of characteristics tracked symbolically: sign * 0^zeros.
/// Ratios of such products follow the divisibility convention (a zero factor
/// cancels only against a zero factor), which is what keeps the degenerate
/// specs free of NaN arithmetic.
struct Grade {
  int sign = 1;    // +1 or -1
  int zeros = 0;   // number of zero factors

  int value() const { return zeros > 0 ? 0 : sign; }

  Grade times(Characteristic k) const {
    if (k == 0) return Grade{sign, zeros + 1};
    return Grade{sign * k, zeros};
  }

  /// this / other; nullopt when the denominator carries more zero factors.
  std::optional<Grade> over(const Grade& other) const {
    if (zeros < other.zeros) return std::nullopt;
    return Grade{sign * other.sign, zeros - other.zeros};
  }
};

/// The space specification {k_1,...,k_n} with optional per-level scales.
/// Derived cumulative products K_m are precomputed both as plain values and
/// as grades for symbolic division.
class Specification {
 public:
  Specification(std::vector<Characteristic> k, std::vector<double> scales = {});

  /// Parse the text form "-1,1,1" with optional ";r=2,1,1" scales suffix.
  static Specification parse(const std::string& text);
  std::string str() const;

  int n() const { return static_cast<int>(k_.size()); }
  int ambient_dim() const { return n() + 1; }  // homogeneous coordinate count

  /// k_i, 1-indexed as in the underlying theory.
  Characteristic k(int i) const;
  double scale(int i) const;
  bool has_nontrivial_scales() const;

  /// Cumulative product K_m, m in [0, n].
  Characteristic K(int m) const { return grades_[check_level(m)].value(); }
  Grade K_grade(int m) const { return grades_[check_level(m)]; }
  std::vector<Characteristic> cumulative() const;

  /// Symbolic ratio K_j / K_i; `undefined` when i > j and a zero lies in
  /// between (reciprocal of zero).
  ExtendedReal k_ratio(int i, int j) const;

  /// Same ratio as a grade; nullopt when undefined.
  std::optional<Grade> ratio_grade(int i, int j) const;

  /// Specification of the trailing levels {k_{first+1},...,k_n}.
  Specification suffix(int first) const;

  const std::vector<Characteristic>& ks() const { return k_; }
  const std::vector<double>& scales() const { return scales_; }

  friend bool operator==(const Specification& a, const Specification& b) {
    return a.k_ == b.k_ && a.scales_ == b.scales_;
  }

 private:
  int check_level(int m) const;
  std::vector<Characteristic> k_;
  std::vector<double> scales_;
  std::vector<Grade> grades_;  // grades_[m] = K_m
};

/// Weighted bilinear form: x (.) y = sum K_i x_i y_i. The invariant of all
/// motions.
double dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Specification& spec);

/// The companion product (x) defined by (X.Y)^2 + k_1 (XxY)^2 = 1; evaluates
/// S of the distance. The K_i K_j / k_1 weights are resolved by symbolic
/// cancellation. Throws DomainError when the radicand is negative (the
/// measure has a different characteristic).
double cross_norm(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Specification& spec);

enum class PairClass { measurable, limit, generalized, coincident };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::measurable:
      return "measurable";
    case PairClass::limit:
      return "limit";
    case PairClass::generalized:
      return "generalized";
    default:
      return "coincident";
  }
}

/// A point of B^n in homogeneous coordinates, normalized to x (.) x = 1 with
/// the first nonzero coordinate positive.
class Point {
 public:
  Point(Eigen::VectorXd coords, Specification spec);

  const Eigen::VectorXd& coords() const { return x_; }
  const Specification& spec() const { return spec_; }
  double operator[](int i) const { return x_[i]; }

  static Point origin(const Specification& spec);

  /// Parse the text form "1:0:0" (normalizes the result).
  static Point parse(const std::string& text, const Specification& spec);
  std::string str() const;

 private:
  Eigen::VectorXd x_;
  Specification spec_;
};

/// Normalize a raw vector onto B^n: v / sqrt(v (.) v), sign convention
/// applied. Throws ImproperVector when v (.) v <= 0 within tolerance.
Point normalize_point(const Eigen::VectorXd& v, const Specification& spec);

/// Apply the canonical sign convention (first nonzero coordinate positive).
Eigen::VectorXd canonical_sign(const Eigen::VectorXd& v);

/// Distance classification for a point pair, following the connectability
/// cases of the model. The measure carries its own characteristic: for
/// unconnectable pairs it differs from k_1.
std::pair<PairClass, Measure> classify_pair(const Point& X, const Point& Y);

}  // namespace ckgeom

#endif  // CKGEOM_SPACE_HPP
