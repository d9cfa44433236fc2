#ifndef CKGEOM_EXTENDED_REAL_HPP
#define CKGEOM_EXTENDED_REAL_HPP

#include <cmath>
#include <string>

#include "ckgeom/errors.hpp"

namespace ckgeom {

/// A real number extended with the symbolic markers +infinity, -infinity and
/// undefined. T(x) at poles and the degenerate-ratio bookkeeping both need
/// values that plain doubles cannot carry without NaN arithmetic.
class ExtendedReal {
 public:
  enum class Kind { finite, pos_inf, neg_inf, undefined };

  ExtendedReal() : value_(0.0), kind_(Kind::finite) {}
  /* implicit */ ExtendedReal(double v) : value_(v), kind_(Kind::finite) {}

  static ExtendedReal infinity(int sign) {
    ExtendedReal r;
    r.kind_ = sign >= 0 ? Kind::pos_inf : Kind::neg_inf;
    return r;
  }
  static ExtendedReal undefined() {
    ExtendedReal r;
    r.kind_ = Kind::undefined;
    return r;
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinite() const {
    return kind_ == Kind::pos_inf || kind_ == Kind::neg_inf;
  }
  bool is_undefined() const { return kind_ == Kind::undefined; }

  /// Finite value; throws on markers.
  double value() const {
    if (!is_finite()) throw DomainError("extended real is not finite: " + str());
    return value_;
  }

  /// Finite value, or +/-HUGE_VAL for the infinities. Throws on undefined.
  double as_double() const {
    switch (kind_) {
      case Kind::finite:
        return value_;
      case Kind::pos_inf:
        return HUGE_VAL;
      case Kind::neg_inf:
        return -HUGE_VAL;
      default:
        throw DomainError("extended real is undefined");
    }
  }

  std::string str() const {
    switch (kind_) {
      case Kind::pos_inf:
        return "+infinity";
      case Kind::neg_inf:
        return "-infinity";
      case Kind::undefined:
        return "undefined";
      default:
        return std::to_string(value_);
    }
  }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Kind::finite) return a.value_ == b.value_;
    return true;
  }

 private:
  double value_;
  Kind kind_;
};

}  // namespace ckgeom

#endif  // CKGEOM_EXTENDED_REAL_HPP
