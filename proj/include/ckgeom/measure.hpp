#ifndef CKGEOM_MEASURE_HPP
#define CKGEOM_MEASURE_HPP

#include <string>

#include "ckgeom/extended_real.hpp"
#include "ckgeom/gtrig.hpp"

namespace ckgeom {

enum class MeasureClass { measurable, limit, generalized, immeasurable };

inline const char* to_string(MeasureClass c) {
  switch (c) {
    case MeasureClass::measurable:
      return "measurable";
    case MeasureClass::limit:
      return "limit";
    case MeasureClass::generalized:
      return "generalized";
    default:
      return "immeasurable";
  }
}

/// A length or angle together with the characteristic it is measured under
/// and its measurability class. Mixed characteristics (the leg of a right
/// quasi-triangle, generalized distances) are the reason the characteristic
/// travels with the value.
struct Measure {
  ExtendedReal value;
  Characteristic characteristic = 1;
  MeasureClass klass = MeasureClass::measurable;

  static Measure measurable(double v, Characteristic k) {
    return Measure{ExtendedReal(v), k, MeasureClass::measurable};
  }
};

}  // namespace ckgeom

#endif  // CKGEOM_MEASURE_HPP
