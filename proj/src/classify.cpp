#include "ckgeom/classify.hpp"

#include <algorithm>

namespace ckgeom {

Specification spec_from_quadric(const QuadricSignature& q) {
  std::vector<int> signs = q.signs;
  if (signs.empty()) throw UnsupportedSignature("empty quadric signature");
  for (int s : signs) {
    if (s != -1 && s != 0 && s != 1)
      throw UnsupportedSignature("quadric signs must be -1, 0 or +1");
  }
  if (signs[0] == -1)
    for (int& s : signs) s = -s;
  if (signs[0] != 1) throw UnsupportedSignature("leading quadric sign must be nonzero");

  bool seen_zero = false;
  for (int s : signs) {
    if (s == 0)
      seen_zero = true;
    else if (seen_zero)
      throw UnsupportedSignature("nonzero sign after a zero in the quadric form");
  }

  std::vector<Characteristic> ks;
  if (q.linear) ks.push_back(0);
  for (size_t t = 1; t < signs.size(); ++t) {
    if (signs[t] == 0)
      ks.push_back(0);
    else
      ks.push_back(signs[t] / signs[t - 1]);
  }
  if (ks.empty()) throw UnsupportedSignature("signature too short to define a space");
  return Specification(std::move(ks));
}

std::vector<int> quadric_signs(const Specification& spec, bool linear) {
  std::vector<int> signs;
  if (linear) {
    if (spec.k(1) != 0) throw DomainError("distance quadric form exists only for k_1 = 0");
    // weights of the distance form: prod of k_2..k_j for j = 1..n
    int acc = 1;
    signs.push_back(1);
    for (int j = 2; j <= spec.n(); ++j) {
      acc = (acc == 0) ? 0 : acc * spec.k(j);
      signs.push_back(acc);
    }
  } else {
    for (int m = 0; m <= spec.n(); ++m) signs.push_back(spec.K(m));
  }
  return signs;
}

Specification preset(const std::string& name, int n) {
  auto fill = [](Characteristic first, int count) {
    std::vector<Characteristic> ks(count, 1);
    ks[0] = first;
    return Specification(std::move(ks));
  };
  if (name == "euclidean") return fill(0, n > 0 ? n : 3);
  if (name == "elliptic") return fill(1, n > 0 ? n : 3);
  if (name == "hyperbolic") return fill(-1, n > 0 ? n : 3);
  if (name == "minkowski") {
    const int dim = n > 0 ? n : 4;
    if (dim < 2) throw DomainError("minkowski needs n >= 2");
    std::vector<Characteristic> ks(dim, 1);
    ks[0] = 0;
    ks[1] = -1;
    return Specification(std::move(ks));
  }
  if (name == "galilean") {
    if (n != 0 && n != 2) throw DomainError("galilean preset is planar (n = 2)");
    return Specification({0, 0});
  }
  if (name == "cylinder-complete") {
    if (n != 0 && n != 2) throw DomainError("cylinder-complete preset is planar (n = 2)");
    return Specification({1, 0});
  }
  throw ParseError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"euclidean", "elliptic", "hyperbolic", "minkowski", "galilean", "cylinder-complete"};
}

double curvature(const Specification& spec) {
  const double r = spec.scale(1);
  return spec.k(1) / (r * r);
}

}  // namespace ckgeom
