#include <doctest.h>

#include "ckgeom/classify.hpp"

using namespace ckgeom;

TEST_CASE("quadric cases") {
  // the four worked signature cases
  CHECK(spec_from_quadric({{1, 1, 1}, true}).ks() == std::vector<Characteristic>{0, 1, 1});
  CHECK(spec_from_quadric({{1, -1, -1, -1}, true}).ks() ==
        std::vector<Characteristic>{0, -1, 1, 1});
  CHECK(spec_from_quadric({{1, 1, -1, -1}, true}).ks() ==
        std::vector<Characteristic>{0, 1, -1, 1});
  CHECK(spec_from_quadric({{1, 1, 1, 0}, true}).ks() ==
        std::vector<Characteristic>{0, 1, 1, 0});

  // non-linear input reads the signs as the invariant-form weights K_0..K_n
  CHECK(spec_from_quadric({{1, -1, -1, -1}, false}).ks() ==
        std::vector<Characteristic>{-1, 1, 1});
  CHECK(spec_from_quadric({{1, 1, 1, 1}, false}).ks() ==
        std::vector<Characteristic>{1, 1, 1});

  // leading -1 is a global sign flip
  CHECK(spec_from_quadric({{-1, 1, 1}, true}).ks() == std::vector<Characteristic>{0, -1, 1});

  CHECK_THROWS_AS(spec_from_quadric({{1, 0, 1}, true}), UnsupportedSignature);
  CHECK_THROWS_AS(spec_from_quadric({{0, 1}, true}), UnsupportedSignature);
  CHECK_THROWS_AS(spec_from_quadric({{}, true}), UnsupportedSignature);
  CHECK_THROWS_AS(spec_from_quadric({{1, 2}, true}), UnsupportedSignature);
}

TEST_CASE("quadric round-trips") {
  // linear presets reproduce their distance-form signs exactly
  for (const auto& name : {"euclidean", "minkowski", "galilean"}) {
    const Specification s = preset(name);
    const auto signs = quadric_signs(s, true);
    CHECK(spec_from_quadric({signs, true}) == s);
  }
  // curved presets round-trip through the invariant form
  for (const auto& name : {"elliptic", "hyperbolic"}) {
    const Specification s = preset(name);
    const auto signs = quadric_signs(s, false);
    CHECK(spec_from_quadric({signs, false}) == s);
  }
  // the four cases reproduce their input signs
  const std::vector<std::vector<int>> cases = {
      {1, 1, 1}, {1, -1, -1, -1}, {1, 1, -1, -1}, {1, 1, 1, 0}};
  for (const auto& signs : cases) {
    CHECK(quadric_signs(spec_from_quadric({signs, true}), true) == signs);
  }
  CHECK_THROWS_AS(quadric_signs(preset("elliptic"), true), DomainError);
}

TEST_CASE("presets") {
  CHECK(preset("hyperbolic", 2).ks() == std::vector<Characteristic>{-1, 1});
  CHECK(preset("euclidean", 4).ks() == std::vector<Characteristic>{0, 1, 1, 1});
  CHECK(preset("elliptic", 2).ks() == std::vector<Characteristic>{1, 1});
  CHECK(preset("minkowski").ks() == std::vector<Characteristic>{0, -1, 1, 1});
  CHECK(preset("galilean").ks() == std::vector<Characteristic>{0, 0});
  CHECK(preset("cylinder-complete").ks() == std::vector<Characteristic>{1, 0});
  CHECK_THROWS_AS(preset("sphere"), ParseError);
  CHECK_THROWS_AS(preset("galilean", 5), DomainError);
  CHECK(preset_names().size() == 6);
}

TEST_CASE("curvature") {
  CHECK(curvature(Specification({1, 1})) == 1.0);
  CHECK(curvature(Specification({-1, 1}, {2.0, 1.0})) == -0.25);
  CHECK(curvature(Specification({0, 1, 1})) == 0.0);
}
