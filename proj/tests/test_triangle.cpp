#include <doctest.h>

#include <cmath>

#include "ckgeom/motion.hpp"
#include "ckgeom/triangle.hpp"
#include "oracles.hpp"

using namespace ckgeom;

namespace {

const std::vector<Specification> kNineSpecs = {
    Specification({1, 1}),  Specification({0, 1}),  Specification({-1, 1}),
    Specification({1, 0}),  Specification({0, 0}),  Specification({-1, 0}),
    Specification({1, -1}), Specification({0, -1}), Specification({-1, -1})};

// Sample SAS inputs until the construction is real under the spec.
bool sample_sas(const Specification& s, std::mt19937_64& rng, double& b, double& c,
                double& alpha, TriangleSolution& sol) {
  for (int tries = 0; tries < 200; ++tries) {
    b = oracles::uniform(rng, 0.1, 0.7);
    c = oracles::uniform(rng, 0.1, 0.7);
    alpha = oracles::uniform(rng, 0.1, 0.9);
    try {
      sol = solve_sas(b, c, alpha, s);
      return true;
    } catch (const DomainError&) {
    }
  }
  return false;
}

}  // namespace

TEST_CASE("cosine I law") {
  // b = c = pi/2 on the sphere: a equals the vertex angle
  const Specification el({1, 1});
  for (double alpha : {0.3, 0.8, 1.4}) {
    const Measure a = cosine1_side(M_PI / 2, M_PI / 2, alpha, el);
    CHECK(std::abs(a.value.value() - alpha) <= 1e-12);
    CHECK(a.characteristic == 1);
  }

  // planar law of cosines
  const Specification eu({0, 1});
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const double b = oracles::uniform(rng, 0.1, 3), c = oracles::uniform(rng, 0.1, 3);
    const double alpha = oracles::uniform(rng, 0.1, 3);
    const double expect = std::sqrt(b * b + c * c - 2 * b * c * std::cos(alpha));
    CHECK(std::abs(cosine1_side(b, c, alpha, eu).value.value() - expect) <= 1e-10);
  }

  // hyperbolic law, checked against the motion construction
  const Specification hy({-1, 1});
  for (int t = 0; t < 100; ++t) {
    const double b = oracles::uniform(rng, 0.1, 1.5), c = oracles::uniform(rng, 0.1, 1.5);
    const double alpha = oracles::uniform(rng, 0.1, 3);
    const double expect =
        std::acosh(std::cosh(b) * std::cosh(c) - std::sinh(b) * std::sinh(c) * std::cos(alpha));
    CHECK(std::abs(cosine1_side(b, c, alpha, hy).value.value() - expect) <= 1e-10);
    CHECK(std::abs(solve_sas(b, c, alpha, hy).a.value.value() - expect) <= 1e-9);
  }

  CHECK_THROWS_AS(cosine1_side(-1.0, 1.0, 1.0, el), DomainError);
  // elliptic distance with hyperbolic angle can push C out of range
  CHECK_THROWS_AS(cosine1_side(1.5, 1.5, 2.0, Specification({1, -1})), DomainError);
}

TEST_CASE("sine law") {
  const Specification eu({0, 1});
  CHECK(std::abs(sine_ratio(2.0, 0.5, eu) - 2.0 / std::sin(0.5)) <= 1e-12);
  const Specification el({1, 1});
  CHECK(std::abs(sine_ratio(0.7, 0.4, el) - std::sin(0.7) / std::sin(0.4)) <= 1e-12);
  CHECK_THROWS_AS(sine_ratio(1.0, 0.0, eu), DegenerateAngle);

  // all three vertex ratios agree on solved triangles
  std::mt19937_64 rng(67);
  for (const auto& s : kNineSpecs) {
    int done = 0;
    for (int t = 0; t < 50 && done < 20; ++t) {
      double b, c, alpha;
      TriangleSolution sol;
      if (!sample_sas(s, rng, b, c, alpha, sol)) break;
      try {
        const double r1 = sine_ratio(sol.a.value.value(), alpha, s);
        const double r2 = sine_ratio(b, sol.beta_ext.value.value(), s);
        const double r3 = sine_ratio(c, sol.gamma.value.value(), s);
        CHECK(std::abs(r1 - r2) <= 1e-9);
        CHECK(std::abs(r1 - r3) <= 1e-9);
        ++done;
      } catch (const DegenerateAngle&) {
      }
    }
    CHECK(done >= 10);
  }
}

TEST_CASE("cosine II law") {
  std::mt19937_64 rng(71);

  // planar: alpha = beta' - gamma exactly
  const Specification eu({0, 1});
  for (int t = 0; t < 100; ++t) {
    double b, c, alpha;
    TriangleSolution sol;
    REQUIRE(sample_sas(eu, rng, b, c, alpha, sol));
    const Measure back = cosine2_angle(sol.beta_ext.value.value(), sol.gamma.value.value(),
                                       sol.a.value.value(), eu);
    CHECK(std::abs(back.value.value() - alpha) <= 1e-9);
    CHECK(std::abs((sol.beta_ext.value.value() - sol.gamma.value.value()) - alpha) <= 1e-9);
  }

  // spherical: the interior angle enters through the sign flip
  const Specification el({1, 1});
  for (int t = 0; t < 100; ++t) {
    double b, c, alpha;
    TriangleSolution sol;
    REQUIRE(sample_sas(el, rng, b, c, alpha, sol));
    const double beta = sol.beta_int->value.value();
    const double lhs = std::cos(alpha);
    const double rhs = -std::cos(beta) * std::cos(sol.gamma.value.value()) +
                       std::sin(beta) * std::sin(sol.gamma.value.value()) *
                           std::cos(sol.a.value.value());
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }

  // degenerate a = 0 reduces through the subtraction law
  for (double bp : {0.9, 1.3}) {
    for (double g : {0.2, 0.5}) {
      const Measure back = cosine2_angle(bp, g, 0.0, el);
      CHECK(std::abs(back.value.value() - std::abs(bp - g)) <= 1e-12);
    }
  }
}

TEST_CASE("solve_sas as construction") {
  // planar 3-4-5, frozen against the classical values
  const Specification eu({0, 1});
  const TriangleSolution sol = solve_sas(3.0, 4.0, M_PI / 2, eu);
  CHECK(std::abs(sol.a.value.value() - 5.0) <= 1e-12);
  CHECK(std::abs(sol.gamma.value.value() - 0.9272952180016122) <= 1e-12);
  CHECK(std::abs(sol.beta_ext.value.value() - 2.498091544796509) <= 1e-12);
  CHECK(std::abs(sol.beta_int->value.value() - 0.6435011087932844) <= 1e-12);

  // isosceles symmetry on the sphere: gamma equals the interior angle at B
  const Specification el({1, 1});
  std::mt19937_64 rng(73);
  for (int t = 0; t < 50; ++t) {
    const double bc = oracles::uniform(rng, 0.2, 0.7);
    const double alpha = oracles::uniform(rng, 0.2, 1.2);
    const TriangleSolution iso = solve_sas(bc, bc, alpha, el);
    CHECK(std::abs(iso.gamma.value.value() - iso.beta_int->value.value()) <= 1e-9);
  }

  // hyperbolic Pythagoras at the right angle
  const Specification hy({-1, 1});
  for (int t = 0; t < 50; ++t) {
    const double b = oracles::uniform(rng, 0.1, 1.5), c = oracles::uniform(rng, 0.1, 1.5);
    const TriangleSolution r = solve_sas(b, c, M_PI / 2, hy);
    CHECK(std::abs(std::cosh(r.a.value.value()) - std::cosh(b) * std::cosh(c)) <= 1e-10);
  }

  CHECK_THROWS_AS(solve_sas(0.0, 1.0, 1.0, eu), DomainError);
  CHECK_THROWS_AS(solve_sas(1.0, 1.0, 1.0, Specification({1})), DomainError);
}

TEST_CASE("interior/exterior angle coupling at k2 = 1") {
  std::mt19937_64 rng(79);
  for (const Specification& s :
       {Specification({1, 1}), Specification({0, 1}), Specification({-1, 1})}) {
    for (int t = 0; t < 50; ++t) {
      double b, c, alpha;
      TriangleSolution sol;
      REQUIRE(sample_sas(s, rng, b, c, alpha, sol));
      REQUIRE(sol.beta_int.has_value());
      const double bi = sol.beta_int->value.value(), be = sol.beta_ext.value.value();
      CHECK(std::abs(std::sin(bi) - std::sin(be)) <= 1e-10);
      CHECK(std::abs(std::cos(bi) + std::cos(be)) <= 1e-10);
    }
  }
}

TEST_CASE("right quasi-triangle relations") {
  // planar: pitagora1 reduces to c^2 = a^2 + b^2
  const Specification eu({0, 1});
  const RightTriangle rt = right_relations(RightKnowns{3.0, 4.0, {}, {}, {}}, eu);
  CHECK(std::abs(rt.c.value.value() - 5.0) <= 1e-12);
  CHECK(rt.a.characteristic == 0);  // k1 k2

  // sphere: pitagora gives cos c = cos a cos b
  const Specification el({1, 1});
  const RightTriangle rs = right_relations(RightKnowns{0.5, 0.6, {}, {}, {}}, el);
  CHECK(std::abs(std::cos(rs.c.value.value()) - std::cos(0.5) * std::cos(0.6)) <= 1e-12);
  CHECK(rs.a.characteristic == 1);

  // all twelve residuals vanish on constructed figures, every 2-D spec
  std::mt19937_64 rng(83);
  for (const auto& s : kNineSpecs) {
    for (int t = 0; t < 40; ++t) {
      const double c = oracles::uniform(rng, 0.1, 0.6);
      const double alpha = oracles::uniform(rng, 0.1, 0.6);
      const RightTriangle r = right_relations(RightKnowns{{}, {}, c, alpha, {}}, s);
      const auto res = right_relation_residuals(r.a.value.value(), r.b.value.value(), c,
                                                alpha, r.beta_ext.value.value(), s);
      for (double v : res) CHECK(std::abs(v) <= 1e-9);
      CHECK(r.a.characteristic == s.k(1) * s.k(2));
    }
  }
}

TEST_CASE("right quasi-triangle: every input pair recovers the figure") {
  std::mt19937_64 rng(89);
  for (const Specification& s :
       {Specification({-1, 1}), Specification({1, 1}), Specification({-1, -1})}) {
    for (int t = 0; t < 25; ++t) {
      const double c = oracles::uniform(rng, 0.15, 0.55);
      const double alpha = oracles::uniform(rng, 0.15, 0.55);
      const RightTriangle ref = right_relations(RightKnowns{{}, {}, c, alpha, {}}, s);
      const double a = ref.a.value.value(), b = ref.b.value.value(),
                   be = ref.beta_ext.value.value();

      const std::vector<RightKnowns> pairs = {
          {a, b, {}, {}, {}},   {a, {}, c, {}, {}},   {a, {}, {}, alpha, {}},
          {a, {}, {}, {}, be},  {{}, b, c, {}, {}},   {{}, b, {}, alpha, {}},
          {{}, b, {}, {}, be},  {{}, {}, c, alpha, {}}, {{}, {}, c, {}, be},
          {{}, {}, {}, alpha, be}};
      for (const auto& in : pairs) {
        const RightTriangle got = right_relations(in, s);
        CHECK(std::abs(got.a.value.value() - a) <= 1e-9);
        CHECK(std::abs(got.b.value.value() - b) <= 1e-9);
        CHECK(std::abs(got.c.value.value() - c) <= 1e-9);
        CHECK(std::abs(got.alpha.value.value() - alpha) <= 1e-9);
        CHECK(std::abs(got.beta_ext.value.value() - be) <= 1e-9);
      }
    }
  }
}

TEST_CASE("right quasi-triangle: motion-grounded leg") {
  // B = R1(-b) R2(alpha) R1(c) O lands on (x, 0, y) with x = C12(a), y = S12(a).
  std::mt19937_64 rng(97);
  for (const Specification& s :
       {Specification({1, 1}), Specification({-1, 1}), Specification({0, 1}),
        Specification({1, -1})}) {
    for (int t = 0; t < 25; ++t) {
      const double c = oracles::uniform(rng, 0.15, 0.5);
      const double alpha = oracles::uniform(rng, 0.15, 0.5);
      const RightTriangle r = right_relations(RightKnowns{{}, {}, c, alpha, {}}, s);
      const double b = r.b.value.value(), a = r.a.value.value();
      const Eigen::VectorXd bv = apply_raw(
          main_rotation(1, -b, s),
          apply_raw(main_rotation(2, alpha, s),
                    apply_raw(main_rotation(1, c, s), Point::origin(s).coords())));
      CHECK(std::abs(bv[1]) <= 1e-9);
      const int k12 = s.k(1) * s.k(2);
      CHECK(std::abs(bv[0] - c_fn(a, k12)) <= 1e-9);
      CHECK(std::abs(bv[2] - s_fn(a, k12)) <= 1e-9);
    }
  }
}

TEST_CASE("right quasi-triangle: degenerate input combinations") {
  const Specification ga({1, 0});  // k2 = 0
  CHECK_THROWS_AS(right_relations(RightKnowns{{}, 0.3, 0.5, {}, {}}, ga), SolveError);
  const Specification eu({0, 1});  // k1 = 0
  CHECK_THROWS_AS(right_relations(RightKnowns{{}, {}, {}, 0.4, 0.4}, eu), SolveError);
  CHECK_THROWS_AS(right_relations(RightKnowns{1.0, {}, {}, {}, {}}, eu), SolveError);
  CHECK_THROWS_AS(right_relations(RightKnowns{1.0, 2.0, 3.0, {}, {}}, eu), SolveError);
}

TEST_CASE("triangle inequality classes") {
  std::mt19937_64 rng(101);
  for (const auto& s : kNineSpecs) {
    int done = 0;
    for (int t = 0; t < 60 && done < 25; ++t) {
      double b, c, alpha;
      TriangleSolution sol;
      if (!sample_sas(s, rng, b, c, alpha, sol)) break;
      const InequalityReport rep = triangle_inequality_class(sol, s);
      CHECK(rep.matches);
      ++done;
    }
    CHECK(done >= 10);
  }

  // the three pinned cases
  std::mt19937_64 rng2(103);
  double b, c, alpha;
  TriangleSolution sol;
  REQUIRE(sample_sas(Specification({0, 1}), rng2, b, c, alpha, sol));
  auto rep = triangle_inequality_class(sol, Specification({0, 1}));
  CHECK(rep.side_sum == Ordering::less);
  REQUIRE(sample_sas(Specification({0, 0}), rng2, b, c, alpha, sol));
  rep = triangle_inequality_class(sol, Specification({0, 0}));
  CHECK(rep.side_sum == Ordering::equal);
  REQUIRE(sample_sas(Specification({0, -1}), rng2, b, c, alpha, sol));
  rep = triangle_inequality_class(sol, Specification({0, -1}));
  CHECK(rep.side_sum == Ordering::greater);
}
