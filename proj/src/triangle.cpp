#include "ckgeom/triangle.hpp"

#include <cmath>
#include <string>

#include "ckgeom/motion.hpp"

namespace ckgeom {

namespace {

constexpr double kSlack = 1e-9;

// One measure level: characteristic plus scale, with the scale folded into
// the function arguments and unfolded by the inverses.
struct Level {
  Characteristic k;
  double r;

  double C(double x) const { return c_fn(x / r, k); }
  double S(double x) const { return s_fn(x / r, k); }
  double T(double x) const { return S(x) / C(x); }

  double inv_c(double v) const {
    if (k == 1) {
      if (std::abs(v) > 1.0 + kSlack)
        throw DomainError("cosine value out of [-1, 1]: " + std::to_string(v));
      v = std::clamp(v, -1.0, 1.0);
    } else if (k == -1) {
      if (v < 1.0 - kSlack)
        throw DomainError("hyperbolic cosine value below 1: " + std::to_string(v));
      v = std::max(v, 1.0);
    }
    return r * inverse_c(v, k);
  }
  double inv_s(double v) const {
    if (k == 1) {
      if (std::abs(v) > 1.0 + kSlack)
        throw DomainError("sine value out of [-1, 1]: " + std::to_string(v));
      v = std::clamp(v, -1.0, 1.0);
    }
    return r * inverse_s(v, k);
  }
  double inv_t(double v) const { return r * inverse_t(ExtendedReal(v), k); }

  // Recover x from the pair (C(x), S(x)).
  double from_cs(double c, double s) const {
    switch (k) {
      case 1:
        return r * std::atan2(s, c);
      case 0:
        return r * s;
      default: {
        const double q = c + s;  // cosh + sinh = exp
        if (q <= 0.0) throw DomainError("no real hyperbolic measure for (C, S) pair");
        return r * std::log(q);
      }
    }
  }
};

Level level1(const Specification& spec) { return Level{spec.k(1), spec.scale(1)}; }
Level level2(const Specification& spec) {
  if (spec.n() < 2) throw DomainError("triangle operations need a specification with n >= 2");
  return Level{spec.k(2), spec.scale(2)};
}
Level level12(const Specification& spec) {
  if (spec.n() < 2) throw DomainError("triangle operations need a specification with n >= 2");
  return Level{static_cast<Characteristic>(spec.k(1) * spec.k(2)), 1.0};
}

}  // namespace

Measure cosine1_side(double b, double c, double alpha, const Specification& spec) {
  if (b < 0 || c < 0) throw DomainError("sides must be nonnegative");
  const Level l1 = level1(spec);
  const Level l2 = level2(spec);
  if (l1.k != 0) {
    const double rhs = l1.C(b) * l1.C(c) + l1.k * l1.S(b) * l1.S(c) * l2.C(alpha);
    return Measure::measurable(l1.inv_c(rhs), l1.k);
  }
  // T-form at k1 = 0: a^2 = b^2 + c^2 - 2bc C2(alpha); the scale r1 cancels.
  const double rad = b * b + c * c - 2.0 * b * c * l2.C(alpha);
  if (rad < -kSlack)
    throw DomainError("no real side: the distance has a different characteristic");
  return Measure::measurable(std::sqrt(std::max(rad, 0.0)), 0);
}

double sine_ratio(double side, double angle, const Specification& spec) {
  const Level l1 = level1(spec);
  const Level l2 = level2(spec);
  const double s2 = l2.S(angle);
  if (s2 == 0.0) throw DegenerateAngle("sine ratio undefined: S2(angle) = 0");
  return l1.S(side) / s2;
}

Measure cosine2_angle(double beta_ext, double gamma, double a, const Specification& spec) {
  const Level l1 = level1(spec);
  const Level l2 = level2(spec);
  if (l2.k != 0) {
    const double rhs =
        l2.C(beta_ext) * l2.C(gamma) + l2.k * l2.S(beta_ext) * l2.S(gamma) * l1.C(a);
    return Measure::measurable(l2.inv_c(rhs), l2.k);
  }
  // T-form at k2 = 0: alpha^2 = beta'^2 + gamma^2 - 2 beta' gamma C1(a).
  const double rad =
      beta_ext * beta_ext + gamma * gamma - 2.0 * beta_ext * gamma * l1.C(a);
  if (rad < -kSlack) throw DomainError("no real angle for these inputs");
  return Measure::measurable(std::sqrt(std::max(rad, 0.0)), 0);
}

TriangleSolution solve_sas(double b, double c, double alpha, const Specification& spec) {
  if (!(b > 0) || !(c > 0)) throw DomainError("SAS needs positive sides");
  const Level l1 = level1(spec);
  const Level l2 = level2(spec);

  // B = R2(alpha) R1(c) O and then into A's frame: B' = R1(-b) B gives
  // [C1(a) : -S1(a)C2(gamma) : S1(a)S2(gamma)]. The same shift applied to C
  // from B's side yields the exterior angle components.
  const Eigen::VectorXd o = Point::origin(spec).coords();
  const Eigen::VectorXd cv = apply_raw(main_rotation(1, b, spec), o);
  const Eigen::VectorXd bv =
      apply_raw(main_rotation(2, alpha, spec), apply_raw(main_rotation(1, c, spec), o));
  const Eigen::VectorXd bp = apply_raw(main_rotation(1, -b, spec), bv);
  const Eigen::VectorXd cpp = apply_raw(
      main_rotation(1, -c, spec), apply_raw(main_rotation(2, -alpha, spec), cv));

  const double s1a_sq = bp[1] * bp[1] + l2.k * bp[2] * bp[2];
  if (s1a_sq < -kSlack)
    throw DomainError("triangle has no real opposite side under this specification");
  const double s1a = std::sqrt(std::max(s1a_sq, 0.0));
  const double a = l1.from_cs(bp[0], s1a);
  if (s1a <= 1e-12) throw DomainError("degenerate triangle: opposite side vanishes");

  const double gamma = l2.from_cs(-bp[1] / s1a, bp[2] / s1a);
  const double beta_ext = l2.from_cs(cpp[1] / s1a, -cpp[2] / s1a);

  TriangleSolution sol;
  sol.a = Measure::measurable(a, l1.k);
  sol.b = Measure::measurable(b, l1.k);
  sol.c = Measure::measurable(c, l1.k);
  sol.alpha = Measure::measurable(alpha, l2.k);
  sol.gamma = Measure::measurable(gamma, l2.k);
  sol.beta_ext = Measure::measurable(beta_ext, l2.k);
  if (l2.k == 1) sol.beta_int = Measure::measurable(l2.r * M_PI - beta_ext, 1);
  return sol;
}

std::array<double, 12> right_relation_residuals(double a, double b, double c, double alpha,
                                                double beta_ext, const Specification& spec) {
  const Level l1 = level1(spec);
  const Level l2 = level2(spec);
  const Level l12 = level12(spec);
  const double k1 = l1.k, k2 = l2.k;

  const double t1b = l1.T(b), t1c = l1.T(c), t12a = l12.T(a), t2al = l2.T(alpha),
               t2be = l2.T(beta_ext);

  return {
      t1b - t1c * l2.C(alpha),                                    // nearangle1
      l1.C(c) - l12.C(a) * l1.C(b),                               // pitagora
      l12.S(a) - l1.S(c) * l2.S(alpha),                           // awayangle1
      t12a - l1.S(b) * t2al,                                      // catheti
      l1.S(b) - l1.S(c) * l2.C(beta_ext),                         // awayangle2
      t12a - t1c * l2.S(beta_ext),                                // nearangle2
      l12.S(a) - t1b * t2be,                                      // catheti2
      l2.C(alpha) - l12.C(a) * l2.C(beta_ext),                    // angles3
      t2be - l1.C(c) * t2al,                                      // angles1
      l2.S(beta_ext) - l1.C(b) * l2.S(alpha),                     // angles2
      t1c * t1c - k2 * t12a * t12a - t1b * t1b -
          k1 * k2 * t12a * t12a * t1b * t1b,                      // pitagora1
      t2al * t2al - k1 * t12a * t12a - t2be * t2be -
          k1 * k2 * t12a * t12a * t2be * t2be,                    // angles4
  };
}

namespace {

// Everything about the figure follows from the hypotenuse c and the near
// angle alpha.
RightTriangle right_from_c_alpha(double c, double alpha, const Specification& spec) {
  const Level l1 = level1(spec);
  const Level l2 = level2(spec);
  const Level l12 = level12(spec);

  const double b = l1.inv_t(l1.T(c) * l2.C(alpha));          // nearangle1
  const double a = l12.inv_s(l1.S(c) * l2.S(alpha));         // awayangle1
  const double beta_ext = l2.inv_t(l1.C(c) * l2.T(alpha));   // angles1

  RightTriangle out;
  out.a = Measure::measurable(a, l12.k);
  out.b = Measure::measurable(b, l1.k);
  out.c = Measure::measurable(c, l1.k);
  out.alpha = Measure::measurable(alpha, l2.k);
  out.beta_ext = Measure::measurable(beta_ext, l2.k);
  return out;
}

[[noreturn]] void solve_fail(const std::string& why) { throw SolveError(why); }

}  // namespace

RightTriangle right_relations(const RightKnowns& in, const Specification& spec) {
  const Level l1 = level1(spec);
  const Level l2 = level2(spec);
  const Level l12 = level12(spec);

  const int given = int(in.a.has_value()) + int(in.b.has_value()) + int(in.c.has_value()) +
                    int(in.alpha.has_value()) + int(in.beta_ext.has_value());
  if (given != 2) throw SolveError("exactly two of {a, b, c, alpha, beta_ext} must be given");

  try {
    if (in.c && in.alpha) return right_from_c_alpha(*in.c, *in.alpha, spec);

    if (in.b && in.c) {
      const double t1c = l1.T(*in.c);
      if (t1c == 0.0) solve_fail("degenerate figure: T1(c) = 0");
      if (l2.k == 0) solve_fail("(b, c) underdetermine the figure when k2 = 0");
      const double alpha = l2.inv_c(l1.T(*in.b) / t1c);
      return right_from_c_alpha(*in.c, alpha, spec);
    }
    if (in.a && in.b) {
      const double s1b = l1.S(*in.b);
      if (s1b == 0.0) solve_fail("degenerate figure: S1(b) = 0");
      const double alpha = l2.inv_t(l12.T(*in.a) / s1b);
      // pitagora1 yields the hypotenuse without the constant C functions.
      const double t12a = l12.T(*in.a), t1b = l1.T(*in.b);
      const double t1c_sq =
          l2.k * t12a * t12a + t1b * t1b + l1.k * l2.k * t12a * t12a * t1b * t1b;
      if (t1c_sq < 0) solve_fail("inconsistent (a, b): T1(c)^2 negative");
      const double c = l1.inv_t(std::sqrt(t1c_sq));
      return right_from_c_alpha(c, alpha, spec);
    }
    if (in.a && in.c) {
      const double s1c = l1.S(*in.c);
      if (s1c == 0.0) solve_fail("degenerate figure: S1(c) = 0");
      const double alpha = l2.inv_s(l12.S(*in.a) / s1c);
      return right_from_c_alpha(*in.c, alpha, spec);
    }
    if (in.a && in.alpha) {
      const double s2 = l2.S(*in.alpha);
      if (s2 == 0.0) solve_fail("degenerate figure: S2(alpha) = 0");
      const double c = l1.inv_s(l12.S(*in.a) / s2);
      return right_from_c_alpha(c, *in.alpha, spec);
    }
    if (in.b && in.alpha) {
      const double c2 = l2.C(*in.alpha);
      if (c2 == 0.0) solve_fail("degenerate figure: C2(alpha) = 0");
      const double c = l1.inv_t(l1.T(*in.b) / c2);
      return right_from_c_alpha(c, *in.alpha, spec);
    }
    if (in.a && in.beta_ext) {
      const double s2 = l2.S(*in.beta_ext);
      if (s2 == 0.0) solve_fail("degenerate figure: S2(beta') = 0");
      const double c = l1.inv_t(l12.T(*in.a) / s2);
      const double c1c = l1.C(c);
      if (c1c == 0.0) solve_fail("degenerate figure: C1(c) = 0");
      const double alpha = l2.inv_t(l2.T(*in.beta_ext) / c1c);
      return right_from_c_alpha(c, alpha, spec);
    }
    if (in.b && in.beta_ext) {
      const double a = l12.inv_s(l1.T(*in.b) * l2.T(*in.beta_ext));  // catheti2
      RightKnowns next;
      next.a = a;
      next.b = in.b;
      return right_relations(next, spec);
    }
    if (in.c && in.beta_ext) {
      const double b = l1.inv_s(l1.S(*in.c) * l2.C(*in.beta_ext));   // awayangle2
      const double a = l12.inv_t(l1.T(*in.c) * l2.S(*in.beta_ext));  // nearangle2
      const double c1c = l1.C(*in.c);
      if (c1c == 0.0) solve_fail("degenerate figure: C1(c) = 0");
      const double alpha = l2.inv_t(l2.T(*in.beta_ext) / c1c);
      RightTriangle out = right_from_c_alpha(*in.c, alpha, spec);
      // Prefer the directly computed leg values; they agree to rounding.
      out.a = Measure::measurable(a, l12.k);
      out.b = Measure::measurable(b, l1.k);
      return out;
    }
    // alpha and beta_ext
    {
      const double t2a = l2.T(*in.alpha);
      if (t2a == 0.0) solve_fail("degenerate figure: T2(alpha) = 0");
      const double ratio = l2.T(*in.beta_ext) / t2a;
      if (l1.k == 0) {
        // C1 is constant 1: the pair fixes no scale.
        if (std::abs(ratio - 1.0) > kSlack)
          solve_fail("inconsistent (alpha, beta') for k1 = 0");
        solve_fail("(alpha, beta') underdetermine the figure when k1 = 0");
      }
      const double c = l1.inv_c(ratio);
      return right_from_c_alpha(c, *in.alpha, spec);
    }
  } catch (const DomainError& e) {
    throw SolveError(std::string("inconsistent right-triangle inputs: ") + e.what());
  }
}

namespace {

Ordering cmp(double lhs, double rhs, double tol) {
  if (std::abs(lhs - rhs) <= tol) return Ordering::equal;
  return lhs < rhs ? Ordering::less : Ordering::greater;
}

Ordering expected_diff(Characteristic k) {
  return k == 1 ? Ordering::greater : k == 0 ? Ordering::equal : Ordering::less;
}

Ordering expected_sum(Characteristic k) {
  return k == 1 ? Ordering::less : k == 0 ? Ordering::equal : Ordering::greater;
}

}  // namespace

InequalityReport triangle_inequality_class(const TriangleSolution& sol,
                                           const Specification& spec) {
  const double a = sol.a.value.value(), b = sol.b.value.value(), c = sol.c.value.value();
  const double alpha = sol.alpha.value.value(), gamma = sol.gamma.value.value(),
               beta_ext = sol.beta_ext.value.value();
  constexpr double tol = 1e-9;

  InequalityReport rep;
  rep.side_diff = cmp(a, std::abs(b - c), tol);
  rep.side_sum = cmp(b, a + c, tol);
  rep.angle_diff = cmp(alpha, std::abs(beta_ext - gamma), tol);
  rep.angle_sum = cmp(beta_ext, alpha + gamma, tol);

  const Characteristic k1 = spec.k(1), k2 = spec.k(2);
  rep.expected_side_diff = expected_diff(k2);
  rep.expected_side_sum = expected_sum(k2);
  rep.expected_angle_diff = expected_diff(k1);
  rep.expected_angle_sum = expected_sum(k1);
  rep.matches = rep.side_diff == rep.expected_side_diff &&
                rep.side_sum == rep.expected_side_sum &&
                rep.angle_diff == rep.expected_angle_diff &&
                rep.angle_sum == rep.expected_angle_sum;
  return rep;
}

}  // namespace ckgeom
