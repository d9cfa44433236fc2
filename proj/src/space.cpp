#include "ckgeom/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ckgeom {

namespace {

constexpr double kPairTol = 1e-9;
constexpr double kSignTol = 1e-12;

Grade gtimes(const Grade& a, const Grade& b) {
  return Grade{a.sign * b.sign, a.zeros + b.zeros};
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

Specification::Specification(std::vector<Characteristic> k, std::vector<double> scales)
    : k_(std::move(k)), scales_(std::move(scales)) {
  if (k_.empty()) throw DomainError("specification needs at least one characteristic");
  for (Characteristic ki : k_) {
    if (!is_characteristic(ki))
      throw DomainError("characteristic must be -1, 0 or 1, got " + std::to_string(ki));
  }
  if (scales_.empty()) scales_.assign(k_.size(), 1.0);
  if (scales_.size() != k_.size())
    throw ShapeError("scale count must match specification length");
  for (double r : scales_) {
    if (!(r > 0.0)) throw DomainError("scales must be positive");
  }
  grades_.resize(k_.size() + 1);
  grades_[0] = Grade{1, 0};
  for (size_t m = 1; m <= k_.size(); ++m) grades_[m] = grades_[m - 1].times(k_[m - 1]);
}

Specification Specification::parse(const std::string& text) {
  std::string body = text;
  std::string scale_part;
  if (auto pos = body.find(';'); pos != std::string::npos) {
    scale_part = body.substr(pos + 1);
    body = body.substr(0, pos);
  }
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };

  std::vector<Characteristic> ks;
  for (const std::string& tok : split(body, ',')) {
    const std::string t = trim(tok);
    if (t == "1" || t == "+1")
      ks.push_back(1);
    else if (t == "0")
      ks.push_back(0);
    else if (t == "-1")
      ks.push_back(-1);
    else
      throw ParseError("bad characteristic '" + t + "' in specification '" + text + "'");
  }
  if (ks.empty()) throw ParseError("empty specification");

  std::vector<double> scales;
  if (!scale_part.empty()) {
    const std::string sp = trim(scale_part);
    if (sp.rfind("r=", 0) != 0) throw ParseError("scales suffix must start with 'r='");
    for (const std::string& tok : split(sp.substr(2), ',')) {
      try {
        size_t used = 0;
        const double r = std::stod(trim(tok), &used);
        scales.push_back(r);
      } catch (const std::exception&) {
        throw ParseError("bad scale '" + tok + "'");
      }
    }
    if (scales.size() != ks.size()) throw ParseError("scale count must match specification length");
  }
  try {
    return Specification(std::move(ks), std::move(scales));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string Specification::str() const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (i) out += ',';
    out += std::to_string(k_[i]);
  }
  if (has_nontrivial_scales()) {
    out += ";r=";
    for (int i = 0; i < n(); ++i) {
      if (i) out += ',';
      out += format_number(scales_[i]);
    }
  }
  return out;
}

Characteristic Specification::k(int i) const {
  if (i < 1 || i > n()) throw DomainError("characteristic index out of range");
  return k_[i - 1];
}

double Specification::scale(int i) const {
  if (i < 1 || i > n()) throw DomainError("scale index out of range");
  return scales_[i - 1];
}

bool Specification::has_nontrivial_scales() const {
  return std::any_of(scales_.begin(), scales_.end(), [](double r) { return r != 1.0; });
}

std::vector<Characteristic> Specification::cumulative() const {
  std::vector<Characteristic> out(n() + 1);
  for (int m = 0; m <= n(); ++m) out[m] = grades_[m].value();
  return out;
}

int Specification::check_level(int m) const {
  if (m < 0 || m > n()) throw DomainError("cumulative index out of range");
  return m;
}

ExtendedReal Specification::k_ratio(int i, int j) const {
  const auto g = ratio_grade(i, j);
  if (!g) return ExtendedReal::undefined();
  return ExtendedReal(static_cast<double>(g->value()));
}

std::optional<Grade> Specification::ratio_grade(int i, int j) const {
  check_level(i);
  check_level(j);
  return grades_[j].over(grades_[i]);
}

Specification Specification::suffix(int first) const {
  if (first < 0 || first >= n()) throw DomainError("suffix start out of range");
  std::vector<Characteristic> ks(k_.begin() + first, k_.end());
  std::vector<double> rs(scales_.begin() + first, scales_.end());
  return Specification(std::move(ks), std::move(rs));
}

double dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Specification& spec) {
  if (x.size() != spec.ambient_dim() || y.size() != spec.ambient_dim())
    throw ShapeError("vector length must be n+1 = " + std::to_string(spec.ambient_dim()));
  double sum = 0.0;
  for (int i = 0; i <= spec.n(); ++i) {
    const int w = spec.K(i);
    if (w != 0) sum += w * x[i] * y[i];
  }
  return sum;
}

namespace {

// Radicand of the (x) product: sum over i<j of (K_i K_j / k_1) minor^2, the
// weights resolved by grade cancellation.
double cross_radicand(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                      const Specification& spec) {
  if (x.size() != spec.ambient_dim() || y.size() != spec.ambient_dim())
    throw ShapeError("vector length must be n+1 = " + std::to_string(spec.ambient_dim()));
  const Grade k1 = Grade{1, 0}.times(spec.k(1));
  double sum = 0.0;
  for (int i = 0; i <= spec.n(); ++i) {
    for (int j = i + 1; j <= spec.n(); ++j) {
      const auto w = gtimes(spec.K_grade(i), spec.K_grade(j)).over(k1);
      if (!w) continue;  // K_j carries k_1, so this only happens for zero weight anyway
      const int wv = w->value();
      if (wv == 0) continue;
      const double minor = x[i] * y[j] - x[j] * y[i];
      sum += wv * minor * minor;
    }
  }
  return sum;
}

}  // namespace

double cross_norm(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                  const Specification& spec) {
  const double r = cross_radicand(x, y, spec);
  if (r < -1e-12)
    throw DomainError("cross product radicand negative: measure has a different characteristic");
  return std::sqrt(std::max(r, 0.0));
}

Eigen::VectorXd canonical_sign(const Eigen::VectorXd& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > kSignTol) return v[i] < 0 ? Eigen::VectorXd(-v) : v;
  }
  return v;
}

Point::Point(Eigen::VectorXd coords, Specification spec)
    : x_(std::move(coords)), spec_(std::move(spec)) {
  if (x_.size() != spec_.ambient_dim())
    throw ShapeError("point needs n+1 coordinates");
  const double nn = dot(x_, x_, spec_);
  if (std::abs(nn - 1.0) > 1e-9)
    throw ImproperVector("point is not on the space sphere: x.x = " + std::to_string(nn));
}

Point Point::origin(const Specification& spec) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(spec.ambient_dim());
  x[0] = 1.0;
  return Point(std::move(x), spec);
}

Point Point::parse(const std::string& text, const Specification& spec) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      vals.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ParseError("bad coordinate '" + item + "' in point '" + text + "'");
    }
  }
  if (static_cast<int>(vals.size()) != spec.ambient_dim())
    throw ParseError("point needs " + std::to_string(spec.ambient_dim()) + " coordinates");
  Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(vals.data(), vals.size());
  return normalize_point(v, spec);
}

std::string Point::str() const {
  std::string out;
  for (int i = 0; i < x_.size(); ++i) {
    if (i) out += ':';
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.12g", x_[i]);
    out += buf;
  }
  return out;
}

Point normalize_point(const Eigen::VectorXd& v, const Specification& spec) {
  const double nn = dot(v, v, spec);
  if (nn <= 1e-12)
    throw ImproperVector("vector cannot be normalized onto the space sphere (v.v = " +
                         std::to_string(nn) + ")");
  return Point(canonical_sign(v / std::sqrt(nn)), spec);
}

std::pair<PairClass, Measure> classify_pair(const Point& X, const Point& Y) {
  if (!(X.spec() == Y.spec())) throw ShapeError("points live in different spaces");
  const Specification& spec = X.spec();
  const Eigen::VectorXd xa = canonical_sign(X.coords());
  const Eigen::VectorXd ya = canonical_sign(Y.coords());
  const Characteristic k1 = spec.k(1);

  if ((xa - ya).lpNorm<Eigen::Infinity>() <= kPairTol)
    return {PairClass::coincident, Measure::measurable(0.0, k1)};

  const double w = dot(xa, ya, spec);

  if (k1 == 1) {
    if (std::abs(w) > 1.0 + kPairTol)
      throw DomainError("pair not measurable under elliptic distance: |X.Y| > 1");
    const double d = inverse_c(std::clamp(w, -1.0, 1.0), 1);
    return {PairClass::measurable, Measure::measurable(d, 1)};
  }

  if (k1 == -1) {
    const double aw = std::abs(w);
    if (aw > 1.0 + kPairTol) {
      const double d = inverse_c(std::max(aw, 1.0), -1);
      return {PairClass::measurable, Measure::measurable(d, -1)};
    }
    if (aw >= 1.0 - kPairTol)
      return {PairClass::limit, Measure{ExtendedReal(0.0), -1, MeasureClass::limit}};
    // Unconnectable pair: the measure exists but is elliptic.
    const double d = inverse_c(aw, 1);
    return {PairClass::generalized, Measure{ExtendedReal(d), 1, MeasureClass::generalized}};
  }

  // k1 == 0: X.Y = 1 identically; the distance comes from the (x) product.
  const double r = cross_radicand(xa, ya, spec);
  if (r > 1e-18)
    return {PairClass::measurable, Measure::measurable(std::sqrt(r), 0)};
  if (r < -1e-18)
    return {PairClass::generalized,
            Measure{ExtendedReal(std::sqrt(-r)), 0, MeasureClass::generalized}};

  // Zero primary distance between distinct points: classify one level down.
  if (spec.n() >= 2) {
    try {
      const Specification sub = spec.suffix(1);
      const Point Xs = normalize_point(xa.tail(xa.size() - 1), sub);
      const Point Ys = normalize_point(ya.tail(ya.size() - 1), sub);
      auto [cls, m] = classify_pair(Xs, Ys);
      (void)cls;
      m.klass = MeasureClass::generalized;
      return {PairClass::generalized, m};
    } catch (const Error&) {
      // fall through to the undefined measure below
    }
  }
  return {PairClass::generalized,
          Measure{ExtendedReal::undefined(), spec.n() >= 2 ? spec.k(2) : 0,
                  MeasureClass::immeasurable}};
}

}  // namespace ckgeom
