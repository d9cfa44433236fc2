#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "ckgeom/classify.hpp"
#include "ckgeom/lineal.hpp"
#include "ckgeom/motion.hpp"
#include "ckgeom/space.hpp"
#include "ckgeom/text_io.hpp"
#include "ckgeom/triangle.hpp"

namespace {

using ckgeom::ExtendedReal;
using ckgeom::format_number;

class Emitter {
 public:
  explicit Emitter(bool json) : json_(json) {}

  void number(const std::string& key, double v) {
    if (json_)
      obj_[key] = v;
    else
      text_ += key + " = " + format_number(v) + "\n";
  }
  void extended(const std::string& key, const ExtendedReal& v) {
    if (v.is_finite()) {
      number(key, v.value());
      return;
    }
    if (json_)
      obj_[key] = v.str();
    else
      text_ += key + " = " + v.str() + "\n";
  }
  void integer(const std::string& key, long long v) {
    if (json_)
      obj_[key] = v;
    else
      text_ += key + " = " + std::to_string(v) + "\n";
  }
  void string(const std::string& key, const std::string& v) {
    if (json_)
      obj_[key] = v;
    else
      text_ += key + " = " + v + "\n";
  }
  void raw(const nlohmann::ordered_json& j, const std::string& key, const std::string& line) {
    if (json_)
      obj_[key] = j;
    else
      text_ += line + "\n";
  }
  // Single-value commands print just the value in text mode.
  void bare_number(double v) { bare_ = format_number(v), obj_["value"] = v; }
  void bare_extended(const ExtendedReal& v) {
    if (v.is_finite()) {
      bare_number(v.value());
    } else {
      bare_ = v.str();
      obj_["value"] = v.str();
    }
  }
  void bare_string(const std::string& s) { bare_ = s, obj_["value"] = s; }

  void flush() {
    if (json_) {
      std::cout << obj_.dump() << "\n";
    } else if (!bare_.empty()) {
      std::cout << bare_ << "\n";
    } else {
      std::cout << text_;
    }
  }

 private:
  bool json_;
  nlohmann::ordered_json obj_ = nlohmann::ordered_json::object();
  std::string text_;
  std::string bare_;
};

void add_format(CLI::App* cmd, std::string* fmt) {
  cmd->add_option("--format", *fmt, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void emit_measure(Emitter& out, const std::string& name, const ckgeom::Measure& m) {
  out.extended(name, m.value);
  out.integer(name + ".characteristic", m.characteristic);
  out.string(name + ".class", ckgeom::to_string(m.klass));
}

int run(int argc, char** argv) {
  CLI::App app{"Uniform geometric-space calculator: one specification vector "
               "{k_1,...,k_n}, k in {-1,0,1}, drives trigonometry, motions, "
               "triangles, lineal measures and volumes.\n"
               "Specifications: '-1,1,1' with optional scales ';r=2,1,1'. "
               "Matrices: rows split by ';', entries by ','; basis matrices "
               "hold their vectors as columns."};
  app.require_subcommand(1);

  // trig
  auto* trig = app.add_subcommand("trig", "Evaluate a generalized trigonometric function");
  int trig_k = 1;
  std::string trig_fn;
  double trig_x = 0.0, trig_r = 1.0;
  std::string trig_fmt = "text";
  trig->add_option("--k", trig_k, "Characteristic (-1, 0 or 1)")->required();
  trig->add_option("--fn", trig_fn, "Function: c, s or t")
      ->required()
      ->check(CLI::IsMember({"c", "s", "t"}));
  trig->add_option("--x", trig_x, "Argument")->required();
  trig->add_option("--r", trig_r, "Scale parameter (default 1)");
  add_format(trig, &trig_fmt);
  trig->callback([&] {
    Emitter out(trig_fmt == "json");
    if (trig_fn == "c")
      out.bare_number(ckgeom::scaled_c_fn(trig_x, trig_k, trig_r));
    else if (trig_fn == "s")
      out.bare_number(ckgeom::scaled_s_fn(trig_x, trig_k, trig_r));
    else
      out.bare_extended(ckgeom::scaled_t_fn(trig_x, trig_k, trig_r));
    out.flush();
  });

  // classify
  auto* classify = app.add_subcommand("classify", "Infer a specification from a quadric "
                                                  "signature or look up a named space");
  std::string cls_quadric, cls_preset;
  bool cls_linear = false;
  int cls_n = 0;
  std::string cls_fmt = "text";
  classify->add_option("--quadric", cls_quadric,
                       "Diagonal signs of the quadric form, e.g. \"+,-,-,-\"");
  classify->add_flag("--linear", cls_linear, "The space is affine/linear (k_1 = 0)");
  classify->add_option("--preset", cls_preset, "Named space (euclidean, elliptic, hyperbolic, "
                                               "minkowski, galilean, cylinder-complete)");
  classify->add_option("--n", cls_n, "Dimension for presets that take one");
  add_format(classify, &cls_fmt);
  classify->callback([&] {
    Emitter out(cls_fmt == "json");
    if (cls_quadric.empty() == cls_preset.empty())
      throw ckgeom::ParseError("classify needs exactly one of --quadric or --preset");
    ckgeom::Specification spec =
        cls_preset.empty()
            ? ckgeom::spec_from_quadric({ckgeom::parse_signs(cls_quadric), cls_linear})
            : ckgeom::preset(cls_preset, cls_n);
    out.bare_string(spec.str());
    out.flush();
  });

  // triangle
  auto* triangle = app.add_subcommand("triangle", "Triangle solvers");
  triangle->require_subcommand(1);

  auto* sas = triangle->add_subcommand("sas", "Solve side-angle-side");
  std::string sas_spec;
  double sas_b = 0, sas_c = 0, sas_alpha = 0;
  std::string sas_fmt = "text";
  sas->add_option("--spec", sas_spec, "Space specification")->required();
  sas->add_option("--b", sas_b, "Side b")->required();
  sas->add_option("--c", sas_c, "Side c")->required();
  sas->add_option("--alpha", sas_alpha, "Included angle")->required();
  add_format(sas, &sas_fmt);
  sas->callback([&] {
    Emitter out(sas_fmt == "json");
    const auto spec = ckgeom::Specification::parse(sas_spec);
    const auto sol = ckgeom::solve_sas(sas_b, sas_c, sas_alpha, spec);
    out.number("a", sol.a.value.value());
    out.number("gamma", sol.gamma.value.value());
    out.number("beta_ext", sol.beta_ext.value.value());
    if (sol.beta_int) out.number("beta", sol.beta_int->value.value());
    out.flush();
  });

  auto* right = triangle->add_subcommand("right", "Solve a right quasi-triangle from two "
                                                  "known quantities");
  std::string right_spec;
  std::string right_fmt = "text";
  std::optional<double> r_a, r_b, r_c, r_alpha, r_beta;
  double ra = 0, rb = 0, rc = 0, ral = 0, rbe = 0;
  right->add_option("--spec", right_spec, "Space specification")->required();
  auto* oa = right->add_option("--a", ra, "Leg a (mixed characteristic k1 k2)");
  auto* ob = right->add_option("--b", rb, "Leg b");
  auto* oc = right->add_option("--c", rc, "Hypotenuse c");
  auto* oal = right->add_option("--alpha", ral, "Angle alpha");
  auto* obe = right->add_option("--beta-ext", rbe, "Exterior angle beta'");
  add_format(right, &right_fmt);
  right->callback([&] {
    Emitter out(right_fmt == "json");
    const auto spec = ckgeom::Specification::parse(right_spec);
    ckgeom::RightKnowns in;
    if (oa->count()) in.a = ra;
    if (ob->count()) in.b = rb;
    if (oc->count()) in.c = rc;
    if (oal->count()) in.alpha = ral;
    if (obe->count()) in.beta_ext = rbe;
    const int given = int(in.a.has_value()) + int(in.b.has_value()) + int(in.c.has_value()) +
                      int(in.alpha.has_value()) + int(in.beta_ext.has_value());
    if (given != 2)
      throw ckgeom::ParseError("triangle right needs exactly two known quantities");
    const auto sol = ckgeom::right_relations(in, spec);
    if (!in.a) {
      out.number("a", sol.a.value.value());
      out.integer("a.characteristic", sol.a.characteristic);
    }
    if (!in.b) out.number("b", sol.b.value.value());
    if (!in.c) out.number("c", sol.c.value.value());
    if (!in.alpha) out.number("alpha", sol.alpha.value.value());
    if (!in.beta_ext) out.number("beta_ext", sol.beta_ext.value.value());
    out.flush();
  });

  // motion decompose
  auto* motion = app.add_subcommand("motion", "Motion-matrix operations");
  motion->require_subcommand(1);
  auto* dec = motion->add_subcommand("decompose", "Factor a motion into a reflection and "
                                                  "rotation steps");
  std::string dec_spec, dec_matrix;
  std::string dec_fmt = "text";
  dec->add_option("--spec", dec_spec, "Space specification")->required();
  dec->add_option("--matrix", dec_matrix, "Motion matrix")->required();
  add_format(dec, &dec_fmt);
  dec->callback([&] {
    Emitter out(dec_fmt == "json");
    const auto spec = ckgeom::Specification::parse(dec_spec);
    const auto m = ckgeom::Motion::from_matrix(ckgeom::parse_matrix(dec_matrix), spec);
    const auto d = ckgeom::decompose(m);
    std::string refl;
    for (size_t i = 0; i < d.reflection.diagonal.size(); ++i) {
      if (i) refl += ',';
      refl += std::to_string(d.reflection.diagonal[i]);
    }
    out.raw(d.reflection.diagonal, "reflection", "reflection = " + refl);
    if (dec_fmt == "json") {
      nlohmann::ordered_json steps = nlohmann::ordered_json::array();
      for (const auto& s : d.steps) {
        steps.push_back({{"i", s.i}, {"j", s.j}, {"kind", ckgeom::to_string(s.kind)},
                         {"phi", s.phi}});
      }
      out.raw(steps, "steps", "");
    } else {
      out.integer("steps", static_cast<long long>(d.steps.size()));
      for (size_t t = 0; t < d.steps.size(); ++t) {
        const auto& s = d.steps[t];
        out.string("step[" + std::to_string(t) + "]",
                   "i=" + std::to_string(s.i) + " j=" + std::to_string(s.j) +
                       " kind=" + ckgeom::to_string(s.kind) + " phi=" + format_number(s.phi));
      }
    }
    out.flush();
  });

  // lineal measure
  auto* lineal = app.add_subcommand("lineal", "Lineal operations");
  lineal->require_subcommand(1);
  auto* lm = lineal->add_subcommand("measure", "Measures (phi, psi) between two lineals");
  std::string lm_spec, lm_x, lm_y;
  std::string lm_fmt = "text";
  lm->add_option("--spec", lm_spec, "Space specification")->required();
  lm->add_option("--x", lm_x, "Basis matrix of the first lineal (columns)")->required();
  lm->add_option("--y", lm_y, "Basis matrix of the second lineal (columns)")->required();
  add_format(lm, &lm_fmt);
  lm->callback([&] {
    Emitter out(lm_fmt == "json");
    const auto spec = ckgeom::Specification::parse(lm_spec);
    auto lx = ckgeom::Lineal::from_basis(ckgeom::parse_matrix(lm_x), spec);
    auto ly = ckgeom::Lineal::from_basis(ckgeom::parse_matrix(lm_y), spec);
    if (lx.dim() > ly.dim()) std::swap(lx, ly);
    const auto [phi, psi] = ckgeom::measure_between(lx, ly);
    emit_measure(out, "phi", phi);
    emit_measure(out, "psi", psi);
    out.flush();
  });

  // volume
  auto* volume = app.add_subcommand("volume", "Volume calculators");
  volume->require_subcommand(1);

  auto* vp = volume->add_subcommand("parallelepiped", "Volume from the state-matrix "
                                                      "determinant");
  std::string vp_spec, vp_matrix;
  std::string vp_fmt = "text";
  vp->add_option("--spec", vp_spec, "Space specification")->required();
  vp->add_option("--matrix", vp_matrix, "Coordinate matrix (vectors as columns)")->required();
  add_format(vp, &vp_fmt);
  vp->callback([&] {
    Emitter out(vp_fmt == "json");
    const auto spec = ckgeom::Specification::parse(vp_spec);
    const ckgeom::CoordinateMatrix cm(ckgeom::parse_matrix(vp_matrix), spec);
    out.number("volume", ckgeom::parallelepiped_volume(cm));
    out.flush();
  });

  auto* vc = volume->add_subcommand("cone", "Monte-Carlo volume of a simplex figure on the "
                                            "space sphere");
  std::string vc_spec, vc_vertices;
  std::uint64_t vc_samples = 1000000, vc_seed = 1;
  std::string vc_fmt = "text";
  vc->add_option("--spec", vc_spec, "Space specification")->required();
  vc->add_option("--vertices", vc_vertices, "Vertex matrix (vertices as columns)")->required();
  vc->add_option("--samples", vc_samples, "Sample count (default 1000000)");
  vc->add_option("--seed", vc_seed, "RNG seed (default 1)");
  add_format(vc, &vc_fmt);
  vc->callback([&] {
    Emitter out(vc_fmt == "json");
    const auto spec = ckgeom::Specification::parse(vc_spec);
    const auto res =
        ckgeom::cone_volume(ckgeom::parse_matrix(vc_vertices), spec, vc_samples, vc_seed);
    out.number("volume", res.value);
    out.number("std_error", res.std_error);
    out.integer("samples", static_cast<long long>(res.samples));
    out.flush();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ckgeom::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ckgeom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
