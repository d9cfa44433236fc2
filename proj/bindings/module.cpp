#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ckgeom/classify.hpp"
#include "ckgeom/lineal.hpp"
#include "ckgeom/motion.hpp"
#include "ckgeom/space.hpp"
#include "ckgeom/triangle.hpp"

namespace py = pybind11;
using namespace ckgeom;

namespace {

py::object ext_to_py(const ExtendedReal& v) {
  if (v.is_undefined()) return py::none();
  return py::float_(v.as_double());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Uniform model of geometric spaces: one specification vector "
            "{k_1,...,k_n} drives trigonometry, motions, triangle laws, "
            "lineal calculus and volumes.";

  py::register_exception<Error>(m, "GeometryError");
  py::register_exception<ParseError>(m, "TextParseError");

  // generalized trigonometry
  m.def("c_fn", &scaled_c_fn, py::arg("x"), py::arg("k"), py::arg("r") = 1.0);
  m.def("s_fn", &scaled_s_fn, py::arg("x"), py::arg("k"), py::arg("r") = 1.0);
  m.def(
      "t_fn", [](double x, int k, double r) { return ext_to_py(scaled_t_fn(x, k, r)); },
      py::arg("x"), py::arg("k"), py::arg("r") = 1.0);
  m.def("inverse_c", &inverse_c, py::arg("v"), py::arg("k"));
  m.def("inverse_s", &inverse_s, py::arg("v"), py::arg("k"));
  m.def(
      "inverse_t", [](double v, int k) { return inverse_t(ExtendedReal(v), k); },
      py::arg("v"), py::arg("k"));

  py::class_<Specification>(m, "Specification")
      .def(py::init([](std::vector<int> k, std::optional<std::vector<double>> scales) {
             return Specification(std::move(k), scales.value_or(std::vector<double>{}));
           }),
           py::arg("k"), py::arg("scales") = py::none())
      .def_static("parse", &Specification::parse, py::arg("text"))
      .def("__str__", &Specification::str)
      .def("__repr__",
           [](const Specification& s) { return "Specification('" + s.str() + "')"; })
      .def("__eq__", [](const Specification& a, const Specification& b) { return a == b; })
      .def_property_readonly("n", &Specification::n)
      .def_property_readonly("ks", &Specification::ks)
      .def_property_readonly("scales", &Specification::scales)
      .def("k", &Specification::k, py::arg("i"))
      .def("scale", &Specification::scale, py::arg("i"))
      .def("cumulative", &Specification::cumulative)
      .def(
          "k_ratio",
          [](const Specification& s, int i, int j) { return ext_to_py(s.k_ratio(i, j)); },
          py::arg("i"), py::arg("j"));

  py::class_<Measure>(m, "Measure")
      .def_property_readonly("value", [](const Measure& v) { return ext_to_py(v.value); })
      .def_readonly("characteristic", &Measure::characteristic)
      .def_property_readonly("klass",
                             [](const Measure& v) { return std::string(to_string(v.klass)); })
      .def("__repr__", [](const Measure& v) {
        return "Measure(" + v.value.str() + ", k=" + std::to_string(v.characteristic) +
               ", " + to_string(v.klass) + ")";
      });

  // points and products
  m.def("dot", &dot, py::arg("x"), py::arg("y"), py::arg("spec"));
  m.def("cross_norm", &cross_norm, py::arg("x"), py::arg("y"), py::arg("spec"));
  m.def(
      "normalize_point",
      [](const Eigen::VectorXd& v, const Specification& s) {
        return normalize_point(v, s).coords();
      },
      py::arg("v"), py::arg("spec"));
  m.def(
      "classify_pair",
      [](const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Specification& s) {
        auto [cls, measure] = classify_pair(Point(x, s), Point(y, s));
        return py::make_tuple(std::string(to_string(cls)), measure);
      },
      py::arg("x"), py::arg("y"), py::arg("spec"));

  // motions
  py::class_<Motion>(m, "Motion")
      .def_static("identity", &Motion::identity, py::arg("spec"))
      .def_static("from_matrix", &Motion::from_matrix, py::arg("matrix"), py::arg("spec"))
      .def_property_readonly("matrix", &Motion::matrix)
      .def_property_readonly("spec", &Motion::spec)
      .def("__matmul__", &compose);

  m.def("main_rotation", &main_rotation, py::arg("i"), py::arg("phi"), py::arg("spec"));
  m.def("rotation_ij", &rotation_ij, py::arg("i"), py::arg("j"), py::arg("phi"),
        py::arg("spec"));
  m.def("translation", &translation, py::arg("i"), py::arg("phi"), py::arg("spec"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("inverse", &inverse, py::arg("m"));
  m.def(
      "apply", [](const Motion& mo, const Eigen::VectorXd& v) { return apply_raw(mo, v); },
      py::arg("m"), py::arg("v"));
  m.def("is_generalized_orthogonal", &is_generalized_orthogonal, py::arg("matrix"),
        py::arg("spec"), py::arg("tol") = 1e-9);
  m.def("is_proper", &is_proper, py::arg("m"));
  m.def(
      "decompose",
      [](const Motion& mo) {
        const Decomposition d = decompose(mo);
        py::list steps;
        for (const auto& s : d.steps) {
          py::dict e;
          e["i"] = s.i;
          e["j"] = s.j;
          e["phi"] = s.phi;
          e["kind"] = std::string(to_string(s.kind));
          steps.append(e);
        }
        return py::make_tuple(d.reflection.diagonal, steps);
      },
      py::arg("m"));

  // triangles
  py::class_<TriangleSolution>(m, "TriangleSolution")
      .def_readonly("a", &TriangleSolution::a)
      .def_readonly("b", &TriangleSolution::b)
      .def_readonly("c", &TriangleSolution::c)
      .def_readonly("alpha", &TriangleSolution::alpha)
      .def_readonly("gamma", &TriangleSolution::gamma)
      .def_readonly("beta_ext", &TriangleSolution::beta_ext)
      .def_readonly("beta_int", &TriangleSolution::beta_int);

  py::class_<RightTriangle>(m, "RightTriangle")
      .def_readonly("a", &RightTriangle::a)
      .def_readonly("b", &RightTriangle::b)
      .def_readonly("c", &RightTriangle::c)
      .def_readonly("alpha", &RightTriangle::alpha)
      .def_readonly("beta_ext", &RightTriangle::beta_ext);

  m.def("cosine1_side", &cosine1_side, py::arg("b"), py::arg("c"), py::arg("alpha"),
        py::arg("spec"));
  m.def("sine_ratio", &sine_ratio, py::arg("side"), py::arg("angle"), py::arg("spec"));
  m.def("cosine2_angle", &cosine2_angle, py::arg("beta_ext"), py::arg("gamma"), py::arg("a"),
        py::arg("spec"));
  m.def("solve_sas", &solve_sas, py::arg("b"), py::arg("c"), py::arg("alpha"), py::arg("spec"));
  m.def(
      "right_solve",
      [](const Specification& spec, std::optional<double> a, std::optional<double> b,
         std::optional<double> c, std::optional<double> alpha,
         std::optional<double> beta_ext) {
        RightKnowns in{a, b, c, alpha, beta_ext};
        return right_relations(in, spec);
      },
      py::arg("spec"), py::arg("a") = py::none(), py::arg("b") = py::none(),
      py::arg("c") = py::none(), py::arg("alpha") = py::none(),
      py::arg("beta_ext") = py::none());
  m.def("right_relation_residuals", &right_relation_residuals, py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("alpha"), py::arg("beta_ext"), py::arg("spec"));

  // lineals and volumes
  py::class_<Lineal>(m, "Lineal")
      .def_static(
          "from_columns",
          [](const Motion& mo, const std::vector<int>& idx) {
            return Lineal::from_columns(mo, idx);
          },
          py::arg("motion"), py::arg("indices"))
      .def_static("from_basis", &Lineal::from_basis, py::arg("basis"), py::arg("spec"))
      .def_property_readonly("basis", &Lineal::basis)
      .def_property_readonly("dim", &Lineal::dim)
      .def_property_readonly("improper", &Lineal::improper)
      .def_property_readonly("leading_weight", &Lineal::leading_weight)
      .def_property_readonly("derived_spec", &Lineal::derived_spec);

  m.def(
      "state_matrix",
      [](const Eigen::MatrixXd& v, const Specification& s) {
        return state_matrix(CoordinateMatrix(v, s));
      },
      py::arg("vectors"), py::arg("spec"));
  m.def(
      "parallelepiped_volume",
      [](const Eigen::MatrixXd& v, const Specification& s) {
        return parallelepiped_volume(CoordinateMatrix(v, s));
      },
      py::arg("vectors"), py::arg("spec"));
  m.def(
      "project",
      [](const Eigen::VectorXd& v, const Lineal& l) {
        auto [on, perp] = project(v, l);
        return py::make_tuple(on, perp);
      },
      py::arg("v"), py::arg("lineal"));
  m.def("canonical_basis", &canonical_basis, py::arg("lineal"));
  m.def("change_basis", &change_basis, py::arg("lineal"), py::arg("interior"));
  m.def("orthogonal_completion", &orthogonal_completion, py::arg("lineal"));
  m.def("transformed", &transformed, py::arg("motion"), py::arg("lineal"));
  m.def(
      "measure_between",
      [](const Lineal& x, const Lineal& y) {
        auto [phi, psi] = measure_between(x, y);
        return py::make_tuple(phi, psi);
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "cone_volume",
      [](const Eigen::MatrixXd& vertices, const Specification& s, std::uint64_t samples,
         std::uint64_t seed) {
        const ConeVolume r = cone_volume(vertices, s, samples, seed);
        return py::make_tuple(r.value, r.std_error, r.samples);
      },
      py::arg("vertices"), py::arg("spec"), py::arg("samples") = 1000000,
      py::arg("seed") = 1);

  // classification
  m.def(
      "spec_from_quadric",
      [](const std::vector<int>& signs, bool linear) {
        return spec_from_quadric(QuadricSignature{signs, linear});
      },
      py::arg("signs"), py::arg("linear") = true);
  m.def("quadric_signs", &quadric_signs, py::arg("spec"), py::arg("linear") = true);
  m.def("preset", &preset, py::arg("name"), py::arg("n") = 0);
  m.def("preset_names", &preset_names);
  m.def("curvature", &curvature, py::arg("spec"));
}
