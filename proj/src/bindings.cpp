// Python bindings for the main pipeline: build a system, solve, locate
// zeros, run the claim verifiers.  Multi-indices cross the boundary as
// plain lists of ints.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mopuc/json_io.hpp"
#include "mopuc/zeros.hpp"

namespace py = pybind11;
using namespace mopuc;

namespace {

MultiIndex idx(const std::vector<int>& n) { return MultiIndex(n); }

std::vector<std::string> class_names(const std::vector<RootClass>& classes) {
  std::vector<std::string> out;
  out.reserve(classes.size());
  for (RootClass c : classes) out.emplace_back(root_class_name(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Laurent-type multiple orthogonal polynomials on the unit circle";

  py::register_exception<Error>(m, "Error");

  py::class_<MeasureSystem>(m, "MeasureSystem")
      .def_property_readonly("r", &MeasureSystem::r)
      .def_property_readonly("t0", &MeasureSystem::t0)
      .def_property_readonly("label", &MeasureSystem::label)
      .def_property_readonly(
          "tag", [](const MeasureSystem& s) { return std::string(tag_name(s.tag())); })
      .def_property_readonly(
          "arcs",
          [](const MeasureSystem& s) {
            std::vector<std::pair<double, double>> arcs;
            for (const Component& c : s.components()) {
              arcs.emplace_back(c.arc.alpha, c.arc.beta);
            }
            return arcs;
          })
      .def("to_json", [](const MeasureSystem& s) { return system_to_json(s).dump(2); })
      .def("__repr__", [](const MeasureSystem& s) {
        return "<MeasureSystem " + (s.label().empty() ? "custom" : s.label()) +
               " r=" + std::to_string(s.r()) + ">";
      });

  m.def("preset", &preset, py::arg("name"),
        "Named system: SYS-LEB, SYS-BS:<a>, SYS-A2, SYS-AT2, ...");
  m.def(
      "load_system", [](const std::string& path) { return load_system_file(path); },
      py::arg("path"));
  m.def(
      "system_from_json",
      [](const std::string& text) { return system_from_json(json::parse(text)); },
      py::arg("text"));

  py::class_<HalfLaurentPoly>(m, "HalfLaurentPoly")
      .def(py::init<int, std::vector<cplx>>(), py::arg("two_min"), py::arg("coeffs"))
      .def_property_readonly("is_zero", &HalfLaurentPoly::is_zero)
      .def_property_readonly("two_min", &HalfLaurentPoly::two_min)
      .def_property_readonly("two_max", &HalfLaurentPoly::two_max)
      .def_property_readonly("coeffs", &HalfLaurentPoly::coeffs)
      .def(
          "__call__",
          [](const HalfLaurentPoly& p, cplx z, double t0) {
            return eval(p, z, Branch{t0});
          },
          py::arg("z"), py::arg("t0") = 0.0)
      .def("__repr__", [](const HalfLaurentPoly& p) {
        return "<HalfLaurentPoly " + (p.is_zero() ? std::string("0")
                                                  : poly_to_json(p).dump()) + ">";
      });

  m.def("sharp", &sharp, py::arg("p"));
  m.def("shift_half", &shift_half, py::arg("p"), py::arg("two_shift"));

  py::class_<MomentEngine>(m, "MomentEngine")
      .def(py::init<MeasureSystem, int, int>(), py::arg("system"),
           py::arg("nodes_per_panel") = 32, py::arg("panel_factor") = 1)
      .def_property_readonly("system", &MomentEngine::system)
      .def("moment", &MomentEngine::moment, py::arg("j"), py::arg("two_t"),
           "m_j(two_t / 2)");

  py::class_<NormalityReport>(m, "NormalityReport")
      .def_readonly("sigma_min", &NormalityReport::sigma_min)
      .def_readonly("sigma_max", &NormalityReport::sigma_max)
      .def_readonly("ratio", &NormalityReport::ratio)
      .def_property_readonly(
          "verdict",
          [](const NormalityReport& r) { return std::string(verdict_name(r.verdict)); });

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("poly", &SolveResult::poly)
      .def_readonly("report", &SolveResult::report)
      .def_readonly("residuals", &SolveResult::residuals)
      .def_readonly("scale", &SolveResult::scale)
      .def_readonly("alpha", &SolveResult::alpha)
      .def_readonly("beta", &SolveResult::beta);

  m.def(
      "solve_phi",
      [](const MomentEngine& e, const std::vector<int>& n) {
        return solve_phi(e, idx(n));
      },
      py::arg("engine"), py::arg("n"));
  m.def(
      "solve_phi_sharp",
      [](const MomentEngine& e, const std::vector<int>& n) {
        return solve_phi_sharp(e, idx(n));
      },
      py::arg("engine"), py::arg("n"));
  m.def(
      "solve_hp",
      [](const MomentEngine& e, const std::vector<int>& n, const std::vector<int>& m_) {
        return solve_hp(e, idx(n), idx(m_));
      },
      py::arg("engine"), py::arg("n"), py::arg("m"));
  m.def(
      "solve_hp_star",
      [](const MomentEngine& e, const std::vector<int>& n, const std::vector<int>& m_) {
        return solve_hp_star(e, idx(n), idx(m_));
      },
      py::arg("engine"), py::arg("n"), py::arg("m"));

  py::class_<ParaPoly>(m, "ParaPoly")
      .def_readonly("x", &ParaPoly::x)
      .def_readonly("tau", &ParaPoly::tau);

  m.def("build_para", &build_para, py::arg("phi"), py::arg("tau"));
  m.def(
      "trig_form",
      [](const ParaPoly& p, double t0) {
        std::vector<std::tuple<int, double, double>> out;
        for (const TrigCoeff& t : trig_form(p, Branch{t0})) {
          out.emplace_back(t.two_j, t.a, t.b);
        }
        return out;
      },
      py::arg("para"), py::arg("t0") = 0.0,
      "(two_j, a, b) triples: a cos(two_j t/2) + b sin(two_j t/2)");

  py::class_<ZeroReport>(m, "ZeroReport")
      .def_readonly("roots", &ZeroReport::roots)
      .def_property_readonly(
          "classes", [](const ZeroReport& r) { return class_names(r.classes); })
      .def_readonly("n_plus", &ZeroReport::n_plus)
      .def_readonly("n_on", &ZeroReport::n_on)
      .def_readonly("n_minus", &ZeroReport::n_minus)
      .def_readonly("per_arc", &ZeroReport::per_arc)
      .def_readonly("outside_arcs", &ZeroReport::outside_arcs)
      .def_readonly("min_pairwise_gap", &ZeroReport::min_pairwise_gap);

  m.def("zero_report", &zero_report, py::arg("system"), py::arg("poly"),
        py::arg("tol_circle") = 1e-8);
  m.def("find_roots", &find_roots, py::arg("coeffs"));

  py::class_<DiskVerdict>(m, "DiskVerdict")
      .def_readonly("pass_", &DiskVerdict::pass)
      .def_readonly("failure", &DiskVerdict::failure)
      .def_readonly("zeros", &DiskVerdict::zeros);

  py::class_<CircleVerdict>(m, "CircleVerdict")
      .def_readonly("tau", &CircleVerdict::tau)
      .def_readonly("pass_", &CircleVerdict::pass)
      .def_readonly("failure", &CircleVerdict::failure)
      .def_readonly("zeros", &CircleVerdict::zeros);

  m.def(
      "verify_zeros_in_disk",
      [](const MomentEngine& e, const std::vector<int>& n) {
        return verify_zeros_in_disk(e, idx(n));
      },
      py::arg("engine"), py::arg("n"));
  m.def(
      "verify_circle_zeros",
      [](const MomentEngine& e, const std::vector<int>& n,
         const std::vector<cplx>& taus) {
        return verify_circle_zeros(e, idx(n), taus);
      },
      py::arg("engine"), py::arg("n"), py::arg("taus"));
}
