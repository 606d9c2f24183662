#include "mopuc/json_io.hpp"

#include <fstream>

namespace mopuc {

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) {
    return cplx(j[0].get<double>(), j[1].get<double>());
  }
  fail(errc::config_parse, "complex values are numbers or [re, im] pairs");
}

json poly_to_json(const HalfLaurentPoly& p) {
  json coeffs = json::array();
  for (const cplx& c : p.coeffs()) coeffs.push_back(cplx_to_json(c));
  return json{{"two_min", p.is_zero() ? 0 : p.two_min()}, {"coeffs", coeffs}};
}

HalfLaurentPoly poly_from_json(const json& j) {
  std::vector<cplx> coeffs;
  for (const json& c : j.at("coeffs")) coeffs.push_back(cplx_from_json(c));
  return HalfLaurentPoly(j.at("two_min").get<int>(), std::move(coeffs));
}

json report_to_json(const NormalityReport& rep) {
  json out{{"sigma_min", rep.sigma_min},
           {"sigma_max", rep.sigma_max},
           {"ratio", rep.ratio},
           {"verdict", verdict_name(rep.verdict)}};
  if (rep.det_available) out["det"] = cplx_to_json(rep.det);
  return out;
}

json solve_to_json(const SolveResult& res) {
  json out{{"poly", poly_to_json(res.poly)},
           {"report", report_to_json(res.report)},
           {"residuals", res.residuals},
           {"scale", res.scale}};
  if (res.alpha) out["alpha"] = cplx_to_json(*res.alpha);
  if (res.beta) out["beta"] = cplx_to_json(*res.beta);
  return out;
}

json zeros_to_json(const ZeroReport& rep) {
  json roots = json::array();
  json classes = json::array();
  for (size_t i = 0; i < rep.roots.size(); ++i) {
    roots.push_back(cplx_to_json(rep.roots[i]));
    classes.push_back(root_class_name(rep.classes[i]));
  }
  json clusters = json::array();
  for (const auto& g : rep.clusters) clusters.push_back(g);
  return json{{"roots", roots},
              {"classes", classes},
              {"n_plus", rep.n_plus},
              {"n_on", rep.n_on},
              {"n_minus", rep.n_minus},
              {"per_arc", rep.per_arc},
              {"outside_arcs", rep.outside_arcs},
              {"min_pairwise_gap", rep.min_pairwise_gap},
              {"clusters", clusters},
              {"tol_circle", rep.tol_circle}};
}

json phase_summary_to_json(const PhaseReport& rep) {
  return json{{"winding", rep.winding},
              {"winding_residual", rep.winding_residual},
              {"monotone", rep.monotone},
              {"min_abs_derivative", rep.min_abs_derivative},
              {"grid", rep.theta.empty() ? 0 : rep.theta.size() - 1}};
}

json chebyshev_to_json(const ChebyshevReport& rep) {
  return json{{"trials", rep.trials},
              {"min_abs", rep.min_abs},
              {"max_abs", rep.max_abs},
              {"positive", rep.positive},
              {"negative", rep.negative},
              {"zero", rep.zero},
              {"signs_consistent", rep.signs_consistent}};
}

json trig_to_json(const std::vector<TrigCoeff>& trig) {
  json out = json::array();
  for (const TrigCoeff& t : trig) {
    out.push_back(json{{"two_j", t.two_j}, {"a", t.a}, {"b", t.b}});
  }
  return out;
}

json disk_to_json(const MultiIndex& n, const DiskVerdict& v) {
  return json{{"n", n.str()},
              {"pass", v.pass},
              {"failure", v.failure},
              {"solve", solve_to_json(v.solve)},
              {"zeros", zeros_to_json(v.zeros)},
              {"phase", phase_summary_to_json(v.phase)}};
}

json circle_to_json(const MultiIndex& n, const CircleVerdict& v) {
  return json{{"n", n.str()},
              {"tau", cplx_to_json(v.tau)},
              {"pass", v.pass},
              {"failure", v.failure},
              {"zeros", zeros_to_json(v.zeros)}};
}

json offdiag_to_json(const OffdiagVerdict& v) {
  return json{{"n", v.n.str()},
              {"j", v.j + 1},
              {"pass", v.pass},
              {"failure", v.failure},
              {"up", report_to_json(v.up)},
              {"down", report_to_json(v.down)},
              {"dual_defect_up", v.dual_defect_up},
              {"dual_defect_down", v.dual_defect_down},
              {"balance_up", v.balance_up},
              {"balance_down", v.balance_down}};
}

namespace {

json weight_to_json(const Weight& w) {
  switch (w.kind()) {
    case Weight::Kind::uniform:
      return json{{"kind", "uniform"}, {"scale", w.scale()}};
    case Weight::Kind::jacobi:
      return json{{"kind", "jacobi"},
                  {"gamma", w.p1()},
                  {"delta", w.p2()},
                  {"scale", w.scale()}};
    case Weight::Kind::exponential:
      return json{{"kind", "exponential"}, {"lambda", w.p1()}, {"scale", w.scale()}};
    case Weight::Kind::bernstein_szego:
      return json{{"kind", "bernstein_szego"},
                  {"a", cplx_to_json(w.c())},
                  {"scale", w.scale()}};
    case Weight::Kind::christoffel_point:
      return json{{"kind", "christoffel_point"},
                  {"z0", cplx_to_json(w.c())},
                  {"base", weight_to_json(*w.base())}};
    case Weight::Kind::christoffel_sin2:
      return json{{"kind", "christoffel_sin2"},
                  {"phi", w.p1()},
                  {"base", weight_to_json(*w.base())}};
    case Weight::Kind::christoffel_sinprod:
      return json{{"kind", "christoffel_sinprod"},
                  {"phi1", w.p1()},
                  {"phi2", w.p2()},
                  {"base", weight_to_json(*w.base())}};
  }
  fail(errc::config_parse, "unknown weight kind");
}

Weight weight_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const double scale = j.value("scale", 1.0);
  if (kind == "uniform") return Weight::uniform(scale);
  if (kind == "jacobi") {
    return Weight::jacobi(j.at("gamma").get<double>(), j.at("delta").get<double>(),
                          scale);
  }
  if (kind == "exponential") {
    return Weight::exponential(j.at("lambda").get<double>(), scale);
  }
  if (kind == "bernstein_szego") {
    return Weight::bernstein_szego(cplx_from_json(j.at("a")), scale);
  }
  if (kind == "christoffel_point") {
    return Weight::christoffel_point(cplx_from_json(j.at("z0")),
                                     weight_from_json(j.at("base")));
  }
  if (kind == "christoffel_sin2") {
    return Weight::christoffel_sin2(j.at("phi").get<double>(),
                                    weight_from_json(j.at("base")));
  }
  if (kind == "christoffel_sinprod") {
    return Weight::christoffel_sinprod(j.at("phi1").get<double>(),
                                       j.at("phi2").get<double>(),
                                       weight_from_json(j.at("base")));
  }
  fail(errc::config_parse, "unknown weight kind '" + kind + "'");
}

SystemTag tag_from_string(const std::string& s) {
  if (s == "none") return SystemTag::none;
  if (s == "angelesco") return SystemTag::angelesco;
  if (s == "at") return SystemTag::at;
  fail(errc::config_parse, "unknown tag '" + s + "'");
}

}  // namespace

json system_to_json(const MeasureSystem& sys) {
  json comps = json::array();
  for (const Component& c : sys.components()) {
    json masses = json::array();
    for (const PointMass& pm : c.masses) {
      masses.push_back(json{{"theta", pm.theta}, {"mass", pm.mass}});
    }
    comps.push_back(json{{"arc", json::array({c.arc.alpha, c.arc.beta})},
                         {"weight", weight_to_json(c.weight)},
                         {"masses", masses}});
  }
  json out{{"r", sys.r()},
           {"t0", sys.t0()},
           {"tag", tag_name(sys.tag())},
           {"components", comps}};
  if (!sys.label().empty()) out["label"] = sys.label();
  return out;
}

MeasureSystem system_from_json(const json& j) {
  try {
    const double t0 = j.at("t0").get<double>();
    const SystemTag tag = tag_from_string(j.value("tag", "none"));
    std::vector<Component> comps;
    for (const json& cj : j.at("components")) {
      const json& aj = cj.at("arc");
      if (!aj.is_array() || aj.size() != 2) {
        fail(errc::config_parse, "arc must be [alpha, beta]");
      }
      Component c{Arc{aj[0].get<double>(), aj[1].get<double>()},
                  weight_from_json(cj.at("weight")),
                  {}};
      for (const json& mj : cj.value("masses", json::array())) {
        c.masses.push_back(
            PointMass{mj.at("theta").get<double>(), mj.at("mass").get<double>()});
      }
      comps.push_back(std::move(c));
    }
    if (j.contains("r") &&
        j.at("r").get<int>() != static_cast<int>(comps.size())) {
      fail(errc::config_parse, "r does not match the component count");
    }
    return make_custom_system(std::move(comps), t0, tag,
                              j.value("label", std::string()));
  } catch (const json::exception& e) {
    fail(errc::config_parse, e.what());
  }
}

MeasureSystem load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_failure, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(errc::config_parse, std::string("invalid JSON: ") + e.what());
  }
  return system_from_json(j);
}

}  // namespace mopuc
