#include "mopuc/measure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>

namespace mopuc {

namespace {

constexpr double kAngleTol = 1e-14;

double min_on_arc(const Weight& w, const Arc& arc, int samples, bool interior) {
  double mn = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double frac = interior ? (i + 0.5) / samples
                                 : static_cast<double>(i) / (samples - 1);
    mn = std::min(mn, w(arc.alpha + frac * arc.length(), arc));
  }
  return mn;
}

Arc normalize_arc(Arc a, double t0) {
  if (!(a.alpha < a.beta)) fail(errc::invalid_arc, "arc needs alpha < beta");
  const double len = a.beta - a.alpha;
  if (len > kTwoPi + 1e-12) {
    fail(errc::invalid_arc, "arc longer than the full circle");
  }
  const double alpha = normalize_angle(a.alpha, t0);
  double beta = alpha + len;
  if (beta > t0 + kTwoPi) {
    if (beta > t0 + kTwoPi + 1e-12) {
      fail(errc::invalid_arc, "arc crosses the branch cut at t0");
    }
    beta = t0 + kTwoPi;
  }
  return Arc{alpha, beta};
}

// Validates one component in place: weight sign, mass angles and positivity.
void check_component(Component& comp, double t0) {
  if (comp.weight.kind() != Weight::Kind::christoffel_sinprod &&
      min_on_arc(comp.weight, comp.arc, 512, false) < -1e-12) {
    fail(errc::negative_weight, "weight negative on its arc");
  }
  for (PointMass& pm : comp.masses) {
    if (!(pm.mass > 0.0)) fail(errc::precondition, "point mass must be > 0");
    pm.theta = normalize_angle(pm.theta, t0);
    if (!comp.arc.contains_closed(pm.theta, kAngleTol)) {
      fail(errc::mass_outside_arc, "point mass off the component arc");
    }
  }
}

void check_angelesco_layout(std::vector<Component>& comps, double t0) {
  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    return a.arc.alpha < b.arc.alpha;
  });
  for (size_t i = 0; i + 1 < comps.size(); ++i) {
    if (comps[i + 1].arc.alpha < comps[i].arc.beta - kAngleTol) {
      fail(errc::overlapping_arcs, "arc interiors intersect");
    }
  }
  // The last measure along the circle must not charge e^{i t0}: that point is
  // where the branch cut meets the circle.
  for (const PointMass& pm : comps.back().masses) {
    const double th = normalize_angle(pm.theta, t0);
    if (th - t0 <= kAngleTol || th >= t0 + kTwoPi - kAngleTol) {
      fail(errc::forbidden_point_mass, "last component carries mass at e^{i t0}");
    }
  }
}

Weight wrap_weight(const Modifier& mod, const Weight& base) {
  switch (mod.kind) {
    case Weight::Kind::christoffel_point:
      return Weight::christoffel_point(mod.z0, base);
    case Weight::Kind::christoffel_sin2:
      return Weight::christoffel_sin2(mod.phi1, base);
    case Weight::Kind::christoffel_sinprod:
      return Weight::christoffel_sinprod(mod.phi1, mod.phi2, base);
    default:
      fail(errc::precondition, "modifier kind is not a christoffel wrapper");
  }
}

}  // namespace

Weight Weight::uniform(double scale) {
  if (scale < 0.0) fail(errc::negative_weight, "uniform scale < 0");
  return Weight(Kind::uniform, scale);
}

Weight Weight::jacobi(double gamma, double delta, double scale) {
  if (gamma < 0.0 || delta < 0.0) {
    fail(errc::precondition, "jacobi endpoint exponents must be >= 0");
  }
  if (scale < 0.0) fail(errc::negative_weight, "jacobi scale < 0");
  Weight w(Kind::jacobi, scale);
  w.p1_ = gamma;
  w.p2_ = delta;
  return w;
}

Weight Weight::exponential(double lambda, double scale) {
  if (scale < 0.0) fail(errc::negative_weight, "exponential scale < 0");
  Weight w(Kind::exponential, scale);
  w.p1_ = lambda;
  return w;
}

Weight Weight::bernstein_szego(cplx a, double scale) {
  if (std::abs(a) >= 1.0) fail(errc::precondition, "bernstein_szego needs |a| < 1");
  if (scale < 0.0) fail(errc::negative_weight, "bernstein_szego scale < 0");
  Weight w(Kind::bernstein_szego, scale);
  w.c_ = a;
  return w;
}

Weight Weight::christoffel_point(cplx z0, Weight base) {
  const double r = std::abs(z0);
  if (r < 1e-300 || std::abs(r - 1.0) < 1e-14) {
    fail(errc::invalid_modifier_point, "|z0| must differ from 0 and 1");
  }
  Weight w(Kind::christoffel_point, 1.0);
  w.c_ = z0;
  w.base_ = std::make_shared<Weight>(std::move(base));
  return w;
}

Weight Weight::christoffel_sin2(double phi, Weight base) {
  Weight w(Kind::christoffel_sin2, 1.0);
  w.p1_ = phi;
  w.base_ = std::make_shared<Weight>(std::move(base));
  return w;
}

Weight Weight::christoffel_sinprod(double phi1, double phi2, Weight base) {
  Weight w(Kind::christoffel_sinprod, 1.0);
  w.p1_ = phi1;
  w.p2_ = phi2;
  w.base_ = std::make_shared<Weight>(std::move(base));
  return w;
}

double Weight::operator()(double theta, const Arc& arc) const {
  switch (kind_) {
    case Kind::uniform:
      return scale_;
    case Kind::jacobi: {
      const double u = std::max(theta - arc.alpha, 0.0);
      const double v = std::max(arc.beta - theta, 0.0);
      return scale_ * std::pow(u, p1_) * std::pow(v, p2_);
    }
    case Kind::exponential:
      return scale_ * std::exp(p1_ * theta);
    case Kind::bernstein_szego:
      return scale_ * (1.0 - std::norm(c_)) /
             (kTwoPi * std::norm(std::polar(1.0, theta) - c_));
    case Kind::christoffel_point:
      return std::norm(std::polar(1.0, theta) - c_) * (*base_)(theta, arc);
    case Kind::christoffel_sin2: {
      const double s = std::sin(0.5 * (theta - p1_));
      return 4.0 * s * s * (*base_)(theta, arc);
    }
    case Kind::christoffel_sinprod:
      return 4.0 * std::sin(0.5 * (theta - p1_)) *
             std::sin(0.5 * (theta - p2_)) * (*base_)(theta, arc);
  }
  return 0.0;
}

const char* tag_name(SystemTag tag) {
  switch (tag) {
    case SystemTag::none: return "none";
    case SystemTag::angelesco: return "angelesco";
    case SystemTag::at: return "at";
  }
  return "none";
}

double normalize_angle(double x, double t0) {
  double y = std::fmod(x - t0, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;
  return t0 + y;
}

MeasureSystem make_angelesco_system(std::vector<Arc> arcs,
                                    std::vector<Weight> weights,
                                    std::vector<std::vector<PointMass>> masses,
                                    double t0, std::string label) {
  const size_t r = arcs.size();
  if (r == 0) fail(errc::precondition, "need at least one component");
  if (weights.size() != r) fail(errc::precondition, "arcs/weights size mismatch");
  if (!masses.empty() && masses.size() != r) {
    fail(errc::precondition, "arcs/masses size mismatch");
  }
  masses.resize(r);

  std::vector<Component> comps;
  comps.reserve(r);
  for (size_t i = 0; i < r; ++i) {
    comps.push_back(Component{normalize_arc(arcs[i], t0), std::move(weights[i]),
                              std::move(masses[i])});
  }
  check_angelesco_layout(comps, t0);
  for (Component& c : comps) check_component(c, t0);
  return MeasureSystem(std::move(comps), t0, SystemTag::angelesco,
                       std::move(label));
}

MeasureSystem make_at_system(Arc arc, std::vector<Weight> weights,
                             std::vector<PointMass> base_masses,
                             std::string label) {
  if (weights.empty()) fail(errc::precondition, "need at least one weight");
  const double t0 = arc.alpha;
  const Arc a = normalize_arc(arc, t0);

  std::vector<Component> comps;
  comps.reserve(weights.size());
  for (Weight& w : weights) {
    if (min_on_arc(w, a, 512, true) <= 0.0) {
      fail(errc::negative_weight, "AT weights must be positive on the arc interior");
    }
    std::vector<PointMass> ms;
    for (const PointMass& pm : base_masses) {
      if (!(pm.mass > 0.0)) fail(errc::precondition, "point mass must be > 0");
      const double th = normalize_angle(pm.theta, t0);
      if (!a.contains_closed(th, kAngleTol)) {
        fail(errc::mass_outside_arc, "base point mass off the arc");
      }
      const double scaled = pm.mass * w(th, a);
      if (scaled > 0.0) ms.push_back(PointMass{th, scaled});
    }
    comps.push_back(Component{a, std::move(w), std::move(ms)});
  }
  return MeasureSystem(std::move(comps), t0, SystemTag::at, std::move(label));
}

MeasureSystem make_custom_system(std::vector<Component> components, double t0,
                                 SystemTag tag, std::string label) {
  if (components.empty()) fail(errc::precondition, "need at least one component");
  for (Component& c : components) {
    c.arc = normalize_arc(c.arc, t0);
    check_component(c, t0);
  }
  if (tag == SystemTag::angelesco) {
    check_angelesco_layout(components, t0);
  } else if (tag == SystemTag::at) {
    const Arc& a0 = components.front().arc;
    if (std::abs(a0.alpha - t0) > 1e-12) {
      fail(errc::precondition, "AT systems anchor the branch at the arc start");
    }
    for (const Component& c : components) {
      if (std::abs(c.arc.alpha - a0.alpha) > 1e-12 ||
          std::abs(c.arc.beta - a0.beta) > 1e-12) {
        fail(errc::precondition, "AT components must share one arc");
      }
    }
  }
  return MeasureSystem(std::move(components), t0, tag, std::move(label));
}

Modifier Modifier::point(cplx z0) {
  const double r = std::abs(z0);
  if (r < 1e-300 || std::abs(r - 1.0) < 1e-14) {
    fail(errc::invalid_modifier_point, "|z0| must differ from 0 and 1");
  }
  Modifier m;
  m.kind = Weight::Kind::christoffel_point;
  m.z0 = z0;
  return m;
}

Modifier Modifier::sin2(double phi) {
  Modifier m;
  m.kind = Weight::Kind::christoffel_sin2;
  m.phi1 = phi;
  return m;
}

Modifier Modifier::sinprod(double phi1, double phi2) {
  Modifier m;
  m.kind = Weight::Kind::christoffel_sinprod;
  m.phi1 = phi1;
  m.phi2 = phi2;
  return m;
}

double Modifier::value(double theta) const {
  switch (kind) {
    case Weight::Kind::christoffel_point:
      return std::norm(std::polar(1.0, theta) - z0);
    case Weight::Kind::christoffel_sin2: {
      const double s = std::sin(0.5 * (theta - phi1));
      return 4.0 * s * s;
    }
    case Weight::Kind::christoffel_sinprod:
      return 4.0 * std::sin(0.5 * (theta - phi1)) * std::sin(0.5 * (theta - phi2));
    default:
      fail(errc::precondition, "modifier kind is not a christoffel wrapper");
  }
}

MeasureSystem modify_system(const MeasureSystem& system, const Modifier& mod) {
  bool nonneg = true;
  std::vector<Component> comps;
  comps.reserve(static_cast<size_t>(system.r()));
  for (const Component& c : system.components()) {
    std::vector<PointMass> ms;
    for (const PointMass& pm : c.masses) {
      const double scaled = pm.mass * mod.value(pm.theta);
      if (scaled < 0.0) fail(errc::negative_weight, "modifier negative at a point mass");
      if (scaled > 0.0) ms.push_back(PointMass{pm.theta, scaled});
    }
    if (mod.kind == Weight::Kind::christoffel_sinprod) {
      for (int i = 0; i < 512 && nonneg; ++i) {
        const double th = c.arc.alpha + (i + 0.5) / 512.0 * c.arc.length();
        if (mod.value(th) < -1e-12) nonneg = false;
      }
    }
    comps.push_back(Component{c.arc, wrap_weight(mod, c.weight), std::move(ms)});
  }

  std::string label = system.label();
  if (!label.empty()) {
    switch (mod.kind) {
      case Weight::Kind::christoffel_point: label += "+point"; break;
      case Weight::Kind::christoffel_sin2: label += "+sin2"; break;
      default: label += "+sinprod"; break;
    }
  }
  const SystemTag tag = nonneg ? system.tag() : SystemTag::none;
  return MeasureSystem(std::move(comps), system.t0(), tag, std::move(label));
}

namespace {

// One member of the trigonometric family attached to a weight:
// w(theta) * cos(two_freq*theta/2) or w(theta) * sin(two_freq*theta/2).
struct TrigFn {
  const Weight* w = nullptr;
  const Arc* arc = nullptr;
  int two_freq = 0;
  bool is_sin = false;

  double operator()(double theta) const {
    const double phase = 0.5 * two_freq * theta;
    return (*w)(theta, *arc) * (is_sin ? std::sin(phase) : std::cos(phase));
  }
};

// m functions per weight: half-integer frequencies when m is even, the
// weight itself plus integer frequencies when m is odd.
void append_trig(std::vector<TrigFn>& fns, const Weight& w, const Arc& arc, int m) {
  if (m % 2 == 0) {
    for (int k = 1; 2 * k <= m; ++k) {
      fns.push_back(TrigFn{&w, &arc, 2 * k - 1, false});
      fns.push_back(TrigFn{&w, &arc, 2 * k - 1, true});
    }
  } else {
    fns.push_back(TrigFn{&w, &arc, 0, false});
    for (int k = 1; 2 * k <= m - 1; ++k) {
      fns.push_back(TrigFn{&w, &arc, 2 * k, false});
      fns.push_back(TrigFn{&w, &arc, 2 * k, true});
    }
  }
}

}  // namespace

ChebyshevReport chebyshev_check(const MeasureSystem& system, const MultiIndex& n,
                                int trials, uint64_t seed) {
  if (system.tag() != SystemTag::at) {
    fail(errc::precondition, "chebyshev_check needs an AT-tagged system");
  }
  if (n.size() != system.r()) fail(errc::precondition, "index size != r");
  if (trials < 1) fail(errc::precondition, "trials must be >= 1");
  const int N = n.total();
  if (N == 0) fail(errc::empty_function_set, "|n| = 0 yields no functions");

  const Arc& arc = system.component(0).arc;
  std::vector<TrigFn> fns;
  for (int j = 0; j < system.r(); ++j) {
    if (n[j] > 0) append_trig(fns, system.component(j).weight, arc, n[j]);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(arc.alpha, arc.beta);
  const double min_gap = 1e-9 * arc.length();

  ChebyshevReport rep;
  rep.trials = trials;
  rep.min_abs = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd W(N, N);
  std::vector<double> x(static_cast<size_t>(N));

  for (int t = 0; t < trials; ++t) {
    for (;;) {
      for (double& v : x) v = uni(rng);
      std::sort(x.begin(), x.end());
      bool ok = true;
      for (size_t i = 0; i + 1 < x.size(); ++i) {
        if (x[i + 1] - x[i] < min_gap) { ok = false; break; }
      }
      if (ok) break;
    }
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < N; ++k) {
        W(i, k) = fns[static_cast<size_t>(i)](x[static_cast<size_t>(k)]);
      }
    }
    const double det = W.partialPivLu().determinant();
    rep.min_abs = std::min(rep.min_abs, std::abs(det));
    rep.max_abs = std::max(rep.max_abs, std::abs(det));
    if (det > 1e-300) {
      ++rep.positive;
    } else if (det < -1e-300) {
      ++rep.negative;
    } else {
      ++rep.zero;
    }
  }
  rep.signs_consistent =
      rep.zero == 0 && (rep.positive == 0 || rep.negative == 0);
  return rep;
}

MeasureSystem preset(const std::string& name) {
  const Arc full{0.0, kTwoPi};
  if (name == "SYS-LEB") {
    return make_at_system(full, {Weight::uniform(1.0 / kTwoPi)}, {}, name);
  }
  if (name.rfind("SYS-BS:", 0) == 0) {
    const std::string num = name.substr(7);
    char* end = nullptr;
    const double a = std::strtod(num.c_str(), &end);
    if (num.empty() || end == nullptr || *end != '\0' || !(std::abs(a) < 1.0)) {
      fail(errc::unknown_preset, "bad bernstein-szego parameter in '" + name + "'");
    }
    return make_at_system(full, {Weight::bernstein_szego(cplx(a, 0.0))}, {}, name);
  }
  if (name == "SYS-A2") {
    return make_angelesco_system({Arc{0.2, 1.2}, Arc{2.0, 3.0}},
                                 {Weight::uniform(1.0), Weight::uniform(1.0)},
                                 {}, 0.0, name);
  }
  if (name == "SYS-AT2") {
    // both weights normalized to unit mass on [0.5, 2.5]
    const double s = 1.0 / (std::exp(2.5) - std::exp(0.5));
    return make_at_system(Arc{0.5, 2.5},
                          {Weight::uniform(0.5), Weight::exponential(1.0, s)},
                          {}, name);
  }
  if (name == "SYS-A2-JAC") {
    // (theta-a)(b-theta) on a unit-length arc integrates to 1/6
    return make_angelesco_system(
        {Arc{0.2, 1.2}, Arc{2.0, 3.0}},
        {Weight::jacobi(1.0, 1.0, 6.0), Weight::jacobi(1.0, 1.0, 6.0)}, {}, 0.0,
        name);
  }
  if (name == "SYS-A2-EXP") {
    const double s1 = 3.0 / (std::exp(3.6) - std::exp(0.6));
    const double s2 = 3.0 / (std::exp(-6.0) - std::exp(-9.0));
    return make_angelesco_system(
        {Arc{0.2, 1.2}, Arc{2.0, 3.0}},
        {Weight::exponential(3.0, s1), Weight::exponential(-3.0, s2)}, {}, 0.0,
        name);
  }
  if (name == "SYS-A2-THIN") {
    return make_angelesco_system(
        {Arc{0.2, 0.45}, Arc{2.0, 3.05}},
        {Weight::uniform(1.0 / 0.25), Weight::uniform(1.0 / 1.05)}, {}, 0.0,
        name);
  }
  fail(errc::unknown_preset, "no preset named '" + name + "'");
}

std::vector<MeasureSystem> angelesco_catalog() {
  std::vector<MeasureSystem> out;
  out.push_back(preset("SYS-A2"));
  out.push_back(preset("SYS-A2-JAC"));
  out.push_back(preset("SYS-A2-EXP"));
  out.push_back(preset("SYS-A2-THIN"));
  return out;
}

}  // namespace mopuc
