#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mopuc/laurent.hpp"

namespace mopuc {

// Closed arc {e^{i theta} : alpha <= theta <= beta} on the unit circle.
struct Arc {
  double alpha = 0.0;
  double beta = 0.0;

  double length() const { return beta - alpha; }
  bool contains_open(double theta) const { return alpha < theta && theta < beta; }
  bool contains_closed(double theta, double tol = 1e-14) const {
    return theta >= alpha - tol && theta <= beta + tol;
  }
};

// ---------------------------------------------------------------------------
// Weight function on an arc.  Base kinds form the measure catalog; the
// christoffel_* kinds wrap a base weight and implement the modified systems
//
//   point:   |e^{i theta} - z0|^2           * base(theta)
//   sin2:    4 sin^2((theta - phi)/2)       * base(theta)
//   sinprod: 4 sin((theta-phi1)/2) sin((theta-phi2)/2) * base(theta)
//
// The generic parameter slots map per kind:
//   jacobi: p1 = gamma, p2 = delta (endpoint exponents, >= 0)
//   exponential: p1 = lambda
//   bernstein_szego: c = a (|a| < 1)
//   christoffel_point: c = z0;  christoffel_sin2: p1 = phi;
//   christoffel_sinprod: p1 = phi1, p2 = phi2
// ---------------------------------------------------------------------------
class Weight {
 public:
  enum class Kind {
    uniform,
    jacobi,
    exponential,
    bernstein_szego,
    christoffel_point,
    christoffel_sin2,
    christoffel_sinprod,
  };

  static Weight uniform(double scale = 1.0);
  static Weight jacobi(double gamma, double delta, double scale = 1.0);
  static Weight exponential(double lambda, double scale = 1.0);
  static Weight bernstein_szego(cplx a, double scale = 1.0);
  static Weight christoffel_point(cplx z0, Weight base);
  static Weight christoffel_sin2(double phi, Weight base);
  static Weight christoffel_sinprod(double phi1, double phi2, Weight base);

  // Value at angle theta; jacobi exponents are taken relative to arc ends.
  double operator()(double theta, const Arc& arc) const;

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }
  cplx c() const { return c_; }
  const Weight* base() const { return base_.get(); }

 private:
  Weight(Kind k, double scale) : kind_(k), scale_(scale) {}

  Kind kind_ = Kind::uniform;
  double scale_ = 1.0;
  double p1_ = 0.0;
  double p2_ = 0.0;
  cplx c_{0.0, 0.0};
  std::shared_ptr<const Weight> base_;
};

struct PointMass {
  double theta = 0.0;
  double mass = 0.0;
};

struct Component {
  Arc arc;
  Weight weight;
  std::vector<PointMass> masses;
};

enum class SystemTag { none, angelesco, at };

const char* tag_name(SystemTag tag);

struct Modifier;

// ---------------------------------------------------------------------------
// System of r measures d mu_j = w_j(theta) d theta + point masses, each
// supported on an arc inside the branch window [t0, t0 + 2*pi].  Immutable
// after construction; all construction paths validate their invariants.
// ---------------------------------------------------------------------------
class MeasureSystem {
 public:
  int r() const { return static_cast<int>(components_.size()); }
  double t0() const { return t0_; }
  SystemTag tag() const { return tag_; }
  Branch branch() const { return Branch{t0_}; }
  const Component& component(int j) const {
    return components_.at(static_cast<size_t>(j));
  }
  const std::vector<Component>& components() const { return components_; }
  const std::string& label() const { return label_; }

  friend MeasureSystem make_angelesco_system(std::vector<Arc> arcs,
                                             std::vector<Weight> weights,
                                             std::vector<std::vector<PointMass>> masses,
                                             double t0, std::string label);
  friend MeasureSystem make_at_system(Arc arc, std::vector<Weight> weights,
                                      std::vector<PointMass> base_masses,
                                      std::string label);
  friend MeasureSystem make_custom_system(std::vector<Component> components,
                                          double t0, SystemTag tag,
                                          std::string label);
  friend MeasureSystem modify_system(const MeasureSystem& system,
                                     const Modifier& mod);

 private:
  MeasureSystem(std::vector<Component> components, double t0, SystemTag tag,
                std::string label)
      : components_(std::move(components)),
        t0_(t0),
        tag_(tag),
        label_(std::move(label)) {}

  std::vector<Component> components_;
  double t0_ = 0.0;
  SystemTag tag_ = SystemTag::none;
  std::string label_;
};

// Angle x shifted by multiples of 2*pi into [t0, t0 + 2*pi).
double normalize_angle(double x, double t0);

// Measures on pairwise interior-disjoint arcs, reordered along the circle
// starting from t0.  The component ending nearest t0 + 2*pi must not carry a
// point mass at e^{i t0}.
MeasureSystem make_angelesco_system(std::vector<Arc> arcs,
                                    std::vector<Weight> weights,
                                    std::vector<std::vector<PointMass>> masses,
                                    double t0, std::string label = "");

// Measures w_j d mu on one shared arc; t0 = arc.alpha.  base_masses describe
// the point part of the base measure mu and are scaled by each w_j.
MeasureSystem make_at_system(Arc arc, std::vector<Weight> weights,
                             std::vector<PointMass> base_masses = {},
                             std::string label = "");

// Escape hatch for configs that do not fit the two constructors above (also
// used by the JSON loader).  Arcs are normalized and per-tag invariants are
// re-checked.
MeasureSystem make_custom_system(std::vector<Component> components, double t0,
                                 SystemTag tag, std::string label = "");

// Multiplicative modification of every component measure.
struct Modifier {
  Weight::Kind kind = Weight::Kind::christoffel_point;
  cplx z0{0.0, 0.0};
  double phi1 = 0.0;
  double phi2 = 0.0;

  static Modifier point(cplx z0);
  static Modifier sin2(double phi);
  static Modifier sinprod(double phi1, double phi2);

  double value(double theta) const;
};

// Wraps every weight with the modifier and rescales point masses by the
// modifier value at their angle (masses hitting zero are dropped).  Tags are
// preserved only when the modifier is nonnegative on every arc.
MeasureSystem modify_system(const MeasureSystem& system, const Modifier& mod);

// Probabilistic Chebyshev-system falsifier: sample `trials` ordered tuples
// x_1 < ... < x_{|n|} inside the shared arc and evaluate the generalized
// Vandermonde determinant of the trigonometric function set attached to n.
struct ChebyshevReport {
  int trials = 0;
  double min_abs = 0.0;
  double max_abs = 0.0;
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool signs_consistent = false;
};

ChebyshevReport chebyshev_check(const MeasureSystem& system, const MultiIndex& n,
                                int trials, uint64_t seed);

// Named desk systems (see README for the exact definitions):
//   SYS-LEB, SYS-BS:<a>, SYS-A2, SYS-AT2,
//   SYS-A2-JAC, SYS-A2-EXP, SYS-A2-THIN
MeasureSystem preset(const std::string& name);

// The Angelesco family swept by the counterexample scan.
std::vector<MeasureSystem> angelesco_catalog();

}  // namespace mopuc
