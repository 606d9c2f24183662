#pragma once

#include <limits>
#include <string>

#include "mopuc/para.hpp"

namespace mopuc {

// All roots of c[0] + c[1] z + ... + c[N] z^N via the balanced companion
// matrix, each polished by up to three guarded Newton steps.  Throws
// DegenerateLeading when |c[N]| < 1e-300.
std::vector<cplx> find_roots(const std::vector<cplx>& coeffs);

enum class RootClass { inside, on_circle, outside };

const char* root_class_name(RootClass c);

struct ZeroReport {
  std::vector<cplx> roots;           // sorted by (re, im)
  std::vector<RootClass> classes;    // with | |z|-1 | < tol_circle on-circle
  int n_plus = 0;                    // strictly inside the unit circle
  int n_on = 0;
  int n_minus = 0;                   // strictly outside
  std::vector<int> per_arc;          // on-circle roots inside each open arc
  int outside_arcs = 0;              // on-circle roots in no open arc
  double min_pairwise_gap = std::numeric_limits<double>::infinity();
  std::vector<std::vector<int>> clusters;  // root indices within 1e-7
  double tol_circle = 1e-8;
};

// Zeros of the symmetric-span completion z^{K/2} p(z), K = max(|two_min|,
// |two_max|): solver outputs with doubled top exponent K analyze as ordinary
// polynomials of degree (two_max + K)/2, zeros at the origin included.
ZeroReport zero_report(const MeasureSystem& system, const HalfLaurentPoly& p,
                       double tol_circle = 1e-8);

struct PhaseReport {
  std::vector<double> theta;  // grid over [-pi, pi], inclusive ends
  std::vector<double> psi;    // continuous phase samples
  int winding = 0;            // (psi(pi) - psi(-pi)) / 2pi, rounded
  double winding_residual = 0.0;
  bool monotone = false;        // all grid increments strictly positive
  double min_abs_derivative = 0.0;
};

// Continuous phase Psi of B(e^{i theta}) = e^{i theta} P(e^{i theta}) /
// P*(e^{i theta}) for the monic polynomial with the given roots:
//
//   Psi(theta) = theta + sum_j (2 Arg(e^{i theta} - z_j) - theta),
//
// unwrapped by adaptive bisection between grid samples.  The winding equals
// n_+ + 1 - n_- by the argument principle.  Throws RootOnCircle when a root
// sits within 1e-12 of the circle.
PhaseReport phase(const std::vector<cplx>& roots, int grid_size = 4096);

struct VerifyOptions {
  double tol_circle = 1e-8;  // on-circle classification band
  double disk_margin = 1e-6; // zeros must satisfy |z| < 1 - disk_margin
  double min_gap = 1e-6;     // simplicity: min pairwise distance of zeros
  int grid = 4096;           // phase sampling
};

// --- zeros-in-disk claim -----------------------------------------------
// The symmetric-span completion of phi_n has all |n| zeros strictly inside
// the unit disk, and the associated Blaschke phase is strictly increasing
// with winding |n|+1.
struct DiskVerdict {
  bool pass = false;
  std::string failure;  // empty when pass
  SolveResult solve;
  ZeroReport zeros;
  PhaseReport phase;
};

DiskVerdict verify_zeros_in_disk(const MomentEngine& eng, const MultiIndex& n,
                                 const VerifyOptions& opt = {});

// --- unimodular-zeros claim ---------------------------------------------
// For each tau, the paraorthogonal combination has exactly |n|+1 simple
// zeros on the unit circle, at least n_j inside each open arc, and at most
// one outside the union of open arcs.
struct CircleVerdict {
  cplx tau{1.0, 0.0};
  bool pass = false;
  std::string failure;
  ZeroReport zeros;
};

std::vector<CircleVerdict> verify_circle_zeros(const MomentEngine& eng,
                                               const MultiIndex& n,
                                               const std::vector<cplx>& taus,
                                               const VerifyOptions& opt = {});

// --- stepped-pair normality claim ----------------------------------------
// For every n in the sweep and every j, both stepped two-point solves
// (n, n+e_j) and (n+e_j, n) are normal, the reflected solve matches the
// dual solve of the swapped pair, and the degree-(2|n|+1) completion has all
// zeros strictly on one side of the circle (zero balance +-(2|n|+1)).
struct OffdiagVerdict {
  MultiIndex n;
  int j = 0;
  bool pass = false;
  std::string failure;
  NormalityReport up;          // pair (n, n+e_j)
  NormalityReport down;        // pair (n+e_j, n)
  double dual_defect_up = 0.0;   // sharp(up solve) vs dual of swapped pair
  double dual_defect_down = 0.0;
  int balance_up = 0;            // n_+ - n_- of the completion
  int balance_down = 0;
};

std::vector<OffdiagVerdict> verify_offdiag_normality(const MomentEngine& eng,
                                                     int max_index,
                                                     const VerifyOptions& opt = {});

// --- ordinary-polynomial zero scan ----------------------------------------
// Solves the one-sided polynomial (orthogonality window p = 0..n_j-1, span
// z^0..z^{|n|}) across a catalog of systems and records the largest root
// modulus; roots outside the closed unit disk are flagged as findings.
struct CounterexampleRow {
  std::string system;
  MultiIndex n;
  bool normal = false;
  double max_abs_root = 0.0;
  bool outside = false;  // max_abs_root > 1 + 1e-8
};

std::vector<CounterexampleRow> counterexample_scan(
    const std::vector<MeasureSystem>& catalog, int max_index);

}  // namespace mopuc
