#pragma once

#include "mopuc/solver.hpp"

namespace mopuc {

// One real trigonometric coefficient pair at frequency two_j/2:
//   a * cos(two_j*theta/2) + b * sin(two_j*theta/2).
struct TrigCoeff {
  int two_j = 0;
  double a = 0.0;
  double b = 0.0;
};

// x(z) = z^{1/2} phi(z) + tau z^{-1/2} phi#(z) for unimodular tau.  The
// construction enforces the reflection symmetry c_k = tau * conj(c_{-k})
// by averaging both sides, so it holds to machine precision (exactly for
// tau in {1, -1, i, -i}).
struct ParaPoly {
  HalfLaurentPoly x;
  cplx tau{1.0, 0.0};
};

// Throws NonUnimodularTau unless ||tau| - 1| <= 1e-14.
ParaPoly build_para(const HalfLaurentPoly& phi, cplx tau);

// max_k |c_k - tau * conj(c_{-k})| over the symmetric exponent grid.
double tau_invariance_defect(const ParaPoly& p);

// Real form T(theta) = (1/2) tau^{-1/2} x(e^{i theta}) as cos/sin pairs over
// nonnegative frequencies (the frequency-0 entry, present when the support
// is integral, carries the constant in `a`).  tau^{1/2} is taken on the same
// branch as every other half power.  Throws NotTauInvariant when the
// reflection symmetry fails beyond 1e-12 relative.
std::vector<TrigCoeff> trig_form(const ParaPoly& p, const Branch& branch);

// |int x(z) z^{-p} d mu_j| over the symmetric windows
// p = -(n_j-1)/2 .. (n_j-1)/2 (unit steps), concatenated over j.
std::vector<double> para_residuals(const MomentEngine& eng, const ParaPoly& p,
                                   const MultiIndex& n);

}  // namespace mopuc
