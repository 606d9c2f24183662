// Independent numerical oracles for the test suite.  Nothing here touches
// MomentEngine or the production quadrature: integrals go through an
// adaptive Gauss-Kronrod rule and the classical r=1 comparison polynomials
// come from the Szego recurrence, so agreement is meaningful evidence.
#pragma once

#include <functional>
#include <vector>

#include "mopuc/measure.hpp"

namespace oracle {

using mopuc::cplx;

// Adaptive G7/K15 integration of f over [a, b] to ~tol absolute+relative.
cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               double tol = 1e-14);

// m_j(two_t/2) for one component of a measure system: weight integrated over
// its arc plus the point-mass sum.  Same definition as the engine, different
// quadrature.
cplx moment(const mopuc::MeasureSystem& sys, int j, int two_t);

// Monic Szego polynomials Phi_0..Phi_N of one measure on the circle, from
// its integer moments mom(k) = int e^{ik theta} d mu:
//
//   Phi_{n+1}(z) = z Phi_n(z) - conj(alpha_n) Phi_n^*(z),
//   conj(alpha_n) = int z Phi_n d mu / int Phi_n^* d mu.
//
// Returned as monomial coefficient vectors c_0..c_n.
std::vector<std::vector<cplx>> szego_monic(const std::function<cplx(int)>& mom,
                                           int N);

}  // namespace oracle
