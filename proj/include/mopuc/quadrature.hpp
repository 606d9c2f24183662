#pragma once

#include <vector>

namespace mopuc {

// n-point Gauss-Legendre rule on (-1, 1).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes via Newton iteration on P_n from the Chebyshev initial guess;
// results are cached per n.  Thread-safe.
const GaussLegendre& gauss_legendre(int n);

}  // namespace mopuc
