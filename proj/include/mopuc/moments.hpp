#pragma once

#include <Eigen/Core>
#include <map>
#include <shared_mutex>
#include <vector>

#include "mopuc/measure.hpp"

namespace mopuc {

// Square moment matrix plus the frequency metadata that defines it.
// Frequencies are stored doubled (integers) like HalfLaurentPoly exponents:
//   entries(i, k) = m_{row_component[i]}((row_two[i] + col_two[k]) / 2).
// row_two holds the orthogonality-condition frequency of each row; col_two
// holds the unknown-coefficient exponent of each column.
struct MomentMatrix {
  Eigen::MatrixXcd entries;
  std::vector<int> row_component;
  std::vector<int> row_two;
  std::vector<int> col_two;
};

// ---------------------------------------------------------------------------
// Half-integer trigonometric moments of one measure system,
//
//   m_j(t) = int e^{i t theta} d mu_j(e^{i theta}),   theta in [t0, t0+2pi),
//
// integrated by composite Gauss-Legendre with panel length <= pi/(4(|t|+1))
// so the oscillation per panel stays bounded, plus the exact point-mass sums.
// Values are cached by doubled frequency; the cache is safe for concurrent
// use (values are deterministic, so racing writers agree).
// ---------------------------------------------------------------------------
class MomentEngine {
 public:
  explicit MomentEngine(MeasureSystem system, int nodes_per_panel = 32,
                        int panel_factor = 1);

  const MeasureSystem& system() const { return system_; }

  // m_j(two_t / 2); j is 0-based.
  cplx moment(int j, int two_t) const;

  struct CacheEntry {
    int component;
    int two_t;
    cplx value;
  };
  // Sorted copy of everything cached so far.
  std::vector<CacheEntry> cache_snapshot() const;

  // |n| x |n| matrix of the monic half-integer-span solve: block j carries
  // condition frequencies s = n_j/2 .. -n_j/2+1 (descending) against columns
  // q = -|n|/2 .. |n|/2-1.  Throws EmptyIndex when |n| = 0.
  MomentMatrix build_T(const MultiIndex& n) const;

  // (|n|+|m|)-square matrix for the two-point solve: block j carries the
  // orthogonality window p = -m_j .. n_j-1 against columns p' = -|m| .. |n|-1.
  MomentMatrix build_HP(const MultiIndex& n, const MultiIndex& m) const;

  // Shifted window for the dual normalized at the bottom exponent:
  // p = -m_j+1 .. n_j, columns p' = -|m|+1 .. |n|.
  MomentMatrix build_HP_star(const MultiIndex& n, const MultiIndex& m) const;

 private:
  cplx integrate(int j, int two_t) const;
  void check_index(const MultiIndex& n) const;

  MeasureSystem system_;
  int nodes_ = 32;
  int panel_factor_ = 1;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::map<int, cplx>> cache_;
};

}  // namespace mopuc
