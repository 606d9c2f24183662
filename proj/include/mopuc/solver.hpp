#pragma once

#include <optional>

#include "mopuc/moments.hpp"

namespace mopuc {

enum class Verdict { normal, non_normal, borderline };

const char* verdict_name(Verdict v);

// Numeric stand-in for the exact "nonsingular moment matrix" dichotomy:
// the singular-value ratio decides, with a borderline band kept visible
// instead of being rounded to either side.
inline constexpr double kNormalRatio = 1e-10;     // ratio above: normal
inline constexpr double kNonNormalRatio = 1e-13;  // ratio below: non_normal

struct NormalityReport {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double ratio = 0.0;
  Verdict verdict = Verdict::normal;
  bool det_available = false;
  cplx det{0.0, 0.0};
};

NormalityReport assess_normality(const MomentMatrix& m);

// Report of convention-normal cases (empty indices) without a matrix.
NormalityReport unit_normality();

struct SolveResult {
  HalfLaurentPoly poly;
  NormalityReport report;
  std::vector<double> residuals;  // |orthogonality integral| per condition
  double scale = 1.0;             // max |moment| entering the linear system
  std::optional<cplx> alpha;      // lowest coefficient of the two-point solve
  std::optional<cplx> beta;       // highest coefficient of the dual solve
};

// Monic Laurent polynomial phi_n on the symmetric half-integer span
// z^{-|n|/2} .. z^{|n|/2}; throws NonNormal when the moment matrix is
// numerically singular.  n = 0 returns phi_0 = 1.
SolveResult solve_phi(const MomentEngine& eng, const MultiIndex& n);

// sharp(phi_n), with residuals against its own orthogonality window
// p = -n_j/2+1 .. n_j/2.
SolveResult solve_phi_sharp(const MomentEngine& eng, const MultiIndex& n);

// Two-point solve on z^{-|m|} .. z^{|n|}, monic at z^{|n|}; reports the
// coefficient alpha at z^{-|m|}.
SolveResult solve_hp(const MomentEngine& eng, const MultiIndex& n,
                     const MultiIndex& m);

// Dual two-point solve normalized to 1 at z^{-|m|}; reports the coefficient
// beta at z^{|n|}.
SolveResult solve_hp_star(const MomentEngine& eng, const MultiIndex& n,
                          const MultiIndex& m);

enum class ScanMode { phi, hp_diag, hp_offdiag };

struct ScanRow {
  MultiIndex n;
  MultiIndex m;  // empty in phi mode
  NormalityReport report;
};

// Sweeps n in {0..max_index}^r and reports conditioning without solving.
// phi assesses the symmetric-span matrices; hp_diag the pairs (n, n);
// hp_offdiag the pairs (n, n+e_j) and (n+e_j, n) for every j.
std::vector<ScanRow> normality_scan(const MomentEngine& eng, int max_index,
                                    ScanMode mode);

// Lexicographic enumeration of {0..max_index}^r (last coordinate fastest).
std::vector<MultiIndex> index_sweep(int r, int max_index);

}  // namespace mopuc
