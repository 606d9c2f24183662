#include "mopuc/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace mopuc {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::normal: return "normal";
    case Verdict::non_normal: return "non_normal";
    case Verdict::borderline: return "borderline";
  }
  return "borderline";
}

NormalityReport assess_normality(const MomentMatrix& m) {
  NormalityReport rep;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.entries);
  const auto& sv = svd.singularValues();
  rep.sigma_max = sv(0);
  rep.sigma_min = sv(sv.size() - 1);
  rep.ratio = rep.sigma_max > 0.0 ? rep.sigma_min / rep.sigma_max : 0.0;
  if (rep.ratio > kNormalRatio) {
    rep.verdict = Verdict::normal;
  } else if (rep.ratio < kNonNormalRatio) {
    rep.verdict = Verdict::non_normal;
  } else {
    rep.verdict = Verdict::borderline;
  }
  rep.det = m.entries.partialPivLu().determinant();
  rep.det_available = true;
  return rep;
}

NormalityReport unit_normality() {
  NormalityReport rep;
  rep.sigma_min = 1.0;
  rep.sigma_max = 1.0;
  rep.ratio = 1.0;
  rep.verdict = Verdict::normal;
  rep.det_available = true;
  rep.det = cplx(1.0, 0.0);
  return rep;
}

namespace {

// Error-free accumulator (TwoSum + fma product error) used to evaluate the
// refinement residual b - A x beyond working precision; with kappa * eps
// well below 1 the refined solution then carries the conditioning of the
// data, not of one LU pass.
struct Compensated {
  double hi = 0.0;
  double lo = 0.0;

  void add(double x) {
    const double t = hi + x;
    const double v = t - hi;
    lo += (hi - (t - v)) + (x - v);
    hi = t;
  }
  void add_prod(double a, double b) {
    const double p = a * b;
    lo += std::fma(a, b, -p);
    add(p);
  }
  double value() const { return hi + lo; }
};

Eigen::VectorXcd compensated_residual(const Eigen::MatrixXcd& A,
                                      const Eigen::VectorXcd& x,
                                      const Eigen::VectorXcd& b) {
  const Eigen::Index N = A.rows();
  Eigen::VectorXcd r(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    Compensated re, im;
    re.add(b(i).real());
    im.add(b(i).imag());
    for (Eigen::Index k = 0; k < N; ++k) {
      const cplx a = A(i, k);
      const cplx v = x(k);
      re.add_prod(-a.real(), v.real());
      re.add_prod(a.imag(), v.imag());
      im.add_prod(-a.real(), v.imag());
      im.add_prod(-a.imag(), v.real());
    }
    r(i) = cplx(re.value(), im.value());
  }
  return r;
}

SolveResult unit_solve() {
  SolveResult out;
  out.poly = HalfLaurentPoly::monomial(0);
  out.report = unit_normality();
  out.scale = 1.0;
  return out;
}

// |int p(z) z^{-...} d mu_j| for each condition row of M, evaluated through
// the cached moments: condition frequency row_two pairs with each coefficient
// exponent two_k as m_j((two_k + row_two)/2).
std::vector<double> residuals_for(const MomentEngine& eng,
                                  const HalfLaurentPoly& p,
                                  const std::vector<int>& row_component,
                                  const std::vector<int>& row_two) {
  std::vector<double> out;
  out.reserve(row_two.size());
  for (size_t i = 0; i < row_two.size(); ++i) {
    cplx acc(0.0, 0.0);
    for (int two_k = p.two_min(); two_k <= p.two_max(); two_k += 2) {
      const cplx c = p.coeff_at(two_k);
      if (c != cplx(0.0, 0.0)) {
        acc += c * eng.moment(row_component[i], two_k + row_two[i]);
      }
    }
    out.push_back(std::abs(acc));
  }
  return out;
}

// Shared monic-solve path: the coefficient at two_fixed is pinned to 1 and
// moved to the right-hand side; remaining coefficients live on M.col_two.
SolveResult solve_window(const MomentEngine& eng, const MomentMatrix& M,
                         int two_fixed, const std::string& what) {
  const auto N = M.entries.rows();
  SolveResult out;
  out.report = assess_normality(M);

  Eigen::VectorXcd b(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    b(i) = -eng.moment(M.row_component[static_cast<size_t>(i)],
                       M.row_two[static_cast<size_t>(i)] + two_fixed);
  }
  out.scale = std::max(M.entries.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());

  if (out.report.verdict == Verdict::non_normal) {
    fail(errc::non_normal,
         what + ": moment matrix numerically singular (sigma ratio " +
             std::to_string(out.report.ratio) + ")");
  }

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M.entries);
  Eigen::VectorXcd x = lu.solve(b);
  for (int pass = 0; pass < 3; ++pass) {
    const Eigen::VectorXcd dx = lu.solve(compensated_residual(M.entries, x, b));
    x += dx;
    if (dx.cwiseAbs().maxCoeff() <= 1e-18 * x.cwiseAbs().maxCoeff()) break;
  }

  // Assemble the polynomial over the union of the unknown grid and the
  // pinned exponent.
  const int lo = std::min(M.col_two.front(), two_fixed);
  const int hi = std::max(M.col_two.back(), two_fixed);
  std::vector<cplx> coeffs(static_cast<size_t>((hi - lo) / 2 + 1),
                           cplx(0.0, 0.0));
  for (size_t k = 0; k < M.col_two.size(); ++k) {
    coeffs[static_cast<size_t>((M.col_two[k] - lo) / 2)] =
        x(static_cast<Eigen::Index>(k));
  }
  coeffs[static_cast<size_t>((two_fixed - lo) / 2)] = cplx(1.0, 0.0);
  out.poly = HalfLaurentPoly(lo, std::move(coeffs));
  out.residuals = residuals_for(eng, out.poly, M.row_component, M.row_two);
  return out;
}

}  // namespace

SolveResult solve_phi(const MomentEngine& eng, const MultiIndex& n) {
  if (n.size() != eng.system().r()) fail(errc::precondition, "index size != r");
  if (n.total() == 0) return unit_solve();
  return solve_window(eng, eng.build_T(n), n.total(), "phi(" + n.str() + ")");
}

SolveResult solve_phi_sharp(const MomentEngine& eng, const MultiIndex& n) {
  SolveResult res = solve_phi(eng, n);
  res.poly = sharp(res.poly);
  // Window of the reflected polynomial: p = -n_j/2+1 .. n_j/2.
  std::vector<int> row_component;
  std::vector<int> row_two;
  for (int j = 0; j < n.size(); ++j) {
    for (int two_p = -n[j] + 2; two_p <= n[j]; two_p += 2) {
      row_component.push_back(j);
      row_two.push_back(-two_p);
    }
  }
  res.residuals = residuals_for(eng, res.poly, row_component, row_two);
  return res;
}

SolveResult solve_hp(const MomentEngine& eng, const MultiIndex& n,
                     const MultiIndex& m) {
  if (n.size() != eng.system().r() || m.size() != eng.system().r()) {
    fail(errc::precondition, "index size != r");
  }
  if (n.total() + m.total() == 0) return unit_solve();
  SolveResult out =
      solve_window(eng, eng.build_HP(n, m), 2 * n.total(),
                   "hp(" + n.str() + ";" + m.str() + ")");
  out.alpha = out.poly.coeff_at(-2 * m.total());
  return out;
}

SolveResult solve_hp_star(const MomentEngine& eng, const MultiIndex& n,
                          const MultiIndex& m) {
  if (n.size() != eng.system().r() || m.size() != eng.system().r()) {
    fail(errc::precondition, "index size != r");
  }
  if (n.total() + m.total() == 0) return unit_solve();
  SolveResult out =
      solve_window(eng, eng.build_HP_star(n, m), -2 * m.total(),
                   "hp_star(" + n.str() + ";" + m.str() + ")");
  out.beta = out.poly.coeff_at(2 * n.total());
  return out;
}

std::vector<MultiIndex> index_sweep(int r, int max_index) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<size_t>(r), 0);
  for (;;) {
    out.push_back(MultiIndex(cur));
    int pos = r - 1;
    while (pos >= 0 && cur[static_cast<size_t>(pos)] == max_index) {
      cur[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++cur[static_cast<size_t>(pos)];
  }
  return out;
}

std::vector<ScanRow> normality_scan(const MomentEngine& eng, int max_index,
                                    ScanMode mode) {
  if (max_index < 0) fail(errc::precondition, "max_index must be >= 0");
  const int r = eng.system().r();
  std::vector<ScanRow> rows;
  for (const MultiIndex& n : index_sweep(r, max_index)) {
    switch (mode) {
      case ScanMode::phi: {
        ScanRow row{n, MultiIndex(), {}};
        row.report =
            n.total() == 0 ? unit_normality() : assess_normality(eng.build_T(n));
        rows.push_back(std::move(row));
        break;
      }
      case ScanMode::hp_diag: {
        ScanRow row{n, n, {}};
        row.report = n.total() == 0 ? unit_normality()
                                    : assess_normality(eng.build_HP(n, n));
        rows.push_back(std::move(row));
        break;
      }
      case ScanMode::hp_offdiag: {
        for (int j = 0; j < r; ++j) {
          const MultiIndex b = n.bumped(j);
          rows.push_back(ScanRow{n, b, assess_normality(eng.build_HP(n, b))});
          rows.push_back(ScanRow{b, n, assess_normality(eng.build_HP(b, n))});
        }
        break;
      }
    }
  }
  return rows;
}

}  // namespace mopuc
