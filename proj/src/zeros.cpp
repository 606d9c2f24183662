#include "mopuc/zeros.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace mopuc {

namespace {

// Diagonal similarity scaling by powers of two (radix-2 Parlett-Reinsch) so
// eigenvalues are untouched by rounding in the scale factors.
void balance_in_place(Eigen::MatrixXcd& A) {
  const Eigen::Index n = A.rows();
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = A.col(i).cwiseAbs().sum() - std::abs(A(i, i));
      double r = A.row(i).cwiseAbs().sum() - std::abs(A(i, i));
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / 2.0;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c >= g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        A.row(i) *= 1.0 / f;
        A.col(i) *= f;
        converged = false;
      }
    }
  }
}

// Up to three Newton steps, each kept only if it reduces |p|.
cplx polish_root(const std::vector<cplx>& c, cplx z) {
  auto value = [&c](cplx w, cplx* dp) {
    cplx p(0.0, 0.0), d(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) {
      d = d * w + p;
      p = p * w + c[i];
    }
    if (dp) *dp = d;
    return p;
  };
  for (int it = 0; it < 3; ++it) {
    cplx dp;
    const cplx p = value(z, &dp);
    if (!(std::abs(dp) > 0.0)) break;
    const cplx step = p / dp;
    if (!std::isfinite(std::abs(step))) break;
    const cplx znew = z - step;
    if (std::abs(value(znew, nullptr)) >= std::abs(p)) break;
    z = znew;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace

std::vector<cplx> find_roots(const std::vector<cplx>& coeffs) {
  if (coeffs.size() < 2) fail(errc::precondition, "degree must be >= 1");
  if (std::abs(coeffs.back()) < 1e-300) {
    fail(errc::degenerate_leading, "leading coefficient vanishes");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(coeffs.size()) - 1;
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) C(i + 1, i) = cplx(1.0, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    C(i, n - 1) = -coeffs[static_cast<size_t>(i)] / coeffs.back();
  }
  balance_in_place(C);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<cplx> roots(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    roots[static_cast<size_t>(i)] = polish_root(coeffs, es.eigenvalues()(i));
  }
  return roots;
}

const char* root_class_name(RootClass c) {
  switch (c) {
    case RootClass::inside: return "inside";
    case RootClass::on_circle: return "on_circle";
    case RootClass::outside: return "outside";
  }
  return "inside";
}

ZeroReport zero_report(const MeasureSystem& system, const HalfLaurentPoly& p,
                       double tol_circle) {
  if (p.is_zero()) fail(errc::zero_polynomial, "the zero polynomial has no zero set");
  ZeroReport rep;
  rep.tol_circle = tol_circle;
  rep.per_arc.assign(static_cast<size_t>(system.r()), 0);

  const int hi = std::max(std::abs(p.two_min()), std::abs(p.two_max()));
  const int lo_ord = (p.two_min() + hi) / 2;  // same parity by construction
  const int deg = (p.two_max() + hi) / 2;
  if (deg == 0) return rep;  // constant: nothing to locate

  std::vector<cplx> coeffs(static_cast<size_t>(deg + 1), cplx(0.0, 0.0));
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    coeffs[static_cast<size_t>(lo_ord) + i] = p.coeffs()[i];
  }
  rep.roots = find_roots(coeffs);
  std::sort(rep.roots.begin(), rep.roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  const double t0 = system.t0();
  for (const cplx& z : rep.roots) {
    const double d = std::abs(z) - 1.0;
    if (std::abs(d) < tol_circle) {
      rep.classes.push_back(RootClass::on_circle);
      ++rep.n_on;
      const double th = normalize_angle(std::arg(z), t0);
      bool in_some = false;
      for (int j = 0; j < system.r(); ++j) {
        if (system.component(j).arc.contains_open(th)) {
          ++rep.per_arc[static_cast<size_t>(j)];
          in_some = true;
        }
      }
      if (!in_some) ++rep.outside_arcs;
    } else if (d < 0.0) {
      rep.classes.push_back(RootClass::inside);
      ++rep.n_plus;
    } else {
      rep.classes.push_back(RootClass::outside);
      ++rep.n_minus;
    }
  }

  const size_t k = rep.roots.size();
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      rep.min_pairwise_gap =
          std::min(rep.min_pairwise_gap, std::abs(rep.roots[i] - rep.roots[j]));
    }
  }

  // Multiplicity clusters: connected components under distance < 1e-7.
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int i) {
    while (parent[static_cast<size_t>(i)] != i) i = parent[static_cast<size_t>(i)];
    return i;
  };
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      if (std::abs(rep.roots[i] - rep.roots[j]) < 1e-7) {
        parent[static_cast<size_t>(find(static_cast<int>(j)))] =
            find(static_cast<int>(i));
      }
    }
  }
  std::vector<std::vector<int>> groups(k);
  for (size_t i = 0; i < k; ++i) {
    groups[static_cast<size_t>(find(static_cast<int>(i)))].push_back(
        static_cast<int>(i));
  }
  for (auto& g : groups) {
    if (!g.empty()) rep.clusters.push_back(std::move(g));
  }
  return rep;
}

namespace {

// Phase increment over [a, b], split recursively until every per-root arc
// step stays below pi/2 (no unwrapping ambiguity).
double phase_step(const std::vector<cplx>& roots, double a, double b, int depth) {
  const cplx za = std::polar(1.0, a);
  const cplx zb = std::polar(1.0, b);
  double sum = 0.0;
  bool wild = false;
  for (const cplx& r : roots) {
    const double d = std::arg((zb - r) / (za - r));
    if (std::abs(d) > 0.5 * kPi) wild = true;
    sum += d;
  }
  if (wild && depth < 48) {
    const double mid = 0.5 * (a + b);
    return phase_step(roots, a, mid, depth + 1) +
           phase_step(roots, mid, b, depth + 1);
  }
  return (b - a) * (1.0 - static_cast<double>(roots.size())) + 2.0 * sum;
}

}  // namespace

PhaseReport phase(const std::vector<cplx>& roots, int grid_size) {
  if (grid_size < 16) fail(errc::precondition, "phase grid too small");
  for (const cplx& r : roots) {
    if (std::abs(std::abs(r) - 1.0) < 1e-12) {
      fail(errc::root_on_circle, "phase undefined with a root on the circle");
    }
  }
  PhaseReport rep;
  const int G = grid_size;
  rep.theta.resize(static_cast<size_t>(G) + 1);
  rep.psi.resize(static_cast<size_t>(G) + 1);
  const double h = kTwoPi / G;

  double psi0 = -kPi;
  {
    const cplx z0 = std::polar(1.0, -kPi);
    for (const cplx& r : roots) psi0 += 2.0 * std::arg(z0 - r) + kPi;
  }
  rep.theta[0] = -kPi;
  rep.psi[0] = psi0;

  rep.monotone = true;
  rep.min_abs_derivative = std::numeric_limits<double>::infinity();
  for (int i = 0; i < G; ++i) {
    const double a = -kPi + i * h;
    const double b = i + 1 == G ? kPi : -kPi + (i + 1) * h;
    const double d = phase_step(roots, a, b, 0);
    rep.theta[static_cast<size_t>(i) + 1] = b;
    rep.psi[static_cast<size_t>(i) + 1] = rep.psi[static_cast<size_t>(i)] + d;
    if (!(d > 0.0)) rep.monotone = false;
    rep.min_abs_derivative = std::min(rep.min_abs_derivative, std::abs(d) / h);
  }

  const double raw = (rep.psi.back() - rep.psi.front()) / kTwoPi;
  rep.winding = static_cast<int>(std::lround(raw));
  rep.winding_residual = std::abs(raw - rep.winding);
  return rep;
}

namespace {

void note_failure(bool ok, const std::string& msg, bool* pass,
                  std::string* failure) {
  if (ok) return;
  *pass = false;
  if (!failure->empty()) *failure += "; ";
  *failure += msg;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void require_tagged(const MeasureSystem& sys) {
  if (sys.tag() == SystemTag::none) {
    fail(errc::precondition, "verifier needs an angelesco- or at-tagged system");
  }
}

}  // namespace

DiskVerdict verify_zeros_in_disk(const MomentEngine& eng, const MultiIndex& n,
                                 const VerifyOptions& opt) {
  require_tagged(eng.system());
  DiskVerdict v;
  v.solve = solve_phi(eng, n);
  v.zeros = zero_report(eng.system(), v.solve.poly, opt.tol_circle);
  v.pass = true;

  const int N = n.total();
  note_failure(static_cast<int>(v.zeros.roots.size()) == N,
               "zero count " + std::to_string(v.zeros.roots.size()) +
                   " != " + std::to_string(N),
               &v.pass, &v.failure);
  double max_abs = 0.0;
  for (const cplx& z : v.zeros.roots) max_abs = std::max(max_abs, std::abs(z));
  note_failure(v.zeros.roots.empty() || max_abs < 1.0 - opt.disk_margin,
               "zero not strictly inside the unit disk: max |z| = " + num(max_abs),
               &v.pass, &v.failure);
  note_failure(v.zeros.n_plus == N,
               "inside count " + std::to_string(v.zeros.n_plus) + " != " +
                   std::to_string(N),
               &v.pass, &v.failure);
  try {
    v.phase = phase(v.zeros.roots, opt.grid);
    note_failure(v.phase.winding == N + 1,
                 "phase winding " + std::to_string(v.phase.winding) + " != " +
                     std::to_string(N + 1),
                 &v.pass, &v.failure);
    note_failure(v.phase.monotone,
                 "phase not strictly increasing (min slope " +
                     num(v.phase.min_abs_derivative) + ")",
                 &v.pass, &v.failure);
  } catch (const Error& e) {
    if (e.code() != errc::root_on_circle) throw;
    note_failure(false, e.what(), &v.pass, &v.failure);
  }
  return v;
}

std::vector<CircleVerdict> verify_circle_zeros(const MomentEngine& eng,
                                               const MultiIndex& n,
                                               const std::vector<cplx>& taus,
                                               const VerifyOptions& opt) {
  require_tagged(eng.system());
  const SolveResult phi = solve_phi(eng, n);
  std::vector<CircleVerdict> out;
  out.reserve(taus.size());
  for (const cplx& tau : taus) {
    CircleVerdict cv;
    cv.tau = tau;
    cv.pass = true;
    const ParaPoly x = build_para(phi.poly, tau);
    cv.zeros = zero_report(eng.system(), x.x, opt.tol_circle);
    const int want = n.total() + 1;
    note_failure(static_cast<int>(cv.zeros.roots.size()) == want &&
                     cv.zeros.n_on == want,
                 "expected " + std::to_string(want) +
                     " unimodular zeros, found " + std::to_string(cv.zeros.n_on) +
                     " of " + std::to_string(cv.zeros.roots.size()),
                 &cv.pass, &cv.failure);
    note_failure(cv.zeros.roots.size() < 2 ||
                     cv.zeros.min_pairwise_gap > opt.min_gap,
                 "zeros not simple: min gap " + num(cv.zeros.min_pairwise_gap),
                 &cv.pass, &cv.failure);
    for (int j = 0; j < n.size(); ++j) {
      note_failure(cv.zeros.per_arc[static_cast<size_t>(j)] >= n[j],
                   "arc " + std::to_string(j + 1) + " holds " +
                       std::to_string(cv.zeros.per_arc[static_cast<size_t>(j)]) +
                       " zeros, needs >= " + std::to_string(n[j]),
                   &cv.pass, &cv.failure);
    }
    note_failure(cv.zeros.outside_arcs <= 1,
                 std::to_string(cv.zeros.outside_arcs) +
                     " zeros outside every open arc (at most 1 allowed)",
                 &cv.pass, &cv.failure);
    out.push_back(std::move(cv));
  }
  return out;
}

namespace {

// n_+ - n_- of the ordinary polynomial spanning the full doubled window
// [two_lo, two_hi] of a two-point solve, via the phase winding.
int zero_balance(const HalfLaurentPoly& poly, int two_lo, int two_hi, int grid) {
  std::vector<cplx> c;
  for (int two_k = two_lo; two_k <= two_hi; two_k += 2) {
    c.push_back(poly.coeff_at(two_k));
  }
  const PhaseReport pr = phase(find_roots(c), grid);
  return pr.winding - 1;
}

}  // namespace

std::vector<OffdiagVerdict> verify_offdiag_normality(const MomentEngine& eng,
                                                     int max_index,
                                                     const VerifyOptions& opt) {
  require_tagged(eng.system());
  if (max_index < 0) fail(errc::precondition, "max_index must be >= 0");
  const int r = eng.system().r();
  std::vector<OffdiagVerdict> out;
  for (const MultiIndex& n : index_sweep(r, max_index)) {
    for (int j = 0; j < r; ++j) {
      OffdiagVerdict v;
      v.n = n;
      v.j = j;
      v.pass = true;
      const MultiIndex m = n.bumped(j);
      const int deg = n.total() + m.total();  // 2|n| + 1
      try {
        const SolveResult up = solve_hp(eng, n, m);
        const SolveResult up_star = solve_hp_star(eng, m, n);
        const SolveResult down = solve_hp(eng, m, n);
        const SolveResult down_star = solve_hp_star(eng, n, m);
        v.up = up.report;
        v.down = down.report;
        v.dual_defect_up = max_coeff_distance(sharp(up.poly), up_star.poly);
        v.dual_defect_down = max_coeff_distance(sharp(down.poly), down_star.poly);
        note_failure(up.report.verdict == Verdict::normal,
                     "stepped pair (" + n.str() + ";" + m.str() + ") verdict " +
                         verdict_name(up.report.verdict),
                     &v.pass, &v.failure);
        note_failure(down.report.verdict == Verdict::normal,
                     "stepped pair (" + m.str() + ";" + n.str() + ") verdict " +
                         verdict_name(down.report.verdict),
                     &v.pass, &v.failure);
        note_failure(v.dual_defect_up < 1e-10,
                     "reflected/dual mismatch " + num(v.dual_defect_up),
                     &v.pass, &v.failure);
        note_failure(v.dual_defect_down < 1e-10,
                     "reflected/dual mismatch " + num(v.dual_defect_down),
                     &v.pass, &v.failure);
        v.balance_up =
            zero_balance(up.poly, -2 * m.total(), 2 * n.total(), opt.grid);
        v.balance_down =
            zero_balance(down.poly, -2 * n.total(), 2 * m.total(), opt.grid);
        note_failure(std::abs(v.balance_up) == deg,
                     "zero balance " + std::to_string(v.balance_up) +
                         ", expected +-" + std::to_string(deg),
                     &v.pass, &v.failure);
        note_failure(std::abs(v.balance_down) == deg,
                     "zero balance " + std::to_string(v.balance_down) +
                         ", expected +-" + std::to_string(deg),
                     &v.pass, &v.failure);
      } catch (const Error& e) {
        if (e.code() != errc::non_normal && e.code() != errc::root_on_circle) {
          throw;
        }
        note_failure(false, e.what(), &v.pass, &v.failure);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<CounterexampleRow> counterexample_scan(
    const std::vector<MeasureSystem>& catalog, int max_index) {
  if (max_index < 0) fail(errc::precondition, "max_index must be >= 0");
  std::vector<CounterexampleRow> out;
  int sys_idx = 0;
  for (const MeasureSystem& sys : catalog) {
    ++sys_idx;
    MomentEngine eng(sys);
    const MultiIndex zero = MultiIndex::zero(sys.r());
    for (const MultiIndex& n : index_sweep(sys.r(), max_index)) {
      if (n.total() == 0) continue;
      CounterexampleRow row;
      row.system = sys.label().empty() ? "catalog-" + std::to_string(sys_idx)
                                       : sys.label();
      row.n = n;
      try {
        const SolveResult res = solve_hp(eng, n, zero);
        row.normal = true;
        std::vector<cplx> c;
        for (int two_k = 0; two_k <= 2 * n.total(); two_k += 2) {
          c.push_back(res.poly.coeff_at(two_k));
        }
        for (const cplx& z : find_roots(c)) {
          row.max_abs_root = std::max(row.max_abs_root, std::abs(z));
        }
        row.outside = row.max_abs_root > 1.0 + 1e-8;
      } catch (const Error& e) {
        if (e.code() != errc::non_normal) throw;
        row.normal = false;
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace mopuc
