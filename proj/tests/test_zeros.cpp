#include "mopuc/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "support.hpp"

using namespace mopuc;
using support::close;
using support::expect_error;
using support::mi;

namespace {

// Ascending coefficients of prod (z - roots[i]).
std::vector<cplx> from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{cplx(1.0, 0.0)};
  for (const cplx& r : roots) {
    std::vector<cplx> next(c.size() + 1, cplx(0.0, 0.0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

bool matches_some_root(const std::vector<cplx>& roots, cplx want, double tol) {
  return std::any_of(roots.begin(), roots.end(),
                     [&](cplx r) { return std::abs(r - want) < tol; });
}

}  // namespace

TEST_CASE("companion-matrix roots on planted polynomials") {
  const auto quad = find_roots({cplx(2.0, 0.0), cplx(-3.0, 0.0), cplx(1.0, 0.0)});
  REQUIRE(quad.size() == 2);
  CHECK(matches_some_root(quad, cplx(1.0, 0.0), 1e-12));
  CHECK(matches_some_root(quad, cplx(2.0, 0.0), 1e-12));

  const std::vector<cplx> planted = {
      cplx(0.3, 0.4),  cplx(-0.7, 0.1), cplx(0.0, -0.9),
      cplx(1.2, -0.3), cplx(-1.1, 1.0), cplx(0.05, 0.0)};
  const auto got = find_roots(from_roots(planted));
  REQUIRE(got.size() == planted.size());
  for (const cplx& want : planted) {
    CHECK_MESSAGE(matches_some_root(got, want, 1e-10),
                  "missing root " << want.real() << "+" << want.imag() << "i");
  }

  CHECK(find_roots({cplx(1.0, 0.0), cplx(1.0, 0.0)}).size() == 1);  // z = -1
  expect_error(errc::degenerate_leading,
               [] { find_roots({cplx(1.0, 0.0), cplx(0.0, 0.0)}); });
}

TEST_CASE("zero report of the symmetric-span completion") {
  const MeasureSystem leb = preset("SYS-LEB");
  const MomentEngine eng(leb);

  // phi_3 = z^{3/2}: completion z^3, a triple zero at the origin.  The
  // coefficient noise of the solve (~1e-16) scatters a triple root by its
  // cube root, so only ~1e-5 accuracy is meaningful here.
  const HalfLaurentPoly phi3 = solve_phi(eng, mi({3})).poly;
  const ZeroReport r3 = zero_report(leb, phi3);
  REQUIRE(r3.roots.size() == 3);
  CHECK(r3.n_plus == 3);
  CHECK(r3.n_on == 0);
  CHECK(r3.n_minus == 0);
  for (const cplx& z : r3.roots) CHECK(std::abs(z) < 1e-4);

  // Multiplicity clustering on an exact double root: z^{-1}(z - 0.5)^2
  // completes to (z - 0.5)^2, and the sqrt(eps) eigenvalue splitting stays
  // inside the 1e-7 cluster radius.
  const HalfLaurentPoly dbl(-2, from_roots({cplx(0.5, 0.0), cplx(0.5, 0.0)}));
  const ZeroReport rd = zero_report(leb, dbl);
  REQUIRE(rd.roots.size() == 2);
  for (const cplx& z : rd.roots) CHECK(std::abs(z - cplx(0.5, 0.0)) < 1e-7);
  REQUIRE(rd.clusters.size() == 1);
  CHECK(rd.clusters[0].size() == 2);
  CHECK(rd.min_pairwise_gap < 1e-7);

  // x = z + 1/z for tau = 1: completion z^2 + 1 with zeros +-i on the circle.
  const ParaPoly p = build_para(solve_phi(eng, mi({1})).poly, cplx(1.0, 0.0));
  const ZeroReport rc = zero_report(leb, p.x);
  REQUIRE(rc.roots.size() == 2);
  CHECK(rc.n_on == 2);
  CHECK(matches_some_root(rc.roots, cplx(0.0, 1.0), 1e-10));
  CHECK(matches_some_root(rc.roots, cplx(0.0, -1.0), 1e-10));
  REQUIRE(rc.per_arc.size() == 1);
  CHECK(rc.per_arc[0] == 2);
  CHECK(rc.outside_arcs == 0);
  CHECK(close(rc.min_pairwise_gap, 2.0, 1e-9));
  CHECK(rc.clusters.size() == 2);  // two singletons, no multiplicity

  // Roots are sorted by (re, im).
  CHECK(rc.roots[0].imag() < rc.roots[1].imag());
}

TEST_CASE("zero report classifies against tol_circle") {
  const MeasureSystem leb = preset("SYS-LEB");
  // z^{-1} (z - 0.5)(z - (1+1e-6)): symmetric span, completion restores the
  // original quadratic.
  const std::vector<cplx> roots = {cplx(0.5, 0.0), cplx(1.0 + 1e-6, 0.0)};
  const auto c = from_roots(roots);
  const HalfLaurentPoly p(-2, c);
  const ZeroReport tight = zero_report(leb, p, 1e-8);
  CHECK(tight.n_plus == 1);
  CHECK(tight.n_minus == 1);
  const ZeroReport loose = zero_report(leb, p, 1e-4);
  CHECK(loose.n_plus == 1);
  CHECK(loose.n_on == 1);
  CHECK(loose.tol_circle == 1e-4);
}

TEST_CASE("Blaschke phase winding counts zeros by the argument principle") {
  const PhaseReport empty = phase({}, 64);
  CHECK(empty.winding == 1);
  CHECK(empty.monotone);
  CHECK(empty.min_abs_derivative > 0.0);
  CHECK(empty.theta.size() == 65);
  CHECK(std::abs(empty.winding_residual) < 1e-9);

  const PhaseReport one_in = phase({cplx(0.5, 0.0)}, 256);
  CHECK(one_in.winding == 2);
  CHECK(one_in.monotone);

  const PhaseReport one_out = phase({cplx(2.0, 0.0)}, 256);
  CHECK(one_out.winding == 0);

  expect_error(errc::root_on_circle,
               [] { phase({std::polar(1.0, 0.3)}, 64); });
  expect_error(errc::precondition, [] { phase({}, 8); });  // grid too small

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> radius(0.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> roots;
    int n_plus = 0, n_minus = 0;
    for (int k = 0; k < 6; ++k) {
      double rho = radius(rng);
      if (std::abs(rho - 1.0) < 0.05) rho = 0.5;  // keep off the circle
      roots.push_back(std::polar(rho, angle(rng)));
      (rho < 1.0 ? n_plus : n_minus) += 1;
    }
    const PhaseReport rep = phase(roots, 512);
    CHECK_MESSAGE(rep.winding == n_plus + 1 - n_minus, "trial " << trial);
  }
}

TEST_CASE("zeros-in-disk verification on the presets") {
  const MomentEngine leb(preset("SYS-LEB"));
  const DiskVerdict dl = verify_zeros_in_disk(leb, mi({3}));
  CHECK(dl.pass);
  CHECK(dl.failure.empty());
  CHECK(dl.zeros.n_plus == 3);
  CHECK(dl.phase.winding == 4);
  CHECK(dl.phase.monotone);

  const MomentEngine a2(preset("SYS-A2"));
  for (const auto& n : {mi({2, 1}), mi({2, 2}), mi({0, 3})}) {
    const DiskVerdict v = verify_zeros_in_disk(a2, n);
    CHECK_MESSAGE(v.pass, "n=" << n.str() << ": " << v.failure);
    CHECK(v.zeros.n_plus == n.total());
    CHECK(v.phase.winding == n.total() + 1);
  }

  // A blunt margin no solution can meet turns into a reported failure.
  VerifyOptions opt;
  opt.disk_margin = 0.999;
  const DiskVerdict forced = verify_zeros_in_disk(a2, mi({2, 1}), opt);
  CHECK(!forced.pass);
  CHECK(!forced.failure.empty());
}

TEST_CASE("unimodular-zero verification across tau") {
  const MomentEngine leb(preset("SYS-LEB"));
  const auto vl = verify_circle_zeros(leb, mi({1}), {cplx(1.0, 0.0)});
  REQUIRE(vl.size() == 1);
  CHECK(vl[0].pass);
  CHECK(matches_some_root(vl[0].zeros.roots, cplx(0.0, 1.0), 1e-9));
  CHECK(matches_some_root(vl[0].zeros.roots, cplx(0.0, -1.0), 1e-9));

  const MomentEngine a2(preset("SYS-A2"));
  const MultiIndex n22 = mi({2, 2});
  const std::vector<cplx> quarter = {cplx(1.0, 0.0), cplx(-1.0, 0.0),
                                     cplx(0.0, 1.0), cplx(0.0, -1.0)};
  for (const CircleVerdict& v : verify_circle_zeros(a2, n22, quarter)) {
    CHECK_MESSAGE(v.pass, "tau=(" << v.tau.real() << "," << v.tau.imag()
                                  << "): " << v.failure);
    CHECK(v.zeros.n_on == 5);
    REQUIRE(v.zeros.per_arc.size() == 2);
    CHECK(v.zeros.per_arc[0] >= 2);
    CHECK(v.zeros.per_arc[1] >= 2);
    CHECK(v.zeros.outside_arcs <= 1);
    CHECK(v.zeros.min_pairwise_gap > 1e-6);
  }

  const MomentEngine at2(preset("SYS-AT2"));
  std::vector<cplx> taus;
  for (int k = 0; k < 8; ++k) taus.push_back(std::polar(1.0, kTwoPi * k / 8.0));
  for (const CircleVerdict& v : verify_circle_zeros(at2, mi({2, 1}), taus)) {
    CHECK_MESSAGE(v.pass, v.failure);
    CHECK(v.zeros.n_on == 4);
  }

  // Impossible classification band: every tau must report a failure.
  VerifyOptions opt;
  opt.tol_circle = 1e-20;
  for (const CircleVerdict& v : verify_circle_zeros(a2, n22, quarter, opt)) {
    CHECK(!v.pass);
    CHECK(v.failure.find("unimodular") != std::string::npos);
  }
}

TEST_CASE("paraorthogonal polynomial factors through its reported zeros") {
  const MomentEngine a2(preset("SYS-A2"));
  const MultiIndex n = mi({2, 1});
  const ParaPoly p =
      build_para(solve_phi(a2, n).poly, std::polar(1.0, 0.9));
  const ZeroReport rep = zero_report(a2.system(), p.x);

  // completion(z) = z^{K/2} x(z) = z^{(K + two_min)/2} * ordinary(z).
  const OrdinaryForm ord = to_ordinary(p.x);
  const cplx lead = ord.coeffs.back();
  const int big = std::max(std::abs(p.x.two_min()), std::abs(p.x.two_max()));
  const int origin_zeros = (big + p.x.two_min()) / 2;
  REQUIRE(rep.roots.size() ==
          ord.coeffs.size() - 1 + static_cast<size_t>(origin_zeros));

  for (int k = 0; k < 100; ++k) {
    const double theta = 0.013 + kTwoPi * k / 100.0;
    const cplx z = std::polar(1.0, theta);
    cplx prod = lead;
    for (const cplx& r : rep.roots) prod *= (z - r);
    cplx direct(0.0, 0.0);
    cplx zk(1.0, 0.0);
    for (const cplx& c : ord.coeffs) {
      direct += c * zk;
      zk *= z;
    }
    for (int i = 0; i < origin_zeros; ++i) direct *= z;
    CHECK(std::abs(prod - direct) < 1e-8 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("stepped-pair verification and duality defects") {
  const MomentEngine a2(preset("SYS-A2"));
  const auto verdicts = verify_offdiag_normality(a2, 1);
  CHECK(verdicts.size() == 8);  // 4 indices x 2 steps
  for (const OffdiagVerdict& v : verdicts) {
    CHECK_MESSAGE(v.pass, "n=" << v.n.str() << " j=" << v.j << ": " << v.failure);
    CHECK(v.up.verdict == Verdict::normal);
    CHECK(v.down.verdict == Verdict::normal);
    CHECK(v.dual_defect_up < 1e-10);
    CHECK(v.dual_defect_down < 1e-10);
    const int expected = 2 * v.n.total() + 1;
    CHECK(std::abs(v.balance_up) == expected);
    CHECK(std::abs(v.balance_down) == expected);
  }
}

TEST_CASE("one-sided zero scan over the catalog") {
  const auto catalog = angelesco_catalog();
  REQUIRE(catalog.size() >= 2);
  const auto rows = counterexample_scan(catalog, 2);
  // (max_index+1)^2 - 1 nonzero indices per two-component system.
  CHECK(rows.size() == catalog.size() * 8);
  for (const CounterexampleRow& row : rows) {
    CHECK(!row.system.empty());
    CHECK(row.max_abs_root > 0.0);
    CHECK_MESSAGE(!row.outside, row.system << " n=" << row.n.str()
                                           << " |z|=" << row.max_abs_root);
  }
  CHECK(counterexample_scan({}, 3).empty());
}
