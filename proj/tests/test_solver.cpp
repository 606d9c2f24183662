#include "mopuc/solver.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "oracle.hpp"
#include "support.hpp"

using namespace mopuc;
using support::close;
using support::expect_error;
using support::mi;

namespace {

double max_residual(const SolveResult& r) {
  double m = 0.0;
  for (double v : r.residuals) m = std::max(m, v);
  return m;
}

}  // namespace

TEST_CASE("Lebesgue phi_2 collapses to z") {
  const MomentEngine eng(preset("SYS-LEB"));
  const SolveResult r = solve_phi(eng, mi({2}));
  CHECK(r.report.verdict == Verdict::normal);
  CHECK(r.poly.coeff_at(2) == cplx(1.0, 0.0));  // pinned monic coefficient
  CHECK(std::abs(r.poly.coeff_at(0)) < 1e-12);
  CHECK(std::abs(r.poly.coeff_at(-2)) < 1e-12);
  CHECK(max_residual(r) < 1e-12);
  CHECK(r.report.det_available);
  CHECK(std::abs(r.report.det - cplx(1.0, 0.0)) < 1e-12);
  CHECK(!r.alpha.has_value());
  CHECK(!r.beta.has_value());
}

TEST_CASE("phi_0 is the unit polynomial under the normality convention") {
  const MomentEngine eng(preset("SYS-A2"));
  const SolveResult r = solve_phi(eng, mi({0, 0}));
  CHECK(r.poly.coeff_at(0) == cplx(1.0, 0.0));
  CHECK(r.poly.two_min() == 0);
  CHECK(r.report.verdict == Verdict::normal);
  CHECK(r.report.ratio == 1.0);
}

TEST_CASE("r = 1 solutions match the Szego recurrence") {
  const MeasureSystem sys = preset("SYS-BS:0.5");
  const MomentEngine eng(sys);
  const auto mom = [&](int k) { return oracle::moment(sys, 0, 2 * k); };
  const auto classical = oracle::szego_monic(mom, 5);

  for (int n = 1; n <= 5; ++n) {
    const SolveResult r = solve_phi(eng, mi({n}));
    REQUIRE(r.report.verdict == Verdict::normal);
    // z^{n/2} phi_n is the monic ordinary polynomial of degree n.
    const OrdinaryForm ord = to_ordinary(r.poly);
    REQUIRE(ord.two_shift == -n);
    REQUIRE(ord.coeffs.size() == classical[static_cast<size_t>(n)].size());
    for (size_t k = 0; k < ord.coeffs.size(); ++k) {
      CHECK_MESSAGE(
          std::abs(ord.coeffs[k] - classical[static_cast<size_t>(n)][k]) < 1e-9,
          "n=" << n << " k=" << k);
    }
  }

  // First step explicitly: phi_1 = z^{1/2} - 0.5 z^{-1/2}.
  const SolveResult r1 = solve_phi(eng, mi({1}));
  CHECK(close(r1.poly.coeff_at(1), cplx(1.0, 0.0), 1e-12));
  CHECK(close(r1.poly.coeff_at(-1), cplx(-0.5, 0.0), 1e-9));
}

TEST_CASE("two-component solve agrees with a direct dense solve") {
  const MeasureSystem sys = preset("SYS-A2");
  const MomentEngine eng(sys);
  const SolveResult r = solve_phi(eng, mi({1, 1}));
  REQUIRE(r.report.verdict == Verdict::normal);

  // phi_(1,1) = z + c0 + cm z^{-1}; condition sum_k c_k m_j(k + 1/2) = 0.
  Eigen::Matrix2cd a;
  Eigen::Vector2cd b;
  for (int j = 0; j < 2; ++j) {
    a(j, 0) = oracle::moment(sys, j, -1);  // m_j(-1/2) multiplies cm
    a(j, 1) = oracle::moment(sys, j, 1);   // m_j(1/2)  multiplies c0
    b(j) = -oracle::moment(sys, j, 3);     // -m_j(3/2)
  }
  const Eigen::Vector2cd x = a.partialPivLu().solve(b);
  CHECK(std::abs(r.poly.coeff_at(-2) - x(0)) < 1e-9);
  CHECK(std::abs(r.poly.coeff_at(0) - x(1)) < 1e-9);
  CHECK(r.poly.coeff_at(2) == cplx(1.0, 0.0));
}

TEST_CASE("sharp solve is the reflected polynomial with its own residuals") {
  const MomentEngine leb(preset("SYS-LEB"));
  const SolveResult s2 = solve_phi_sharp(leb, mi({2}));
  CHECK(s2.poly.coeff_at(-2) == cplx(1.0, 0.0));  // sharp(z) = 1/z
  CHECK(std::abs(s2.poly.coeff_at(0)) < 1e-12);
  CHECK(std::abs(s2.poly.coeff_at(2)) < 1e-12);

  const MomentEngine bs(preset("SYS-BS:0.5"));
  const SolveResult s1 = solve_phi_sharp(bs, mi({1}));
  CHECK(close(s1.poly.coeff_at(-1), cplx(1.0, 0.0), 1e-12));
  CHECK(close(s1.poly.coeff_at(1), cplx(-0.5, 0.0), 1e-9));

  const MomentEngine a2(preset("SYS-A2"));
  const MultiIndex n = mi({2, 1});
  const SolveResult sharp_solve = solve_phi_sharp(a2, n);
  CHECK(max_coeff_distance(sharp_solve.poly, sharp(solve_phi(a2, n).poly)) == 0.0);
  CHECK(max_residual(sharp_solve) < 1e-10);
}

TEST_CASE("two-point solve: classical cases") {
  const MomentEngine bs(preset("SYS-BS:0.5"));
  const SolveResult r = solve_hp(bs, mi({1}), mi({0}));
  CHECK(r.poly.coeff_at(2) == cplx(1.0, 0.0));
  CHECK(close(r.poly.coeff_at(0), cplx(-0.5, 0.0), 1e-9));
  REQUIRE(r.alpha.has_value());
  CHECK(close(*r.alpha, cplx(-0.5, 0.0), 1e-9));

  const MomentEngine leb(preset("SYS-LEB"));
  const SolveResult l = solve_hp(leb, mi({1}), mi({1}));
  CHECK(l.poly.coeff_at(2) == cplx(1.0, 0.0));
  CHECK(std::abs(l.poly.coeff_at(0)) < 1e-12);
  CHECK(std::abs(l.poly.coeff_at(-2)) < 1e-12);
}

TEST_CASE("diagonal two-point solve reproduces phi with doubled index") {
  const MomentEngine eng(preset("SYS-A2"));
  const SolveResult hp = solve_hp(eng, mi({1, 1}), mi({1, 1}));
  const SolveResult phi = solve_phi(eng, mi({2, 2}));
  // Identical linear systems (same cache entries, same elimination order).
  CHECK(max_coeff_distance(hp.poly, phi.poly) <= 1e-15);
  CHECK(max_residual(hp) < 1e-10);
}

TEST_CASE("dual two-point solve and the reflection duality") {
  const MomentEngine leb(preset("SYS-LEB"));
  const SolveResult l = solve_hp_star(leb, mi({1}), mi({1}));
  CHECK(l.poly.coeff_at(-2) == cplx(1.0, 0.0));
  CHECK(std::abs(l.poly.coeff_at(0)) < 1e-12);
  CHECK(std::abs(l.poly.coeff_at(2)) < 1e-12);
  REQUIRE(l.beta.has_value());
  CHECK(std::abs(*l.beta) < 1e-12);

  // sharp(Phi_{n,m}) solves the dual problem with the indices swapped.
  const MomentEngine a2(preset("SYS-A2"));
  const MultiIndex n = mi({1, 0});
  const MultiIndex m = mi({0, 1});
  const SolveResult up = solve_hp(a2, n, m);
  const SolveResult dual = solve_hp_star(a2, m, n);
  CHECK(max_coeff_distance(sharp(up.poly), dual.poly) < 1e-10);

  const MomentEngine bs(preset("SYS-BS:0.5"));
  const SolveResult star = solve_hp_star(bs, mi({0}), mi({1}));
  CHECK(star.poly.coeff_at(-2) == cplx(1.0, 0.0));
  CHECK(close(star.poly.coeff_at(0), cplx(-0.5, 0.0), 1e-9));
  const SolveResult swapped = solve_hp(bs, mi({1}), mi({0}));
  CHECK(max_coeff_distance(sharp(swapped.poly), star.poly) < 1e-10);
}

TEST_CASE("residual scale invariant on normal solves") {
  for (const char* name : {"SYS-A2", "SYS-AT2"}) {
    const MomentEngine eng(preset(name));
    for (const auto& n : {mi({1, 0}), mi({1, 1}), mi({2, 1}), mi({2, 2})}) {
      const SolveResult r = solve_phi(eng, n);
      CHECK_MESSAGE(max_residual(r) <= 1e-9 * std::max(1.0, r.scale),
                    name << " n=" << n.str());
    }
  }
}

TEST_CASE("normality scans on the documented ranges") {
  const MomentEngine a2(preset("SYS-A2"));
  const auto phi_rows = normality_scan(a2, 3, ScanMode::phi);
  CHECK(phi_rows.size() == 16);
  for (const auto& row : phi_rows) {
    CHECK_MESSAGE(row.report.verdict == Verdict::normal, "n=" << row.n.str());
    CHECK(row.m.size() == 0);
  }

  const MomentEngine at2(preset("SYS-AT2"));
  const auto off_rows = normality_scan(at2, 1, ScanMode::hp_offdiag);
  CHECK(off_rows.size() == 16);  // 4 indices x 2 directions x 2 orders
  for (const auto& row : off_rows) {
    CHECK_MESSAGE(row.report.verdict == Verdict::normal,
                  "n=" << row.n.str() << " m=" << row.m.str());
  }

  const auto diag_rows = normality_scan(a2, 2, ScanMode::hp_diag);
  CHECK(diag_rows.size() == 9);
  for (const auto& row : diag_rows) CHECK(row.n == row.m);
}

TEST_CASE("coinciding measures destroy normality") {
  // Two copies of the same measure give a rank-deficient moment matrix.
  const MeasureSystem degenerate = make_at_system(
      Arc{0.2, 1.2}, {Weight::uniform(1.0), Weight::uniform(1.0)});
  const MomentEngine eng(degenerate);
  const NormalityReport rep = assess_normality(eng.build_T(mi({1, 1})));
  CHECK(rep.verdict == Verdict::non_normal);
  expect_error(errc::non_normal, [&] { solve_phi(eng, mi({1, 1})); });
}

TEST_CASE("verdict thresholds act on the singular-value ratio") {
  const MomentEngine eng(preset("SYS-AT2"));
  const NormalityReport rep = assess_normality(eng.build_T(mi({2, 2})));
  CHECK(rep.sigma_min <= rep.sigma_max);
  CHECK(close(rep.ratio, rep.sigma_min / rep.sigma_max, 1e-15));
  CHECK(rep.verdict == Verdict::normal);
  CHECK(rep.ratio > kNormalRatio);
  CHECK(rep.det_available);
  CHECK(std::abs(rep.det) > 0.0);
}

TEST_CASE("index sweep order: last coordinate fastest") {
  const auto sweep = index_sweep(2, 1);
  REQUIRE(sweep.size() == 4);
  CHECK(sweep[0] == mi({0, 0}));
  CHECK(sweep[1] == mi({0, 1}));
  CHECK(sweep[2] == mi({1, 0}));
  CHECK(sweep[3] == mi({1, 1}));
  CHECK(index_sweep(1, 3).size() == 4);
}

TEST_CASE("index length must match the system") {
  const MomentEngine eng(preset("SYS-A2"));
  expect_error(errc::precondition, [&] { solve_phi(eng, mi({1})); });
  expect_error(errc::precondition, [&] { solve_hp(eng, mi({1, 1}), mi({1})); });
}
