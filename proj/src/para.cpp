#include "mopuc/para.hpp"

#include <algorithm>
#include <cmath>

namespace mopuc {

ParaPoly build_para(const HalfLaurentPoly& phi, cplx tau) {
  if (std::abs(std::abs(tau) - 1.0) > 1e-14) {
    fail(errc::non_unimodular_tau, "|tau| must be 1");
  }
  if (phi.is_zero()) fail(errc::precondition, "zero polynomial");

  const HalfLaurentPoly raw =
      shift_half(phi, 1) + tau * shift_half(sharp(phi), -1);

  // Symmetrize rounding error: c_k <- (c_k + tau*conj(c_{-k})) / 2 over the
  // symmetric grid.
  const int hi = std::max(std::abs(raw.two_min()), std::abs(raw.two_max()));
  std::vector<cplx> c(static_cast<size_t>(hi + 1), cplx(0.0, 0.0));
  for (int two_k = -hi; two_k <= hi; two_k += 2) {
    const cplx v =
        0.5 * (raw.coeff_at(two_k) + tau * std::conj(raw.coeff_at(-two_k)));
    c[static_cast<size_t>((two_k + hi) / 2)] = v;
  }
  return ParaPoly{HalfLaurentPoly(-hi, std::move(c)), tau};
}

double tau_invariance_defect(const ParaPoly& p) {
  if (p.x.is_zero()) return 0.0;
  const int hi = std::max(std::abs(p.x.two_min()), std::abs(p.x.two_max()));
  double d = 0.0;
  for (int two_k = -hi; two_k <= hi; two_k += 2) {
    d = std::max(d, std::abs(p.x.coeff_at(two_k) -
                             p.tau * std::conj(p.x.coeff_at(-two_k))));
  }
  return d;
}

std::vector<TrigCoeff> trig_form(const ParaPoly& p, const Branch& branch) {
  if (p.x.is_zero()) fail(errc::precondition, "zero polynomial");
  double scale = 0.0;
  for (const cplx& v : p.x.coeffs()) scale = std::max(scale, std::abs(v));
  if (tau_invariance_defect(p) > 1e-12 * std::max(scale, 1.0)) {
    fail(errc::not_tau_invariant, "reflection symmetry broken");
  }

  const cplx tau_inv_sqrt = branch.pow_half(p.tau, -1);
  const int hi = std::max(std::abs(p.x.two_min()), std::abs(p.x.two_max()));
  std::vector<TrigCoeff> out;
  for (int two_k = hi % 2; two_k <= hi; two_k += 2) {
    // d_k = tau^{-1/2} c_k satisfies d_{-k} = conj(d_k); average both sides.
    const cplx d = 0.5 * (tau_inv_sqrt * p.x.coeff_at(two_k) +
                          std::conj(tau_inv_sqrt * p.x.coeff_at(-two_k)));
    if (two_k == 0) {
      out.push_back(TrigCoeff{0, 0.5 * d.real(), 0.0});
    } else {
      out.push_back(TrigCoeff{two_k, d.real(), -d.imag()});
    }
  }
  return out;
}

std::vector<double> para_residuals(const MomentEngine& eng, const ParaPoly& p,
                                   const MultiIndex& n) {
  if (n.size() != eng.system().r()) fail(errc::precondition, "index size != r");
  if (p.x.is_zero()) fail(errc::precondition, "zero polynomial");
  std::vector<double> out;
  for (int j = 0; j < n.size(); ++j) {
    for (int two_p = -(n[j] - 1); two_p <= n[j] - 1; two_p += 2) {
      cplx acc(0.0, 0.0);
      for (int two_k = p.x.two_min(); two_k <= p.x.two_max(); two_k += 2) {
        const cplx c = p.x.coeff_at(two_k);
        if (c != cplx(0.0, 0.0)) acc += c * eng.moment(j, two_k - two_p);
      }
      out.push_back(std::abs(acc));
    }
  }
  return out;
}

}  // namespace mopuc
