#include "mopuc/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace mopuc {

double Branch::arg(cplx z) const {
  if (z == cplx(0.0, 0.0)) fail(errc::zero_argument, "arg of zero");
  double a = std::arg(z);  // principal value in (-pi, pi]
  while (a < t0) a += kTwoPi;
  while (a >= t0 + kTwoPi) a -= kTwoPi;
  return a;
}

cplx Branch::sqrt(cplx z) const {
  return std::polar(std::sqrt(std::abs(z)), 0.5 * arg(z));
}

cplx Branch::pow_half(cplx z, int k) const {
  if (k == 0) return cplx(1.0, 0.0);
  const cplx s = sqrt(z);
  const cplx base = k > 0 ? s : cplx(1.0, 0.0) / s;
  cplx acc(1.0, 0.0);
  for (int i = 0; i < std::abs(k); ++i) acc *= base;
  return acc;
}

cplx Branch::pow_half_angle(double theta, int k) {
  return std::polar(1.0, 0.5 * static_cast<double>(k) * theta);
}

MultiIndex::MultiIndex(std::vector<int> e) : entries(std::move(e)) {
  for (int v : entries) {
    if (v < 0) fail(errc::precondition, "multi-index entries must be >= 0");
  }
}

MultiIndex MultiIndex::zero(int r) {
  return MultiIndex(std::vector<int>(static_cast<size_t>(r), 0));
}

int MultiIndex::total() const {
  int s = 0;
  for (int v : entries) s += v;
  return s;
}

MultiIndex MultiIndex::bumped(int j) const {
  MultiIndex out = *this;
  out.entries.at(static_cast<size_t>(j)) += 1;
  return out;
}

std::string MultiIndex::str() const {
  std::string s;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries[i]);
  }
  return s;
}

HalfLaurentPoly::HalfLaurentPoly(int two_min, std::vector<cplx> coeffs)
    : two_min_(two_min), coeffs_(std::move(coeffs)) {
  size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == cplx(0.0, 0.0)) ++lo;
  size_t hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == cplx(0.0, 0.0)) --hi;
  if (lo == hi) {
    two_min_ = 0;
    coeffs_.clear();
    return;
  }
  two_min_ += 2 * static_cast<int>(lo);
  coeffs_.erase(coeffs_.begin() + static_cast<long>(hi), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
}

HalfLaurentPoly HalfLaurentPoly::monomial(int two_k, cplx c) {
  return HalfLaurentPoly(two_k, {c});
}

cplx HalfLaurentPoly::coeff_at(int two_k) const {
  if (is_zero()) return cplx(0.0, 0.0);
  const int d = two_k - two_min_;
  if (d < 0 || d % 2 != 0) return cplx(0.0, 0.0);
  const size_t i = static_cast<size_t>(d / 2);
  return i < coeffs_.size() ? coeffs_[i] : cplx(0.0, 0.0);
}

HalfLaurentPoly operator+(const HalfLaurentPoly& a, const HalfLaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if ((a.two_min() - b.two_min()) % 2 != 0) {
    fail(errc::precondition, "exponent grids differ in parity");
  }
  const int lo = std::min(a.two_min(), b.two_min());
  const int hi = std::max(a.two_max(), b.two_max());
  std::vector<cplx> c(static_cast<size_t>((hi - lo) / 2 + 1), cplx(0.0, 0.0));
  for (int k = lo; k <= hi; k += 2) {
    c[static_cast<size_t>((k - lo) / 2)] = a.coeff_at(k) + b.coeff_at(k);
  }
  return HalfLaurentPoly(lo, std::move(c));
}

HalfLaurentPoly operator*(cplx s, const HalfLaurentPoly& p) {
  if (p.is_zero() || s == cplx(0.0, 0.0)) return HalfLaurentPoly();
  std::vector<cplx> c = p.coeffs();
  for (cplx& v : c) v *= s;
  return HalfLaurentPoly(p.two_min(), std::move(c));
}

HalfLaurentPoly operator-(const HalfLaurentPoly& a, const HalfLaurentPoly& b) {
  return a + cplx(-1.0, 0.0) * b;
}

cplx eval(const HalfLaurentPoly& p, cplx z, const Branch& branch) {
  if (z == cplx(0.0, 0.0)) fail(errc::zero_argument, "eval at z = 0");
  if (p.is_zero()) return cplx(0.0, 0.0);
  // p(z) = z^{two_min/2} * (c_0 + c_1 z + ... + c_N z^N)
  cplx horner(0.0, 0.0);
  const auto& c = p.coeffs();
  for (size_t i = c.size(); i-- > 0;) horner = horner * z + c[i];
  return branch.pow_half(z, p.two_min()) * horner;
}

cplx eval_angle(const HalfLaurentPoly& p, double theta) {
  if (p.is_zero()) return cplx(0.0, 0.0);
  const cplx z = std::polar(1.0, theta);
  cplx horner(0.0, 0.0);
  const auto& c = p.coeffs();
  for (size_t i = c.size(); i-- > 0;) horner = horner * z + c[i];
  return Branch::pow_half_angle(theta, p.two_min()) * horner;
}

HalfLaurentPoly sharp(const HalfLaurentPoly& p) {
  if (p.is_zero()) return p;
  std::vector<cplx> c(p.coeffs().rbegin(), p.coeffs().rend());
  for (cplx& v : c) v = std::conj(v);
  return HalfLaurentPoly(-p.two_max(), std::move(c));
}

HalfLaurentPoly shift_half(const HalfLaurentPoly& p, int k) {
  if (p.is_zero()) return p;
  return HalfLaurentPoly(p.two_min() + k, p.coeffs());
}

OrdinaryForm to_ordinary(const HalfLaurentPoly& p) {
  if (p.is_zero()) fail(errc::zero_polynomial, "no ordinary form of 0");
  return OrdinaryForm{p.coeffs(), p.two_min()};
}

double max_coeff_distance(const HalfLaurentPoly& a, const HalfLaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  if (a.is_zero() || b.is_zero()) {
    const HalfLaurentPoly& q = a.is_zero() ? b : a;
    double m = 0.0;
    for (const cplx& v : q.coeffs()) m = std::max(m, std::abs(v));
    return m;
  }
  if ((a.two_min() - b.two_min()) % 2 != 0) {
    double m = 0.0;
    for (const cplx& v : a.coeffs()) m = std::max(m, std::abs(v));
    for (const cplx& v : b.coeffs()) m = std::max(m, std::abs(v));
    return m;
  }
  const int lo = std::min(a.two_min(), b.two_min());
  const int hi = std::max(a.two_max(), b.two_max());
  double m = 0.0;
  for (int k = lo; k <= hi; k += 2) {
    m = std::max(m, std::abs(a.coeff_at(k) - b.coeff_at(k)));
  }
  return m;
}

}  // namespace mopuc
