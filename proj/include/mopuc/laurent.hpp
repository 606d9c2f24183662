#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mopuc/errors.hpp"

namespace mopuc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// ---------------------------------------------------------------------------
// Branch of the square root.
//
// Half-integer powers are defined through a fixed branch
//
//   z^{1/2} = |z|^{1/2} exp(i arg(z)/2),   arg(z) in [t0, t0 + 2*pi),
//
// and z^{k/2} = (z^{1/2})^k for integer k, so all half powers are mutually
// consistent.  The cut sits at angle t0; measure systems choose t0 so their
// support never crosses the cut.
// ---------------------------------------------------------------------------
struct Branch {
  double t0 = 0.0;

  // Argument of z normalized into [t0, t0 + 2*pi).  Throws ZeroArgument.
  double arg(cplx z) const;

  // Branch square root.  Throws ZeroArgument.
  cplx sqrt(cplx z) const;

  // z^{k/2} for integer k of either sign, computed as (z^{1/2})^k.
  cplx pow_half(cplx z, int k) const;

  // e^{i k theta/2}.  theta is taken as given; callers keep it inside the
  // branch window when the distinction matters.
  static cplx pow_half_angle(double theta, int k);
};

// Multi-index n = (n_1, ..., n_r) of nonnegative integers.
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e);

  static MultiIndex zero(int r);

  int size() const { return static_cast<int>(entries.size()); }
  int operator[](int j) const { return entries[static_cast<size_t>(j)]; }
  int total() const;  // |n|

  MultiIndex bumped(int j) const;  // n + e_j
  std::string str() const;         // "n1,n2,..."

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// ---------------------------------------------------------------------------
// Laurent polynomial with exponents on a unit-spaced grid of integers or
// half-integers.  Exponents are stored doubled so the grid is integral:
// coeffs[i] multiplies z^{(two_min + 2i)/2}.  Construction trims exact-zero
// leading/trailing coefficients; the zero polynomial has empty coeffs.
// Values are immutable.
// ---------------------------------------------------------------------------
class HalfLaurentPoly {
 public:
  HalfLaurentPoly() = default;  // zero polynomial
  HalfLaurentPoly(int two_min, std::vector<cplx> coeffs);

  // c * z^{two_k/2}
  static HalfLaurentPoly monomial(int two_k, cplx c = cplx(1.0, 0.0));

  bool is_zero() const { return coeffs_.empty(); }
  int two_min() const { return two_min_; }
  int two_max() const {
    return two_min_ + 2 * (static_cast<int>(coeffs_.size()) - 1);
  }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  // Coefficient of z^{two_k/2}; zero off the support or off the parity grid.
  cplx coeff_at(int two_k) const;

 private:
  int two_min_ = 0;
  std::vector<cplx> coeffs_;
};

HalfLaurentPoly operator+(const HalfLaurentPoly& a, const HalfLaurentPoly& b);
HalfLaurentPoly operator*(cplx s, const HalfLaurentPoly& p);
HalfLaurentPoly operator-(const HalfLaurentPoly& a, const HalfLaurentPoly& b);

// p(z) under the given branch.  Throws ZeroArgument for z = 0.
cplx eval(const HalfLaurentPoly& p, cplx z, const Branch& branch);

// p(e^{i theta}) = sum c_k e^{i k theta}, exact on the unit circle.
cplx eval_angle(const HalfLaurentPoly& p, double theta);

// f#(z) = conj(f(1/conj(z))): coefficient c_k -> conj(c_{-k}).
HalfLaurentPoly sharp(const HalfLaurentPoly& p);

// Multiplication by z^{k/2}: shifts every exponent by k/2.
HalfLaurentPoly shift_half(const HalfLaurentPoly& p, int k);

// Ordinary-polynomial view of z^{-two_min/2} * p(z).
struct OrdinaryForm {
  std::vector<cplx> coeffs;  // ascending, coeffs[m] multiplies z^m
  int two_shift = 0;         // doubled exponent removed (= p.two_min())
};

// Throws ZeroPolynomial for the zero polynomial.
OrdinaryForm to_ordinary(const HalfLaurentPoly& p);

// max_k |a_k - b_k| over the union of supports.
double max_coeff_distance(const HalfLaurentPoly& a, const HalfLaurentPoly& b);

}  // namespace mopuc
