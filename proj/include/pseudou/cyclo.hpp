#pragma once

// Exact arithmetic in Z[zeta_N] (zeta_N = exp(2*pi*i/N)) together with
// rigorous sign determination for real elements, quantum integers, and the
// root-of-unity conventions used by the conformal-block machinery.
//
// Elements are stored on the redundant cyclic basis 1, zeta, ..., zeta^{N-1}.
// Equality is decided after reduction modulo the N-th cyclotomic polynomial.

#include <complex>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pseudou::cyclo {

using BigInt = boost::multiprecision::cpp_int;

struct order_mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct not_real_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Coefficients of the N-th cyclotomic polynomial, low degree first, monic.
// Cached; thread-safe.
const std::vector<BigInt>& cyclotomic_polynomial(int N);

class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(int order);  // zero element
  CyclotomicNumber(int order, std::vector<BigInt> coeffs);

  static CyclotomicNumber zero(int order) { return CyclotomicNumber(order); }
  static CyclotomicNumber integer(int order, BigInt value);
  static CyclotomicNumber one(int order) { return integer(order, 1); }
  // zeta_N^k
  static CyclotomicNumber root_power(int order, long k);

  int order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  CyclotomicNumber operator+(const CyclotomicNumber& rhs) const;
  CyclotomicNumber operator-(const CyclotomicNumber& rhs) const;
  CyclotomicNumber operator*(const CyclotomicNumber& rhs) const;
  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);

  CyclotomicNumber conjugate() const;

  // Remainder modulo the N-th cyclotomic polynomial, degree < phi(N).
  std::vector<BigInt> reduced() const;

  bool is_zero() const;
  bool operator==(const CyclotomicNumber& rhs) const;
  bool operator!=(const CyclotomicNumber& rhs) const { return !(*this == rhs); }

  bool is_real() const;

  // Numeric value under zeta_N -> exp(2*pi*i/N), double precision only
  // (diagnostics; sign decisions go through sign_of_real).
  std::complex<double> approx() const;

 private:
  int order_;
  std::vector<BigInt> coeffs_;  // length order_
};

// Sign of a real cyclotomic number under the canonical embedding.
// Exact: certifies 0 by cyclotomic reduction, otherwise escalates the
// working precision of the float embedding until the value clears the
// accumulated rounding bound.
int sign_of_real(const CyclotomicNumber& x);

// exp(2*pi*i*exponent/order)
struct RootOfUnity {
  int order;
  int exponent;  // reduced to [0, order)

  RootOfUnity(int order_, long exponent_);

  bool primitive() const;
  // order of the cyclic group generated by this root
  int multiplicative_order() const;
  double arg() const;  // in [0, 2*pi)
  std::complex<double> value() const;
  CyclotomicNumber as_cyclotomic() const;
  // this^k as an element of the same ambient group
  RootOfUnity power(long k) const;
  RootOfUnity conjugate() const { return power(-1); }
};

// Quantum integer [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}), expanded as a
// geometric sum so no division is ever performed.  A must be primitive of
// order 2p.
CyclotomicNumber quantum_integer(long n, const RootOfUnity& A);

// The distinguished primitive 2p-th root A_p:
//   p even:          -exp(2*pi*i/2p)
//   p = 3 (mod 4):    exp(i*pi*(p-1)/2p)
//   p = 1 (mod 4):    exp(i*pi*(p+1)/2p)
RootOfUnity standard_root(int p);

// Order of zeta_p^{-6 - p(p+1)/2}, i.e. p / gcd(p, (6 + p(p+1)/2) mod p).
long theta(long p);

// Order of zeta_{2p}^{-6}; the companion convention to theta, exposed since
// both exponent normalizations are in circulation.
long theta_halfinteger(long p);

}  // namespace pseudou::cyclo
