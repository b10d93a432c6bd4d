#include "pseudou/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace pseudou::cyclo {

namespace {

using Poly = std::vector<BigInt>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of num modulo monic den.
Poly poly_rem(Poly num, const Poly& den) {
  trim(num);
  const size_t d = den.size() - 1;
  while (num.size() > d) {
    const BigInt lead = num.back();
    const size_t shift = num.size() - 1 - d;
    if (lead != 0) {
      for (size_t i = 0; i < d; ++i) num[shift + i] -= lead * den[i];
    }
    num.pop_back();
    trim(num);
  }
  num.resize(d, BigInt(0));
  return num;
}

// Exact quotient num/den for monic den dividing num.
Poly poly_divexact(Poly num, const Poly& den) {
  trim(num);
  const size_t d = den.size() - 1;
  if (num.size() <= d) return {};
  Poly quot(num.size() - d, BigInt(0));
  while (num.size() > d) {
    const BigInt lead = num.back();
    const size_t shift = num.size() - 1 - d;
    quot[shift] = lead;
    for (size_t i = 0; i <= d; ++i) num[shift + i] -= lead * den[i];
    trim(num);
  }
  for (const BigInt& c : num)
    if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
  return quot;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int N) {
  static std::map<int, Poly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  if (auto it = cache.find(N); it != cache.end()) return it->second;
  if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N < 1");

  // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed recursively
  // without re-locking: fill the cache bottom-up for all divisors.
  std::function<const Poly&(int)> get = [&](int n) -> const Poly& {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    Poly num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d == 0) num = poly_divexact(std::move(num), get(d));
    }
    return cache.emplace(n, std::move(num)).first->second;
  };
  return get(N);
}

CyclotomicNumber::CyclotomicNumber(int order)
    : order_(order), coeffs_(order, BigInt(0)) {
  if (order < 1) throw std::invalid_argument("CyclotomicNumber: order < 1");
}

CyclotomicNumber::CyclotomicNumber(int order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw std::invalid_argument("CyclotomicNumber: order < 1");
  if (coeffs_.size() != static_cast<size_t>(order))
    throw std::invalid_argument("CyclotomicNumber: coefficient length != order");
}

CyclotomicNumber CyclotomicNumber::integer(int order, BigInt value) {
  CyclotomicNumber x(order);
  x.coeffs_[0] = std::move(value);
  return x;
}

CyclotomicNumber CyclotomicNumber::root_power(int order, long k) {
  CyclotomicNumber x(order);
  long r = k % order;
  if (r < 0) r += order;
  x.coeffs_[static_cast<size_t>(r)] = 1;
  return x;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& rhs) const {
  CyclotomicNumber out(*this);
  out += rhs;
  return out;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& rhs) const {
  CyclotomicNumber out(*this);
  out -= rhs;
  return out;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& rhs) const {
  CyclotomicNumber out(*this);
  out *= rhs;
  return out;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out(order_);
  for (int k = 0; k < order_; ++k) out.coeffs_[k] = -coeffs_[k];
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  if (rhs.order_ != order_)
    throw order_mismatch_error("cyclotomic order mismatch in +");
  for (int k = 0; k < order_; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  if (rhs.order_ != order_)
    throw order_mismatch_error("cyclotomic order mismatch in -");
  for (int k = 0; k < order_; ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  if (rhs.order_ != order_)
    throw order_mismatch_error("cyclotomic order mismatch in *");
  // cyclic convolution: zeta^N = 1
  std::vector<BigInt> out(order_, BigInt(0));
  for (int i = 0; i < order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < order_; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      int k = i + j;
      if (k >= order_) k -= order_;
      out[k] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
  CyclotomicNumber out(order_);
  for (int k = 0; k < order_; ++k)
    out.coeffs_[(order_ - k) % order_] = coeffs_[k];
  return out;
}

std::vector<BigInt> CyclotomicNumber::reduced() const {
  return poly_rem(coeffs_, cyclotomic_polynomial(order_));
}

bool CyclotomicNumber::is_zero() const {
  const auto r = reduced();
  return std::all_of(r.begin(), r.end(),
                     [](const BigInt& c) { return c == 0; });
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& rhs) const {
  if (rhs.order_ != order_) return false;
  return (*this - rhs).is_zero();
}

bool CyclotomicNumber::is_real() const { return (*this - conjugate()).is_zero(); }

std::complex<double> CyclotomicNumber::approx() const {
  std::complex<double> sum = 0.0;
  for (int k = 0; k < order_; ++k) {
    if (coeffs_[k] == 0) continue;
    const double c = coeffs_[k].convert_to<double>();
    const double t = 2.0 * std::numbers::pi * k / order_;
    sum += c * std::complex<double>(std::cos(t), std::sin(t));
  }
  return sum;
}

namespace {

// One rung of the precision ladder: evaluate the real embedding of the
// reduced coefficient vector and compare against a rounding bound.
// Returns sign if decided, 2 otherwise.
template <typename Real>
int try_sign(const std::vector<BigInt>& coeffs, int N) {
  const Real pi = boost::math::constants::pi<Real>();
  Real value = 0;
  Real magsum = 0;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const Real c = static_cast<Real>(coeffs[k]);
    value += c * cos(2 * pi * static_cast<Real>(k) / N);
    magsum += abs(c);
  }
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real bound = magsum * eps * (4 * N + 16);
  if (value > bound) return 1;
  if (value < -bound) return -1;
  return 2;
}

template <>
int try_sign<double>(const std::vector<BigInt>& coeffs, int N) {
  double value = 0;
  double magsum = 0;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const double c = coeffs[k].convert_to<double>();
    value += c * std::cos(2.0 * std::numbers::pi * k / N);
    magsum += std::abs(c);
  }
  const double bound =
      magsum * std::numeric_limits<double>::epsilon() * (4.0 * N + 16.0);
  if (value > bound) return 1;
  if (value < -bound) return -1;
  return 2;
}

}  // namespace

int sign_of_real(const CyclotomicNumber& x) {
  if (!x.is_real()) throw not_real_error("sign_of_real: input is not real");
  const auto r = x.reduced();
  if (std::all_of(r.begin(), r.end(), [](const BigInt& c) { return c == 0; }))
    return 0;

  using boost::multiprecision::cpp_bin_float_100;
  using boost::multiprecision::cpp_bin_float_50;
  using big200 = boost::multiprecision::number<
      boost::multiprecision::cpp_bin_float<200>>;

  if (int s = try_sign<double>(r, x.order()); s != 2) return s;
  if (int s = try_sign<cpp_bin_float_50>(r, x.order()); s != 2) return s;
  if (int s = try_sign<cpp_bin_float_100>(r, x.order()); s != 2) return s;
  if (int s = try_sign<big200>(r, x.order()); s != 2) return s;
  throw std::runtime_error(
      "sign_of_real: value not separated from zero at 200 digits");
}

RootOfUnity::RootOfUnity(int order_, long exponent_) : order(order_) {
  if (order_ < 1) throw std::invalid_argument("RootOfUnity: order < 1");
  long r = exponent_ % order_;
  if (r < 0) r += order_;
  exponent = static_cast<int>(r);
}

bool RootOfUnity::primitive() const {
  return std::gcd(order, exponent == 0 ? order : exponent) == 1;
}

int RootOfUnity::multiplicative_order() const {
  return order / std::gcd(order, exponent == 0 ? order : exponent);
}

double RootOfUnity::arg() const {
  return 2.0 * std::numbers::pi * exponent / order;
}

std::complex<double> RootOfUnity::value() const {
  return std::polar(1.0, arg());
}

CyclotomicNumber RootOfUnity::as_cyclotomic() const {
  return CyclotomicNumber::root_power(order, exponent);
}

RootOfUnity RootOfUnity::power(long k) const {
  const long e = static_cast<long>(exponent) * (k % order);
  return RootOfUnity(order, e);
}

CyclotomicNumber quantum_integer(long n, const RootOfUnity& A) {
  if (!A.primitive() || A.order % 2 != 0)
    throw std::domain_error("quantum_integer: A must be primitive of even order");
  if (n < 0) return -quantum_integer(-n, A);
  CyclotomicNumber sum(A.order);
  // [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}) = sum_{j<n} A^{2n-2-4j}
  for (long j = 0; j < n; ++j) sum += A.power(2 * n - 2 - 4 * j).as_cyclotomic();
  return sum;
}

RootOfUnity standard_root(int p) {
  if (p < 3) throw std::invalid_argument("standard_root: p < 3");
  if (p % 2 == 0) return RootOfUnity(2 * p, p + 1);  // -exp(2*pi*i/2p)
  if (p % 4 == 3) return RootOfUnity(2 * p, (p - 1) / 2);
  return RootOfUnity(2 * p, (p + 1) / 2);
}

long theta(long p) {
  if (p < 3) throw std::invalid_argument("theta: p < 3");
  const long t = (6 + (p * (p + 1)) / 2) % p;
  return p / std::gcd(p, t);
}

long theta_halfinteger(long p) {
  if (p < 3) throw std::invalid_argument("theta_halfinteger: p < 3");
  return (2 * p) / std::gcd(2 * p, 6L);
}

}  // namespace pseudou::cyclo
