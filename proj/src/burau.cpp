#include "pseudou/burau.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pseudou/cyclo.hpp"

namespace pseudou::burau {

void BraidWord::validate() const {
  if (strands < 2) throw std::invalid_argument("braid needs >= 2 strands");
  for (int l : letters)
    if (l == 0 || std::abs(l) > strands - 1)
      throw std::invalid_argument("generator index out of range");
}

std::vector<int> BraidWord::permutation() const {
  validate();
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : letters) {
    const int i = std::abs(l) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  return perm;
}

bool BraidWord::pure() const {
  const auto perm = permutation();
  for (int i = 0; i < strands; ++i)
    if (perm[i] != i) return false;
  return true;
}

BraidWord pure_braid_generator(int k, int i, int j) {
  if (!(1 <= i && i < j && j <= k))
    throw std::invalid_argument("need 1 <= i < j <= k");
  BraidWord w;
  w.strands = k;
  for (int m = j - 1; m > i; --m) w.letters.push_back(m);
  w.letters.push_back(i);
  w.letters.push_back(i);
  for (int m = i + 1; m <= j - 1; ++m) w.letters.push_back(-m);
  w.validate();
  return w;
}

namespace {

Matrix burau_generator(int k, int i, Complex q) {
  Matrix M = Matrix::Identity(k - 1, k - 1);
  // 1-based row/column i
  M(i - 1, i - 1) = -q;
  if (i > 1) M(i - 1, i - 2) = q;
  if (i < k - 1) M(i - 1, i) = 1.0;
  return M;
}

Matrix burau_generator_inverse(int k, int i, Complex q) {
  Matrix M = Matrix::Identity(k - 1, k - 1);
  const Complex qi = 1.0 / q;
  M(i - 1, i - 1) = -qi;
  if (i > 1) M(i - 1, i - 2) = 1.0;
  if (i < k - 1) M(i - 1, i) = qi;
  return M;
}

}  // namespace

Matrix reduced_burau(const BraidWord& w, Complex q) {
  w.validate();
  if (std::abs(std::abs(q) - 1.0) > 1e-9)
    throw std::invalid_argument("parameter must lie on the unit circle");
  const int k = w.strands;
  Matrix M = Matrix::Identity(k - 1, k - 1);
  for (int l : w.letters)
    M = M * (l > 0 ? burau_generator(k, l, q)
                   : burau_generator_inverse(k, -l, q));
  return M;
}

Matrix squier_form(int k, Complex s) {
  if (k < 3) throw std::invalid_argument("need k >= 3");
  if (std::abs(s) < 1e-12) throw std::invalid_argument("s must be nonzero");
  Matrix J = Matrix::Zero(k - 1, k - 1);
  const Complex t = s + std::conj(s);
  for (int i = 0; i < k - 1; ++i) {
    J(i, i) = t;
    if (i + 1 < k - 1) {
      J(i, i + 1) = -std::conj(s);
      J(i + 1, i) = -s;
    }
  }
  return J;
}

Complex principal_sqrt(Complex q) {
  return std::polar(1.0, std::arg(q) / 2.0);
}

namespace {

// smallest n <= limit with q^n = 1, or 0 if none
int root_order_up_to(Complex q, int limit, double tol = 1e-9) {
  Complex pw = 1.0;
  for (int n = 1; n <= limit; ++n) {
    pw *= q;
    if (std::abs(pw - 1.0) < tol) return n;
  }
  return 0;
}

}  // namespace

bool squier_definite(int k, Complex q) {
  if (k < 3) throw std::invalid_argument("need k >= 3");
  if (std::abs(std::abs(q) - 1.0) > 1e-9)
    throw std::invalid_argument("parameter must lie on the unit circle");
  if (root_order_up_to(q, k) != 0)
    throw std::invalid_argument(
        "the form is singular at roots of unity of order <= k");

  const bool window = std::abs(std::arg(q)) < 2.0 * M_PI / k;

  const Matrix J = squier_form(k, principal_sqrt(q));
  Eigen::SelfAdjointEigenSolver<Matrix> es(J);
  const auto& ev = es.eigenvalues();
  const bool eigen_verdict = ev(0) > 0.0 || ev(k - 2) < 0.0;

  if (window != eigen_verdict)
    throw consistency_error("definiteness window and spectrum disagree");
  return window;
}

UnitarizabilityClass unitarizable(int k, Complex q, double tol) {
  if (k < 3) throw std::invalid_argument("need k >= 3");
  if (std::abs(std::abs(q) - 1.0) > tol * 10)
    throw std::invalid_argument("parameter must lie on the unit circle");
  if (std::abs(std::arg(q)) < 2.0 * M_PI / k)
    return UnitarizabilityClass::DefiniteWindow;
  const double a = std::arg(q);
  if (a > tol) {
    const long n = std::lround(2.0 * M_PI / a);
    if (n >= 3 && std::abs(a - 2.0 * M_PI / n) < tol)
      return UnitarizabilityClass::PrincipalRoot;
  }
  return UnitarizabilityClass::NonUnitarizable;
}

RootCount count_noncompact_roots(int g, int p) {
  if (g < 4 || p < 5 || p % 2 == 0)
    throw std::invalid_argument("need g >= 4 and odd p >= 5");
  RootCount out;
  const int a_p = cyclo::standard_root(p).exponent;  // in Z / 2p

  for (int k = 0; k <= (p - 3) / 2; ++k) {
    const int e = 2 * k + 1;  // zeta = exp(i pi e / p)
    const int t = 2 * e;      // q = zeta^4, raw angle 2 pi t / p
    // classical accounting: raw angle within 2 pi / g of 0 or of 2 pi
    if (g * t <= p || g * std::abs(t - p) <= p) ++out.window_count;
    // genuine window: angle mod 2 pi within (-2 pi / g, 2 pi / g); the
    // raw angle runs up to 4 pi, so values just below 4 pi also qualify
    const int r = t % p;
    const int d = std::min(r, p - r);
    if (g * d < p) {
      ++out.inside_count;
      continue;
    }
    // exceptions that are unitarizable anyway: principal roots
    // q = exp(+-2 pi i / n), and the distinguished unitary class
    const int gc = std::gcd(r == 0 ? p : r, p);
    const bool principal =
        (r != 0) && (r / gc == 1 || (p - r) / gc == 1) && (p / gc >= 3);
    const bool distinguished =
        (e % (2 * p) == a_p % (2 * p)) || ((2 * p - e) % (2 * p)) == a_p % (2 * p);
    if (!principal && !distinguished) ++out.count;
  }
  out.lower_bound = static_cast<long>((2L * g - 3) * p / (4L * g)) - 3;
  out.window_bound = (3.0 * p + 6.0 * g) / (4.0 * g);
  out.meets_lower_bound = out.count >= out.lower_bound;
  return out;
}

LatticeThresholds lattice_thresholds(int g) {
  if (g < 4) throw std::invalid_argument("need g >= 4");
  LatticeThresholds out;
  out.t_g = 1 + g / 2;
  out.threshold_num = 2L * g * (g + 9);
  out.threshold_den = 2L * g - 3;
  out.threshold =
      static_cast<double>(out.threshold_num) / out.threshold_den;
  return out;
}

}  // namespace pseudou::burau
