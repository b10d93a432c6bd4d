#pragma once

// Reduced Burau representation at unit parameters, Squier's invariant
// Hermitian form, the definiteness window, unitarizability classes, and
// the root-counting estimates for simple noncompact factors.

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace pseudou::burau {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BraidWord {
  int strands = 2;
  // signed 1-based generator indices: +i for sigma_i, -i for its inverse
  std::vector<int> letters;

  void validate() const;
  // permutation of strands induced by the word (0-based)
  std::vector<int> permutation() const;
  bool pure() const;
};

// A_{ij} = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} ...
// sigma_{j-1}^{-1}, 1 <= i < j <= k
BraidWord pure_braid_generator(int k, int i, int j);

// (k-1) x (k-1) reduced Burau matrix of the word at parameter q, |q| = 1.
Matrix reduced_burau(const BraidWord& w, Complex q);

// Tridiagonal Squier form for the square root s of q = s^2:
// diagonal s + conj(s), above -conj(s), below -s.
Matrix squier_form(int k, Complex s);

// Default square root exp(i arg(q) / 2) with arg in (-pi, pi].
Complex principal_sqrt(Complex q);

// arg(q) in (-2 pi / k, 2 pi / k) <=> all eigenvalues of the Squier form
// share a sign; verdicts computed both ways and compared.
bool squier_definite(int k, Complex q);

enum class UnitarizabilityClass { DefiniteWindow, PrincipalRoot, NonUnitarizable };

UnitarizabilityClass unitarizable(int k, Complex q, double tol = 1e-9);

struct RootCount {
  int count = 0;         // outside-window classes minus the exceptions
  int inside_count = 0;  // classes with q genuinely inside the window
  // solutions of the two classical inequality families
  // 0 <= 4(2k+1)pi/p <= 2pi/g and |4(2k+1)pi/p - 2pi| <= 2pi/g; these
  // miss the definite classes with raw angle just below 4pi, so
  // inside_count can exceed window_count
  int window_count = 0;
  long lower_bound = 0;  // floor((2g-3) p / (4g)) - 3
  double window_bound = 0.0;  // (3p + 6g) / (4g), bounds window_count
  // first g, p with count < lower_bound: the classical lower bound
  // overcounts by about p/(4g) because of the missed wrap-around interval
  bool meets_lower_bound = false;
};

// For odd p, runs over zeta = exp((2k+1) i pi / p), q = zeta^4, and counts
// the classes with q outside the genus-g window, excluding the principal
// roots and the distinguished unitary class.  Exact integer arithmetic.
RootCount count_noncompact_roots(int g, int p);

struct LatticeThresholds {
  long t_g = 0;              // 1 + floor(g/2)
  long threshold_num = 0;    // 2 g (g+9)
  long threshold_den = 0;    // 2g - 3
  double threshold = 0.0;
};

LatticeThresholds lattice_thresholds(int g);

}  // namespace pseudou::burau
