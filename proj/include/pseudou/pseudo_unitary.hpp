#pragma once

// Numerical analysis of SU(m,n) and Sp(2n,R): membership tests, spectral
// data with positivity multiplicities, Krein canonical forms, the
// Dupont-Guichardet-Wigner phase, the v0-based cocycle computed through
// path lifts, and the two standard embeddings with winding bookkeeping.

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace pseudou::pu {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

constexpr double kDefaultTol = 1e-9;

struct dimension_mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct not_member_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct not_semisimple_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct conditioning_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct decomposition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct sampling_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nondegenerate Hermitian form of signature (m, n).
struct SignatureForm {
  int m = 0;
  int n = 0;
  Matrix H;

  static SignatureForm standard(int m, int n);
  // Accepts any Hermitian nondegenerate matrix; signature is computed.
  static SignatureForm from_matrix(const Matrix& H, double tol = kDefaultTol);

  int dim() const { return m + n; }
  bool is_standard(double tol = kDefaultTol) const;
  // B(x, y) = y* H x
  Complex pairing(const Vector& x, const Vector& y) const;
  // Q(x) = B(x, x), real
  double quadratic(const Vector& x) const;
};

struct MembershipReport {
  bool preserves_form = false;
  bool special = false;  // |det g - 1| <= tol
  double form_residual = 0.0;
  double det_error = 0.0;
};

MembershipReport membership(const Matrix& g, const SignatureForm& F,
                            double tol = kDefaultTol);
bool is_member(const Matrix& g, const SignatureForm& F,
               double tol = kDefaultTol);

struct EigenClass {
  Complex lambda;
  int multiplicity = 0;
  bool unit_circle = false;
  int n_plus = 0;
  int n_minus = 0;
  // columns: basis of the eigenspace
  Matrix eigenvectors;
};

struct SpectralData {
  std::vector<EigenClass> classes;
  int dim = 0;
};

SpectralData spectral_analysis(const Matrix& g, const SignatureForm& F,
                               double tol = kDefaultTol);

struct CanonicalBlockReport {
  // unit-circle eigenvalues with their sign characteristic, one entry per
  // basis vector
  std::vector<std::pair<Complex, int>> unit_entries;
  // pairs (lambda, 1/conj(lambda)) with |lambda| > 1
  std::vector<std::pair<Complex, Complex>> hyperbolic_pairs;
};

struct CanonicalForm {
  Matrix C;                     // change of basis
  Matrix block_diagonal;        // C^{-1} g C
  Matrix form_in_basis;         // C* H C
  CanonicalBlockReport report;
};

// C^{-1} g C block-diagonal, C* H C = (+1)^a ⊕ (-1)^b ⊕ hyperbolic blocks
// [[0,1],[1,0]], for semisimple g.
CanonicalForm canonical_form(const Matrix& g, const SignatureForm& F,
                             double tol = kDefaultTol);

// (1/2pi) sum over the spectrum of n+(lambda) arg(lambda), mod 1,
// arg in [0, 2pi).
double dgw_phase(const Matrix& g, const SignatureForm& F,
                 double tol = kDefaultTol);

// Elliptic part of semisimple g: same eigenvectors, eigenvalues pushed to
// the unit circle.
Matrix elliptic_part(const Matrix& g, const SignatureForm& F,
                     double tol = kDefaultTol);

// det of the restriction of the elliptic part to a maximal H-positive
// invariant subspace (unit complex number).
Complex det_elliptic_positive(const Matrix& g, const SignatureForm& F,
                              double tol = kDefaultTol);

// det of the upper-left m x m block of the maximal-compact factor of the
// Cartan factorization g = k (g* g)^{1/2}.  Standard form only; conjugate
// first otherwise.
Complex v0(const Matrix& g, const SignatureForm& F,
           double tol = kDefaultTol);

struct GroupPath {
  std::vector<Matrix> samples;  // first sample = identity
};

// Straight-path construction: g = k exp(P) through the Cartan
// decomposition, sampled as exp(t log k) exp(t P).  Refines the sampling
// until the lift condition (consecutive v0 arguments within pi/2) holds.
GroupPath make_path(const Matrix& g, const SignatureForm& F,
                    int initial_steps = 64, double tol = kDefaultTol);

GroupPath concat_translate(const GroupPath& path1, const Matrix& g1,
                           const GroupPath& path2);

// Accumulated continuous argument of v0 along the path, divided by 2pi.
double lift_phase(const GroupPath& path, const SignatureForm& F,
                  double tol = kDefaultTol);

// Real-valued 2-cocycle c(g1, g2) = Phi(path1 * g1 path2) - Phi(path1) -
// Phi(path2); independent of the chosen paths.
double cocycle(const Matrix& g1, const Matrix& g2, const GroupPath& path1,
               const GroupPath& path2, const SignatureForm& F,
               double tol = kDefaultTol);

// S real symplectic (S^t J S = J) -> D S D^{-1} in SU(n,n),
// D = (1/sqrt 2) [[I, -iI], [-iI, I]].
Matrix sp_to_su(const RealMatrix& S, double tol = kDefaultTol);

// T in U(m,n) (standard form) -> real symplectic matrix of size 2(m+n),
// psi(T) = Z lambda(T) Z^{-1}, lambda(A+iB) = [[A, B], [-B, A]],
// Z = diag(I_{m,n}, I).
RealMatrix su_to_sp(const Matrix& T, int m, int n, double tol = kDefaultTol);

struct RealGroupPath {
  std::vector<RealMatrix> samples;
};

// Winding of det of the unitary polar factor along a closed symplectic
// loop (integer) or the continuous lift along an open path (real).
double sp_lift_phase(const RealGroupPath& path, double tol = kDefaultTol);
long sp_winding(const RealGroupPath& loop, double tol = kDefaultTol);

// Apply su_to_sp samplewise.
RealGroupPath su_path_to_sp(const GroupPath& path, int m, int n,
                            double tol = kDefaultTol);

// The loop t -> diag(e^{2pi i t}, I_{m-1}, e^{-2pi i t}, I_{n-1})
// generating the fundamental group of SU(m,n).
GroupPath generator_loop(int m, int n, int steps = 256);

// Random semisimple member built as K1 exp(P) K2 with K1, K2 in
// S(U(m) x U(n)) and P in the symmetric part of the Lie algebra.
Matrix random_su(int m, int n, std::mt19937_64& rng, double spread = 1.0);

// Random member of the upper-triangular subgroup with positive diagonal,
// with respect to the antidiagonal hyperbolic form (returned alongside).
std::pair<Matrix, SignatureForm> random_borel(int m, int n,
                                              std::mt19937_64& rng,
                                              double spread = 0.5);

// Random real symplectic matrix exp(X), X in sp(2n, R).
RealMatrix random_sp(int n, std::mt19937_64& rng, double spread = 0.6);

}  // namespace pseudou::pu
