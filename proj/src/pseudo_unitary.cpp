#include "pseudou/pseudo_unitary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

namespace pseudou::pu {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frac_mod1(double x) {
  double f = std::fmod(x, 1.0);
  if (f < 0) f += 1.0;
  // collapse values that round to 1
  if (1.0 - f < 1e-13) f = 0.0;
  return f;
}

// arg in [0, 2pi)
double arg02pi(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += kTwoPi;
  return a;
}

double inf_norm(const Matrix& A) { return A.cwiseAbs().maxCoeff(); }

void check_square(const Matrix& g, const SignatureForm& F) {
  if (g.rows() != g.cols())
    throw dimension_mismatch_error("matrix is not square");
  if (g.rows() != F.dim())
    throw dimension_mismatch_error("matrix and form dimensions differ");
}

}  // namespace

SignatureForm SignatureForm::standard(int m, int n) {
  SignatureForm F;
  F.m = m;
  F.n = n;
  F.H = Matrix::Identity(m + n, m + n);
  for (int i = m; i < m + n; ++i) F.H(i, i) = -1.0;
  return F;
}

SignatureForm SignatureForm::from_matrix(const Matrix& H, double tol) {
  if (H.rows() != H.cols())
    throw dimension_mismatch_error("form matrix is not square");
  if (inf_norm(H - H.adjoint()) > tol * (1.0 + inf_norm(H)))
    throw std::invalid_argument("form matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.adjoint()));
  SignatureForm F;
  F.H = H;
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  for (int i = 0; i < H.rows(); ++i) {
    const double ev = es.eigenvalues()(i);
    if (std::abs(ev) <= tol * scale)
      throw std::invalid_argument("form matrix is degenerate");
    (ev > 0 ? F.m : F.n) += 1;
  }
  return F;
}

bool SignatureForm::is_standard(double tol) const {
  return inf_norm(H - standard(m, n).H) <= tol;
}

Complex SignatureForm::pairing(const Vector& x, const Vector& y) const {
  return (y.adjoint() * H * x)(0, 0);
}

double SignatureForm::quadratic(const Vector& x) const {
  return pairing(x, x).real();
}

MembershipReport membership(const Matrix& g, const SignatureForm& F,
                            double tol) {
  check_square(g, F);
  MembershipReport r;
  r.form_residual = inf_norm(g.adjoint() * F.H * g - F.H);
  r.det_error = std::abs(g.determinant() - 1.0);
  r.preserves_form = r.form_residual <= tol * (1.0 + inf_norm(F.H));
  r.special = r.det_error <= tol;
  return r;
}

bool is_member(const Matrix& g, const SignatureForm& F, double tol) {
  return membership(g, F, tol).preserves_form;
}

SpectralData spectral_analysis(const Matrix& g, const SignatureForm& F,
                               double tol) {
  check_square(g, F);
  // residual of g* H g - H scales with |g|^2 for a backward-stable input
  const double memb_scale = 1.0 + std::pow(inf_norm(g), 2);
  if (!is_member(g, F, 1e2 * tol * memb_scale))
    throw not_member_error("spectral_analysis: not a form isometry");

  const int d = F.dim();
  Eigen::ComplexEigenSolver<Matrix> es(g);
  if (es.info() != Eigen::Success)
    throw conditioning_error("eigenvalue computation failed");
  const Vector evs = es.eigenvalues();

  const double scale = std::max(1.0, inf_norm(g));
  const double radius = 10.0 * std::max(tol, 1e-12) * scale;

  // merge eigenvalues into clusters
  std::vector<int> owner(d, -1);
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < d; ++i) {
    int home = -1;
    for (size_t c = 0; c < clusters.size() && home < 0; ++c) {
      for (int j : clusters[c]) {
        if (std::abs(evs(i) - evs(j)) <= radius) {
          home = static_cast<int>(c);
          break;
        }
      }
    }
    if (home < 0) {
      clusters.push_back({i});
    } else {
      clusters[static_cast<size_t>(home)].push_back(i);
    }
    (void)owner;
  }

  SpectralData data;
  data.dim = d;
  for (const auto& cl : clusters) {
    EigenClass ec;
    Complex mean = 0;
    for (int j : cl) mean += evs(j);
    ec.lambda = mean / static_cast<double>(cl.size());
    ec.multiplicity = static_cast<int>(cl.size());

    // geometric multiplicity and an eigenspace basis from the small
    // singular values of g - lambda I
    Eigen::JacobiSVD<Matrix> svd(g - ec.lambda * Matrix::Identity(d, d),
                                 Eigen::ComputeFullV);
    int null_dim = 0;
    for (int i = 0; i < d; ++i)
      if (svd.singularValues()(i) <= radius) ++null_dim;
    if (null_dim < ec.multiplicity)
      throw not_semisimple_error(
          "defective eigenvalue: geometric multiplicity below algebraic");
    ec.eigenvectors = svd.matrixV().rightCols(ec.multiplicity);

    const double unit_gap = std::abs(std::abs(ec.lambda) - 1.0);
    ec.unit_circle = unit_gap <= 1e2 * tol * (1.0 + std::abs(ec.lambda));
    if (ec.unit_circle) {
      // inertia of the form on the eigenspace
      const Matrix G = ec.eigenvectors.adjoint() * F.H * ec.eigenvectors;
      Eigen::SelfAdjointEigenSolver<Matrix> ges(0.5 * (G + G.adjoint()));
      const double gscale = ges.eigenvalues().cwiseAbs().maxCoeff();
      for (int i = 0; i < ec.multiplicity; ++i) {
        const double mu = ges.eigenvalues()(i);
        if (std::abs(mu) <= 1e3 * tol * std::max(1.0, gscale))
          throw conditioning_error(
              "form nearly degenerate on a unit-circle eigenspace");
        (mu > 0 ? ec.n_plus : ec.n_minus) += 1;
      }
    } else if (std::abs(ec.lambda) > 1.0) {
      ec.n_plus = ec.multiplicity;
    } else {
      ec.n_minus = ec.multiplicity;
    }
    data.classes.push_back(std::move(ec));
  }

  // off-circle eigenvalues must pair up as lambda, 1/conj(lambda)
  for (const auto& ec : data.classes) {
    if (ec.unit_circle) continue;
    const Complex partner = 1.0 / std::conj(ec.lambda);
    // clustering can split the partner multiplicity across classes, so
    // sum everything within tolerance instead of asking for one match
    int paired = 0;
    for (const auto& other : data.classes)
      if (std::abs(other.lambda - partner) <=
          1e2 * tol * (1.0 + std::abs(partner)))
        paired += other.multiplicity;
    if (paired < ec.multiplicity)
      throw conditioning_error("unpaired eigenvalue off the unit circle");
  }
  return data;
}

CanonicalForm canonical_form(const Matrix& g, const SignatureForm& F,
                             double tol) {
  const SpectralData data = spectral_analysis(g, F, tol);
  const int d = F.dim();

  std::vector<Vector> unit_cols;
  CanonicalForm out;
  std::vector<std::pair<Vector, Complex>> positives, negatives;
  std::vector<std::pair<Vector, Vector>> pair_cols;

  std::vector<char> used(data.classes.size(), 0);
  for (size_t c = 0; c < data.classes.size(); ++c) {
    const EigenClass& ec = data.classes[c];
    if (ec.unit_circle) {
      const Matrix G =
          ec.eigenvectors.adjoint() * F.H * ec.eigenvectors;
      Eigen::SelfAdjointEigenSolver<Matrix> ges(0.5 * (G + G.adjoint()));
      for (int i = 0; i < ec.multiplicity; ++i) {
        const double mu = ges.eigenvalues()(i);
        Vector v = ec.eigenvectors * ges.eigenvectors().col(i) /
                   std::sqrt(std::abs(mu));
        (mu > 0 ? positives : negatives).emplace_back(std::move(v), ec.lambda);
      }
      continue;
    }
    if (used[c] || std::abs(ec.lambda) < 1.0) continue;
    // locate the partner class
    const Complex partner = 1.0 / std::conj(ec.lambda);
    int pidx = -1;
    for (size_t c2 = 0; c2 < data.classes.size(); ++c2) {
      if (c2 == c || used[c2] || data.classes[c2].unit_circle) continue;
      if (std::abs(data.classes[c2].lambda - partner) <=
          1e2 * tol * (1.0 + std::abs(partner))) {
        pidx = static_cast<int>(c2);
        break;
      }
    }
    if (pidx < 0) throw conditioning_error("canonical_form: unpaired class");
    used[c] = used[static_cast<size_t>(pidx)] = 1;
    const Matrix& U = ec.eigenvectors;
    const Matrix& V = data.classes[static_cast<size_t>(pidx)].eigenvectors;
    const Matrix P = U.adjoint() * F.H * V;  // pairing, must be invertible
    const Eigen::FullPivLU<Matrix> lu(P);
    if (!lu.isInvertible())
      throw conditioning_error("canonical_form: degenerate hyperbolic pairing");
    // wrong orientation: we need U* H V' = I, so V' = V P^{-1} with
    // (U* H V)_{ij}; P acts on the V side from the right
    const Matrix Vp = V * lu.inverse();
    for (int i = 0; i < ec.multiplicity; ++i) {
      pair_cols.emplace_back(U.col(i), Vp.col(i));
      out.report.hyperbolic_pairs.emplace_back(
          ec.lambda, data.classes[static_cast<size_t>(pidx)].lambda);
    }
  }

  Matrix C(d, d);
  int col = 0;
  for (auto& [v, lam] : positives) {
    C.col(col++) = v;
    out.report.unit_entries.emplace_back(lam, +1);
  }
  for (auto& [v, lam] : negatives) {
    C.col(col++) = v;
    out.report.unit_entries.emplace_back(lam, -1);
  }
  for (auto& [u, v] : pair_cols) {
    C.col(col++) = u;
    C.col(col++) = v;
  }
  if (col != d) throw conditioning_error("canonical_form: basis incomplete");

  out.C = C;
  out.block_diagonal = C.fullPivLu().solve(g * C);
  out.form_in_basis = C.adjoint() * F.H * C;
  return out;
}

double dgw_phase(const Matrix& g, const SignatureForm& F, double tol) {
  const SpectralData data = spectral_analysis(g, F, tol);
  double total = 0.0;
  for (const auto& ec : data.classes) {
    if (ec.unit_circle) {
      total += ec.n_plus * arg02pi(ec.lambda / std::abs(ec.lambda));
    } else if (std::abs(ec.lambda) > 1.0) {
      total += ec.multiplicity * arg02pi(ec.lambda);
    }
  }
  return frac_mod1(total / kTwoPi);
}

Matrix elliptic_part(const Matrix& g, const SignatureForm& F, double tol) {
  const SpectralData data = spectral_analysis(g, F, tol);
  const int d = F.dim();
  Matrix V(d, d);
  Vector units(d);
  int col = 0;
  for (const auto& ec : data.classes) {
    for (int i = 0; i < ec.multiplicity; ++i) {
      V.col(col) = ec.eigenvectors.col(i);
      units(col) = ec.lambda / std::abs(ec.lambda);
      ++col;
    }
  }
  return V * units.asDiagonal() * V.fullPivLu().inverse();
}

Complex det_elliptic_positive(const Matrix& g, const SignatureForm& F,
                              double tol) {
  const Matrix e = elliptic_part(g, F, tol);
  const CanonicalForm cf = canonical_form(g, F, tol);
  const int d = F.dim();

  // maximal H-positive invariant subspace of the elliptic part: the
  // positive sign-characteristic vectors, plus one positive vector
  // (u + v)/sqrt 2 per hyperbolic pair (the elliptic part acts on the
  // whole pair plane by the common unit scalar)
  Matrix P(d, F.m);
  int col = 0;
  int ccol = 0;
  for (const auto& [lam, eps] : cf.report.unit_entries) {
    if (eps > 0) {
      if (col >= F.m) throw conditioning_error("positive subspace overflow");
      P.col(col++) = cf.C.col(ccol);
    }
    ++ccol;
  }
  for (size_t k = 0; k < cf.report.hyperbolic_pairs.size(); ++k) {
    if (col >= F.m) throw conditioning_error("positive subspace overflow");
    P.col(col++) =
        (cf.C.col(ccol) + cf.C.col(ccol + 1)) / std::numbers::sqrt2;
    ccol += 2;
  }
  if (col != F.m)
    throw conditioning_error("positive subspace has wrong dimension");

  // H-orthonormalize, then restrict e and take the determinant
  const Matrix G = P.adjoint() * F.H * P;
  const Eigen::LLT<Matrix> llt(0.5 * (G + G.adjoint()));
  if (llt.info() != Eigen::Success)
    throw conditioning_error("positive subspace Gram matrix not definite");
  const Matrix L = llt.matrixL();
  const Matrix Pt = L.triangularView<Eigen::Lower>()
                        .adjoint()
                        .solve<Eigen::OnTheRight>(P);
  const Matrix R = Pt.adjoint() * F.H * e * Pt;
  return R.determinant();
}

Complex v0(const Matrix& g, const SignatureForm& F, double tol) {
  check_square(g, F);
  if (!F.is_standard(1e-12))
    throw std::invalid_argument("v0 requires the standard diagonal form");
  const double memb_scale = 1.0 + std::pow(inf_norm(g), 2);
  const MembershipReport rep =
      membership(g, F, std::max(tol, 1e-8) * memb_scale);
  if (!rep.preserves_form) throw not_member_error("v0: not a form isometry");

  Eigen::SelfAdjointEigenSolver<Matrix> es(g.adjoint() * g);
  const Matrix sinv = es.eigenvectors() *
                      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                      es.eigenvectors().adjoint();
  const Matrix k = g * sinv;
  const double off = std::max(
      F.n == 0 || F.m == 0
          ? 0.0
          : inf_norm(k.topRightCorner(F.m, F.n)),
      F.n == 0 || F.m == 0 ? 0.0 : inf_norm(k.bottomLeftCorner(F.n, F.m)));
  if (off > 1e4 * std::max(tol, 1e-12))
    throw decomposition_error("Cartan factor is not block diagonal");
  return k.topLeftCorner(F.m, F.m).determinant();
}

namespace {

struct Sampler {
  // exp(t K) exp(t P) with precomputed eigenstructure
  Matrix Vk, Vk_inv;
  Vector theta;  // k = Vk diag(exp(i theta)) Vk^{-1}
  Matrix U;
  Eigen::VectorXd logs;  // s = U diag(exp(logs)) U*

  Matrix at(double t) const {
    Vector ek(theta.size()), es(logs.size());
    for (int i = 0; i < theta.size(); ++i)
      ek(i) = std::polar(1.0, t * theta(i).real());
    for (int i = 0; i < logs.size(); ++i) es(i) = std::exp(t * logs(i));
    return Vk * ek.asDiagonal() * Vk_inv * U * es.asDiagonal() * U.adjoint();
  }
};

Sampler make_sampler(const Matrix& g) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(g.adjoint() * g);
  Sampler s;
  s.U = es.eigenvectors();
  s.logs = 0.5 * es.eigenvalues().array().log();
  const Matrix sinv =
      s.U * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      s.U.adjoint();
  const Matrix k = g * sinv;
  // k is unitary, so its Schur form is diagonal and the Schur basis is a
  // unitary eigenbasis; this keeps exp(t log k) unitary along the path
  Eigen::ComplexSchur<Matrix> ks(k);
  s.Vk = ks.matrixU();
  s.Vk_inv = s.Vk.adjoint();
  s.theta.resize(k.rows());
  for (int i = 0; i < k.rows(); ++i)
    s.theta(i) = Complex(std::arg(ks.matrixT()(i, i)), 0.0);
  return s;
}

}  // namespace

GroupPath make_path(const Matrix& g, const SignatureForm& F,
                    int initial_steps, double tol) {
  check_square(g, F);
  const Sampler s = make_sampler(g);
  for (int steps = initial_steps; steps <= 8192; steps *= 2) {
    GroupPath path;
    path.samples.reserve(steps + 1);
    for (int j = 0; j <= steps; ++j)
      path.samples.push_back(s.at(static_cast<double>(j) / steps));
    // exact endpoints
    path.samples.front() = Matrix::Identity(F.dim(), F.dim());
    path.samples.back() = g;
    bool fine = true;
    Complex prev = v0(path.samples.front(), F, tol);
    for (size_t j = 1; j < path.samples.size() && fine; ++j) {
      const Complex cur = v0(path.samples[j], F, tol);
      if (std::abs(std::arg(cur / prev)) >= std::numbers::pi / 2) fine = false;
      prev = cur;
    }
    if (fine) return path;
  }
  throw sampling_error("make_path: could not satisfy the lift condition");
}

GroupPath concat_translate(const GroupPath& path1, const Matrix& g1,
                           const GroupPath& path2) {
  GroupPath out;
  out.samples = path1.samples;
  for (size_t j = 1; j < path2.samples.size(); ++j)
    out.samples.push_back(g1 * path2.samples[j]);
  return out;
}

double lift_phase(const GroupPath& path, const SignatureForm& F, double tol) {
  if (path.samples.empty()) throw sampling_error("empty path");
  double total = 0.0;
  Complex prev = v0(path.samples.front(), F, tol);
  for (size_t j = 1; j < path.samples.size(); ++j) {
    const Complex cur = v0(path.samples[j], F, tol);
    const double jump = std::arg(cur / prev);
    if (std::abs(jump) >= std::numbers::pi / 2)
      throw sampling_error("lift_phase: sampling too coarse");
    total += jump;
    prev = cur;
  }
  return total / kTwoPi;
}

double cocycle(const Matrix& g1, const Matrix& g2, const GroupPath& path1,
               const GroupPath& path2, const SignatureForm& F, double tol) {
  const GroupPath joined = concat_translate(path1, g1, path2);
  return lift_phase(joined, F, tol) - lift_phase(path1, F, tol) -
         lift_phase(path2, F, tol);
}

namespace {

RealMatrix symplectic_J(int n) {
  RealMatrix J = RealMatrix::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n) = RealMatrix::Identity(n, n);
  J.bottomLeftCorner(n, n) = -RealMatrix::Identity(n, n);
  return J;
}

void check_symplectic(const RealMatrix& S, double tol) {
  if (S.rows() != S.cols() || S.rows() % 2 != 0)
    throw dimension_mismatch_error("symplectic matrix must be even square");
  const int n = static_cast<int>(S.rows()) / 2;
  const RealMatrix J = symplectic_J(n);
  if ((S.transpose() * J * S - J).cwiseAbs().maxCoeff() >
      std::max(tol, 1e-9) * (1.0 + S.cwiseAbs().maxCoeff()))
    throw not_member_error("matrix is not symplectic");
}

}  // namespace

Matrix sp_to_su(const RealMatrix& S, double tol) {
  check_symplectic(S, tol);
  const int n = static_cast<int>(S.rows()) / 2;
  Matrix D(2 * n, 2 * n);
  const Complex i(0.0, 1.0);
  D.setZero();
  D.topLeftCorner(n, n) = Matrix::Identity(n, n);
  D.topRightCorner(n, n) = -i * Matrix::Identity(n, n);
  D.bottomLeftCorner(n, n) = -i * Matrix::Identity(n, n);
  D.bottomRightCorner(n, n) = Matrix::Identity(n, n);
  D /= std::sqrt(2.0);
  return D * S.cast<Complex>() * D.adjoint();
}

RealMatrix su_to_sp(const Matrix& T, int m, int n, double tol) {
  const SignatureForm F = SignatureForm::standard(m, n);
  check_square(T, F);
  if (!is_member(T, F, std::max(tol, 1e-8)))
    throw not_member_error("su_to_sp: not a member for the standard form");
  const int d = m + n;
  const RealMatrix A = T.real();
  const RealMatrix B = T.imag();
  RealMatrix lam(2 * d, 2 * d);
  lam.topLeftCorner(d, d) = A;
  lam.topRightCorner(d, d) = B;
  lam.bottomLeftCorner(d, d) = -B;
  lam.bottomRightCorner(d, d) = A;
  RealMatrix Z = RealMatrix::Identity(2 * d, 2 * d);
  for (int i = m; i < d; ++i) Z(i, i) = -1.0;
  const RealMatrix psi = Z * lam * Z;
  check_symplectic(psi, tol);
  return psi;
}

namespace {

// unitary polar factor of a symplectic matrix, as a complex d x d unitary
Complex sp_unitary_det(const RealMatrix& S, double tol) {
  const int d = static_cast<int>(S.rows()) / 2;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(S.transpose() * S);
  const RealMatrix Q = S * es.eigenvectors() *
                       es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                       es.eigenvectors().transpose();
  const RealMatrix A = Q.topLeftCorner(d, d);
  const RealMatrix B = Q.topRightCorner(d, d);
  const double mismatch =
      std::max((Q.bottomRightCorner(d, d) - A).cwiseAbs().maxCoeff(),
               (Q.bottomLeftCorner(d, d) + B).cwiseAbs().maxCoeff());
  if (mismatch > 1e4 * std::max(tol, 1e-12))
    throw decomposition_error("polar factor is not orthogonal-symplectic");
  const Matrix U = A.cast<Complex>() + Complex(0, 1) * B.cast<Complex>();
  return U.determinant();
}

}  // namespace

double sp_lift_phase(const RealGroupPath& path, double tol) {
  if (path.samples.empty()) throw sampling_error("empty path");
  double total = 0.0;
  Complex prev = sp_unitary_det(path.samples.front(), tol);
  for (size_t j = 1; j < path.samples.size(); ++j) {
    const Complex cur = sp_unitary_det(path.samples[j], tol);
    const double jump = std::arg(cur / prev);
    if (std::abs(jump) >= std::numbers::pi / 2)
      throw sampling_error("sp_lift_phase: sampling too coarse");
    total += jump;
    prev = cur;
  }
  return total / kTwoPi;
}

long sp_winding(const RealGroupPath& loop, double tol) {
  const double w = sp_lift_phase(loop, tol);
  const long r = std::lround(w);
  if (std::abs(w - r) > 1e-6)
    throw sampling_error("sp_winding: path is not closed");
  return r;
}

RealGroupPath su_path_to_sp(const GroupPath& path, int m, int n, double tol) {
  RealGroupPath out;
  out.samples.reserve(path.samples.size());
  for (const Matrix& g : path.samples)
    out.samples.push_back(su_to_sp(g, m, n, tol));
  return out;
}

GroupPath generator_loop(int m, int n, int steps) {
  const int d = m + n;
  GroupPath path;
  path.samples.reserve(steps + 1);
  for (int j = 0; j <= steps; ++j) {
    const double t = static_cast<double>(j) / steps;
    Matrix g = Matrix::Identity(d, d);
    g(0, 0) = std::polar(1.0, kTwoPi * t);
    g(m, m) = std::polar(1.0, -kTwoPi * t);
    path.samples.push_back(g);
  }
  return path;
}

namespace {

Matrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix Z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) Z(i, j) = Complex(gauss(rng), gauss(rng));
  const Eigen::HouseholderQR<Matrix> qr(Z);
  Matrix Q = qr.householderQ();
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) Q.col(i) *= R(i, i) / std::abs(R(i, i));
  return Q;
}

Matrix random_k(int m, int n, std::mt19937_64& rng) {
  const int d = m + n;
  Matrix K = Matrix::Zero(d, d);
  K.topLeftCorner(m, m) = random_unitary(m, rng);
  K.bottomRightCorner(n, n) = random_unitary(n, rng);
  const Complex det = K.topLeftCorner(m, m).determinant() *
                      K.bottomRightCorner(n, n).determinant();
  K.col(d - 1) *= std::conj(det) / std::abs(det);
  return K;
}

Matrix random_exp_p(int m, int n, std::mt19937_64& rng, double spread) {
  std::normal_distribution<double> gauss(0.0, spread);
  const int d = m + n;
  Matrix P = Matrix::Zero(d, d);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      P(i, m + j) = Complex(gauss(rng), gauss(rng));
      P(m + j, i) = std::conj(P(i, m + j));
    }
  Eigen::SelfAdjointEigenSolver<Matrix> es(P);
  return es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

Matrix random_su(int m, int n, std::mt19937_64& rng, double spread) {
  return random_k(m, n, rng) * random_exp_p(m, n, rng, spread) *
         random_k(m, n, rng);
}

std::pair<Matrix, SignatureForm> random_borel(int m, int n,
                                              std::mt19937_64& rng,
                                              double spread) {
  const int d = m + n;
  if (std::abs(m - n) > 1)
    throw std::invalid_argument(
        "random_borel: antidiagonal form needs |m - n| <= 1");
  Matrix Hm = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) Hm(i, d - 1 - i) = 1.0;
  SignatureForm F = SignatureForm::from_matrix(Hm);
  if (F.m != std::max(m, n) && F.m != m)
    throw std::logic_error("random_borel: unexpected signature");

  std::normal_distribution<double> gauss(0.0, spread);
  // upper-triangular X with X* H + H X = 0: entries reflected across the
  // antidiagonal are negated conjugates, real diagonal
  Matrix X = Matrix::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = r; c < d; ++c) {
      const int rm = d - 1 - c;
      const int cm = d - 1 - r;
      if (rm == r && cm == c) {
        // self-paired: purely imaginary, zero on the diagonal
        X(r, c) = (r == c) ? Complex(0, 0) : Complex(0, gauss(rng));
        continue;
      }
      if (std::make_pair(rm, cm) < std::make_pair(r, c)) continue;
      if (r == c) {
        X(r, c) = Complex(gauss(rng), 0);
      } else {
        X(r, c) = Complex(gauss(rng), gauss(rng));
      }
      X(rm, cm) = -std::conj(X(r, c));
    }
  }
  return {X.exp(), F};
}

RealMatrix random_sp(int n, std::mt19937_64& rng, double spread) {
  std::normal_distribution<double> gauss(0.0, spread);
  RealMatrix A(n, n), B(n, n), C(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      A(i, j) = gauss(rng);
      B(i, j) = gauss(rng);
      C(i, j) = gauss(rng);
    }
  B = 0.5 * (B + B.transpose()).eval();
  C = 0.5 * (C + C.transpose()).eval();
  RealMatrix X(2 * n, 2 * n);
  X.topLeftCorner(n, n) = A;
  X.topRightCorner(n, n) = B;
  X.bottomLeftCorner(n, n) = C;
  X.bottomRightCorner(n, n) = -A.transpose();
  return X.exp();
}

}  // namespace pseudou::pu
