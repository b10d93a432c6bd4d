#include "pseudou/commutators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace pseudou::commutators {

namespace {

double inf_norm(const Matrix& A) { return A.cwiseAbs().maxCoeff(); }

// B(x, y) = y* H x
Complex B(const SignatureForm& F, const Vector& x, const Vector& y) {
  return F.pairing(x, y);
}

double Q(const SignatureForm& F, const Vector& x) { return F.quadratic(x); }

bool is_isotropic(const SignatureForm& F, const Vector& u, double tol) {
  return std::abs(Q(F, u)) <= tol * u.squaredNorm();
}

Transvection normalized(const Transvection& t) {
  const double s = t.u.norm();
  if (s == 0.0) return t;
  // tau_{cu,a} = tau_{u, |c|^2 a}
  return Transvection{t.u / s, t.a * s * s};
}

Complex force_imaginary(Complex a, double tol, const char* what) {
  if (std::abs(a.real()) > std::max(1e-6, tol) * (1.0 + std::abs(a)))
    throw factorization_error(std::string(what) +
                              ": scalar is not purely imaginary");
  return Complex(0.0, a.imag());
}

}  // namespace

Matrix build_transvection(const Vector& u, Complex a, const SignatureForm& F,
                          double tol) {
  if (u.size() != F.dim())
    throw pu::dimension_mismatch_error("transvection vector size");
  if (!is_isotropic(F, u, std::max(tol, 1e-8)))
    throw std::invalid_argument("transvection vector is not isotropic");
  if (std::abs(a.real()) > std::max(tol, 1e-8) * (1.0 + std::abs(a)))
    throw std::invalid_argument("transvection scalar is not imaginary");
  return Matrix::Identity(F.dim(), F.dim()) +
         a * u * (u.adjoint() * F.H);
}

Matrix build_quasi_reflection(const Vector& u, Complex a,
                              const SignatureForm& F, double tol) {
  if (u.size() != F.dim())
    throw pu::dimension_mismatch_error("quasi-reflection vector size");
  const double q = Q(F, u);
  if (std::abs(q) <= std::max(tol, 1e-10) * u.squaredNorm())
    throw std::invalid_argument("quasi-reflection vector is isotropic");
  if (std::abs(std::abs(a) - 1.0) > std::max(tol, 1e-8))
    throw std::invalid_argument("quasi-reflection scalar must be unit");
  return Matrix::Identity(F.dim(), F.dim()) +
         ((a - 1.0) / q) * u * (u.adjoint() * F.H);
}

Matrix build_factor(const Factor& f, const SignatureForm& F, double tol) {
  if (std::holds_alternative<Transvection>(f)) {
    const auto& t = std::get<Transvection>(f);
    return build_transvection(t.u, t.a, F, tol);
  }
  const auto& s = std::get<QuasiReflection>(f);
  return build_quasi_reflection(s.u, s.a, F, tol);
}

Matrix build_factors(const std::vector<Factor>& fs, const SignatureForm& F,
                     double tol) {
  Matrix prod = Matrix::Identity(F.dim(), F.dim());
  for (const auto& f : fs) prod = prod * build_factor(f, F, tol);
  return prod;
}

std::vector<Factor> reflection_factorization(const Matrix& g,
                                             const SignatureForm& F,
                                             double tol) {
  const int d = F.dim();
  const double scale = 1.0 + inf_norm(g);
  const double done_tol = 1e3 * std::max(tol, 1e-12) * scale;
  if (!pu::is_member(g, F, 1e2 * std::max(tol, 1e-10) * scale * scale))
    throw pu::not_member_error("reflection_factorization: not an isometry");

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<Factor> factors;
  Matrix r = g;
  for (int iter = 0; iter < 4 * d + 8; ++iter) {
    const Matrix rm = r - Matrix::Identity(d, d);
    if (inf_norm(rm) <= done_tol) return factors;

    Eigen::JacobiSVD<Matrix> svd(rm, Eigen::ComputeFullV | Eigen::ComputeFullU);
    const double thr = 1e-7 * std::max(1.0, svd.singularValues()(0));
    std::vector<Vector> candidates;
    std::vector<int> kept;
    for (int i = 0; i < d; ++i)
      if (svd.singularValues()(i) > thr) {
        candidates.push_back(svd.matrixV().col(i));
        kept.push_back(i);
      }
    const size_t base = candidates.size();
    if (base == 0) return factors;
    for (int extra = 0; extra < 8; ++extra) {
      Vector v = Vector::Zero(d);
      for (size_t i = 0; i < base; ++i)
        v += Complex(gauss(rng), gauss(rng)) * candidates[i];
      candidates.push_back(v.normalized());
    }
    // the reflection vector w = r v - v can be any anisotropic direction
    // of the moving space range(r - I); take the direction extremizing
    // the restricted form so the quasi-reflection stays well conditioned
    {
      const int k = static_cast<int>(base);
      Matrix W(d, k);
      for (int i = 0; i < k; ++i) W.col(i) = svd.matrixU().col(kept[i]);
      Eigen::SelfAdjointEigenSolver<Matrix> es(W.adjoint() * F.H * W);
      int ext = 0;
      for (int i = 1; i < k; ++i)
        if (std::abs(es.eigenvalues()(i)) > std::abs(es.eigenvalues()(ext)))
          ext = i;
      const Vector z = es.eigenvectors().col(ext);
      Vector v = Vector::Zero(d);
      for (int i = 0; i < k; ++i)
        v += (z(i) / svd.singularValues()(kept[i])) *
             svd.matrixV().col(kept[i]);
      candidates.push_back(v.normalized());
    }

    // best quasi-reflection candidate: maximal relative anisotropy of
    // w = r v - v
    double best_aniso = -1.0;
    Vector best_v;
    double best_imd = -1.0;
    Vector best_tv;
    for (const Vector& v : candidates) {
      const Vector w = r * v - v;
      const double wn2 = w.squaredNorm();
      if (wn2 <= 1e-20) continue;
      const double aniso = std::abs(Q(F, w)) / wn2;
      if (aniso > best_aniso) {
        best_aniso = aniso;
        best_v = v;
      }
      const Complex delta = B(F, v, w);  // w* H v
      const double imd = std::abs(delta.imag()) / (std::sqrt(wn2) * v.norm());
      if (aniso <= 1e-5 && imd > best_imd) {
        best_imd = imd;
        best_tv = v;
      }
    }

    if (best_aniso > 1e-5) {
      const Vector w = r * best_v - best_v;
      const Complex delta = B(F, best_v, w);
      const Complex a = -std::conj(delta) / delta;
      factors.push_back(QuasiReflection{w.normalized(), a});
      r = build_quasi_reflection(w, 1.0 / a, F, tol) * r;
      continue;
    }
    if (best_imd > 1e-8) {
      const Vector w = r * best_tv - best_tv;
      const Complex delta = B(F, best_tv, w);
      const Complex c(0.0, -1.0 / delta.imag());
      factors.push_back(normalized(Transvection{w, c}));
      r = build_transvection(w, -c, F, tol) * r;
      continue;
    }

    // degenerate configuration: break it with a preparatory transvection
    // along an isotropic direction in the moving space
    bool prepared = false;
    for (size_t i = 0; i < base && !prepared; ++i) {
      for (size_t j = i + 1; j < base && !prepared; ++j) {
        const Vector& x = svd.matrixU().col(static_cast<int>(i));
        const Vector& y = svd.matrixU().col(static_cast<int>(j));
        const double qx = Q(F, x), qy = Q(F, y);
        if (qx * qy >= -1e-12) continue;
        const double mu = B(F, x, y).real();
        const double disc = mu * mu - qx * qy;
        const double t = (-mu + std::sqrt(disc)) / qy;
        const Vector u0 = (x + t * y).normalized();
        factors.push_back(Transvection{u0, Complex(0.0, 1.0)});
        r = build_transvection(u0, Complex(0.0, -1.0), F, tol) * r;
        prepared = true;
      }
    }
    if (!prepared)
      throw factorization_error(
          "reflection_factorization: no usable candidate vector");
  }
  throw factorization_error("reflection_factorization: did not terminate");
}

std::vector<Transvection> map_isotropic_line(const Vector& u, const Vector& v,
                                             const SignatureForm& F,
                                             double tol) {
  const double iso_tol = std::max(tol, 1e-8);
  if (!is_isotropic(F, u, iso_tol) || !is_isotropic(F, v, iso_tol))
    throw std::invalid_argument("map_isotropic_line: vectors not isotropic");

  // same line?
  const Vector residual = v - u * (u.dot(v) / u.squaredNorm());
  if (residual.norm() <= 1e-10 * v.norm()) return {};

  const Complex delta = B(F, u, v);  // v* H u
  const double sc = u.norm() * v.norm();
  if (std::abs(delta) > 1e-10 * sc) {
    const Complex a = Complex(0, 1) * delta;
    const Vector x = u + a * v;
    const Complex b = -1.0 / (std::conj(a) * delta);
    return {normalized(Transvection{x, b})};
  }

  // orthogonal isotropic lines: route through an auxiliary isotropic x
  // with B(u,x) != 0 != B(v,x)
  std::mt19937_64 rng(0xfeed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int d = F.dim();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector y(d);
    if (attempt < d) {
      y = Vector::Zero(d);
      y(attempt) = 1.0;
    } else {
      for (int i = 0; i < d; ++i) y(i) = Complex(gauss(rng), gauss(rng));
    }
    const Complex beta = B(F, y, u);  // u* H y
    const Complex till = B(F, y, v);  // v* H y
    if (std::abs(beta) <= 1e-6 * y.norm() * u.norm()) continue;
    if (std::abs(till) <= 1e-6 * y.norm() * v.norm()) continue;
    const Vector x = y - (Q(F, y) / (2.0 * std::conj(beta))) * u;
    if (std::abs(B(F, x, v)) <= 1e-8 * x.norm() * v.norm()) continue;
    auto t1 = map_isotropic_line(u, x, F, tol);
    auto t2 = map_isotropic_line(x, v, F, tol);
    std::vector<Transvection> out(std::move(t2));
    out.insert(out.end(), t1.begin(), t1.end());
    return out;
  }
  throw factorization_error("map_isotropic_line: no auxiliary vector found");
}

namespace {

// inverse of a left-to-right transvection word
std::vector<Transvection> inverted(const std::vector<Transvection>& w) {
  std::vector<Transvection> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Transvection{it->u, -it->a});
  return out;
}

}  // namespace

std::vector<Transvection> su11_to_transvections(const Matrix& g,
                                                const Vector& u_in,
                                                const Vector& v_in,
                                                const SignatureForm& F,
                                                double tol) {
  const double chk = std::max(tol, 1e-9);
  if (std::abs(B(F, u_in, v_in) - 1.0) > 1e-6 ||
      !is_isotropic(F, u_in, 1e-7) || !is_isotropic(F, v_in, 1e-7))
    throw std::invalid_argument(
        "su11_to_transvections: (u,v) is not a hyperbolic pair");

  // balance the pair: a lopsided (u, v) amplifies roundoff in the
  // coordinate computations by the norm ratio
  const double s = std::sqrt(u_in.norm() / v_in.norm());
  const Vector u = u_in / s;
  const Vector v = v_in * s;

  Matrix N = g;
  std::vector<Transvection> applied;  // in application order

  // move [N u] back to [u], working in the coordinates of the pair:
  // y = p u + q v with p = B(y, v), q = B(y, u)
  {
    Complex p = B(F, N * u, v);
    Complex q = B(F, N * u, u);
    const double sz = std::abs(p) + std::abs(q);
    if (std::abs(q) > 1e-12 * sz) {
      if (std::abs(p) < 0.25 * std::abs(q)) {
        // nearly the opposite isotropic line; shift it first
        applied.push_back(Transvection{u, Complex(0, 1)});
        N = build_transvection(u, Complex(0, 1), F, tol) * N;
        p = B(F, N * u, v);
        q = B(F, N * u, u);
      }
      const Complex c = force_imaginary(-q / p, tol, "su11 line step");
      applied.push_back(Transvection{v, c});
      N = build_transvection(v, c, F, tol) * N;
    }
  }

  // fix the line [v], keeping [u]
  std::vector<Transvection> trailing;  // right factors, applied before g
  {
    const Vector y = N * v;
    const Complex a = B(F, y, v);  // u-coordinate of y
    const Complex b = B(F, y, u);  // v-coordinate of y
    if (std::abs(b) < 1e-10)
      throw factorization_error("su11_to_transvections: singular restriction");
    if (std::abs(a) > chk * std::abs(b)) {
      // the shear can be removed on either side of N; for an extreme
      // dilation the two candidate coefficients -a/b and -a*b differ by
      // |b|^2, so pick the side that keeps the coefficient moderate
      if (std::abs(b) <= 1.0) {
        const Complex c = force_imaginary(-a * b, tol, "su11");
        trailing.push_back(Transvection{u, c});
        N = N * build_transvection(u, c, F, tol);
      } else {
        const Complex c = force_imaginary(-a / b, tol, "su11");
        applied.push_back(Transvection{u, c});
        N = build_transvection(u, c, F, tol) * N;
      }
    }
  }

  // N is now diag(beta, 1/beta) on the pair, beta real
  Complex beta_c = B(F, N * u, v);
  if (std::abs(beta_c.imag()) > 1e-6 * (1.0 + std::abs(beta_c)))
    throw factorization_error("su11_to_transvections: non-real dilation");
  const double b = beta_c.real();

  std::vector<Transvection> word;
  // applied = A_1, ..., A_k with A_k ... A_1 g = diag(b, 1/b), so
  // g = inv(A_1) ... inv(A_k) diag(b, 1/b)
  for (const auto& t : applied) word.push_back(Transvection{t.u, -t.a});

  if (std::abs(b - 1.0) > chk) {
    // the display below is exact for every real b != 0, including b = -1
    if (std::abs(b) < 1e-10)
      throw factorization_error("su11_to_transvections: vanishing dilation");
    // an extreme dilation makes the display coefficients grow like 1/|b|
    // and roundoff in the final product swamps the target residual; split
    // diag(b, 1/b) into square-root factors until each piece is moderate
    std::vector<double> parts;
    const std::function<void(double)> split = [&](double bb) {
      if (std::abs(bb) < 1e-4 || std::abs(bb) > 1e4) {
        const double r = std::sqrt(std::abs(bb));
        split(bb < 0.0 ? -r : r);
        split(r);
      } else {
        parts.push_back(bb);
      }
    };
    split(b);
    for (const double bb : parts) {
      // balance the four coefficients: with |aa| = 1 the last one grows
      // like 1/bb^2 for small |bb|
      const double t =
          std::max({1.0, 1.0 / std::abs(bb), 1.0 / std::sqrt(std::abs(bb))});
      const Complex aa(0.0, t);
      word.push_back(Transvection{v, -aa});
      word.push_back(Transvection{u, (1.0 - 1.0 / bb) / aa});
      word.push_back(Transvection{v, aa * bb});
      word.push_back(Transvection{u, (1.0 / (bb * bb) - 1.0 / bb) / aa});
    }
  }

  // right factors: A_k ... A_1 g R_1 ... R_j = diag(b, 1/b), so their
  // inverses close the word after the dilation display
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it)
    word.push_back(Transvection{it->u, -it->a});

  // verify
  Matrix P = Matrix::Identity(F.dim(), F.dim());
  for (const auto& t : word) P = P * build_transvection(t.u, t.a, F, tol);
  if (inf_norm(P - g) > 1e-6 * (1.0 + inf_norm(g)))
    throw factorization_error(
        "su11_to_transvections: reconstruction failed (residual " +
        std::to_string(inf_norm(P - g)) + ", dilation " + std::to_string(b) +
        ", word length " + std::to_string(word.size()) + ")");
  std::vector<Transvection> out;
  out.reserve(word.size());
  for (const auto& t : word) out.push_back(normalized(t));
  return out;
}

namespace {

// sigma_{x,alpha} sigma_{y,1/alpha} with Q(x) Q(y) < 0 as a word of at
// most 7 transvections
std::vector<Transvection> opposite_pair(const QuasiReflection& s1,
                                        const QuasiReflection& s2,
                                        const SignatureForm& F, double tol) {
  const Vector& x = s1.u;
  const Vector& y = s2.u;
  const double qx = Q(F, x), qy = Q(F, y);
  if (qx * qy >= 0)
    throw factorization_error("opposite_pair: signs do not differ");
  const double mu = B(F, x, y).real();
  const double disc = mu * mu - qx * qy;
  // evaluate the far root directly and the near root through the product
  // qx / qy to avoid cancellation when |qx qy| << mu^2
  const double big = (-mu - std::copysign(std::sqrt(disc), mu)) / qy;
  const double other = (qx / qy) / big;
  const double tp = mu >= 0.0 ? other : big;
  const double tm = mu >= 0.0 ? big : other;
  const Vector u0 = x + tp * y;
  Vector v1 = x + tm * y;
  const Complex gamma = B(F, u0, v1);  // v1* H u0
  if (std::abs(gamma) < 1e-12 * u0.norm() * v1.norm())
    throw factorization_error("opposite_pair: degenerate plane");
  v1 /= std::conj(gamma);
  const Matrix M = build_quasi_reflection(s1.u, s1.a, F, tol) *
                   build_quasi_reflection(s2.u, s2.a, F, tol);
  return su11_to_transvections(M, u0, v1, F, tol);
}

Vector opposite_sign_vector(const SignatureForm& F, double qx) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (F.H + F.H.adjoint()));
  for (int i = 0; i < F.dim(); ++i) {
    if (es.eigenvalues()(i) * qx < 0) return es.eigenvectors().col(i);
  }
  throw factorization_error("no vector of opposite sign (definite form?)");
}

}  // namespace

std::vector<Transvection> quasireflections_to_transvections(
    const std::vector<Factor>& factors, const SignatureForm& F, double tol) {
  std::vector<Factor> word = factors;

  // determinant bookkeeping
  Complex det = 1.0;
  for (const auto& f : word)
    if (std::holds_alternative<QuasiReflection>(f))
      det *= std::get<QuasiReflection>(f).a;
  if (std::abs(det - 1.0) > 1e-6)
    throw not_special_error(
        "quasireflections_to_transvections: determinant product is not 1");

  const auto is_qr = [](const Factor& f) {
    return std::holds_alternative<QuasiReflection>(f);
  };
  const auto trivial_qr = [](const Factor& f) {
    return std::holds_alternative<QuasiReflection>(f) &&
           std::abs(std::get<QuasiReflection>(f).a - 1.0) < 1e-9;
  };

  for (int guard = 0; guard < 1024; ++guard) {
    std::erase_if(word, trivial_qr);
    auto it = std::find_if(word.begin(), word.end(), is_qr);
    if (it == word.end()) break;
    const size_t i = static_cast<size_t>(it - word.begin());
    auto jt = std::find_if(it + 1, word.end(), is_qr);
    if (jt == word.end())
      throw not_special_error(
          "quasireflections_to_transvections: lone nontrivial quasi-reflection");
    size_t j = static_cast<size_t>(jt - word.begin());

    // conjugate the quasi-reflection past interleaved transvections
    for (size_t k = i; k + 1 < j; ++k) {
      const QuasiReflection s = std::get<QuasiReflection>(word[k]);
      const Transvection t = std::get<Transvection>(word[k + 1]);
      const Matrix S = build_quasi_reflection(s.u, s.a, F, tol);
      word[k] = normalized(Transvection{S * t.u, t.a});
      word[k + 1] = s;
    }

    const QuasiReflection s1 = std::get<QuasiReflection>(word[j - 1]);
    const QuasiReflection s2 = std::get<QuasiReflection>(word[j]);
    const Complex alpha = s1.a;
    const double qx = Q(F, s1.u), qy = Q(F, s2.u);

    std::vector<Factor> replacement;
    if (qx * qy < 0) {
      const auto T =
          opposite_pair(s1, QuasiReflection{s2.u, 1.0 / alpha}, F, tol);
      for (const auto& t : T) replacement.emplace_back(t);
    } else {
      const Vector v = opposite_sign_vector(F, qx);
      const auto T1 =
          opposite_pair(s1, QuasiReflection{v, 1.0 / alpha}, F, tol);
      const auto T2 = opposite_pair(QuasiReflection{v, alpha},
                                    QuasiReflection{s2.u, 1.0 / alpha}, F, tol);
      for (const auto& t : T1) replacement.emplace_back(t);
      for (const auto& t : T2) replacement.emplace_back(t);
    }
    replacement.emplace_back(QuasiReflection{s2.u, alpha * s2.a});

    word.erase(word.begin() + static_cast<long>(j - 1),
               word.begin() + static_cast<long>(j + 1));
    word.insert(word.begin() + static_cast<long>(j - 1), replacement.begin(),
                replacement.end());
  }

  std::vector<Transvection> out;
  out.reserve(word.size());
  for (const auto& f : word) {
    if (!std::holds_alternative<Transvection>(f))
      throw factorization_error(
          "quasireflections_to_transvections: rewriting did not converge");
    out.push_back(std::get<Transvection>(f));
  }
  return out;
}

std::pair<Matrix, Matrix> transvection_to_commutator(const Transvection& t,
                                                     const SignatureForm& F,
                                                     double b, double tol) {
  const int d = F.dim();
  if (F.m == 0 || F.n == 0)
    throw std::invalid_argument(
        "transvection_to_commutator: needs an indefinite ambient form");
  if (b == 0.0 || b == 1.0 || b == -1.0)
    throw std::invalid_argument("transvection_to_commutator: b in {0, +-1}");
  if (t.u.norm() < 1e-14 || std::abs(t.a) < 1e-14)
    return {Matrix::Identity(d, d), Matrix::Identity(d, d)};

  const Vector& u = t.u;
  // hyperbolic completion of u
  Vector x;
  double best = -1.0;
  for (int i = 0; i < d; ++i) {
    Vector e = Vector::Zero(d);
    e(i) = 1.0;
    const double s = std::abs(B(F, e, u));
    if (s > best) {
      best = s;
      x = e;
    }
  }
  if (best < 1e-12)
    throw factorization_error("transvection_to_commutator: u is degenerate");
  x /= B(F, x, u);  // now u* H x = 1
  const Vector w = x - (Q(F, x) / 2.0) * u;

  Matrix U(d, 2);
  U.col(0) = u;
  U.col(1) = w;
  Matrix Ginv(2, 2);
  Ginv << 0, 1, 1, 0;  // inverse of the hyperbolic Gram matrix
  Matrix M2 = Matrix::Zero(2, 2);
  M2(0, 0) = b;
  M2(1, 1) = 1.0 / b;
  const Matrix A = Matrix::Identity(d, d) +
                   U * (M2 - Matrix::Identity(2, 2)) * Ginv *
                       (U.adjoint() * F.H);
  const Matrix Bm = build_transvection(u, t.a / (b * b - 1.0), F, tol);
  return {A, Bm};
}

Matrix commutator_product(const CommutatorList& list) {
  if (list.pairs.empty()) return Matrix();
  const long d = list.pairs.front().first.rows();
  Matrix prod = Matrix::Identity(d, d);
  for (const auto& [A, Bm] : list.pairs)
    prod = prod * A * Bm * A.inverse() * Bm.inverse();
  return prod;
}

CommutatorList commutator_decomposition(const Matrix& g,
                                        const SignatureForm& F, double tol) {
  const double scale = 1.0 + inf_norm(g);
  const auto rep = pu::membership(g, F, 1e2 * std::max(tol, 1e-10) * scale * scale);
  if (!rep.preserves_form)
    throw pu::not_member_error("commutator_decomposition: not an isometry");
  if (rep.det_error > 1e-6)
    throw not_special_error("commutator_decomposition: determinant is not 1");

  CommutatorList out;
  if (inf_norm(g - Matrix::Identity(F.dim(), F.dim())) <
      1e3 * std::max(tol, 1e-12) * scale)
    return out;

  const auto factors = reflection_factorization(g, F, tol);
  const auto trans = quasireflections_to_transvections(factors, F, tol);
  for (const auto& t : trans) {
    if (t.u.norm() < 1e-12 || std::abs(t.a) * t.u.squaredNorm() < 1e-12)
      continue;
    out.pairs.push_back(transvection_to_commutator(t, F, 2.0, tol));
  }
  if (!out.pairs.empty())
    out.residual = inf_norm(commutator_product(out) - g);
  return out;
}

}  // namespace pseudou::commutators
