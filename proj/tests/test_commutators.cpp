#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pseudou/commutators.hpp"

using namespace pseudou;
using namespace pseudou::commutators;

namespace {

double dist(const Matrix& A, const Matrix& B) {
  return (A - B).cwiseAbs().maxCoeff();
}

Vector random_isotropic(const SignatureForm& F, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  // isotropic = (positive unit) + (negative unit) in an H-eigenbasis; for
  // the standard form combine a random positive-part and negative-part
  // unit vector
  Vector p = Vector::Zero(F.dim()), q = Vector::Zero(F.dim());
  for (int i = 0; i < F.m; ++i) p(i) = Complex(gauss(rng), gauss(rng));
  for (int i = F.m; i < F.dim(); ++i) q(i) = Complex(gauss(rng), gauss(rng));
  return p / p.norm() + q / q.norm();
}

bool same_line(const Vector& a, const Vector& b) {
  const Vector r = b - a * (a.dot(b) / a.squaredNorm());
  return r.norm() <= 1e-7 * b.norm();
}

}  // namespace

TEST_CASE("transvection and quasi-reflection identities") {
  std::mt19937_64 rng(11);
  const auto F = SignatureForm::standard(2, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector u = random_isotropic(F, rng);
    const Complex a(0.0, 1.7), b(0.0, -0.4);

    const Matrix Ta = build_transvection(u, a, F);
    const Matrix Tb = build_transvection(u, b, F);
    CHECK(pu::is_member(Ta, F, 1e-8));
    CHECK(std::abs(Ta.determinant() - 1.0) < 1e-9);
    CHECK(dist(Ta * Tb, build_transvection(u, a + b, F)) < 1e-9);

    const Complex c(0.7, -1.1);
    CHECK(dist(build_transvection(c * u, a, F),
               build_transvection(u, std::norm(c) * a, F)) < 1e-9);

    // anisotropic vector and unit scalars
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector w(F.dim());
    for (int i = 0; i < F.dim(); ++i) w(i) = Complex(gauss(rng), gauss(rng));
    if (std::abs(F.quadratic(w)) < 1e-3 * w.squaredNorm()) continue;
    const Complex al = std::polar(1.0, 0.9), be = std::polar(1.0, -2.2);
    const Matrix Sa = build_quasi_reflection(w, al, F);
    const Matrix Sb = build_quasi_reflection(w, be, F);
    CHECK(pu::is_member(Sa, F, 1e-8));
    CHECK(std::abs(Sa.determinant() - al) < 1e-9);
    CHECK(dist(Sa * Sb, build_quasi_reflection(w, al * be, F)) < 1e-8);
    CHECK(dist(build_quasi_reflection(c * w, al, F), Sa) < 1e-8);

    // conjugation moves the center of a transvection
    CHECK(dist(Sa * Ta * Sa.inverse(),
               build_transvection(Sa * u, a, F)) < 1e-7);
  }
}

TEST_CASE("builder input validation") {
  const auto F = SignatureForm::standard(1, 1);
  Vector e1 = Vector::Zero(2);
  e1(0) = 1.0;
  Vector iso(2);
  iso << 1.0, 1.0;
  CHECK_THROWS_AS(build_transvection(e1, Complex(0, 1), F),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_transvection(iso, Complex(1, 0), F),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_quasi_reflection(iso, Complex(0, 1), F),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_quasi_reflection(e1, Complex(2, 0), F),
                  std::invalid_argument);
}

TEST_CASE("map_isotropic_line: generic and orthogonal lines") {
  std::mt19937_64 rng(23);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const auto F = SignatureForm::standard(m, n);
    for (int trial = 0; trial < 25; ++trial) {
      const Vector u = random_isotropic(F, rng);
      const Vector v = random_isotropic(F, rng);
      const auto word = map_isotropic_line(u, v, F);
      CHECK(word.size() <= 2);
      Matrix P = Matrix::Identity(F.dim(), F.dim());
      for (const auto& t : word) P = P * build_transvection(t.u, t.a, F);
      CHECK(same_line(P * u, v));
    }
  }

  // orthogonal isotropic lines in SU(2,2) force the two-step route
  const auto F = SignatureForm::standard(2, 2);
  Vector u = Vector::Zero(4), v = Vector::Zero(4);
  u(0) = u(2) = 1.0;
  v(1) = v(3) = 1.0;
  CHECK(std::abs(F.pairing(u, v)) < 1e-14);
  const auto word = map_isotropic_line(u, v, F);
  CHECK(word.size() == 2);
  Matrix P = Matrix::Identity(4, 4);
  for (const auto& t : word) P = P * build_transvection(t.u, t.a, F);
  CHECK(same_line(P * u, v));

  // identical lines need nothing
  CHECK(map_isotropic_line(u, Complex(0.3, 0.4) * u, F).empty());
}

TEST_CASE("su11_to_transvections on a hyperbolic plane") {
  const auto F = SignatureForm::standard(2, 1);
  Vector u(3), v(3);
  u << 1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0);
  v << 1.0 / std::sqrt(2.0), 0.0, -1.0 / std::sqrt(2.0);
  REQUIRE(std::abs(F.pairing(u, v) - 1.0) < 1e-12);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 0.8);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix g = build_transvection(u, Complex(0, gauss(rng)), F) *
               build_transvection(v, Complex(0, gauss(rng)), F) *
               build_transvection(u, Complex(0, gauss(rng)), F);
    const auto word = su11_to_transvections(g, u, v, F);
    CHECK(word.size() <= 7);
    Matrix P = Matrix::Identity(3, 3);
    for (const auto& t : word) P = P * build_transvection(t.u, t.a, F);
    CHECK(dist(P, g) < 1e-7);
  }

  // pure dilation u -> 3u, v -> v/3
  Matrix D = Matrix::Identity(3, 3) + 2.0 * u * (v.adjoint() * F.H) +
             (1.0 / 3.0 - 1.0) * v * (u.adjoint() * F.H);
  REQUIRE(pu::is_member(D, F, 1e-9));
  const auto word = su11_to_transvections(D, u, v, F);
  CHECK(word.size() == 4);
  Matrix P = Matrix::Identity(3, 3);
  for (const auto& t : word) P = P * build_transvection(t.u, t.a, F);
  CHECK(dist(P, D) < 1e-8);
}

TEST_CASE("reflection_factorization reconstructs random members") {
  std::mt19937_64 rng(71);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    const auto F = SignatureForm::standard(m, n);
    for (int trial = 0; trial < 15; ++trial) {
      const Matrix g = pu::random_su(m, n, rng, 0.7);
      const auto factors = reflection_factorization(g, F);
      CHECK(factors.size() <= static_cast<size_t>(m + n));
      const Matrix P = build_factors(factors, F);
      CHECK(dist(P, g) < 1e-6 * (1.0 + g.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("quasireflections_to_transvections") {
  std::mt19937_64 rng(92);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const auto F = SignatureForm::standard(m, n);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix g = pu::random_su(m, n, rng, 0.6);
      const auto factors = reflection_factorization(g, F);
      const auto word = quasireflections_to_transvections(factors, F);
      CHECK(word.size() <= 14u * factors.size() + factors.size());
      Matrix P = Matrix::Identity(F.dim(), F.dim());
      for (const auto& t : word) P = P * build_transvection(t.u, t.a, F);
      CHECK(dist(P, g) < 1e-5 * (1.0 + g.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("transvection as a commutator") {
  std::mt19937_64 rng(33);
  const auto F = SignatureForm::standard(2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector u = random_isotropic(F, rng);
    const Transvection t{u, Complex(0.0, 0.3 + 0.1 * trial)};
    for (double b : {2.0, -2.0, 0.5}) {
      const auto [A, Bm] = transvection_to_commutator(t, F, b);
      CHECK(pu::is_member(A, F, 1e-8));
      CHECK(pu::is_member(Bm, F, 1e-8));
      CHECK(std::abs(A.determinant() - 1.0) < 1e-8);
      const Matrix comm = A * Bm * A.inverse() * Bm.inverse();
      CHECK(dist(comm, build_transvection(t.u, t.a, F)) < 1e-8);
    }
  }
  const Transvection t{Vector::Zero(4), Complex(0, 1)};
  CHECK_THROWS_AS(transvection_to_commutator(t, F, 1.0), std::invalid_argument);
}

TEST_CASE("commutator_decomposition end to end") {
  std::mt19937_64 rng(123);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const auto F = SignatureForm::standard(m, n);
    for (int trial = 0; trial < 8; ++trial) {
      const Matrix g = pu::random_su(m, n, rng, 0.6);
      const auto list = commutator_decomposition(g, F);
      CHECK(list.pairs.size() <= static_cast<size_t>(14 * (m + n)));
      for (const auto& [A, Bm] : list.pairs) {
        CHECK(pu::is_member(A, F, 1e-7));
        CHECK(pu::is_member(Bm, F, 1e-7));
      }
      CHECK(list.residual < 1e-5 * (1.0 + g.cwiseAbs().maxCoeff()));
    }
  }

  // identity needs no commutators
  const auto F = SignatureForm::standard(1, 1);
  CHECK(commutator_decomposition(Matrix::Identity(2, 2), F).pairs.empty());

  // form-preserving but non-special input is rejected
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = std::polar(1.0, 0.4);
  d(1, 1) = 1.0;
  d(2, 2) = std::polar(1.0, 0.9);
  CHECK_THROWS_AS(
      commutator_decomposition(d, SignatureForm::standard(2, 1)),
      not_special_error);

  // non-members are rejected
  CHECK_THROWS_AS(
      commutator_decomposition(2.0 * Matrix::Identity(2, 2), F),
      pu::not_member_error);
}
