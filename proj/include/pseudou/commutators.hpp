#pragma once

// Constructive uniform perfectness for SU(m,n): factor an element into
// quasi-reflections and transvections, rewrite the quasi-reflections as
// transvections, and express every transvection as a commutator.  The
// final count is bounded by 14(m+n).
//
// Factor lists multiply left to right: the represented element is
// build(list[0]) * build(list[1]) * ... so the LAST entry acts first.

#include <optional>
#include <variant>
#include <vector>

#include "pseudou/pseudo_unitary.hpp"

namespace pseudou::commutators {

using pu::Complex;
using pu::Matrix;
using pu::SignatureForm;
using pu::Vector;

struct factorization_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_special_error : std::domain_error {
  using std::domain_error::domain_error;
};

// v -> v + a B(v,u) u with Q(u) = 0 and a purely imaginary
struct Transvection {
  Vector u;
  Complex a;
};

// v -> v + (a-1) (B(v,u)/Q(u)) u with Q(u) != 0 and |a| = 1; det = a
struct QuasiReflection {
  Vector u;
  Complex a;
};

using Factor = std::variant<Transvection, QuasiReflection>;

Matrix build_transvection(const Vector& u, Complex a, const SignatureForm& F,
                          double tol = pu::kDefaultTol);
Matrix build_quasi_reflection(const Vector& u, Complex a,
                              const SignatureForm& F,
                              double tol = pu::kDefaultTol);
Matrix build_factor(const Factor& f, const SignatureForm& F,
                    double tol = pu::kDefaultTol);
Matrix build_factors(const std::vector<Factor>& fs, const SignatureForm& F,
                     double tol = pu::kDefaultTol);

// Cartan-Dieudonne style induction: at most m+n factors multiplying to g.
std::vector<Factor> reflection_factorization(const Matrix& g,
                                             const SignatureForm& F,
                                             double tol = pu::kDefaultTol);

// At most two transvections sending the line [u] to [v], u and v isotropic.
std::vector<Transvection> map_isotropic_line(const Vector& u, const Vector& v,
                                             const SignatureForm& F,
                                             double tol = pu::kDefaultTol);

// g must preserve the hyperbolic plane spanned by the hyperbolic pair
// (u, v) (B(u,v) = 1), restrict to determinant 1 on it, and fix the
// orthocomplement pointwise.  At most 7 transvections for a moderate
// dilation; extreme dilations are split into square-root factors, four
// more transvections per split.
std::vector<Transvection> su11_to_transvections(const Matrix& g,
                                                const Vector& u,
                                                const Vector& v,
                                                const SignatureForm& F,
                                                double tol = pu::kDefaultTol);

// Rewrites a mixed factor list of an SU element into pure transvections,
// at most 14 per quasi-reflection.
std::vector<Transvection> quasireflections_to_transvections(
    const std::vector<Factor>& factors, const SignatureForm& F,
    double tol = pu::kDefaultTol);

// A = diag(b, 1/b) on a hyperbolic completion of u, B = tau_{u, a/(b^2-1)};
// then A B A^{-1} B^{-1} = tau_{u,a}.
std::pair<Matrix, Matrix> transvection_to_commutator(
    const Transvection& t, const SignatureForm& F, double b = 2.0,
    double tol = pu::kDefaultTol);

struct CommutatorList {
  std::vector<std::pair<Matrix, Matrix>> pairs;
  double residual = 0.0;  // reconstruction error of the commutator product
};

CommutatorList commutator_decomposition(const Matrix& g,
                                        const SignatureForm& F,
                                        double tol = pu::kDefaultTol);

Matrix commutator_product(const CommutatorList& list);

}  // namespace pseudou::commutators
