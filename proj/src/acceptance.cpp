#include "pseudou/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "pseudou/blocks.hpp"
#include "pseudou/burau.hpp"
#include "pseudou/commutators.hpp"
#include "pseudou/cyclo.hpp"
#include "pseudou/pseudo_unitary.hpp"
#include "pseudou/recurrences.hpp"

namespace pseudou::acceptance {

namespace {

using cyclo::BigInt;
using cyclo::RootOfUnity;
using pu::Complex;
using pu::Matrix;
using pu::SignatureForm;
using pu::Vector;

const double pi = std::numbers::pi;

// accumulates failures; keeps only the first message for the report
struct Checker {
  int failures = 0;
  int total = 0;
  std::string first;

  void check(bool ok, const std::string& msg) {
    ++total;
    if (ok) return;
    ++failures;
    if (first.empty()) first = msg;
  }
  template <typename... Args>
  void checkf(bool ok, Args&&... args) {
    if (ok) {
      ++total;
      return;
    }
    std::ostringstream os;
    (os << ... << args);
    check(false, os.str());
  }
};

double mod1_dist(double a, double b) {
  double d = std::fmod(std::abs(a - b), 1.0);
  return std::min(d, 1.0 - d);
}

// ---- 1. published signature sequences --------------------------------

void crit_sequences(Checker& c) {
  struct Row {
    int p, e;
    std::vector<long long> terms;
  };
  const std::vector<Row> rows = {
      {5, 1, {2, 3, 3, 0, -9, -27, -54, -81, -81, 0, 243}},
      {5, 3, {2, 5, 15, 50, 175, 625, 2250, 8125, 29375, 106250, 384375}},
      {7, 1, {3, 8, 18, 29, 2, -237, -1275, -4703, -13750, -31156, -41167}},
      {7, 3,
       {3, 14, 98, 833, 7546, 69629, 645869, 6000099, 55765626, 518361494,
        4818550093}},
      {7, 5,
       {3, 6, -10, -129, -406, 301, 8177, 32801, 15658, -472404, -2440135}},
      {9, 1,
       {4, 16, 62, 211, 446, -1509, -29113, -259040, -1823114, -11137172,
        -60443933}},
      {9, 5,
       {4, 30, 414, 7317, 137862, 2637765, 50664771, 974133540, 18734896134,
        360344121174, 6930952607259}},
      {9, 7,
       {4, 10, -102, -1259, -746, 90915, 687147, -2179104, -67636010,
        -303038972, 3064220783}},
  };
  for (const auto& row : rows) {
    const auto seq = recurrences::extend(recurrences::builtin_spec(row.p, row.e), 11);
    for (int g = 1; g <= 11; ++g)
      c.checkf(seq[g - 1] == BigInt(row.terms[g - 1]), "p=", row.p,
               " zeta^", row.e, " g=", g, ": got ", seq[g - 1].str(),
               " expected ", row.terms[g - 1]);
  }
}

// ---- 2. enumeration vs recurrence ------------------------------------

void crit_agreement(Checker& c) {
  const std::vector<std::pair<int, int>> pairs = {
      {5, 1}, {5, 3}, {7, 1}, {7, 3}, {7, 5}, {9, 1}, {9, 5}, {9, 7}};
  for (auto [p, e] : pairs) {
    const int g_max = (p == 9) ? 4 : 5;
    const auto seq = recurrences::extend(recurrences::builtin_spec(p, e), g_max);
    const RootOfUnity zeta(2 * p, e);
    for (int g = 1; g <= g_max; ++g) {
      const auto rec = blocks::signature(g, p, zeta);
      c.checkf(rec.sigma == seq[g - 1], "signature(", g, ",", p, ",zeta^", e,
               ") = ", rec.sigma.str(), " != recurrence ", seq[g - 1].str());
    }
  }
}

// ---- 3. dimension cross-checks ---------------------------------------

void crit_dimensions(Checker& c) {
  for (BigInt k = 2; k <= 10; ++k) {
    const int p = 2 * static_cast<int>(k);
    c.checkf(blocks::dim_blocks(2, p) == (k * k * k - k) / 6,
             "closed form mismatch g=2 p=", p);
    c.checkf(blocks::dim_blocks(3, p) == k * k * (k * k - 1) * (k * k + 11) / 180,
             "closed form mismatch g=3 p=", p);
    c.checkf(blocks::dim_blocks(4, p) ==
                 k * k * k * (k * k - 1) *
                     (2 * k * k * k * k + 23 * k * k + 191) / 7560,
             "closed form mismatch g=4 p=", p);
  }
  const std::vector<long long> level5 = {2, 5, 15, 50, 175, 625, 2250};
  for (int g = 1; g <= 7; ++g)
    c.checkf(blocks::dim_blocks(g, 5) == BigInt(level5[g - 1]),
             "N(", g, ",5) != ", level5[g - 1]);
  c.check(blocks::dim_blocks(2, 7) == 14, "N(2,7) != 14");
  c.check(blocks::dim_blocks(3, 7) == 98, "N(3,7) != 98");
}

// ---- 4. congruence and parity ----------------------------------------

void crit_congruence(Checker& c) {
  for (int p = 5; p <= 13; p += 2)
    for (int g = 2; g <= 5; ++g) {
      const auto rep = blocks::congruence_check(g, p);
      c.checkf(rep.pass, "congruence fails at g=", g, " p=", p,
               " residue=", rep.residue.str());
    }
  for (int g = 1; g <= 12; ++g)
    c.checkf(blocks::parity_checks(g, 5).pass, "parity fails at g=", g, " p=5");
  for (int p : {6, 10, 14})
    c.checkf(blocks::parity_checks(3, p).pass, "parity fails at g=3 p=", p);
}

// ---- 5. theta table ---------------------------------------------------

long theta_case_table(long p) {
  if (p % 2 == 1) return p % 3 == 0 ? p / 3 : p;
  if (p % 12 == 0) {
    const long s = p / 12;
    return s % 2 == 0 ? 2 * s : s;
  }
  if (p % 4 == 0 && (p / 4) % 3 != 0) {
    const long s = p / 4;
    return s % 2 == 0 ? 2 * s : s;
  }
  if (p % 6 == 0 && (p / 6) % 2 == 1) return 2 * (p / 6);
  return p;
}

void crit_theta(Checker& c) {
  for (long p = 3; p <= 1000; ++p)
    c.checkf(cyclo::theta(p) == theta_case_table(p), "theta(", p,
             ") != case table");
}

// ---- 6. mod-p orbits --------------------------------------------------

void crit_orbits(Checker& c) {
  const auto z51 = recurrences::zero_locus(recurrences::builtin_spec(5, 1), 5);
  c.check(z51.period == 24, "(5,1) mod 5 period != 24");
  c.check(z51.classes == std::vector<int>{4, 10, 16, 22},
          "(5,1) mod 5 zero classes wrong");

  const auto z71 = recurrences::zero_locus(recurrences::builtin_spec(7, 1), 7);
  c.check(z71.period == 12, "(7,1) mod 7 period != 12");
  c.check(z71.classes == std::vector<int>{11}, "(7,1) mod 7 zero classes wrong");

  const auto o73 = recurrences::mod_orbit(recurrences::builtin_spec(7, 3), 7);
  c.check(o73.preperiod + 1 <= 55, "(7,3) mod 7 preperiod too long");
  c.check(36 % o73.period == 0, "(7,3) mod 7 period does not divide 36");
  const auto seq = recurrences::extend(recurrences::builtin_spec(7, 3), 120);
  for (int g = 55; g + 36 <= 120; ++g)
    c.checkf((seq[g - 1] - seq[g + 35]) % 7 == 0,
             "(7,3): sigma(g+36) != sigma(g) mod 7 at g=", g);
}

// ---- 7. phase properties ---------------------------------------------

Matrix random_torus(int m, int n, std::mt19937_64& rng) {
  const int d = m + n;
  std::uniform_real_distribution<double> ang(-pi, pi);
  std::vector<double> th(d);
  double sum = 0;
  for (int i = 0; i + 1 < d; ++i) {
    th[i] = ang(rng);
    sum += th[i];
  }
  th[d - 1] = -sum;
  Matrix D = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) D(i, i) = std::polar(1.0, th[i]);
  return D;
}

// escalate the eigenvalue classification tolerance when the spectral
// machinery reports a conditioning problem; the assertion thresholds on
// the computed quantities are unaffected
double phase_robust(const Matrix& g, const pu::SignatureForm& F) {
  for (double t : {1e-9, 3e-9, 1e-8, 3e-8, 1e-7, 1e-6}) {
    try {
      return pu::dgw_phase(g, F, t);
    } catch (const std::exception&) {
    }
  }
  return pu::dgw_phase(g, F, 1e-5);
}

Complex v0_robust(const Matrix& g, const pu::SignatureForm& F) {
  for (double t : {1e-9, 1e-8, 1e-7, 1e-6}) {
    try {
      return pu::v0(g, F, t);
    } catch (const std::exception&) {
    }
  }
  return pu::v0(g, F, 1e-5);
}

pu::GroupPath path_robust(const Matrix& g, const pu::SignatureForm& F) {
  for (double t : {1e-9, 1e-8, 1e-7, 1e-6}) {
    try {
      return pu::make_path(g, F, 64, t);
    } catch (const std::exception&) {
    }
  }
  return pu::make_path(g, F, 64, 1e-5);
}

double cocycle_robust(const Matrix& g1, const Matrix& g2,
                      const pu::GroupPath& p1, const pu::GroupPath& p2,
                      const pu::SignatureForm& F) {
  for (double t : {1e-9, 1e-8, 1e-7, 1e-6}) {
    try {
      return pu::cocycle(g1, g2, p1, p2, F, t);
    } catch (const std::exception&) {
    }
  }
  return pu::cocycle(g1, g2, p1, p2, F, 1e-5);
}

void crit_phase(Checker& c, std::mt19937_64& rng) {
  const double tol = 1e-7;
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const auto F = SignatureForm::standard(m, n);
    const int trials = (m == 1 && n == 1) ? 68 : 66;
    for (int t = 0; t < trials; ++t) {
      // moderate spread keeps sixth powers within double-precision range
      const Matrix g = pu::random_su(m, n, rng, 0.5);
      const double phase = phase_robust(g, F);

      const Matrix h = pu::random_su(m, n, rng);
      c.checkf(mod1_dist(phase_robust(h * g * h.inverse(), F), phase) < tol,
               "conjugation invariance fails at SU(", m, ",", n, ")");

      Matrix pw = g;
      for (int k = 2; k <= 6; ++k) {
        pw = pw * g;
        c.checkf(mod1_dist(phase_robust(pw, F), k * phase) < tol,
                 "power congruence fails at SU(", m, ",", n, ") k=", k);
      }

      // commuting pair: two torus elements in a common conjugated basis;
      // keep K moderately conditioned so the eigenvalue angles of the
      // product stay well below the criterion threshold
      const Matrix K = pu::random_su(m, n, rng, 0.5);
      const Matrix a = K * random_torus(m, n, rng) * K.inverse();
      const Matrix b = K * random_torus(m, n, rng) * K.inverse();
      const double add_gap = mod1_dist(
          phase_robust(a * b, F), phase_robust(a, F) + phase_robust(b, F));
      c.checkf(add_gap < tol, "commuting additivity fails at SU(", m, ",", n,
               ") gap=", add_gap);

      const auto [bg, bF] = pu::random_borel(m, n, rng);
      const double bphase = phase_robust(bg, bF);
      c.checkf(std::min(bphase, 1.0 - bphase) < tol,
               "Borel integrality fails at SU(", m, ",", n, ")");

      Complex det;
      try {
        det = pu::det_elliptic_positive(g, F);
      } catch (const std::exception&) {
        det = pu::det_elliptic_positive(g, F, tol);
      }
      c.checkf(std::abs(det / std::abs(det) - std::polar(1.0, 2 * pi * phase)) <
                   tol,
               "elliptic determinant identity fails at SU(", m, ",", n, ")");
    }
  }
}

// ---- 8. cocycle suite -------------------------------------------------

void crit_cocycle(Checker& c, std::mt19937_64& rng) {
  for (auto [m, n, trials] : {std::tuple{1, 1, 60}, {2, 1, 40}}) {
    const auto F = SignatureForm::standard(m, n);
    const Matrix id = Matrix::Identity(m + n, m + n);
    pu::GroupPath trivial;
    trivial.samples = {id};
    for (int t = 0; t < trials; ++t) {
      const Matrix g1 = pu::random_su(m, n, rng, 0.8);
      const Matrix g2 = pu::random_su(m, n, rng, 0.8);
      const Matrix g3 = pu::random_su(m, n, rng, 0.8);
      const auto p1 = path_robust(g1, F);
      const auto p2 = path_robust(g2, F);
      const auto p3 = path_robust(g3, F);
      const auto p12 = path_robust(g1 * g2, F);
      const auto p23 = path_robust(g2 * g3, F);

      const double lhs = cocycle_robust(g1, g2, p1, p2, F) +
                         cocycle_robust(g1 * g2, g3, p12, p3, F);
      const double rhs = cocycle_robust(g2, g3, p2, p3, F) +
                         cocycle_robust(g1, g2 * g3, p1, p23, F);
      c.checkf(std::abs(lhs - rhs) < 1e-6, "cocycle identity fails at SU(", m,
               ",", n, "): ", lhs, " vs ", rhs);

      c.checkf(std::abs(cocycle_robust(g1, id, p1, trivial, F)) < 1e-8,
               "c(g,1) != 0");
      c.checkf(std::abs(cocycle_robust(id, g1, trivial, p1, F)) < 1e-8,
               "c(1,g) != 0");

      const double cval = cocycle_robust(g1, g2, p1, p2, F);
      const Complex ratio =
          v0_robust(g1, F) * v0_robust(g2, F) / v0_robust(g1 * g2, F);
      c.checkf(std::abs(std::polar(1.0, -2 * pi * cval) -
                        ratio / std::abs(ratio)) < 1e-8,
               "exp(2 pi i c) incompatible with v0");
    }
  }
}

// ---- 9. embeddings and windings ---------------------------------------

void crit_windings(Checker& c, std::mt19937_64& rng) {
  // orthogonal symplectic matrices (the unitary subgroup) land in the
  // diagonal S(U(n) x U(n)) blocks
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int n : {1, 2, 3}) {
    for (int t = 0; t < 10; ++t) {
      Matrix Z(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Z(i, j) = Complex(nd(rng), nd(rng));
      const Matrix U = Eigen::HouseholderQR<Matrix>(Z).householderQ();
      pu::RealMatrix S(2 * n, 2 * n);
      S.topLeftCorner(n, n) = U.real();
      S.topRightCorner(n, n) = U.imag();
      S.bottomLeftCorner(n, n) = -U.imag();
      S.bottomRightCorner(n, n) = U.real();
      const Matrix img = pu::sp_to_su(S);
      const double off = img.topRightCorner(n, n).cwiseAbs().maxCoeff() +
                         img.bottomLeftCorner(n, n).cwiseAbs().maxCoeff();
      c.checkf(off < 1e-10, "off-diagonal block residual ", off, " at n=", n);
    }
  }

  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    const auto loop = pu::generator_loop(m, n);
    const double w = pu::lift_phase(loop, SignatureForm::standard(m, n));
    c.checkf(std::lround(w) == 1 && std::abs(w - 1.0) < 1e-6,
             "v0 winding != 1 at SU(", m, ",", n, ")");
    c.checkf(pu::sp_winding(pu::su_path_to_sp(loop, m, n)) == 2,
             "symplectic winding != 2 at SU(", m, ",", n, ")");
  }
}

// ---- 10. commutator pipeline ------------------------------------------

Vector random_isotropic(int m, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Vector u(m + n);
  for (int i = 0; i < m + n; ++i) u(i) = Complex(nd(rng), nd(rng));
  const double np = u.head(m).norm();
  const double nn = u.tail(n).norm();
  u.tail(n) *= np / nn;
  return u;
}

void crit_commutators(Checker& c, std::mt19937_64& rng) {
  namespace cm = pseudou::commutators;
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    const auto F = SignatureForm::standard(m, n);
    const int d = m + n;
    for (int t = 0; t < 100; ++t) {
      const Matrix g = pu::random_su(m, n, rng);
      const auto list = cm::commutator_decomposition(g, F);
      c.checkf(list.residual < 1e-8, "residual ", list.residual, " at SU(", m,
               ",", n, ")");
      c.checkf(static_cast<int>(list.pairs.size()) <= 14 * d,
               list.pairs.size(), " commutators at SU(", m, ",", n, ")");
    }
    // algebraic identity suite at 1e-10
    for (int t = 0; t < 20; ++t) {
      const Vector u = random_isotropic(m, n, rng);
      const Complex a(0.0, coef(rng)), b(0.0, coef(rng));
      const Complex cc(coef(rng), coef(rng));
      auto err = [](const Matrix& A, const Matrix& B) {
        return (A - B).cwiseAbs().maxCoeff();
      };
      c.check(err(cm::build_transvection(u, a, F) * cm::build_transvection(u, b, F),
                  cm::build_transvection(u, a + b, F)) < 1e-10,
              "transvection addition identity fails");
      c.check(err(cm::build_transvection(u * cc, a, F),
                  cm::build_transvection(u, std::norm(cc) * a, F)) < 1e-10,
              "transvection rescaling identity fails");
      Vector w(d);
      std::normal_distribution<double> nd(0.0, 1.0);
      do {
        for (int i = 0; i < d; ++i) w(i) = Complex(nd(rng), nd(rng));
        w.normalize();
        // keep the anisotropy away from zero so the built reflection has
        // moderate norm and the 1e-10 comparisons are not roundoff bound
      } while (std::abs(F.quadratic(w)) < 0.2);
      const Complex r1 = std::polar(1.0, coef(rng));
      const Complex r2 = std::polar(1.0, coef(rng));
      const Matrix S = cm::build_quasi_reflection(w, r1, F);
      c.check(err(S * cm::build_quasi_reflection(w, r2, F),
                  cm::build_quasi_reflection(w, r1 * r2, F)) < 1e-10,
              "quasi-reflection multiplicativity fails");
      c.check(std::abs(S.determinant() - r1) < 1e-10,
              "quasi-reflection determinant fails");
      c.check(err(S * cm::build_transvection(u, a, F) * S.inverse(),
                  cm::build_transvection(S * u, a, F)) < 1e-10,
              "conjugation identity fails");
      if (std::abs(a) > 1e-3) {
        const auto [A, B] = cm::transvection_to_commutator({u, a}, F);
        c.check(err(A * B * A.inverse() * B.inverse(),
                    cm::build_transvection(u, a, F)) < 1e-10,
                "commutator identity fails");
      }
    }
  }
}

// ---- 11. Burau / Squier -----------------------------------------------

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void crit_burau(Checker& c, std::mt19937_64& rng) {
  namespace br = pseudou::burau;
  std::uniform_real_distribution<double> ang(-pi, pi);
  std::uniform_int_distribution<int> pick_k(3, 7);
  for (int t = 0; t < 50; ++t) {
    const int k = pick_k(rng);
    br::BraidWord w;
    w.strands = k;
    std::uniform_int_distribution<int> gen(1, k - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int i = 0; i < 12; ++i)
      w.letters.push_back(sgn(rng) ? gen(rng) : -gen(rng));
    const br::Complex q = std::polar(1.0, ang(rng));
    const br::Matrix B = br::reduced_burau(w, q);
    const br::Matrix J = br::squier_form(k, br::principal_sqrt(q));
    const double res = (B.adjoint() * J * B - J).cwiseAbs().maxCoeff();
    c.checkf(res < 1e-10, "invariance residual ", res, " at k=", k);
  }

  for (int k = 3; k <= 7; ++k)
    for (int j = 1; j <= 40; ++j) {
      // squier_definite throws on window/spectrum disagreement
      try {
        br::squier_definite(k, std::polar(1.0, 2.0 * pi * j / 83.0));
        c.check(true, "");
      } catch (const std::exception& e) {
        c.checkf(false, "definiteness check failed at k=", k, " j=", j, ": ",
                 e.what());
      }
    }

  // certified noncompact count against the classical estimate; the
  // estimate misses the definite classes with raw angle just below 4 pi
  // (and, for composite p, extra principal-root exclusions), so it is
  // genuinely violated at larger p — reported here, not patched over
  for (int g = 4; g <= 10; ++g)
    for (int p = 5; p <= 101; p += 2) {
      const auto rc = br::count_noncompact_roots(g, p);
      c.checkf(rc.meets_lower_bound, "count ", rc.count, " < bound ",
               rc.lower_bound, " at g=", g, " p=", p);
      c.checkf(rc.window_count <= rc.window_bound, "window count ",
               rc.window_count, " exceeds ", rc.window_bound, " at g=", g,
               " p=", p);
    }

  for (int g = 4; g <= 10; ++g) {
    const auto lt = br::lattice_thresholds(g);
    for (int p = 7; p <= 101; p += 4)  // p = 3 mod 4
      if (is_prime(p) && p > lt.threshold) {
        c.checkf((2.0 * g - 3.0) * p / (4.0 * g) - 3.0 > lt.t_g,
                 "threshold consistency fails at g=", g, " p=", p);
        c.checkf((2L * g - 3) * p / (4L * g) - 3 >= lt.t_g,
                 "floored threshold consistency fails at g=", g, " p=", p);
      }
  }
}

// ---- 12. central obstruction ------------------------------------------

void crit_obstruction(Checker& c) {
  const RootOfUnity zeta10(10, 1);
  const auto g2 = blocks::central_obstruction(2, 5, zeta10);
  c.check(g2.nonvanishing, "obstruction should not vanish at g=2 p=5");
  const auto g4 = blocks::central_obstruction(4, 5, zeta10);
  c.check(!g4.nonvanishing, "obstruction should vanish at g=4 p=5 (h+=25)");
  c.check(blocks::signature(4, 5, zeta10).h_plus == 25, "h+(4,5) != 25");

  for (int g = 2; g <= 4; ++g)
    for (int p : {5, 7}) {
      const RootOfUnity zeta(2 * p, 1);
      const auto ob = blocks::central_obstruction(g, p, zeta);
      const auto rec = blocks::signature(g, p, zeta);
      const double hplus = rec.h_plus.convert_to<double>();
      double expected = std::fmod(-6.0 * hplus * zeta.arg(), 2 * pi);
      if (expected < 0) expected += 2 * pi;
      double d = std::abs(ob.phase - expected);
      d = std::min(d, std::abs(d - 2 * pi));
      c.checkf(d < 1e-12, "phase mismatch at g=", g, " p=", p, ": ", d);
    }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Checker&, std::mt19937_64&)> run;
};

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  const std::vector<Criterion> criteria = {
      {1, "published signature sequences (8 pairs x 11 terms)",
       [](Checker& c, std::mt19937_64&) { crit_sequences(c); }},
      {2, "enumeration agrees with the recurrences",
       [](Checker& c, std::mt19937_64&) { crit_agreement(c); }},
      {3, "dimension closed forms and level-5/7 values",
       [](Checker& c, std::mt19937_64&) { crit_dimensions(c); }},
      {4, "congruence and parity checks",
       [](Checker& c, std::mt19937_64&) { crit_congruence(c); }},
      {5, "theta(p) equals the case table up to 1000",
       [](Checker& c, std::mt19937_64&) { crit_theta(c); }},
      {6, "mod-p orbit periods and zero loci",
       [](Checker& c, std::mt19937_64&) { crit_orbits(c); }},
      {7, "phase properties on random group elements", crit_phase},
      {8, "cocycle identity, normalization, v0 compatibility", crit_cocycle},
      {9, "embedding blocks and winding numbers", crit_windings},
      {10, "commutator pipeline and identities", crit_commutators},
      {11, "Burau/Squier invariance, windows, counting bounds", crit_burau},
      {12, "central obstruction",
       [](Checker& c, std::mt19937_64&) { crit_obstruction(c); }},
  };

  std::vector<CriterionResult> out;
  for (const auto& cr : criteria) {
    std::mt19937_64 rng(seed + cr.id);  // per-criterion stream
    Checker chk;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(chk, rng);
    } catch (const std::exception& e) {
      chk.check(false, std::string("exception: ") + e.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    CriterionResult res;
    res.id = cr.id;
    res.name = cr.name;
    res.pass = chk.failures == 0;
    res.seconds = std::chrono::duration<double>(stop - start).count();
    if (chk.failures > 0) {
      std::ostringstream os;
      os << chk.failures << "/" << chk.total << " checks failed; first: "
         << chk.first;
      res.detail = os.str();
    } else {
      std::ostringstream os;
      os << chk.total << " checks";
      res.detail = os.str();
    }
    out.push_back(std::move(res));
  }
  return out;
}

int report(const std::vector<CriterionResult>& results, std::ostream& os) {
  int failures = 0;
  for (const auto& r : results) {
    os << "[" << (r.id < 10 ? " " : "") << r.id << "] "
       << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail
       << ", " << r.seconds << " s)\n";
    if (!r.pass) ++failures;
  }
  os << results.size() - failures << " of " << results.size()
     << " criteria passed\n";
  return failures;
}

}  // namespace pseudou::acceptance
