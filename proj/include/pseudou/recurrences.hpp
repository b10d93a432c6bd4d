#pragma once

// Integer linear recurrences behind the signature and dimension sequences:
// companion-matrix extension, exact mod-m orbit analysis with preperiod
// and period, zero residue classes, and the P(0)-invertibility criterion.

#include <stdexcept>
#include <utility>
#include <vector>

#include "pseudou/cyclo.hpp"

namespace pseudou::recurrences {

using cyclo::BigInt;

struct RecurrenceSpec {
  // monic characteristic polynomial, coefficients in increasing degree
  // order; degree = char_poly.size() - 1
  std::vector<BigInt> char_poly;
  // terms at g = 1..degree
  std::vector<BigInt> initial;
  std::pair<int, int> label{0, 0};  // (p, zeta exponent)

  int degree() const { return static_cast<int>(char_poly.size()) - 1; }
  void validate() const;
};

// The published (p, zeta exponent) table for p in {5, 7, 9}; conjugate
// exponents are accepted and mapped to their representative.
RecurrenceSpec builtin_spec(int p, int zeta_exponent);

// Exact terms for g = 1..g_max.
std::vector<BigInt> extend(const RecurrenceSpec& spec, int g_max);

struct ModOrbit {
  int preperiod = 0;
  int period = 0;
  // terms mod m for g = 1 .. preperiod + period
  std::vector<int> residues;
};

ModOrbit mod_orbit(const RecurrenceSpec& spec, int modulus);

struct ZeroLocus {
  int preperiod = 0;
  int period = 0;
  // residue classes of g (mod period) with term = 0 mod m, g > preperiod
  std::vector<int> classes;
};

ZeroLocus zero_locus(const RecurrenceSpec& spec, int modulus);

// True iff char_poly(0) is invertible mod p; then the state vector orbit
// mod p is purely periodic and never reaches zero.
bool invertibility_criterion(const RecurrenceSpec& spec, int p);

// Exact determinant of the companion matrix: (-1)^degree * char_poly(0).
BigInt companion_determinant(const RecurrenceSpec& spec);

}  // namespace pseudou::recurrences
