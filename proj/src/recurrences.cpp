#include "pseudou/recurrences.hpp"

#include <algorithm>
#include <map>

namespace pseudou::recurrences {

void RecurrenceSpec::validate() const {
  if (char_poly.size() < 2 || char_poly.back() != 1)
    throw std::invalid_argument("characteristic polynomial must be monic");
  if (initial.size() != static_cast<size_t>(degree()))
    throw std::invalid_argument("initial terms must match the degree");
}

RecurrenceSpec builtin_spec(int p, int zeta_exponent) {
  if (p >= 3) {
    int e = ((zeta_exponent % (2 * p)) + 2 * p) % (2 * p);
    if (e > p) e = 2 * p - e;  // conjugate root, same real sequence
    zeta_exponent = e;
  }
  const auto make = [p, zeta_exponent](std::vector<BigInt> poly,
                                       std::vector<BigInt> init) {
    RecurrenceSpec s;
    s.char_poly = std::move(poly);
    s.initial = std::move(init);
    s.label = {p, zeta_exponent};
    s.validate();
    return s;
  };
  if (p == 5 && zeta_exponent == 1) return make({3, -3, 1}, {2, 3});
  if (p == 5 && zeta_exponent == 3) return make({5, -5, 1}, {2, 5});
  if (p == 7 && zeta_exponent == 1)
    return make({-23, 23, -8, 1}, {3, 8, 18});
  if (p == 7 && zeta_exponent == 3)
    return make({-49, 49, -14, 1}, {3, 14, 98});
  if (p == 7 && zeta_exponent == 5)
    return make({-23, 23, -6, 1}, {3, 6, -10});
  if (p == 9 && zeta_exponent == 1)
    return make({257, -257, 97, -16, 1}, {4, 16, 62, 211});
  if (p == 9 && zeta_exponent == 5)
    return make({729, -729, 243, -30, 1}, {4, 30, 414, 7317});
  if (p == 9 && zeta_exponent == 7)
    return make({257, -257, 101, -10, 1}, {4, 10, -102, -1259});
  throw std::invalid_argument("no published recurrence for this pair");
}

std::vector<BigInt> extend(const RecurrenceSpec& spec, int g_max) {
  spec.validate();
  if (g_max < 1) throw std::invalid_argument("g_max must be >= 1");
  const int d = spec.degree();
  std::vector<BigInt> out(spec.initial.begin(), spec.initial.end());
  out.resize(std::max<size_t>(out.size(), g_max));
  for (int g = d; g < g_max; ++g) {
    BigInt next = 0;
    for (int i = 0; i < d; ++i) next -= spec.char_poly[i] * out[g - d + i];
    out[g] = next;
  }
  out.resize(g_max);
  return out;
}

ModOrbit mod_orbit(const RecurrenceSpec& spec, int modulus) {
  spec.validate();
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  const int d = spec.degree();
  std::vector<int> poly(d);
  for (int i = 0; i < d; ++i)
    poly[i] =
        static_cast<int>(((spec.char_poly[i] % modulus) + modulus) % modulus);

  std::vector<int> state(d);
  for (int i = 0; i < d; ++i)
    state[i] =
        static_cast<int>(((spec.initial[i] % modulus) + modulus) % modulus);

  ModOrbit orbit;
  std::map<std::vector<int>, int> seen;
  std::vector<int> terms;
  for (int step = 0;; ++step) {
    const auto it = seen.find(state);
    if (it != seen.end()) {
      orbit.preperiod = it->second;
      orbit.period = step - it->second;
      break;
    }
    seen.emplace(state, step);
    terms.push_back(state[0]);
    long long next = 0;
    for (int i = 0; i < d; ++i) next -= 1LL * poly[i] * state[i];
    std::rotate(state.begin(), state.begin() + 1, state.end());
    state[d - 1] = static_cast<int>(((next % modulus) + modulus) % modulus);
  }
  terms.resize(orbit.preperiod + orbit.period);
  orbit.residues = std::move(terms);
  return orbit;
}

ZeroLocus zero_locus(const RecurrenceSpec& spec, int modulus) {
  const auto orbit = mod_orbit(spec, modulus);
  ZeroLocus out;
  out.preperiod = orbit.preperiod;
  out.period = orbit.period;
  for (int i = orbit.preperiod; i < orbit.preperiod + orbit.period; ++i) {
    if (orbit.residues[i] == 0) {
      // residues[i] is the term at g = i + 1
      out.classes.push_back((i + 1) % orbit.period);
    }
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

bool invertibility_criterion(const RecurrenceSpec& spec, int p) {
  spec.validate();
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  return spec.char_poly[0] % p != 0;
}

BigInt companion_determinant(const RecurrenceSpec& spec) {
  spec.validate();
  const BigInt c0 = spec.char_poly[0];
  return (spec.degree() % 2 == 0) ? c0 : -c0;
}

}  // namespace pseudou::recurrences
