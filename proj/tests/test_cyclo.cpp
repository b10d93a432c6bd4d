#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pseudou/cyclo.hpp"

#include <numeric>
#include <random>

using namespace pseudou::cyclo;

TEST_CASE("ring basics") {
  auto z = [](long k) { return CyclotomicNumber::root_power(5, k); };

  CHECK((z(1) + z(4)).is_real());
  CHECK_FALSE(z(1).is_real());
  CHECK(CyclotomicNumber::root_power(12, 1) *
            CyclotomicNumber::root_power(12, 11) ==
        CyclotomicNumber::one(12));

  // product of (1 + zeta_5^k) over k = 1..4
  auto prod = CyclotomicNumber::one(5);
  for (long k = 1; k <= 4; ++k) prod *= CyclotomicNumber::one(5) + z(k);
  CHECK(prod == CyclotomicNumber::one(5));

  CHECK_THROWS_AS(CyclotomicNumber::one(5) + CyclotomicNumber::one(7),
                  order_mismatch_error);
}

TEST_CASE("equality is modulo the cyclotomic polynomial") {
  // 1 + zeta_5 + ... + zeta_5^4 = 0 although the coefficient vectors differ
  CyclotomicNumber s(5);
  for (long k = 0; k < 5; ++k) s += CyclotomicNumber::root_power(5, k);
  CHECK(s.is_zero());
  CHECK(s == CyclotomicNumber::zero(5));
}

TEST_CASE("sign_of_real") {
  CHECK(sign_of_real(CyclotomicNumber::zero(7)) == 0);

  auto cospair = [](int N, long k) {
    return CyclotomicNumber::root_power(N, k) +
           CyclotomicNumber::root_power(N, -k);
  };
  CHECK(sign_of_real(cospair(5, 1)) == 1);   // 2 cos 72
  CHECK(sign_of_real(cospair(5, 2)) == -1);  // 2 cos 144

  CHECK_THROWS_AS(sign_of_real(CyclotomicNumber::root_power(5, 1)),
                  not_real_error);
}

TEST_CASE("sign multiplicativity on random real elements") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> pick_n(3, 18);
  for (int trial = 0; trial < 200; ++trial) {
    const int N = pick_n(rng);
    auto random_real = [&] {
      CyclotomicNumber x(N);
      for (int k = 0; k <= N / 2; ++k) {
        const int c = coeff(rng);
        x += CyclotomicNumber::root_power(N, k) *
             CyclotomicNumber::integer(N, c);
        if (k != 0 && 2 * k != N)
          x += CyclotomicNumber::root_power(N, -k) *
               CyclotomicNumber::integer(N, c);
      }
      return x;
    };
    const auto x = random_real();
    const auto y = random_real();
    REQUIRE(x.is_real());
    REQUIRE(y.is_real());
    CHECK(sign_of_real(x * y) == sign_of_real(x) * sign_of_real(y));
  }
}

TEST_CASE("quantum integers") {
  const auto A5 = standard_root(5);
  CHECK(quantum_integer(1, A5) == CyclotomicNumber::one(10));
  CHECK(quantum_integer(0, A5).is_zero());

  // [2] = A^2 + A^{-2} = 2 cos(216 degrees) at A_5 = exp(6*pi*i/10)
  const auto q2 = quantum_integer(2, A5);
  CHECK(q2 == A5.power(2).as_cyclotomic() + A5.power(-2).as_cyclotomic());
  CHECK(sign_of_real(q2) == -1);

  for (int p : {5, 7, 9, 11}) {
    const auto A = standard_root(p);
    for (long n = 0; n <= p; ++n) {
      const auto qn = quantum_integer(n, A);
      CHECK(qn.is_real());
      CHECK(quantum_integer(-n, A) == -qn);
    }
  }

  CHECK_THROWS_AS(quantum_integer(2, RootOfUnity(10, 2)), std::domain_error);
}

TEST_CASE("standard_root values and primitivity") {
  const auto A7 = standard_root(7);
  CHECK(A7.order == 14);
  CHECK(A7.exponent == 3);  // exp(6*pi*i/14)
  CHECK(A7.primitive());

  const auto A5 = standard_root(5);
  CHECK(A5.order == 10);
  CHECK(A5.exponent == 3);  // exp(6*pi*i/10)

  const auto A4 = standard_root(4);
  CHECK(A4.order == 8);
  CHECK(A4.exponent == 5);  // -exp(pi*i/4)

  for (int p = 3; p <= 1000; ++p) {
    CHECK(standard_root(p).multiplicative_order() == 2 * p);
  }
}

namespace {

// Closed-form case table for the order of zeta_p^{-6 - p(p+1)/2}.
long theta_table(long p) {
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
  return p;  // p = 2s with gcd(s,6) = 1
}

}  // namespace

TEST_CASE("theta closed form") {
  CHECK(theta(5) == 5);
  CHECK(theta(9) == 3);
  CHECK(theta(24) == 4);
  for (long p = 3; p <= 1000; ++p) CHECK(theta(p) == theta_table(p));
}
