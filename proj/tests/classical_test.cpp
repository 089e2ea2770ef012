#include "awconn/classical.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "awconn/qpochhammer.hpp"

namespace awconn {
namespace {

Rat random_param(std::mt19937_64& rng) {
  return {1 + static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 30)};
}

// Independent Jacobi route: the terminating hypergeometric sum
//   P_n^{(a,b)}(x) = sum_s (n+a+b+1)_s (a+s+1)_{n-s} / (s! (n-s)!)
//                    ((x-1)/2)^s,
// a polynomial in (a, b) with no denominators beyond factorials.
Poly jacobi_by_sum(int n, const Rat& alpha, const Rat& beta) {
  const Poly half_xm1 = Rat(1, 2) * (Poly::x() - Poly::constant(Rat(1)));
  Poly acc;
  Poly power = Poly::constant(Rat(1));
  for (int s = 0; s <= n; ++s) {
    const Rat coeff = poch(alpha + beta + Rat(n + 1), s) *
                      poch(alpha + Rat(s + 1), n - s) /
                      (poch(Rat(1), s) * poch(Rat(1), n - s));
    acc += coeff * power;
    power = power * half_xm1;
  }
  return acc;
}

// Independent Gegenbauer route: truncated binomial expansion of the
// generating function (1 - u)^-lambda with u = 2xt - t^2; the t^n
// coefficient is C_n^lambda(x).
Poly gegenbauer_by_genfun(int n, const Rat& lambda) {
  // series[k] = coefficient of t^k, a Poly in x.
  std::vector<Poly> series(n + 1);
  series[0] = Poly::constant(Rat(1));
  std::vector<Poly> u_power(n + 1);  // u^j truncated to degree n in t
  u_power[0] = Poly::constant(Rat(1));
  // u^j has t-degree >= j; track coefficients of t^k for k <= n.
  std::vector<std::vector<Poly>> u_pow_coeffs(n + 1,
                                              std::vector<Poly>(n + 1));
  u_pow_coeffs[0][0] = Poly::constant(Rat(1));
  const Poly two_x = Rat(2) * Poly::x();
  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k) {
      Poly c;
      c += two_x * u_pow_coeffs[j - 1][k - 1];
      if (k >= 2) c -= u_pow_coeffs[j - 1][k - 2];
      u_pow_coeffs[j][k] = c;
    }
  Poly out;
  for (int j = 0; j <= n; ++j) {
    const Rat coeff = poch(lambda, j) / poch(Rat(1), j);
    out += coeff * u_pow_coeffs[j][n];
  }
  return out;
}

std::vector<Rat> solve_in_family(const Poly& source,
                                 const std::function<Poly(int)>& family,
                                 int n) {
  std::vector<Rat> coeffs(n + 1, Rat(0));
  Poly rest = source;
  for (int k = n; k >= 0; --k) {
    const Poly fk = family(k);
    const Rat c = rest.coeff(k) / fk.leading_coeff();
    coeffs[k] = c;
    rest -= c * fk;
  }
  EXPECT_TRUE(rest.is_zero());
  return coeffs;
}

TEST(Poly, Arithmetic) {
  const Poly f({Rat(1), Rat(2)});  // 1 + 2x
  const Poly g({Rat(0), Rat(0), Rat(3)});
  EXPECT_EQ((f * g).degree(), 3);
  EXPECT_EQ((f - f).degree(), -1);
  EXPECT_EQ(f.json(), "{\"0\":\"1/1\",\"1\":\"2/1\"}");
  EXPECT_EQ(g.json(), "{\"2\":\"3/1\"}");
}

TEST(Jacobi, LowDegree) {
  const Rat alpha(2, 3), beta(5, 7);
  EXPECT_EQ(jacobi_poly(0, alpha, beta), Poly::constant(Rat(1)));
  // P_1 = (alpha+beta+2)/2 x + (alpha-beta)/2, the recurrence base case.
  Poly p1({(alpha - beta) * Rat(1, 2), (alpha + beta + Rat(2)) * Rat(1, 2)});
  EXPECT_EQ(jacobi_poly(1, alpha, beta), p1);
  EXPECT_EQ(jacobi_by_sum(1, alpha, beta), p1);
}

TEST(Jacobi, RecurrenceMatchesSum) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5; ++i) {
    const Rat alpha = random_param(rng), beta = random_param(rng);
    for (int n = 0; n <= 10; ++n)
      EXPECT_EQ(jacobi_poly(n, alpha, beta), jacobi_by_sum(n, alpha, beta));
  }
}

TEST(Jacobi, DegenerateRecurrenceRejected) {
  // alpha + beta = -2 kills the n = 2 denominator 2n(n+alpha+beta)(...).
  EXPECT_THROW(jacobi_poly(2, Rat(-1), Rat(-1)), std::domain_error);
}

TEST(Gegenbauer, LowDegree) {
  const Rat lambda(3, 4);
  EXPECT_EQ(gegenbauer_poly(0, lambda), Poly::constant(Rat(1)));
  EXPECT_EQ(gegenbauer_poly(1, lambda), Poly({Rat(0), Rat(2) * lambda}));
  EXPECT_EQ(gegenbauer_by_genfun(1, lambda), Poly({Rat(0), Rat(2) * lambda}));
}

TEST(Gegenbauer, RecurrenceMatchesGeneratingFunction) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 5; ++i) {
    const Rat lambda = random_param(rng);
    for (int n = 0; n <= 10; ++n)
      EXPECT_EQ(gegenbauer_poly(n, lambda), gegenbauer_by_genfun(n, lambda));
  }
}

TEST(JacobiConnection, ExactExpansion) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5; ++i) {
    const Rat gamma = random_param(rng), alpha = random_param(rng),
              beta = random_param(rng);
    for (int n = 0; n <= 10; ++n) {
      const auto coeffs = jacobi_connection(n, gamma, alpha, beta);
      Poly sum;
      for (int k = 0; k <= n; ++k)
        sum += coeffs[k] * jacobi_poly(k, alpha, beta);
      EXPECT_EQ(sum, jacobi_poly(n, gamma, beta));
      // Brute-force linear solve in the monomial basis agrees entrywise.
      const auto solved = solve_in_family(
          jacobi_poly(n, gamma, beta),
          [&](int k) { return jacobi_poly(k, alpha, beta); }, n);
      for (int k = 0; k <= n; ++k) EXPECT_EQ(coeffs[k], solved[k]);
    }
  }
}

TEST(JacobiConnection, IdentityWhenGammaEqualsAlpha) {
  const Rat alpha(4, 5), beta(2, 9);
  for (int n = 0; n <= 10; ++n) {
    const auto coeffs = jacobi_connection(n, alpha, alpha, beta);
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(coeffs[k], k == n ? Rat(1) : Rat(0));
  }
}

TEST(GegenbauerConnection, ExactExpansionWithParity) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 5; ++i) {
    const Rat lambda = random_param(rng), nu = random_param(rng);
    for (int n = 0; n <= 10; ++n) {
      const auto coeffs = gegenbauer_connection(n, lambda, nu);
      Poly sum;
      for (size_t k = 0; k < coeffs.size(); ++k)
        sum += coeffs[k] * gegenbauer_poly(n - 2 * static_cast<int>(k), nu);
      EXPECT_EQ(sum, gegenbauer_poly(n, lambda));
      // The solve over all degrees vanishes off-parity and matches on it.
      const auto solved = solve_in_family(
          gegenbauer_poly(n, lambda),
          [&](int k) { return gegenbauer_poly(k, nu); }, n);
      for (int m = 0; m <= n; ++m) {
        if ((n - m) % 2 == 0)
          EXPECT_EQ(solved[m], coeffs[(n - m) / 2]);
        else
          EXPECT_EQ(solved[m], Rat(0));
      }
    }
  }
}

TEST(GegenbauerConnection, IdentityWhenEqual) {
  const Rat nu(7, 3);
  for (int n = 0; n <= 10; ++n) {
    const auto coeffs = gegenbauer_connection(n, nu, nu);
    for (size_t k = 0; k < coeffs.size(); ++k)
      EXPECT_EQ(coeffs[k], k == 0 ? Rat(1) : Rat(0));
  }
}

TEST(Connections, VanishingDenominatorRejected) {
  // (alpha+beta+k+1)_{n+1} hits zero for alpha+beta = -3, n = 2, k = 0.
  EXPECT_THROW(jacobi_connection(2, Rat(1), Rat(-1), Rat(-2)),
               std::domain_error);
  // (nu)_{n-k+1} hits zero for nu = -1.
  EXPECT_THROW(gegenbauer_connection(2, Rat(1), Rat(-1)), std::domain_error);
}

}  // namespace
}  // namespace awconn
