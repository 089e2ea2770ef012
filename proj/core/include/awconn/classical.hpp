#pragma once

#include <string>
#include <vector>

#include "awconn/rat.hpp"

namespace awconn {

// Dense univariate polynomial over Rat in x; coefficient vector ascending,
// no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);
  static Poly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(int k) const;
  Rat leading_coeff() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& f);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string json() const;  // {"0":"1/1","1":"3/2"}

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// Standard Jacobi polynomial P_n^{(alpha,beta)} by the three-term
// recurrence.  Throws std::domain_error when a recurrence denominator
// 2k(k+alpha+beta)(2k+alpha+beta-2) vanishes for some 2 <= k <= n.
Poly jacobi_poly(int n, const Rat& alpha, const Rat& beta);

// Standard Gegenbauer polynomial C_n^{lambda} by the three-term recurrence.
Poly gegenbauer_poly(int n, const Rat& lambda);

// Coefficients c_{k,n}, k = 0..n, of P_n^{(gamma,beta)} over the family
// {P_k^{(alpha,beta)}}.  Throws std::domain_error when a denominator
// (alpha+beta+k+1)_{n+1} or (n-k)! factor degenerates.
std::vector<Rat> jacobi_connection(int n, const Rat& gamma, const Rat& alpha,
                                   const Rat& beta);

// Coefficients of C_n^{lambda} over {C_{n-2k}^{nu}}, k = 0..floor(n/2);
// entry k multiplies the target of degree n-2k.
std::vector<Rat> gegenbauer_connection(int n, const Rat& lambda,
                                       const Rat& nu);

}  // namespace awconn
