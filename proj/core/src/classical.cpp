#include "awconn/classical.hpp"

#include <sstream>
#include <stdexcept>

#include "awconn/qpochhammer.hpp"

namespace awconn {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::x() { return Poly({Rat(0), Rat(1)}); }

Rat Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return coeffs_[k];
}

Rat Poly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly operator*(const Rat& s, const Poly& f) {
  std::vector<Rat> out;
  out.reserve(f.coeffs_.size());
  for (const Rat& c : f.coeffs_) out.push_back(s * c);
  return Poly(std::move(out));
}

std::string Poly::json() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << ',';
    first = false;
    os << '"' << k << "\":\"" << coeffs_[k].str() << '"';
  }
  os << '}';
  return os.str();
}

Poly jacobi_poly(int n, const Rat& alpha, const Rat& beta) {
  if (n < 0) throw std::invalid_argument("jacobi_poly: n >= 0");
  Poly p_prev = Poly::constant(Rat(1));
  if (n == 0) return p_prev;
  const Rat half(1, 2);
  Poly p_cur =
      Poly({(alpha - beta) * half, (alpha + beta + Rat(2)) * half});
  for (int k = 2; k <= n; ++k) {
    const Rat rk(k);
    const Rat s = alpha + beta;  // 2k(k+s)(2k+s-2) x [linear] - 2(...)(...)
    const Rat denom = Rat(2) * rk * (rk + s) * (Rat(2) * rk + s - Rat(2));
    if (denom.is_zero())
      throw std::domain_error("jacobi_poly: vanishing recurrence denominator");
    const Rat lin_x = (Rat(2) * rk + s - Rat(1)) * (Rat(2) * rk + s) *
                      (Rat(2) * rk + s - Rat(2));
    const Rat lin_c =
        (Rat(2) * rk + s - Rat(1)) * (alpha * alpha - beta * beta);
    const Rat drop = Rat(2) * (rk + alpha - Rat(1)) * (rk + beta - Rat(1)) *
                     (Rat(2) * rk + s);
    Poly next = Poly({lin_c, lin_x}) * p_cur - drop * p_prev;
    next = denom.inv() * next;
    p_prev = std::move(p_cur);
    p_cur = std::move(next);
  }
  return p_cur;
}

Poly gegenbauer_poly(int n, const Rat& lambda) {
  if (n < 0) throw std::invalid_argument("gegenbauer_poly: n >= 0");
  Poly p_prev = Poly::constant(Rat(1));
  if (n == 0) return p_prev;
  Poly p_cur = Poly({Rat(0), Rat(2) * lambda});
  for (int k = 2; k <= n; ++k) {
    const Rat rk(k);
    Poly next = Poly({Rat(0), Rat(2) * (rk + lambda - Rat(1))}) * p_cur -
                (rk + Rat(2) * lambda - Rat(2)) * p_prev;
    next = rk.inv() * next;
    p_prev = std::move(p_cur);
    p_cur = std::move(next);
  }
  return p_cur;
}

std::vector<Rat> jacobi_connection(int n, const Rat& gamma, const Rat& alpha,
                                   const Rat& beta) {
  if (n < 0) throw std::invalid_argument("jacobi_connection: n >= 0");
  std::vector<Rat> out;
  out.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Rat denom =
        poch(alpha + beta + Rat(k + 1), n + 1) * poch(Rat(1), n - k);
    if (denom.is_zero())
      throw std::domain_error("jacobi_connection: vanishing denominator");
    const Rat num = poch(beta + Rat(k + 1), n - k) * poch(gamma - alpha, n - k) *
                    poch(beta + gamma + Rat(n + 1), k) *
                    (Rat(2 * k) + alpha + beta + Rat(1));
    out.push_back(num / denom);
  }
  return out;
}

std::vector<Rat> gegenbauer_connection(int n, const Rat& lambda,
                                       const Rat& nu) {
  if (n < 0) throw std::invalid_argument("gegenbauer_connection: n >= 0");
  std::vector<Rat> out;
  out.reserve(n / 2 + 1);
  for (int k = 0; k <= n / 2; ++k) {
    const Rat denom = poch(nu, n - k + 1) * poch(Rat(1), k);
    if (denom.is_zero())
      throw std::domain_error("gegenbauer_connection: vanishing denominator");
    const Rat num = poch(lambda - nu, k) * poch(lambda, n - k) *
                    (Rat(n - 2 * k) + nu);
    out.push_back(num / denom);
  }
  return out;
}

}  // namespace awconn
