#include "awconn/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace awconn {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view s) {
  const auto slash = s.find('/');
  const std::string num_s(s.substr(0, slash));
  const std::string den_s =
      slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
  mpz_class num, den;
  if (num_s.empty() || num.set_str(num_s, 10) != 0)
    throw std::invalid_argument("Rat: bad numerator in '" + std::string(s) + "'");
  if (den_s.empty() || den.set_str(den_s, 10) != 0)
    throw std::invalid_argument("Rat: bad denominator in '" + std::string(s) + "'");
  if (sgn(den) == 0)
    throw std::invalid_argument("Rat: zero denominator in '" + std::string(s) + "'");
  return Rat(num, den);
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  Rat r;
  r.v_ = 1 / v_;
  return r;
}

Rat Rat::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Rat base = *this, acc = Rat(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace awconn
