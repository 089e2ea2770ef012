#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace awconn {

// Arbitrary-precision rational, always in canonical form: positive
// denominator, gcd(|num|, den) = 1.  Serializes as "p/q" (e.g. "-67/209",
// "3/1").
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class v);

  // Accepts "p/q" or a bare integer "p".  Throws std::invalid_argument on
  // malformed input or zero denominator.
  static Rat parse(std::string_view s);

  std::string str() const;

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);  // throws std::domain_error on zero divisor

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  Rat inv() const;        // throws std::domain_error on zero
  Rat pow(long k) const;  // negative k requires nonzero base

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class v_;
};

inline namespace literals {
// Convenience for tests: 3_r / 4_r etc.
inline Rat operator""_r(unsigned long long n) {
  return Rat(static_cast<long>(n));
}
}  // namespace literals

}  // namespace awconn
