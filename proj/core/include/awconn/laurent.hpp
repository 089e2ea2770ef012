#pragma once

#include <compare>
#include <map>
#include <string>

#include "awconn/rat.hpp"

namespace awconn {

// Integer exponent index under the total order 0 < -1 < 1 < -2 < 2 < ...
// position() is the order isomorphism onto the nonnegative integers.
struct ZigZagIndex {
  int r = 0;

  constexpr long position() const { return r >= 0 ? 2L * r : -2L * r - 1; }

  ZigZagIndex pred() const;  // predecessor in the order; throws at 0
  ZigZagIndex succ() const;

  friend constexpr bool operator==(ZigZagIndex x, ZigZagIndex y) {
    return x.r == y.r;
  }
  friend constexpr std::strong_ordering operator<=>(ZigZagIndex x,
                                                    ZigZagIndex y) {
    return x.position() <=> y.position();
  }
};

inline std::strong_ordering zz_compare(ZigZagIndex x, ZigZagIndex y) {
  return x <=> y;
}
inline constexpr ZigZagIndex zz(int r) { return ZigZagIndex{r}; }

// Index at a given position: 0, -1, 1, -2, 2, ...
ZigZagIndex zz_at_position(long pos);

// Sparse Laurent polynomial in z over Rat.  No stored coefficient is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const Rat& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Rat& coeff, int exp);
  static LaurentPoly one() { return constant(Rat(1)); }

  bool is_zero() const { return terms_.empty(); }
  Rat coeff(int exp) const;
  const std::map<int, Rat>& terms() const { return terms_; }
  int min_exp() const;  // ordinary exponent bounds; throw on zero polynomial
  int max_exp() const;

  // The zig-zag-maximal exponent with nonzero coefficient.
  // Throws std::domain_error("degree of zero polynomial") on 0.
  ZigZagIndex zz_degree() const;
  Rat zz_leading_coeff() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rat& s, const LaurentPoly& f);

  LaurentPoly scaled(const Rat& s) const;
  LaurentPoly shifted(int k) const;  // multiply by z^k
  void add_term(int exp, const Rat& coeff);

  // JSON object mapping decimal exponent strings to Rat strings, keys in
  // ascending exponent order, e.g. {"-1":"1/1","0":"-67/209"}.
  std::string json() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<int, Rat> terms_;
};

}  // namespace awconn
