#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "awconn/rat.hpp"

namespace awconn {

// Specialized parameter tuple (a, b, c, d, q) with the derived Hecke scalars
// t0 = -cd/q and t1 = -ab.  Construction rejects the outright degenerate
// values q in {0, 1, -1} and any zero among a, b, c, d; the finer
// non-vanishing conditions needed by the recursion formulas are checked by
// genericity_violation below.
class ParamSet {
 public:
  ParamSet(Rat a, Rat b, Rat c, Rat d, Rat q);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }
  const Rat& q() const { return q_; }

  Rat t0() const { return -(c_ * d_) / q_; }
  Rat t1() const { return -(a_ * b_); }
  Rat ab() const { return a_ * b_; }
  Rat cd() const { return c_ * d_; }
  Rat abcd() const { return a_ * b_ * c_ * d_; }

  ParamSet with_a(const Rat& e) const { return {e, b_, c_, d_, q_}; }
  ParamSet with_c(const Rat& g) const { return {a_, b_, g, d_, q_}; }

  std::string str() const;  // "(a=.., b=.., c=.., d=.., q=..)"
  std::string key() const;  // compact form usable as a cache key

  friend bool operator==(const ParamSet& x, const ParamSet& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_ &&
           x.q_ == y.q_;
  }

 private:
  Rat a_, b_, c_, d_, q_;
};

// Thrown when a formula denominator factor vanishes for the given tuple.
struct non_generic_error : std::domain_error {
  explicit non_generic_error(const std::string& factor)
      : std::domain_error("non-generic parameters: vanishing factor " + factor),
        vanishing_factor(factor) {}
  std::string vanishing_factor;
};

// Scans every denominator factor the closed forms and the recursion touch up
// to zig-zag degree `depth`: q^k - 1 (k >= 1), ab q^k - 1, cd q^k - 1,
// abcd q^k - 1 for 0 <= k <= 4*depth+4, and abcd q^{k-1} - 1 (so abcd q^j - 1
// down to j = -1).  Returns the first vanishing factor, or nullopt when the
// tuple is generic.
std::optional<std::string> genericity_violation(const ParamSet& p, int depth);

inline bool is_generic(const ParamSet& p, int depth) {
  return !genericity_violation(p, depth).has_value();
}

// Throws non_generic_error naming the factor if the tuple is not generic.
void require_generic(const ParamSet& p, int depth);

}  // namespace awconn
