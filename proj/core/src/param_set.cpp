#include "awconn/param_set.hpp"

namespace awconn {

ParamSet::ParamSet(Rat a, Rat b, Rat c, Rat d, Rat q)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      d_(std::move(d)),
      q_(std::move(q)) {
  if (a_.is_zero() || b_.is_zero() || c_.is_zero() || d_.is_zero())
    throw std::invalid_argument("ParamSet: a, b, c, d must be nonzero");
  if (q_.is_zero() || q_ == Rat(1) || q_ == Rat(-1))
    throw std::invalid_argument("ParamSet: q must avoid {0, 1, -1}");
}

std::string ParamSet::str() const {
  return "(a=" + a_.str() + ", b=" + b_.str() + ", c=" + c_.str() +
         ", d=" + d_.str() + ", q=" + q_.str() + ")";
}

std::string ParamSet::key() const {
  return a_.str() + "|" + b_.str() + "|" + c_.str() + "|" + d_.str() + "|" +
         q_.str();
}

std::optional<std::string> genericity_violation(const ParamSet& p, int depth) {
  if (depth < 1) throw std::invalid_argument("genericity_violation: depth >= 1");
  const Rat one(1);
  const Rat ab = p.ab(), cd = p.cd(), abcd = p.abcd();
  const long bound = 4L * depth + 4;

  // abcd q^{-1} - 1 (the k-1 scan at k = 0).
  if (abcd == p.q()) return "abcd*q^-1 - 1";

  Rat qk(1);
  for (long k = 0; k <= bound; ++k) {
    if (k >= 1 && qk == one) return "q^" + std::to_string(k) + " - 1";
    if (ab * qk == one) return "ab*q^" + std::to_string(k) + " - 1";
    if (cd * qk == one) return "cd*q^" + std::to_string(k) + " - 1";
    if (abcd * qk == one) return "abcd*q^" + std::to_string(k) + " - 1";
    qk *= p.q();
  }
  return std::nullopt;
}

void require_generic(const ParamSet& p, int depth) {
  if (auto v = genericity_violation(p, depth)) throw non_generic_error(*v);
}

}  // namespace awconn
