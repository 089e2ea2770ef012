#include "awconn/aw_polys.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "awconn/qpochhammer.hpp"

namespace awconn {

Rat mu_tilde(ZigZagIndex r, const ParamSet& p) {
  if (r.r >= 0) return p.abcd() * p.q().pow(r.r - 1);
  return p.q().pow(r.r);
}

RaisingCoeffs hat_coeffs_increasing(int n, const ParamSet& p) {
  if (n < 0) throw std::invalid_argument("hat_coeffs_increasing: n >= 0");
  const Rat q = p.q();
  const Rat ab = p.ab(), cd = p.cd(), abcd = p.abcd();
  const Rat cdqn = cd * q.pow(n);
  const Rat even = qp1(abcd * q.pow(2 * n));      // (abcd q^2n | q)_1
  const Rat odd = qp1(abcd * q.pow(2 * n + 1));   // (abcd q^2n+1 | q)_1
  if (even.is_zero())
    throw non_generic_error("abcd*q^" + std::to_string(2 * n) + " - 1");
  if (odd.is_zero())
    throw non_generic_error("abcd*q^" + std::to_string(2 * n + 1) + " - 1");
  RaisingCoeffs out;
  out.a_hat = -cdqn.inv();
  out.b_hat = ((p.c() + p.d()) - cdqn * (p.a() + p.b())) / (cdqn * even);
  out.c_hat = -ab.inv();
  out.d_hat = -(qp1(ab * q.pow(n + 1)) + ab * qp1(cd * q.pow(n))) / (ab * odd);
  return out;
}

LoweringCoeffs hat_coeffs_decreasing(int n, const ParamSet& p) {
  if (n < 0) throw std::invalid_argument("hat_coeffs_decreasing: n >= 0");
  const Rat q = p.q();
  const Rat ab = p.ab(), cd = p.cd(), abcd = p.abcd();
  const Rat qn = q.pow(n);
  const Rat pair_prod = qpoch(
      {p.a() * p.c() * qn, p.b() * p.c() * qn, p.a() * p.d() * qn,
       p.b() * p.d() * qn},
      q, 1);
  const Rat neg_denom =
      qpoch({q * qn, ab * q * qn, cd * qn, abcd * qn}, q, 1);
  const Rat even = qp1(abcd * qn * qn);
  const Rat odd = qp1(abcd * qn * qn * q);
  if (pair_prod.is_zero())
    throw non_generic_error("(ac,bc,ad,bd)*q^" + std::to_string(n) + " - 1");
  if (neg_denom.is_zero())
    throw non_generic_error("(q,ab*q,cd,abcd)*q^" + std::to_string(n) + " - 1");
  LoweringCoeffs out;
  out.a_hat = qn * even * even / pair_prod;
  out.b_hat =
      cd * qn * qn * even * (ab * (p.c() + p.d()) * qn - (p.a() + p.b())) /
      pair_prod;
  out.c_hat = odd * odd / neg_denom;
  out.d_hat = ab * qn * odd * (q * qp1(abcd * qn) + cd * qp1(q * qn)) /
              neg_denom;
  return out;
}

Rat zeta0_plus(int n, const ParamSet& p) {
  return (mu_tilde(zz(n), p) - mu_tilde(zz(-(n + 1)), p)) /
         hat_coeffs_decreasing(n, p).a_hat;
}

Rat zeta0_minus(int n, const ParamSet& p) {
  return (mu_tilde(zz(-(n + 1)), p) - mu_tilde(zz(n), p)) /
         hat_coeffs_increasing(n, p).a_hat;
}

Rat zeta1_plus(int n, const ParamSet& p) {
  if (n < 1) throw std::invalid_argument("zeta1_plus: n >= 1");
  return (mu_tilde(zz(-n), p) - mu_tilde(zz(n), p)) /
         hat_coeffs_increasing(n - 1, p).c_hat;
}

Rat zeta1_minus(int n, const ParamSet& p) {
  return (mu_tilde(zz(n + 1), p) - mu_tilde(zz(-(n + 1)), p)) /
         hat_coeffs_decreasing(n, p).c_hat;
}

namespace {

// Memoized E polynomials per parameter tuple, indexed by zig-zag position.
// Concurrent callers may duplicate work but observe identical values.
class ECache {
 public:
  LaurentPoly get(ZigZagIndex r, const ParamSet& p) {
    const long pos = r.position();
    std::lock_guard<std::mutex> lock(mu_);
    auto& entry = by_params_[p.key()];
    while (static_cast<long>(entry.size()) <= pos) extend(entry, p);
    return entry[pos];
  }

 private:
  static void extend(std::vector<LaurentPoly>& e, const ParamSet& p) {
    const long pos = static_cast<long>(e.size());
    if (pos == 0) {
      e.push_back(LaurentPoly::one());
      return;
    }
    // Positions 2n+1 and 2n+2 hold E_{-(n+1)} and E_{n+1}.
    const int n = static_cast<int>((pos - 1) / 2);
    const RaisingCoeffs hc = hat_coeffs_increasing(n, p);
    const LaurentPoly& prev = e.back();
    LaurentPoly next;
    if (pos % 2 == 1) {
      next = hc.a_hat * apply(OperatorTag::U0t, prev, p) +
             hc.b_hat * prev;
    } else {
      next = hc.c_hat * apply(OperatorTag::T1t, prev, p) +
             hc.d_hat * prev;
    }
    const ZigZagIndex r = zz_at_position(pos);
    if (next.zz_degree() != r || !next.zz_leading_coeff().is_one())
      throw std::logic_error("nonsymmetric_E: recursion lost monicity at r=" +
                             std::to_string(r.r));
    e.push_back(std::move(next));
  }

  std::mutex mu_;
  std::map<std::string, std::vector<LaurentPoly>> by_params_;
};

ECache& e_cache() {
  static ECache cache;
  return cache;
}

}  // namespace

NSPolyRecord nonsymmetric_E(ZigZagIndex r, const ParamSet& p) {
  return {r, e_cache().get(r, p), p};
}

Rat psi_factor(ZigZagIndex r, const ParamSet& p) {
  if (r.r >= 0) return Rat(1);
  return qp1(p.q().pow(-r.r)) * qp1(p.cd() * p.q().pow(-(r.r + 1)));
}

Rat lambda_diag(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p) {
  if (r.r >= 0 || flavor == BasisFlavor::plain) return Rat(1);
  return p.q().pow(r.r);  // q^{-(n+1)} at r = -(n+1)
}

Rat mu_codeg1(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p) {
  const Rat q = p.q();
  const Rat ab = p.ab(), cd = p.cd(), abcd = p.abcd();
  if (r.r <= -1) {
    // Coefficient of f_n in E_{-(n+1)}, identical in both flavors.
    const int n = -r.r - 1;
    return (ab * q.pow(n) * (p.c() + p.d()) - (p.a() + p.b())) /
           qp1(abcd * q.pow(2 * n));
  }
  if (r.r >= 1) {
    // Coefficient of h_n in E_n.
    const int n = r.r - 1;  // closed forms are indexed by n with r = n+1
    if (flavor == BasisFlavor::plain)
      return -qpoch({q.pow(n + 1), cd * q.pow(n)}, q, 1) /
             qp1(abcd * q.pow(2 * n + 1));
    return cd * qpoch({q.pow(n + 1), ab * q.pow(n + 1)}, q, 1) /
           (q * qp1(abcd * q.pow(2 * n + 1)));
  }
  throw std::invalid_argument("mu_codeg1: |r| >= 1 required");
}

Rat lambda_codeg2(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p) {
  if (r.r == 0 || r.r == -1)
    throw std::invalid_argument("undefined coefficient");
  const Rat q = p.q();
  const Rat ab = p.ab(), cd = p.cd(), abcd = p.abcd();
  const Rat apb = p.a() + p.b(), cpd = p.c() + p.d();
  if (r.r >= 1) {
    // lambda_{n-1,n}, same in both flavors.
    const int n = r.r;
    return -(cpd * qpoch({q.pow(n), ab * q.pow(n)}, q, 1) +
             q * apb * qpoch({q.pow(n), cd * q.pow(n - 1)}, q, 1)) /
           qpoch({q, abcd * q.pow(2 * n - 1)}, q, 1);
  }
  const int n = -r.r - 1;  // r = -(n+1), n >= 1: lambda_{-n,-(n+1)}
  if (flavor == BasisFlavor::q)
    return -(cpd * qpoch({q.pow(n), ab * q.pow(n)}, q, 1) +
             apb * qpoch({q.pow(n), cd * q.pow(n)}, q, 1)) /
           (q.pow(n) * qpoch({q, abcd * q.pow(2 * n)}, q, 1));
  return -(cpd * qpoch({q.pow(n), ab * q.pow(n + 1)}, q, 1) +
           q * apb * qpoch({q.pow(n), cd * q.pow(n - 1)}, q, 1)) /
         qpoch({q, abcd * q.pow(2 * n)}, q, 1);
}

LowCodegreeCoeffs low_codegree_coeffs(ZigZagIndex r, const ParamSet& p) {
  if (r.r == 0)
    throw std::invalid_argument("low_codegree_coeffs: |r| >= 1 required");
  return {lambda_diag(r, BasisFlavor::plain, p),
          lambda_diag(r, BasisFlavor::q, p),
          mu_codeg1(r, BasisFlavor::plain, p),
          mu_codeg1(r, BasisFlavor::q, p),
          lambda_codeg2(r, BasisFlavor::plain, p),
          lambda_codeg2(r, BasisFlavor::q, p)};
}

LaurentPoly hecke_symmetrize(int n, const ParamSet& p) {
  if (n < 0) throw std::invalid_argument("hecke_symmetrize: n >= 0");
  if (n == 0) return LaurentPoly::one();
  const LaurentPoly e_minus = nonsymmetric_E(zz(-n), p).poly;
  return p.t1().inv() *
         (apply(OperatorTag::T1t, e_minus, p) + e_minus);
}

Rat gamma_coeff(int n, const ParamSet& p) {
  if (n < 1) throw std::invalid_argument("gamma_coeff: n >= 1");
  const Rat q = p.q();
  return qpoch({q.pow(n), p.cd() * q.pow(n - 1)}, q, 1) /
         qp1(p.abcd() * q.pow(2 * n - 1));
}

bool check_raising_lowering_pair(int n, const ParamSet& p) {
  const LaurentPoly e_n = nonsymmetric_E(zz(n), p).poly;
  const LaurentPoly e_neg = nonsymmetric_E(zz(-(n + 1)), p).poly;
  const LaurentPoly e_up = nonsymmetric_E(zz(n + 1), p).poly;
  const LoweringCoeffs lc = hat_coeffs_decreasing(n, p);

  if (lc.a_hat * apply(OperatorTag::U0t, e_neg, p) + lc.b_hat * e_neg != e_n)
    return false;
  if (lc.c_hat * apply(OperatorTag::T1t, e_up, p) + lc.d_hat * e_up != e_neg)
    return false;

  const Rat q = p.q();
  const Rat ab = p.ab(), cd = p.cd(), abcd = p.abcd();
  const Rat qn = q.pow(n);
  const Rat pair_prod = qpoch(
      {p.a() * p.c() * qn, p.b() * p.c() * qn, p.a() * p.d() * qn,
       p.b() * p.d() * qn},
      q, 1);
  if (zeta0_plus(n, p) !=
      -pair_prod / (q.pow(2 * n + 1) * qp1(abcd * q.pow(2 * n))))
    return false;
  if (zeta0_minus(n, p) != -cd / q * qp1(abcd * q.pow(2 * n))) return false;
  if (n >= 1 &&
      zeta1_plus(n, p) != -ab * qn.inv() * qp1(abcd * q.pow(2 * n - 1)))
    return false;
  const Rat neg_prod =
      qpoch({q * qn, ab * q * qn, cd * qn, abcd * qn}, q, 1);
  if (zeta1_minus(n, p) !=
      -neg_prod / (q.pow(n + 1) * qp1(abcd * q.pow(2 * n + 1))))
    return false;
  return true;
}

}  // namespace awconn
