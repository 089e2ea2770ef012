#pragma once

#include "awconn/almost_symmetric.hpp"
#include "awconn/laurent.hpp"
#include "awconn/noumi.hpp"
#include "awconn/param_set.hpp"

namespace awconn {

// Eigenvalue of Yt on E_r: abcd q^{r-1} for r >= 0, q^r for r < 0.
Rat mu_tilde(ZigZagIndex r, const ParamSet& p);

// Coefficients of the zig-zag raising steps, for n >= 0:
//   E_{-(n+1)} = (a_hat U0t + b_hat) E_n
//   E_{n+1}    = (c_hat T1t + d_hat) E_{-(n+1)}
struct RaisingCoeffs {
  Rat a_hat;  // -1/(cd q^n)
  Rat b_hat;  // ((c+d) - cd q^n (a+b)) / (cd q^n (1 - abcd q^2n))
  Rat c_hat;  // -1/(ab)
  Rat d_hat;  // -((ab q^{n+1}|q)_1 + ab (cd q^n|q)_1) / (ab (1 - abcd q^{2n+1}))
};
RaisingCoeffs hat_coeffs_increasing(int n, const ParamSet& p);

// Coefficients of the zig-zag lowering steps, for n >= 0:
//   E_n        = (a_hat U0t + b_hat) E_{-(n+1)}
//   E_{-(n+1)} = (c_hat T1t + d_hat) E_{n+1}
struct LoweringCoeffs {
  Rat a_hat, b_hat, c_hat, d_hat;
};
LoweringCoeffs hat_coeffs_decreasing(int n, const ParamSet& p);

// Rescaling factors of the commutator creation operators, as eigenvalue
// differences over the hat coefficients.
Rat zeta0_plus(int n, const ParamSet& p);    // [a_hat_n]^-1 (mu_n - mu_{-(n+1)})
Rat zeta0_minus(int n, const ParamSet& p);   // [a_hat_{-(n+1)}]^-1 (mu_{-(n+1)} - mu_n)
Rat zeta1_plus(int n, const ParamSet& p);    // [c_hat_n]^-1 (mu_{-n} - mu_n), n >= 1
Rat zeta1_minus(int n, const ParamSet& p);   // [c_hat_{-(n+1)}]^-1 (mu_{n+1} - mu_{-(n+1)})

// Nonsymmetric polynomial of zig-zag degree r, zig-zag monic, eigenvector of
// Yt with eigenvalue mu_tilde(r).  Built by the raising recursion from
// E_0 = 1; results are memoized per parameter tuple (the cache behaves as a
// pure function under concurrent access).
struct NSPolyRecord {
  ZigZagIndex r;
  LaurentPoly poly;
  ParamSet params;
};
NSPolyRecord nonsymmetric_E(ZigZagIndex r, const ParamSet& p);

// Optional output renormalization factor: 1 for r >= 0,
// (1 - q^{-r})(1 - cd q^{-(r+1)}) for r < 0.  Never applied internally.
Rat psi_factor(ZigZagIndex r, const ParamSet& p);

// Closed forms for the three highest zig-zag degree coefficients of E_r in
// the almost symmetric bases.  lambda couples same-sign index pairs, mu the
// mixed ones.
Rat lambda_diag(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p);
Rat mu_codeg1(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p);   // |r| >= 1
Rat lambda_codeg2(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p);
// lambda_codeg2 throws std::invalid_argument("undefined coefficient") for
// r in {0, -1}, where no such coefficient exists.

struct LowCodegreeCoeffs {
  Rat lambda_diag_plain, lambda_diag_q;
  Rat mu_codeg1_plain, mu_codeg1_q;
  Rat lambda_codeg2_plain, lambda_codeg2_q;
};
LowCodegreeCoeffs low_codegree_coeffs(ZigZagIndex r, const ParamSet& p);

// Symmetric polynomial P_n = t1^-1 (T1t + 1) E_{-n} for n >= 1, P_0 = 1.
// Equals E_n + gamma_coeff(n) E_{-n}; invariant under z -> 1/z.
LaurentPoly hecke_symmetrize(int n, const ParamSet& p);

// gamma_n = (q^n, cd q^{n-1}|q)_1 / (abcd q^{2n-1}|q)_1, n >= 1.
// Equals c_hat_n - d_hat_n of the raising step.
Rat gamma_coeff(int n, const ParamSet& p);

// Verifies that the lowering steps with the hat_coeffs_decreasing
// coefficients invert the raising steps on the computed E polynomials, and
// that all four zeta factors match their closed forms, at index n.
bool check_raising_lowering_pair(int n, const ParamSet& p);

}  // namespace awconn
