#pragma once

#include "awconn/almost_symmetric.hpp"
#include "awconn/laurent.hpp"
#include "awconn/param_set.hpp"

namespace awconn {

// Difference-reflection operators acting on Laurent polynomials for a fixed
// parameter tuple.  All are linear maps LaurentPoly -> LaurentPoly:
//   T1t: f -> -ab f + 2 (1-az)(1-bz) f_skew_rdcd
//   U0t: f -> ((c+d)z - cd)/z f - 2q (z-c)(z-d)/z f_q_skew_rdcd
//   T0t: f -> t0 f - 2 (z-c)(z-d) f_q_skew_rdcd
//   Yt = T1t . T0t,  X = multiplication by z.
enum class OperatorTag { T0t, T1t, U0t, Yt, X };

// s1: z^k -> z^-k.
LaurentPoly involution_s1(const LaurentPoly& f);
// s0: z^k -> q^k z^-k.
LaurentPoly involution_s0(const LaurentPoly& f, const ParamSet& p);

// Skew part (1 - s)/2 for s = s1 (plain) or s0 (q flavor).
LaurentPoly skew_part(const LaurentPoly& f, BasisFlavor flavor,
                      const ParamSet& p);

// The skew part divided exactly by z^2-1 (plain) or z^2-q (q flavor).
// The division is always exact; an inexact division indicates an internal
// bug and throws std::logic_error("skew part not divisible").
LaurentPoly skew_reduced(const LaurentPoly& f, BasisFlavor flavor,
                         const ParamSet& p);

LaurentPoly apply(OperatorTag op, const LaurentPoly& f, const ParamSet& p);

// True iff (op + 1)(op - t_i) annihilates every monomial z^k, |k| <= degree
// (t0 for T0t, t1 for T1t).
bool check_quadratic(OperatorTag op, const ParamSet& p, int test_degree);

}  // namespace awconn
