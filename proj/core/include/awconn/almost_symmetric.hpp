#pragma once

#include <array>
#include <map>

#include "awconn/laurent.hpp"
#include "awconn/param_set.hpp"

namespace awconn {

enum class BasisFlavor { plain, q };

// f_n = (z + z^-1)^n, n >= 0.
LaurentPoly basis_f(int n);
// h_n = z^-1 (z + z^-1)^{n-1}, n >= 1.
LaurentPoly basis_h(int n);
// f_{n,q} = (z + q z^-1)^n, n >= 0.
LaurentPoly basis_fq(int n, const ParamSet& p);
// h_{n,q} = q z^-1 (z + q z^-1)^{n-1}, n >= 1.
LaurentPoly basis_hq(int n, const ParamSet& p);

// Basis element of zig-zag index r: f_r for r >= 0, h_{-r} for r < 0.
LaurentPoly basis_element(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p);

// Coefficient of z^r in the index-r basis element (1 except for the q-flavor
// h family, which carries q^{-r}).
Rat basis_leading_unit(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p);

// Coefficients of f in the ordered basis {f_0, h_1, f_1, h_2, ...} or its
// q-analog, by back-substitution in zig-zag-descending order.  Reconstruction
// from the coefficients reproduces f exactly.
std::map<ZigZagIndex, Rat> expand_in_basis(const LaurentPoly& f,
                                           BasisFlavor flavor,
                                           const ParamSet& p);

LaurentPoly reconstruct_from_basis(const std::map<ZigZagIndex, Rat>& coeffs,
                                   BasisFlavor flavor, const ParamSet& p);

// One congruence lhs = sum_j rhs[j] * basis(j, rhs_flavor) mod R_modulus,
// where R_m is the span of indices <= m in the zig-zag order.
struct BasisCongruence {
  ZigZagIndex lhs;
  BasisFlavor lhs_flavor;
  std::map<ZigZagIndex, Rat> rhs;
  BasisFlavor rhs_flavor;
  ZigZagIndex modulus;
};

// The four low-codegree conversions between the plain and q bases, n >= 1:
//   f_n     = f_{n,q} + (q^-n - 1) h_{n,q}   mod R_{-(n-1)}
//   h_n     = q^-n h_{n,q}                   mod R_{-(n-1)}
//   h_{n,q} = q^n h_n                        mod R_{n-2}
//   f_{n,q} = f_n + (q^n - 1) h_n            mod R_{n-1}
std::array<BasisCongruence, 4> basis_convert_low_codegree(const ParamSet& p,
                                                          int n);

// Truncate away every term of zig-zag degree <= m.
LaurentPoly truncate_beyond(const LaurentPoly& f, ZigZagIndex m);

}  // namespace awconn
