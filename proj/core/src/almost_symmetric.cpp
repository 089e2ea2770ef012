#include "awconn/almost_symmetric.hpp"

#include <stdexcept>

namespace awconn {

namespace {

LaurentPoly pow_poly(const LaurentPoly& base, int n) {
  LaurentPoly acc = LaurentPoly::one();
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

LaurentPoly z_plus_inv(const Rat& scale) {
  LaurentPoly f = LaurentPoly::monomial(Rat(1), 1);
  f.add_term(-1, scale);
  return f;
}

}  // namespace

LaurentPoly basis_f(int n) {
  if (n < 0) throw std::invalid_argument("basis_f: n >= 0");
  return pow_poly(z_plus_inv(Rat(1)), n);
}

LaurentPoly basis_h(int n) {
  if (n < 1) throw std::invalid_argument("basis_h: n >= 1");
  return pow_poly(z_plus_inv(Rat(1)), n - 1).shifted(-1);
}

LaurentPoly basis_fq(int n, const ParamSet& p) {
  if (n < 0) throw std::invalid_argument("basis_fq: n >= 0");
  return pow_poly(z_plus_inv(p.q()), n);
}

LaurentPoly basis_hq(int n, const ParamSet& p) {
  if (n < 1) throw std::invalid_argument("basis_hq: n >= 1");
  return pow_poly(z_plus_inv(p.q()), n - 1).shifted(-1).scaled(p.q());
}

LaurentPoly basis_element(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p) {
  if (flavor == BasisFlavor::plain)
    return r.r >= 0 ? basis_f(r.r) : basis_h(-r.r);
  return r.r >= 0 ? basis_fq(r.r, p) : basis_hq(-r.r, p);
}

Rat basis_leading_unit(ZigZagIndex r, BasisFlavor flavor, const ParamSet& p) {
  if (flavor == BasisFlavor::q && r.r < 0) return p.q().pow(-r.r);
  return Rat(1);
}

std::map<ZigZagIndex, Rat> expand_in_basis(const LaurentPoly& f,
                                           BasisFlavor flavor,
                                           const ParamSet& p) {
  std::map<ZigZagIndex, Rat> out;
  LaurentPoly rest = f;
  while (!rest.is_zero()) {
    const ZigZagIndex r = rest.zz_degree();
    const Rat coeff =
        rest.coeff(r.r) / basis_leading_unit(r, flavor, p);
    out.emplace(r, coeff);
    rest -= coeff * basis_element(r, flavor, p);
  }
  return out;
}

LaurentPoly reconstruct_from_basis(const std::map<ZigZagIndex, Rat>& coeffs,
                                   BasisFlavor flavor, const ParamSet& p) {
  LaurentPoly out;
  for (const auto& [r, c] : coeffs) out += c * basis_element(r, flavor, p);
  return out;
}

std::array<BasisCongruence, 4> basis_convert_low_codegree(const ParamSet& p,
                                                          int n) {
  if (n < 1)
    throw std::invalid_argument("basis_convert_low_codegree: n >= 1");
  const Rat qn = p.q().pow(n);
  std::array<BasisCongruence, 4> out;

  // f_n = f_{n,q} + (q^-n - 1) h_{n,q}  mod R_{-(n-1)}
  out[0] = {zz(n),
            BasisFlavor::plain,
            {{zz(n), Rat(1)}, {zz(-n), qn.inv() - Rat(1)}},
            BasisFlavor::q,
            zz(-(n - 1))};
  // h_n = q^-n h_{n,q}  mod R_{-(n-1)}
  out[1] = {zz(-n),
            BasisFlavor::plain,
            {{zz(-n), qn.inv()}},
            BasisFlavor::q,
            zz(-(n - 1))};
  // h_{n,q} = q^n h_n  mod R_{n-2}
  out[2] = {zz(-n),
            BasisFlavor::q,
            {{zz(-n), qn}},
            BasisFlavor::plain,
            zz(n - 2)};
  // f_{n,q} = f_n + (q^n - 1) h_n  mod R_{n-1}
  out[3] = {zz(n),
            BasisFlavor::q,
            {{zz(n), Rat(1)}, {zz(-n), qn - Rat(1)}},
            BasisFlavor::plain,
            zz(n - 1)};
  return out;
}

LaurentPoly truncate_beyond(const LaurentPoly& f, ZigZagIndex m) {
  LaurentPoly out;
  for (const auto& [e, c] : f.terms())
    if (zz(e) > m) out.add_term(e, c);
  return out;
}

}  // namespace awconn
