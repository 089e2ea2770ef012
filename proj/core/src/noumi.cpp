#include "awconn/noumi.hpp"

#include <stdexcept>

namespace awconn {

namespace {

const Rat kHalf(1, 2);

// Exact division by z^2 - alpha, top exponent first.
LaurentPoly divide_z2_minus(const LaurentPoly& g, const Rat& alpha) {
  LaurentPoly out;
  if (g.is_zero()) return out;
  // Exact quotients live in [min_exp, max_exp-2]; a peel below that floor
  // means a nonzero remainder.
  const int floor_exp = g.min_exp();
  LaurentPoly rest = g;
  while (!rest.is_zero()) {
    const int e = rest.max_exp();
    if (e < floor_exp + 2) throw std::logic_error("skew part not divisible");
    const Rat kappa = rest.coeff(e);
    out.add_term(e - 2, kappa);
    rest.add_term(e, -kappa);
    rest.add_term(e - 2, kappa * alpha);
  }
  return out;
}

}  // namespace

LaurentPoly involution_s1(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(-e, c);
  return out;
}

LaurentPoly involution_s0(const LaurentPoly& f, const ParamSet& p) {
  LaurentPoly out;
  for (const auto& [e, c] : f.terms())
    out.add_term(-e, c * p.q().pow(e));
  return out;
}

LaurentPoly skew_part(const LaurentPoly& f, BasisFlavor flavor,
                      const ParamSet& p) {
  const LaurentPoly reflected =
      flavor == BasisFlavor::plain ? involution_s1(f) : involution_s0(f, p);
  return kHalf * (f - reflected);
}

LaurentPoly skew_reduced(const LaurentPoly& f, BasisFlavor flavor,
                         const ParamSet& p) {
  const Rat alpha = flavor == BasisFlavor::plain ? Rat(1) : p.q();
  return divide_z2_minus(skew_part(f, flavor, p), alpha);
}

namespace {

LaurentPoly apply_t1(const LaurentPoly& f, const ParamSet& p) {
  // (1-az)(1-bz) = 1 - (a+b)z + ab z^2
  LaurentPoly factor = LaurentPoly::one();
  factor.add_term(1, -(p.a() + p.b()));
  factor.add_term(2, p.ab());
  return p.t1() * f + Rat(2) * factor * skew_reduced(f, BasisFlavor::plain, p);
}

LaurentPoly apply_t0(const LaurentPoly& f, const ParamSet& p) {
  // (z-c)(z-d) = z^2 - (c+d)z + cd
  LaurentPoly factor = LaurentPoly::monomial(Rat(1), 2);
  factor.add_term(1, -(p.c() + p.d()));
  factor.add_term(0, p.cd());
  return p.t0() * f - Rat(2) * factor * skew_reduced(f, BasisFlavor::q, p);
}

LaurentPoly apply_u0(const LaurentPoly& f, const ParamSet& p) {
  // ((c+d)z - cd)/z and (z-c)(z-d)/z are both Laurent.
  LaurentPoly lin = LaurentPoly::constant(p.c() + p.d());
  lin.add_term(-1, -p.cd());
  LaurentPoly factor = LaurentPoly::monomial(Rat(1), 1);
  factor.add_term(0, -(p.c() + p.d()));
  factor.add_term(-1, p.cd());
  return lin * f -
         (Rat(2) * p.q()) * factor * skew_reduced(f, BasisFlavor::q, p);
}

}  // namespace

LaurentPoly apply(OperatorTag op, const LaurentPoly& f, const ParamSet& p) {
  switch (op) {
    case OperatorTag::T0t:
      return apply_t0(f, p);
    case OperatorTag::T1t:
      return apply_t1(f, p);
    case OperatorTag::U0t:
      return apply_u0(f, p);
    case OperatorTag::Yt:
      return apply_t1(apply_t0(f, p), p);
    case OperatorTag::X:
      return f.shifted(1);
  }
  throw std::logic_error("apply: bad operator tag");
}

bool check_quadratic(OperatorTag op, const ParamSet& p, int test_degree) {
  if (op != OperatorTag::T0t && op != OperatorTag::T1t)
    throw std::invalid_argument("check_quadratic: expects T0t or T1t");
  const Rat t = op == OperatorTag::T0t ? p.t0() : p.t1();
  for (int k = -test_degree; k <= test_degree; ++k) {
    const LaurentPoly f = LaurentPoly::monomial(Rat(1), k);
    const LaurentPoly g = apply(op, f, p);
    const LaurentPoly res = apply(op, g, p) + g - t * g - t * f;
    if (!res.is_zero()) return false;
  }
  return true;
}

}  // namespace awconn
