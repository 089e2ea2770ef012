#pragma once

#include <string>
#include <vector>

#include "awconn/connection.hpp"

namespace awconn {

// A q-power chain x, x q^p, x q^{p+1} in the shifted slot; all three tuples
// must be generic to depth N.
struct CocycleInstance {
  ShiftKind kind;
  ParamSet base;
  int p = 0;
  int N = 0;

  Rat slot_value() const {
    return kind == ShiftKind::a ? base.a() : base.c();
  }
  ParamSet with_slot(const Rat& v) const {
    return kind == ShiftKind::a ? base.with_a(v) : base.with_c(v);
  }
};

// T(x, x q^{p+1}) = T(x q^p, x q^{p+1}) * T(x, x q^p) as exact products of
// closed-form matrices over the truncation window.  Asserts zig-zag
// triangularity of all three factors before multiplying.
bool check_discrete_cocycle(const CocycleInstance& inst);

struct BlockIdentityResult {
  std::string identity;  // "T00", "T01", "T10", "T11", or "banded"
  int k = 0;
  int n = 0;
  int p = 0;
  bool pass = false;
};

// Evaluates the four scalar three-term identities of the block form of the
// discrete co-cycle for every admissible (k, n) with n <= N, and confirms
// the diagonal/superdiagonal banded structure of the single-q-step matrix.
std::vector<BlockIdentityResult> check_block_identities(
    const CocycleInstance& inst);

// JSON array of {"identity","k","n","p","status"} records.
std::string block_identities_json(const std::vector<BlockIdentityResult>& rs);

// Co-degree-1 additivity sigma(x,z) = sigma(y,z) + sigma(x,y) for the two
// sigma families, for arbitrary slot triples (x, y, z), n < N.
bool check_codeg1_additivity(ShiftKind kind, const ParamSet& base,
                             const Rat& x, const Rat& y, const Rat& z, int N);

// Continuous co-cycle T(x,z) = T(y,z) T(x,y) on ORACLE matrices for an
// arbitrary generic slot triple; independent of the closed forms.
bool check_continuous_cocycle_oracle(ShiftKind kind, const ParamSet& base,
                                     const Rat& x, const Rat& y, const Rat& z,
                                     int N);

}  // namespace awconn
