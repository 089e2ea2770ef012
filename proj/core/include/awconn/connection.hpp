#pragma once

#include <string>
#include <vector>

#include "awconn/aw_polys.hpp"
#include "awconn/laurent.hpp"
#include "awconn/param_set.hpp"

namespace awconn {

enum class ShiftKind { a, c };

// A single-parameter shift: replace a by target_value (ShiftKind::a) or c by
// target_value (ShiftKind::c).
struct ShiftSpec {
  ShiftKind kind;
  ParamSet source;
  Rat target_value;

  ParamSet target() const {
    return kind == ShiftKind::a ? source.with_a(target_value)
                                : source.with_c(target_value);
  }
};

// Symmetric connection coefficient c_{m,n}: c_{m,n}(a,e;b,c,d) for shift-a,
// c_{m,n}(c,g;a,b,d) for shift-c.  Requires m <= n.
Rat sym_conn_coeff(int m, int n, const ShiftSpec& spec);

// Nonsymmetric correction factor d_{r,s} (shift-a) or its shift-c analog,
// four cases by the signs of r and s.  Requires r <= s in zig-zag order.
Rat nonsym_d(ZigZagIndex r, ZigZagIndex s, const ShiftSpec& spec);

// Transition matrix entry in product form: tau for same-sign (r,s), sigma for
// mixed signs.  Equals nonsym_d(r,s) * sym_conn_coeff(|r|,|s|).
Rat tau_sigma_closed(ZigZagIndex r, ZigZagIndex s, const ShiftSpec& spec);

// gamma_coeff of the shifted family evaluated with shift-appropriate slots:
// for shift-a the pair (c,d) is unchanged; for shift-c the target gamma uses
// (g,d).  Convenience for the symmetric re-proof identities.
Rat gamma_source(int n, const ShiftSpec& spec);
Rat gamma_target(int n, const ShiftSpec& spec);

// Truncated change-of-basis matrix over the window |row|,|col| <= N with
// rows/columns ordered E_0,...,E_N, E_{-1},...,E_{-N}.  Strictly zig-zag
// upper-triangular with unit diagonal.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(int truncation);
  static TransitionMatrix identity(int truncation);

  int truncation() const { return n_; }
  int dim() const { return 2 * n_ + 1; }

  const Rat& entry(ZigZagIndex row, ZigZagIndex col) const;
  void set_entry(ZigZagIndex row, ZigZagIndex col, Rat value);
  const Rat& at(int i, int j) const { return cells_[i * dim() + j]; }

  // Basis order E_0..E_N, E_{-1}..E_{-N}; index_of is its inverse.
  static std::vector<ZigZagIndex> basis_order(int truncation);
  int index_of(ZigZagIndex r) const;

  bool is_zz_upper_triangular() const;
  bool has_unit_diagonal() const;

  friend TransitionMatrix operator*(const TransitionMatrix& lhs,
                                    const TransitionMatrix& rhs);
  friend bool operator==(const TransitionMatrix& x, const TransitionMatrix& y);

  // Number of differing cells; 0 means identical.
  long mismatches(const TransitionMatrix& other) const;

  std::string csv() const;   // header of column labels, then Rat cells
  std::string json() const;  // {"N":..,"entries":{"r,s":"p/q",...}}

 private:
  int n_;
  std::vector<Rat> cells_;
};

// Matrix of tau_sigma_closed entries.  Checks genericity of source and
// target tuples to depth N and throws non_generic_error otherwise.
TransitionMatrix transition_matrix_closed(const ShiftSpec& spec, int N);

// Independent brute-force transition matrix: builds every E_s(source) and
// E_r(target) and solves for the coefficients by back-substitution against
// the zig-zag monic target family.
TransitionMatrix transition_matrix_oracle(const ShiftSpec& spec, int N);

// (i)  P_n(source) = sum_m c_{m,n} P_m(target) exactly for n <= N, and
// (ii) d_{m+1,n+1} + gamma_{n+1}(source) d_{m+1,-(n+1)} = 1 and
//      d_{-(m+1),n+1} + gamma_{n+1}(source) d_{-(m+1),-(n+1)} =
//      gamma_{m+1}(target) for 0 <= m <= n <= N.
bool symmetric_connection_check(const ShiftSpec& spec, int N);

}  // namespace awconn
