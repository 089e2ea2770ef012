#include "awconn/connection.hpp"

#include <sstream>
#include <stdexcept>

#include "awconn/qpochhammer.hpp"

namespace awconn {

namespace {

// Slot view of a shift: shifted value x -> y, fixed parameters u, v, w.
// Shift-a: (x,y,u,v,w) = (a,e,b,c,d); shift-c: (c,g,a,b,d).
struct ShiftSlots {
  Rat x, y, u, v, w, q;
};

ShiftSlots slots(const ShiftSpec& spec) {
  const ParamSet& p = spec.source;
  if (spec.kind == ShiftKind::a)
    return {p.a(), spec.target_value, p.b(), p.c(), p.d(), p.q()};
  return {p.c(), spec.target_value, p.a(), p.b(), p.d(), p.q()};
}

}  // namespace

Rat sym_conn_coeff(int m, int n, const ShiftSpec& spec) {
  if (m < 0 || m > n)
    throw std::invalid_argument("sym_conn_coeff: 0 <= m <= n required");
  const auto [x, y, u, v, w, q] = slots(spec);
  const Rat qm = q.pow(m);
  const Rat num =
      qpoch(q.pow(n - m + 1), q, m) *
      qpoch({u * v * qm, u * w * qm, v * w * qm, x / y}, q, n - m) *
      y.pow(n - m);
  const Rat den =
      qpoch(q, q, m) *
      qpoch({x * u * v * w * q.pow(n + m - 1), u * v * w * y * qm * qm}, q,
            n - m);
  if (den.is_zero()) throw non_generic_error("sym_conn_coeff denominator");
  return num / den;
}

namespace {

// The four-case formula without the r <= s guard; the symmetric re-proof
// identities evaluate it at (n+1, -(n+1)), where it vanishes.
Rat nonsym_d_formula(ZigZagIndex r, ZigZagIndex s, const ShiftSpec& spec) {
  const ParamSet& p = spec.source;
  const Rat q = p.q();
  const long ri = r.r, si = s.r;

  if (spec.kind == ShiftKind::a) {
    const Rat cd = p.cd(), abcd = p.abcd();
    const Rat bcde = p.b() * p.c() * p.d() * spec.target_value;
    if (ri >= 0 && si >= 0)
      return q.pow(si - ri) * qp1(abcd * q.pow(si + ri - 1)) /
             qp1(abcd * q.pow(2 * si - 1));
    if (ri >= 0 && si < 0)
      return qp1(q.pow(-(ri + si))) /
             (qp1(q.pow(-si)) * qp1(cd * q.pow(-(si + 1))));
    if (ri < 0 && si >= 0)
      return bcde * q.pow(si - (ri + 1)) *
             qpoch({q.pow(-ri), cd * q.pow(-(ri + 1)),
                    p.a() / spec.target_value * q.pow(si + ri)},
                   q, 1) /
             qpoch({abcd * q.pow(2 * si - 1), bcde * q.pow(-(2 * ri + 1))}, q,
                   1);
    return qpoch({q.pow(-ri), cd * q.pow(-(ri + 1)),
                  bcde * q.pow(-(ri + si + 1))},
                 q, 1) /
           qpoch({q.pow(-si), cd * q.pow(-(si + 1)),
                  bcde * q.pow(-(2 * ri + 1))},
                 q, 1);
  }

  const Rat ab = p.ab(), abcd = p.abcd();
  const Rat g = spec.target_value;
  const Rat abdg = p.a() * p.b() * p.d() * g;
  if (ri >= 0 && si >= 0)
    return qpoch({ab * q.pow(si), abcd * q.pow(ri + si - 1)}, q, 1) /
           qpoch({ab * q.pow(ri), abcd * q.pow(2 * si - 1)}, q, 1);
  if (ri >= 0 && si < 0)
    return -(ab * q.pow(ri)) * qp1(q.pow(-ri - si)) /
           (qp1(q.pow(-si)) * qp1(ab * q.pow(ri)));
  if (ri < 0 && si >= 0)
    return -(p.d() * q.pow(-ri - 1) * g) *
           qpoch({q.pow(-ri), ab * q.pow(si), p.c() / g * q.pow(si + ri)}, q,
                 1) /
           qpoch({abcd * q.pow(2 * si - 1), abdg * q.pow(-2 * ri - 1)}, q, 1);
  return qpoch({q.pow(-ri), abdg * q.pow(-ri - si - 1)}, q, 1) /
         qpoch({q.pow(-si), abdg * q.pow(-2 * ri - 1)}, q, 1);
}

}  // namespace

Rat nonsym_d(ZigZagIndex r, ZigZagIndex s, const ShiftSpec& spec) {
  if (r > s) throw std::invalid_argument("nonsym_d: r <= s in zig-zag order");
  return nonsym_d_formula(r, s, spec);
}

Rat tau_sigma_closed(ZigZagIndex r, ZigZagIndex s, const ShiftSpec& spec) {
  if (r > s)
    throw std::invalid_argument("tau_sigma_closed: r <= s in zig-zag order");
  const ParamSet& p = spec.source;
  const Rat q = p.q();
  const Rat abcd = p.abcd();

  if (spec.kind == ShiftKind::a) {
    const Rat b = p.b(), c = p.c(), d = p.d(), e = spec.target_value;
    const Rat ae_inv = p.a() / e;
    const Rat bcde = b * c * d * e;
    if (r.r >= 0 && s.r >= 0) {
      const long k = r.r, n = s.r;
      return qpoch(q.pow(n - k + 1), q, k) * (e * q).pow(n - k) *
             qpoch({b * c * q.pow(k), b * d * q.pow(k), c * d * q.pow(k),
                    ae_inv},
                   q, n - k) /
             (qpoch(q, q, k) *
              qpoch({abcd * q.pow(n + k), bcde * q.pow(2 * k)}, q, n - k));
    }
    if (r.r >= 0 && s.r < 0) {
      const long k = r.r, n = -s.r - 1;
      return qpoch(q.pow(n - k + 1), q, k) * e.pow(n + 1 - k) *
             qpoch({b * c * q.pow(k), b * d * q.pow(k), ae_inv}, q,
                   n + 1 - k) *
             qpoch(c * d * q.pow(k), q, n - k) /
             (qpoch(q, q, k) *
              qpoch({abcd * q.pow(n + k), bcde * q.pow(2 * k)}, q, n + 1 - k));
    }
    if (r.r < 0 && s.r >= 0) {
      const long k = -r.r - 1, n = s.r;
      return qpoch(q.pow(n - k), q, k + 1) *
             qpoch({b * c * q.pow(k + 1), b * d * q.pow(k + 1)}, q,
                   n - k - 1) *
             qpoch({c * d * q.pow(k), ae_inv}, q, n - k) * b * c * d *
             e.pow(n - k) * q.pow(n + k) /
             (qpoch(q, q, k) *
              qpoch({abcd * q.pow(n + k), bcde * q.pow(2 * k + 1)}, q, n - k));
    }
    const long k = -r.r - 1, n = -s.r - 1;
    return qpoch(q.pow(n - k + 1), q, k) * e.pow(n - k) *
           qpoch({b * c * q.pow(k + 1), b * d * q.pow(k + 1),
                  c * d * q.pow(k), ae_inv},
                 q, n - k) /
           (qpoch(q, q, k) *
            qpoch({abcd * q.pow(n + k + 1), bcde * q.pow(2 * k + 1)}, q,
                  n - k));
  }

  const Rat a = p.a(), b = p.b(), d = p.d(), g = spec.target_value;
  const Rat ab = p.ab();
  const Rat cg_inv = p.c() / g;
  const Rat abdg = a * b * d * g;
  if (r.r >= 0 && s.r >= 0) {
    const long k = r.r, n = s.r;
    return qpoch(q.pow(n - k + 1), q, k) * g.pow(n - k) *
           qpoch({ab * q.pow(k + 1), a * d * q.pow(k), b * d * q.pow(k),
                  cg_inv},
                 q, n - k) /
           (qpoch(q, q, k) *
            qpoch({abcd * q.pow(n + k), abdg * q.pow(2 * k)}, q, n - k));
  }
  if (r.r >= 0 && s.r < 0) {
    const long k = r.r, n = -s.r - 1;
    return -(ab * q.pow(k)) * g.pow(n - k + 1) *
           qpoch(q.pow(n - k + 1), q, k) *
           qpoch(ab * q.pow(k + 1), q, n - k) *
           qpoch({a * d * q.pow(k), b * d * q.pow(k), cg_inv}, q, n - k + 1) /
           (qpoch(q, q, k) *
            qpoch({abcd * q.pow(n + k), abdg * q.pow(2 * k)}, q, n - k + 1));
  }
  if (r.r < 0 && s.r >= 0) {
    const long k = -r.r - 1, n = s.r;
    return -(d * q.pow(k)) * g.pow(n - k) * qpoch(q.pow(n - k), q, k + 1) *
           qpoch({ab * q.pow(k + 1), cg_inv}, q, n - k) *
           qpoch({a * d * q.pow(k + 1), b * d * q.pow(k + 1)}, q, n - k - 1) /
           (qpoch(q, q, k) *
            qpoch({abcd * q.pow(n + k), abdg * q.pow(2 * k + 1)}, q, n - k));
  }
  const long k = -r.r - 1, n = -s.r - 1;
  return qpoch(q.pow(n - k + 1), q, k) * g.pow(n - k) *
         qpoch({ab * q.pow(k + 1), a * d * q.pow(k + 1),
                b * d * q.pow(k + 1), cg_inv},
               q, n - k) /
         (qpoch(q, q, k) *
          qpoch({abcd * q.pow(n + k + 1), abdg * q.pow(2 * k + 1)}, q, n - k));
}

Rat gamma_source(int n, const ShiftSpec& spec) {
  return gamma_coeff(n, spec.source);
}

Rat gamma_target(int n, const ShiftSpec& spec) {
  return gamma_coeff(n, spec.target());
}

TransitionMatrix::TransitionMatrix(int truncation) : n_(truncation) {
  if (truncation < 0)
    throw std::invalid_argument("TransitionMatrix: truncation >= 0");
  cells_.assign(static_cast<size_t>(dim()) * dim(), Rat(0));
}

TransitionMatrix TransitionMatrix::identity(int truncation) {
  TransitionMatrix m(truncation);
  for (int i = 0; i < m.dim(); ++i) m.cells_[i * m.dim() + i] = Rat(1);
  return m;
}

std::vector<ZigZagIndex> TransitionMatrix::basis_order(int truncation) {
  std::vector<ZigZagIndex> order;
  order.reserve(2 * truncation + 1);
  for (int r = 0; r <= truncation; ++r) order.push_back(zz(r));
  for (int r = 1; r <= truncation; ++r) order.push_back(zz(-r));
  return order;
}

int TransitionMatrix::index_of(ZigZagIndex r) const {
  if (r.r > n_ || r.r < -n_)
    throw std::out_of_range("TransitionMatrix: index outside window");
  return r.r >= 0 ? r.r : n_ - r.r;
}

const Rat& TransitionMatrix::entry(ZigZagIndex row, ZigZagIndex col) const {
  return cells_[index_of(row) * dim() + index_of(col)];
}

void TransitionMatrix::set_entry(ZigZagIndex row, ZigZagIndex col, Rat value) {
  cells_[index_of(row) * dim() + index_of(col)] = std::move(value);
}

bool TransitionMatrix::is_zz_upper_triangular() const {
  const auto order = basis_order(n_);
  for (ZigZagIndex row : order)
    for (ZigZagIndex col : order)
      if (row > col && !entry(row, col).is_zero()) return false;
  return true;
}

bool TransitionMatrix::has_unit_diagonal() const {
  for (int i = 0; i < dim(); ++i)
    if (!cells_[i * dim() + i].is_one()) return false;
  return true;
}

TransitionMatrix operator*(const TransitionMatrix& lhs,
                           const TransitionMatrix& rhs) {
  if (lhs.n_ != rhs.n_)
    throw std::invalid_argument("TransitionMatrix: size mismatch");
  TransitionMatrix out(lhs.n_);
  const int d = lhs.dim();
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Rat& x = lhs.cells_[i * d + k];
      if (x.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        const Rat& y = rhs.cells_[k * d + j];
        if (!y.is_zero()) out.cells_[i * d + j] += x * y;
      }
    }
  return out;
}

bool operator==(const TransitionMatrix& x, const TransitionMatrix& y) {
  return x.n_ == y.n_ && x.cells_ == y.cells_;
}

long TransitionMatrix::mismatches(const TransitionMatrix& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("TransitionMatrix: size mismatch");
  long count = 0;
  for (size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] != other.cells_[i]) ++count;
  return count;
}

std::string TransitionMatrix::csv() const {
  std::ostringstream os;
  const auto order = basis_order(n_);
  for (size_t j = 0; j < order.size(); ++j)
    os << (j ? "," : "") << "E" << order[j].r;
  os << '\n';
  for (ZigZagIndex row : order) {
    for (size_t j = 0; j < order.size(); ++j)
      os << (j ? "," : "") << entry(row, order[j]).str();
    os << '\n';
  }
  return os.str();
}

std::string TransitionMatrix::json() const {
  std::ostringstream os;
  os << "{\"N\":" << n_ << ",\"entries\":{";
  bool first = true;
  const auto order = basis_order(n_);
  for (ZigZagIndex row : order)
    for (ZigZagIndex col : order) {
      if (row > col) continue;
      if (!first) os << ',';
      first = false;
      os << '"' << row.r << ',' << col.r << "\":\""
         << entry(row, col).str() << '"';
    }
  os << "}}";
  return os.str();
}

TransitionMatrix transition_matrix_closed(const ShiftSpec& spec, int N) {
  require_generic(spec.source, N > 0 ? N : 1);
  require_generic(spec.target(), N > 0 ? N : 1);
  TransitionMatrix m(N);
  const auto order = TransitionMatrix::basis_order(N);
  for (ZigZagIndex row : order)
    for (ZigZagIndex col : order)
      if (row <= col) m.set_entry(row, col, tau_sigma_closed(row, col, spec));
  return m;
}

TransitionMatrix transition_matrix_oracle(const ShiftSpec& spec, int N) {
  require_generic(spec.source, N > 0 ? N : 1);
  const ParamSet tgt = spec.target();
  require_generic(tgt, N > 0 ? N : 1);
  TransitionMatrix m(N);
  for (ZigZagIndex col : TransitionMatrix::basis_order(N)) {
    LaurentPoly rest = nonsymmetric_E(col, spec.source).poly;
    while (!rest.is_zero()) {
      const ZigZagIndex row = rest.zz_degree();
      const Rat coeff = rest.coeff(row.r);  // target family is zig-zag monic
      m.set_entry(row, col, coeff);
      rest -= coeff * nonsymmetric_E(row, tgt).poly;
    }
  }
  return m;
}

bool symmetric_connection_check(const ShiftSpec& spec, int N) {
  require_generic(spec.source, N > 0 ? N : 1);
  const ParamSet tgt = spec.target();
  require_generic(tgt, N > 0 ? N : 1);

  for (int n = 0; n <= N; ++n) {
    LaurentPoly rhs;
    for (int m = 0; m <= n; ++m)
      rhs += sym_conn_coeff(m, n, spec) * hecke_symmetrize(m, tgt);
    if (hecke_symmetrize(n, spec.source) != rhs) return false;
  }

  for (int n = 0; n <= N; ++n) {
    const Rat gn = gamma_source(n + 1, spec);
    for (int m = 0; m <= n; ++m) {
      if (nonsym_d_formula(zz(m + 1), zz(n + 1), spec) +
              gn * nonsym_d_formula(zz(m + 1), zz(-(n + 1)), spec) !=
          Rat(1))
        return false;
      if (nonsym_d_formula(zz(-(m + 1)), zz(n + 1), spec) +
              gn * nonsym_d_formula(zz(-(m + 1)), zz(-(n + 1)), spec) !=
          gamma_target(m + 1, spec))
        return false;
    }
  }
  return true;
}

}  // namespace awconn
