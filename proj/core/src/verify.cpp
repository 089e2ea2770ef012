#include "awconn/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include <json.hpp>

#include "awconn/aw_polys.hpp"
#include "awconn/classical.hpp"
#include "awconn/noumi.hpp"
#include "awconn/qpochhammer.hpp"

namespace awconn {

using ordered_json = nlohmann::ordered_json;

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::json() const {
  ordered_json j;
  j["seed"] = seed;
  j["tuples"] = tuples;
  ordered_json arr = ordered_json::array();
  for (const CheckResult& c : checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["params"] = c.params;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["detail"] = c.detail;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  j["pass"] = pass();
  return j.dump(2) + "\n";
}

TupleSampler::TupleSampler(std::uint64_t seed, bool allow_negative)
    : engine_(seed), allow_negative_(allow_negative) {}

Rat TupleSampler::rat() {
  const long num = 1 + static_cast<long>(next() % 97);
  const long den = 1 + static_cast<long>(next() % 97);
  long sign = 1;
  if (allow_negative_ && next() % 2 == 0) sign = -1;
  return Rat(sign * num, den);
}

ParamSet TupleSampler::param_set(int depth) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      ParamSet p(rat(), rat(), rat(), rat(), rat());
      if (is_generic(p, depth)) return p;
    } catch (const std::invalid_argument&) {
    }
  }
  throw genericity_exhausted("no generic tuple after 1000 resamples");
}

ShiftSpec TupleSampler::shift_spec(ShiftKind kind, int depth) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      ParamSet p(rat(), rat(), rat(), rat(), rat());
      if (!is_generic(p, depth)) continue;
      const Rat target = rat();
      ShiftSpec spec{kind, p, target};
      if (is_generic(spec.target(), depth)) return spec;
    } catch (const std::invalid_argument&) {
    }
  }
  throw genericity_exhausted("no generic shift pair after 1000 resamples");
}

ParamSet TupleSampler::chain_base(ShiftKind kind, int max_p, int depth) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      ParamSet p(rat(), rat(), rat(), rat(), rat());
      const Rat x = kind == ShiftKind::a ? p.a() : p.c();
      bool ok = true;
      for (int j = 0; ok && j <= max_p + 1; ++j) {
        const Rat xj = x * p.q().pow(j);
        const ParamSet pj = kind == ShiftKind::a ? p.with_a(xj) : p.with_c(xj);
        ok = is_generic(pj, depth);
      }
      if (ok) return p;
    } catch (const std::invalid_argument&) {
    }
  }
  throw genericity_exhausted("no generic q-power chain after 1000 resamples");
}

namespace {

std::uint64_t suite_seed(std::uint64_t base, const std::string& suite) {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a
  for (const char ch : suite) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return base ^ h;
}

struct SuiteContext {
  VerifyReport& report;
  std::string suite;

  void record(const std::string& name, const std::string& params, bool pass,
              std::string detail = "") {
    if (pass && detail.empty()) detail = "exact";
    report.checks.push_back({suite + "/" + name, params, pass, detail});
  }
  void record_tuple(const std::string& desc) {
    report.tuples.push_back(suite + ": " + desc);
  }
};

std::string kind_name(ShiftKind k) { return k == ShiftKind::a ? "a" : "c"; }

// ---------------------------------------------------------------------------
// eigen suite: eigenvector property, triangularity, low-codegree closed
// forms, basis-flavor conversions, projection identities, operator axioms.
// ---------------------------------------------------------------------------

void suite_eigen(SuiteContext& ctx, const VerifyOptions& opts) {
  TupleSampler sampler(suite_seed(opts.seed, ctx.suite), opts.allow_negative);
  const int R = opts.N;
  for (int t = 0; t < opts.M; ++t) {
    const ParamSet p = sampler.param_set(std::max(R, 3));
    ctx.record_tuple(p.str());
    const std::string ps = p.str();

    {
      bool ok = true;
      std::string detail;
      for (long pos = 0; pos <= zz(-R).position() + 1 && ok; ++pos) {
        const ZigZagIndex r = zz_at_position(pos);
        if (r.r > R || r.r < -R) continue;
        const LaurentPoly e = nonsymmetric_E(r, p).poly;
        if (apply(OperatorTag::Yt, e, p) != mu_tilde(r, p) * e) {
          ok = false;
          detail = "fails at r=" + std::to_string(r.r);
        }
      }
      ctx.record("eigenvector", ps, ok, detail);
    }

    {
      bool ok = true;
      std::string detail;
      for (int r = -R; r <= R && ok; ++r) {
        const LaurentPoly e = nonsymmetric_E(zz(r), p).poly;
        const LaurentPoly tail = e - LaurentPoly::monomial(Rat(1), r);
        if (e.zz_degree() != zz(r) || !e.zz_leading_coeff().is_one() ||
            (!tail.is_zero() && !(tail.zz_degree() < zz(r)))) {
          ok = false;
          detail = "fails at r=" + std::to_string(r);
        }
      }
      ctx.record("triangular", ps, ok, detail);
    }

    {
      bool ok = true;
      std::string detail;
      for (int n = 1; n <= R && ok; ++n) {
        for (const int r : {n, -n}) {
          for (const BasisFlavor flavor : {BasisFlavor::plain, BasisFlavor::q}) {
            const auto coeffs =
                expand_in_basis(nonsymmetric_E(zz(r), p).poly, flavor, p);
            const auto get = [&](ZigZagIndex i) {
              const auto it = coeffs.find(i);
              return it == coeffs.end() ? Rat(0) : it->second;
            };
            bool here = get(zz(r)) == lambda_diag(zz(r), flavor, p);
            const ZigZagIndex codeg1 = zz(r > 0 ? -r : -r - 1);
            here = here && get(codeg1) == mu_codeg1(zz(r), flavor, p);
            if (r >= 1 || r <= -2) {
              const ZigZagIndex codeg2 = zz(r > 0 ? r - 1 : r + 1);
              here = here && get(codeg2) == lambda_codeg2(zz(r), flavor, p);
            }
            if (!here) {
              ok = false;
              detail = "fails at r=" + std::to_string(r);
            }
          }
        }
      }
      ctx.record("low-codegree", ps, ok, detail);
    }

    {
      bool ok = true;
      std::string detail;
      const Rat q = p.q();
      for (int r = -R; r <= R && ok; ++r) {
        const LaurentPoly e = nonsymmetric_E(zz(r), p).poly;
        const auto plain = expand_in_basis(e, BasisFlavor::plain, p);
        const auto qf = expand_in_basis(e, BasisFlavor::q, p);
        const auto at = [](const std::map<ZigZagIndex, Rat>& m, int i) {
          const auto it = m.find(zz(i));
          return it == m.end() ? Rat(0) : it->second;
        };
        bool here = true;
        if (r < 0) {
          const int n = -r - 1;
          here = here && at(plain, r) == q.pow(n + 1) * at(qf, r);
          here = here && at(plain, n) == at(qf, n);
          if (n >= 1)
            here = here && at(plain, -n) == at(qf, n) * (q.pow(n) - Rat(1)) +
                                                at(qf, -n) * q.pow(n);
        } else {
          const int n = r;
          here = here && at(qf, n) == at(plain, n);
          if (n >= 1) {
            here = here &&
                   at(qf, -n) == at(plain, n) * (q.pow(-n) - Rat(1)) +
                                     at(plain, -n) * q.pow(-n);
            here = here && at(qf, n - 1) == at(plain, n - 1);
          }
        }
        if (!here) {
          ok = false;
          detail = "fails at r=" + std::to_string(r);
        }
      }
      ctx.record("flavor-conversion", ps, ok, detail);
    }

    {
      // Projections built from T1t: L1 = t1^-1 (T1t + 1),
      // L2 = (1 + t1^-1) - L1; L1 L2 = 0 and L1^2 = (1 + t1^-1) L1 on
      // span{E_-n, E_n}.
      bool ok = true;
      std::string detail;
      const Rat t1inv = p.t1().inv();
      const Rat scale = Rat(1) + t1inv;
      const auto l1 = [&](const LaurentPoly& f) {
        return t1inv * (apply(OperatorTag::T1t, f, p) + f);
      };
      for (int n = 1; n <= std::min(R, 6) && ok; ++n) {
        for (const int r : {-n, n}) {
          const LaurentPoly u = nonsymmetric_E(zz(r), p).poly;
          const LaurentPoly l1u = l1(u);
          const LaurentPoly l2u = scale * u - l1u;
          if (!l1(l2u).is_zero() || l1(l1u) != scale * l1u) {
            ok = false;
            detail = "fails at r=" + std::to_string(r);
          }
        }
      }
      ctx.record("projection", ps, ok, detail);
    }

    ctx.record("quadratic-T0", ps, check_quadratic(OperatorTag::T0t, p, 10));
    ctx.record("quadratic-T1", ps, check_quadratic(OperatorTag::T1t, p, 10));

    {
      bool ok = true;
      std::string detail;
      const Rat cd_q = p.cd() / p.q();
      const Rat cpd = p.c() + p.d();
      const Rat apb = p.a() + p.b();
      for (int n = 0; n <= 10 && ok; ++n) {
        const LaurentPoly fnq = basis_fq(n, p);
        if (apply(OperatorTag::U0t, fnq, p) !=
            -cd_q * basis_hq(n + 1, p) + cpd * fnq) {
          ok = false;
          detail = "U0 f_q fails at n=" + std::to_string(n);
        }
        if (apply(OperatorTag::T1t, basis_f(n), p) !=
            p.t1() * basis_f(n)) {
          ok = false;
          detail = "T1 f fails at n=" + std::to_string(n);
        }
        if (n >= 1) {
          if (apply(OperatorTag::U0t, basis_hq(n, p), p) !=
              p.q() * basis_fq(n - 1, p)) {
            ok = false;
            detail = "U0 h_q fails at n=" + std::to_string(n);
          }
          if (apply(OperatorTag::T1t, basis_h(n), p) !=
              p.t1() * basis_f(n) - basis_h(n) + apb * basis_f(n - 1)) {
            ok = false;
            detail = "T1 h fails at n=" + std::to_string(n);
          }
        }
      }
      ctx.record("basis-action", ps, ok, detail);
    }

    {
      bool ok = true;
      std::string detail;
      for (int n = 0; n <= 10 && ok; ++n) {
        const auto deg_within = [](const LaurentPoly& f, int bound) {
          return f.is_zero() || !(zz(bound) < f.zz_degree());
        };
        if (!deg_within(apply(OperatorTag::U0t, basis_f(n), p), -(n + 1)) ||
            !deg_within(apply(OperatorTag::U0t, basis_h(n + 1), p), -(n + 1)) ||
            !deg_within(apply(OperatorTag::T1t, basis_h(n + 1), p), n + 1) ||
            !deg_within(apply(OperatorTag::T1t, basis_f(n), p), n)) {
          ok = false;
          detail = "fails at n=" + std::to_string(n);
        }
      }
      ctx.record("filtration", ps, ok, detail);
    }

    {
      bool ok = true;
      std::string detail;
      const Rat lift = Rat(1) - p.t0();
      for (int k = -10; k <= 10 && ok; ++k) {
        const LaurentPoly zk1 = LaurentPoly::monomial(Rat(1), k + 1);
        if (apply(OperatorTag::U0t, LaurentPoly::monomial(Rat(1), k), p) !=
            apply(OperatorTag::T0t, zk1, p) + lift * zk1) {
          ok = false;
          detail = "fails at k=" + std::to_string(k);
        }
      }
      ctx.record("u0-factorization", ps, ok, detail);
    }

    {
      bool ok = true;
      const Rat c1 = sampler.rat(), c2 = sampler.rat();
      const LaurentPoly f = nonsymmetric_E(zz(2), p).poly;
      const LaurentPoly g = nonsymmetric_E(zz(-3), p).poly;
      for (const OperatorTag op : {OperatorTag::T0t, OperatorTag::T1t,
                                   OperatorTag::U0t, OperatorTag::Yt}) {
        if (apply(op, c1 * f + c2 * g, p) !=
            c1 * apply(op, f, p) + c2 * apply(op, g, p))
          ok = false;
      }
      ctx.record("linearity", ps, ok);
    }
  }
}

// ---------------------------------------------------------------------------
// connection suites: main theorem (closed == oracle), product consistency,
// low-codegree entries, one-q-step specializations, ratio lemmas.
// ---------------------------------------------------------------------------

void suite_connection(SuiteContext& ctx, const VerifyOptions& opts,
                      ShiftKind kind) {
  TupleSampler sampler(suite_seed(opts.seed, ctx.suite), opts.allow_negative);
  const int N = opts.N;

  for (int t = 0; t < opts.M; ++t) {
    const ShiftSpec spec = sampler.shift_spec(kind, N);
    ctx.record_tuple(spec.source.str() + " -> " + spec.target_value.str());
    const std::string ps =
        spec.source.str() + " shift-" + kind_name(kind) + " to " +
        spec.target_value.str();

    const TransitionMatrix closed = transition_matrix_closed(spec, N);
    const TransitionMatrix oracle = transition_matrix_oracle(spec, N);
    const long bad = closed.mismatches(oracle);
    ctx.record("closed-vs-oracle", ps, bad == 0,
               std::to_string(bad) + " mismatches");

    {
      bool ok = true;
      const auto order = TransitionMatrix::basis_order(N);
      for (ZigZagIndex r : order)
        for (ZigZagIndex s : order)
          if (!(s < r) &&
              tau_sigma_closed(r, s, spec) !=
                  nonsym_d(r, s, spec) *
                      sym_conn_coeff(std::abs(r.r), std::abs(s.r), spec))
            ok = false;
      ctx.record("tau-sigma-product", ps, ok);
    }

    {
      bool ok = true;
      const ParamSet tgt = spec.target();
      for (ZigZagIndex s : TransitionMatrix::basis_order(N)) {
        LaurentPoly sum;
        for (ZigZagIndex r : TransitionMatrix::basis_order(N)) {
          const Rat& c = oracle.entry(r, s);
          if (!c.is_zero()) sum += c * nonsymmetric_E(r, tgt).poly;
        }
        if (sum != nonsymmetric_E(s, spec.source).poly) ok = false;
      }
      ctx.record("oracle-reconstructs", ps, ok);
    }

    {
      // Low-codegree oracle entries against difference expressions in the
      // almost symmetric coefficients.
      bool ok = true;
      std::string detail;
      const ParamSet& src = spec.source;
      const ParamSet tgt = spec.target();
      const auto dmu = [&](int r) {
        return mu_codeg1(zz(r), BasisFlavor::plain, tgt) -
               mu_codeg1(zz(r), BasisFlavor::plain, src);
      };
      const auto dlam = [&](int r) {
        return lambda_codeg2(zz(r), BasisFlavor::plain, tgt) -
               lambda_codeg2(zz(r), BasisFlavor::plain, src);
      };
      for (int n = 0; n < N && ok; ++n) {
        if (oracle.entry(zz(n), zz(-(n + 1))) != -dmu(-(n + 1))) {
          ok = false;
          detail = "codeg1 mixed (n," + std::to_string(-(n + 1)) + ")";
        }
        if (oracle.entry(zz(-(n + 1)), zz(n + 1)) != -dmu(n + 1)) {
          ok = false;
          detail = "codeg1 mixed (-(n+1)," + std::to_string(n + 1) + ")";
        }
      }
      for (int n = 1; n <= N && ok; ++n) {
        const Rat want = -dlam(n) +
                         mu_codeg1(zz(-n), BasisFlavor::plain, tgt) * dmu(n);
        if (oracle.entry(zz(n - 1), zz(n)) != want) {
          ok = false;
          detail = "codeg2 block00 n=" + std::to_string(n);
        }
      }
      for (int n = 1; n < N && ok; ++n) {
        const Rat want = -dlam(-(n + 1)) +
                         mu_codeg1(zz(n), BasisFlavor::plain, tgt) *
                             dmu(-(n + 1));
        if (oracle.entry(zz(-n), zz(-(n + 1))) != want) {
          ok = false;
          detail = "codeg2 block11 n=" + std::to_string(n);
        }
      }
      ctx.record("low-codegree-entries", ps, ok, detail);
    }

    {
      const ShiftSpec trivial{kind, spec.source,
                              kind == ShiftKind::a ? spec.source.a()
                                                   : spec.source.c()};
      ctx.record("identity-at-no-shift", ps,
                 transition_matrix_closed(trivial, N) ==
                     TransitionMatrix::identity(N));
    }
  }

  // One-q-step specializations and the ratio lemmas run on q-power chains.
  for (int t = 0; t < opts.M; ++t) {
    const ParamSet base = sampler.chain_base(kind, 3, N);
    ctx.record_tuple("chain " + base.str());
    const std::string ps = "chain " + base.str();
    const Rat q = base.q();
    const Rat x = kind == ShiftKind::a ? base.a() : base.c();
    const auto step_spec = [&](int from_pow, int to_pow) {
      const Rat from = x * q.pow(from_pow);
      const ParamSet src =
          kind == ShiftKind::a ? base.with_a(from) : base.with_c(from);
      return ShiftSpec{kind, src, x * q.pow(to_pow)};
    };
    const ShiftSpec one_step = step_spec(0, 1);
    const Rat a = base.a(), b = base.b(), c = base.c(), d = base.d();
    const Rat abcd = base.abcd();

    {
      bool ok = true;
      std::string detail;
      for (int n = 0; n <= N && ok; ++n) {
        Rat want1, want2;
        if (kind == ShiftKind::a) {
          want1 = a * q * qpoch({b * c * q.pow(n), b * d * q.pow(n), q.inv()},
                                q, 1) /
                  (qp1(abcd * q.pow(2 * n)) * qp1(abcd * q.pow(2 * n + 1)));
          want2 = abcd * q.pow(2 * n + 2) *
                  qpoch({q.pow(n + 1), c * d * q.pow(n), q.inv()}, q, 1) /
                  (qp1(abcd * q.pow(2 * n + 1)) *
                   qp1(abcd * q.pow(2 * n + 2)));
        } else {
          want1 = -(a * b * c * q.pow(n + 1)) *
                  qpoch({a * d * q.pow(n), b * d * q.pow(n), q.inv()}, q, 1) /
                  (qp1(abcd * q.pow(2 * n)) * qp1(abcd * q.pow(2 * n + 1)));
          want2 = -(c * d * q.pow(n + 1)) *
                  qpoch({q.pow(n + 1), a * b * q.pow(n + 1), q.inv()}, q, 1) /
                  (qp1(abcd * q.pow(2 * n + 1)) *
                   qp1(abcd * q.pow(2 * n + 2)));
        }
        if (tau_sigma_closed(zz(n), zz(-(n + 1)), one_step) != want1) {
          ok = false;
          detail = "sigma(n,-(n+1)) at n=" + std::to_string(n);
        }
        if (tau_sigma_closed(zz(-(n + 1)), zz(n + 1), one_step) != want2) {
          ok = false;
          detail = "sigma(-(n+1),n+1) at n=" + std::to_string(n);
        }
      }
      ctx.record("q-step-codeg1", ps, ok, detail);
    }

    {
      bool ok = true;
      std::string detail;
      for (int n = 1; n <= N && ok; ++n) {
        Rat want1, want2;
        if (kind == ShiftKind::a) {
          want1 = -(a * q) *
                  qpoch({q.pow(n), b * c * q.pow(n - 1), b * d * q.pow(n - 1),
                         c * d * q.pow(n - 1)},
                        q, 1) /
                  (qp1(abcd * q.pow(2 * n - 1)) *
                   qp1(abcd * q.pow(2 * n - 1)));
          want2 = -a *
                  qpoch({q.pow(n), b * c * q.pow(n), b * d * q.pow(n),
                         c * d * q.pow(n - 1)},
                        q, 1) /
                  (qp1(abcd * q.pow(2 * n)) * qp1(abcd * q.pow(2 * n)));
        } else {
          want1 = -c *
                  qpoch({q.pow(n), a * b * q.pow(n), a * d * q.pow(n - 1),
                         b * d * q.pow(n - 1)},
                        q, 1) /
                  (qp1(abcd * q.pow(2 * n - 1)) *
                   qp1(abcd * q.pow(2 * n - 1)));
          want2 = -c *
                  qpoch({q.pow(n), a * b * q.pow(n), a * d * q.pow(n),
                         b * d * q.pow(n)},
                        q, 1) /
                  (qp1(abcd * q.pow(2 * n)) * qp1(abcd * q.pow(2 * n)));
        }
        if (tau_sigma_closed(zz(n - 1), zz(n), one_step) != want1) {
          ok = false;
          detail = "tau(n-1,n) at n=" + std::to_string(n);
        }
        if (tau_sigma_closed(zz(-n), zz(-(n + 1)), one_step) != want2) {
          ok = false;
          detail = "tau(-n,-(n+1)) at n=" + std::to_string(n);
        }
      }
      ctx.record("q-step-codeg2", ps, ok, detail);
    }

    {
      // Ratio lemmas in cross-multiplied (division-free) form, over the
      // chains x q^p -> x q^{p+1}.
      bool ok = true;
      std::string detail;
      const int top = std::min(N, 5);
      for (int p = 0; p <= 3 && ok; ++p) {
        const ShiftSpec up = step_spec(0, p + 1);
        const ShiftSpec lo = step_spec(0, p);
        for (int n = 1; n <= top && ok; ++n) {
          for (int k = 0; k < n && ok; ++k) {
            const Rat qmp1 = qp1(q.pow(-(p + 1)));
            bool here = true;
            if (kind == ShiftKind::a) {
              here = here &&
                     tau_sigma_closed(zz(k), zz(n), up) * b * c * d *
                             q.pow(2 * k) *
                             qpoch({q.pow(n - k), q.pow(n - k - p - 1)}, q,
                                   1) ==
                         tau_sigma_closed(zz(-(k + 1)), zz(n), lo) *
                             q.pow(n - k) *
                             qpoch({b * c * q.pow(k), b * d * q.pow(k)}, q,
                                   1) *
                             qmp1;
              here = here &&
                     tau_sigma_closed(zz(k), zz(-(n + 1)), up) *
                             qpoch({abcd * q.pow(n + k),
                                    abcd * q.pow(n + k + p + 1)},
                                   q, 1) ==
                         tau_sigma_closed(zz(-(k + 1)), zz(-(n + 1)), lo) *
                             a * q.pow(n - k + p + 1) *
                             qpoch({b * c * q.pow(k), b * d * q.pow(k)}, q,
                                   1) *
                             qmp1;
              here = here &&
                     tau_sigma_closed(zz(-(k + 1)), zz(n), up) *
                             qpoch({abcd * q.pow(n + k),
                                    abcd * q.pow(n + k + p + 1)},
                                   q, 1) ==
                         tau_sigma_closed(zz(k + 1), zz(n), lo) * abcd *
                             q.pow(n + k + p + 1) *
                             qpoch({q.pow(k + 1), c * d * q.pow(k)}, q, 1) *
                             qmp1;
              here = here &&
                     tau_sigma_closed(zz(-(k + 1)), zz(-(n + 1)), up) *
                             qpoch({q.pow(n - k), q.pow(n - k - p - 1)}, q,
                                   1) ==
                         tau_sigma_closed(zz(k + 1), zz(-(n + 1)), lo) *
                             q.pow(n - k) *
                             qpoch({q.pow(k + 1), c * d * q.pow(k)}, q, 1) *
                             qmp1;
            } else {
              here = here &&
                     tau_sigma_closed(zz(k), zz(n), up) * d *
                             qpoch({q.pow(n - k), q.pow(n - k - p - 1)}, q,
                                   1) ==
                         tau_sigma_closed(zz(-(k + 1)), zz(n), lo) *
                             -q.pow(n - 2 * k) *
                             qpoch({a * d * q.pow(k), b * d * q.pow(k)}, q,
                                   1) *
                             qmp1;
              here = here &&
                     tau_sigma_closed(zz(k), zz(-(n + 1)), up) *
                             qpoch({abcd * q.pow(n + k),
                                    abcd * q.pow(n + k + p + 1)},
                                   q, 1) ==
                         tau_sigma_closed(zz(-(k + 1)), zz(-(n + 1)), lo) *
                             -(a * b * c * q.pow(n + p + 1)) *
                             qpoch({a * d * q.pow(k), b * d * q.pow(k)}, q,
                                   1) *
                             qmp1;
              here = here &&
                     tau_sigma_closed(zz(-(k + 1)), zz(n), up) *
                             qpoch({abcd * q.pow(n + k),
                                    abcd * q.pow(n + k + p + 1)},
                                   q, 1) ==
                         tau_sigma_closed(zz(k + 1), zz(n), lo) *
                             -(c * d * q.pow(n + p)) *
                             qpoch({q.pow(k + 1), a * b * q.pow(k + 1)}, q,
                                   1) *
                             qmp1;
              here = here &&
                     tau_sigma_closed(zz(-(k + 1)), zz(-(n + 1)), up) * a * b *
                             qpoch({q.pow(n - k), q.pow(n - k - p - 1)}, q,
                                   1) ==
                         tau_sigma_closed(zz(k + 1), zz(-(n + 1)), lo) *
                             -q.pow(n - 2 * k - 1) *
                             qpoch({q.pow(k + 1), a * b * q.pow(k + 1)}, q,
                                   1) *
                             qmp1;
            }
            if (!here) {
              ok = false;
              detail = "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                       " n=" + std::to_string(n);
            }
          }
        }
      }
      ctx.record("ratio-lemma-shifted", ps, ok, detail);
    }

    {
      bool ok = true;
      std::string detail;
      const int top = std::min(N, 5);
      for (int p = 0; p <= 3 && ok; ++p) {
        const ShiftSpec lo = step_spec(0, p);
        for (int n = 1; n <= top && ok; ++n) {
          for (int k = 0; k < n && ok; ++k) {
            bool here = true;
            if (kind == ShiftKind::a) {
              here = here &&
                     tau_sigma_closed(zz(k), zz(n), lo) * b * c * d *
                             q.pow(2 * k) *
                             qpoch({q.pow(n - k), abcd * q.pow(2 * k + p)}, q,
                                   1) ==
                         tau_sigma_closed(zz(-(k + 1)), zz(n), lo) *
                             qpoch({b * c * q.pow(k), b * d * q.pow(k),
                                    abcd * q.pow(n + k + p)},
                                   q, 1);
              here = here &&
                     tau_sigma_closed(zz(k), zz(-(n + 1)), lo) *
                             qpoch({abcd * q.pow(n + k),
                                    abcd * q.pow(2 * k + p)},
                                   q, 1) ==
                         tau_sigma_closed(zz(-(k + 1)), zz(-(n + 1)), lo) *
                             a * q.pow(p) *
                             qpoch({b * c * q.pow(k), b * d * q.pow(k),
                                    q.pow(n - k - p)},
                                   q, 1);
              here = here &&
                     tau_sigma_closed(zz(-(k + 1)), zz(n), lo) *
                             qpoch({abcd * q.pow(n + k),
                                    abcd * q.pow(2 * k + p + 1)},
                                   q, 1) ==
                         tau_sigma_closed(zz(k + 1), zz(n), lo) * abcd *
                             q.pow(2 * k + p + 1) *
                             qpoch({q.pow(k + 1), q.pow(n - k - p - 1),
                                    c * d * q.pow(k)},
                                   q, 1);
              here = here &&
                     tau_sigma_closed(zz(-(k + 1)), zz(-(n + 1)), lo) *
                             qpoch({q.pow(n - k), abcd * q.pow(2 * k + p + 1)},
                                   q, 1) ==
                         tau_sigma_closed(zz(k + 1), zz(-(n + 1)), lo) *
                             qpoch({q.pow(k + 1), c * d * q.pow(k),
                                    abcd * q.pow(n + k + p + 1)},
                                   q, 1);
            } else {
              here = here &&
                     tau_sigma_closed(zz(k), zz(n), lo) * d * q.pow(k) *
                             qpoch({q.pow(n - k), abcd * q.pow(2 * k + p)}, q,
                                   1) ==
                         tau_sigma_closed(zz(-(k + 1)), zz(n), lo) *
                             -qpoch({a * d * q.pow(k), b * d * q.pow(k),
                                     abcd * q.pow(n + k + p)},
                                    q, 1);
              here = here &&
                     tau_sigma_closed(zz(k), zz(-(n + 1)), lo) *
                             qpoch({abcd * q.pow(n + k),
                                    abcd * q.pow(2 * k + p)},
                                   q, 1) ==
                         tau_sigma_closed(zz(-(k + 1)), zz(-(n + 1)), lo) *
                             -(a * b * x * q.pow(k + p)) *
                             qpoch({a * d * q.pow(k), b * d * q.pow(k),
                                    q.pow(n - k - p)},
                                   q, 1);
              here = here &&
                     tau_sigma_closed(zz(-(k + 1)), zz(n), lo) *
                             qpoch({abcd * q.pow(n + k),
                                    abcd * q.pow(2 * k + p + 1)},
                                   q, 1) ==
                         tau_sigma_closed(zz(k + 1), zz(n), lo) *
                             -(x * d * q.pow(k + p)) *
                             qpoch({q.pow(k + 1), q.pow(n - k - p - 1),
                                    a * b * q.pow(k + 1)},
                                   q, 1);
              here = here &&
                     tau_sigma_closed(zz(-(k + 1)), zz(-(n + 1)), lo) * a * b *
                             q.pow(k + 1) *
                             qpoch({q.pow(n - k), abcd * q.pow(2 * k + p + 1)},
                                   q, 1) ==
                         tau_sigma_closed(zz(k + 1), zz(-(n + 1)), lo) *
                             -qpoch({q.pow(k + 1), a * b * q.pow(k + 1),
                                     abcd * q.pow(n + k + p + 1)},
                                    q, 1);
            }
            if (!here) {
              ok = false;
              detail = "p=" + std::to_string(p) + " k=" + std::to_string(k) +
                       " n=" + std::to_string(n);
            }
          }
        }
      }
      ctx.record("ratio-lemma-same", ps, ok, detail);
    }
  }
}

// ---------------------------------------------------------------------------
// cocycle suite: discrete chains, block identity grid, banded one-step
// structure, continuous co-cycle on oracle matrices, codegree-1 additivity.
// ---------------------------------------------------------------------------

void suite_cocycle(SuiteContext& ctx, const VerifyOptions& opts) {
  TupleSampler sampler(suite_seed(opts.seed, ctx.suite), opts.allow_negative);
  for (int t = 0; t < opts.M; ++t) {
    for (const ShiftKind kind : {ShiftKind::a, ShiftKind::c}) {
      const ParamSet base = sampler.chain_base(kind, 3, opts.N);
      const std::string ps =
          "shift-" + kind_name(kind) + " chain " + base.str();
      ctx.record_tuple(ps);

      for (int p = 0; p <= 3; ++p) {
        const CocycleInstance inst{kind, base, p, opts.N};
        ctx.record("discrete-p" + std::to_string(p), ps,
                   check_discrete_cocycle(inst));
        const auto grid = check_block_identities(inst);
        bool ok = true;
        for (const auto& cell : grid) ok = ok && cell.pass;
        // A failing grid carries the full per-cell record array.
        ctx.record("blocks-p" + std::to_string(p), ps, ok,
                   ok ? "" : block_identities_json(grid));
      }

      {
        // Arbitrary (not q-power) slot triples.
        bool ok = true;
        for (int trial = 0; trial < 3 && ok; ++trial) {
          Rat y, z;
          for (int attempt = 0;; ++attempt) {
            if (attempt >= 1000)
              throw genericity_exhausted(
                  "no generic slot triple after 1000 resamples");
            y = sampler.rat();
            z = sampler.rat();
            if (y.is_zero() || z.is_zero()) continue;
            const ParamSet py = kind == ShiftKind::a ? base.with_a(y)
                                                     : base.with_c(y);
            const ParamSet pz = kind == ShiftKind::a ? base.with_a(z)
                                                     : base.with_c(z);
            if (is_generic(py, opts.N) && is_generic(pz, opts.N)) break;
          }
          const Rat x =
              kind == ShiftKind::a ? base.a() : base.c();
          if (!check_codeg1_additivity(kind, base, x, y, z, opts.N)) ok = false;
          if (!check_continuous_cocycle_oracle(kind, base, x, y, z,
                                               std::min(opts.N, 5)))
            ok = false;
        }
        ctx.record("continuous-and-additivity", ps, ok);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// symmetric suite: the re-proof pipeline.
// ---------------------------------------------------------------------------

void suite_symmetric(SuiteContext& ctx, const VerifyOptions& opts) {
  TupleSampler sampler(suite_seed(opts.seed, ctx.suite), opts.allow_negative);
  for (int t = 0; t < opts.M; ++t) {
    for (const ShiftKind kind : {ShiftKind::a, ShiftKind::c}) {
      const ShiftSpec spec = sampler.shift_spec(kind, opts.N + 1);
      const std::string ps = spec.source.str() + " shift-" +
                             kind_name(kind) + " to " +
                             spec.target_value.str();
      ctx.record_tuple(ps);
      ctx.record("symmetric-expansion", ps,
                 symmetric_connection_check(spec, opts.N));
    }
  }
}

// ---------------------------------------------------------------------------
// classical suite: Jacobi and Gegenbauer connection formulas against a
// brute-force monomial-basis solve.
// ---------------------------------------------------------------------------

std::vector<Rat> solve_in_family(const Poly& source,
                                 const std::function<Poly(int)>& family,
                                 int n) {
  std::vector<Rat> coeffs(n + 1, Rat(0));
  Poly rest = source;
  for (int k = n; k >= 0; --k) {
    const Poly fk = family(k);
    if (fk.degree() != k)
      throw std::domain_error("solve_in_family: degenerate family degree");
    const Rat c = rest.coeff(k) / fk.leading_coeff();
    coeffs[k] = c;
    rest -= c * fk;
  }
  if (!rest.is_zero())
    throw std::domain_error("solve_in_family: family does not span");
  return coeffs;
}

// Denominator guards for the classical families: recurrence factors, the
// connection denominators, and the leading coefficients the solve divides
// by.  Positive parameters always pass; negative sampling may need retries.
bool jacobi_params_ok(const Rat& gamma, const Rat& alpha, const Rat& beta,
                      int top) {
  for (const Rat& first : {alpha, gamma}) {
    const Rat s = first + beta;
    for (int k = 2; k <= top; ++k)
      if ((Rat(k) + s).is_zero() || (Rat(2 * k) + s - Rat(2)).is_zero())
        return false;
  }
  for (int k = 0; k <= top; ++k)
    if (poch(alpha + beta + Rat(k + 1), top + 1).is_zero()) return false;
  return true;
}

bool gegenbauer_params_ok(const Rat& lambda, const Rat& nu, int top) {
  return !poch(nu, top + 1).is_zero() && !poch(lambda, top).is_zero();
}

void suite_classical(SuiteContext& ctx, const VerifyOptions& opts) {
  TupleSampler sampler(suite_seed(opts.seed, ctx.suite), opts.allow_negative);
  const int top = opts.N;
  for (int t = 0; t < opts.M; ++t) {
    Rat gamma = sampler.rat(), alpha = sampler.rat(), beta = sampler.rat();
    for (int attempt = 0; !jacobi_params_ok(gamma, alpha, beta, top);
         ++attempt) {
      if (attempt >= 1000)
        throw genericity_exhausted(
            "no admissible classical tuple after 1000 resamples");
      gamma = sampler.rat();
      alpha = sampler.rat();
      beta = sampler.rat();
    }
    const std::string ps = "jacobi(gamma=" + gamma.str() +
                           ", alpha=" + alpha.str() + ", beta=" + beta.str() +
                           ")";
    ctx.record_tuple(ps);
    {
      bool ok = true;
      std::string detail;
      for (int n = 0; n <= top && ok; ++n) {
        const auto closed = jacobi_connection(n, gamma, alpha, beta);
        const auto solved = solve_in_family(
            jacobi_poly(n, gamma, beta),
            [&](int k) { return jacobi_poly(k, alpha, beta); }, n);
        Poly recomposed;
        for (int k = 0; k <= n; ++k) {
          if (closed[k] != solved[k]) {
            ok = false;
            detail = "coefficient k=" + std::to_string(k) +
                     " n=" + std::to_string(n);
          }
          recomposed += closed[k] * jacobi_poly(k, alpha, beta);
        }
        if (recomposed != jacobi_poly(n, gamma, beta)) {
          ok = false;
          detail = "expansion identity n=" + std::to_string(n);
        }
      }
      ctx.record("jacobi-connection", ps, ok, detail);
    }
    {
      bool ok = true;
      for (int n = 0; n <= top && ok; ++n) {
        const auto ident = jacobi_connection(n, alpha, alpha, beta);
        for (int k = 0; k <= n; ++k)
          if (ident[k] != (k == n ? Rat(1) : Rat(0))) ok = false;
      }
      ctx.record("jacobi-degenerate", ps, ok);
    }

    Rat lambda = sampler.rat(), nu = sampler.rat();
    for (int attempt = 0; !gegenbauer_params_ok(lambda, nu, top); ++attempt) {
      if (attempt >= 1000)
        throw genericity_exhausted(
            "no admissible classical tuple after 1000 resamples");
      lambda = sampler.rat();
      nu = sampler.rat();
    }
    const std::string gs =
        "gegenbauer(lambda=" + lambda.str() + ", nu=" + nu.str() + ")";
    ctx.record_tuple(gs);
    {
      bool ok = true;
      std::string detail;
      for (int n = 0; n <= top && ok; ++n) {
        const auto closed = gegenbauer_connection(n, lambda, nu);
        const auto solved = solve_in_family(
            gegenbauer_poly(n, lambda),
            [&](int k) { return gegenbauer_poly(k, nu); }, n);
        Poly recomposed;
        for (int m = 0; m <= n; ++m) {
          const bool parity_ok = (n - m) % 2 == 0;
          const Rat want =
              parity_ok ? closed[(n - m) / 2] : Rat(0);
          if (solved[m] != want) {
            ok = false;
            detail = "coefficient m=" + std::to_string(m) +
                     " n=" + std::to_string(n);
          }
        }
        for (size_t k = 0; k < closed.size(); ++k)
          recomposed += closed[k] * gegenbauer_poly(n - 2 * static_cast<int>(k), nu);
        if (recomposed != gegenbauer_poly(n, lambda)) {
          ok = false;
          detail = "expansion identity n=" + std::to_string(n);
        }
      }
      ctx.record("gegenbauer-connection", gs, ok, detail);
    }
    {
      bool ok = true;
      for (int n = 0; n <= top && ok; ++n) {
        const auto ident = gegenbauer_connection(n, nu, nu);
        for (size_t k = 0; k < ident.size(); ++k)
          if (ident[k] != (k == 0 ? Rat(1) : Rat(0))) ok = false;
      }
      ctx.record("gegenbauer-degenerate", gs, ok);
    }
  }
}

// ---------------------------------------------------------------------------
// appendixB suite: lowering coefficients invert the raising recursion and
// the zeta eigenvalue-difference closed forms hold.
// ---------------------------------------------------------------------------

void suite_appendix(SuiteContext& ctx, const VerifyOptions& opts) {
  TupleSampler sampler(suite_seed(opts.seed, ctx.suite), opts.allow_negative);
  for (int t = 0; t < opts.M; ++t) {
    const ParamSet p = sampler.param_set(std::max(opts.N + 1, 3));
    const std::string ps = p.str();
    ctx.record_tuple(ps);
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= opts.N && ok; ++n) {
      if (!check_raising_lowering_pair(n, p)) {
        ok = false;
        detail = "fails at n=" + std::to_string(n);
      }
    }
    ctx.record("raising-lowering-pair", ps, ok, detail);
  }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "eigen",    "connection-a", "connection-c", "cocycle",
      "symmetric", "classical",    "appendixB"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts) {
  VerifyReport report;
  report.seed = opts.seed;

  const auto run_one = [&](const std::string& name) {
    SuiteContext ctx{report, name};
    if (name == "eigen")
      suite_eigen(ctx, opts);
    else if (name == "connection-a")
      suite_connection(ctx, opts, ShiftKind::a);
    else if (name == "connection-c")
      suite_connection(ctx, opts, ShiftKind::c);
    else if (name == "cocycle")
      suite_cocycle(ctx, opts);
    else if (name == "symmetric")
      suite_symmetric(ctx, opts);
    else if (name == "classical")
      suite_classical(ctx, opts);
    else if (name == "appendixB")
      suite_appendix(ctx, opts);
    else
      throw std::invalid_argument("unknown verify suite: " + name);
  };

  if (suite == "all") {
    for (const std::string& name : verify_suite_names()) run_one(name);
  } else {
    run_one(suite);
  }
  return report;
}

}  // namespace awconn
