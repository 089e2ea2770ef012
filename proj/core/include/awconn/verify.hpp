#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "awconn/cocycle.hpp"
#include "awconn/connection.hpp"
#include "awconn/param_set.hpp"

namespace awconn {

struct CheckResult {
  std::string name;
  std::string params;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int N = 6;
  int M = 5;
  std::uint64_t seed = 0;
  bool allow_negative = false;
};

// Thrown when 1000 resamples fail to produce a generic tuple.
struct genericity_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<std::string> tuples;  // every sampled tuple, in sampling order
  std::vector<CheckResult> checks;

  bool pass() const;
  std::string json() const;  // {"seed","tuples","checks","pass"}
};

// Deterministic tuple sampler: numerators and denominators uniform in
// [1, 97] from a seeded engine, resampled until genericity holds for every
// tuple a suite touches.
class TupleSampler {
 public:
  TupleSampler(std::uint64_t seed, bool allow_negative);

  Rat rat();
  ParamSet param_set(int depth);
  // Source tuple plus an independent random target slot value, both generic.
  ShiftSpec shift_spec(ShiftKind kind, int depth);
  // Base tuple whose slot chain x q^0 .. x q^{max_p+1} is generic throughout.
  ParamSet chain_base(ShiftKind kind, int max_p, int depth);

 private:
  std::uint64_t next() { return engine_(); }
  std::mt19937_64 engine_;
  bool allow_negative_;
};

// Suite names accepted by run_verify, excluding "all".
const std::vector<std::string>& verify_suite_names();

// Runs one suite ("eigen", "connection-a", "connection-c", "cocycle",
// "symmetric", "classical", "appendixB") or "all".  Each suite derives its
// own seed from opts.seed and the suite name, so a suite run alone matches
// its section inside "all".
VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts);

}  // namespace awconn
