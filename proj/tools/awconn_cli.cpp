// Command line front end: construct E_r / P_n, emit transition matrices,
// and run the seeded verification suites.
//
// Exit codes: 0 success, 2 parse/usage failure, 3 non-generic parameters
// (the vanishing factor is named on stderr), 4 genericity unreachable while
// sampling, 1 verification failures.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "awconn/aw_polys.hpp"
#include "awconn/connection.hpp"
#include "awconn/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitNonGeneric = 3;
constexpr int kExitSamplingExhausted = 4;

struct ParamFlags {
  std::string a, b, c, d, q;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "parameter a (rational p/q)")->required();
    cmd->add_option("--b", b, "parameter b")->required();
    cmd->add_option("--c", c, "parameter c")->required();
    cmd->add_option("--d", d, "parameter d")->required();
    cmd->add_option("--q", q, "parameter q")->required();
  }
  awconn::ParamSet parse() const {
    return {awconn::Rat::parse(a), awconn::Rat::parse(b),
            awconn::Rat::parse(c), awconn::Rat::parse(d),
            awconn::Rat::parse(q)};
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Askey-Wilson connection coefficient toolkit"};
  app.require_subcommand(1);

  int cap = 12;
  app.add_option("--cap", cap, "hard cap on the truncation N")
      ->capture_default_str();

  // --- epoly / ppoly ---
  ParamFlags ep_params, pp_params;
  int ep_r = 0, pp_n = 0;
  std::string ep_out, pp_out;
  CLI::App* epoly = app.add_subcommand("epoly", "emit E_r as JSON");
  epoly->fallthrough();  // so --cap may follow the subcommand name
  ep_params.attach(epoly);
  epoly->add_option("--r", ep_r, "zig-zag index r")->required();
  epoly->add_option("--out", ep_out, "output path (default stdout)");
  CLI::App* ppoly = app.add_subcommand("ppoly", "emit P_n as JSON");
  ppoly->fallthrough();
  pp_params.attach(ppoly);
  ppoly->add_option("--n", pp_n, "degree n >= 0")->required();
  ppoly->add_option("--out", pp_out, "output path (default stdout)");

  // --- connect ---
  ParamFlags cn_params;
  std::string cn_shift = "a", cn_e, cn_g, cn_format = "json", cn_out;
  int cn_N = 6;
  bool cn_oracle = false;
  CLI::App* connect =
      app.add_subcommand("connect", "emit the transition matrix for a shift");
  connect->fallthrough();
  cn_params.attach(connect);
  connect->add_option("--shift", cn_shift, "shifted parameter: a or c")
      ->check(CLI::IsMember({"a", "c"}))
      ->capture_default_str();
  connect->add_option("--e", cn_e, "new a value (shift a)");
  connect->add_option("--g", cn_g, "new c value (shift c)");
  connect->add_option("--N", cn_N, "truncation")->capture_default_str();
  connect->add_flag("--oracle", cn_oracle,
                    "also emit the brute-force matrix and a diff summary");
  connect->add_option("--format", cn_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  connect->add_option("--out", cn_out, "output path (default stdout)");

  // --- verify ---
  std::string vf_suite, vf_out;
  int vf_N = 6, vf_M = 5;
  std::uint64_t vf_seed = 0;
  bool vf_allow_negative = false;
  CLI::App* verify =
      app.add_subcommand("verify", "run a seeded verification suite");
  verify->fallthrough();
  {
    std::vector<std::string> names = awconn::verify_suite_names();
    names.push_back("all");
    verify->add_option("suite", vf_suite, "suite name")
        ->required()
        ->check(CLI::IsMember(names));
  }
  verify->add_option("--N", vf_N, "truncation / max degree")
      ->capture_default_str();
  verify->add_option("--M", vf_M, "number of random tuples")
      ->capture_default_str();
  verify->add_option("--seed", vf_seed, "random seed")->capture_default_str();
  verify->add_flag("--allow-negative", vf_allow_negative,
                   "sample negative parameter values too");
  verify->add_option("--out", vf_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (epoly->parsed()) {
      const awconn::ParamSet p = ep_params.parse();
      awconn::require_generic(p, std::max(std::abs(ep_r), 1));
      emit(awconn::nonsymmetric_E(awconn::zz(ep_r), p).poly.json() + "\n",
           ep_out);
      return 0;
    }
    if (ppoly->parsed()) {
      if (pp_n < 0) throw std::invalid_argument("ppoly: --n must be >= 0");
      const awconn::ParamSet p = pp_params.parse();
      awconn::require_generic(p, std::max(pp_n, 1));
      emit(awconn::hecke_symmetrize(pp_n, p).json() + "\n", pp_out);
      return 0;
    }
    if (connect->parsed()) {
      if (cn_N < 0 || cn_N > cap)
        throw std::invalid_argument("connect: --N must be in [0, " +
                                    std::to_string(cap) + "]");
      const awconn::ParamSet p = cn_params.parse();
      const bool shift_a = cn_shift == "a";
      const std::string& target_str = shift_a ? cn_e : cn_g;
      if (target_str.empty())
        throw std::invalid_argument(shift_a ? "connect: --e required"
                                            : "connect: --g required");
      const awconn::ShiftSpec spec{
          shift_a ? awconn::ShiftKind::a : awconn::ShiftKind::c, p,
          awconn::Rat::parse(target_str)};
      const awconn::TransitionMatrix closed =
          awconn::transition_matrix_closed(spec, cn_N);
      std::string text;
      if (cn_oracle) {
        const awconn::TransitionMatrix oracle =
            awconn::transition_matrix_oracle(spec, cn_N);
        const std::string summary =
            std::to_string(closed.mismatches(oracle)) + " mismatches";
        if (cn_format == "json") {
          text = "{\"closed\":" + closed.json() +
                 ",\"oracle\":" + oracle.json() + ",\"diff\":\"" + summary +
                 "\"}\n";
        } else {
          text = closed.csv() + "\n" + oracle.csv() + "\n" + summary + "\n";
        }
      } else {
        text = cn_format == "json" ? closed.json() + "\n" : closed.csv();
      }
      emit(text, cn_out);
      return 0;
    }
    if (verify->parsed()) {
      if (vf_N < 0 || vf_N > cap)
        throw std::invalid_argument("verify: --N must be in [0, " +
                                    std::to_string(cap) + "]");
      awconn::VerifyOptions opts;
      opts.N = vf_N;
      opts.M = vf_M;
      opts.seed = vf_seed;
      opts.allow_negative = vf_allow_negative;
      const awconn::VerifyReport report = awconn::run_verify(vf_suite, opts);
      emit(report.json(), vf_out);
      return report.pass() ? 0 : kExitVerifyFailed;
    }
  } catch (const awconn::non_generic_error& e) {
    std::cerr << e.what() << "\n";
    return kExitNonGeneric;
  } catch (const awconn::genericity_exhausted& e) {
    std::cerr << e.what() << "\n";
    return kExitSamplingExhausted;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
