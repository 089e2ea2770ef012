// End-to-end checks of the command line tool: output bytes and the exit
// code contract (0 ok, 1 verification failed, 2 parse, 3 non-generic,
// 4 sampling exhausted).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = ::testing::TempDir() + "/cli_out.txt";
  const std::string cmd =
      std::string(AWCONN_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return {WEXITSTATUS(status), text.str()};
}

TEST(Cli, EpolyFrozenOutput) {
  const RunResult r =
      run_cli("epoly --a 2 --b 3 --c 5 --d 7 --q 1/2 --r -1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "{\"-1\":\"1/1\",\"0\":\"-67/209\"}\n");
}

TEST(Cli, EpolyDegreeZero) {
  const RunResult r = run_cli("epoly --a 2 --b 3 --c 5 --d 7 --q 1/2 --r 0");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "{\"0\":\"1/1\"}\n");
}

TEST(Cli, PpolyDegreeZero) {
  const RunResult r = run_cli("ppoly --a 2 --b 3 --c 5 --d 7 --q 1/2 --n 0");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "{\"0\":\"1/1\"}\n");
}

TEST(Cli, ParseFailureExitsTwo) {
  EXPECT_EQ(run_cli("epoly --a nope --b 3 --c 5 --d 7 --q 1/2 --r 0").exit_code,
            2);
  EXPECT_EQ(run_cli("epoly --a 2").exit_code, 2);       // missing flags
  EXPECT_EQ(run_cli("verify nosuchsuite").exit_code, 2);
  EXPECT_EQ(run_cli("connect --a 2 --b 3 --c 5 --d 7 --q 1/2 --shift a "
                    "--e 2 --N 99")
                .exit_code,
            2);  // above the hard cap
  EXPECT_EQ(run_cli("verify eigen --N 13").exit_code, 2);
  EXPECT_EQ(run_cli("connect --a 2 --b 3 --c 5 --d 7 --q 1/2 --shift a "
                    "--e 2 --N 13 --cap 14")
                .exit_code,
            0);  // raised cap admits N = 13
}

TEST(Cli, ConnectZeroTruncation) {
  const RunResult r = run_cli(
      "connect --a 2 --b 3 --c 5 --d 7 --q 1/2 --shift a --e 9/4 --N 0 "
      "--format csv");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "E0\n1/1\n");
}

TEST(Cli, NonGenericExitsThreeNamingFactor) {
  const RunResult r =
      run_cli("epoly --a 3 --b 1 --c 2/3 --d 1 --q 1/2 --r 1");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.output.find("abcd*q^1 - 1"), std::string::npos);
}

TEST(Cli, ConnectIdentityAtNoShift) {
  const RunResult r = run_cli(
      "connect --a 2 --b 3 --c 5 --d 7 --q 1/2 --shift a --e 2 --N 1 "
      "--format csv");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "E0,E1,E-1\n1/1,0/1,0/1\n0/1,1/1,0/1\n0/1,0/1,1/1\n");
}

TEST(Cli, ConnectOracleDiffSummary) {
  const RunResult a = run_cli(
      "connect --a 2 --b 3 --c 5 --d 7 --q 1/2 --shift a --e 9/4 --N 4 "
      "--oracle");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_NE(a.output.find("\"diff\":\"0 mismatches\""), std::string::npos);
  const RunResult c = run_cli(
      "connect --a 2 --b 3 --c 5 --d 7 --q 1/2 --shift c --g 11/3 --N 4 "
      "--oracle --format csv");
  EXPECT_EQ(c.exit_code, 0);
  EXPECT_NE(c.output.find("0 mismatches"), std::string::npos);
}

TEST(Cli, VerifySmallSuitePasses) {
  const RunResult r = run_cli("verify appendixB --N 3 --M 1 --seed 5");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"pass\": true"), std::string::npos);
}

TEST(Cli, VerifyDeterministicBytes) {
  const RunResult r1 = run_cli("verify classical --N 4 --M 1 --seed 42");
  const RunResult r2 = run_cli("verify classical --N 4 --M 1 --seed 42");
  EXPECT_EQ(r1.exit_code, 0);
  EXPECT_EQ(r1.output, r2.output);
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = ::testing::TempDir() + "/epoly.json";
  const RunResult r = run_cli(
      "epoly --a 2 --b 3 --c 5 --d 7 --q 1/2 --r 0 --out " + path);
  EXPECT_EQ(r.exit_code, 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "{\"0\":\"1/1\"}");
}

}  // namespace
