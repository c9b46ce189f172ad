// Exercises the installed command-line surface: subcommands, exit codes,
// and determinism of the emitted artifacts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_test_output.txt";
  const std::string cmd =
      std::string(SPIDERFAM_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
  return {WEXITSTATUS(status), ss.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("derive + verify round trip through the CLI") {
  auto derive = run_cli("derive --legs 7,7,7 --out cli_fam777.json");
  CHECK(derive.exit_code == 0);
  CHECK(derive.output.find("weights: (15,16,17)") != std::string::npos);
  CHECK(derive.output.find("margin 120 > 119") != std::string::npos);

  auto verify = run_cli("verify cli_fam777.json");
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("VERIFY OK") != std::string::npos);
  CHECK(verify.output.find("fiber dimension at lambda = 1/3 is 22") != std::string::npos);

  auto custom = run_cli("verify cli_fam777.json --lambdas 5,-3/7");
  CHECK(custom.exit_code == 0);
  CHECK(custom.output.find("lambda = -3/7 is 22") != std::string::npos);
}

TEST_CASE("derive output is byte-identical across runs") {
  auto first = run_cli("derive --legs 2,2 --out cli_a.json");
  auto second = run_cli("derive --legs 2,2 --out cli_b.json");
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  const std::string a = read_file("cli_a.json"), b = read_file("cli_b.json");
  CHECK(!a.empty());
  CHECK(a == b);
  // The human report is deterministic too, up to the output path name.
  CHECK(first.output.substr(0, first.output.find("descriptor written")) ==
        second.output.substr(0, second.output.find("descriptor written")));
  std::remove("cli_a.json");
  std::remove("cli_b.json");
}

TEST_CASE("custom Mobius parameters survive the derive/verify round trip") {
  auto derive = run_cli("derive --legs 1,1 --a-values 2,5 --out cli_av.json");
  CHECK(derive.exit_code == 0);
  auto verify = run_cli("verify cli_av.json --lambdas 0,1,2");
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("VERIFY OK") != std::string::npos);
  CHECK(run_cli("derive --legs 1,1 --a-values 2,2").exit_code == 2);
  std::remove("cli_av.json");
}

TEST_CASE("--stamp adds metadata without touching the payload") {
  REQUIRE(run_cli("derive --legs 1,1 --out cli_plain.json").exit_code == 0);
  REQUIRE(run_cli("derive --legs 1,1 --stamp --out cli_stamped.json").exit_code == 0);
  const std::string plain = read_file("cli_plain.json");
  const std::string stamped = read_file("cli_stamped.json");
  CHECK(plain.find("\"created\"") == std::string::npos);
  CHECK(stamped.find("\"created\"") != std::string::npos);
  CHECK(run_cli("verify cli_stamped.json").exit_code == 0);
  std::remove("cli_plain.json");
  std::remove("cli_stamped.json");
}

TEST_CASE("general weight search via the CLI flag") {
  auto normal = run_cli("derive --legs 1,1 --general-weights --out cli_gw.json");
  CHECK(normal.exit_code == 0);
  CHECK(normal.output.find("weights: (1,1)") != std::string::npos);
  CHECK(run_cli("verify cli_gw.json").exit_code == 0);
  std::remove("cli_gw.json");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("derive --legs 0,7").exit_code == 2);
  CHECK(run_cli("derive").exit_code == 2);
  CHECK(run_cli("verify no_such_file.json").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("derive --legs 7,7,7 --weights 14,15,16").exit_code == 2);
}

TEST_CASE("degenerate ascending-leg types are reported, exit status 1") {
  auto r = run_cli("derive --legs 1,2");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("rank") != std::string::npos);
}

TEST_CASE("tampered descriptors fail verification with status 1") {
  REQUIRE(run_cli("derive --legs 7,7,7 --out cli_tamper.json").exit_code == 0);
  std::string text = read_file("cli_tamper.json");
  const auto pos = text.find("\"2298\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"2299\"");
  std::ofstream("cli_tamper.json") << text;

  auto verify = run_cli("verify cli_tamper.json");
  CHECK(verify.exit_code == 1);
  CHECK(verify.output.find("FAIL") != std::string::npos);
  CHECK(verify.output.find("first failing check: relation check") != std::string::npos);
  std::remove("cli_tamper.json");
}

TEST_CASE("emit writes scripts and rejects unknown dialects") {
  REQUIRE(run_cli("derive --legs 1,1 --out cli_fam11.json").exit_code == 0);
  auto m2 = run_cli("emit cli_fam11.json --dialect m2 --out cli_fam11.m2");
  CHECK(m2.exit_code == 0);
  const std::string script = read_file("cli_fam11.m2");
  CHECK(script.find("assert(gx == 0);") != std::string::npos);

  auto sage = run_cli("emit cli_fam11.json --dialect sage");
  CHECK(sage.exit_code == 0);
  CHECK(sage.output.find("vector_space_dimension() == 3") != std::string::npos);

  CHECK(run_cli("emit cli_fam11.json --dialect maple").exit_code == 2);
  std::remove("cli_fam11.json");
  std::remove("cli_fam11.m2");
}

TEST_CASE("report-weights prints the margin table") {
  auto ok = run_cli("report-weights --legs 7,7,7");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("margin 120 > 119") != std::string::npos);

  auto bad = run_cli("report-weights --legs 7,7,7 --weights 14,15,16");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("VIOLATED") != std::string::npos);
  CHECK(bad.output.find("112 <= 112") != std::string::npos);
}

TEST_CASE("cleanup") { std::remove("cli_fam777.json"); }
