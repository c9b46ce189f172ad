#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "spiderfam/emit.hpp"

using namespace spiderfam;

namespace {

std::string strip_whitespace(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Emitted body minus comment lines, whitespace removed.
std::string normalized_code(const std::string& body, const std::string& comment_prefix) {
  std::istringstream in(body);
  std::string line, out;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line.compare(first, comment_prefix.size(),
                                                   comment_prefix) == 0)
      continue;
    out += line;
  }
  return strip_whitespace(out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("m2 script for (7,7,7) contains the golden assertion block verbatim") {
  const VerificationScript script = emit_script(build_family(SpiderType({7, 7, 7})), "m2");
  const std::string golden =
      strip_whitespace(read_file(std::string(SPIDERFAM_GOLDEN_DIR) + "/assertions_777.m2"));
  const std::string emitted = normalized_code(script.body, "--");
  CHECK(emitted.find(golden) != std::string::npos);
  CHECK(script.body.find("assert(gy == 0);") != std::string::npos);
  CHECK(script.body.find("assert(2*y*z == z - 2*y + 2*x^2 - 4*y^2);") != std::string::npos);
  CHECK(script.body.find("- 581*z^2;") != std::string::npos);
  CHECK(script.body.find("assert(z^8 == 0);") != std::string::npos);
  // Six fiber blocks, each checking 22 standard monomials.
  for (int k = 0; k < 6; ++k)
    CHECK(script.body.find("fib" + std::to_string(k) + " = ideal(") != std::string::npos);
  CHECK(script.body.find("== 22);") != std::string::npos);
}

TEST_CASE("m2 script for (1,1) asserts x^2 = y in Q[t]/(t^3)") {
  const VerificationScript script = emit_script(build_family(SpiderType({1, 1})), "m2");
  CHECK(script.body.find("R = QQ[t]/ideal(t^3);") != std::string::npos);
  CHECK(script.body.find("x = t*s1;") != std::string::npos);
  CHECK(script.body.find("y = t^2*s1*s2;") != std::string::npos);
  CHECK(script.body.find("assert(x*y == 0);") != std::string::npos);
  CHECK(script.body.find("gx = x^2 - y;") != std::string::npos);
  CHECK(script.body.find("assert(gx == 0);") != std::string::npos);
  CHECK(script.body.find("assert(y^2 == 0);") != std::string::npos);
}

TEST_CASE("sage dialect mirrors the checks") {
  const VerificationScript script = emit_script(build_family(SpiderType({7, 7, 7})), "sage");
  CHECK(script.dialect == "sage");
  CHECK(script.body.find("P.<t> = PolynomialRing(QQ)") != std::string::npos);
  CHECK(script.body.find("assert tr(x*y - (y - x^2)) == 0") != std::string::npos);
  CHECK(script.body.find("assert tr(gx) == 0") != std::string::npos);
  CHECK(script.body.find("assert tr(gy) == 0") != std::string::npos);
  CHECK(script.body.find(".vector_space_dimension() == 22") != std::string::npos);
}

TEST_CASE("unknown dialects are rejected") {
  CHECK_THROWS_AS(emit_script(build_family(SpiderType({1, 1})), "maple"), UnknownDialectError);
}

TEST_CASE("custom a-values switch the script to difference form") {
  FamilyOptions opts;
  opts.a_values = {Rational(2), Rational(5)};
  const ReesFamily fam = build_family(SpiderType({1, 1}), opts);
  const VerificationScript script = emit_script(fam, "m2");
  CHECK(script.body.find("u1 = t*s1;") != std::string::npos);
  CHECK(script.body.find("y = u2 - u1;") != std::string::npos);
  CHECK(script.body.find("(5*t)^i") != std::string::npos);
}

TEST_CASE("lambda overrides flow into the fiber section") {
  const VerificationScript script =
      emit_script(build_family(SpiderType({1, 1})), "m2", {Rational(7)});
  CHECK(script.body.find("-- eps = 7") != std::string::npos);
  CHECK(script.body.find("fib1") == std::string::npos);
}
