// Emitters for external computer-algebra verification scripts. The
// Macaulay2 dialect asserts every relation inside Q[t]/(t^n) and checks
// the fiber dimensions; the Sage dialect mirrors it.
#pragma once

#include <string>
#include <vector>

#include "spiderfam/spider.hpp"

namespace spiderfam {

struct VerificationScript {
  std::string dialect;  // "m2" or "sage"
  std::string body;
};

struct UnknownDialectError : std::invalid_argument {
  explicit UnknownDialectError(const std::string& what) : std::invalid_argument(what) {}
};

std::vector<Rational> default_lambda_set();

VerificationScript emit_script(const ReesFamily& family, const std::string& dialect);
VerificationScript emit_script(const ReesFamily& family, const std::string& dialect,
                               const std::vector<Rational>& lambdas);

}  // namespace spiderfam
