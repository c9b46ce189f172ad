#pragma once

#include <stdexcept>
#include <string>

namespace spiderfam {

// Inverting a truncated series whose constant term is zero.
struct NotAUnitError : std::domain_error {
  explicit NotAUnitError(const std::string& what) : std::domain_error(what) {}
};

// A divided-difference coordinate came out with the wrong t-adic order.
struct OrderCollapseError : std::domain_error {
  explicit OrderCollapseError(const std::string& what) : std::domain_error(what) {}
};

// The candidate basis matrix is rank-deficient for this spider type.
struct BasisDegenerateError : std::domain_error {
  explicit BasisDegenerateError(const std::string& what) : std::domain_error(what) {}
};

// Two monomials of a relation share the maximal weight, so the Rees
// homogenization has no unique leading term.
struct TiedLeadingWeightError : std::domain_error {
  explicit TiedLeadingWeightError(const std::string& what) : std::domain_error(what) {}
};

// No weight vector up to the scan bound satisfies all border inequalities.
struct NoFeasibleWeightsError : std::runtime_error {
  explicit NoFeasibleWeightsError(const std::string& what) : std::runtime_error(what) {}
};

// A fiber that should be Artinian is not.
struct InfiniteDimensionalError : std::runtime_error {
  explicit InfiniteDimensionalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spiderfam
