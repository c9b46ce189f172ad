// Persistent family descriptors: a self-describing JSON document with
// integer coefficients as decimal strings (no consumer ever parses a
// float). Serialization is deterministic; timestamps are opt-in and live
// outside the generator payload.
#pragma once

#include <string>
#include <vector>

#include "spiderfam/spider.hpp"

namespace spiderfam {

struct DescriptorTerm {
  std::string coeff;            // decimal integer string
  std::vector<unsigned> exps;   // (eps, x_1, ..., x_r)
};

struct DescriptorGenerator {
  std::vector<DescriptorTerm> terms;  // border term first, then descending
  std::vector<unsigned> border;       // exponent vector of the border monomial
  long border_weight = 0;
};

struct FamilyDescriptor {
  std::string schema_version = "1";
  std::vector<unsigned> legs;
  std::vector<long> weights;
  std::vector<std::string> a_values;   // rational strings
  std::vector<std::string> basis;      // basis monomials, derivation metadata
  std::vector<DescriptorGenerator> generators;
  std::string tool;
  std::string created;                 // empty unless explicitly stamped

  friend bool operator==(const FamilyDescriptor& a, const FamilyDescriptor& b);
};

FamilyDescriptor make_descriptor(const ReesFamily& family);

// Reconstructs the family (relations recovered by setting eps = 1).
// Throws std::invalid_argument on malformed input.
ReesFamily family_from_descriptor(const FamilyDescriptor& d);

std::string serialize_descriptor(const FamilyDescriptor& d);
FamilyDescriptor parse_descriptor(const std::string& text);

FamilyDescriptor load_descriptor(const std::string& path);
void save_descriptor(const FamilyDescriptor& d, const std::string& path);

}  // namespace spiderfam
