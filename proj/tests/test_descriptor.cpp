#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "spiderfam/descriptor.hpp"
#include "spiderfam/verify.hpp"

using namespace spiderfam;

namespace {

const std::vector<std::vector<unsigned>> kCorpus = {
    {1, 1}, {3}, {2, 2}, {2, 1}, {3, 3, 1}, {7, 7, 7}};

}  // namespace

TEST_CASE("descriptor round-trips losslessly over the corpus") {
  for (const auto& legs : kCorpus) {
    const ReesFamily fam = build_family(SpiderType(legs));
    const FamilyDescriptor d = make_descriptor(fam);
    CHECK(parse_descriptor(serialize_descriptor(d)) == d);
  }
}

TEST_CASE("descriptor serialization is deterministic across derivations") {
  const std::string a = serialize_descriptor(make_descriptor(build_family(SpiderType({2, 2}))));
  const std::string b = serialize_descriptor(make_descriptor(build_family(SpiderType({2, 2}))));
  CHECK(a == b);
  CHECK(a.find("schema_version") != std::string::npos);
  CHECK(a.find("created") == std::string::npos);  // no timestamp unless stamped
}

TEST_CASE("coefficients are stored as integer strings") {
  const FamilyDescriptor d = make_descriptor(build_family(SpiderType({7, 7, 7})));
  bool saw_2298 = false;
  for (const auto& gen : d.generators) {
    for (const auto& term : gen.terms) {
      CHECK(term.coeff.find('.') == std::string::npos);
      CHECK(term.coeff.find('/') == std::string::npos);
      if (term.coeff == "2298") saw_2298 = true;
    }
  }
  CHECK(saw_2298);
}

TEST_CASE("family reconstructed from a descriptor matches the original") {
  for (const auto& legs : kCorpus) {
    const ReesFamily fam = build_family(SpiderType(legs));
    const ReesFamily back =
        family_from_descriptor(parse_descriptor(serialize_descriptor(make_descriptor(fam))));
    CHECK(back.spider == fam.spider);
    CHECK(back.weights == fam.weights);
    CHECK(back.family == fam.family);
    CHECK(back.borders == fam.borders);
    REQUIRE(back.relations.size() == fam.relations.size());
    for (std::size_t k = 0; k < fam.relations.size(); ++k) {
      CHECK(back.relations[k].polynomial == fam.relations[k].polynomial);
      CHECK(back.relations[k].kind == fam.relations[k].kind);
    }
    CHECK(back.constant_in_epsilon == fam.constant_in_epsilon);
  }
}

TEST_CASE("descriptor file save and load") {
  const std::string path = "descriptor_roundtrip_test.json";
  const FamilyDescriptor d = make_descriptor(build_family(SpiderType({1, 1})));
  save_descriptor(d, path);
  CHECK(load_descriptor(path) == d);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_descriptor("does_not_exist.json"), std::invalid_argument);
}

TEST_CASE("malformed descriptors are rejected") {
  CHECK_THROWS_AS(parse_descriptor("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("{\"schema_version\":\"1\"}"), std::invalid_argument);

  FamilyDescriptor d = make_descriptor(build_family(SpiderType({1, 1})));
  d.schema_version = "2";
  CHECK_THROWS_AS(family_from_descriptor(d), std::invalid_argument);

  FamilyDescriptor bad_coeff = make_descriptor(build_family(SpiderType({1, 1})));
  bad_coeff.generators[0].terms[0].coeff = "1/2";
  CHECK_THROWS_AS(family_from_descriptor(bad_coeff), std::invalid_argument);

  FamilyDescriptor bad_exps = make_descriptor(build_family(SpiderType({1, 1})));
  bad_exps.generators[0].terms[0].exps = {0, 1};
  CHECK_THROWS_AS(family_from_descriptor(bad_exps), std::invalid_argument);
}

TEST_CASE("a tampered coefficient is caught by the relation check") {
  FamilyDescriptor d = make_descriptor(build_family(SpiderType({7, 7, 7})));
  for (auto& gen : d.generators)
    for (auto& term : gen.terms)
      if (term.coeff == "2298") term.coeff = "2299";
  const ReesFamily tampered = family_from_descriptor(d);
  bool all_ok = true;
  for (const auto& f : tampered.family) {
    if (!verify_relation(f.substitute(0, Rational(1)), tampered.spider, tampered.a_values))
      all_ok = false;
  }
  CHECK(!all_ok);
}
