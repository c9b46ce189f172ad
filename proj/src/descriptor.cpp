#include "spiderfam/descriptor.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spiderfam/errors.hpp"

namespace spiderfam {

using nlohmann::json;

bool operator==(const FamilyDescriptor& a, const FamilyDescriptor& b) {
  const auto gens_equal = [](const std::vector<DescriptorGenerator>& x,
                             const std::vector<DescriptorGenerator>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].border != y[i].border || x[i].border_weight != y[i].border_weight)
        return false;
      if (x[i].terms.size() != y[i].terms.size()) return false;
      for (std::size_t k = 0; k < x[i].terms.size(); ++k) {
        if (x[i].terms[k].coeff != y[i].terms[k].coeff ||
            x[i].terms[k].exps != y[i].terms[k].exps)
          return false;
      }
    }
    return true;
  };
  // `created` is metadata, not payload.
  return a.schema_version == b.schema_version && a.legs == b.legs &&
         a.weights == b.weights && a.a_values == b.a_values && a.basis == b.basis &&
         a.tool == b.tool && gens_equal(a.generators, b.generators);
}

FamilyDescriptor make_descriptor(const ReesFamily& family) {
  FamilyDescriptor d;
  d.legs = family.spider.legs;
  d.weights = family.weights.values();
  for (const auto& a : family.a_values) d.a_values.push_back(a.str());

  const auto names = ring_names(family.spider.num_legs());
  d.basis.push_back("1");
  for (std::size_t i = 1; i <= family.spider.num_legs(); ++i) {
    for (unsigned k = 1; k <= family.spider.legs[i - 1]; ++k)
      d.basis.push_back(Monomial::var(family.spider.num_legs() + 1, i, k).str(names));
  }

  const MonomialOrder ord = MonomialOrder::weighted_degrevlex(family.weights);
  for (std::size_t g = 0; g < family.family.size(); ++g) {
    const Poly& f = family.family[g];
    DescriptorGenerator gen;
    gen.border = family.borders[g].exps();
    gen.border_weight = family.border_weights[g];

    std::vector<const std::pair<const Monomial, Rational>*> terms;
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
    for (const auto* t : terms) {
      if (!t->second.is_integer())
        throw std::logic_error("make_descriptor: non-integer coefficient");
      gen.terms.push_back({t->second.numerator().get_str(), t->first.exps()});
    }
    d.generators.push_back(std::move(gen));
  }
  d.tool = "spiderfam 1";
  return d;
}

ReesFamily family_from_descriptor(const FamilyDescriptor& d) {
  if (d.schema_version != "1")
    throw std::invalid_argument("descriptor: unsupported schema_version \"" +
                                d.schema_version + "\"");
  SpiderType spider(d.legs);
  const std::size_t nvars = spider.num_legs() + 1;
  if (d.weights.size() != spider.num_legs())
    throw std::invalid_argument("descriptor: weight count does not match legs");
  WeightVector weights(d.weights);

  ReesFamily fam{spider, {}, {}, weights, {}, {}, {}, false};
  if (d.a_values.empty()) {
    for (std::size_t i = 1; i <= spider.num_legs(); ++i)
      fam.a_values.emplace_back(static_cast<long>(i));
  } else {
    for (const auto& s : d.a_values) fam.a_values.push_back(Rational::from_string(s));
  }

  bool uses_eps = false;
  for (const auto& gen : d.generators) {
    Poly f(nvars);
    for (const auto& term : gen.terms) {
      if (term.exps.size() != nvars)
        throw std::invalid_argument("descriptor: exponent vector has wrong length");
      if (term.coeff.find('.') != std::string::npos ||
          term.coeff.find('/') != std::string::npos)
        throw std::invalid_argument("descriptor: coefficients must be integer strings");
      f.add_term(Monomial(term.exps), Rational::from_string(term.coeff));
    }
    if (f.is_zero()) throw std::invalid_argument("descriptor: zero generator");
    if (gen.border.size() != nvars)
      throw std::invalid_argument("descriptor: border vector has wrong length");
    if (f.has_variable(0)) uses_eps = true;

    const Monomial border{std::vector<unsigned>(gen.border)};
    // Mixed borders are squarefree products of two coordinates; everything
    // else is a pure power (vanishing when there is no tail).
    std::size_t vi = 0, vj = 0;
    for (std::size_t v = 1; v < nvars; ++v) {
      if (border.exp(v) == 1) (vi == 0 ? vi : vj) = v;
    }
    const bool mixed = border.coord_degree() == 2 && vj != 0;
    if (!mixed) {
      vj = 0;
      for (std::size_t v = 1; v < nvars; ++v)
        if (border.exp(v)) vi = v;
    }
    Poly relpoly = f.substitute(0, Rational(1));
    RelationKind kind = mixed ? RelationKind::Mixed : RelationKind::PurePower;
    if (!mixed && relpoly.num_terms() == 1) kind = RelationKind::VanishingPower;
    fam.relations.push_back(Relation{std::move(relpoly), border, kind, vi, vj});
    fam.family.push_back(std::move(f));
    fam.borders.push_back(border);
    fam.border_weights.push_back(gen.border_weight);
  }
  fam.constant_in_epsilon = !uses_eps;
  return fam;
}

std::string serialize_descriptor(const FamilyDescriptor& d) {
  json j;
  j["schema_version"] = d.schema_version;
  j["spider"] = {{"legs", d.legs}};
  j["weights"] = d.weights;
  j["generators"] = json::array();
  for (const auto& gen : d.generators) {
    json jg;
    jg["border"] = gen.border;
    jg["border_weight"] = gen.border_weight;
    jg["terms"] = json::array();
    for (const auto& t : gen.terms) jg["terms"].push_back({{"c", t.coeff}, {"e", t.exps}});
    j["generators"].push_back(std::move(jg));
  }
  json meta;
  meta["a_values"] = d.a_values;
  meta["basis"] = d.basis;
  meta["tool"] = d.tool;
  if (!d.created.empty()) meta["created"] = d.created;
  j["metadata"] = std::move(meta);
  return j.dump(2) + "\n";
}

FamilyDescriptor parse_descriptor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("descriptor: invalid JSON: ") + e.what());
  }
  try {
    FamilyDescriptor d;
    d.schema_version = j.at("schema_version").get<std::string>();
    d.legs = j.at("spider").at("legs").get<std::vector<unsigned>>();
    d.weights = j.at("weights").get<std::vector<long>>();
    for (const auto& jg : j.at("generators")) {
      DescriptorGenerator gen;
      gen.border = jg.at("border").get<std::vector<unsigned>>();
      gen.border_weight = jg.at("border_weight").get<long>();
      for (const auto& jt : jg.at("terms")) {
        DescriptorTerm t;
        t.coeff = jt.at("c").get<std::string>();
        t.exps = jt.at("e").get<std::vector<unsigned>>();
        gen.terms.push_back(std::move(t));
      }
      d.generators.push_back(std::move(gen));
    }
    if (j.contains("metadata")) {
      const auto& meta = j.at("metadata");
      if (meta.contains("a_values"))
        d.a_values = meta.at("a_values").get<std::vector<std::string>>();
      if (meta.contains("basis")) d.basis = meta.at("basis").get<std::vector<std::string>>();
      if (meta.contains("tool")) d.tool = meta.at("tool").get<std::string>();
      if (meta.contains("created")) d.created = meta.at("created").get<std::string>();
    }
    return d;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("descriptor: missing or bad field: ") + e.what());
  }
}

FamilyDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("descriptor: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

void save_descriptor(const FamilyDescriptor& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("descriptor: cannot write " + path);
  out << serialize_descriptor(d);
}

}  // namespace spiderfam
