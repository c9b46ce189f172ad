// spiderfam: derive, verify, and export flat spider-to-curvilinear
// families.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 internal invariant violation.
#include <ctime>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spiderfam/descriptor.hpp"
#include "spiderfam/emit.hpp"
#include "spiderfam/errors.hpp"
#include "spiderfam/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace spiderfam;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::vector<unsigned> parse_legs(const std::string& s) {
  std::vector<unsigned> legs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty leg entry in \"" + s + "\"");
    const long v = std::stol(item);
    if (v < 1) throw std::invalid_argument("legs must be >= 1, got " + item);
    legs.push_back(static_cast<unsigned>(v));
  }
  if (legs.empty()) throw std::invalid_argument("no legs given");
  return legs;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::from_string(item));
  return out;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

std::string utc_now() {
  char buf[32];
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void print_margin_table(std::ostream& os, const std::vector<Relation>& relations,
                        const WeightVector& weights, std::size_t num_legs) {
  const auto names = ring_names(num_legs);
  const auto margins = weight_margins(relations, weights);
  os << "border weight margins for weights " << weights.str() << ":\n";
  for (const auto& wm : margins) {
    os << "  f" << wm.relation_index + 1 << ": border " << wm.border.str(names) << " (w="
       << wm.border_weight << ")";
    if (wm.heaviest_tail) {
      os << "  heaviest tail " << wm.heaviest_tail->str(names) << " (w=" << wm.tail_weight
         << ")  margin " << wm.border_weight << (wm.margin > 0 ? " > " : " <= ")
         << wm.tail_weight << (wm.margin > 0 ? "" : "  VIOLATED");
    } else {
      os << "  no tail terms";
    }
    os << "\n";
  }
}

void print_family_report(std::ostream& os, const ReesFamily& fam) {
  const auto names = ring_names(fam.spider.num_legs());
  const MonomialOrder ord = family_order(fam);
  os << "spider type " << fam.spider.str() << ", colength " << fam.spider.colength() << "\n";
  os << "a-values:";
  for (const auto& a : fam.a_values) os << " " << a.str();
  os << "\n";
  os << "generic relations:\n";
  for (std::size_t i = 0; i < fam.relations.size(); ++i)
    os << "  r" << i + 1 << ": " << poly_to_string(fam.relations[i].polynomial, ord, names)
       << "\n";
  os << "weights: " << fam.weights.str() << "\n";
  print_margin_table(os, fam.relations, fam.weights, fam.spider.num_legs());
  os << "family generators over Q[" << names[1];
  for (std::size_t i = 2; i < names.size(); ++i) os << "," << names[i];
  os << ",eps]:\n";
  for (std::size_t i = 0; i < fam.family.size(); ++i)
    os << "  f" << i + 1 << " = " << poly_to_string(fam.family[i], ord, names) << "\n";
  if (fam.constant_in_epsilon)
    os << "note: single-leg type, the family is constant in eps\n";
}

int run_derive(const std::string& legs_str, const std::string& a_values_str,
               const std::string& weights_str, bool general_search,
               const std::string& out_path, bool stamp) {
  SpiderType spider{parse_legs(legs_str)};
  FamilyOptions opts;
  if (!a_values_str.empty()) opts.a_values = parse_rationals(a_values_str);
  if (!weights_str.empty()) opts.weights = WeightVector(parse_longs(weights_str));
  opts.general_weight_search = general_search;

  const ReesFamily fam = build_family(spider, opts);
  FamilyDescriptor desc = make_descriptor(fam);
  if (stamp) desc.created = utc_now();

  if (out_path.empty()) {
    print_family_report(std::cerr, fam);
    std::cout << serialize_descriptor(desc);
  } else {
    save_descriptor(desc, out_path);
    print_family_report(std::cout, fam);
    std::cout << "descriptor written to " << out_path << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& lambdas_str) {
  const ReesFamily fam = family_from_descriptor(load_descriptor(path));
  const std::vector<Rational> lambdas =
      lambdas_str.empty() ? default_lambda_set() : parse_rationals(lambdas_str);
  const std::size_t n = fam.spider.colength();
  const auto names = ring_names(fam.spider.num_legs());
  bool ok = true;
  std::string first_failure;

  auto check = [&](bool pass, const std::string& label) {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << label << "\n";
    if (!pass && ok) first_failure = label;
    ok = ok && pass;
  };

  // Relations: every generator at eps = 1 must vanish as a series.
  for (std::size_t i = 0; i < fam.family.size(); ++i) {
    bool pass = false;
    try {
      pass = verify_relation(fam.family[i].substitute(0, Rational(1)), fam.spider,
                             fam.a_values);
    } catch (const std::exception&) {
      pass = false;
    }
    check(pass, "relation check: f" + std::to_string(i + 1) + " at eps=1 vanishes in Q[t]/(t^" +
                    std::to_string(n) + ")");
  }

  check(check_special_fiber(fam), "special fiber equals the spider monomial ideal");

  // Fiber dimensions (independent computations; order of output fixed).
  std::vector<FiberReport> reports(lambdas.size());
  std::vector<std::string> errors(lambdas.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    try {
      reports[k] = fiber_dimension(fam, lambdas[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (!errors[k].empty()) {
      check(false, "fiber dimension at lambda = " + lambdas[k].str() + " (" + errors[k] + ")");
      continue;
    }
    check(reports[k].dimension == n,
          "fiber dimension at lambda = " + lambdas[k].str() + " is " +
              std::to_string(reports[k].dimension) + " (want " + std::to_string(n) + ")");
  }

  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (lambdas[k].is_zero() || !errors[k].empty()) continue;
    FiberReport rep;
    std::string err;
    try {
      rep = check_curvilinear_fiber(fam, lambdas[k]);
    } catch (const std::exception& e) {
      err = e.what();
    }
    if (!err.empty()) {
      check(false, "curvilinear fiber at lambda = " + lambdas[k].str() + " (" + err + ")");
      continue;
    }
    if (rep.is_curvilinear && *rep.is_curvilinear) {
      check(true, "curvilinear fiber at lambda = " + lambdas[k].str() + ": lex basis " +
                      rep.gb_shape);
    } else if (rep.dimension == n) {
      check(false, "curvilinear fiber at lambda = " + lambdas[k].str() +
                       ": dimension correct, shape unexpected (" + rep.gb_shape + ")");
    } else {
      check(false, "curvilinear fiber at lambda = " + lambdas[k].str() + ": dimension " +
                       std::to_string(rep.dimension) + ", shape " + rep.gb_shape);
    }
  }

  const FlatnessCertificate cert = flatness_certificate(fam);
  check(cert.all_reduce_to_zero,
        "flatness: all " + std::to_string(cert.spair_count) + " S-polynomials reduce to zero");
  check(cert.module_rank == n, "flatness: eps-free standard monomial count " +
                                   std::to_string(cert.module_rank) + " (want " +
                                   std::to_string(n) + ")");

  if (!ok) {
    std::cout << "VERIFY FAILED: first failing check: " << first_failure << "\n";
    return kExitVerifyFailed;
  }
  std::cout << "VERIFY OK: family of type " << fam.spider.str() << ", all checks passed\n";
  return kExitOk;
}

int run_emit(const std::string& path, const std::string& dialect, const std::string& out_path,
             const std::string& lambdas_str) {
  const ReesFamily fam = family_from_descriptor(load_descriptor(path));
  const std::vector<Rational> lambdas =
      lambdas_str.empty() ? default_lambda_set() : parse_rationals(lambdas_str);
  const VerificationScript script = emit_script(fam, dialect, lambdas);
  if (out_path.empty()) {
    std::cout << script.body;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << script.body;
    std::cout << "script (" << script.dialect << ") written to " << out_path << "\n";
  }
  return kExitOk;
}

int run_report_weights(const std::string& legs_str, const std::string& weights_str,
                       const std::string& a_values_str) {
  SpiderType spider{parse_legs(legs_str)};
  const SpiderBasis basis = a_values_str.empty()
                                ? build_basis(spider)
                                : build_basis(spider, parse_rationals(a_values_str));
  const auto relations = derive_relations(basis);
  // An explicit weight vector is reported even when infeasible; that is
  // the point of the table.
  const WeightVector weights = weights_str.empty() ? select_weights(relations, spider)
                                                   : WeightVector(parse_longs(weights_str));
  print_margin_table(std::cout, relations, weights, spider.num_legs());
  if (!weights_feasible(relations, weights)) {
    std::cout << "weights " << weights.str() << " are infeasible for type " << spider.str()
              << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spiderfam: explicit flat families from spider algebras to curvilinear ones"};
  app.require_subcommand(1);

  std::string legs, a_values, weights, out_path, lambdas, dialect = "m2", family_path;
  bool general_search = false, stamp = false;

  auto* derive = app.add_subcommand("derive", "derive the family for a spider type");
  derive->add_option("--legs", legs, "leg lengths, e.g. 7,7,7")->required();
  derive->add_option("--a-values", a_values, "Mobius parameters (default 1,2,...,r)");
  derive->add_option("--weights", weights, "manual weight vector override (validated)");
  derive->add_flag("--general-weights", general_search,
                   "search arbitrary weight vectors instead of consecutive ones");
  derive->add_option("--out", out_path, "descriptor output path (default: stdout)");
  derive->add_flag("--stamp", stamp, "add a creation timestamp to the metadata");

  auto* verify = app.add_subcommand("verify", "verify a family descriptor");
  verify->add_option("family", family_path, "descriptor path")->required();
  verify->add_option("--lambdas", lambdas, "fiber values, e.g. 0,1,2,-1,1/2,1/3");

  auto* emit = app.add_subcommand("emit", "emit an external CAS verification script");
  emit->add_option("family", family_path, "descriptor path")->required();
  emit->add_option("--dialect", dialect, "script dialect: m2 or sage");
  emit->add_option("--out", out_path, "script output path (default: stdout)");
  emit->add_option("--lambdas", lambdas, "fiber values for the script");

  auto* report = app.add_subcommand("report-weights", "print the border margin table");
  report->add_option("--legs", legs, "leg lengths, e.g. 7,7,7")->required();
  report->add_option("--weights", weights, "weight vector to report (default: selected)");
  report->add_option("--a-values", a_values, "Mobius parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(derive))
      return run_derive(legs, a_values, weights, general_search, out_path, stamp);
    if (app.got_subcommand(verify)) return run_verify(family_path, lambdas);
    if (app.got_subcommand(emit)) return run_emit(family_path, dialect, out_path, lambdas);
    if (app.got_subcommand(report)) return run_report_weights(legs, weights, a_values);
  } catch (const UnknownDialectError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoFeasibleWeightsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const spiderfam::BasisDegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
