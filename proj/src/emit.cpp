#include "spiderfam/emit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "spiderfam/verify.hpp"

namespace spiderfam {

std::vector<Rational> default_lambda_set() {
  return {Rational(0), Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(1, 3)};
}

namespace {

using Term = std::pair<Monomial, Rational>;

std::string fmt_term(const Rational& c, const Monomial& m,
                     const std::vector<std::string>& names, bool first) {
  std::string s;
  const Rational a = abs(c);
  if (first) {
    if (c.sign() < 0) s += "-";
  } else {
    s += c.sign() < 0 ? " - " : " + ";
  }
  if (m.is_one()) return s + a.str();
  if (!a.is_one()) s += a.str() + "*";
  return s + m.str(names);
}

std::string fmt_terms(const std::vector<Term>& terms, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i)
    s += fmt_term(terms[i].second, terms[i].first, names, i == 0);
  return s;
}

// Display order of a pure-power relation: border first, then for each
// coordinate its linear term followed by the powers from the top down
// to 2 (zero coefficients skipped).
std::vector<Term> pure_relation_terms(const Relation& rel, std::size_t num_legs) {
  const Poly& p = rel.polynomial;
  const std::size_t nvars = num_legs + 1;
  std::vector<Term> out{{rel.border, p.coeff(rel.border)}};
  for (std::size_t v = 1; v <= num_legs; ++v) {
    std::vector<unsigned> exps{1u};
    for (unsigned e = p.degree_in(v); e >= 2; --e) exps.push_back(e);
    for (unsigned e : exps) {
      const Monomial m = Monomial::var(nvars, v, e);
      if (m == rel.border) continue;
      const Rational c = p.coeff(m);
      if (!c.is_zero()) out.push_back({m, c});
    }
  }
  if (out.size() != p.num_terms())
    throw std::logic_error("emit: relation has terms outside the basis layout");
  return out;
}

// Right-hand side of a mixed relation written as an equation: the tails
// negated and listed low degree first, positive coefficients before
// negative within a degree.
std::vector<Term> mixed_rhs_terms(const Relation& rel) {
  std::vector<Term> out;
  for (const auto& [m, c] : rel.polynomial.terms()) {
    if (m == rel.border) continue;
    out.push_back({m, -c});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    if (a.first.coord_degree() != b.first.coord_degree())
      return a.first.coord_degree() < b.first.coord_degree();
    if (a.second.sign() != b.second.sign()) return a.second.sign() > b.second.sign();
    return a.first.exps() < b.first.exps();
  });
  return out;
}

std::vector<Term> sorted_terms(const Poly& p, const MonomialOrder& ord) {
  std::vector<Term> out;
  for (const auto& [m, c] : p.terms()) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
  return out;
}

std::vector<std::string> coordinate_names(std::size_t r) {
  auto names = ring_names(r);
  names[0] = "<eps>";  // never printed by the emitters
  return names;
}

std::vector<std::string> fiber_names(std::size_t r) {
  std::vector<std::string> names{"<eps>"};
  if (r <= 3) {
    const char* xyz[] = {"X", "Y", "Z"};
    for (std::size_t i = 0; i < r; ++i) names.emplace_back(xyz[i]);
  } else {
    for (std::size_t i = 1; i <= r; ++i) names.push_back("X" + std::to_string(i));
  }
  return names;
}

bool default_a_values(const std::vector<Rational>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != Rational(static_cast<long>(i + 1))) return false;
  return true;
}

// "u3 - 2*u2 + u1": the forward-difference expansion of v_i, highest
// generator first.
std::string difference_form(std::size_t i, const std::string& stem) {
  std::string line;
  for (std::size_t jj = i; jj-- > 0;) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(i - 1),
                 static_cast<unsigned long>(jj));
    if ((i - 1 - jj) % 2) b = -b;
    const std::string mag = mpz_class(abs(b)).get_str();
    if (line.empty()) {
      if (b < 0) line += "-";
      if (mag != "1") line += mag + "*";
    } else {
      line += b < 0 ? " - " : " + ";
      if (mag != "1") line += mag + "*";
    }
    line += stem + std::to_string(jj + 1);
  }
  return line;
}

std::string emit_m2(const ReesFamily& fam, const std::vector<Rational>& lambdas) {
  const std::size_t r = fam.spider.num_legs();
  const std::size_t n = fam.spider.colength();
  const auto names = coordinate_names(r);
  const auto fnames = fiber_names(r);
  const MonomialOrder ord = family_order(fam);
  std::ostringstream os;

  os << "-- generated by spiderfam: verification script for the spider family of type "
     << fam.spider.str() << "\n";
  os << "-- run with: M2 --script <file>\n";
  os << "R = QQ[t]/ideal(t^" << n << ");\n";
  for (std::size_t i = 0; i < r; ++i) {
    const Rational& a = fam.a_values[i];
    os << "s" << i + 1 << " = sum(" << n << ", i->";
    os << (a.is_one() ? "t" : "(" + a.str() + "*t)") << "^i);\n";
  }
  if (default_a_values(fam.a_values)) {
    // v_i = (i-1)! * t^i * s1 ... si
    mpz_class fact = 1;
    for (std::size_t i = 1; i <= r; ++i) {
      if (i > 1) fact *= static_cast<unsigned long>(i - 1);
      os << names[i] << " = ";
      if (fact != 1) os << fact.get_str() << "*";
      os << (i == 1 ? "t" : "t^" + std::to_string(i));
      for (std::size_t j = 1; j <= i; ++j) os << "*s" << j;
      os << ";\n";
    }
  } else {
    for (std::size_t i = 1; i <= r; ++i) os << "u" << i << " = t*s" << i << ";\n";
    for (std::size_t i = 1; i <= r; ++i) {
      // v_i = sum_j (-1)^(i-1-j) C(i-1,j) u_{1+j}, highest u first
      os << names[i] << " = " << difference_form(i, "u") << ";\n";
    }
  }

  os << "-- mixed relations\n";
  for (const auto& rel : fam.relations) {
    if (rel.kind != RelationKind::Mixed) continue;
    if (rel.polynomial.num_terms() == 1) {
      os << "assert(" << fmt_term(rel.polynomial.coeff(rel.border), rel.border, names, true)
         << " == 0);\n";
    } else {
      os << "assert(" << fmt_term(rel.polynomial.coeff(rel.border), rel.border, names, true)
         << " == " << fmt_terms(mixed_rhs_terms(rel), names) << ");\n";
    }
  }
  os << "-- pure-power relations\n";
  for (const auto& rel : fam.relations) {
    if (rel.kind == RelationKind::Mixed) continue;
    if (rel.kind == RelationKind::VanishingPower) {
      os << "assert(" << rel.border.str(names) << " == 0);\n";
    } else {
      const std::string gname = "g" + names[rel.i];
      os << gname << " = " << fmt_terms(pure_relation_terms(rel, r), names) << ";\n";
      os << "assert(" << gname << " == 0);\n";
    }
  }

  os << "-- fibre dimensions\n";
  os << "S = QQ[";
  for (std::size_t i = 1; i <= r; ++i) os << (i > 1 ? "," : "") << fnames[i];
  os << "];\n";
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    std::vector<Poly> gens;
    for (const auto& f : fam.family) {
      Poly s = f.substitute(0, lambdas[k]);
      if (!s.is_zero()) gens.push_back(std::move(s));
    }
    os << "-- eps = " << lambdas[k].str() << "\n";
    os << "fib" << k << " = ideal(";
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (gi) os << ", ";
      os << fmt_terms(sorted_terms(gens[gi], ord), fnames);
    }
    os << ");\n";
    os << "assert(dim fib" << k << " == 0);\n";
    os << "assert(numcols basis(S/fib" << k << ") == " << n << ");\n";
  }
  os << "print \"all spider family checks passed\";\n";
  return os.str();
}

std::string emit_sage(const ReesFamily& fam, const std::vector<Rational>& lambdas) {
  const std::size_t r = fam.spider.num_legs();
  const std::size_t n = fam.spider.colength();
  const auto names = coordinate_names(r);
  const auto fnames = fiber_names(r);
  const MonomialOrder ord = family_order(fam);
  std::ostringstream os;

  os << "# generated by spiderfam: verification script for the spider family of type "
     << fam.spider.str() << "\n";
  os << "# run with: sage <file>\n";
  os << "n = " << n << "\n";
  os << "P.<t> = PolynomialRing(QQ)\n";
  os << "def tr(f):\n    return f % t^n\n";
  for (std::size_t i = 0; i < r; ++i) {
    const Rational& a = fam.a_values[i];
    os << "s" << i + 1 << " = sum((" << (a.is_one() ? "t" : a.str() + "*t") << ")^i"
       << " for i in range(n))\n";
  }
  if (default_a_values(fam.a_values)) {
    mpz_class fact = 1;
    for (std::size_t i = 1; i <= r; ++i) {
      if (i > 1) fact *= static_cast<unsigned long>(i - 1);
      os << names[i] << " = tr(";
      if (fact != 1) os << fact.get_str() << "*";
      os << (i == 1 ? "t" : "t^" + std::to_string(i));
      for (std::size_t j = 1; j <= i; ++j) os << "*s" << j;
      os << ")\n";
    }
  } else {
    for (std::size_t i = 1; i <= r; ++i) os << "u" << i << " = tr(t*s" << i << ")\n";
    for (std::size_t i = 1; i <= r; ++i)
      os << names[i] << " = tr(" << difference_form(i, "u") << ")\n";
  }

  os << "# mixed relations\n";
  for (const auto& rel : fam.relations) {
    if (rel.kind != RelationKind::Mixed) continue;
    const std::string lhs = fmt_term(rel.polynomial.coeff(rel.border), rel.border, names, true);
    if (rel.polynomial.num_terms() == 1) {
      os << "assert tr(" << lhs << ") == 0\n";
    } else {
      os << "assert tr(" << lhs << " - (" << fmt_terms(mixed_rhs_terms(rel), names)
         << ")) == 0\n";
    }
  }
  os << "# pure-power relations\n";
  for (const auto& rel : fam.relations) {
    if (rel.kind == RelationKind::Mixed) continue;
    if (rel.kind == RelationKind::VanishingPower) {
      os << "assert tr(" << rel.border.str(names) << ") == 0\n";
    } else {
      const std::string gname = "g" + names[rel.i];
      os << gname << " = " << fmt_terms(pure_relation_terms(rel, r), names) << "\n";
      os << "assert tr(" << gname << ") == 0\n";
    }
  }

  os << "# fibre dimensions\n";
  os << "S = PolynomialRing(QQ, [";
  for (std::size_t i = 1; i <= r; ++i) os << (i > 1 ? ", " : "") << "'" << fnames[i] << "'";
  os << "])\n";
  if (r == 1) {
    os << fnames[1] << " = S.gen()\n";
  } else {
    for (std::size_t i = 1; i <= r; ++i)
      os << fnames[i] << " = S.gens()[" << i - 1 << "]\n";
  }
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    std::vector<Poly> gens;
    for (const auto& f : fam.family) {
      Poly s = f.substitute(0, lambdas[k]);
      if (!s.is_zero()) gens.push_back(std::move(s));
    }
    os << "# eps = " << lambdas[k].str() << "\n";
    os << "fib" << k << " = S.ideal([";
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (gi) os << ", ";
      os << fmt_terms(sorted_terms(gens[gi], ord), fnames);
    }
    os << "])\n";
    os << "assert fib" << k << ".dimension() == 0\n";
    os << "assert fib" << k << ".vector_space_dimension() == " << n << "\n";
  }
  os << "print(\"all spider family checks passed\")\n";
  return os.str();
}

}  // namespace

VerificationScript emit_script(const ReesFamily& family, const std::string& dialect) {
  return emit_script(family, dialect, default_lambda_set());
}

VerificationScript emit_script(const ReesFamily& family, const std::string& dialect,
                               const std::vector<Rational>& lambdas) {
  if (dialect == "m2") return {dialect, emit_m2(family, lambdas)};
  if (dialect == "sage") return {dialect, emit_sage(family, lambdas)};
  throw UnknownDialectError("emit_script: unknown dialect \"" + dialect +
                            "\" (supported: m2, sage)");
}

}  // namespace spiderfam
