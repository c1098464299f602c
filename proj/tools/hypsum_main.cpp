#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypsum/bounds.hpp"
#include "hypsum/catalog.hpp"
#include "hypsum/forge.hpp"
#include "hypsum/latex.hpp"
#include "hypsum/termspec.hpp"
#include "hypsum/verify.hpp"

using namespace hypsum;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

json poly_json(const Poly& p) { return p.str(); }
json ratfunc_json(const RatFunc& r) { return json{{"num", r.num().str()}, {"den", r.den().str()}}; }

struct Options {
  std::string term;
  long start = 0;
  bool as_json = false;
};

HyperTerm make_term(const Options& o) { return build_term(parse_term(o.term, o.start)); }

int cmd_repr(const Options& o) {
  GosperRep rep = gosper_representation(make_term(o).ratio);
  if (o.as_json) {
    std::cout << json{{"a", poly_json(rep.a)},
                      {"b", poly_json(rep.b)},
                      {"c", poly_json(rep.c)},
                      {"c_primitive", poly_json(rep.c.primitive_part())}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "a(k) = " << rep.a.str() << "\n"
              << "b(k) = " << rep.b.str() << "\n"
              << "c(k) = " << rep.c.str();
    if (!(rep.c == rep.c.primitive_part()))
      std::cout << "   (primitive: " << rep.c.primitive_part().str() << ")";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_bounds(const Options& o) {
  GosperRep rep = gosper_representation(make_term(o).ratio);
  BoundReport r = degree_report(rep);
  Poly p = minimal_multiplier(rep);
  if (o.as_json) {
    json out{{"u", poly_json(r.u)},
             {"d", r.d},
             {"degenerated", r.degenerated},
             {"shift_free", r.shift_free},
             {"upper_B", r.upper_B},
             {"lower_bound_applicable", r.lower_bound_applicable},
             {"minimal_multiplier", poly_json(p)}};
    if (r.remark_bound) out["remark_bound"] = *r.remark_bound;
    if (r.lower_bound) out["lower_bound"] = *r.lower_bound;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "u(k) = a(k) - b(k-1) = " << r.u.str() << "\n"
              << "d = " << r.d << "\n"
              << "degenerated: " << (r.degenerated ? "yes" : "no") << "\n"
              << "shift-free: " << (r.shift_free ? "yes" : "no") << "\n"
              << "degree bound B = " << r.upper_B;
    if (r.remark_bound && *r.remark_bound != r.upper_B)
      std::cout << "   (shift-free refinement: " << *r.remark_bound << ")";
    std::cout << "\n";
    if (r.lower_bound) std::cout << "lower bound: " << *r.lower_bound << "\n";
    std::cout << "minimal multiplier: p(k) = " << p.str() << "  (degree " << p.degree() << ")\n";
  }
  return kExitOk;
}

int cmd_summable(const Options& o) {
  GosperRep rep = gosper_representation(make_term(o).ratio);
  auto cert = solve_gosper(rep);
  if (o.as_json) {
    json out{{"summable", cert.has_value()}};
    if (cert) out["certificate"] = ratfunc_json(cert->multiplier);
    std::cout << out.dump(2) << "\n";
  } else if (cert) {
    std::cout << "summable: z(k) = R(k) t(k) with R(k) = " << cert->multiplier.str() << "\n";
  } else {
    std::cout << "not summable\n";
  }
  return kExitOk;
}

CatalogEntry entry_for(const BaseIdentity& base, const TermSpec& spec,
                       const ForgedIdentity& f, long N, const PrecisionContext& ctx) {
  CatalogEntry e;
  e.kind = CatalogEntry::Kind::Forged;
  e.base_spec = spec;
  e.base_sum = base.sum;
  e.forged = f;
  e.id = f.provenance.base_label + " | q=" + f.provenance.q.str();
  e.latex = emit_latex(e);
  e.verification.telescoping = check_telescoping(f);
  NumericReport r = numeric_verify(f, N, ctx);
  e.verification.numeric_pass = r.pass;
  e.verification.numeric_error = r.abs_error.to_double();
  e.verification.numeric_N = N;
  e.verification.numeric_digits = ctx.digits();
  return e;
}

json entry_json(const CatalogEntry& e) {
  const ForgedIdentity& f = *e.forged;
  return json{{"id", e.id},
              {"start", f.start},
              {"multiplier", ratfunc_json(f.multiplier)},
              {"rhs", f.rhs.str()},
              {"certificate_g", ratfunc_json(f.certificate_g)},
              {"q", poly_json(f.provenance.q)},
              {"m", f.provenance.m},
              {"faster_convergence", f.faster_convergence},
              {"latex", e.latex},
              {"telescoping", e.verification.telescoping},
              {"numeric_pass", e.verification.numeric_pass},
              {"numeric_error", e.verification.numeric_error}};
}

int cmd_forge(const Options& o, const std::string& sum_expr, int maxdeg, int max_shift,
              const std::string& q_str, const std::string& out_path, long N, int digits) {
  TermSpec spec = parse_term(o.term, o.start);
  BaseIdentity base{build_term(spec), parse_constant_expr(sum_expr)};
  std::vector<ForgedIdentity> found;
  if (!q_str.empty()) {
    ForgeOutcome oc = forge_identity(base, parse_poly(q_str));
    if (!oc.identity) {
      if (o.as_json)
        std::cout << json{{"identities", json::array()}, {"diagnostic", oc.diagnostic}}.dump(2)
                  << "\n";
      else
        std::cout << "no identity: " << oc.diagnostic << "\n";
      return kExitVerification;
    }
    found.push_back(*oc.identity);
  } else {
    found = derive_family(base, maxdeg, max_shift);
  }

  PrecisionContext ctx(digits);
  Catalog cat;
  bool all_ok = true;
  for (const ForgedIdentity& f : found) {
    CatalogEntry e = entry_for(base, spec, f, N, ctx);
    all_ok = all_ok && e.verification.telescoping && e.verification.numeric_pass;
    cat.entries.push_back(std::move(e));
  }
  if (o.as_json) {
    json out{{"identities", json::array()}};
    for (const auto& e : cat.entries) out["identities"].push_back(entry_json(e));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : cat.entries) {
      const ForgedIdentity& f = *e.forged;
      std::cout << "q = " << f.provenance.q.str() << "  (m = " << f.provenance.m << ")\n"
                << "  sum_{k>=" << f.start << "} [" << f.multiplier.str()
                << "] * t^(k) = " << f.rhs.str() << "\n"
                << "  " << e.latex << "\n"
                << "  telescoping: " << (e.verification.telescoping ? "ok" : "FAIL")
                << ", numeric at N=" << N << ": "
                << (e.verification.numeric_pass ? "ok" : "FAIL")
                << " (|err| ~ " << e.verification.numeric_error << ")\n";
    }
    std::cout << found.size() << " identities\n";
  }
  if (!out_path.empty() && all_ok) catalog_save(cat, out_path);
  return all_ok ? kExitOk : kExitVerification;
}

int cmd_verify(const std::string& path, bool as_json, long N, int digits) {
  Catalog cat = catalog_load(path);
  PrecisionContext ctx(digits);
  bool all_ok = true;
  json out = json::array();
  for (const CatalogEntry& e : cat.entries) {
    bool tel = true, num = true;
    double err = 0;
    if (e.forged) {
      tel = check_telescoping(*e.forged);
      NumericReport r = numeric_verify(*e.forged, N, ctx);
      num = r.pass;
      err = r.abs_error.to_double();
    } else {
      // base entry: direct partial-sum check of the asserted sum
      ForgedIdentity view;
      view.kernel = build_term(e.base_spec);
      view.multiplier = RatFunc(Rational(1));
      view.start = view.kernel.start;
      view.rhs = e.base_sum;
      NumericReport r = numeric_verify(view, N, ctx);
      num = r.pass;
      err = r.abs_error.to_double();
    }
    all_ok = all_ok && tel && num;
    if (as_json)
      out.push_back({{"id", e.id}, {"telescoping", tel}, {"numeric_pass", num}, {"error", err}});
    else
      std::cout << e.id << ": telescoping " << (tel ? "ok" : "FAIL") << ", numeric "
                << (num ? "ok" : "FAIL") << " (|err| ~ " << err << ")\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitVerification;
}

int cmd_congruence(const Options& o, const std::string& mult_str, const std::string& target_str,
                   const std::string& primes_range, int power) {
  HyperTerm term = make_term(o);
  RatFunc mult = mult_str.empty() ? RatFunc(Rational(1)) : parse_ratfunc(mult_str);
  CongruenceTarget target = parse_congruence_target(target_str);
  auto dots = primes_range.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("--primes expects a range like 5..97");
  long lo = std::stol(primes_range.substr(0, dots));
  long hi = std::stol(primes_range.substr(dots + 2));
  bool all_ok = true;
  json out = json::array();
  for (long p = lo; p <= hi; ++p) {
    if (!is_prime(Int(p)) || p == 2) continue;
    std::string status;
    bool ok = false;
    try {
      ok = congruence_check(term, mult, Int(p), power, target);
      status = ok ? "ok" : "FAIL";
    } catch (const std::domain_error& e) {
      status = std::string("rejected: ") + e.what();
    }
    all_ok = all_ok && ok;
    if (o.as_json)
      out.push_back({{"p", p}, {"holds", ok}, {"status", status}});
    else
      std::cout << "p = " << p << ": " << status << "\n";
  }
  if (o.as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypsum: Gosper summability, degree bounds and series forging "
               "for hypergeometric terms"};
  app.require_subcommand(1);

  Options o;
  std::string sum_expr, q_str, out_path, catalog_path, mult_str, target_str, primes = "5..97";
  int maxdeg = 3, max_shift = 0, power = 3, digits = 30;
  long N = 200;

  auto add_term_opts = [&](CLI::App* c) {
    c->add_option("term", o.term, "term in the DSL, e.g. \"(4k+1)*binom(2k,k)^3/(-64)^k\"")
        ->required();
    c->add_option("--start", o.start, "series start index (default 0)");
    c->add_flag("--json", o.as_json, "machine-readable output");
  };

  CLI::App* repr = app.add_subcommand("repr", "print the Gosper representation (a, b, c)");
  add_term_opts(repr);

  CLI::App* bounds = app.add_subcommand("bounds", "degree bounds and the minimal multiplier");
  add_term_opts(bounds);

  CLI::App* summable = app.add_subcommand("summable", "decide Gosper summability");
  add_term_opts(summable);

  CLI::App* forge = app.add_subcommand("forge", "derive new identities from a known sum");
  add_term_opts(forge);
  forge->add_option("--sum", sum_expr, "exact value of the base series, e.g. \"2/pi\"")
      ->required();
  forge->add_option("--maxdeg", maxdeg, "max denominator degree (default 3)");
  forge->add_option("--max-shift", max_shift, "extra source shifts for candidates (default 0)");
  forge->add_option("--q", q_str, "forge a single user-supplied denominator");
  forge->add_option("--out", out_path, "write verified identities to a catalog file");
  forge->add_option("-N,--partial", N, "partial-sum length for numeric verification");
  forge->add_option("--digits", digits, "pi precision in decimal digits");

  CLI::App* verify = app.add_subcommand("verify", "re-check all entries of a catalog");
  verify->add_option("catalog", catalog_path, "catalog file")->required();
  verify->add_flag("--json", o.as_json, "machine-readable output");
  verify->add_option("-N,--partial", N, "partial-sum length");
  verify->add_option("--digits", digits, "pi precision in decimal digits");

  CLI::App* congruence = app.add_subcommand("congruence", "check super-congruences mod p^power");
  add_term_opts(congruence);
  congruence->add_option("--multiplier", mult_str, "rational-function multiplier (default 1)");
  congruence->add_option("--target", target_str, "target, e.g. \"p*(-1/p)\"")->required();
  congruence->add_option("--primes", primes, "prime range a..b (default 5..97)");
  congruence->add_option("--power", power, "modulus power (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (repr->parsed()) return cmd_repr(o);
    if (bounds->parsed()) return cmd_bounds(o);
    if (summable->parsed()) return cmd_summable(o);
    if (forge->parsed())
      return cmd_forge(o, sum_expr, maxdeg, max_shift, q_str, out_path, N, digits);
    if (verify->parsed()) return cmd_verify(catalog_path, o.as_json, N, digits);
    if (congruence->parsed()) return cmd_congruence(o, mult_str, target_str, primes, power);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
