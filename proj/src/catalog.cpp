#include "hypsum/catalog.hpp"

#include <fstream>

#include <json.hpp>

#include "hypsum/verify.hpp"

namespace hypsum {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "hypsum-catalog/1";

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const Rational& c : p.coeffs()) a.push_back(c.str());
  return a;
}

Poly poly_from_json(const json& j) {
  std::vector<Rational> v;
  for (const auto& c : j) v.push_back(Rational::parse(c.get<std::string>()));
  return Poly(std::move(v));
}

json ratfunc_to_json(const RatFunc& r) {
  return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json constant_to_json(const ConstantExpr& e) {
  json o = json::object();
  for (const auto& [s, c] : e.terms()) {
    const char* key = s == ConstantSymbol::One ? "one"
                      : s == ConstantSymbol::InvPi ? "inv_pi"
                                                   : "pi_sq";
    o[key] = c.str();
  }
  return o;
}

ConstantExpr constant_from_json(const json& j) {
  ConstantExpr e;
  auto get = [&](const char* key, ConstantSymbol s) {
    if (j.contains(key))
      e += ConstantExpr::term(s, Rational::parse(j.at(key).get<std::string>()));
  };
  get("one", ConstantSymbol::One);
  get("inv_pi", ConstantSymbol::InvPi);
  get("pi_sq", ConstantSymbol::PiSq);
  return e;
}

json spec_to_json(const TermSpec& spec) {
  json fs = json::array();
  for (const TermFactor& f : spec.factors) {
    json o;
    switch (f.kind) {
      case TermFactor::Kind::Binomial:
        o["kind"] = "binom";
        o["upper"] = {f.upper.slope.str(), f.upper.intercept.str()};
        o["lower"] = {f.lower.slope.str(), f.lower.intercept.str()};
        break;
      case TermFactor::Kind::Polynomial:
        o["kind"] = "poly";
        o["poly"] = poly_to_json(f.poly);
        break;
      case TermFactor::Kind::Geometric:
        o["kind"] = "geom";
        o["base"] = f.base.str();
        break;
      case TermFactor::Kind::Rising:
        o["kind"] = "rising";
        o["base"] = f.base.str();
        break;
      case TermFactor::Kind::Factorial:
        o["kind"] = "factorial";
        break;
    }
    o["exponent"] = f.exponent;
    fs.push_back(std::move(o));
  }
  return json{{"factors", std::move(fs)}, {"start", spec.start}};
}

TermSpec spec_from_json(const json& j) {
  TermSpec spec;
  spec.start = j.at("start").get<long>();
  for (const auto& o : j.at("factors")) {
    TermFactor f;
    std::string kind = o.at("kind").get<std::string>();
    if (kind == "binom") {
      f.kind = TermFactor::Kind::Binomial;
      f.upper = {Rational::parse(o.at("upper")[0].get<std::string>()),
                 Rational::parse(o.at("upper")[1].get<std::string>())};
      f.lower = {Rational::parse(o.at("lower")[0].get<std::string>()),
                 Rational::parse(o.at("lower")[1].get<std::string>())};
    } else if (kind == "poly") {
      f.kind = TermFactor::Kind::Polynomial;
      f.poly = poly_from_json(o.at("poly"));
    } else if (kind == "geom") {
      f.kind = TermFactor::Kind::Geometric;
      f.base = Rational::parse(o.at("base").get<std::string>());
    } else if (kind == "rising") {
      f.kind = TermFactor::Kind::Rising;
      f.base = Rational::parse(o.at("base").get<std::string>());
    } else if (kind == "factorial") {
      f.kind = TermFactor::Kind::Factorial;
    } else {
      throw std::invalid_argument("unknown factor kind '" + kind + "'");
    }
    f.exponent = o.at("exponent").get<int>();
    spec.factors.push_back(std::move(f));
  }
  return spec;
}

json forged_to_json(const ForgedIdentity& f) {
  return json{{"kernel",
               {{"ratio", ratfunc_to_json(f.kernel.ratio)},
                {"start", f.kernel.start},
                {"initial", f.kernel.initial.str()},
                {"label", f.kernel.label}}},
              {"multiplier", ratfunc_to_json(f.multiplier)},
              {"start", f.start},
              {"rhs", constant_to_json(f.rhs)},
              {"certificate_g", ratfunc_to_json(f.certificate_g)},
              {"base_scale", f.base_scale.str()},
              {"c_prim", poly_to_json(f.c_prim)},
              {"faster_convergence", f.faster_convergence},
              {"provenance",
               {{"base", f.provenance.base_label},
                {"q", poly_to_json(f.provenance.q)},
                {"m", f.provenance.m}}}};
}

ForgedIdentity forged_from_json(const json& j) {
  ForgedIdentity f;
  const json& k = j.at("kernel");
  f.kernel = HyperTerm(ratfunc_from_json(k.at("ratio")), k.at("start").get<long>(),
                       Rational::parse(k.at("initial").get<std::string>()),
                       k.at("label").get<std::string>());
  f.multiplier = ratfunc_from_json(j.at("multiplier"));
  f.start = j.at("start").get<long>();
  f.rhs = constant_from_json(j.at("rhs"));
  f.certificate_g = ratfunc_from_json(j.at("certificate_g"));
  f.base_scale = Rational::parse(j.at("base_scale").get<std::string>());
  f.c_prim = poly_from_json(j.at("c_prim"));
  f.faster_convergence = j.at("faster_convergence").get<bool>();
  f.provenance.base_label = j.at("provenance").at("base").get<std::string>();
  f.provenance.q = poly_from_json(j.at("provenance").at("q"));
  f.provenance.m = j.at("provenance").at("m").get<int>();
  return f;
}

}  // namespace

void catalog_save(const Catalog& catalog, const std::string& path) {
  json entries = json::array();
  for (const CatalogEntry& e : catalog.entries) {
    json o{{"id", e.id},
           {"kind", e.kind == CatalogEntry::Kind::Base ? "base" : "forged"},
           {"base_spec", spec_to_json(e.base_spec)},
           {"base_sum", constant_to_json(e.base_sum)},
           {"latex", e.latex},
           {"verification",
            {{"telescoping", e.verification.telescoping},
             {"numeric_pass", e.verification.numeric_pass},
             {"numeric_error", e.verification.numeric_error},
             {"numeric_N", e.verification.numeric_N},
             {"numeric_digits", e.verification.numeric_digits},
             {"congruences", e.verification.congruences}}}};
    if (e.forged) o["forged"] = forged_to_json(*e.forged);
    entries.push_back(std::move(o));
  }
  json doc{{"schema", kSchema}, {"entries", std::move(entries)}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("catalog_save: cannot write " + path);
  out << doc.dump(2) << "\n";
}

Catalog catalog_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("catalog_load: cannot read " + path);
  json doc = json::parse(in);
  if (!doc.contains("schema") || doc.at("schema").get<std::string>() != kSchema)
    throw std::runtime_error("catalog_load: schema version mismatch (want " +
                             std::string(kSchema) + ")");
  Catalog cat;
  for (const auto& o : doc.at("entries")) {
    std::string id = o.value("id", "<missing id>");
    try {
      CatalogEntry e;
      e.id = id;
      e.kind = o.at("kind").get<std::string>() == "base" ? CatalogEntry::Kind::Base
                                                         : CatalogEntry::Kind::Forged;
      e.base_spec = spec_from_json(o.at("base_spec"));
      e.base_sum = constant_from_json(o.at("base_sum"));
      e.latex = o.at("latex").get<std::string>();
      const json& v = o.at("verification");
      e.verification.telescoping = v.at("telescoping").get<bool>();
      e.verification.numeric_pass = v.at("numeric_pass").get<bool>();
      e.verification.numeric_error = v.at("numeric_error").get<double>();
      e.verification.numeric_N = v.at("numeric_N").get<long>();
      e.verification.numeric_digits = v.at("numeric_digits").get<int>();
      for (const auto& c : v.at("congruences"))
        e.verification.congruences.push_back(c.get<std::string>());
      if (o.contains("forged")) {
        e.forged = forged_from_json(o.at("forged"));
        // re-check the certificate on load; failures are flagged, not dropped
        if (!check_telescoping(*e.forged)) e.verification.telescoping = false;
      }
      cat.entries.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw std::runtime_error("catalog_load: malformed record '" + id + "': " + ex.what());
    }
  }
  return cat;
}

}  // namespace hypsum
