#include "symba/json_io.hpp"

#include <fstream>

#include "symba/errors.hpp"

namespace symba {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw validation_error(std::string("missing field '") + name + "' in JSON object");
  return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_string())
    throw validation_error(std::string("field '") + name + "' must be a string");
  return f.get<std::string>();
}

std::vector<Rational> rational_array(const Json& j, const char* what) {
  if (!j.is_array()) throw validation_error(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json rational_strings(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(j.get<unsigned long long>());
  throw validation_error("expected a rational string, got: " + j.dump());
}

Json value_to_json(const Value& v) { return v.str(); }

Json finvec_to_json(const FinVec& f) {
  Json out = Json::object();
  for (const auto& [label, value] : f.entries()) out[label] = to_string(value);
  return out;
}

FinVec finvec_from_json(const Json& j) {
  if (!j.is_object()) throw validation_error("coordinate vector must be a JSON object");
  FinVec f;
  for (const auto& [label, value] : j.items()) f.set(label, rational_from_json(value));
  return f;
}

Json weights_to_json(const WeightSeq& w) {
  Json out = Json::object();
  if (w.kind() == WeightSeq::Kind::Harmonic) {
    out["kind"] = "harmonic";
  } else {
    out["kind"] = "explicit";
    out["values"] = rational_strings(w.values());
  }
  return out;
}

WeightSeq weights_from_json(const Json& j) {
  std::string kind = string_field(j, "kind");
  if (kind == "harmonic") return WeightSeq::harmonic();
  if (kind == "explicit")
    return WeightSeq::explicit_list(rational_array(field(j, "values"), "weight values"));
  throw validation_error("unknown weight kind: " + kind);
}

Json orlicz_to_json(const OrliczFn& M) {
  Json out = Json::object();
  switch (M.kind()) {
    case OrliczFn::Kind::Power:
      out["kind"] = "power";
      out["p"] = M.power_exponent();
      break;
    case OrliczFn::Kind::ExpReciprocal:
      out["kind"] = "exp_reciprocal";
      out["t_max"] = M.t_max();
      out["extension"] =
          M.extension() == ExtensionRule::Affine ? "affine" : "analytic";
      break;
    case OrliczFn::Kind::Leung:
      out["kind"] = "leung";
      break;
  }
  return out;
}

OrliczFn orlicz_from_json(const Json& j) {
  std::string kind = string_field(j, "kind");
  if (kind == "power") {
    const Json& p = field(j, "p");
    if (!p.is_number_integer() && !p.is_number_unsigned())
      throw validation_error("power Orlicz function needs an integer field 'p'");
    return OrliczFn::power(p.get<long>());
  }
  if (kind == "exp_reciprocal") {
    double t_max = 0.5;
    if (j.contains("t_max")) {
      const Json& t = j.at("t_max");
      t_max = t.is_string() ? to_double(parse_rational(t.get<std::string>()))
                            : t.get<double>();
    }
    ExtensionRule rule = ExtensionRule::Analytic;
    if (j.contains("extension")) {
      std::string name = string_field(j, "extension");
      if (name == "affine")
        rule = ExtensionRule::Affine;
      else if (name != "analytic")
        throw validation_error("unknown extension rule: " + name);
    }
    return OrliczFn::exp_reciprocal(rule, t_max);
  }
  if (kind == "leung") return OrliczFn::leung();
  throw validation_error("unknown Orlicz function kind: " + kind);
}

Json exponents_to_json(const ExponentSeq& p) {
  Json out = Json::object();
  switch (p.kind()) {
    case ExponentSeq::Kind::LogLog:
      out["kind"] = "loglog";
      out["prefix"] = rational_strings(p.prefix());
      break;
    case ExponentSeq::Kind::Linear:
      out["kind"] = "linear";
      break;
    case ExponentSeq::Kind::Explicit:
      out["kind"] = "explicit";
      out["prefix"] = rational_strings(p.prefix());
      break;
  }
  return out;
}

ExponentSeq exponents_from_json(const Json& j) {
  std::string kind = string_field(j, "kind");
  if (kind == "loglog") {
    std::vector<Rational> prefix;
    if (j.contains("prefix")) prefix = rational_array(j.at("prefix"), "exponent prefix");
    return ExponentSeq::loglog(std::move(prefix));
  }
  if (kind == "linear") return ExponentSeq::linear();
  if (kind == "explicit")
    return ExponentSeq::explicit_list(rational_array(field(j, "prefix"), "exponent prefix"));
  throw validation_error("unknown exponent kind: " + kind);
}

Json space_to_json(const SpaceSpec& spec) {
  Json out = Json::object();
  out["space"] = spec.kind_name();
  if (spec.weights) out["weights"] = weights_to_json(*spec.weights);
  if (spec.M) out["M"] = orlicz_to_json(*spec.M);
  if (spec.p) out["p"] = exponents_to_json(*spec.p);
  return out;
}

SpaceSpec space_from_json(const Json& j) {
  std::string name = string_field(j, "space");
  if (name == "lorentz_predual")
    return SpaceSpec::lorentz_predual(weights_from_json(field(j, "weights")));
  if (name == "lorentz_dual")
    return SpaceSpec::lorentz_dual(weights_from_json(field(j, "weights")));
  if (name == "counting") return SpaceSpec::counting();
  if (name == "orlicz") return SpaceSpec::orlicz(orlicz_from_json(field(j, "M")));
  if (name == "nakano") return SpaceSpec::nakano(exponents_from_json(field(j, "p")));
  throw validation_error("unknown space kind: " + name);
}

Json provider_to_json(const RhoProvider& provider) {
  Json out = Json::object();
  out["provider"] = provider.kind_name();
  if (provider.kind == RhoProvider::Kind::Symmetric)
    out["space"] = space_to_json(*provider.space);
  if (provider.kind == RhoProvider::Kind::Table)
    out["values"] = rational_strings(provider.table);
  return out;
}

RhoProvider provider_from_json(const Json& j) {
  std::string name = string_field(j, "provider");
  if (name == "counting") return RhoProvider::counting();
  if (name == "symmetric") return RhoProvider::symmetric(space_from_json(field(j, "space")));
  if (name == "table")
    return RhoProvider::table_values(rational_array(field(j, "values"), "table values"));
  throw validation_error("unknown rho provider: " + name);
}

Json theta_to_json(const ThetaBreakdown& b) {
  Json out = Json::object();
  out["p"] = rational_strings(b.profile.p);
  out["q"] = rational_strings(b.profile.q);
  Json sizes = Json::array();
  for (const auto& g : b.profile.G) sizes.push_back(g.size());
  out["G_sizes"] = sizes;
  out["rho"] = rational_strings(b.rho);
  out["theta"] = to_string(b.theta);
  return out;
}

Json series_to_json(const SeriesDiagnostic& d) {
  Json out = Json::object();
  out["kind"] = series_kind_name(d.kind);
  out["N"] = d.N;
  Json samples = Json::array();
  for (const auto& [n, value] : d.samples) samples.push_back(Json::array({n, value.str()}));
  out["samples"] = samples;
  out["monotone"] = d.monotone;
  out["slope_logn"] = format_float(d.slope_logn);
  out["slope_loglogn"] = format_float(d.slope_loglogn);
  out["verdict"] = verdict_name(d.verdict);
  out["policy"] = Json{{"flat_tol", format_float(d.policy.flat_tol)},
                       {"slope_tol", format_float(d.policy.slope_tol)}};
  if (!d.enclosures.empty()) {
    Json enc = Json::array();
    for (const auto& [lo, hi] : d.enclosures)
      enc.push_back(Json::array({format_float(lo), format_float(hi)}));
    out["enclosures"] = enc;
  }
  if (d.crossing) out["crossing"] = *d.crossing;
  if (!d.notes.empty()) out["notes"] = d.notes;
  return out;
}

Json builtin_run_to_json(const BuiltinRun& run) {
  Json out = Json::object();
  out["name"] = run.name;
  Json entries = Json::array();
  for (const auto& e : run.entries) {
    Json entry = Json::object();
    entry["label"] = e.label;
    entry["diagnostic"] = series_to_json(e.diagnostic);
    if (e.expected) entry["expected"] = verdict_name(*e.expected);
    entry["match"] = e.match;
    entries.push_back(entry);
  }
  out["entries"] = entries;
  Json extras = Json::array();
  for (const auto& x : run.extras)
    extras.push_back(Json{{"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
  out["extras"] = extras;
  if (!run.notes.empty()) out["notes"] = run.notes;
  out["all_match"] = run.all_match;
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open JSON file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw validation_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace symba
