// symba: batch CLI over the sequence-space, approximation, diagnostics, and
// tree modules. Every report is JSON by default; series reports also render
// as CSV (n,s_n,lower,upper) and human tables. Exit codes: 0 success,
// 2 validation, 3 internal numeric failure.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symba/approx.hpp"
#include "symba/errors.hpp"
#include "symba/json_io.hpp"
#include "symba/series.hpp"
#include "symba/space.hpp"
#include "symba/tree.hpp"

namespace {

using namespace symba;

constexpr const char* kVersion = "0.1.0";

struct Opts {
  std::string space;
  std::string weights = "harmonic";
  std::string M;
  std::string extension;
  std::string p;
  std::string vec;
  bool vec_given = false;
  std::string provider = "counting";
  bool modular = false;
  std::string rho;
  std::string invert;
  std::string eval;
  size_t n = 0;
  size_t m = 0;
  size_t k = 0;
  size_t N = 0;
  std::string K;
  double flat_tol = -1;
  double slope_tol = -1;
  std::string kind;
  std::string builtin_name;
  std::string samples_file;
  std::string eta;
  std::string a;
  std::string b;
  std::string alpha;
  std::string node;
  std::string xi;
  std::string base;
  std::string exclude;
  std::string betas;
  size_t budget = 1;
  std::string s;
  std::string u;
  std::vector<std::string> points;
  std::vector<std::string> wedges;
  std::string action;
  std::string format = "json";
  std::string mode = "exact";
  std::string out;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const char* what) {
  try {
    return to_double(parse_rational(text));
  } catch (const validation_error&) {
  }
  try {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw validation_error(std::string("malformed ") + what + ": '" + text + "'");
  }
}

// Rational when the literal is "p/q" form, binary64 otherwise; "e" is Euler's
// number. Float mode demotes rationals so space evaluation takes the
// binary64 lane.
Value parse_value(const std::string& text, const std::string& mode, const char* what) {
  Value v = [&]() -> Value {
    if (text == "e") return Value(std::exp(1.0));
    try {
      return Value(parse_rational(text));
    } catch (const validation_error&) {
      return Value(parse_double(text, what));
    }
  }();
  if (mode == "float" && v.exact()) return Value(v.as_double());
  return v;
}

std::vector<Rational> load_rational_list(const std::string& path, const char* what) {
  Json j = load_json_file(path);
  if (j.is_object() && j.contains("values")) j = j.at("values");
  if (!j.is_array()) throw validation_error(std::string(what) + " file must hold an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

WeightSeq make_weights(const Opts& o) {
  if (o.weights == "harmonic") return WeightSeq::harmonic();
  if (o.weights.rfind("explicit:", 0) == 0)
    return WeightSeq::explicit_list(load_rational_list(o.weights.substr(9), "weights"));
  throw validation_error("unknown weights: '" + o.weights + "'");
}

OrliczFn make_orlicz(const Opts& o) {
  if (o.M.empty()) throw validation_error("this operation needs --M");
  ExtensionRule rule = ExtensionRule::Analytic;
  if (o.extension == "affine")
    rule = ExtensionRule::Affine;
  else if (!o.extension.empty() && o.extension != "analytic")
    throw validation_error("unknown extension rule: '" + o.extension + "'");
  if (o.M == "exp_reciprocal") return OrliczFn::exp_reciprocal(rule);
  if (o.M == "leung") return OrliczFn::leung();
  if (o.M.rfind("power:", 0) == 0) {
    const std::string digits = o.M.substr(6);
    try {
      size_t used = 0;
      long p = std::stol(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(digits);
      return OrliczFn::power(p);
    } catch (const std::exception&) {
      throw validation_error("malformed power exponent: '" + digits + "'");
    }
  }
  if (o.M.rfind("file:", 0) == 0) return orlicz_from_json(load_json_file(o.M.substr(5)));
  throw validation_error("unknown Orlicz function: '" + o.M + "'");
}

ExponentSeq make_exponents(const Opts& o) {
  if (o.p.empty()) throw validation_error("this operation needs --p");
  if (o.p == "loglog") return ExponentSeq::loglog();
  if (o.p == "linear") return ExponentSeq::linear();
  if (o.p.rfind("explicit:", 0) == 0)
    return ExponentSeq::explicit_list(load_rational_list(o.p.substr(9), "exponents"));
  throw validation_error("unknown exponent rule: '" + o.p + "'");
}

SpaceSpec make_space(const Opts& o) {
  if (o.space.empty()) throw validation_error("this operation needs --space");
  if (o.space == "lorentz_predual") return SpaceSpec::lorentz_predual(make_weights(o));
  if (o.space == "lorentz_dual") return SpaceSpec::lorentz_dual(make_weights(o));
  if (o.space == "counting") return SpaceSpec::counting();
  if (o.space == "orlicz") return SpaceSpec::orlicz(make_orlicz(o));
  if (o.space == "nakano") return SpaceSpec::nakano(make_exponents(o));
  if (o.space.rfind("file:", 0) == 0) return space_from_json(load_json_file(o.space.substr(5)));
  throw validation_error("unknown space: '" + o.space + "'");
}

RhoProvider make_provider(const Opts& o) {
  if (o.provider == "counting") return RhoProvider::counting();
  if (o.provider == "symmetric") return RhoProvider::symmetric(make_space(o));
  if (o.provider.rfind("table:", 0) == 0)
    return RhoProvider::table_values(load_rational_list(o.provider.substr(6), "table"));
  throw validation_error("unknown rho provider: '" + o.provider + "'");
}

FinVec make_vec(const Opts& o) {
  if (!o.vec_given) throw validation_error("this operation needs --vec");
  return FinVec::parse(o.vec);
}

std::vector<Ordinal> parse_ordinal_list(const std::string& text, const char* what) {
  std::vector<Ordinal> out;
  if (trimmed(text).empty()) return out;
  for (const auto& part : split(text, ',')) {
    if (trimmed(part).empty())
      throw validation_error(std::string("empty entry in ") + what + " list");
    out.push_back(parse_ordinal(part));
  }
  return out;
}

Value displayed(Value v, const std::string& mode) {
  if (mode == "float" && v.exact()) return Value(v.as_double());
  return v;
}

// ---- rendering ----------------------------------------------------------

struct SeriesTable {
  // One row per sample: n, s_n, lower, upper (lower = upper = s_n without an
  // enclosure).
  std::vector<std::array<std::string, 4>> rows;
};

SeriesTable series_table(const SeriesDiagnostic& d) {
  SeriesTable t;
  for (size_t i = 0; i < d.samples.size(); ++i) {
    std::string s = d.samples[i].second.str();
    std::string lo = s, hi = s;
    if (i < d.enclosures.size()) {
      lo = format_float(d.enclosures[i][0]);
      hi = format_float(d.enclosures[i][1]);
    }
    t.rows.push_back({std::to_string(d.samples[i].first), s, lo, hi});
  }
  return t;
}

std::string render_csv_rows(const SeriesTable& t) {
  std::string out = "n,s_n,lower,upper\n";
  for (const auto& r : t.rows) out += r[0] + "," + r[1] + "," + r[2] + "," + r[3] + "\n";
  return out;
}

std::string render_columns(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::string out;
  auto emit = [&](const std::vector<std::string>& r) {
    for (size_t c = 0; c < r.size(); ++c) {
      out += r[c];
      if (c + 1 < r.size()) out += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out += "\n";
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return out;
}

std::string render_scalar_table(const Json& report) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, value] : report.items()) {
    if (key == "manifest") continue;
    rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
  }
  return render_columns({"field", "value"}, rows);
}

struct Report {
  Json json;                           // always present
  std::optional<SeriesTable> series;   // kinds that render as CSV
  std::optional<std::string> table;    // pre-rendered human table
};

// ---- subcommand handlers -------------------------------------------------

Report run_norm(const Opts& o) {
  Report r;
  if (!o.invert.empty()) {
    OrliczFn M = make_orlicz(o);
    double y = parse_double(o.invert, "--invert argument");
    r.json["value"] = format_float(orlicz_inverse(M, y));
    return r;
  }
  if (!o.eval.empty()) {
    OrliczFn M = make_orlicz(o);
    double t = parse_double(o.eval, "--eval argument");
    r.json["value"] = format_float(M.eval(t));
    return r;
  }
  SpaceSpec spec = make_space(o);
  FinVec f = make_vec(o);
  if (o.modular) {
    if (o.rho.empty()) throw validation_error("--modular needs --rho");
    Value rho = parse_value(o.rho, o.mode, "--rho argument");
    r.json["value"] = displayed(modular_value(f, spec, rho), o.mode).str();
    return r;
  }
  r.json["value"] = displayed(norm_value(spec, f), o.mode).str();
  return r;
}

Report run_mu_lambda(const Opts& o) {
  if (o.n == 0) throw validation_error("mu-lambda needs --n >= 1");
  SpaceSpec spec = make_space(o);
  FundamentalPair pair = fundamental_functions(spec, o.n);
  Report r;
  r.json["n"] = o.n;
  r.json["lambda"] = displayed(pair.lambda, o.mode).str();
  r.json["mu"] = displayed(pair.mu, o.mode).str();
  return r;
}

Report run_profile(const Opts& o) {
  RangeProfile profile = range_profile(make_vec(o));
  Report r;
  Json p = Json::array(), q = Json::array(), sizes = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (size_t k = 0; k < profile.levels(); ++k) {
    p.push_back(to_string(profile.p[k]));
    q.push_back(to_string(profile.q[k]));
    sizes.push_back(profile.G[k].size());
    rows.push_back({to_string(profile.p[k]), to_string(profile.q[k]),
                    std::to_string(profile.G[k].size())});
  }
  r.json["p"] = p;
  r.json["q"] = q;
  r.json["G_sizes"] = sizes;
  r.table = render_columns({"p", "q", "G_size"}, rows);
  return r;
}

Report run_theta(const Opts& o) {
  ThetaBreakdown b = theta_breakdown(make_vec(o), make_provider(o));
  Report r;
  r.json = theta_to_json(b);
  std::vector<std::vector<std::string>> rows;
  for (size_t k = 0; k < b.profile.levels(); ++k)
    rows.push_back({to_string(b.profile.p[k]), to_string(b.profile.q[k]),
                    to_string(b.rho[k])});
  r.table = render_columns({"p", "q", "rho"}, rows) + "theta = " + to_string(b.theta) + "\n";
  return r;
}

Report run_approx(const Opts& o) {
  FinVec f = make_vec(o);
  Report r;
  if (o.action == "omega") {
    if (o.k == 0) throw validation_error("approx omega needs --k >= 1");
    r.json["omega"] = finvec_to_json(omega(f, o.k));
    return r;
  }
  if (o.m == 0) throw validation_error("approx " + o.action + " needs --m >= 1");
  if (o.action == "h") {
    r.json["h"] = finvec_to_json(h_functional(f, o.m));
    return r;
  }
  if (o.action == "g" || o.action == "j") {
    if (o.n == 0) throw validation_error("approx " + o.action + " needs --n > --m");
    RhoProvider provider = make_provider(o);
    FinVec out = o.action == "g" ? g_functional(f, o.m, o.n, provider)
                                 : j_functional(f, o.m, o.n, provider);
    r.json[o.action] = finvec_to_json(out);
    return r;
  }
  if (o.action == "weights") {
    Json w = Json::object();
    for (const auto& [n, lambda] : convex_weights(f, o.m, make_provider(o)))
      w[std::to_string(n)] = to_string(lambda);
    r.json["weights"] = w;
    return r;
  }
  if (o.action == "reconstruct") {
    Reconstruction rec = reconstruct(f, o.m, make_provider(o));
    r.json["reconstruction"] = finvec_to_json(rec.reconstruction);
    r.json["residual"] = to_string(rec.residual_norm);
    return r;
  }
  if (o.action == "tail") {
    r.json["tail_bound"] = to_string(tail_bound(f, o.m, make_provider(o)));
    return r;
  }
  throw validation_error("unknown approx action: '" + o.action +
                         "' (h, g, j, omega, weights, reconstruct, tail)");
}

ClassifyPolicy make_policy(const Opts& o) {
  ClassifyPolicy policy;
  if (o.flat_tol >= 0) policy.flat_tol = o.flat_tol;
  if (o.slope_tol >= 0) policy.slope_tol = o.slope_tol;
  return policy;
}

Report run_check(const Opts& o) {
  Report r;
  if (!o.builtin_name.empty()) {
    BuiltinRun run = run_builtin(o.builtin_name);
    r.json = builtin_run_to_json(run);
    return r;
  }
  if (!o.samples_file.empty()) {
    Json j = load_json_file(o.samples_file);
    if (j.is_object() && j.contains("samples")) j = j.at("samples");
    if (!j.is_array()) throw validation_error("samples file must hold an array of [n, value]");
    std::vector<std::pair<size_t, double>> samples;
    Json echoed = Json::array();
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2)
        throw validation_error("each sample must be a [n, value] pair");
      size_t n = e.at(0).get<size_t>();
      std::string text = e.at(1).is_string() ? e.at(1).get<std::string>()
                                             : e.at(1).dump();
      samples.emplace_back(n, parse_double(text, "sample value"));
      echoed.push_back(Json::array({n, text}));
    }
    ClassifyPolicy policy = make_policy(o);
    Verdict verdict = classify(samples, policy);
    r.json["kind"] = "samples";
    r.json["N"] = samples.empty() ? 0 : samples.back().first;
    r.json["samples"] = echoed;
    r.json["verdict"] = verdict_name(verdict);
    r.json["policy"] = Json{{"flat_tol", format_float(policy.flat_tol)},
                            {"slope_tol", format_float(policy.slope_tol)}};
    SeriesTable t;
    for (const auto& [n, v] : samples) {
      std::string s = format_float(v);
      t.rows.push_back({std::to_string(n), s, s, s});
    }
    r.series = std::move(t);
    return r;
  }
  if (o.kind.empty())
    throw validation_error("check needs one of --kind, --builtin, --samples");
  auto kind = parse_series_kind(o.kind);
  if (!kind) throw validation_error("unknown series kind: '" + o.kind + "'");
  if (o.N == 0) throw validation_error("check --kind needs --N");
  SeriesParams params;
  params.policy = make_policy(o);
  switch (*kind) {
    case SeriesKind::Thm44Sum:
    case SeriesKind::Cor46Sum:
    case SeriesKind::LambdaBounded:
      params.space = make_space(o);
      break;
    case SeriesKind::OrliczEq5:
    case SeriesKind::LeungSum:
    case SeriesKind::LeungRatio:
      params.M = make_orlicz(o);
      if (o.K.empty()) throw validation_error(o.kind + " needs --K");
      params.K = parse_rational(o.K);
      break;
    case SeriesKind::NakanoProp:
      params.p = make_exponents(o);
      if (o.rho.empty()) throw validation_error("nakano_prop needs --rho");
      params.rho = parse_value(o.rho, o.mode, "--rho argument");
      break;
  }
  SeriesDiagnostic d = series(*kind, params, o.N);
  r.json = series_to_json(d);
  r.series = series_table(d);
  return r;
}

Report run_tree(const Opts& o) {
  Report r;
  if (o.action == "q") {
    if (o.eta.empty()) throw validation_error("tree q needs --eta");
    r.json["q"] = ordinal_to_string(q_of(parse_ordinal(o.eta)));
    return r;
  }
  if (o.action == "cmp") {
    if (o.a.empty() || o.b.empty()) throw validation_error("tree cmp needs --a and --b");
    int c = ord_compare(parse_ordinal(o.a), parse_ordinal(o.b));
    r.json["order"] = c < 0 ? "less" : (c > 0 ? "greater" : "equal");
    return r;
  }
  if (o.alpha.empty()) throw validation_error("tree " + o.action + " needs --alpha");
  Ordinal alpha = parse_ordinal(o.alpha);
  if (o.action == "member") {
    if (o.node.empty()) throw validation_error("tree member needs --node");
    MembershipReport report = check_member(alpha, parse_node_seq(o.node));
    r.json["member"] = report.member;
    if (!report.member) {
      if (report.violation_index) r.json["violation_index"] = *report.violation_index;
      r.json["detail"] = report.detail;
    }
    return r;
  }
  if (o.action == "rank") {
    if (o.node.empty()) throw validation_error("tree rank needs --node");
    r.json["rank"] = ordinal_to_string(cb_rank(parse_node(alpha, o.node)));
    return r;
  }
  if (o.action == "isolated") {
    if (o.node.empty() || o.xi.empty())
      throw validation_error("tree isolated needs --node and --xi");
    r.json["isolated"] = is_isolated_in_levelset(parse_node(alpha, o.node), parse_ordinal(o.xi));
    return r;
  }
  if (o.action == "wedge") {
    if (o.base.empty() || o.node.empty())
      throw validation_error("tree wedge needs --base and --node");
    WedgeNbhd U = make_wedge(parse_node(alpha, o.base),
                             parse_ordinal_list(o.exclude, "--exclude"));
    r.json["contains"] = wedge_contains(U, parse_node(alpha, o.node));
    return r;
  }
  if (o.action == "children") {
    if (o.node.empty()) throw validation_error("tree children needs --node");
    auto children = children_sample(parse_node(alpha, o.node),
                                    parse_ordinal_list(o.betas, "--betas"), o.budget);
    Json list = Json::array();
    for (const auto& child : children) list.push_back(node_to_string(child));
    r.json["children"] = list;
    return r;
  }
  if (o.action == "transport") {
    if (o.s.empty() || o.u.empty())
      throw validation_error("tree transport needs --s and --u");
    if (o.points.size() != o.wedges.size() || o.points.empty())
      throw validation_error("tree transport needs matching --point/--wedge lists");
    std::vector<TreeNode> points;
    for (const auto& text : o.points) points.push_back(parse_node(alpha, text));
    std::vector<WedgeNbhd> wedges;
    for (const auto& text : o.wedges) {
      size_t bar = text.find('|');
      if (bar == std::string::npos)
        throw validation_error("--wedge format is 'base|f1,f2' (| required): '" + text + "'");
      wedges.push_back(make_wedge(parse_node(alpha, text.substr(0, bar)),
                                  parse_ordinal_list(text.substr(bar + 1), "wedge exclusions")));
    }
    DiracCombo combo =
        dirac_transport(parse_node(alpha, o.s), parse_node(alpha, o.u), points, wedges);
    Json coeffs = Json::object();
    for (const auto& [node, c] : combo.coeffs) coeffs[node] = to_string(c);
    r.json["coeffs"] = coeffs;
    r.json["support"] = combo.coeffs.size();
    return r;
  }
  throw validation_error("unknown tree action: '" + o.action +
                         "' (q, cmp, member, rank, isolated, wedge, children, transport)");
}

// ---- top level -----------------------------------------------------------

void emit(const std::string& text, const Opts& o) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw validation_error("cannot open output file: " + o.out);
  f << text;
}

int run(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();
  Opts o;

  CLI::App app{"symba: symmetric sequence-space norms, approximating functionals, "
               "series diagnostics, and scattered trees"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json|csv|table");
    sub->add_option("--mode", o.mode, "exact|float");
    sub->add_option("--out", o.out, "write the report to a file");
    return sub;
  };
  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--space", o.space,
                    "lorentz_predual|lorentz_dual|counting|orlicz|nakano|file:<path>");
    sub->add_option("--weights", o.weights, "harmonic|explicit:<file>");
    sub->add_option("--M", o.M, "exp_reciprocal|power:<p>|leung|file:<path>");
    sub->add_option("--extension", o.extension, "affine|analytic");
    sub->add_option("--p", o.p, "loglog|linear|explicit:<file>");
  };

  CLI::App* norm = add_common(app.add_subcommand("norm", "norms, modulars, M values"));
  add_space(norm);
  norm->add_option("--vec", o.vec)->each([&](const std::string&) { o.vec_given = true; });
  norm->add_flag("--modular", o.modular, "evaluate the modular instead of the norm");
  norm->add_option("--rho", o.rho, "modular scale");
  norm->add_option("--invert", o.invert, "evaluate M^{-1} at this value");
  norm->add_option("--eval", o.eval, "evaluate M at this value");

  CLI::App* mulambda = add_common(app.add_subcommand("mu-lambda", "fundamental functions"));
  add_space(mulambda);
  mulambda->add_option("--n", o.n);

  CLI::App* profile = add_common(app.add_subcommand("profile", "range profile"));
  profile->add_option("--vec", o.vec)->each([&](const std::string&) { o.vec_given = true; });

  CLI::App* theta = add_common(app.add_subcommand("theta", "theta breakdown"));
  add_space(theta);
  theta->add_option("--vec", o.vec)->each([&](const std::string&) { o.vec_given = true; });
  theta->add_option("--provider", o.provider, "counting|symmetric|table:<file>");

  CLI::App* approx = add_common(
      app.add_subcommand("approx", "h/g/j/omega functionals, weights, reconstruction"));
  add_space(approx);
  approx->add_option("action", o.action, "h|g|j|omega|weights|reconstruct|tail")->required();
  approx->add_option("--vec", o.vec)->each([&](const std::string&) { o.vec_given = true; });
  approx->add_option("--provider", o.provider, "counting|symmetric|table:<file>");
  approx->add_option("--m", o.m);
  approx->add_option("--n", o.n);
  approx->add_option("--k", o.k);

  CLI::App* check = add_common(app.add_subcommand("check", "series diagnostics"));
  add_space(check);
  check->add_option("--kind", o.kind,
                    "thm44|cor46|orlicz_eq5|leung_sum|leung_ratio|nakano_prop|lambda_bounded");
  check->add_option("--builtin", o.builtin_name,
                    "lorentz_harmonic|nakano_loglog|orlicz_exp_reciprocal|leung_counterexample");
  check->add_option("--samples", o.samples_file, "classify samples from a JSON file");
  check->add_option("--N", o.N);
  check->add_option("--K", o.K, "rational scale constant");
  check->add_option("--rho", o.rho, "nakano_prop base (accepts e)");
  check->add_option("--flat-tol", o.flat_tol);
  check->add_option("--slope-tol", o.slope_tol);

  CLI::App* tree = add_common(app.add_subcommand("tree", "scattered trees M_alpha"));
  tree->add_option("action", o.action,
                   "q|cmp|member|rank|isolated|wedge|children|transport")->required();
  tree->add_option("--eta", o.eta, "ordinal for tree q");
  tree->add_option("--a", o.a);
  tree->add_option("--b", o.b);
  tree->add_option("--alpha", o.alpha, "ambient tree parameter");
  tree->add_option("--node", o.node, "node literal like \"[w*3+1, 5]\"");
  tree->add_option("--xi", o.xi, "level set");
  tree->add_option("--base", o.base, "wedge base node");
  tree->add_option("--exclude", o.exclude, "comma-separated excluded ordinals");
  tree->add_option("--betas", o.betas, "comma-separated child indices");
  tree->add_option("--budget", o.budget, "children per beta");
  tree->add_option("--s", o.s);
  tree->add_option("--u", o.u);
  // allow_extra_args(false): one node literal per flag, and keeps CLI11 from
  // lexing "[10]" as a bracketed list
  tree->add_option("--point", o.points, "transport points, in order")
      ->allow_extra_args(false);
  tree->add_option("--wedge", o.wedges, "transport wedges as 'base|f1,f2', in order")
      ->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw validation_error(std::string("argument error: ") + e.what());
  }

  if (o.format != "json" && o.format != "csv" && o.format != "table")
    throw validation_error("unknown format: '" + o.format + "'");
  if (o.mode != "exact" && o.mode != "float")
    throw validation_error("unknown mode: '" + o.mode + "'");

  Report report;
  std::string subcommand;
  if (norm->parsed()) {
    subcommand = "norm";
    report = run_norm(o);
  } else if (mulambda->parsed()) {
    subcommand = "mu-lambda";
    report = run_mu_lambda(o);
  } else if (profile->parsed()) {
    subcommand = "profile";
    report = run_profile(o);
  } else if (theta->parsed()) {
    subcommand = "theta";
    report = run_theta(o);
  } else if (approx->parsed()) {
    subcommand = "approx";
    report = run_approx(o);
  } else if (check->parsed()) {
    subcommand = "check";
    report = run_check(o);
  } else {
    subcommand = "tree";
    report = run_tree(o);
  }

  if (o.format == "csv") {
    if (!report.series)
      throw validation_error("csv output is only available for series reports");
    emit(render_csv_rows(*report.series), o);
    return 0;
  }
  if (o.format == "table") {
    if (report.table) {
      emit(*report.table, o);
    } else if (report.series) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : report.series->rows)
        rows.push_back({r[0], r[1], r[2], r[3]});
      emit(render_columns({"n", "s_n", "lower", "upper"}, rows), o);
    } else {
      emit(render_scalar_table(report.json), o);
    }
    return 0;
  }

  Json manifest = Json::object();
  manifest["subcommand"] = subcommand;
  Json echo = Json::array();
  for (int i = 1; i < argc; ++i) echo.push_back(std::string(argv[i]));
  manifest["argv"] = echo;
  manifest["mode"] = o.mode;
  manifest["version"] = kVersion;
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  manifest["wall_time_ms"] = format_float(ms);
  report.json["manifest"] = manifest;
  emit(report.json.dump(2) + "\n", o);
  return 0;
}

void emit_error(const char* type, const std::string& message) {
  Json err = Json::object();
  err["error"] = Json{{"type", type}, {"message", message}};
  std::cout << err.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const validation_error& e) {
    emit_error("validation", e.what());
    return 2;
  } catch (const numeric_error& e) {
    emit_error("numeric", e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 3;
  }
}
