#include "symba/series.hpp"

#include <algorithm>
#include <cmath>

#include "symba/errors.hpp"

namespace symba {

std::string series_kind_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Thm44Sum:
      return "thm44";
    case SeriesKind::Cor46Sum:
      return "cor46";
    case SeriesKind::OrliczEq5:
      return "orlicz_eq5";
    case SeriesKind::LeungSum:
      return "leung_sum";
    case SeriesKind::LeungRatio:
      return "leung_ratio";
    case SeriesKind::NakanoProp:
      return "nakano_prop";
    case SeriesKind::LambdaBounded:
      return "lambda_bounded";
  }
  return "";
}

std::optional<SeriesKind> parse_series_kind(const std::string& name) {
  for (SeriesKind k :
       {SeriesKind::Thm44Sum, SeriesKind::Cor46Sum, SeriesKind::OrliczEq5,
        SeriesKind::LeungSum, SeriesKind::LeungRatio, SeriesKind::NakanoProp,
        SeriesKind::LambdaBounded})
    if (series_kind_name(k) == name) return k;
  return std::nullopt;
}

bool series_kind_is_sequence(SeriesKind kind) {
  return kind == SeriesKind::LeungRatio || kind == SeriesKind::LambdaBounded;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::BoundedLikely:
      return "bounded-likely";
    case Verdict::DivergingLikely:
      return "diverging-likely";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "";
}

std::vector<size_t> sample_grid(size_t N) {
  if (N < 1) throw validation_error("series horizon must be >= 1");
  std::vector<size_t> grid;
  double x = 1.0;
  while (true) {
    size_t n = size_t(std::ceil(x));
    if (n >= N) break;
    if (grid.empty() || n > grid.back()) grid.push_back(n);
    x *= 1.3;
  }
  grid.push_back(N);
  return grid;
}

namespace {

struct ClassifyResult {
  Verdict verdict;
  bool monotone;
  double slope_logn;
  double slope_loglogn;
};

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  size_t n = x.size();
  if (n < 2) return 0.0;
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double cov = 0, var = 0;
  for (size_t i = 0; i < n; ++i) {
    cov += (x[i] - mx) * (y[i] - my);
    var += (x[i] - mx) * (x[i] - mx);
  }
  return var == 0 ? 0.0 : cov / var;
}

ClassifyResult classify_full(const std::vector<std::pair<size_t, double>>& samples,
                             const ClassifyPolicy& policy) {
  if (samples.size() < 8) throw validation_error("classify needs at least 8 samples");
  ClassifyResult out{Verdict::Inconclusive, true, 0, 0};
  for (size_t i = 1; i < samples.size(); ++i)
    if (samples[i].second < samples[i - 1].second) out.monotone = false;

  // Slopes are fitted on the tail half so early transients cannot fake growth.
  size_t tail = std::max<size_t>(4, samples.size() / 2);
  std::vector<double> xl, yl, xll, yll;
  for (size_t i = samples.size() - tail; i < samples.size(); ++i) {
    double n = double(samples[i].first);
    xl.push_back(std::log(n));
    yl.push_back(samples[i].second);
    if (samples[i].first >= 2) {
      xll.push_back(std::log(std::log(n)));
      yll.push_back(samples[i].second);
    }
  }
  out.slope_logn = ls_slope(xl, yl);
  out.slope_loglogn = ls_slope(xll, yll);

  size_t q = std::max<size_t>(2, samples.size() / 4);
  double lo = samples[samples.size() - q].second, hi = lo;
  for (size_t i = samples.size() - q; i < samples.size(); ++i) {
    lo = std::min(lo, samples[i].second);
    hi = std::max(hi, samples[i].second);
  }
  double scale = std::max(std::abs(hi), std::abs(lo));
  if (scale == 0 || (hi - lo) / scale < policy.flat_tol) {
    out.verdict = Verdict::BoundedLikely;
  } else if (out.monotone && (out.slope_logn > policy.slope_tol ||
                              out.slope_loglogn > policy.slope_tol)) {
    out.verdict = Verdict::DivergingLikely;
  }
  return out;
}

// --- exact Lorentz/Counting lanes -----------------------------------------

// mu(k) for k = 0..N in one pass.
std::vector<Rational> mu_prefix(const SpaceSpec& spec, size_t N) {
  std::vector<Rational> mu;
  switch (spec.kind) {
    case SpaceKind::LorentzPredual:
      return spec.weights->prefix_sums(N);
    case SpaceKind::LorentzDual: {
      auto w = spec.weights->prefix_sums(N);
      mu.reserve(N + 1);
      mu.push_back(0);
      for (size_t k = 1; k <= N; ++k) mu.push_back(Rational(BigInt(k)) / w[k]);
      return mu;
    }
    case SpaceKind::Counting:
      mu.reserve(N + 1);
      for (size_t k = 0; k <= N; ++k) mu.push_back(Rational(BigInt(k)));
      return mu;
    default:
      throw validation_error(
          "this series needs an exact-lane space (lorentz_predual, lorentz_dual, "
          "counting); for Nakano boundedness use kind nakano_prop");
  }
}

// Norm of the vector whose coordinates are coords[0..n), which must be sorted
// non-increasing and non-negative.
Rational exact_sorted_norm(const SpaceSpec& spec, const std::vector<Rational>& coords,
                           size_t n) {
  switch (spec.kind) {
    case SpaceKind::LorentzPredual: {
      Rational best = 0, num = 0, den = 0;
      for (size_t k = 0; k < n; ++k) {
        num += coords[k];
        den += spec.weights->at(k + 1);
        Rational ratio = num / den;
        if (ratio > best) best = ratio;
      }
      return best;
    }
    case SpaceKind::LorentzDual: {
      Rational sum = 0;
      for (size_t k = 0; k < n; ++k) sum += spec.weights->at(k + 1) * coords[k];
      return sum;
    }
    case SpaceKind::Counting:
      return n == 0 ? Rational(0) : coords[0];
    default:
      throw validation_error("exact norm lane requires a rational space");
  }
}

SeriesDiagnostic make_diagnostic(SeriesKind kind, size_t N,
                                 std::vector<std::pair<size_t, Value>> samples,
                                 const ClassifyPolicy& policy) {
  SeriesDiagnostic d;
  d.kind = kind;
  d.N = N;
  d.samples = std::move(samples);
  d.policy = policy;
  std::vector<std::pair<size_t, double>> flat;
  flat.reserve(d.samples.size());
  for (const auto& [n, v] : d.samples) flat.emplace_back(n, v.as_double());
  auto cls = classify_full(flat, policy);
  d.monotone = cls.monotone;
  d.slope_logn = cls.slope_logn;
  d.slope_loglogn = cls.slope_loglogn;
  d.verdict = cls.verdict;
  return d;
}

SeriesDiagnostic norm_partial_sums(SeriesKind kind, const SeriesParams& params, size_t N) {
  if (!params.space) throw validation_error("this series kind needs a space");
  const SpaceSpec& spec = *params.space;
  auto mu = mu_prefix(spec, N);
  std::vector<Rational> coords;
  coords.reserve(N);
  bool sorted = true;
  for (size_t k = 1; k <= N; ++k) {
    if (kind == SeriesKind::Thm44Sum) {
      coords.push_back(mu[k] - mu[k - 1]);
    } else {
      // 1/lambda(k) = mu(k)/k
      coords.push_back(mu[k] / Rational(BigInt(k)));
    }
    if (coords.back() <= 0)
      throw validation_error("series coordinates must be positive (mu not increasing?)");
    if (k > 1 && coords[k - 1] > coords[k - 2]) sorted = false;
  }
  // Norms are computed exactly; samples are stored at binary64 so reports
  // stay plot-ready. Exact assertions recompute through exact_sorted_norm.
  std::vector<std::pair<size_t, Value>> samples;
  for (size_t n : sample_grid(N)) {
    if (sorted) {
      samples.emplace_back(n, Value(to_double(exact_sorted_norm(spec, coords, n))));
    } else {
      std::vector<Rational> prefix(coords.begin(), coords.begin() + long(n));
      std::sort(prefix.begin(), prefix.end(), std::greater<Rational>());
      samples.emplace_back(n, Value(to_double(exact_sorted_norm(spec, prefix, n))));
    }
  }
  return make_diagnostic(kind, N, std::move(samples), params.policy);
}

SeriesDiagnostic eq5_sums(const SeriesParams& params, size_t N) {
  if (!params.M || !params.K) throw validation_error("orlicz_eq5 needs M and K");
  double K = to_double(*params.K);
  if (!(K > 1)) throw validation_error("orlicz_eq5 needs K > 1");
  auto grid = sample_grid(N);
  std::vector<std::pair<size_t, Value>> samples;
  double sum = 0;
  size_t next = 0;
  for (size_t n = 1; n <= N; ++n) {
    double t = orlicz_inverse(*params.M, 1.0 / double(n));
    sum += params.M->eval(t / K);
    if (n == grid[next]) {
      samples.emplace_back(n, Value(sum));
      ++next;
    }
  }
  return make_diagnostic(SeriesKind::OrliczEq5, N, std::move(samples), params.policy);
}

// K must be an exact power of two for the factored Leung lane.
size_t dyadic_exponent(const Rational& K) {
  if (denominator(K) != 1 || K < 2)
    throw validation_error("Leung series need dyadic K = 2^m with m >= 1");
  BigInt n = numerator(K);
  size_t m = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++m;
  }
  if (n != 1) throw validation_error("Leung series need dyadic K = 2^m with m >= 1");
  return m;
}

SeriesDiagnostic leung_series(SeriesKind kind, const SeriesParams& params, size_t N) {
  if (!params.M || !params.K) throw validation_error("Leung series need M and K");
  const OrliczFn& M = *params.M;
  bool factored = M.kind() == OrliczFn::Kind::Leung;
  size_t m = 0;
  double K = to_double(*params.K);
  if (factored)
    m = dyadic_exponent(*params.K);
  else if (!(K > 1))
    throw validation_error("Leung series need K > 1");

  auto grid = sample_grid(N);
  std::vector<std::pair<size_t, Value>> samples;
  std::vector<std::array<double, 2>> enclosures;
  std::vector<std::string> notes;
  std::optional<size_t> crossing;

  auto term_at = [&](size_t j) -> OrliczFn::Interval {
    if (factored) return OrliczFn::leung_dyadic_ratio(j, m);
    double t = std::ldexp(1.0, -int(std::min<size_t>(j, 4000)));
    double den = M.eval(t);
    if (t == 0 || den == 0) {
      if (notes.empty())
        notes.push_back("terms below binary64 underflow treated as 0 from j = " +
                        std::to_string(j));
      return {0.0, 0.0};
    }
    double r = M.eval(t / K) / den;
    return {r, r};
  };

  if (kind == SeriesKind::LeungRatio) {
    for (size_t j : grid) {
      auto iv = term_at(j);
      samples.emplace_back(j, Value(0.5 * (iv.lo + iv.hi)));
      enclosures.push_back({iv.lo, iv.hi});
    }
  } else {
    double slo = 0, shi = 0;
    size_t next = 0;
    for (size_t j = 1; j <= N; ++j) {
      auto iv = term_at(j);
      slo += iv.lo;
      shi += iv.hi;
      if (!crossing && 0.5 * (slo + shi) >= 10.0) crossing = j;
      if (j == grid[next]) {
        samples.emplace_back(j, Value(0.5 * (slo + shi)));
        enclosures.push_back({slo, shi});
        ++next;
      }
    }
  }
  auto d = make_diagnostic(kind, N, std::move(samples), params.policy);
  d.enclosures = std::move(enclosures);
  d.crossing = crossing;
  d.notes = std::move(notes);
  return d;
}

SeriesDiagnostic nakano_prop_sums(const SeriesParams& params, size_t N) {
  if (!params.p || !params.rho) throw validation_error("nakano_prop needs p and rho");
  double rho = params.rho->as_double();
  if (!(rho > 1)) throw validation_error("nakano_prop needs rho > 1");
  double lr = std::log(rho);
  auto grid = sample_grid(N);
  std::vector<std::pair<size_t, Value>> samples;
  double sum = 0;
  size_t next = 0;
  for (size_t k = 1; k <= N; ++k) {
    sum += std::exp(-params.p->at(k) * lr) / double(k);
    if (k == grid[next]) {
      samples.emplace_back(k, Value(sum));
      ++next;
    }
  }
  return make_diagnostic(SeriesKind::NakanoProp, N, std::move(samples), params.policy);
}

SeriesDiagnostic lambda_sequence(const SeriesParams& params, size_t N) {
  if (!params.space) throw validation_error("lambda_bounded needs a space");
  const SpaceSpec& spec = *params.space;
  auto grid = sample_grid(N);
  std::vector<std::pair<size_t, Value>> samples;
  if (spec.exact()) {
    Rational W = 0;
    size_t next = 0;
    for (size_t k = 1; k <= N; ++k) {
      if (spec.kind != SpaceKind::Counting) W += spec.weights->at(k);
      if (k == grid[next]) {
        Rational lambda;
        switch (spec.kind) {
          case SpaceKind::LorentzPredual:
            lambda = Rational(BigInt(k)) / W;
            break;
          case SpaceKind::LorentzDual:
            lambda = W;
            break;
          default:
            lambda = 1;
        }
        samples.emplace_back(k, Value(to_double(lambda)));
        ++next;
      }
    }
  } else {
    for (size_t n : grid)
      samples.emplace_back(n, Value(fundamental_functions(spec, n).lambda.as_double()));
  }
  return make_diagnostic(SeriesKind::LambdaBounded, N, std::move(samples), params.policy);
}

}  // namespace

Verdict classify(const std::vector<std::pair<size_t, double>>& samples,
                 const ClassifyPolicy& policy) {
  return classify_full(samples, policy).verdict;
}

SeriesDiagnostic series(SeriesKind kind, const SeriesParams& params, size_t N) {
  if (N < 8) throw validation_error("series horizon must be >= 8");
  switch (kind) {
    case SeriesKind::Thm44Sum:
    case SeriesKind::Cor46Sum:
      return norm_partial_sums(kind, params, N);
    case SeriesKind::OrliczEq5:
      return eq5_sums(params, N);
    case SeriesKind::LeungSum:
    case SeriesKind::LeungRatio:
      return leung_series(kind, params, N);
    case SeriesKind::NakanoProp:
      return nakano_prop_sums(params, N);
    case SeriesKind::LambdaBounded:
      return lambda_sequence(params, N);
  }
  throw validation_error("unknown series kind");
}

namespace {

SeriesParams lorentz_params() {
  SeriesParams p;
  p.space = SpaceSpec::lorentz_predual(WeightSeq::harmonic());
  return p;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"lorentz_harmonic", "nakano_loglog", "orlicz_exp_reciprocal",
          "leung_counterexample"};
}

BuiltinExample builtin(const std::string& name) {
  BuiltinExample out;
  out.name = name;
  if (name == "lorentz_harmonic") {
    out.checks.push_back({"thm44", SeriesKind::Thm44Sum, lorentz_params(), 1000,
                          Verdict::BoundedLikely});
    out.checks.push_back({"cor46", SeriesKind::Cor46Sum, lorentz_params(), 1000,
                          Verdict::DivergingLikely});
    out.checks.push_back({"lambda_bounded", SeriesKind::LambdaBounded, lorentz_params(),
                          100000, Verdict::DivergingLikely});
  } else if (name == "nakano_loglog") {
    SeriesParams p;
    p.p = ExponentSeq::loglog();
    p.rho = Value(std::exp(1.0));
    // The tail of sum k^{-1} e^{-p_k} shrinks like 1/log N, so flatness is
    // graded at 5e-2; truly divergent neighbours still fail this tolerance.
    p.policy.flat_tol = 0.05;
    out.checks.push_back(
        {"nakano_prop rho=e", SeriesKind::NakanoProp, p, 1000000, Verdict::BoundedLikely});
    out.notes.push_back(
        "norm-condition boundedness for this space follows from the rho = e "
        "comparison series; the direct norm series has assignment cost and is "
        "not executed here");
  } else if (name == "orlicz_exp_reciprocal") {
    for (long k : {2, 4, 8, 16}) {
      SeriesParams p;
      p.M = OrliczFn::exp_reciprocal();
      p.K = Rational(k);
      p.policy.flat_tol = 1e-2;  // partial-sum tails of sum n^{-K} at N = 100
      out.checks.push_back({"orlicz_eq5 K=" + std::to_string(k), SeriesKind::OrliczEq5, p,
                            100, Verdict::BoundedLikely});
    }
    for (long k : {2, 4, 8, 16}) {
      SeriesParams p;
      p.M = OrliczFn::exp_reciprocal();
      p.K = Rational(k);
      out.checks.push_back({"leung_sum K=" + std::to_string(k), SeriesKind::LeungSum, p,
                            1000, Verdict::BoundedLikely});
    }
  } else if (name == "leung_counterexample") {
    {
      SeriesParams p;
      p.M = OrliczFn::leung();
      p.K = Rational(2);
      out.checks.push_back(
          {"leung_ratio K=2", SeriesKind::LeungRatio, p, 100000, std::nullopt});
    }
    for (long k : {2, 4, 8, 16}) {
      SeriesParams p;
      p.M = OrliczFn::leung();
      p.K = Rational(k);
      out.checks.push_back({"leung_sum K=" + std::to_string(k), SeriesKind::LeungSum, p,
                            100000, Verdict::DivergingLikely});
    }
    out.notes.push_back(
        "the ratio sequence decays like 1/log j, so its classify verdict is "
        "inconclusive by design; the decay evidence lives in the extra checks");
  } else {
    throw validation_error("unknown builtin: " + name);
  }
  return out;
}

namespace {

void lorentz_extras(std::vector<ExtraCheck>& extras) {
  // Recomputed exactly: report samples are rounded to binary64, but the
  // lower bound here is a statement about the exact partial sum at n = 1000.
  SpaceSpec spec = SpaceSpec::lorentz_predual(WeightSeq::harmonic());
  constexpr size_t n = 1000;
  std::vector<Rational> coords;
  coords.reserve(n);
  Rational mu = 0;
  for (size_t k = 1; k <= n; ++k) {
    mu += spec.weights->at(k);
    coords.push_back(mu / Rational(BigInt(k)));
  }
  std::sort(coords.begin(), coords.end(), std::greater<Rational>());
  Rational s = exact_sorted_norm(spec, coords, n);
  bool pass = s >= Rational(293, 100);
  extras.push_back({"cor46_lower_bound", pass,
                    "s_1000 = " + format_float(to_double(s)) + " >= 2.93: " +
                        (pass ? "yes" : "no")});
}

void nakano_extras(std::vector<ExtraCheck>& extras) {
  ExponentSeq p = ExponentSeq::loglog();
  bool term_bound = true;
  bool increasing = true;
  double first = 0, last = 0;
  auto grid = sample_grid(1000000);
  double prev = -1;
  for (size_t k : grid) {
    if (k < 2) continue;
    double pk = p.at(k);
    double lk = std::log(double(k));
    if (std::exp(-pk) / double(k) >= 1.0 / (double(k) * lk * lk)) term_bound = false;
    double ratio = lk / pk;
    if (prev >= 0 && ratio <= prev) increasing = false;
    if (prev < 0) first = ratio;
    last = ratio;
    prev = ratio;
  }
  extras.push_back({"prop47_term_bound", term_bound,
                    "k^{-1} e^{-p_k} < 1/(k log^2 k) on the grid, k >= 2"});
  bool growth = increasing && last >= 5 * first;
  extras.push_back({"log_over_p_unbounded", growth,
                    "log(k)/p_k increasing on the grid; last/first = " +
                        format_float(last / first)});
}

void eq5_extras(const BuiltinRun& run, std::vector<ExtraCheck>& extras) {
  for (const auto& entry : run.entries) {
    if (entry.label != "orlicz_eq5 K=2") continue;
    double worst = 0;
    double reference = 0;
    size_t covered = 0;
    for (const auto& [n, v] : entry.diagnostic.samples) {
      while (covered < n) {
        ++covered;
        reference += 1.0 / (double(covered) * double(covered));
      }
      worst = std::max(worst, std::abs(v.as_double() - reference));
    }
    bool pass = worst < 1e-6;
    extras.push_back({"eq5_matches_p_series", pass,
                      "max |s_n - sum k^{-2}| = " + format_float(worst)});
  }
}

void leung_extras(const BuiltinRun& run, std::vector<ExtraCheck>& extras) {
  for (size_t e = 0; e < run.entries.size(); ++e) {
    const auto& entry = run.entries[e];
    if (entry.label != "leung_ratio K=2") continue;
    const auto& d = entry.diagnostic;
    bool all_le_one = true, bound_ok = true;
    for (size_t i = 0; i < d.samples.size(); ++i) {
      size_t j = d.samples[i].first;
      double hi = d.enclosures[i][1];
      if (hi > 1.0) all_le_one = false;
      double ab = OrliczFn::leung_slope_ratio(j, 1);  // a_{j+1}/a_j
      if (hi > ab * (1 + 1e-12)) bound_ok = false;
    }
    size_t descent = d.samples.size();
    for (size_t i = 1; i < d.samples.size(); ++i)
      if (d.samples[i].second.as_double() <= d.samples[i - 1].second.as_double()) {
        descent = i;
        break;
      }
    bool tail_monotone = true;
    for (size_t i = descent + 1; i < d.samples.size(); ++i)
      if (d.samples[i].second.as_double() > d.samples[i - 1].second.as_double())
        tail_monotone = false;
    double first = d.samples.front().second.as_double();
    double last = d.samples.back().second.as_double();
    bool decayed = last <= first / 5;
    extras.push_back({"ratio_samples_le_one", all_le_one, "enclosure highs <= 1"});
    extras.push_back({"ratio_slope_bound", bound_ok, "r_j <= a_{j+1}/a_j on the grid"});
    extras.push_back({"ratio_decay", tail_monotone && decayed,
                      "non-increasing beyond first descent; r_last/r_first = " +
                          format_float(last / first)});
  }
}

}  // namespace

BuiltinRun run_builtin(const std::string& name) {
  BuiltinExample kit = builtin(name);
  BuiltinRun run;
  run.name = kit.name;
  run.notes = kit.notes;
  for (const auto& check : kit.checks) {
    SeriesDiagnostic d = series(check.kind, check.params, check.N);
    bool match = !check.expected || *check.expected == d.verdict;
    run.entries.push_back({check.label, std::move(d), check.expected, match});
  }
  if (name == "lorentz_harmonic") lorentz_extras(run.extras);
  if (name == "nakano_loglog") nakano_extras(run.extras);
  if (name == "orlicz_exp_reciprocal") eq5_extras(run, run.extras);
  if (name == "leung_counterexample") leung_extras(run, run.extras);
  run.all_match = true;
  for (const auto& entry : run.entries)
    if (!entry.match) run.all_match = false;
  for (const auto& extra : run.extras)
    if (!extra.pass) run.all_match = false;
  return run;
}

}  // namespace symba
