#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symba/orlicz.hpp"
#include "symba/rational.hpp"
#include "symba/space.hpp"
#include "symba/value.hpp"

namespace symba {

enum class SeriesKind {
  Thm44Sum,      // norm of sum (mu(k)-mu(k-1)) e_k
  Cor46Sum,      // norm of sum e_k / lambda(k)
  OrliczEq5,     // sum M(M^{-1}(1/n)/K)
  LeungSum,      // sum M(2^{-j}/K)/M(2^{-j})
  LeungRatio,    // the ratio sequence itself, sampled at t = 2^{-j}
  NakanoProp,    // sum k^{-1} rho^{-p_k}
  LambdaBounded  // the sequence lambda(n) itself
};

std::string series_kind_name(SeriesKind kind);
std::optional<SeriesKind> parse_series_kind(const std::string& name);
bool series_kind_is_sequence(SeriesKind kind);  // samples are terms, not partial sums

enum class Verdict { BoundedLikely, DivergingLikely, Inconclusive };
std::string verdict_name(Verdict v);

struct ClassifyPolicy {
  double flat_tol = 1e-6;   // relative variation of the last quartile
  double slope_tol = 0.05;  // least-squares slope threshold
};

struct SeriesParams {
  std::optional<SpaceSpec> space;  // thm44 / cor46 / lambda_bounded
  std::optional<OrliczFn> M;       // orlicz_eq5 / leung_sum / leung_ratio
  std::optional<Rational> K;       // scaling constant, kinds that divide by K
  std::optional<Value> rho;        // nakano_prop base (rational or binary64)
  std::optional<ExponentSeq> p;    // nakano_prop exponents
  ClassifyPolicy policy;
};

struct SeriesDiagnostic {
  SeriesKind kind;
  size_t N;
  std::vector<std::pair<size_t, Value>> samples;  // (n, s_n) on the grid
  bool monotone;                                  // non-decreasing over samples
  double slope_logn;                              // tail-half fit vs log n
  double slope_loglogn;                           // tail-half fit vs log log n
  Verdict verdict;
  ClassifyPolicy policy;
  // Rigorous per-sample brackets where term enclosures are tracked
  // (Leung kinds); empty otherwise.
  std::vector<std::array<double, 2>> enclosures;
  std::optional<size_t> crossing;  // leung_sum: first n with s_n >= 10
  std::vector<std::string> notes;
};

// Geometric sample grid ceil(1.3^i), deduplicated, capped at N, N included.
std::vector<size_t> sample_grid(size_t N);

Verdict classify(const std::vector<std::pair<size_t, double>>& samples,
                 const ClassifyPolicy& policy);

SeriesDiagnostic series(SeriesKind kind, const SeriesParams& params, size_t N);

struct BuiltinCheck {
  std::string label;
  SeriesKind kind;
  SeriesParams params;
  size_t N;
  std::optional<Verdict> expected;
};

struct BuiltinExample {
  std::string name;
  std::vector<BuiltinCheck> checks;
  std::vector<std::string> notes;
};

// One of: lorentz_harmonic, nakano_loglog, orlicz_exp_reciprocal,
// leung_counterexample.
BuiltinExample builtin(const std::string& name);
std::vector<std::string> builtin_names();

struct ExtraCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct BuiltinRunEntry {
  std::string label;
  SeriesDiagnostic diagnostic;
  std::optional<Verdict> expected;
  bool match;  // true when no expectation is declared
};

struct BuiltinRun {
  std::string name;
  std::vector<BuiltinRunEntry> entries;
  std::vector<ExtraCheck> extras;
  std::vector<std::string> notes;
  bool all_match;
};

BuiltinRun run_builtin(const std::string& name);

}  // namespace symba
