#include "symba/profile.hpp"

#include <algorithm>
#include <map>

namespace symba {

RangeProfile range_profile(const FinVec& f) {
  RangeProfile out;
  // Magnitude -> labels at that magnitude, largest first.
  std::map<Rational, std::vector<Label>, std::greater<Rational>> levels;
  for (const auto& [label, value] : f.entries()) levels[rat_abs(value)].push_back(label);
  std::vector<Label> nested;
  for (auto& [magnitude, labels] : levels) {
    out.p.push_back(magnitude);
    std::sort(labels.begin(), labels.end());
    out.H.push_back(labels);
    nested.insert(nested.end(), labels.begin(), labels.end());
    std::sort(nested.begin(), nested.end());
    out.G.push_back(nested);
  }
  for (size_t k = 0; k < out.p.size(); ++k)
    out.q.push_back(k + 1 < out.p.size() ? out.p[k] - out.p[k + 1] : out.p[k]);
  return out;
}

}  // namespace symba
