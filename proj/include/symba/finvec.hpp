#pragma once

#include <map>
#include <string>
#include <string_view>

#include "symba/rational.hpp"

namespace symba {

using Label = std::string;

// Finitely supported coordinate vector. Zero entries are never stored, so the
// support is exactly the key set.
class FinVec {
 public:
  FinVec() = default;

  // Accepts "a=2,b=1/3"; empty or whitespace-only text parses to the zero vector.
  static FinVec parse(std::string_view text);

  void set(const Label& label, const Rational& value);
  Rational at(const Label& label) const;
  bool contains(const Label& label) const { return entries_.count(label) > 0; }

  const std::map<Label, Rational>& entries() const { return entries_; }
  size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  FinVec operator+(const FinVec& rhs) const;
  FinVec operator-(const FinVec& rhs) const;
  FinVec scaled(const Rational& t) const;
  bool operator==(const FinVec& rhs) const { return entries_ == rhs.entries_; }

 private:
  std::map<Label, Rational> entries_;
};

Rational l1_norm(const FinVec& f);
Rational linf_norm(const FinVec& f);

}  // namespace symba
