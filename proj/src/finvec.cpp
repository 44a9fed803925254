#include "symba/finvec.hpp"

#include <algorithm>

#include "symba/errors.hpp"

namespace symba {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

FinVec FinVec::parse(std::string_view text) {
  FinVec out;
  text = trim(text);
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    item = trim(item);
    if (item.empty()) throw validation_error("empty entry in vector literal");
    size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw validation_error("vector entry lacks '=': " + std::string(item));
    std::string_view label = trim(item.substr(0, eq));
    std::string_view value = trim(item.substr(eq + 1));
    if (label.empty()) throw validation_error("vector entry has empty label");
    if (out.entries_.count(std::string(label)))
      throw validation_error("duplicate label in vector literal: " + std::string(label));
    out.set(std::string(label), parse_rational(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

void FinVec::set(const Label& label, const Rational& value) {
  if (value == 0) {
    entries_.erase(label);
  } else {
    entries_[label] = value;
  }
}

Rational FinVec::at(const Label& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? Rational(0) : it->second;
}

FinVec FinVec::operator+(const FinVec& rhs) const {
  FinVec out = *this;
  for (const auto& [label, value] : rhs.entries_) out.set(label, out.at(label) + value);
  return out;
}

FinVec FinVec::operator-(const FinVec& rhs) const {
  FinVec out = *this;
  for (const auto& [label, value] : rhs.entries_) out.set(label, out.at(label) - value);
  return out;
}

FinVec FinVec::scaled(const Rational& t) const {
  FinVec out;
  if (t == 0) return out;
  for (const auto& [label, value] : entries_) out.entries_[label] = value * t;
  return out;
}

Rational l1_norm(const FinVec& f) {
  Rational sum = 0;
  for (const auto& [label, value] : f.entries()) sum += rat_abs(value);
  return sum;
}

Rational linf_norm(const FinVec& f) {
  Rational best = 0;
  for (const auto& [label, value] : f.entries()) best = std::max(best, rat_abs(value));
  return best;
}

}  // namespace symba
