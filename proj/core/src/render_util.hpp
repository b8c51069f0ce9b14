#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaussindex/integer.hpp"

namespace gaussindex::detail {

struct RenderedTerm {
  Integer coefficient;
  std::string monomial;  // empty for the constant monomial
};

inline std::string render_terms(const std::vector<RenderedTerm>& terms, bool spaced) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coefficient, monomial] : terms) {
    const bool negative = coefficient < 0;
    if (first) {
      if (negative) out += '-';
    } else if (spaced) {
      out += negative ? " - " : " + ";
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    const Integer magnitude = abs(coefficient);
    if (monomial.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str();
      out += monomial;
    }
  }
  return out;
}

inline std::string power(std::string_view var, const Integer& exponent) {
  if (exponent == 0) return {};
  std::string out(var);
  if (exponent != 1) {
    out += '^';
    out += exponent.str();
  }
  return out;
}

}  // namespace gaussindex::detail
