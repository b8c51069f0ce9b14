#pragma once

#include <map>
#include <string>
#include <string_view>

#include "gaussindex/integer.hpp"

namespace gaussindex {

/// Finite map from integer exponents to nonzero integer coefficients.
///
/// The stored map never contains a zero coefficient, so two polynomials are
/// equal exactly when their term maps are equal.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Integer, Integer>;

  LaurentPolynomial() = default;

  static LaurentPolynomial constant(const Integer& value);
  static LaurentPolynomial monomial(const Integer& coefficient, const Integer& exponent);

  /// Adds `coefficient * var^exponent`, dropping the term if it cancels.
  LaurentPolynomial& add_term(const Integer& exponent, const Integer& coefficient);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Integer coefficient(const Integer& exponent) const;
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Value at var = 1, i.e. the sum of all coefficients.
  [[nodiscard]] Integer at_one() const;

  /// var -> var^-1.
  [[nodiscard]] LaurentPolynomial invert_variable() const;

  /// True when the only possible term is var^0 (including the zero polynomial).
  [[nodiscard]] bool is_constant() const;

  /// Terms ordered 0, 1, -1, 2, -2, ... (the order used for rendering).
  enum class ConstantPlacement { First, Last };
  [[nodiscard]] std::string render(std::string_view var,
                                   ConstantPlacement placement = ConstantPlacement::Last,
                                   bool spaced = true) const;

 private:
  TermMap terms_;
};

}  // namespace gaussindex
