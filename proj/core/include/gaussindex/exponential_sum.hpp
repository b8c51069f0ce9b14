#pragma once

#include <compare>
#include <map>
#include <string>
#include <optional>

#include <nlohmann/json_fwd.hpp>

#include "gaussindex/integer.hpp"
#include "gaussindex/laurent.hpp"

namespace gaussindex {

/// Normal form of an index-function value.
///
/// A value is either a pure integer (`Constant`) or a class in
/// Z[s, s^-1]/(s^n - 1) that is not a constant (`Modular`). For n >= 2 the
/// representative has every exponent in [0, n); n = 0 means no reduction.
/// Constants coming from different moduli are the same key.
class ExponentKey {
 public:
  ExponentKey() : ExponentKey(Integer{0}) {}
  explicit ExponentKey(Integer constant) : constant_(std::move(constant)) {}

  static ExponentKey constant(const Integer& k) { return ExponentKey(k); }

  /// Builds a key from an already-reduced representative. Throws
  /// std::invalid_argument when the pair violates the normal form.
  static ExponentKey modular(const Integer& modulus, LaurentPolynomial poly);

  [[nodiscard]] bool is_constant() const { return !modulus_.has_value(); }
  [[nodiscard]] const Integer& constant_value() const;
  [[nodiscard]] const Integer& modulus() const;
  [[nodiscard]] const LaurentPolynomial& poly() const;

  /// Exponent polynomial in s (constant keys give a degree-zero polynomial).
  [[nodiscard]] LaurentPolynomial as_polynomial() const;

  /// Effective modulus: 0 for constant keys.
  [[nodiscard]] Integer effective_modulus() const;

  /// Value at s = 1.
  [[nodiscard]] Integer at_s_one() const;

  /// Coefficient of s^0 (the "s = 0" specialization).
  [[nodiscard]] Integer constant_term() const;

  /// Exponent text as it appears after "t^", without braces.
  [[nodiscard]] std::string render_exponent() const;

  friend bool operator==(const ExponentKey& a, const ExponentKey& b) {
    return a.constant_ == b.constant_ && a.modulus_ == b.modulus_ && a.poly_ == b.poly_;
  }

 private:
  Integer constant_{0};
  std::optional<Integer> modulus_;
  LaurentPolynomial poly_;
};

/// Reduces `p` into Z[s, s^-1]/(s^n - 1) and returns its normal form.
ExponentKey reduce_exponent(const LaurentPolynomial& p, const Integer& modulus);

/// Rendering order: nonzero constants (by degree order), then modular keys by
/// modulus and exponent polynomial, then the constant 0 last.
struct RenderOrder {
  bool operator()(const ExponentKey& a, const ExponentKey& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  static std::strong_ordering compare(const ExponentKey& a, const ExponentKey& b);
};

/// Formal finite sum of integer multiples of t^{key}.
class ExponentialSum {
 public:
  using TermMap = std::map<ExponentKey, Integer, RenderOrder>;

  ExponentialSum() = default;

  static ExponentialSum term(const Integer& coefficient, const ExponentKey& key);

  ExponentialSum& add_term(const ExponentKey& key, const Integer& coefficient);
  ExponentialSum& operator+=(const ExponentialSum& other);
  ExponentialSum& operator-=(const ExponentialSum& other);
  friend ExponentialSum operator+(ExponentialSum a, const ExponentialSum& b) { return a += b; }
  friend ExponentialSum operator-(ExponentialSum a, const ExponentialSum& b) { return a -= b; }
  ExponentialSum operator-() const;

  friend bool operator==(const ExponentialSum& a, const ExponentialSum& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Integer coefficient(const ExponentKey& key) const;

  [[nodiscard]] std::string render() const;

 private:
  TermMap terms_;
};

ExponentialSum sum_add(const ExponentialSum& a, const ExponentialSum& b);
ExponentialSum sum_term(const Integer& coefficient, const ExponentKey& key);

/// t -> t^-1: every exponent is negated.
ExponentialSum substitute_t_inverse(const ExponentialSum& sum);
/// s -> s^-1 inside every exponent.
ExponentialSum substitute_s_inverse(const ExponentialSum& sum);
/// s = 1: collapses to a Laurent polynomial in t.
LaurentPolynomial evaluate_s_one(const ExponentialSum& sum);
/// t = 1: the sum of all coefficients.
Integer evaluate_t_one(const ExponentialSum& sum);
/// s = 0, read as extraction of the s^0 coefficient of every exponent.
LaurentPolynomial specialize_s_zero(const ExponentialSum& sum);

std::string render(const ExponentialSum& sum);

// JSON encoding: [{"coeff": c, "exponent": {"kind": "const", "k": k}
//                 | {"kind": "poly", "modulus": n, "coeffs": {"<exp>": c}}}]
// Integers outside the int64 range are written as decimal strings.
nlohmann::json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& value);
nlohmann::json to_json(const ExponentKey& key);
ExponentKey exponent_key_from_json(const nlohmann::json& value);
nlohmann::json to_json(const ExponentialSum& sum);
ExponentialSum exponential_sum_from_json(const nlohmann::json& value);

}  // namespace gaussindex
