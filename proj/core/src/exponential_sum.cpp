#include "gaussindex/exponential_sum.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "render_util.hpp"

namespace gaussindex {

ExponentKey ExponentKey::modular(const Integer& modulus, LaurentPolynomial poly) {
  if (modulus < 0 || modulus == 1) throw std::invalid_argument("modular key: modulus must be 0 or at least 2");
  if (poly.is_constant()) throw std::invalid_argument("modular key: constant exponent must be a Constant key");
  if (modulus >= 2) {
    for (const auto& entry : poly.terms()) {
      if (entry.first < 0 || entry.first >= modulus)
        throw std::invalid_argument("modular key: exponent outside [0, modulus)");
    }
  }
  ExponentKey key;
  key.modulus_ = modulus;
  key.poly_ = std::move(poly);
  return key;
}

const Integer& ExponentKey::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value() on a modular key");
  return constant_;
}

const Integer& ExponentKey::modulus() const {
  if (is_constant()) throw std::logic_error("modulus() on a constant key");
  return *modulus_;
}

const LaurentPolynomial& ExponentKey::poly() const {
  if (is_constant()) throw std::logic_error("poly() on a constant key");
  return poly_;
}

LaurentPolynomial ExponentKey::as_polynomial() const {
  return is_constant() ? LaurentPolynomial::constant(constant_) : poly_;
}

Integer ExponentKey::effective_modulus() const { return is_constant() ? Integer{0} : *modulus_; }

Integer ExponentKey::at_s_one() const { return is_constant() ? constant_ : poly_.at_one(); }

Integer ExponentKey::constant_term() const { return is_constant() ? constant_ : poly_.coefficient(0); }

std::string ExponentKey::render_exponent() const {
  if (is_constant()) return constant_.str();
  return poly_.render("s", LaurentPolynomial::ConstantPlacement::First, false);
}

ExponentKey reduce_exponent(const LaurentPolynomial& p, const Integer& modulus) {
  if (modulus < 0) throw std::invalid_argument("reduce_exponent: negative modulus");
  if (modulus == 1) return ExponentKey::constant(p.at_one());
  LaurentPolynomial folded;
  if (modulus == 0) {
    folded = p;
  } else {
    for (const auto& [e, c] : p.terms()) folded.add_term(floor_mod(e, modulus), c);
  }
  if (folded.is_constant()) return ExponentKey::constant(folded.coefficient(0));
  return ExponentKey::modular(modulus, std::move(folded));
}

namespace {

int category(const ExponentKey& key) {
  if (!key.is_constant()) return 1;
  return key.constant_value() == 0 ? 2 : 0;
}

std::strong_ordering compare_polys(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto ordered = [](const LaurentPolynomial& p) {
    std::vector<const LaurentPolynomial::TermMap::value_type*> out;
    for (const auto& entry : p.terms()) out.push_back(&entry);
    std::sort(out.begin(), out.end(), [](auto* x, auto* y) {
      return degree_order(x->first, y->first) == std::strong_ordering::less;
    });
    return out;
  };
  const auto lhs = ordered(a);
  const auto rhs = ordered(b);
  for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i) {
    if (auto c = degree_order(lhs[i]->first, rhs[i]->first); c != 0) return c;
    if (lhs[i]->second != rhs[i]->second)
      return lhs[i]->second < rhs[i]->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return lhs.size() <=> rhs.size();
}

}  // namespace

std::strong_ordering RenderOrder::compare(const ExponentKey& a, const ExponentKey& b) {
  if (auto c = category(a) <=> category(b); c != 0) return c;
  switch (category(a)) {
    case 0:
      return degree_order(a.constant_value(), b.constant_value());
    case 1:
      if (a.modulus() != b.modulus())
        return a.modulus() < b.modulus() ? std::strong_ordering::less : std::strong_ordering::greater;
      return compare_polys(a.poly(), b.poly());
    default:
      return std::strong_ordering::equal;
  }
}

ExponentialSum ExponentialSum::term(const Integer& coefficient, const ExponentKey& key) {
  ExponentialSum out;
  out.add_term(key, coefficient);
  return out;
}

ExponentialSum& ExponentialSum::add_term(const ExponentKey& key, const Integer& coefficient) {
  if (coefficient == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

ExponentialSum& ExponentialSum::operator+=(const ExponentialSum& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

ExponentialSum& ExponentialSum::operator-=(const ExponentialSum& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

ExponentialSum ExponentialSum::operator-() const {
  ExponentialSum out = *this;
  for (auto& entry : out.terms_) entry.second = -entry.second;
  return out;
}

Integer ExponentialSum::coefficient(const ExponentKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer{0} : it->second;
}

std::string ExponentialSum::render() const {
  std::vector<detail::RenderedTerm> rendered;
  rendered.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    if (key.is_constant()) {
      rendered.push_back({c, detail::power("t", key.constant_value())});
    } else {
      rendered.push_back({c, "t^{" + key.render_exponent() + "}"});
    }
  }
  return detail::render_terms(rendered, true);
}

ExponentialSum sum_add(const ExponentialSum& a, const ExponentialSum& b) { return a + b; }

ExponentialSum sum_term(const Integer& coefficient, const ExponentKey& key) {
  return ExponentialSum::term(coefficient, key);
}

ExponentialSum substitute_t_inverse(const ExponentialSum& sum) {
  ExponentialSum out;
  for (const auto& [key, c] : sum.terms()) {
    if (key.is_constant()) {
      out.add_term(ExponentKey::constant(-key.constant_value()), c);
    } else {
      out.add_term(reduce_exponent(-key.poly(), key.modulus()), c);
    }
  }
  return out;
}

ExponentialSum substitute_s_inverse(const ExponentialSum& sum) {
  ExponentialSum out;
  for (const auto& [key, c] : sum.terms()) {
    if (key.is_constant()) {
      out.add_term(key, c);
    } else {
      out.add_term(reduce_exponent(key.poly().invert_variable(), key.modulus()), c);
    }
  }
  return out;
}

LaurentPolynomial evaluate_s_one(const ExponentialSum& sum) {
  LaurentPolynomial out;
  for (const auto& [key, c] : sum.terms()) out.add_term(key.at_s_one(), c);
  return out;
}

Integer evaluate_t_one(const ExponentialSum& sum) {
  Integer total = 0;
  for (const auto& entry : sum.terms()) total += entry.second;
  return total;
}

LaurentPolynomial specialize_s_zero(const ExponentialSum& sum) {
  LaurentPolynomial out;
  for (const auto& [key, c] : sum.terms()) out.add_term(key.constant_term(), c);
  return out;
}

std::string render(const ExponentialSum& sum) { return sum.render(); }

nlohmann::json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

Integer integer_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer{value.get<std::uint64_t>()};
    return Integer{value.get<std::int64_t>()};
  }
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos)
      throw std::invalid_argument("malformed integer string: " + text);
    return Integer{text};
  }
  throw std::invalid_argument("expected an integer, got " + value.dump());
}

nlohmann::json to_json(const ExponentKey& key) {
  if (key.is_constant()) return {{"kind", "const"}, {"k", integer_to_json(key.constant_value())}};
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [e, c] : key.poly().terms()) coeffs[e.str()] = integer_to_json(c);
  return {{"kind", "poly"}, {"modulus", integer_to_json(key.modulus())}, {"coeffs", std::move(coeffs)}};
}

ExponentKey exponent_key_from_json(const nlohmann::json& value) {
  const auto& kind = value.at("kind").get_ref<const std::string&>();
  if (kind == "const") return ExponentKey::constant(integer_from_json(value.at("k")));
  if (kind != "poly") throw std::invalid_argument("unknown exponent kind: " + kind);
  LaurentPolynomial poly;
  for (const auto& [exp, c] : value.at("coeffs").items()) {
    poly.add_term(integer_from_json(nlohmann::json(exp)), integer_from_json(c));
  }
  return ExponentKey::modular(integer_from_json(value.at("modulus")), std::move(poly));
}

nlohmann::json to_json(const ExponentialSum& sum) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, c] : sum.terms()) out.push_back({{"coeff", integer_to_json(c)}, {"exponent", to_json(key)}});
  return out;
}

ExponentialSum exponential_sum_from_json(const nlohmann::json& value) {
  if (!value.is_array()) throw std::invalid_argument("exponential sum must be a JSON array");
  ExponentialSum out;
  for (const auto& item : value) {
    out.add_term(exponent_key_from_json(item.at("exponent")), integer_from_json(item.at("coeff")));
  }
  return out;
}

}  // namespace gaussindex
