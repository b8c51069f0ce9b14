#include "gaussindex/laurent.hpp"

#include <algorithm>
#include <vector>

#include "render_util.hpp"

namespace gaussindex {

LaurentPolynomial LaurentPolynomial::constant(const Integer& value) {
  return monomial(value, 0);
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& coefficient, const Integer& exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial& LaurentPolynomial::add_term(const Integer& exponent, const Integer& coefficient) {
  if (coefficient == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& entry : out.terms_) entry.second = -entry.second;
  return out;
}

Integer LaurentPolynomial::coefficient(const Integer& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer{0} : it->second;
}

Integer LaurentPolynomial::at_one() const {
  Integer total = 0;
  for (const auto& entry : terms_) total += entry.second;
  return total;
}

LaurentPolynomial LaurentPolynomial::invert_variable() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::string LaurentPolynomial::render(std::string_view var, ConstantPlacement placement, bool spaced) const {
  std::vector<const TermMap::value_type*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& entry : terms_) ordered.push_back(&entry);
  std::sort(ordered.begin(), ordered.end(), [placement](auto* a, auto* b) {
    if (placement == ConstantPlacement::Last && (a->first == 0) != (b->first == 0)) return b->first == 0;
    return degree_order(a->first, b->first) == std::strong_ordering::less;
  });
  std::vector<detail::RenderedTerm> rendered;
  rendered.reserve(ordered.size());
  for (const auto* entry : ordered) rendered.push_back({entry->second, detail::power(var, entry->first)});
  return detail::render_terms(rendered, spaced);
}

}  // namespace gaussindex
