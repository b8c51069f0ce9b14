#include <algorithm>
#include <stdexcept>

#include "gaussindex/errors.hpp"
#include "gaussindex/gauss.hpp"

namespace gaussindex {

namespace {
constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
}

GaussDiagram::GaussDiagram(std::vector<Endpoint> endpoints, std::vector<Sign> signs)
    : endpoints_(std::move(endpoints)), signs_(std::move(signs)) {
  if (endpoints_.size() != 2 * signs_.size())
    throw std::invalid_argument("gauss diagram: expected two endpoints per chord");
  positions_.assign(signs_.size(), {kUnset, kUnset});
  for (std::size_t p = 0; p < endpoints_.size(); ++p) {
    const auto& [chord, role] = endpoints_[p];
    if (chord.index >= signs_.size()) throw std::invalid_argument("gauss diagram: chord index out of range");
    auto& slot = positions_[chord.index][static_cast<std::size_t>(role)];
    if (slot != kUnset) throw std::invalid_argument("gauss diagram: duplicate endpoint role");
    slot = static_cast<std::uint32_t>(p);
  }
  for (Sign s : signs_) {
    if (s != Sign::Positive && s != Sign::Negative) throw std::invalid_argument("gauss diagram: invalid sign");
  }
}

void GaussDiagram::require(ChordId c) const {
  if (!contains(c)) throw UnknownChordError("unknown chord " + std::to_string(c.label()));
}

bool on_arc(const GaussDiagram& d, ChordId c, std::size_t p) {
  const std::size_t size = d.endpoint_count();
  const std::size_t over = d.position(c, Role::Over);
  const std::size_t under = d.position(c, Role::Under);
  const std::size_t offset = (p + size - over) % size;
  const std::size_t length = (under + size - over) % size;
  return offset > 0 && offset < length;
}

Relation relate(const GaussDiagram& d, ChordId c, ChordId other) {
  d.require(c);
  d.require(other);
  if (c == other) throw std::invalid_argument("relate: a chord is not related to itself");
  const bool over_inside = on_arc(d, c, d.position(other, Role::Over));
  const bool under_inside = on_arc(d, c, d.position(other, Role::Under));
  if (over_inside == under_inside) return Relation::Unlinked;
  return under_inside ? Relation::LeftToRight : Relation::RightToLeft;
}

GaussDiagram mirror(const GaussDiagram& d) {
  std::vector<Endpoint> endpoints(d.endpoints().begin(), d.endpoints().end());
  for (auto& e : endpoints) e.role = other(e.role);
  std::vector<Sign> signs(d.signs().begin(), d.signs().end());
  for (auto& s : signs) s = flip(s);
  return GaussDiagram(std::move(endpoints), std::move(signs));
}

GaussDiagram reverse(const GaussDiagram& d) {
  std::vector<Endpoint> endpoints(d.endpoints().rbegin(), d.endpoints().rend());
  return GaussDiagram(std::move(endpoints), {d.signs().begin(), d.signs().end()});
}

GaussDiagram switch_crossing(const GaussDiagram& d, ChordId c) {
  d.require(c);
  std::vector<Endpoint> endpoints(d.endpoints().begin(), d.endpoints().end());
  for (auto& e : endpoints) {
    if (e.chord == c) e.role = other(e.role);
  }
  std::vector<Sign> signs(d.signs().begin(), d.signs().end());
  signs[c.index] = flip(signs[c.index]);
  return GaussDiagram(std::move(endpoints), std::move(signs));
}

GaussDiagram virtualize(const GaussDiagram& d, ChordId c) {
  d.require(c);
  std::vector<Sign> signs(d.signs().begin(), d.signs().end());
  signs[c.index] = flip(signs[c.index]);
  return GaussDiagram({d.endpoints().begin(), d.endpoints().end()}, std::move(signs));
}

GaussDiagram rotate(const GaussDiagram& d, std::size_t k) {
  if (d.endpoint_count() == 0) return d;
  std::vector<Endpoint> endpoints(d.endpoints().begin(), d.endpoints().end());
  std::rotate(endpoints.begin(), endpoints.begin() + static_cast<std::ptrdiff_t>(k % endpoints.size()),
              endpoints.end());
  return GaussDiagram(std::move(endpoints), {d.signs().begin(), d.signs().end()});
}

GaussDiagram connected_sum(const GaussDiagram& a, std::size_t gap_a, const GaussDiagram& b, std::size_t gap_b) {
  if (gap_a >= a.gap_count()) throw MoveError("connected sum: invalid gap " + std::to_string(gap_a) + " in first diagram");
  if (gap_b >= b.gap_count()) throw MoveError("connected sum: invalid gap " + std::to_string(gap_b) + " in second diagram");
  const auto offset = static_cast<std::uint32_t>(a.chord_count());
  // gap 0 wraps around the basepoint; splicing there appends so `a` keeps it
  const auto split = static_cast<std::ptrdiff_t>(gap_a == 0 ? a.endpoint_count() : gap_a);
  std::vector<Endpoint> endpoints;
  endpoints.reserve(a.endpoint_count() + b.endpoint_count());
  endpoints.insert(endpoints.end(), a.endpoints().begin(), a.endpoints().begin() + split);
  const std::size_t size_b = b.endpoint_count();
  for (std::size_t i = 0; i < size_b; ++i) {
    Endpoint e = b.at((gap_b + i) % size_b);
    e.chord.index += offset;
    endpoints.push_back(e);
  }
  endpoints.insert(endpoints.end(), a.endpoints().begin() + split, a.endpoints().end());
  std::vector<Sign> signs(a.signs().begin(), a.signs().end());
  signs.insert(signs.end(), b.signs().begin(), b.signs().end());
  return GaussDiagram(std::move(endpoints), std::move(signs));
}

GaussDiagram normalize_labels(const GaussDiagram& d) {
  std::vector<std::uint32_t> relabel(d.chord_count(), kUnset);
  std::vector<Sign> signs(d.chord_count());
  std::vector<Endpoint> endpoints;
  endpoints.reserve(d.endpoint_count());
  std::uint32_t next = 0;
  for (const auto& e : d.endpoints()) {
    auto& label = relabel[e.chord.index];
    if (label == kUnset) {
      label = next++;
      signs[label] = d.sign(e.chord);
    }
    endpoints.push_back({ChordId{label}, e.role});
  }
  return GaussDiagram(std::move(endpoints), std::move(signs));
}

}  // namespace gaussindex
