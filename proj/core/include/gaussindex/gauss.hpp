#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace gaussindex {

enum class Role : std::uint8_t { Over, Under };
enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr Role other(Role r) { return r == Role::Over ? Role::Under : Role::Over; }
constexpr char role_char(Role r) { return r == Role::Over ? 'O' : 'U'; }
constexpr char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

/// Zero-based chord handle. Gauss codes print `index + 1`.
struct ChordId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ChordId&, const ChordId&) = default;
  [[nodiscard]] std::uint32_t label() const { return index + 1; }
};

/// Chord from its 1-based printed label.
constexpr ChordId chord_label(std::uint32_t label) { return ChordId{label - 1}; }

struct Endpoint {
  ChordId chord;
  Role role = Role::Over;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Oriented circle with 2n chord endpoints listed in traversal order.
///
/// Chords are numbered 0..n-1; each occurs once as Over and once as Under.
/// Instances are immutable; every operator returns a new diagram.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  /// Validates that every chord in 0..signs.size()-1 occurs exactly once
  /// with each role. Throws std::invalid_argument otherwise.
  GaussDiagram(std::vector<Endpoint> endpoints, std::vector<Sign> signs);

  [[nodiscard]] std::size_t chord_count() const { return signs_.size(); }
  [[nodiscard]] std::size_t endpoint_count() const { return endpoints_.size(); }
  /// Number of insertion gaps: 2n, or 1 for the empty circle.
  [[nodiscard]] std::size_t gap_count() const { return endpoints_.empty() ? 1 : endpoints_.size(); }

  [[nodiscard]] std::span<const Endpoint> endpoints() const { return endpoints_; }
  [[nodiscard]] std::span<const Sign> signs() const { return signs_; }
  [[nodiscard]] const Endpoint& at(std::size_t position) const { return endpoints_[position]; }

  [[nodiscard]] bool contains(ChordId c) const { return c.index < signs_.size(); }
  /// Throws UnknownChordError for chords outside the diagram.
  void require(ChordId c) const;

  [[nodiscard]] Sign sign(ChordId c) const { return signs_[c.index]; }
  [[nodiscard]] std::size_t position(ChordId c, Role role) const {
    return positions_[c.index][static_cast<std::size_t>(role)];
  }

  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return a.endpoints_ == b.endpoints_ && a.signs_ == b.signs_;
  }

 private:
  std::vector<Endpoint> endpoints_;
  std::vector<Sign> signs_;
  std::vector<std::array<std::uint32_t, 2>> positions_;
};

enum class Relation { Unlinked, LeftToRight, RightToLeft };

/// How chord `d` crosses chord `c`.
///
/// The arc of `c` is the set of positions strictly after Over(c) and before
/// Under(c) in traversal order. `d` is linked with `c` when exactly one of its
/// endpoints lies on that arc, and crosses left to right when that endpoint is
/// Under(d).
Relation relate(const GaussDiagram& d, ChordId c, ChordId other);

/// True if position `p` lies strictly inside the arc Over(c) -> Under(c).
bool on_arc(const GaussDiagram& d, ChordId c, std::size_t p);

// ---- diagram operators ----

/// Switches every crossing: signs flip and Over/Under roles swap.
GaussDiagram mirror(const GaussDiagram& d);
/// Reverses the orientation of the circle.
GaussDiagram reverse(const GaussDiagram& d);
/// Crossing change at `c`.
GaussDiagram switch_crossing(const GaussDiagram& d, ChordId c);
/// Virtualization of `c`: only its sign flips.
GaussDiagram virtualize(const GaussDiagram& d, ChordId c);
/// Same diagram read from endpoint `k` as basepoint.
GaussDiagram rotate(const GaussDiagram& d, std::size_t k);
/// Splices `b`, cut open at gap `gap_b`, into gap `gap_a` of `a`. Gap k lies
/// just before endpoint k; gap 0 is the one across the basepoint, so `b` is
/// appended there. Chords of `b` are renumbered after those of `a`.
GaussDiagram connected_sum(const GaussDiagram& a, std::size_t gap_a, const GaussDiagram& b, std::size_t gap_b);
/// Renumbers chords in order of first occurrence.
GaussDiagram normalize_labels(const GaussDiagram& d);

// ---- signed Gauss codes ----
//
// token = ("O" | "U") digits ("+" | "-"), tokens concatenated or separated by
// whitespace. Chord ids are arbitrary positive integers and are renumbered by
// first occurrence on parse.

GaussDiagram parse_gauss_code(std::string_view code);
std::string serialize(const GaussDiagram& d, std::size_t basepoint = 0);
/// Least serialization over all rotations, chords renumbered by first occurrence.
std::string canonical_code(const GaussDiagram& d);
/// True when the diagram, read from position 0 with its own labels, is already
/// the canonical rotation and its labels follow first-occurrence order.
bool is_canonical(const GaussDiagram& d);

nlohmann::json to_json(const GaussDiagram& d);
GaussDiagram gauss_diagram_from_json(const nlohmann::json& value);

}  // namespace gaussindex
