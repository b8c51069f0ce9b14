#include "gaussindex/moves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gaussindex/errors.hpp"

namespace gaussindex {

namespace {

std::size_t next_pos(std::size_t p, std::size_t size) { return (p + 1) % size; }

bool adjacent(std::size_t a, std::size_t b, std::size_t size) {
  return next_pos(a, size) == b || next_pos(b, size) == a;
}

void require_gap(const GaussDiagram& d, std::size_t gap) {
  if (gap >= d.gap_count()) throw MoveError("invalid gap " + std::to_string(gap));
}

/// Drops the given chords and renumbers the remaining ones downwards.
GaussDiagram remove_chords(const GaussDiagram& d, std::initializer_list<ChordId> removed) {
  std::vector<std::uint32_t> shift(d.chord_count(), 0);
  std::vector<bool> gone(d.chord_count(), false);
  for (ChordId c : removed) gone[c.index] = true;
  std::uint32_t dropped = 0;
  std::vector<Sign> signs;
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    shift[c] = dropped;
    if (gone[c]) {
      ++dropped;
    } else {
      signs.push_back(d.sign(ChordId{c}));
    }
  }
  std::vector<Endpoint> endpoints;
  endpoints.reserve(d.endpoint_count());
  for (const auto& e : d.endpoints()) {
    if (!gone[e.chord.index]) endpoints.push_back({ChordId{e.chord.index - shift[e.chord.index]}, e.role});
  }
  return GaussDiagram(std::move(endpoints), std::move(signs));
}

/// Inserts `blocks[i]` before endpoint `gaps[i]`; equal gaps keep block order.
GaussDiagram insert_blocks(const GaussDiagram& d, const std::vector<std::pair<std::size_t, std::vector<Endpoint>>>& blocks,
                           std::vector<Sign> new_signs) {
  std::vector<Endpoint> endpoints;
  endpoints.reserve(d.endpoint_count() + 4);
  for (std::size_t g = 0; g <= d.endpoint_count(); ++g) {
    for (const auto& [gap, block] : blocks) {
      if (gap == g) endpoints.insert(endpoints.end(), block.begin(), block.end());
    }
    if (g < d.endpoint_count()) endpoints.push_back(d.at(g));
  }
  std::vector<Sign> signs(d.signs().begin(), d.signs().end());
  signs.insert(signs.end(), new_signs.begin(), new_signs.end());
  return GaussDiagram(std::move(endpoints), std::move(signs));
}

bool r1_removable(const GaussDiagram& d, ChordId c) {
  return adjacent(d.position(c, Role::Over), d.position(c, Role::Under), d.endpoint_count());
}

/// Position where the contiguous pair {a, b} starts in traversal order.
std::size_t pair_start(std::size_t a, std::size_t b, std::size_t size) { return next_pos(a, size) == b ? a : b; }

/// Gap in the reduced diagram (after removing the endpoints in `removed`)
/// that sits where position `start` used to be.
std::size_t reduced_gap(std::size_t start, const std::vector<std::size_t>& removed, std::size_t reduced_size) {
  std::size_t before = 0;
  for (std::size_t p : removed) before += p < start ? 1 : 0;
  const std::size_t gap = start - before;
  return reduced_size == 0 || gap >= reduced_size ? 0 : gap;
}

}  // namespace

GaussDiagram r1_insert(const GaussDiagram& d, std::size_t gap, Sign sign, R1Order order) {
  require_gap(d, gap);
  const ChordId c{static_cast<std::uint32_t>(d.chord_count())};
  std::vector<Endpoint> block = order == R1Order::OverFirst ? std::vector<Endpoint>{{c, Role::Over}, {c, Role::Under}}
                                                            : std::vector<Endpoint>{{c, Role::Under}, {c, Role::Over}};
  return insert_blocks(d, {{gap, std::move(block)}}, {sign});
}

GaussDiagram r1_remove(const GaussDiagram& d, ChordId c) {
  d.require(c);
  if (!r1_removable(d, c)) throw MoveError("r1_remove: endpoints of chord " + std::to_string(c.label()) + " are not adjacent");
  return remove_chords(d, {c});
}

GaussDiagram r2_insert(const GaussDiagram& d, std::size_t gap_p, std::size_t gap_q, Sign sign, OverSite over_site,
                       R2Shape shape) {
  require_gap(d, gap_p);
  require_gap(d, gap_q);
  const ChordId a{static_cast<std::uint32_t>(d.chord_count())};
  const ChordId b{a.index + 1};
  std::vector<Endpoint> overs{{a, Role::Over}, {b, Role::Over}};
  std::vector<Endpoint> unders = shape == R2Shape::Crossed ? std::vector<Endpoint>{{a, Role::Under}, {b, Role::Under}}
                                                           : std::vector<Endpoint>{{b, Role::Under}, {a, Role::Under}};
  auto first = over_site == OverSite::First ? std::move(overs) : std::move(unders);
  auto second = over_site == OverSite::First ? std::move(unders) : std::move(overs);
  return insert_blocks(d, {{gap_p, std::move(first)}, {gap_q, std::move(second)}}, {sign, flip(sign)});
}

bool r2_removable(const GaussDiagram& d, ChordId first, ChordId second) {
  if (!d.contains(first) || !d.contains(second) || first == second) return false;
  if (d.sign(first) == d.sign(second)) return false;
  const std::size_t size = d.endpoint_count();
  return adjacent(d.position(first, Role::Over), d.position(second, Role::Over), size) &&
         adjacent(d.position(first, Role::Under), d.position(second, Role::Under), size);
}

GaussDiagram r2_remove(const GaussDiagram& d, ChordId first, ChordId second) {
  d.require(first);
  d.require(second);
  if (!r2_removable(d, first, second)) {
    throw MoveError("r2_remove: chords " + std::to_string(first.label()) + " and " + std::to_string(second.label()) +
                    " do not form an R2 pair");
  }
  return remove_chords(d, {first, second});
}

bool r3_holds(const GaussDiagram& d, const R3Match& m) {
  if (!d.contains(m.x) || !d.contains(m.y) || !d.contains(m.z)) return false;
  if (m.x == m.y || m.y == m.z || m.x == m.z) return false;
  if (d.sign(m.x) != Sign::Negative || d.sign(m.y) != Sign::Negative || d.sign(m.z) != Sign::Positive) return false;
  const std::size_t size = d.endpoint_count();
  auto pos = [&](ChordId c, Role r) { return d.position(c, r); };
  auto follows = [&](std::size_t a, std::size_t b) { return next_pos(a, size) == b; };
  if (m.form == R3Form::Before) {
    return follows(pos(m.y, Role::Over), pos(m.x, Role::Over)) &&
           follows(pos(m.x, Role::Under), pos(m.z, Role::Over)) &&
           follows(pos(m.y, Role::Under), pos(m.z, Role::Under));
  }
  return follows(pos(m.x, Role::Over), pos(m.y, Role::Over)) && follows(pos(m.z, Role::Over), pos(m.x, Role::Under)) &&
         follows(pos(m.z, Role::Under), pos(m.y, Role::Under));
}

std::vector<R3Match> r3_matches(const GaussDiagram& d) {
  std::vector<R3Match> out;
  const std::size_t size = d.endpoint_count();
  if (d.chord_count() < 3) return out;
  for (std::size_t i = 0; i < size; ++i) {
    const Endpoint& a = d.at(i);
    const Endpoint& b = d.at(next_pos(i, size));
    if (a.role != Role::Over || b.role != Role::Over) continue;
    if (d.sign(a.chord) != Sign::Negative || d.sign(b.chord) != Sign::Negative) continue;
    // Before: [Over(y) Over(x)] with z following Under(x).
    {
      const ChordId y = a.chord;
      const ChordId x = b.chord;
      const Endpoint& after_ux = d.at(next_pos(d.position(x, Role::Under), size));
      if (after_ux.role == Role::Over) {
        R3Match m{R3Form::Before, x, y, after_ux.chord};
        if (r3_holds(d, m)) out.push_back(m);
      }
    }
    // After: [Over(x) Over(y)] with z preceding Under(x).
    {
      const ChordId x = a.chord;
      const ChordId y = b.chord;
      const Endpoint& before_ux = d.at((d.position(x, Role::Under) + size - 1) % size);
      if (before_ux.role == Role::Over) {
        R3Match m{R3Form::After, x, y, before_ux.chord};
        if (r3_holds(d, m)) out.push_back(m);
      }
    }
  }
  return out;
}

GaussDiagram r3_apply(const GaussDiagram& d, const R3Match& m) {
  if (!r3_holds(d, m)) throw MoveError("r3_apply: stale match");
  std::vector<Endpoint> endpoints(d.endpoints().begin(), d.endpoints().end());
  auto swap_pair = [&](ChordId c1, Role r1, ChordId c2, Role r2) {
    std::swap(endpoints[d.position(c1, r1)], endpoints[d.position(c2, r2)]);
  };
  swap_pair(m.x, Role::Over, m.y, Role::Over);
  swap_pair(m.x, Role::Under, m.z, Role::Over);
  swap_pair(m.y, Role::Under, m.z, Role::Under);
  return GaussDiagram(std::move(endpoints), {d.signs().begin(), d.signs().end()});
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveStep& step) {
  return std::visit(
      [&](const auto& s) -> GaussDiagram {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, move::R1Insert>) {
          return r1_insert(d, s.gap, s.sign, s.order);
        } else if constexpr (std::is_same_v<T, move::R1Remove>) {
          return r1_remove(d, s.chord);
        } else if constexpr (std::is_same_v<T, move::R2Insert>) {
          return r2_insert(d, s.gap_p, s.gap_q, s.sign, s.over_site, s.shape);
        } else if constexpr (std::is_same_v<T, move::R2Remove>) {
          return r2_remove(d, s.first, s.second);
        } else {
          return r3_apply(d, s.match);
        }
      },
      step);
}

MoveStep inverse_step(const GaussDiagram& d, const MoveStep& step) {
  const std::size_t size = d.endpoint_count();
  const auto n = static_cast<std::uint32_t>(d.chord_count());
  return std::visit(
      [&](const auto& s) -> MoveStep {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, move::R1Insert>) {
          return move::R1Remove{ChordId{n}};
        } else if constexpr (std::is_same_v<T, move::R1Remove>) {
          d.require(s.chord);
          const std::size_t over = d.position(s.chord, Role::Over);
          const std::size_t under = d.position(s.chord, Role::Under);
          const std::size_t start = pair_start(over, under, size);
          const R1Order order = next_pos(over, size) == under ? R1Order::OverFirst : R1Order::UnderFirst;
          return move::R1Insert{reduced_gap(start, {over, under}, size - 2), d.sign(s.chord), order};
        } else if constexpr (std::is_same_v<T, move::R2Insert>) {
          return move::R2Remove{ChordId{n}, ChordId{n + 1}};
        } else if constexpr (std::is_same_v<T, move::R2Remove>) {
          d.require(s.first);
          d.require(s.second);
          const std::size_t oa = d.position(s.first, Role::Over);
          const std::size_t ob = d.position(s.second, Role::Over);
          const std::size_t ua = d.position(s.first, Role::Under);
          const std::size_t ub = d.position(s.second, Role::Under);
          const std::size_t over_start = pair_start(oa, ob, size);
          const std::size_t under_start = pair_start(ua, ub, size);
          const ChordId lead = over_start == oa ? s.first : s.second;
          const R2Shape shape = (under_start == (lead == s.first ? ua : ub)) ? R2Shape::Crossed : R2Shape::Nested;
          const std::vector<std::size_t> removed{oa, ob, ua, ub};
          const std::size_t over_gap = reduced_gap(over_start, removed, size - 4);
          const std::size_t under_gap = reduced_gap(under_start, removed, size - 4);
          // With both blocks in one gap the block that comes first goes first.
          const bool under_leads = over_gap == under_gap && (under_start + 2) % size == over_start;
          if (under_leads) return move::R2Insert{under_gap, over_gap, d.sign(lead), OverSite::Second, shape};
          return move::R2Insert{over_gap, under_gap, d.sign(lead), OverSite::First, shape};
        } else {
          R3Match flipped = s.match;
          flipped.form = flipped.form == R3Form::Before ? R3Form::After : R3Form::Before;
          return move::R3{flipped};
        }
      },
      step);
}

std::string format_step(const MoveStep& step) {
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, move::R1Insert>) {
          out << "R1Insert gap=" << s.gap << " sign=" << sign_char(s.sign)
              << " order=" << (s.order == R1Order::OverFirst ? "OU" : "UO");
        } else if constexpr (std::is_same_v<T, move::R1Remove>) {
          out << "R1Remove chord=" << s.chord.label();
        } else if constexpr (std::is_same_v<T, move::R2Insert>) {
          out << "R2Insert p=" << s.gap_p << " q=" << s.gap_q << " sign=" << sign_char(s.sign)
              << " over=" << (s.over_site == OverSite::First ? 'p' : 'q')
              << " shape=" << (s.shape == R2Shape::Nested ? "nested" : "crossed");
        } else if constexpr (std::is_same_v<T, move::R2Remove>) {
          out << "R2Remove c1=" << s.first.label() << " c2=" << s.second.label();
        } else {
          out << "R3 form=" << (s.match.form == R3Form::Before ? "before" : "after") << " x=" << s.match.x.label()
              << " y=" << s.match.y.label() << " z=" << s.match.z.label();
        }
      },
      step);
  return out.str();
}

namespace {

class StepFields {
 public:
  explicit StepFields(std::string_view line) : line_(line) {
    std::istringstream in{std::string(line)};
    in >> kind_;
    std::string field;
    while (in >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos || eq == 0) throw MoveError("malformed trace field '" + field + "' in: " + line_);
      values_[field.substr(0, eq)] = field.substr(eq + 1);
    }
  }

  [[nodiscard]] const std::string& kind() const { return kind_; }

  [[nodiscard]] const std::string& text(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw MoveError("missing field '" + name + "' in: " + line_);
    return it->second;
  }

  [[nodiscard]] std::size_t number(const std::string& name) const {
    const auto& v = text(name);
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
      throw MoveError("field '" + name + "' is not a number in: " + line_);
    return std::stoull(v);
  }

  [[nodiscard]] ChordId chord(const std::string& name) const {
    const auto label = number(name);
    if (label == 0) throw MoveError("chord labels start at 1 in: " + line_);
    return ChordId{static_cast<std::uint32_t>(label - 1)};
  }

  [[nodiscard]] Sign sign() const {
    const auto& v = text("sign");
    if (v == "+") return Sign::Positive;
    if (v == "-") return Sign::Negative;
    throw MoveError("sign must be + or - in: " + line_);
  }

  template <typename E>
  E choice(const std::string& name, std::string_view a, E ea, std::string_view b, E eb) const {
    const auto& v = text(name);
    if (v == a) return ea;
    if (v == b) return eb;
    throw MoveError("unexpected value for '" + name + "' in: " + line_);
  }

 private:
  std::string line_;
  std::string kind_;
  std::map<std::string, std::string> values_;
};

}  // namespace

MoveStep parse_step(std::string_view line) {
  const StepFields f(line);
  if (f.kind() == "R1Insert")
    return move::R1Insert{f.number("gap"), f.sign(), f.choice("order", "OU", R1Order::OverFirst, "UO", R1Order::UnderFirst)};
  if (f.kind() == "R1Remove") return move::R1Remove{f.chord("chord")};
  if (f.kind() == "R2Insert")
    return move::R2Insert{f.number("p"), f.number("q"), f.sign(),
                          f.choice("over", "p", OverSite::First, "q", OverSite::Second),
                          f.choice("shape", "nested", R2Shape::Nested, "crossed", R2Shape::Crossed)};
  if (f.kind() == "R2Remove") return move::R2Remove{f.chord("c1"), f.chord("c2")};
  if (f.kind() == "R3")
    return move::R3{R3Match{f.choice("form", "before", R3Form::Before, "after", R3Form::After), f.chord("x"),
                            f.chord("y"), f.chord("z")}};
  throw MoveError("unknown move kind in: " + std::string(line));
}

std::string format_trace(const std::vector<MoveStep>& trace) {
  std::string out;
  for (const auto& step : trace) out += format_step(step) + '\n';
  return out;
}

std::vector<MoveStep> parse_trace(std::string_view text) {
  std::vector<MoveStep> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    out.push_back(parse_step(line));
  }
  return out;
}

GaussDiagram random_diagram(std::size_t chords, std::mt19937_64& rng) {
  std::vector<Endpoint> endpoints;
  endpoints.reserve(2 * chords);
  std::vector<Sign> signs;
  signs.reserve(chords);
  std::bernoulli_distribution coin(0.5);
  for (std::uint32_t c = 0; c < chords; ++c) {
    endpoints.push_back({ChordId{c}, Role::Over});
    endpoints.push_back({ChordId{c}, Role::Under});
    signs.push_back(coin(rng) ? Sign::Positive : Sign::Negative);
  }
  std::shuffle(endpoints.begin(), endpoints.end(), rng);
  return normalize_labels(GaussDiagram(std::move(endpoints), std::move(signs)));
}

namespace {

std::vector<ChordId> r1_candidates(const GaussDiagram& d) {
  std::vector<ChordId> out;
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    if (r1_removable(d, ChordId{c})) out.push_back(ChordId{c});
  }
  return out;
}

std::vector<move::R2Remove> r2_candidates(const GaussDiagram& d) {
  std::vector<move::R2Remove> out;
  const std::size_t size = d.endpoint_count();
  for (std::size_t i = 0; i < size && size >= 4; ++i) {
    const Endpoint& a = d.at(i);
    const Endpoint& b = d.at(next_pos(i, size));
    if (a.role == Role::Over && b.role == Role::Over && r2_removable(d, a.chord, b.chord))
      out.push_back({a.chord, b.chord});
  }
  return out;
}

}  // namespace

WalkResult random_walk_traced(const GaussDiagram& d, std::size_t steps, std::uint64_t seed, std::size_t size_cap) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  auto pick = [&rng](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  auto random_sign = [&] { return coin(rng) ? Sign::Positive : Sign::Negative; };

  WalkResult result{d, {}};
  enum class Kind { R1Insert, R1Remove, R2Insert, R2Remove, R3 };
  for (std::size_t step = 0; step < steps; ++step) {
    const GaussDiagram& current = result.diagram;
    const auto removable1 = r1_candidates(current);
    const auto removable2 = r2_candidates(current);
    const auto r3 = r3_matches(current);
    std::vector<Kind> kinds;
    if (current.chord_count() + 1 <= size_cap) kinds.push_back(Kind::R1Insert);
    if (!removable1.empty()) kinds.push_back(Kind::R1Remove);
    if (current.chord_count() + 2 <= size_cap) kinds.push_back(Kind::R2Insert);
    if (!removable2.empty()) kinds.push_back(Kind::R2Remove);
    if (!r3.empty()) kinds.push_back(Kind::R3);
    if (kinds.empty()) continue;

    const std::size_t gaps = current.gap_count();
    MoveStep chosen;
    switch (kinds[pick(kinds.size())]) {
      case Kind::R1Insert: {
        const std::size_t gap = pick(gaps);
        const Sign sign = random_sign();
        chosen = move::R1Insert{gap, sign, coin(rng) ? R1Order::OverFirst : R1Order::UnderFirst};
        break;
      }
      case Kind::R1Remove:
        chosen = move::R1Remove{removable1[pick(removable1.size())]};
        break;
      case Kind::R2Insert: {
        const std::size_t p = pick(gaps);
        const std::size_t q = pick(gaps);
        const Sign sign = random_sign();
        const OverSite site = coin(rng) ? OverSite::First : OverSite::Second;
        chosen = move::R2Insert{p, q, sign, site, coin(rng) ? R2Shape::Nested : R2Shape::Crossed};
        break;
      }
      case Kind::R2Remove:
        chosen = removable2[pick(removable2.size())];
        break;
      case Kind::R3:
        chosen = move::R3{r3[pick(r3.size())]};
        break;
    }
    result.diagram = apply_move(current, chosen);
    result.trace.push_back(chosen);
  }
  return result;
}

GaussDiagram random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed, std::size_t size_cap) {
  return random_walk_traced(d, steps, seed, size_cap).diagram;
}

namespace {

// New label of every chord when `d` is renumbered by first occurrence.
std::vector<ChordId> first_occurrence_labels(const GaussDiagram& d) {
  std::vector<ChordId> out(d.chord_count());
  std::vector<bool> seen(d.chord_count(), false);
  std::uint32_t next = 0;
  for (const auto& e : d.endpoints()) {
    if (!seen[e.chord.index]) {
      seen[e.chord.index] = true;
      out[e.chord.index] = ChordId{next++};
    }
  }
  return out;
}

MoveStep relabel_step(MoveStep step, const std::vector<ChordId>& relabel) {
  auto map = [&](ChordId& c) { c = relabel.at(c.index); };
  std::visit(
      [&](auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, move::R1Remove>) {
          map(s.chord);
        } else if constexpr (std::is_same_v<T, move::R2Remove>) {
          map(s.first);
          map(s.second);
        } else if constexpr (std::is_same_v<T, move::R3>) {
          map(s.match.x);
          map(s.match.y);
          map(s.match.z);
        }
      },
      step);
  return step;
}

std::optional<GaussDiagram> replay(const GaussDiagram& start, const std::vector<MoveStep>& trace) {
  GaussDiagram current = start;
  for (const auto& step : trace) {
    try {
      current = apply_move(current, step);
    } catch (const MoveError&) {
      return std::nullopt;
    } catch (const UnknownChordError&) {
      return std::nullopt;
    }
  }
  return current;
}

}  // namespace

Reproducer minimize_trace(const GaussDiagram& start, const std::vector<MoveStep>& trace,
                          const InvariantFunction& invariants) {
  const InvariantSet reference = invariants(start);
  GaussDiagram current = start;
  for (const auto& step : trace) {
    const GaussDiagram next = apply_move(current, step);
    if (invariants(next) != reference) {
      const auto relabel = first_occurrence_labels(current);
      return {serialize(normalize_labels(current)), {relabel_step(step, relabel)}};
    }
    current = next;
  }
  return {serialize(start), {}};
}

FuzzSummary run_fuzz(const FuzzOptions& options, const InvariantFunction& invariants) {
  FuzzSummary summary;
  for (std::size_t i = 0; i < options.count; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    const std::size_t chords = std::uniform_int_distribution<std::size_t>(0, options.initial_max_chords)(rng);
    const GaussDiagram start = random_diagram(chords, rng);
    const std::uint64_t walk_seed = rng();
    const WalkResult walk = random_walk_traced(start, options.steps, walk_seed, options.size_cap);

    ++summary.total;
    const InvariantSet before = invariants(start);
    const InvariantSet after = invariants(walk.diagram);
    if (before == after) {
      ++summary.preserved;
      continue;
    }
    FuzzFailure failure;
    failure.case_index = i;
    failure.code = serialize(start);
    failure.walk_length = walk.trace.size();
    failure.minimized = minimize_trace(start, walk.trace, invariants);
    const GaussDiagram small = parse_gauss_code(failure.minimized.code);
    const auto end = replay(small, failure.minimized.trace);
    failure.changed = differing_invariants(invariants(small), end ? invariants(*end) : after);
    summary.failures.push_back(std::move(failure));
  }
  return summary;
}

}  // namespace gaussindex
