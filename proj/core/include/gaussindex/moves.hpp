#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gaussindex/gauss.hpp"
#include "gaussindex/report.hpp"

namespace gaussindex {

enum class R1Order { OverFirst, UnderFirst };
enum class R2Shape { Nested, Crossed };
/// Which of the two R2 gaps receives the pair of Over endpoints.
enum class OverSite { First, Second };
enum class R3Form { Before, After };

/// Three chords in the pinned R3 configuration.
///
/// Before: contiguous pairs [Over(y) Over(x)], [Under(x) Over(z)],
/// [Under(y) Under(z)] with signs (w(x), w(y), w(z)) = (-, -, +).
/// After: [Over(x) Over(y)], [Over(z) Under(x)], [Under(z) Under(y)], same signs.
struct R3Match {
  R3Form form = R3Form::Before;
  ChordId x;
  ChordId y;
  ChordId z;
  friend bool operator==(const R3Match&, const R3Match&) = default;
};

namespace move {
struct R1Insert {
  std::size_t gap = 0;
  Sign sign = Sign::Positive;
  R1Order order = R1Order::OverFirst;
  friend bool operator==(const R1Insert&, const R1Insert&) = default;
};
struct R1Remove {
  ChordId chord;
  friend bool operator==(const R1Remove&, const R1Remove&) = default;
};
struct R2Insert {
  std::size_t gap_p = 0;
  std::size_t gap_q = 0;
  Sign sign = Sign::Positive;  ///< sign of the first new chord; the second gets the opposite
  OverSite over_site = OverSite::First;
  R2Shape shape = R2Shape::Nested;
  friend bool operator==(const R2Insert&, const R2Insert&) = default;
};
struct R2Remove {
  ChordId first;
  ChordId second;
  friend bool operator==(const R2Remove&, const R2Remove&) = default;
};
struct R3 {
  R3Match match;
  friend bool operator==(const R3&, const R3&) = default;
};
}  // namespace move

using MoveStep = std::variant<move::R1Insert, move::R1Remove, move::R2Insert, move::R2Remove, move::R3>;

/// Adds an isolated chord with adjacent endpoints at `gap`; it becomes chord n.
GaussDiagram r1_insert(const GaussDiagram& d, std::size_t gap, Sign sign, R1Order order);
/// Removes a chord whose endpoints are adjacent on the circle.
GaussDiagram r1_remove(const GaussDiagram& d, ChordId c);

/// Adds chords n (sign `sign`) and n+1 (opposite sign) with both Over
/// endpoints consecutive at one gap and both Under endpoints at the other.
/// When the gaps coincide the block for `gap_p` comes first.
GaussDiagram r2_insert(const GaussDiagram& d, std::size_t gap_p, std::size_t gap_q, Sign sign, OverSite over_site,
                       R2Shape shape);
/// Removes two opposite-sign chords whose Over endpoints are adjacent and
/// whose Under endpoints are adjacent.
GaussDiagram r2_remove(const GaussDiagram& d, ChordId first, ChordId second);
bool r2_removable(const GaussDiagram& d, ChordId first, ChordId second);

std::vector<R3Match> r3_matches(const GaussDiagram& d);
bool r3_holds(const GaussDiagram& d, const R3Match& match);
/// Swaps the endpoints inside each of the three pairs (Before <-> After).
GaussDiagram r3_apply(const GaussDiagram& d, const R3Match& match);

/// Applies `step`, throwing MoveError when it does not apply.
GaussDiagram apply_move(const GaussDiagram& d, const MoveStep& step);
/// A step that undoes `step` when applied to apply_move(d, step), up to rotation
/// and chord relabelling.
MoveStep inverse_step(const GaussDiagram& d, const MoveStep& step);

/// Trace line, e.g. "R2Insert p=1 q=4 sign=+ over=p shape=nested".
std::string format_step(const MoveStep& step);
MoveStep parse_step(std::string_view line);
std::string format_trace(const std::vector<MoveStep>& trace);
std::vector<MoveStep> parse_trace(std::string_view text);

/// Uniform random diagram with `chords` chords, labelled by first occurrence
/// so that parse(serialize(d)) == d.
GaussDiagram random_diagram(std::size_t chords, std::mt19937_64& rng);

struct WalkResult {
  GaussDiagram diagram;
  std::vector<MoveStep> trace;
};

/// Applies `steps` random moves. Each step picks a move kind uniformly among
/// the applicable ones, then an instance of that kind uniformly. Insertions
/// that would exceed `size_cap` chords are not offered. Deterministic for a
/// fixed seed.
WalkResult random_walk_traced(const GaussDiagram& d, std::size_t steps, std::uint64_t seed, std::size_t size_cap);
GaussDiagram random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed, std::size_t size_cap);

// ---- invariance fuzzing ----

struct FuzzOptions {
  std::size_t count = 500;
  std::size_t steps = 50;
  std::size_t initial_max_chords = 8;
  std::size_t size_cap = 30;
  std::uint64_t seed = 7;
};

/// A diagram and a trace that changes its invariants.
struct Reproducer {
  std::string code;
  std::vector<MoveStep> trace;
};

struct FuzzFailure {
  std::size_t case_index = 0;
  std::string code;                 ///< starting diagram of the walk
  std::size_t walk_length = 0;      ///< steps in the full walk
  Reproducer minimized;             ///< shortest reproducer found
  std::vector<std::string> changed; ///< invariants changed by the reproducer
};

struct FuzzSummary {
  std::size_t total = 0;
  std::size_t preserved = 0;
  std::vector<FuzzFailure> failures;
};

using InvariantFunction = std::function<InvariantSet(const GaussDiagram&)>;

/// Shrinks a failing walk to one step: the first step that changes the
/// invariants, applied to the diagram reached just before it. The diagram is
/// relabelled by first occurrence so `code` parses back to it. Returns an
/// empty trace when no step changes the invariants.
Reproducer minimize_trace(const GaussDiagram& start, const std::vector<MoveStep>& trace,
                          const InvariantFunction& invariants);

FuzzSummary run_fuzz(const FuzzOptions& options, const InvariantFunction& invariants = invariant_set);

}  // namespace gaussindex
