#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gaussindex/exponential_sum.hpp"
#include "gaussindex/gauss.hpp"
#include "gaussindex/laurent.hpp"

namespace gaussindex {

/// Census cap used when none is given: 6, or GAUSSINDEX_CENSUS_CAP if set.
std::size_t default_census_cap();

/// (2n-1)!! * 4^n: matchings times signs times Over/Under orientations.
std::uint64_t raw_diagram_count(std::size_t chords);

/// Streams one diagram per rotation class of diagrams with `chords` chords,
/// each already in canonical form, in a fixed deterministic order.
void enumerate_diagrams(std::size_t chords, const std::function<void(const GaussDiagram&)>& sink);
std::vector<GaussDiagram> enumerate_diagrams(std::size_t chords);

struct CensusRecord {
  std::string canonical_code;
  std::int64_t writhe = 0;
  LaurentPolynomial w_t;
  LaurentPolynomial p;
  LaurentPolynomial z;
  ExponentialSum f;
  Integer bound = 0;
};

CensusRecord make_census_record(const GaussDiagram& d);
nlohmann::json to_json(const CensusRecord& record);
std::string csv_header();
std::string to_csv_row(const CensusRecord& record);

/// Conjunction of clauses such as "F!=0 && W_t=0 && bound>=3".
///
/// Polynomial fields (W_t, P, Z, F) accept "=0" and "!=0"; integer fields
/// (writhe, bound) accept "=", "!=" and ">=" with any integer. Clauses are
/// joined by "&&" or ",".
class Predicate {
 public:
  enum class Field { Writhe, Wt, P, Z, F, Bound };
  enum class Op { Equal, NotEqual, AtLeast };
  struct Clause {
    Field field;
    Op op;
    Integer value;
  };

  Predicate() = default;
  /// Throws std::invalid_argument on malformed input.
  static Predicate parse(std::string_view text);

  [[nodiscard]] bool operator()(const CensusRecord& record) const;
  [[nodiscard]] const std::vector<Clause>& clauses() const { return clauses_; }
  [[nodiscard]] const std::string& text() const { return text_; }

 private:
  std::vector<Clause> clauses_;
  std::string text_;
};

struct CensusOptions {
  std::size_t chords = 0;
  std::size_t cap = 6;
  unsigned threads = 1;
  std::optional<Predicate> where;
};

struct CensusSummary {
  std::size_t chords = 0;
  std::uint64_t raw_diagrams = 0;
  std::uint64_t classes = 0;
  std::uint64_t matched = 0;
  std::uint64_t nonzero_f = 0;
  std::map<std::string, std::uint64_t> by_f;  ///< rendered F -> count among matched records
  std::string where;
};

nlohmann::json to_json(const CensusSummary& summary);

/// Tabulates every rotation class. Matching records reach `sink` in
/// enumeration order regardless of `threads`. Throws CapExceededError when
/// chords > cap.
CensusSummary run_census(const CensusOptions& options, const std::function<void(const CensusRecord&)>& sink);

/// Canonical codes of all classes with `chords` chords satisfying `predicate`.
std::vector<std::string> find_examples(std::size_t chords, const Predicate& predicate,
                                       std::size_t cap = default_census_cap());

}  // namespace gaussindex
