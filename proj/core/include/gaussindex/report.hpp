#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gaussindex/exponential_sum.hpp"
#include "gaussindex/gauss.hpp"
#include "gaussindex/invariants.hpp"
#include "gaussindex/laurent.hpp"

namespace gaussindex {

/// The knot invariants (everything that must survive Reidemeister moves).
struct InvariantSet {
  ExponentialSum f;
  ExponentialSum w_ts;
  ExponentialSum q_ts;
  LaurentPolynomial w_t;
  LaurentPolynomial p;
  LaurentPolynomial z;
  std::int64_t odd_writhe = 0;
  LaurentPolynomial odd_writhe_poly;
  LaurentPolynomial parity;  ///< parity writhe polynomial with y = x

  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

InvariantSet invariant_set(const GaussDiagram& d);

/// Names of the invariants that differ between `a` and `b`, in a fixed order.
std::vector<std::string> differing_invariants(const InvariantSet& a, const InvariantSet& b);

/// Full per-diagram report with every polynomial rendered canonically.
struct InvariantReport {
  std::string code;
  std::string canonical_code;
  std::int64_t writhe = 0;
  std::map<std::uint32_t, std::int64_t> indices;          // chord label -> Ind
  std::map<std::uint32_t, std::string> index_functions;   // chord label -> rendered key
  std::string w_t;
  std::string p;
  std::string z;
  std::int64_t odd_writhe = 0;
  std::string w_ts;
  std::string q_ts;
  std::string f;
  Integer bound = 0;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport make_report(const GaussDiagram& d);

nlohmann::json to_json(const InvariantReport& report);
InvariantReport invariant_report_from_json(const nlohmann::json& value);

/// Multi-line human-readable report; contains a line "F = <rendered F>".
std::string render_text(const InvariantReport& report);

}  // namespace gaussindex
