#include "gaussindex/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace gaussindex {

InvariantSet invariant_set(const GaussDiagram& d) {
  auto [w, q, f] = transcendental(d);
  InvariantSet out;
  out.f = std::move(f);
  out.w_ts = std::move(w);
  out.q_ts = std::move(q);
  out.w_t = writhe_poly(d);
  out.p = affine_index_poly(d);
  out.z = zero_poly(d);
  out.odd_writhe = odd_writhe(d);
  out.odd_writhe_poly = odd_writhe_poly(d);
  out.parity = collapse(parity_writhe_poly(d));
  return out;
}

std::vector<std::string> differing_invariants(const InvariantSet& a, const InvariantSet& b) {
  std::vector<std::string> out;
  if (a.f != b.f) out.emplace_back("F");
  if (a.w_ts != b.w_ts) out.emplace_back("W(t,s)");
  if (a.q_ts != b.q_ts) out.emplace_back("Q(t,s)");
  if (a.w_t != b.w_t) out.emplace_back("W(t)");
  if (a.p != b.p) out.emplace_back("P(t)");
  if (a.z != b.z) out.emplace_back("Z(t)");
  if (a.odd_writhe != b.odd_writhe) out.emplace_back("odd writhe");
  if (a.odd_writhe_poly != b.odd_writhe_poly) out.emplace_back("odd writhe polynomial");
  if (a.parity != b.parity) out.emplace_back("parity writhe polynomial");
  return out;
}

InvariantReport make_report(const GaussDiagram& d) {
  const IndexReport indices = index_report(d);
  InvariantReport report;
  report.code = serialize(d);
  report.canonical_code = canonical_code(d);
  report.writhe = indices.writhe;
  for (const auto& chord : indices.chords) {
    report.indices[chord.chord.label()] = chord.index;
    const auto& key = chord.function.key;
    report.index_functions[chord.chord.label()] = key.render_exponent();
  }
  const auto [w, q, f] = transcendental(d);
  report.w_t = writhe_poly(d).render("t");
  report.p = affine_index_poly(d).render("t");
  report.z = zero_poly(d).render("t");
  report.odd_writhe = odd_writhe(d);
  report.w_ts = w.render();
  report.q_ts = q.render();
  report.f = f.render();
  report.bound = crossing_bound(f);
  return report;
}

nlohmann::json to_json(const InvariantReport& report) {
  nlohmann::json indices = nlohmann::json::object();
  for (const auto& [label, index] : report.indices) indices[std::to_string(label)] = index;
  nlohmann::json functions = nlohmann::json::object();
  for (const auto& [label, text] : report.index_functions) functions[std::to_string(label)] = text;
  return {
      {"code", report.code},
      {"canonical_code", report.canonical_code},
      {"writhe", report.writhe},
      {"indices", std::move(indices)},
      {"index_functions", std::move(functions)},
      {"W_t", report.w_t},
      {"P", report.p},
      {"Z", report.z},
      {"odd_writhe", report.odd_writhe},
      {"W_ts", report.w_ts},
      {"Q_ts", report.q_ts},
      {"F", report.f},
      {"bound", integer_to_json(report.bound)},
  };
}

InvariantReport invariant_report_from_json(const nlohmann::json& value) {
  InvariantReport report;
  report.code = value.at("code").get<std::string>();
  report.canonical_code = value.at("canonical_code").get<std::string>();
  report.writhe = value.at("writhe").get<std::int64_t>();
  for (const auto& [label, index] : value.at("indices").items())
    report.indices[static_cast<std::uint32_t>(std::stoul(label))] = index.get<std::int64_t>();
  for (const auto& [label, text] : value.at("index_functions").items())
    report.index_functions[static_cast<std::uint32_t>(std::stoul(label))] = text.get<std::string>();
  report.w_t = value.at("W_t").get<std::string>();
  report.p = value.at("P").get<std::string>();
  report.z = value.at("Z").get<std::string>();
  report.odd_writhe = value.at("odd_writhe").get<std::int64_t>();
  report.w_ts = value.at("W_ts").get<std::string>();
  report.q_ts = value.at("Q_ts").get<std::string>();
  report.f = value.at("F").get<std::string>();
  report.bound = integer_from_json(value.at("bound"));
  return report;
}

std::string render_text(const InvariantReport& report) {
  std::ostringstream out;
  out << "code: " << report.code << '\n';
  out << "canonical: " << report.canonical_code << '\n';
  out << "chords: " << report.indices.size() << '\n';
  out << "writhe: " << report.writhe << '\n';
  for (const auto& [label, index] : report.indices) {
    out << "  c" << label << ": Ind = " << index << ", g = " << report.index_functions.at(label) << '\n';
  }
  out << "W(t) = " << report.w_t << '\n';
  out << "P(t) = " << report.p << '\n';
  out << "Z(t) = " << report.z << '\n';
  out << "odd writhe = " << report.odd_writhe << '\n';
  out << "W(t,s) = " << report.w_ts << '\n';
  out << "Q(t,s) = " << report.q_ts << '\n';
  out << "F = " << report.f << '\n';
  out << "crossing bound = " << report.bound << '\n';
  return out.str();
}

}  // namespace gaussindex
