#include "gaussindex/census.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <future>

#include <nlohmann/json.hpp>

#include "gaussindex/errors.hpp"
#include "gaussindex/invariants.hpp"

namespace gaussindex {

namespace {

constexpr std::size_t kDefaultCap = 6;
constexpr std::size_t kMatchingsPerChunk = 32;

/// Perfect matchings of 0..2n-1 as partner arrays, in lexicographic order of
/// the choice sequence (first free point paired with each later free point).
std::vector<std::vector<std::uint8_t>> perfect_matchings(std::size_t chords) {
  std::vector<std::vector<std::uint8_t>> out;
  const std::size_t size = 2 * chords;
  std::vector<std::uint8_t> partner(size, 0xFF);
  std::function<void()> recurse = [&] {
    std::size_t first = 0;
    while (first < size && partner[first] != 0xFF) ++first;
    if (first == size) {
      out.push_back(partner);
      return;
    }
    for (std::size_t other = first + 1; other < size; ++other) {
      if (partner[other] != 0xFF) continue;
      partner[first] = static_cast<std::uint8_t>(other);
      partner[other] = static_cast<std::uint8_t>(first);
      recurse();
      partner[first] = partner[other] = 0xFF;
    }
  };
  recurse();
  return out;
}

/// Emits the canonical diagrams built on one matching.
void expand_matching(const std::vector<std::uint8_t>& partner, std::size_t chords,
                     const std::function<void(const GaussDiagram&)>& sink) {
  const std::size_t size = 2 * chords;
  // Chord labels in order of first endpoint.
  std::vector<std::uint32_t> label(size);
  std::uint32_t next = 0;
  for (std::size_t p = 0; p < size; ++p) {
    if (partner[p] > p) {
      label[p] = label[partner[p]] = next++;
    }
  }
  const std::uint32_t masks = 1u << chords;
  std::vector<Endpoint> endpoints(size);
  std::vector<Sign> signs(chords);
  for (std::uint32_t sign_mask = 0; sign_mask < masks; ++sign_mask) {
    for (std::uint32_t c = 0; c < chords; ++c) signs[c] = (sign_mask >> c) & 1u ? Sign::Negative : Sign::Positive;
    for (std::uint32_t role_mask = 0; role_mask < masks; ++role_mask) {
      for (std::size_t p = 0; p < size; ++p) {
        const std::uint32_t c = label[p];
        const bool first = partner[p] > p;
        const bool under_first = ((role_mask >> c) & 1u) != 0;
        endpoints[p] = {ChordId{c}, (first == under_first) ? Role::Under : Role::Over};
      }
      GaussDiagram d(endpoints, signs);
      if (is_canonical(d)) sink(d);
    }
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_zero_field(const CensusRecord& r, Predicate::Field field) {
  switch (field) {
    case Predicate::Field::Wt: return r.w_t.is_zero();
    case Predicate::Field::P: return r.p.is_zero();
    case Predicate::Field::Z: return r.z.is_zero();
    case Predicate::Field::F: return r.f.is_zero();
    default: return false;
  }
}

}  // namespace

std::size_t default_census_cap() {
  if (const char* env = std::getenv("GAUSSINDEX_CENSUS_CAP")) {
    const std::string text = trim(env);
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos && text.size() < 6)
      return static_cast<std::size_t>(std::stoul(text));
  }
  return kDefaultCap;
}

std::uint64_t raw_diagram_count(std::size_t chords) {
  std::uint64_t count = 1;
  for (std::size_t k = 1; k <= chords; ++k) count *= (2 * k - 1) * 4;
  return count;
}

void enumerate_diagrams(std::size_t chords, const std::function<void(const GaussDiagram&)>& sink) {
  if (chords == 0) {
    sink(GaussDiagram{});
    return;
  }
  if (chords > 15) throw CapExceededError("enumerate_diagrams: too many chords");
  for (const auto& matching : perfect_matchings(chords)) expand_matching(matching, chords, sink);
}

std::vector<GaussDiagram> enumerate_diagrams(std::size_t chords) {
  std::vector<GaussDiagram> out;
  enumerate_diagrams(chords, [&](const GaussDiagram& d) { out.push_back(d); });
  return out;
}

CensusRecord make_census_record(const GaussDiagram& d) {
  CensusRecord r;
  r.canonical_code = canonical_code(d);
  r.writhe = writhe(d);
  r.w_t = writhe_poly(d);
  r.p = affine_index_poly(d);
  r.z = zero_poly(d);
  r.f = f_invariant(d);
  r.bound = crossing_bound(r.f);
  return r;
}

nlohmann::json to_json(const CensusRecord& r) {
  return {{"canonical_code", r.canonical_code},
          {"writhe", r.writhe},
          {"W_t", r.w_t.render("t")},
          {"P", r.p.render("t")},
          {"Z", r.z.render("t")},
          {"F", r.f.render()},
          {"bound", integer_to_json(r.bound)}};
}

std::string csv_header() { return "canonical_code,writhe,bound,W_t,P,Z,F"; }

std::string to_csv_row(const CensusRecord& r) {
  auto quoted = [](const std::string& s) { return '"' + s + '"'; };
  return quoted(r.canonical_code) + ',' + std::to_string(r.writhe) + ',' + r.bound.str() + ',' +
         quoted(r.w_t.render("t")) + ',' + quoted(r.p.render("t")) + ',' + quoted(r.z.render("t")) + ',' +
         quoted(r.f.render());
}

Predicate Predicate::parse(std::string_view text) {
  Predicate out;
  out.text_ = trim(text);
  std::string normalized;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 2) == "&&") {
      normalized += ',';
      ++i;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      normalized += text[i];
    }
  }
  if (normalized.empty()) throw std::invalid_argument("empty predicate");
  std::size_t start = 0;
  while (start <= normalized.size()) {
    const std::size_t end = std::min(normalized.find(',', start), normalized.size());
    const std::string clause = normalized.substr(start, end - start);
    if (clause.empty()) throw std::invalid_argument("malformed predicate: empty clause in '" + out.text_ + "'");
    const std::size_t op_pos = clause.find_first_of("=!>");
    if (op_pos == std::string::npos || op_pos == 0)
      throw std::invalid_argument("malformed predicate clause '" + clause + "'");
    const std::string name = clause.substr(0, op_pos);
    std::string rest = clause.substr(op_pos);
    Op op;
    if (rest.starts_with("!=")) {
      op = Op::NotEqual;
      rest.erase(0, 2);
    } else if (rest.starts_with(">=")) {
      op = Op::AtLeast;
      rest.erase(0, 2);
    } else if (rest.starts_with("==")) {
      op = Op::Equal;
      rest.erase(0, 2);
    } else if (rest.starts_with("=")) {
      op = Op::Equal;
      rest.erase(0, 1);
    } else {
      throw std::invalid_argument("malformed predicate clause '" + clause + "'");
    }
    const std::size_t digits = (!rest.empty() && rest[0] == '-') ? 1 : 0;
    if (rest.size() == digits || rest.find_first_not_of("0123456789", digits) != std::string::npos)
      throw std::invalid_argument("predicate clause '" + clause + "' needs an integer value");
    const Integer value(rest);

    Field field;
    if (name == "writhe") field = Field::Writhe;
    else if (name == "bound") field = Field::Bound;
    else if (name == "W_t") field = Field::Wt;
    else if (name == "P") field = Field::P;
    else if (name == "Z") field = Field::Z;
    else if (name == "F") field = Field::F;
    else throw std::invalid_argument("unknown predicate field '" + name + "'");

    const bool polynomial = field != Field::Writhe && field != Field::Bound;
    if (polynomial && (op == Op::AtLeast || value != 0))
      throw std::invalid_argument("polynomial field '" + name + "' only supports =0 and !=0");
    out.clauses_.push_back({field, op, value});
    start = end + 1;
  }
  return out;
}

bool Predicate::operator()(const CensusRecord& r) const {
  for (const auto& [field, op, value] : clauses_) {
    bool ok;
    if (field == Field::Writhe || field == Field::Bound) {
      const Integer actual = field == Field::Writhe ? Integer{r.writhe} : r.bound;
      ok = op == Op::Equal ? actual == value : op == Op::NotEqual ? actual != value : actual >= value;
    } else {
      ok = is_zero_field(r, field) == (op == Op::Equal);
    }
    if (!ok) return false;
  }
  return true;
}

nlohmann::json to_json(const CensusSummary& s) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& [f, count] : s.by_f) groups.push_back({{"F", f}, {"count", count}});
  return {{"chords", s.chords},         {"raw_diagrams", s.raw_diagrams}, {"classes", s.classes},
          {"matched", s.matched},       {"nonzero_F", s.nonzero_f},       {"where", s.where},
          {"by_F", std::move(groups)}};
}

CensusSummary run_census(const CensusOptions& options, const std::function<void(const CensusRecord&)>& sink) {
  if (options.chords > options.cap) {
    throw CapExceededError("census: " + std::to_string(options.chords) + " chords exceeds the cap of " +
                           std::to_string(options.cap));
  }
  CensusSummary summary;
  summary.chords = options.chords;
  summary.raw_diagrams = raw_diagram_count(options.chords);
  summary.where = options.where ? options.where->text() : std::string{};

  struct ChunkResult {
    std::uint64_t classes = 0;
    std::vector<CensusRecord> matched;
  };
  auto process = [&](auto&& enumerate) {
    ChunkResult result;
    enumerate([&](const GaussDiagram& d) {
      ++result.classes;
      CensusRecord record = make_census_record(d);
      if (!options.where || (*options.where)(record)) result.matched.push_back(std::move(record));
    });
    return result;
  };
  auto absorb = [&](ChunkResult&& chunk) {
    summary.classes += chunk.classes;
    for (auto& record : chunk.matched) {
      ++summary.matched;
      if (!record.f.is_zero()) ++summary.nonzero_f;
      ++summary.by_f[record.f.render()];
      sink(record);
    }
  };

  if (options.chords == 0) {
    absorb(process([](const auto& emit) { emit(GaussDiagram{}); }));
    return summary;
  }

  const auto matchings = perfect_matchings(options.chords);
  const std::size_t chunk_count = (matchings.size() + kMatchingsPerChunk - 1) / kMatchingsPerChunk;
  const unsigned threads = std::max(1u, options.threads);
  auto run_chunk = [&](std::size_t chunk) {
    const std::size_t begin = chunk * kMatchingsPerChunk;
    const std::size_t end = std::min(begin + kMatchingsPerChunk, matchings.size());
    return process([&](const auto& emit) {
      for (std::size_t m = begin; m < end; ++m) expand_matching(matchings[m], options.chords, emit);
    });
  };
  for (std::size_t batch = 0; batch < chunk_count; batch += threads) {
    const std::size_t batch_end = std::min<std::size_t>(batch + threads, chunk_count);
    if (threads == 1) {
      absorb(run_chunk(batch));
      continue;
    }
    std::vector<std::future<ChunkResult>> pending;
    for (std::size_t chunk = batch; chunk < batch_end; ++chunk)
      pending.push_back(std::async(std::launch::async, run_chunk, chunk));
    for (auto& f : pending) absorb(f.get());
  }
  return summary;
}

std::vector<std::string> find_examples(std::size_t chords, const Predicate& predicate, std::size_t cap) {
  std::vector<std::string> out;
  CensusOptions options;
  options.chords = chords;
  options.cap = cap;
  options.where = predicate;
  run_census(options, [&](const CensusRecord& r) { out.push_back(r.canonical_code); });
  return out;
}

}  // namespace gaussindex
