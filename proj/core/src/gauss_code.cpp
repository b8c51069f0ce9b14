#include <cctype>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "gaussindex/errors.hpp"
#include "gaussindex/gauss.hpp"

namespace gaussindex {

namespace {

constexpr std::uint32_t kUnset = 0xFFFFFFFFu;

struct RawToken {
  std::string text;
  Role role;
  std::string id;  // decimal digits, leading zeros stripped
  Sign sign;
};

std::vector<RawToken> tokenize(std::string_view code) {
  std::vector<RawToken> tokens;
  std::size_t i = 0;
  auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
  auto is_digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
  while (i < code.size()) {
    if (is_space(code[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    // Garbled input: report everything up to the next boundary.
    auto rest = [&] {
      std::size_t end = start;
      while (end < code.size() && !is_space(code[end]) && (end == start || (code[end] != 'O' && code[end] != 'U')))
        ++end;
      return std::string(code.substr(start, end - start));
    };
    const char head = code[i];
    if (head != 'O' && head != 'U') throw ParseError(rest(), "expected 'O' or 'U'");
    ++i;
    const std::size_t digits = i;
    while (i < code.size() && is_digit(code[i])) ++i;
    if (i == digits) throw ParseError(rest(), "missing chord id");
    std::string id(code.substr(digits, i - digits));
    id.erase(0, std::min(id.find_first_not_of('0'), id.size()));
    if (id.empty()) throw ParseError(std::string(code.substr(start, i - start)), "chord id must be positive");
    if (i == code.size() || (code[i] != '+' && code[i] != '-'))
      throw ParseError(std::string(code.substr(start, i - start)), "missing sign");
    const Sign sign = code[i] == '+' ? Sign::Positive : Sign::Negative;
    ++i;
    tokens.push_back({std::string(code.substr(start, i - start)), head == 'O' ? Role::Over : Role::Under,
                      std::move(id), sign});
  }
  return tokens;
}

std::uint32_t encode(Role role, std::uint32_t label, Sign sign) {
  return (role == Role::Under ? (1u << 31) : 0u) | (label << 1) | (sign == Sign::Negative ? 1u : 0u);
}

void append_token(std::string& out, std::uint32_t token) {
  out += (token >> 31) ? 'U' : 'O';
  out += std::to_string(((token & 0x7FFFFFFFu) >> 1) + 1);
  out += (token & 1u) ? '-' : '+';
}

/// Token stream of the rotation starting at `start`, relabelled by first
/// occurrence. Compares against `reference` as it goes and stops at the first
/// difference; returns the ordering of this rotation relative to `reference`.
std::strong_ordering compare_rotation(const GaussDiagram& d, std::size_t start,
                                      const std::vector<std::uint32_t>& reference,
                                      std::vector<std::uint32_t>& labels) {
  const std::size_t size = d.endpoint_count();
  std::fill(labels.begin(), labels.end(), kUnset);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < size; ++i) {
    const Endpoint& e = d.at((start + i) % size);
    auto& label = labels[e.chord.index];
    if (label == kUnset) label = next++;
    const std::uint32_t token = encode(e.role, label, d.sign(e.chord));
    if (token != reference[i]) return token < reference[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<std::uint32_t> rotation_tokens(const GaussDiagram& d, std::size_t start) {
  const std::size_t size = d.endpoint_count();
  std::vector<std::uint32_t> labels(d.chord_count(), kUnset);
  std::vector<std::uint32_t> tokens;
  tokens.reserve(size);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < size; ++i) {
    const Endpoint& e = d.at((start + i) % size);
    auto& label = labels[e.chord.index];
    if (label == kUnset) label = next++;
    tokens.push_back(encode(e.role, label, d.sign(e.chord)));
  }
  return tokens;
}

}  // namespace

GaussDiagram parse_gauss_code(std::string_view code) {
  const auto tokens = tokenize(code);
  struct Seen {
    std::uint32_t index;
    Sign sign;
    bool over = false;
    bool under = false;
    std::string last_token;
  };
  std::map<std::string, Seen> seen;
  std::vector<std::string> order;
  std::vector<Endpoint> endpoints;
  std::vector<Sign> signs;
  for (const auto& token : tokens) {
    auto [it, inserted] = seen.try_emplace(token.id);
    Seen& entry = it->second;
    if (inserted) {
      entry.index = static_cast<std::uint32_t>(signs.size());
      entry.sign = token.sign;
      signs.push_back(token.sign);
      order.push_back(token.id);
    } else if (entry.sign != token.sign) {
      throw ParseError(token.text, "sign mismatch for chord " + token.id);
    }
    bool& flag = token.role == Role::Over ? entry.over : entry.under;
    if (flag) {
      throw ParseError(token.text, std::string("duplicate ") + (token.role == Role::Over ? "Over" : "Under") +
                                       " endpoint for chord " + token.id);
    }
    flag = true;
    entry.last_token = token.text;
    endpoints.push_back({ChordId{entry.index}, token.role});
  }
  for (const auto& id : order) {
    const Seen& entry = seen.at(id);
    if (!(entry.over && entry.under))
      throw ParseError(entry.last_token, "chord " + id + " must occur exactly twice (once O, once U)");
  }
  return GaussDiagram(std::move(endpoints), std::move(signs));
}

std::string serialize(const GaussDiagram& d, std::size_t basepoint) {
  std::string out;
  const std::size_t size = d.endpoint_count();
  for (std::size_t i = 0; i < size; ++i) {
    const Endpoint& e = d.at((basepoint + i) % size);
    out += role_char(e.role);
    out += std::to_string(e.chord.label());
    out += sign_char(d.sign(e.chord));
  }
  return out;
}

std::string canonical_code(const GaussDiagram& d) {
  const std::size_t size = d.endpoint_count();
  if (size == 0) return {};
  std::vector<std::uint32_t> best = rotation_tokens(d, 0);
  std::vector<std::uint32_t> labels(d.chord_count());
  for (std::size_t k = 1; k < size; ++k) {
    if (compare_rotation(d, k, best, labels) == std::strong_ordering::less) {
      best = rotation_tokens(d, k);
    }
  }
  std::string out;
  for (auto token : best) append_token(out, token);
  return out;
}

bool is_canonical(const GaussDiagram& d) {
  const std::size_t size = d.endpoint_count();
  if (size == 0) return true;
  std::vector<std::uint32_t> own;
  own.reserve(size);
  for (const auto& e : d.endpoints()) own.push_back(encode(e.role, e.chord.index, d.sign(e.chord)));
  std::vector<std::uint32_t> labels(d.chord_count());
  if (compare_rotation(d, 0, own, labels) != std::strong_ordering::equal) return false;
  for (std::size_t k = 1; k < size; ++k) {
    if (compare_rotation(d, k, own, labels) == std::strong_ordering::less) return false;
  }
  return true;
}

nlohmann::json to_json(const GaussDiagram& d) {
  nlohmann::json endpoints = nlohmann::json::array();
  for (const auto& e : d.endpoints()) endpoints.push_back({e.chord.label(), std::string(1, role_char(e.role))});
  nlohmann::json signs = nlohmann::json::object();
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) signs[std::to_string(c + 1)] = value(d.sign(ChordId{c}));
  return {{"endpoints", std::move(endpoints)}, {"signs", std::move(signs)}};
}

GaussDiagram gauss_diagram_from_json(const nlohmann::json& value) {
  std::string code;
  const auto& signs = value.at("signs");
  for (const auto& item : value.at("endpoints")) {
    const auto id = item.at(0).get<std::uint64_t>();
    const auto& role = item.at(1).get_ref<const std::string&>();
    if (role != "O" && role != "U") throw std::invalid_argument("diagram JSON: role must be \"O\" or \"U\"");
    const int s = signs.at(std::to_string(id)).get<int>();
    if (s != 1 && s != -1) throw std::invalid_argument("diagram JSON: sign must be +1 or -1");
    code += role + std::to_string(id) + (s > 0 ? "+" : "-");
  }
  return parse_gauss_code(code);
}

}  // namespace gaussindex
