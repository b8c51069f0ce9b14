#pragma once

// Brute-force reference for chord indices, index functions and F, written
// directly from the definitions on plain token lists. Shares no code with the
// library beyond reading ExponentialSum values for comparison.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gaussindex/exponential_sum.hpp"

namespace oracle {

struct Token {
  char role;  // 'O' or 'U'
  long id;
  int sign;
};

inline std::vector<Token> tokens(const std::string& code) {
  static const std::regex token_re("([OU])([0-9]+)([+-])");
  std::vector<Token> out;
  for (auto it = std::sregex_iterator(code.begin(), code.end(), token_re); it != std::sregex_iterator(); ++it) {
    out.push_back({(*it)[1].str()[0], std::stol((*it)[2].str()), (*it)[3].str() == "+" ? 1 : -1});
  }
  return out;
}

inline std::string code(const std::vector<Token>& ts) {
  std::string out;
  for (const auto& t : ts) out += t.role + std::to_string(t.id) + (t.sign > 0 ? "+" : "-");
  return out;
}

/// Chord ids in order of first appearance.
inline std::vector<long> ids(const std::vector<Token>& ts) {
  std::vector<long> out;
  std::set<long> seen;
  for (const auto& t : ts)
    if (seen.insert(t.id).second) out.push_back(t.id);
  return out;
}

inline std::size_t where(const std::vector<Token>& ts, long id, char role) {
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (ts[i].id == id && ts[i].role == role) return i;
  std::abort();
}

inline int sign_of(const std::vector<Token>& ts, long id) { return ts[where(ts, id, 'O')].sign; }

/// Positions met walking forward from Over(c) until Under(c), exclusive.
inline std::set<std::size_t> arc(const std::vector<Token>& ts, long c) {
  std::set<std::size_t> out;
  const std::size_t n = ts.size();
  for (std::size_t p = (where(ts, c, 'O') + 1) % n; p != where(ts, c, 'U'); p = (p + 1) % n) out.insert(p);
  return out;
}

/// +1: d crosses c left to right, -1: right to left, 0: unlinked.
inline int direction(const std::vector<Token>& ts, long c, long d) {
  const auto a = arc(ts, c);
  const bool over_in = a.count(where(ts, d, 'O')) > 0;
  const bool under_in = a.count(where(ts, d, 'U')) > 0;
  if (over_in == under_in) return 0;
  return under_in ? 1 : -1;
}

inline long index(const std::vector<Token>& ts, long c) {
  long r_plus = 0, r_minus = 0, l_plus = 0, l_minus = 0;
  for (long d : ids(ts)) {
    if (d == c) continue;
    const int dir = direction(ts, c, d);
    const int w = sign_of(ts, d);
    if (dir == 1) (w > 0 ? r_plus : r_minus)++;
    if (dir == -1) (w > 0 ? l_plus : l_minus)++;
  }
  return r_plus - r_minus - l_plus + l_minus;
}

/// Normal form of an exponent: constant k, or (modulus, exponent -> coeff).
struct Key {
  bool constant = true;
  long k = 0;
  long modulus = 0;
  std::map<long, long> poly;
  auto operator<=>(const Key&) const = default;
};

inline Key normal_form(std::map<long, long> raw, long modulus) {
  std::map<long, long> folded;
  for (auto [e, c] : raw) {
    long r = e;
    if (modulus >= 1) r = ((e % modulus) + modulus) % modulus;
    folded[r] += c;
  }
  std::erase_if(folded, [](const auto& kv) { return kv.second == 0; });
  long at_one = 0;
  for (auto [e, c] : folded) at_one += c;
  if (modulus == 1) return Key{true, at_one, 0, {}};
  if (folded.empty()) return Key{true, 0, 0, {}};
  if (folded.size() == 1 && folded.begin()->first == 0) return Key{true, folded.begin()->second, 0, {}};
  return Key{false, 0, modulus, folded};
}

inline std::map<long, long> raw_index_function(const std::vector<Token>& ts, long c) {
  const long m = std::labs(index(ts, c));
  auto phi = [m](long e) { return m == 0 ? e : ((e % m) + m) % m; };
  std::map<long, long> out;
  for (long d : ids(ts)) {
    if (d == c) continue;
    const int dir = direction(ts, c, d);
    if (dir == 1) out[phi(index(ts, d))] += sign_of(ts, d);
    if (dir == -1) out[phi(-index(ts, d))] -= sign_of(ts, d);
  }
  return out;
}

inline Key index_function(const std::vector<Token>& ts, long c) {
  return normal_form(raw_index_function(ts, c), std::labs(index(ts, c)));
}

using Sum = std::map<Key, long>;

inline void add(Sum& s, const Key& k, long c) {
  s[k] += c;
  if (s[k] == 0) s.erase(k);
}

struct Transcendental {
  Sum w, q, f;
};

inline Transcendental transcendental(const std::vector<Token>& ts) {
  Transcendental out;
  long writhe = 0;
  for (long c : ids(ts)) writhe += sign_of(ts, c);
  add(out.q, Key{}, writhe);
  for (long c : ids(ts)) {
    const Key k = index_function(ts, c);
    if (index(ts, c) != 0) {
      add(out.w, k, sign_of(ts, c));
    } else {
      add(out.q, k, -sign_of(ts, c));
    }
  }
  out.f = out.w;
  for (const auto& [k, c] : out.q) add(out.f, k, -c);
  return out;
}

/// Zero polynomial directly from its definition, as exponent -> coefficient.
inline std::map<long, long> zero_poly(const std::vector<Token>& ts) {
  std::map<long, long> out;
  for (long c : ids(ts)) {
    if (index(ts, c) != 0) continue;
    long g0 = 0;
    for (long d : ids(ts)) {
      if (d == c || index(ts, d) != 0) continue;
      g0 += direction(ts, c, d) * sign_of(ts, d);
    }
    out[g0] += sign_of(ts, c);
    out[0] -= sign_of(ts, c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Key plain(const gaussindex::ExponentKey& key) {
  if (key.is_constant()) return Key{true, key.constant_value().convert_to<long>(), 0, {}};
  Key out{false, 0, key.modulus().convert_to<long>(), {}};
  for (const auto& [e, c] : key.poly().terms()) out.poly[e.convert_to<long>()] = c.convert_to<long>();
  return out;
}

inline Sum plain(const gaussindex::ExponentialSum& sum) {
  Sum out;
  for (const auto& [k, c] : sum.terms()) out[plain(k)] = c.convert_to<long>();
  return out;
}

inline std::map<long, long> plain(const gaussindex::LaurentPolynomial& p) {
  std::map<long, long> out;
  for (const auto& [e, c] : p.terms()) out[e.convert_to<long>()] = c.convert_to<long>();
  return out;
}

/// Random Gauss code with `n` chords and labels 1..n assigned in random order.
inline std::string random_code(std::size_t n, std::mt19937_64& rng) {
  std::vector<Token> ts;
  std::vector<long> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<long>(i + 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  for (std::size_t i = 0; i < n; ++i) {
    const int s = (rng() & 1u) ? 1 : -1;
    ts.push_back({'O', labels[i], s});
    ts.push_back({'U', labels[i], s});
  }
  std::shuffle(ts.begin(), ts.end(), rng);
  return code(ts);
}

/// Least rotation of a code under first-occurrence relabelling, by token
/// tuple (role, label, sign) order; an independent canonicalizer.
inline std::string least_rotation(const std::vector<Token>& ts) {
  if (ts.empty()) return {};
  std::vector<std::tuple<int, long, int>> best;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    std::map<long, long> relabel;
    std::vector<std::tuple<int, long, int>> seq;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const Token& t = ts[(k + i) % ts.size()];
      auto [it, fresh] = relabel.try_emplace(t.id, static_cast<long>(relabel.size() + 1));
      seq.emplace_back(t.role == 'O' ? 0 : 1, it->second, t.sign > 0 ? 0 : 1);
    }
    if (best.empty() || seq < best) best = seq;
  }
  std::string out;
  for (auto [r, id, s] : best) out += std::string(r == 0 ? "O" : "U") + std::to_string(id) + (s == 0 ? "+" : "-");
  return out;
}

}  // namespace oracle
