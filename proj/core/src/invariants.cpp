#include "gaussindex/invariants.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace gaussindex {

namespace {

/// Relation of every ordered chord pair, row-major by (c, d).
class RelationTable {
 public:
  explicit RelationTable(const GaussDiagram& d) : n_(d.chord_count()), table_(n_ * n_, Relation::Unlinked) {
    const std::size_t size = d.endpoint_count();
    std::vector<char> inside(size);
    for (std::uint32_t c = 0; c < n_; ++c) {
      const ChordId chord{c};
      std::fill(inside.begin(), inside.end(), 0);
      const std::size_t under = d.position(chord, Role::Under);
      for (std::size_t p = (d.position(chord, Role::Over) + 1) % size; p != under; p = (p + 1) % size) inside[p] = 1;
      for (std::uint32_t o = 0; o < n_; ++o) {
        if (o == c) continue;
        const bool over_in = inside[d.position(ChordId{o}, Role::Over)] != 0;
        const bool under_in = inside[d.position(ChordId{o}, Role::Under)] != 0;
        if (over_in != under_in) table_[c * n_ + o] = under_in ? Relation::LeftToRight : Relation::RightToLeft;
      }
    }
  }

  [[nodiscard]] Relation operator()(std::size_t c, std::size_t d) const { return table_[c * n_ + d]; }

 private:
  std::size_t n_;
  std::vector<Relation> table_;
};

std::vector<std::int64_t> indices_from(const GaussDiagram& d, const RelationTable& rel) {
  const std::size_t n = d.chord_count();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t o = 0; o < n; ++o) {
      const int w = value(d.sign(ChordId{static_cast<std::uint32_t>(o)}));
      switch (rel(c, o)) {
        case Relation::LeftToRight: out[c] += w; break;
        case Relation::RightToLeft: out[c] -= w; break;
        case Relation::Unlinked: break;
      }
    }
  }
  return out;
}

IndexFunction index_function_from(const GaussDiagram& d, const RelationTable& rel,
                                  const std::vector<std::int64_t>& indices, std::size_t c) {
  const Integer modulus = std::llabs(indices[c]);
  auto phi = [&](std::int64_t e) { return modulus == 0 ? Integer{e} : floor_mod(Integer{e}, modulus); };
  LaurentPolynomial raw;
  for (std::size_t o = 0; o < d.chord_count(); ++o) {
    const int w = value(d.sign(ChordId{static_cast<std::uint32_t>(o)}));
    switch (rel(c, o)) {
      case Relation::LeftToRight: raw.add_term(phi(indices[o]), w); break;
      case Relation::RightToLeft: raw.add_term(phi(-indices[o]), -w); break;
      case Relation::Unlinked: break;
    }
  }
  ExponentKey key = reduce_exponent(raw, modulus);
  return {std::move(raw), std::move(key)};
}

std::int64_t sign_sum(const GaussDiagram& d) {
  std::int64_t total = 0;
  for (Sign s : d.signs()) total += value(s);
  return total;
}

}  // namespace

IndexReport index_report(const GaussDiagram& d) {
  const RelationTable rel(d);
  const auto indices = indices_from(d, rel);
  IndexReport report;
  report.writhe = sign_sum(d);
  report.chords.reserve(d.chord_count());
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    report.chords.push_back({ChordId{c}, d.sign(ChordId{c}), indices[c], index_function_from(d, rel, indices, c)});
  }
  return report;
}

std::int64_t chord_index(const GaussDiagram& d, ChordId c) {
  d.require(c);
  std::int64_t total = 0;
  for (std::uint32_t o = 0; o < d.chord_count(); ++o) {
    if (o == c.index) continue;
    switch (relate(d, c, ChordId{o})) {
      case Relation::LeftToRight: total += value(d.sign(ChordId{o})); break;
      case Relation::RightToLeft: total -= value(d.sign(ChordId{o})); break;
      case Relation::Unlinked: break;
    }
  }
  return total;
}

std::vector<std::int64_t> chord_indices(const GaussDiagram& d) {
  const RelationTable rel(d);
  return indices_from(d, rel);
}

IndexFunction index_function(const GaussDiagram& d, ChordId c) {
  d.require(c);
  const RelationTable rel(d);
  return index_function_from(d, rel, indices_from(d, rel), c.index);
}

std::int64_t writhe(const GaussDiagram& d) { return sign_sum(d); }

LaurentPolynomial writhe_poly(const GaussDiagram& d) {
  const auto indices = chord_indices(d);
  LaurentPolynomial out;
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    if (indices[c] != 0) out.add_term(indices[c], value(d.sign(ChordId{c})));
  }
  return out;
}

std::int64_t q_scalar(const GaussDiagram& d) {
  const auto indices = chord_indices(d);
  std::int64_t total = 0;
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    if (indices[c] != 0) total += value(d.sign(ChordId{c}));
  }
  return total;
}

std::int64_t odd_writhe(const GaussDiagram& d) {
  const auto indices = chord_indices(d);
  std::int64_t total = 0;
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    if (indices[c] % 2 != 0) total += value(d.sign(ChordId{c}));
  }
  return total;
}

LaurentPolynomial odd_writhe_poly(const GaussDiagram& d) {
  const auto indices = chord_indices(d);
  LaurentPolynomial out;
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    if (indices[c] % 2 != 0) out.add_term(indices[c], value(d.sign(ChordId{c})));
  }
  return out;
}

std::int64_t nth_parity_writhe(const GaussDiagram& d, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("nth_parity_writhe: n = 0 is excluded from the writhe polynomial");
  return writhe_poly(d).coefficient(n).convert_to<std::int64_t>();
}

ParityWrithePolynomial parity_writhe_poly(const GaussDiagram& d) {
  const auto indices = chord_indices(d);
  ParityWrithePolynomial out;
  for (std::uint32_t c = 0; c < d.chord_count(); ++c) {
    const int w = value(d.sign(ChordId{c}));
    if (indices[c] % 2 != 0) {
      out.x_part.add_term(indices[c] + 1, w);
    } else {
      out.y_part.add_term(indices[c] + 1, w);
    }
  }
  out.x_part.add_term(1, -sign_sum(d));
  return out;
}

LaurentPolynomial collapse(const ParityWrithePolynomial& p) { return p.x_part + p.y_part; }

LaurentPolynomial affine_index_poly(const GaussDiagram& d) {
  return writhe_poly(d) - LaurentPolynomial::constant(q_scalar(d));
}

LaurentPolynomial zero_poly(const GaussDiagram& d) {
  const RelationTable rel(d);
  const auto indices = indices_from(d, rel);
  const std::size_t n = d.chord_count();
  LaurentPolynomial out;
  for (std::size_t c = 0; c < n; ++c) {
    if (indices[c] != 0) continue;
    std::int64_t g0 = 0;
    for (std::size_t o = 0; o < n; ++o) {
      if (indices[o] != 0) continue;
      const int w = value(d.sign(ChordId{static_cast<std::uint32_t>(o)}));
      if (rel(c, o) == Relation::LeftToRight) g0 += w;
      if (rel(c, o) == Relation::RightToLeft) g0 -= w;
    }
    const int w = value(d.sign(ChordId{static_cast<std::uint32_t>(c)}));
    out.add_term(g0, w);
    out.add_term(0, -w);
  }
  return out;
}

TranscendentalInvariant transcendental(const GaussDiagram& d) {
  const IndexReport report = index_report(d);
  TranscendentalInvariant out;
  out.q.add_term(ExponentKey::constant(0), report.writhe);
  for (const auto& chord : report.chords) {
    if (chord.index != 0) {
      out.w.add_term(chord.function.key, value(chord.sign));
    } else {
      out.q.add_term(chord.function.key, -value(chord.sign));
    }
  }
  out.f = out.w - out.q;
  return out;
}

ExponentialSum f_invariant(const GaussDiagram& d) { return transcendental(d).f; }

Integer crossing_bound(const ExponentialSum& f) {
  Integer total = 0;
  for (const auto& [key, c] : f.terms()) {
    if (key.is_constant() && key.constant_value() == 0) continue;
    total += abs(c);
  }
  return total;
}

ExponentialSum finite_type_altsum(const GaussDiagram& d, std::span<const ChordId> marked) {
  if (marked.empty()) throw std::invalid_argument("finite_type_altsum: no marked chords");
  std::set<ChordId> distinct;
  for (ChordId c : marked) {
    d.require(c);
    if (!distinct.insert(c).second) throw std::invalid_argument("finite_type_altsum: repeated marked chord");
  }
  if (marked.size() >= 31) throw std::invalid_argument("finite_type_altsum: too many marked chords");

  const std::vector<Endpoint> base(d.endpoints().begin(), d.endpoints().end());
  ExponentialSum total;
  const std::uint32_t combinations = 1u << marked.size();
  for (std::uint32_t sigma = 0; sigma < combinations; ++sigma) {
    std::vector<Endpoint> endpoints = base;
    std::vector<Sign> signs(d.signs().begin(), d.signs().end());
    int ones = 0;
    for (std::size_t i = 0; i < marked.size(); ++i) {
      const bool switched = ((sigma >> i) & 1u) != 0;
      ones += switched ? 1 : 0;
      signs[marked[i].index] = switched ? Sign::Negative : Sign::Positive;
      if (switched) {
        for (auto& e : endpoints) {
          if (e.chord == marked[i]) e.role = other(e.role);
        }
      }
    }
    const ExponentialSum f = f_invariant(GaussDiagram(std::move(endpoints), std::move(signs)));
    if (ones % 2 == 0) {
      total += f;
    } else {
      total -= f;
    }
  }
  return total;
}

}  // namespace gaussindex
