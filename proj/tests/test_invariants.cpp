#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "gaussindex/errors.hpp"
#include "gaussindex/gauss.hpp"
#include "gaussindex/invariants.hpp"
#include "gaussindex/report.hpp"
#include "oracle.hpp"

using namespace gaussindex;

namespace {

const char* const kTrefoil = "O1+U2+O3+U1+O2+U3+";
const char* const kVirtualTrefoil = "O1+O2+U1+U2+";
const char* const kK2 = "O1+O2+U3+U1+O3+O4+U2+U4+";
const char* const kVirtualizedTrefoil = "O1-U2+O3+U1-O2+U3+";
const char* const kKD3 = "O1+O2+O3+U2+U1+U3+";

ChordId c(std::uint32_t label) { return chord_label(label); }

GaussDiagram parse(const char* code) { return parse_gauss_code(code); }

std::string f_of(const GaussDiagram& d) { return render(f_invariant(d)); }

LaurentPolynomial poly(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPolynomial p;
  for (auto [e, coeff] : terms) p.add_term(e, coeff);
  return p;
}

GaussDiagram random_diagram(std::mt19937_64& rng, std::size_t max_chords) {
  return parse_gauss_code(oracle::random_code(rng() % (max_chords + 1), rng));
}

}  // namespace

TEST(Index, Examples) {
  EXPECT_EQ(chord_indices(parse(kTrefoil)), (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_EQ(chord_indices(parse(kVirtualTrefoil)), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(chord_indices(parse(kVirtualizedTrefoil)), (std::vector<std::int64_t>{0, 2, -2}));
  EXPECT_EQ(chord_indices(parse(kKD3)), (std::vector<std::int64_t>{-1, -1, 2}));
  EXPECT_EQ(chord_indices(parse(kK2)), (std::vector<std::int64_t>{0, 0, -1, 1}));
  EXPECT_THROW(chord_index(parse(kTrefoil), c(4)), UnknownChordError);
  EXPECT_THROW(index_function(parse(kTrefoil), c(9)), UnknownChordError);
}

TEST(IndexFunction, Examples) {
  const auto vt = parse(kVirtualTrefoil);
  EXPECT_EQ(index_function(vt, c(1)).key, ExponentKey::constant(-1));
  EXPECT_EQ(index_function(vt, c(2)).key, ExponentKey::constant(1));
  EXPECT_EQ(index_function(parse(kKD3), c(3)).key, ExponentKey::modular(2, poly({{1, 2}})));
  const auto c1 = index_function(parse(kVirtualizedTrefoil), c(1));
  EXPECT_TRUE(c1.raw.is_zero());
  EXPECT_EQ(c1.key, ExponentKey::constant(0));
}

TEST(Writhe, Examples) {
  const auto vt = parse(kVirtualTrefoil);
  EXPECT_EQ(writhe_poly(vt), poly({{1, 1}, {-1, 1}}));
  EXPECT_EQ(q_scalar(vt), 2);
  EXPECT_EQ(writhe_poly(parse(kVirtualizedTrefoil)), poly({{2, 1}, {-2, 1}}));
  const auto tref = parse(kTrefoil);
  EXPECT_TRUE(writhe_poly(tref).is_zero());
  EXPECT_EQ(q_scalar(tref), 0);
  EXPECT_EQ(writhe(tref), 3);
}

TEST(ParityWrithe, Examples) {
  const auto vt = parse(kVirtualTrefoil);
  EXPECT_EQ(odd_writhe(vt), 2);
  EXPECT_EQ(odd_writhe_poly(vt), poly({{1, 1}, {-1, 1}}));
  const auto kd3 = parse(kKD3);
  EXPECT_EQ(nth_parity_writhe(kd3, 2), 1);
  EXPECT_EQ(nth_parity_writhe(kd3, -1), 2);
  EXPECT_EQ(nth_parity_writhe(kd3, 5), 0);
  EXPECT_THROW(nth_parity_writhe(kd3, 0), std::invalid_argument);
  const auto p = parity_writhe_poly(parse(kTrefoil));
  EXPECT_EQ(p.x_part, poly({{1, -3}}));
  EXPECT_EQ(p.y_part, poly({{1, 3}}));
}

TEST(ParityWrithe, CollapseIsShiftedAffineIndexPolynomial) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_diagram(rng, 8);
    const auto p = affine_index_poly(d);
    LaurentPolynomial shifted;
    for (const auto& [e, coeff] : p.terms()) shifted.add_term(e + 1, coeff);
    EXPECT_EQ(collapse(parity_writhe_poly(d)), shifted) << serialize(d);
  }
  EXPECT_TRUE(collapse(parity_writhe_poly(parse(kTrefoil))).is_zero());
}

TEST(ParityWrithe, TwoPartFormMovesUnderR1) {
  const auto vt = parse(kVirtualTrefoil);
  const auto grown = parse("O1+O2+U1+U2+O3+U3+");
  EXPECT_NE(parity_writhe_poly(grown), parity_writhe_poly(vt));
  EXPECT_EQ(collapse(parity_writhe_poly(grown)), collapse(parity_writhe_poly(vt)));
}

TEST(AffineAndZero, Examples) {
  const auto vt = parse(kVirtualTrefoil);
  EXPECT_EQ(affine_index_poly(vt), poly({{1, 1}, {-1, 1}, {0, -2}}));
  EXPECT_TRUE(zero_poly(vt).is_zero());
  EXPECT_EQ(zero_poly(parse(kK2)), poly({{1, 1}, {-1, 1}, {0, -2}}));
  EXPECT_TRUE(affine_index_poly(parse(kTrefoil)).is_zero());
  EXPECT_TRUE(zero_poly(parse(kTrefoil)).is_zero());
}

TEST(Transcendental, Examples) {
  const auto vt = transcendental(parse(kVirtualTrefoil));
  EXPECT_EQ(render(vt.w), "t + t^-1");
  EXPECT_EQ(render(vt.q), "2");
  EXPECT_EQ(render(vt.f), "t + t^-1 - 2");

  const auto k2 = transcendental(parse(kK2));
  EXPECT_EQ(render(k2.w), "t + t^-1");
  ExponentialSum q;
  q.add_term(ExponentKey::constant(0), 4);
  q.add_term(ExponentKey::modular(0, poly({{0, 1}, {-1, -1}})), -1);
  q.add_term(ExponentKey::modular(0, poly({{0, -1}, {-1, 1}})), -1);
  EXPECT_EQ(k2.q, q);
  EXPECT_EQ(render(k2.f), "t + t^-1 + t^{-1+s^-1} + t^{1-s^-1} - 4");

  EXPECT_EQ(f_of(parse(kVirtualizedTrefoil)), "t^2 + t^-2 - 2");
  EXPECT_EQ(f_of(parse(kKD3)), "2t^-1 + t^{2s} - 3");
  EXPECT_EQ(f_of(parse(kTrefoil)), "0");
  EXPECT_EQ(f_of(GaussDiagram{}), "0");
}

TEST(CrossingBound, Examples) {
  EXPECT_EQ(crossing_bound(f_invariant(parse(kVirtualTrefoil))), 2);
  EXPECT_EQ(crossing_bound(f_invariant(parse(kKD3))), 3);
  EXPECT_EQ(crossing_bound(ExponentialSum{}), 0);
}

TEST(Altsum, Examples) {
  const auto vt = parse(kVirtualTrefoil);
  const std::vector<ChordId> one{c(1)};
  EXPECT_FALSE(finite_type_altsum(vt, one).is_zero());
  const std::vector<ChordId> two{c(1), c(2)};
  EXPECT_TRUE(finite_type_altsum(vt, two).is_zero());
  const auto isolated = parse("O1+O2+U1+U2+O3-U3-");
  const std::vector<ChordId> iso{c(3)};
  EXPECT_TRUE(finite_type_altsum(isolated, iso).is_zero());
}

TEST(Altsum, Errors) {
  const auto vt = parse(kVirtualTrefoil);
  EXPECT_THROW(finite_type_altsum(vt, {}), std::invalid_argument);
  const std::vector<ChordId> repeated{c(1), c(1)};
  EXPECT_THROW(finite_type_altsum(vt, repeated), std::invalid_argument);
  const std::vector<ChordId> unknown{c(3)};
  EXPECT_THROW(finite_type_altsum(vt, unknown), UnknownChordError);
}

TEST(Oracle, IndicesFunctionsAndSumsAgree) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 400; ++i) {
    const auto code = oracle::random_code(rng() % 9, rng);
    const auto d = parse_gauss_code(code);
    const auto ts = oracle::tokens(serialize(d));
    const auto report = index_report(d);
    for (std::uint32_t k = 1; k <= d.chord_count(); ++k) {
      const auto& row = report.chords[k - 1];
      EXPECT_EQ(row.index, oracle::index(ts, k)) << code;
      EXPECT_EQ(row.index, chord_index(d, c(k)));
      EXPECT_EQ(oracle::plain(row.function.key), oracle::index_function(ts, k)) << code << " c" << k;
      EXPECT_EQ(oracle::plain(row.function.raw), [&] {
        auto raw = oracle::raw_index_function(ts, k);
        std::erase_if(raw, [](const auto& kv) { return kv.second == 0; });
        return raw;
      }()) << code;
    }
    const auto t = transcendental(d);
    const auto expected = oracle::transcendental(ts);
    EXPECT_EQ(oracle::plain(t.w), expected.w) << code;
    EXPECT_EQ(oracle::plain(t.q), expected.q) << code;
    EXPECT_EQ(oracle::plain(t.f), expected.f) << code;
    EXPECT_EQ(oracle::plain(zero_poly(d)), oracle::zero_poly(ts)) << code;
  }
}

TEST(Properties, Identities) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 400; ++i) {
    const auto d = random_diagram(rng, 8);
    const auto t = transcendental(d);
    const auto code = serialize(d);
    EXPECT_EQ(evaluate_s_one(t.f), affine_index_poly(d)) << code;
    EXPECT_EQ(evaluate_s_one(t.w), writhe_poly(d)) << code;
    EXPECT_EQ(evaluate_t_one(t.w), q_scalar(d)) << code;
    EXPECT_EQ(evaluate_s_one(t.q), LaurentPolynomial::constant(q_scalar(d))) << code;
    EXPECT_EQ(zero_poly(d), LaurentPolynomial::constant(q_scalar(d)) - specialize_s_zero(t.q)) << code;
    EXPECT_LE(crossing_bound(t.f), Integer(d.chord_count())) << code;
    for (const auto& row : index_report(d).chords) EXPECT_EQ(row.function.raw.at_one(), row.index) << code;
  }
}

TEST(Properties, IsolatedChordHasZeroIndexAndFunction) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto base = random_diagram(rng, 6);
    const auto with = connected_sum(base, rng() % base.gap_count(), parse("O1-U1-"), 0);
    const ChordId last{static_cast<std::uint32_t>(base.chord_count())};
    EXPECT_EQ(chord_index(with, last), 0);
    EXPECT_TRUE(index_function(with, last).raw.is_zero());
  }
}

TEST(Properties, SwitchingAnotherChordKeepsIndex) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_diagram(rng, 7);
    const auto before = chord_indices(d);
    for (std::uint32_t e = 0; e < d.chord_count(); ++e) {
      const auto after = chord_indices(switch_crossing(d, ChordId{e}));
      for (std::uint32_t k = 0; k < d.chord_count(); ++k)
        if (k != e) EXPECT_EQ(after[k], before[k]) << serialize(d);
    }
  }
}

TEST(Properties, MirrorAndReverse) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_diagram(rng, 8);
    const auto f = f_invariant(d);
    EXPECT_EQ(f_invariant(mirror(d)), -substitute_s_inverse(substitute_t_inverse(f))) << serialize(d);
    EXPECT_EQ(f_invariant(reverse(d)), substitute_t_inverse(f)) << serialize(d);
  }
}

TEST(Properties, Additivity) {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_diagram(rng, 6);
    const auto b = random_diagram(rng, 6);
    const auto sum = connected_sum(a, rng() % a.gap_count(), b, rng() % b.gap_count());
    EXPECT_EQ(f_invariant(sum), f_invariant(a) + f_invariant(b)) << serialize(a) << " # " << serialize(b);
  }
}

TEST(Properties, AltsumVanishesForTwoMarks) {
  std::mt19937_64 rng(27);
  int done = 0;
  while (done < 200) {
    const auto d = random_diagram(rng, 7);
    if (d.chord_count() < 2) continue;
    const std::uint32_t a = rng() % d.chord_count();
    std::uint32_t b = rng() % (d.chord_count() - 1);
    if (b >= a) ++b;
    const std::vector<ChordId> marks{ChordId{a}, ChordId{b}};
    EXPECT_TRUE(finite_type_altsum(d, marks).is_zero()) << serialize(d);
    ++done;
  }
}

TEST(Properties, RotationInvariance) {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_diagram(rng, 7);
    const auto set = invariant_set(d);
    for (std::size_t k = 0; k < d.endpoint_count(); ++k) EXPECT_EQ(invariant_set(rotate(d, k)), set);
  }
}

TEST(Properties, ClassicalCodesAreTrivial) {
  const auto tref = parse(kTrefoil);
  for (const auto& d : {tref, mirror(tref), connected_sum(tref, 0, tref, 0), connected_sum(tref, 3, mirror(tref), 5)}) {
    for (auto ind : chord_indices(d)) EXPECT_EQ(ind, 0);
    EXPECT_TRUE(f_invariant(d).is_zero());
  }
  // figure-eight
  EXPECT_TRUE(f_invariant(parse("O1-U2-O3+U4+O2-U1-O4+U3+")).is_zero());
}

TEST(Report, FieldsAndJsonRoundTrip) {
  const auto report = make_report(parse(kVirtualTrefoil));
  EXPECT_EQ(report.code, kVirtualTrefoil);
  EXPECT_EQ(report.f, "t + t^-1 - 2");
  EXPECT_EQ(report.indices.at(1), -1);
  EXPECT_EQ(report.index_functions.at(2), "1");
  EXPECT_EQ(report.bound, 2);
  const auto j = to_json(report);
  for (const char* key : {"code", "canonical_code", "writhe", "indices", "index_functions", "W_t", "P", "Z",
                          "odd_writhe", "W_ts", "Q_ts", "F", "bound"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(invariant_report_from_json(nlohmann::json::parse(j.dump())), report);
  EXPECT_NE(render_text(report).find("F = t + t^-1 - 2"), std::string::npos);
}

TEST(Report, DifferingInvariants) {
  const auto vt = invariant_set(parse(kVirtualTrefoil));
  const auto mvt = invariant_set(mirror(parse(kVirtualTrefoil)));
  const auto names = differing_invariants(vt, mvt);
  ASSERT_FALSE(names.empty());
  EXPECT_EQ(names.front(), "F");
  EXPECT_TRUE(differing_invariants(vt, vt).empty());
}
