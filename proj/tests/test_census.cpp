#include <cstdlib>
#include <random>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "gaussindex/census.hpp"
#include "gaussindex/errors.hpp"
#include "gaussindex/gauss.hpp"
#include "gaussindex/invariants.hpp"
#include "oracle.hpp"

using namespace gaussindex;

namespace {

// Every raw code with n chords: token orders with labels fixed by first
// occurrence are enough, since least_rotation relabels anyway.
void all_codes(std::size_t n, std::vector<oracle::Token>& prefix, std::vector<int>& used,
               const std::function<void(const std::vector<oracle::Token>&)>& sink) {
  if (prefix.size() == 2 * n) {
    sink(prefix);
    return;
  }
  for (std::size_t id = 1; id <= n; ++id) {
    for (char role : {'O', 'U'}) {
      const int bit = role == 'O' ? 1 : 2;
      if (used[id] & bit) continue;
      for (int sign : {1, -1}) {
        if (used[id] != 0) {
          // second endpoint must repeat the sign of the first
          int first_sign = 0;
          for (const auto& t : prefix)
            if (t.id == static_cast<long>(id)) first_sign = t.sign;
          if (sign != first_sign) continue;
        }
        used[id] |= bit;
        prefix.push_back({role, static_cast<long>(id), sign});
        all_codes(n, prefix, used, sink);
        prefix.pop_back();
        used[id] &= ~bit;
      }
    }
  }
}

std::set<std::string> oracle_classes(std::size_t n) {
  std::set<std::string> out;
  std::vector<oracle::Token> prefix;
  std::vector<int> used(n + 1, 0);
  all_codes(n, prefix, used, [&](const auto& ts) { out.insert(oracle::least_rotation(ts)); });
  return out;
}

std::vector<CensusRecord> census(std::size_t n, unsigned threads = 1, std::optional<Predicate> where = {}) {
  std::vector<CensusRecord> out;
  CensusOptions options;
  options.chords = n;
  options.threads = threads;
  options.where = std::move(where);
  run_census(options, [&](const CensusRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_diagrams(0).size(), 1u);
  EXPECT_EQ(enumerate_diagrams(1).size(), 2u);
  EXPECT_EQ(raw_diagram_count(2), 48u);
  EXPECT_EQ(raw_diagram_count(0), 1u);
  EXPECT_EQ(raw_diagram_count(3), 15u * 64u);
}

TEST(Enumerate, MatchesOracleDedup) {
  for (std::size_t n = 0; n <= 3; ++n) {
    std::set<std::string> ours;
    for (const auto& d : enumerate_diagrams(n)) {
      const auto code = serialize(d);
      EXPECT_EQ(code, canonical_code(d));
      EXPECT_TRUE(ours.insert(code).second) << "duplicate " << code;
    }
    EXPECT_EQ(ours, oracle_classes(n)) << "n = " << n;
  }
}

TEST(Enumerate, RandomDiagramsAreCovered) {
  std::set<std::string> four;
  for (const auto& d : enumerate_diagrams(4)) four.insert(serialize(d));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto d = parse_gauss_code(oracle::random_code(4, rng));
    EXPECT_TRUE(four.count(canonical_code(d))) << serialize(d);
  }
}

TEST(Census, TwoChords) {
  const auto records = census(2);
  std::multiset<std::string> nonzero;
  for (const auto& r : records) {
    const auto d = parse_gauss_code(r.canonical_code);
    const bool interleaved = relate(d, ChordId{0}, ChordId{1}) != Relation::Unlinked;
    const bool equal_signs = d.sign(ChordId{0}) == d.sign(ChordId{1});
    if (!r.f.is_zero()) nonzero.insert(render(r.f));
    if (!interleaved || !equal_signs) EXPECT_TRUE(r.f.is_zero()) << r.canonical_code;
    EXPECT_LE(r.bound, 2);
    EXPECT_EQ(evaluate_s_one(r.f), r.p);
  }
  EXPECT_EQ(nonzero, (std::multiset<std::string>{"t + t^-1 - 2", "-t - t^-1 + 2"}));
}

TEST(Census, ThreadCountDoesNotChangeOutput) {
  const auto one = census(4, 1);
  const auto four = census(4, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].canonical_code, four[i].canonical_code);
    EXPECT_EQ(to_json(one[i]), to_json(four[i]));
  }
}

TEST(Census, SummaryAndFilter) {
  CensusOptions options;
  options.chords = 2;
  const auto all = run_census(options, [](const CensusRecord&) {});
  EXPECT_EQ(all.matched, all.classes);
  EXPECT_EQ(all.nonzero_f, 2u);
  options.where = Predicate::parse("F=0");
  const auto zero = run_census(options, [](const CensusRecord&) {});
  EXPECT_EQ(zero.matched, all.classes - 2);
  EXPECT_EQ(zero.nonzero_f, 0u);
  const auto j = to_json(all);
  for (const char* key : {"chords", "raw_diagrams", "classes", "matched", "nonzero_F", "where", "by_F"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Census, Cap) {
  CensusOptions options;
  options.chords = 7;
  options.cap = 6;
  EXPECT_THROW(run_census(options, [](const CensusRecord&) {}), CapExceededError);
  options.chords = 99;
  EXPECT_THROW(run_census(options, [](const CensusRecord&) {}), CapExceededError);
}

TEST(Census, DefaultCapReadsEnvironment) {
  ::unsetenv("GAUSSINDEX_CENSUS_CAP");
  EXPECT_EQ(default_census_cap(), 6u);
  ::setenv("GAUSSINDEX_CENSUS_CAP", "8", 1);
  EXPECT_EQ(default_census_cap(), 8u);
  ::unsetenv("GAUSSINDEX_CENSUS_CAP");
}

TEST(FindExamples, Examples) {
  const auto two = find_examples(2, Predicate::parse("F!=0"));
  ASSERT_EQ(two.size(), 2u);
  for (const auto& code : two) {
    const auto d = parse_gauss_code(code);
    EXPECT_NE(relate(d, ChordId{0}, ChordId{1}), Relation::Unlinked);
    EXPECT_EQ(d.sign(ChordId{0}), d.sign(ChordId{1}));
  }
  EXPECT_TRUE(find_examples(1, Predicate::parse("F!=0")).empty());
  EXPECT_EQ(find_examples(1, Predicate::parse("F=0")).size(), 2u);
  const auto three = find_examples(3, Predicate::parse("W_t=0 && F!=0"));
  EXPECT_EQ(three, find_examples(3, Predicate::parse("W_t = 0 , F != 0")));
  for (const auto& code : three) EXPECT_TRUE(writhe_poly(parse_gauss_code(code)).is_zero());
}

TEST(Predicate, ParsesAndEvaluates) {
  const auto p = Predicate::parse("bound>=2 && writhe=2 && P!=0");
  EXPECT_EQ(p.clauses().size(), 3u);
  const auto vt = make_census_record(parse_gauss_code("O1+O2+U1+U2+"));
  EXPECT_TRUE(p(vt));
  EXPECT_FALSE(Predicate::parse("writhe!=2")(vt));
  EXPECT_TRUE(Predicate::parse("Z==0")(vt));
}

TEST(Predicate, RejectsMalformed) {
  for (const char* bad : {"", "F", "F=1", "G=0", "bound>=x", "F>=0", "writhe=", "&&", "F=0 &&", "W_t<0"})
    EXPECT_THROW(Predicate::parse(bad), std::invalid_argument) << bad;
}

TEST(Records, CsvAndJson) {
  const auto r = make_census_record(parse_gauss_code("O1+O2+U1+U2+"));
  EXPECT_EQ(csv_header(), "canonical_code,writhe,bound,W_t,P,Z,F");
  EXPECT_EQ(to_csv_row(r), R"("O1+O2+U1+U2+",2,2,"t + t^-1","t + t^-1 - 2","0","t + t^-1 - 2")");
  const auto j = to_json(r);
  EXPECT_EQ(j["canonical_code"], "O1+O2+U1+U2+");
  EXPECT_EQ(j["F"], "t + t^-1 - 2");
}
