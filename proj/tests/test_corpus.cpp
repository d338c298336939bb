#include <catch_amalgamated.hpp>

#include "malcev/catalog.hpp"
#include "malcev/corpus.hpp"
#include "oracles.hpp"

using namespace malcev;

TEST_CASE("enumeration counts") {
  CHECK(enumerate_semigroups(1).size() == 1);
  CHECK(enumerate_semigroups(2).size() == 5);
  CHECK(enumerate_semigroups(3).size() == 24);
  CHECK(enumerate_semigroups(4).size() == 188);
}

TEST_CASE("naive enumerator agrees at small orders") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(oracle::naive_semigroup_count(n)
          == static_cast<int>(enumerate_semigroups(n).size()));
  }
}

TEST_CASE("corpus entries are distinct canonical tables") {
  auto const& c = corpus(4);
  CHECK(c.size() == 218);
  std::set<std::vector<int>> keys;
  for (auto const& e : c) {
    CHECK(canonical_key(e.semigroup) == e.semigroup.flat());
    keys.insert(e.semigroup.flat());
  }
  CHECK(keys.size() == c.size());
}

TEST_CASE("sampling order five") {
  auto s = sample_semigroups(5, 20, 7);
  CHECK(s.size() == 20);
  auto t = sample_semigroups(5, 20, 7);
  for (size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].same_table(t[i]));
  }
}
