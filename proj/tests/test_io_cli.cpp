#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "malcev/catalog.hpp"
#include "malcev/corpus.hpp"
#include "malcev/json_io.hpp"
#include "malcev/suites.hpp"

using namespace malcev;

TEST_CASE("semigroups round trip") {
  for (auto const& e : corpus(3)) {
    auto j = to_json(e.semigroup);
    CHECK(semigroup_from_json(j).same_table(e.semigroup));
    CHECK(semigroup_from_json(Json::parse(j.dump())).same_table(e.semigroup));
  }
}

TEST_CASE("malformed input is a format error") {
  CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"order":2})")), Error);
  CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"order":2,"table":[[0,1],[1]]})")),
                  Error);
  // not associative
  CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"order":2,"table":[[1,0],[0,0]]})")),
                  Error);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), FormatError);
  std::istringstream bad("{\"id\": 3}\nnot json\n");
  CHECK_THROWS_AS(read_corpus_jsonl(bad), FormatError);
}

TEST_CASE("automata round trip") {
  for (auto const* r : {"(ab)+", "a(a|b)*", "(aa|b)*b", "ba*"}) {
    auto d = parse_regex(r, {"a", "b"});
    CHECK(dfa_from_json(Json::parse(to_json(d).dump())) == d);
  }
  auto j        = to_json(parse_regex("ab"));
  j["initial"]  = 99;
  CHECK_THROWS_AS(dfa_from_json(j), Error);
}

TEST_CASE("pseudovarieties round trip") {
  for (auto const& n : pseudovariety_names()) {
    auto const& V = pseudovariety(n);
    auto        W = pseudovariety_from_json(Json::parse(to_json(V).dump()));
    INFO(n);
    CHECK(W.name == V.name);
    REQUIRE(W.basis.size() == V.basis.size());
    for (std::size_t i = 0; i < V.basis.size(); ++i) {
      CHECK(W.basis[i].lhs == V.basis[i].lhs);
      CHECK(W.basis[i].rhs == V.basis[i].rhs);
    }
    CHECK(W.dual_of == V.dual_of);
    for (auto const& e : corpus(3)) {
      CHECK(member(e.semigroup, W) == member(e.semigroup, V));
    }
  }
}

TEST_CASE("counterexamples round trip and still verify") {
  auto const& K = pseudovariety("K");
  int         n = 0;
  for (auto const& e : corpus(3)) {
    if (auto w = member_witness(e.semigroup, K)) {
      auto c = counterexample_from_json(Json::parse(to_json(*w).dump()));
      CHECK(c.verify());
      CHECK(c.semigroup.same_table(w->semigroup));
      CHECK(c.assignment == w->assignment);
      ++n;
    }
  }
  CHECK(n > 0);
}

TEST_CASE("corpus jsonl round trip") {
  std::stringstream io;
  write_corpus_jsonl(io, corpus(4));
  auto back = read_corpus_jsonl(io);
  REQUIRE(back.size() == corpus(4).size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    auto const& e = corpus(4)[i];
    CHECK(back[i].id == e.id);
    CHECK(back[i].order == e.order);
    CHECK(back[i].monoid == e.monoid);
    CHECK(back[i].regular == e.regular);
    CHECK(back[i].aperiodic == e.aperiodic);
    CHECK(back[i].semigroup.same_table(e.semigroup));
  }
}

TEST_CASE("suite reports are deterministic") {
  for (auto const* s : {"permanence", "idempotency", "dk_words", "duality"}) {
    INFO(s);
    SuiteConfig a{3, 5, 1, 0}, b{3, 5, 4, 0};
    auto        ra = to_json(run_suite(s, a), false);
    CHECK(ra == to_json(run_suite(s, a), false));
    CHECK(ra == to_json(run_suite(s, b), false));
  }
  CHECK_THROWS_AS(run_suite("no_such_suite"), UnknownName);
  auto names = suite_names();
  CHECK(names.size() == 11);
}

TEST_CASE("naive enumeration") {
  CHECK(naive_semigroup_count(1) == 1);
  CHECK(naive_semigroup_count(2) == 5);
  CHECK(naive_semigroup_count(3) == 24);
}

TEST_CASE("lazy wreath multiplication is associative") {
  std::mt19937_64 rng(31);
  auto            D = brandt_b2();
  for (auto const& e : corpus(2)) {
    auto const& T = e.semigroup;
    auto        random_elem = [&] {
      WreathElement x;
      for (int i = 0; i <= D.order(); ++i) {
        x.f.push_back(static_cast<int>(rng() % T.order()));
      }
      x.d = static_cast<int>(rng() % D.order());
      return x;
    };
    for (int i = 0; i < 200; ++i) {
      auto x = random_elem(), y = random_elem(), z = random_elem();
      auto l = wreath_mul(T, D, wreath_mul(T, D, x, y), z);
      auto r = wreath_mul(T, D, x, wreath_mul(T, D, y, z));
      CHECK(l.f == r.f);
      CHECK(l.d == r.d);
    }
  }
}
