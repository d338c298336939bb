#include <catch_amalgamated.hpp>

#include <random>

#include "malcev/corpus.hpp"
#include "malcev/evaluate.hpp"
#include "malcev/factorization.hpp"
#include "malcev/pseudovariety.hpp"
#include "malcev/window.hpp"
#include "term_gen.hpp"

using namespace malcev;

namespace {

  Word cat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  Term join(std::optional<Term> const& x, Symbol const& a,
            std::optional<Term> const& y) {
    std::vector<Term> f;
    if (x) {
      f.push_back(*x);
    }
    f.push_back(Term::letter(a));
    if (y) {
      f.push_back(*y);
    }
    return Term::concat(f);
  }

  // equal values on every semigroup of order <= 3
  bool same_values(Term const& s, Term const& t) {
    std::set<Symbol> c = content(s);
    auto             d = content(t);
    c.insert(d.begin(), d.end());
    PseudoIdentity pi(s, t, std::vector<Symbol>(c.begin(), c.end()));
    for (auto const& e : corpus(3)) {
      if (!satisfies(e.semigroup, pi)) {
        return false;
      }
    }
    return true;
  }

  void all_words(Word const& A, std::size_t n, auto f) {
    Word w;
    std::function<void()> rec = [&] {
      if (!w.empty()) {
        f(w);
      }
      if (w.size() == n) {
        return;
      }
      for (auto const& a : A) {
        w.push_back(a);
        rec();
        w.pop_back();
      }
    };
    rec();
  }

}  // namespace

TEST_CASE("lbf examples") {
  auto l = lbf(parse_word("bacbab"));
  CHECK(to_string(l.x) == "ba");
  CHECK(l.a == "c");
  CHECK(to_string(l.y) == "bab");
  l = lbf(parse_word("a"));
  CHECK(l.x.empty());
  CHECK(l.a == "a");
  CHECK(l.y.empty());
  l = lbf(parse_word("abab"));
  CHECK(to_string(l.x) == "a");
  CHECK(l.a == "b");
  CHECK(to_string(l.y) == "ab");
}

TEST_CASE("lbf is the unique valid split") {
  all_words({"a", "b", "c"}, 7, [](Word const& u) {
    int  valid = 0;
    auto c     = content(u);
    auto l     = lbf(u);
    for (std::size_t i = 0; i < u.size(); ++i) {
      Word x(u.begin(), u.begin() + i);
      auto cx = content(x);
      if (cx.count(u[i])) {
        continue;
      }
      cx.insert(u[i]);
      if (cx == c) {
        ++valid;
        CHECK(l.x == x);
      }
    }
    CHECK(valid == 1);
    CHECK(cat(cat(l.x, {l.a}), l.y) == u);
  });
}

TEST_CASE("ilbf on words") {
  auto f = ilbf(parse_word("abab"));
  REQUIRE(f.length() == 2);
  CHECK(to_string(f.factors[0].first) == "a");
  CHECK(f.factors[1].second == "b");
  CHECK(f.remainder.empty());
  CHECK(ilbf(parse_word("aaa")).length() == 3);
  f = ilbf(parse_word("abcab"));
  REQUIRE(f.length() == 1);
  CHECK(to_string(f.factors[0].first) == "ab");
  CHECK(f.factors[0].second == "c");
  CHECK(to_string(f.remainder) == "ab");

  std::mt19937_64 rng(4);
  for (int i = 0; i < 3000; ++i) {
    auto u = testgen::random_word(rng, {"a", "b", "c"}, 1, 14);
    auto g = ilbf(u);
    Word w;
    for (auto const& [x, a] : g.factors) {
      w = cat(cat(w, x), {a});
    }
    CHECK(cat(w, g.remainder) == u);
    CHECK(content(g.remainder).size() < content(u).size());
    CHECK(g.outcome == IlbfOutcome::Finite);
  }
}

TEST_CASE("lbf_term") {
  auto l = lbf_term(parse_term("(ab)^w"));
  CHECK(to_string(*l.x) == "a");
  CHECK(l.a == "b");
  CHECK(to_string(*l.y) == "(ab)^(w-1)");
  l = lbf_term(parse_term("a^w b"));
  CHECK(to_string(*l.x) == "a^w");
  CHECK(l.a == "b");
  CHECK_FALSE(l.y);
  l = lbf_term(parse_term("abc"));
  CHECK(to_string(*l.x) == "ab");
  CHECK_FALSE(l.y);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 400; ++i) {
    auto t = testgen::random_term(rng, {"a", "b", "c"}, 2, false);
    auto r = lbf_term(t);
    INFO(to_string(t));
    std::set<Symbol> cx = r.x ? content(*r.x) : std::set<Symbol>{};
    CHECK_FALSE(cx.count(r.a));
    cx.insert(r.a);
    CHECK(cx == content(t));
    CHECK(same_values(join(r.x, r.a, r.y), t));
    if (t.is_finite()) {
      auto w = lbf(expand(t));
      CHECK(r.a == w.a);
      CHECK((r.x ? expand(*r.x) : Word{}) == w.x);
    }
  }
}

TEST_CASE("ilbf_term against the unfolding oracle") {
  CHECK(ilbf_term(parse_term("(ab)^w")).outcome == IlbfOutcome::Infinite);
  CHECK(ilbf_term(parse_term("(abc)^w a")).outcome == IlbfOutcome::Infinite);
  CHECK(ilbf_term(parse_term("((ab)^w c)^w")).outcome == IlbfOutcome::Infinite);
  auto f = ilbf_term(parse_term("abab"));
  CHECK(f.outcome == IlbfOutcome::Finite);
  CHECK(f.length() == 2);
  CHECK(ilbf_term(parse_term("a^w b a^w")).length() == 1);

  std::mt19937_64 rng(8);
  int             decided = 0;
  for (int i = 0; i < 300; ++i) {
    auto t = testgen::random_term(rng, {"a", "b"}, 2, false);
    auto g = ilbf_term(t);
    std::vector<std::size_t> lens;
    for (std::int64_t M : {4, 6, 8}) {
      lens.push_back(ilbf(expand(unfold(t, M))).length());
    }
    INFO(to_string(t));
    if (lens[0] == lens[1] && lens[1] == lens[2]) {
      ++decided;
      CHECK(g.outcome == IlbfOutcome::Finite);
      CHECK(g.length() == lens[0]);
    } else if (lens[0] < lens[1] && lens[1] < lens[2]) {
      ++decided;
      CHECK(g.outcome == IlbfOutcome::Infinite);
    }
  }
  CHECK(decided > 200);
}

TEST_CASE("ilbf_term recombines for finite outcomes") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    auto t = testgen::random_term(rng, {"a", "b", "c"}, 2, false);
    auto g = ilbf_term(t);
    if (g.outcome != IlbfOutcome::Finite) {
      continue;
    }
    std::vector<Term> parts;
    for (auto const& [x, a] : g.factors) {
      parts.push_back(join(x, a, std::nullopt));
    }
    if (g.remainder) {
      parts.push_back(*g.remainder);
    }
    INFO(to_string(t));
    CHECK(same_values(Term::concat(parts), t));
  }
}

TEST_CASE("ilbf2 on words") {
  auto g = ilbf2(parse_word("abab"));
  REQUIRE(g.factors.size() == 1);
  CHECK(to_string(g.factors[0]) == "ab");
  CHECK(to_string(g.q) == "ab");
  g = ilbf2(parse_word("aa"));
  REQUIRE(g.factors.size() == 1);
  CHECK(to_string(g.factors[0]) == "a");
  CHECK(to_string(g.q) == "a");
  g = ilbf2(parse_word("ab"));
  REQUIRE(g.factors.size() == 1);
  CHECK(to_string(g.factors[0]) == "a");
  CHECK_THROWS_AS(ilbf2(parse_word("a")), PreconditionViolated);

  all_words({"a", "b", "c"}, 7, [](Word const& u) {
    if (u.size() < 2) {
      return;
    }
    auto g     = ilbf2(u);
    auto parts = g.factors;
    parts.push_back(g.q);
    Word w, blocks;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      w      = cat(w, parts[i]);
      blocks = cat(blocks, phi_k(parts[i], 1).blocks);
      if (i + 1 < parts.size()) {
        blocks.push_back(make_block({parts[i].back(), parts[i + 1].front()}));
      }
    }
    CHECK(w == u);
    CHECK(blocks == phi_k(u, 1).blocks);
  });
}

TEST_CASE("ilbf2 on terms and unphi_1") {
  CHECK(to_string(unphi_1(parse_word("[ab][ba][ab]"))) == "abab");
  auto g = ilbf2(parse_term("(ab)^w"));
  CHECK(g.outcome == IlbfOutcome::Infinite);
  CHECK_FALSE(g.q);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    auto u = testgen::random_word(rng, {"a", "b"}, 2, 9);
    auto w = ilbf2(u);
    auto t = ilbf2(Term::word(u));
    REQUIRE(t.outcome == IlbfOutcome::Finite);
    REQUIRE(t.factors.size() == w.factors.size());
    for (std::size_t j = 0; j < w.factors.size(); ++j) {
      CHECK(expand(t.factors[j]) == w.factors[j]);
    }
    CHECK(expand(*t.q) == w.q);
    CHECK(unphi_1(phi_k(u, 1).blocks) == u);
  }
}

TEST_CASE("ds_dk_regular") {
  CHECK(ds_dk_regular(parse_term("(ab)^w"), 1).is_proved());
  CHECK(ds_dk_regular(parse_term("(a^w b)^w"), 1).is_proved());
  CHECK(ds_dk_regular(parse_term("abab"), 1).is_refuted());
  CHECK(ds_dk_regular(parse_term("a^w b a^w"), 1).is_refuted());
  CHECK_THROWS_AS(ds_dk_regular(parse_term("ab"), 2), PreconditionViolated);
}

TEST_CASE("r_equal") {
  auto eq = [](char const* u, char const* v) {
    return r_equal(parse_term(u), parse_term(v)).verdict;
  };
  CHECK(eq("x^w", "x^w x^w") == Verdict::Proved);
  CHECK(eq("(ab)^w", "(ab)^w (ab)^w") == Verdict::Proved);
  CHECK(eq("ab", "ba") == Verdict::Refuted);
  CHECK(eq("(ab)^w a", "(ab)^w") == Verdict::Proved);
  CHECK(eq("(ab)^w", "(ba)^w") == Verdict::Refuted);

  auto const& R = pseudovariety("R");
  std::vector<FiniteSemigroup> members;
  for (auto const& e : corpus(4)) {
    if (member(e.semigroup, R)) {
      members.push_back(e.semigroup);
    }
  }
  std::mt19937_64 rng(14);
  int             proved = 0;
  for (int i = 0; i < 300; ++i) {
    auto u = testgen::random_term(rng, {"a", "b"}, 2, false);
    auto v = i % 2 ? testgen::random_term(rng, {"a", "b"}, 2, false)
                   : Term::concat({u, testgen::random_term(rng, {"a", "b"}, 1, false)});
    auto r = r_equal(u, v);
    if (r.is_proved()) {
      ++proved;
      PseudoIdentity pi(u, v, {"a", "b"});
      for (auto const& S : members) {
        CHECK(satisfies(S, pi));
      }
      // ilbf is well defined on the R-class
      auto fu = ilbf_term(u), fv = ilbf_term(v);
      CHECK(fu.outcome == fv.outcome);
      if (fu.outcome == IlbfOutcome::Finite) {
        CHECK(fu.length() == fv.length());
      }
    }
  }
  CHECK(proved > 10);
}
