#include <catch_amalgamated.hpp>

#include <random>

#include "malcev/catalog.hpp"
#include "malcev/corpus.hpp"
#include "malcev/evaluate.hpp"
#include "malcev/term.hpp"
#include "term_gen.hpp"

using namespace malcev;

TEST_CASE("parsing") {
  auto t = parse_term("x1^w x2");
  REQUIRE(t.kind() == Term::Kind::Concat);
  CHECK(t.factors()[0].kind() == Term::Kind::Power);
  CHECK(t.factors()[0].exponent() == Exponent::omega());
  CHECK(t.factors()[1].symbol() == "x2");
  auto p = parse_term("(x1^w x2 x1^w)^(2^w)");
  REQUIRE(p.kind() == Term::Kind::Power);
  CHECK(p.exponent() == Exponent::prime_omega(2));
  CHECK(parse_term("abab") == Term::word({"a", "b", "a", "b"}));
  CHECK(parse_term("x1x2") == parse_term("x1 x2"));
  CHECK(parse_term("a^(w-1)").exponent() == Exponent::omega(-1));
  CHECK(parse_term("a^(3^w+2)").exponent() == Exponent::prime_omega(3, 2));
  CHECK(parse_term("[ab][ba]^w").factors()[0].symbol() == "[ab]");
  CHECK_THROWS_AS(parse_term("x^0"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x^1"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x^(4^w)"), SyntaxError);
  CHECK_THROWS_AS(parse_term(""), SyntaxError);
  CHECK_THROWS_AS(parse_term("(ab"), SyntaxError);
  CHECK_THROWS_AS(parse_term("ab)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("A"), SyntaxError);
  try {
    parse_term("ab^0");
  } catch (SyntaxError const& e) {
    CHECK(e.pos == 3);
  }
  auto pi = parse_identity("x1^w = x1^w x2");
  CHECK(pi.alphabet == std::vector<Symbol>{"x1", "x2"});
  CHECK_THROWS_AS(PseudoIdentity(parse_term("a"), parse_term("b"), {"a"}),
                  WrongAlphabet);
}

TEST_CASE("printing round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto t = testgen::random_term(rng, {"a", "b", "x1", "x12"}, 4);
    CHECK(parse_term(to_string(t)) == t);
    CHECK(parse_term(to_string(t)).str() == t.str());
  }
  CHECK(to_string(parse_term("(a^w)^w")) == "(a^w)^w");
  CHECK(to_string(parse_term("a b c")) == "abc");
}

TEST_CASE("evaluation examples") {
  auto C6 = cyclic_group(6);
  auto g  = 1;
  CHECK(evaluate(parse_term("x^w"), C6, {{"x", g}}) == 0);
  auto B = brandt_b2();
  CHECK(evaluate(parse_term("(xy)^w"), B,
                 {{"x", B.find_label("a")}, {"y", B.find_label("b")}})
        == B.find_label("ab"));
  CHECK(evaluate(parse_term("x^(2^w)"), C6, {{"x", g}}) == 4);
  CHECK_THROWS_AS(evaluate(parse_term("xy"), C6, {{"x", 1}}), UnboundLetter);
}

namespace {
  // closed form: exponent congruent to 0 mod the p-part of r and to 1 mod
  // the rest, lifted above the index
  std::int64_t closed_prime_omega(std::int64_t p, std::int64_t m, std::int64_t r) {
    std::int64_t pp = 1, rest = r;
    while (rest % p == 0) {
      rest /= p;
      pp *= p;
    }
    std::int64_t n = 0;
    for (std::int64_t c = 0; c < r; ++c) {
      if (c % pp == 0 && c % rest == 1 % rest) {
        n = c;
        break;
      }
    }
    while (n < std::max<std::int64_t>(m, 1)) {
      n += r;
    }
    return n;
  }
}  // namespace

TEST_CASE("prime omega agrees with the closed form") {
  for (int m = 1; m <= 4; ++m) {
    for (int r = 1; r <= 30; ++r) {
      auto S = monogenic(m, r);
      for (int p : {2, 3, 5, 7}) {
        for (int q : {-2, 0, 1}) {
          auto e = Exponent::prime_omega(p, q);
          int  v = evaluate(Term::power(Term::letter("x"), e), S, {{"x", 0}});
          std::int64_t n = closed_prime_omega(p, m, r) + q;
          while (n < m) {
            n += r;
          }
          CHECK(v == power(S, 0, n));
        }
      }
    }
  }
}

TEST_CASE("omega arithmetic") {
  for (auto const& e : corpus(4)) {
    auto const& S = e.semigroup;
    for (int x = 0; x < S.order(); ++x) {
      Assignment a{{"x", x}};
      int w = evaluate(parse_term("x^w"), S, a);
      CHECK(S.mul(w, w) == w);
      CHECK(evaluate(parse_term("x^(w+1) x^(w-1)"), S, a) == w);
      CHECK(evaluate(parse_term("x^w x^w"), S, a) == w);
      CHECK(evaluate(parse_term("x^(w+3)"), S, a)
            == evaluate(parse_term("x^w x^3"), S, a));
    }
  }
}

TEST_CASE("satisfaction") {
  auto k = parse_identity("x1^w = x1^w x2");
  CHECK_FALSE(satisfies(u1(), k));
  CHECK(satisfies(left_zero(2), k));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto t = testgen::random_term(rng, {"a", "b"}, 3);
    CHECK(satisfies(brandt_b2(), PseudoIdentity(t, t)));
  }
  // renaming letters does not change satisfaction
  for (auto const& e : corpus(3)) {
    auto renamed = PseudoIdentity(parse_term("y^w"), parse_term("y^w z"));
    CHECK(satisfies(e.semigroup, k) == satisfies(e.semigroup, renamed));
  }
}

TEST_CASE("substitution, reversal, content") {
  auto u = parse_term("x1^w");
  auto v = parse_term("x1^w x2");
  CHECK(substitute(u, {{"x1", u}}) == parse_term("(x1^w)^w"));
  CHECK(substitute(v, {{"x1", parse_term("u")}, {"x2", parse_term("v")}})
        == parse_term("u^w v"));
  CHECK(substitute(v, {{"x1", u}, {"x2", v}}) == parse_term("(x1^w)^w x1^w x2"));
  CHECK(reverse_chi(parse_term("abc")) == parse_term("cba"));
  CHECK(reverse_chi(parse_term("x1 x2^(w+1)")) == parse_term("x2^(w+1) x1"));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    auto t = testgen::random_term(rng, {"a", "b", "c"}, 4);
    CHECK(reverse_chi(reverse_chi(t)) == t);
  }
  CHECK(content(parse_term("(x1^w x2 x1^w)^(2^w)"))
        == std::set<Symbol>{"x1", "x2"});
  CHECK(content(parse_term("a")) == std::set<Symbol>{"a"});
}

TEST_CASE("prefixes, suffixes, contours") {
  CHECK(beta_k(parse_term("(ab)^w c"), 2) == parse_word("ab"));
  CHECK(tau_k(parse_term("x1^w x2"), 1) == parse_word("x2"));
  CHECK(beta_k(parse_term("a b^w"), 3) == parse_word("abb"));
  CHECK(beta_k(parse_term("ab"), 5) == parse_word("ab"));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    auto w = testgen::random_word(rng, {"a", "b", "c"}, 1, 9);
    auto t = Term::word(w);
    for (size_t k = 0; k <= 10; ++k) {
      CHECK(beta_k(t, k) == beta_k(w, k));
      CHECK(tau_k(t, k) == tau_k(w, k));
    }
  }
  auto c1 = left_contour(parse_term("(ab)^w"));
  CHECK(c1.infinite);
  CHECK(c1.prefix.empty());
  CHECK(c1.period == parse_word("ab"));
  auto c2 = left_contour(parse_term("ab (ba)^w c"));
  CHECK(c2.prefix == parse_word("ab"));
  CHECK(c2.period == parse_word("ba"));
  auto c3 = left_contour(parse_term("abc"));
  CHECK_FALSE(c3.infinite);
  CHECK(c3.prefix == parse_word("abc"));
  CHECK(left_contour(parse_term("a (ba)^w")) == left_contour(parse_term("(ab)^w")));
  CHECK(left_contour(parse_term("(abab)^w")).period == parse_word("ab"));
}

TEST_CASE("duality transports identities") {
  std::mt19937_64 rng(21);
  for (auto const& e : corpus(3)) {
    auto d = dual(e.semigroup);
    for (int i = 0; i < 10; ++i) {
      auto u  = testgen::random_term(rng, {"a", "b"}, 3);
      auto v  = testgen::random_term(rng, {"a", "b"}, 3);
      auto pi = PseudoIdentity(u, v);
      auto pr = PseudoIdentity(reverse_chi(u), reverse_chi(v));
      CHECK(satisfies(e.semigroup, pi) == satisfies(d, pr));
    }
  }
}

TEST_CASE("generic evaluator agrees with table evaluation") {
  std::mt19937_64 rng(4);
  auto            S = brandt_b2();
  auto mul = [&](int a, int b) { return S.mul(a, b); };
  Evaluator<int, decltype(mul)> ev(mul);
  for (int i = 0; i < 300; ++i) {
    auto t = testgen::random_term(rng, {"a", "b"}, 4);
    for (int x = 0; x < 5; ++x) {
      for (int y = 0; y < 5; ++y) {
        Assignment a{{"a", x}, {"b", y}};
        CHECK(ev(t, [&](Symbol const& s) { return a.at(s); })
              == evaluate(t, S, a));
      }
    }
  }
}
