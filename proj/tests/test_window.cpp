#include <catch_amalgamated.hpp>

#include <random>

#include "malcev/catalog.hpp"
#include "malcev/corpus.hpp"
#include "malcev/evaluate.hpp"
#include "malcev/window.hpp"
#include "term_gen.hpp"

using namespace malcev;

namespace {

  bool bases_at_least(Term const& t, std::size_t k) {
    switch (t.kind()) {
      case Term::Kind::Letter:
        return true;
      case Term::Kind::Concat:
        for (auto const& x : t.factors()) {
          if (!bases_at_least(x, k)) {
            return false;
          }
        }
        return true;
      default: {
        auto len = finite_length(t.base());
        return (!len || *len >= k) && bases_at_least(t.base(), k);
      }
    }
  }

  // phi_k by direct sliding window
  Word windows(Word const& u, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i + k < u.size(); ++i) {
      out.push_back(make_block(Word(u.begin() + i, u.begin() + i + k + 1)));
    }
    return out;
  }

}  // namespace

TEST_CASE("phi_k on words") {
  auto w = phi_k(parse_word("abab"), 1);
  CHECK(to_string(w.blocks) == "[ab][ba][ab]");
  CHECK(w.well_formed());
  CHECK(phi_k(parse_word("ab"), 2).blocks.empty());
  CHECK(to_string(phi_k(parse_word("abcab"), 2).blocks) == "[abc][bca][cab]");
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    auto u = testgen::random_word(rng, {"a", "b", "c"}, 1, 12);
    for (int k : {1, 2, 3}) {
      auto p = phi_k(u, k);
      CHECK(p.blocks == windows(u, k));
      CHECK(p.well_formed());
      auto c = c_k1(u, k);
      CHECK(c == std::set<Symbol>(p.blocks.begin(), p.blocks.end()));
    }
  }
  WindowWord bad{1, {"[ab]", "[ab]"}};
  CHECK_FALSE(bad.well_formed());
}

TEST_CASE("phi_k on terms commutes with unfolding") {
  CHECK(to_string(*phi_k_term(parse_term("(ab)^w"), 1)) == "([ab][ba])^(w-1) [ab]");
  CHECK(to_string(*phi_k_term(parse_term("a^w"), 1)) == "[aa]^(w-1)");
  CHECK_FALSE(phi_k_term(parse_term("a"), 1).has_value());
  CHECK_THROWS_AS(phi_k_term(parse_term("a^(2^w)"), 2), UnsupportedShape);

  std::mt19937_64 rng(3);
  int             tested = 0;
  for (int i = 0; i < 1500; ++i) {
    auto t = testgen::random_term(rng, {"a", "b"}, 2, false);
    for (std::size_t k : {1u, 2u}) {
      if (!bases_at_least(t, k)) {
        continue;
      }
      auto p = phi_k_term(t, static_cast<int>(k));
      for (std::int64_t M : {5, 8}) {
        Word direct = windows(expand(unfold(t, M)), k);
        Word via    = p ? expand(unfold(*p, M)) : Word{};
        INFO(to_string(t) << " k=" << k << " M=" << M);
        CHECK(via == direct);
        ++tested;
      }
    }
  }
  CHECK(tested > 1000);
}

TEST_CASE("vdk_satisfies is sound against wreath products") {
  std::mt19937_64 rng(7);
  auto const&     Sl = pseudovariety("Sl");
  auto            D  = free_dk(1, 2);
  std::vector<FiniteSemigroup> W;
  for (auto const& e : corpus(2)) {
    if (member(e.semigroup, Sl)) {
      W.push_back(wreath_product(e.semigroup, D));
    }
  }
  REQUIRE_FALSE(W.empty());
  int proved = 0, refuted = 0;
  for (int i = 0; i < 300; ++i) {
    auto u = testgen::random_term(rng, {"a", "b"}, 2, false);
    auto v = i % 2 ? testgen::random_term(rng, {"a", "b"}, 2, false)
                   : Term::concat({u, u});
    auto r = vdk_satisfies(Sl, 1, u, v);
    PseudoIdentity pi(u, v, {"a", "b"});
    if (r.is_proved()) {
      ++proved;
      for (auto const& S : W) {
        CHECK(satisfies(S, pi));
      }
    } else if (r.is_refuted()) {
      ++refuted;
    }
  }
  CHECK(proved > 10);
  CHECK(refuted > 10);
}

TEST_CASE("vdk_satisfies examples and policies") {
  auto const& Sl = pseudovariety("Sl");
  CHECK(vdk_satisfies(Sl, 1, parse_term("(ab)^w"), parse_term("(ab)^w (ab)^w"))
            .is_proved());
  CHECK(vdk_satisfies(Sl, 1, parse_word("ab"), parse_word("ba")).is_refuted());
  CHECK(vdk_satisfies(Sl, 1, parse_word("abab"), parse_word("ababab")).is_proved());
  CHECK(vdk_satisfies(Sl, 2, parse_word("abab"), parse_word("ababab")).is_proved());
  auto const& K2 = pseudovariety("K_2");
  CHECK_THROWS_AS(vdk_satisfies(K2, 1, parse_word("ab"), parse_word("ab")),
                  PreconditionViolated);
  CHECK(vdk_satisfies(K2, 1, parse_word("ab"), parse_word("ab"),
                      VdkPolicy::SufficientOnly)
            .is_proved());
  CHECK(vdk_satisfies(K2, 1, parse_word("ab"), parse_word("aa"),
                      VdkPolicy::SufficientOnly)
            .is_refuted());
}

TEST_CASE("free objects") {
  auto const& Sl = pseudovariety("Sl");
  auto        F  = free_object_vdk(Sl, {"a", "b"}, 1);
  CHECK(F.semigroup.order() == 28);
  CHECK(F.image(parse_word("abab")) == F.image(parse_word("ababab")));
  CHECK(F.image(parse_word("ab")) != F.image(parse_word("ba")));
  CHECK(member_vdk(F.semigroup, Sl, 1));
  // image agrees with the direct triple
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    auto u = testgen::random_word(rng, {"a", "b"}, 1, 9);
    CHECK(F.elements[F.image(u)] == dk_image(Sl, 1, u));
  }
  CHECK_THROWS_AS(free_object_vdk(Sl, {"a", "b", "c", "d"}, 1),
                  PreconditionViolated);
  CHECK_THROWS_AS(free_object_vdk(Sl, {"a", "b", "c"}, 2), Error);
}

TEST_CASE("member_vdk examples") {
  auto const& Sl = pseudovariety("Sl");
  CHECK(member_vdk(brandt_b2(), Sl, 1));
  CHECK_FALSE(member_vdk(cyclic_group(2), Sl, 1));
  CHECK(member_vdk(free_dk(1, 2), Sl, 1));
  CHECK(member_vdk(u1(), Sl, 1));
}
