#include <catch_amalgamated.hpp>

#include "malcev/catalog.hpp"
#include "malcev/corpus.hpp"
#include "malcev/error.hpp"
#include "malcev/semigroup.hpp"
#include "oracles.hpp"

using namespace malcev;

namespace {
  int lbl(FiniteSemigroup const& S, char const* name) {
    return S.find_label(name);
  }
  std::set<std::set<int>> as_sets(std::vector<std::vector<int>> const& v) {
    std::set<std::set<int>> out;
    for (auto const& c : v) {
      out.insert(std::set<int>(c.begin(), c.end()));
    }
    return out;
  }
}  // namespace

TEST_CASE("from_table validates") {
  auto T = FiniteSemigroup::from_table({{0}});
  CHECK(T.order() == 1);
  auto U = FiniteSemigroup::from_table({{0, 1}, {1, 1}});
  CHECK(is_commutative(U));
  CHECK(idempotents(U).size() == 2);
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{1, 0}, {0, 0}}), NonAssociative);
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 2}, {0, 0}}), OutOfRangeEntry);
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 0}}), OutOfRangeEntry);
}

TEST_CASE("B2 structure") {
  auto B = brandt_b2();
  auto a = lbl(B, "a"), b = lbl(B, "b"), ab = lbl(B, "ab"), ba = lbl(B, "ba"),
       z = lbl(B, "0");
  CHECK(B.mul(B.mul(a, b), a) == a);
  CHECK(B.mul(B.mul(b, a), b) == b);
  CHECK(B.mul(a, a) == z);
  CHECK(B.mul(b, b) == z);
  auto const& g = green(B);
  CHECK(g.j_classes.size() == 2);
  CHECK(g.regular_j.size() == 2);
  CHECK(g.j_of[a] == g.j_of[ab]);
  CHECK(g.j_of[a] != g.j_of[z]);
  CHECK(g.j_leq[g.j_of[z]][g.j_of[a]]);
  CHECK_FALSE(g.j_leq[g.j_of[a]][g.j_of[z]]);
  auto idem = idempotents(B);
  CHECK(std::set<int>(idem.begin(), idem.end()) == std::set<int>{ab, ba, z});
  auto M = local_monoid(B, ab);
  CHECK(M.order() == 2);
  CHECK(is_isomorphic(M, u1()));
  CHECK_THROWS_AS(local_monoid(B, a), NotIdempotent);
  CHECK(generate(B, {a, b}).order() == 5);
  CHECK(is_isomorphic(dual(B), B));
}

TEST_CASE("Green relations match ideal definitions on the corpus") {
  for (auto const& e : corpus(3)) {
    auto const& S = e.semigroup;
    auto const& g = green(S);
    for (int x = 0; x < S.order(); ++x) {
      for (int y = 0; y < S.order(); ++y) {
        CHECK((g.r_of[x] == g.r_of[y]) == oracle::same_class(S, x, y, 1));
        CHECK((g.l_of[x] == g.l_of[y]) == oracle::same_class(S, x, y, 2));
        CHECK((g.j_of[x] == g.j_of[y]) == oracle::same_class(S, x, y, 3));
        CHECK((g.h_of[x] == g.h_of[y])
              == (g.r_of[x] == g.r_of[y] && g.l_of[x] == g.l_of[y]));
        auto Iy = oracle::ideal(S, y, 3);
        CHECK(g.j_leq[g.j_of[x]][g.j_of[y]] == (Iy.count(x) == 1));
      }
    }
    // regular J-class iff every R-class inside has an idempotent
    for (size_t j = 0; j < g.j_classes.size(); ++j) {
      bool every = true;
      for (auto const& r : g.r_classes) {
        if (g.j_of[r[0]] != static_cast<int>(j)) {
          continue;
        }
        bool has = false;
        for (int x : r) {
          has = has || S.mul(x, x) == x;
        }
        every = every && has;
      }
      CHECK(g.j_regular[j] == every);
    }
    auto        Sd = dual(S);
    auto const& gd = green(Sd);
    CHECK(as_sets(gd.r_classes) == as_sets(g.l_classes));
    CHECK(as_sets(gd.l_classes) == as_sets(g.r_classes));
    CHECK(as_sets(gd.j_classes) == as_sets(g.j_classes));
    CHECK(as_sets(gd.h_classes) == as_sets(g.h_classes));
  }
}

TEST_CASE("groups have a single Green class") {
  for (int n : {1, 2, 5, 6}) {
    auto const& g = green(cyclic_group(n));
    CHECK(g.j_classes.size() == 1);
    CHECK(g.r_classes.size() == 1);
    CHECK(g.h_classes.size() == 1);
  }
  auto const& gu = green(u1());
  CHECK(gu.j_classes.size() == 2);
}

TEST_CASE("constructions") {
  auto U = u1();
  auto P = direct_product(U, U);
  CHECK(P.order() == 4);
  CHECK(idempotents(P).size() == 4);
  CHECK(adjoin_identity(left_zero(2)).order() == 3);
  CHECK(adjoin_one(U).order() == 2);
  CHECK(adjoin_identity(U).order() == 3);
  CHECK(adjoin_one(left_zero(2)).order() == 3);
  CHECK(dual(left_zero(3)).same_table(right_zero(3)));
  CHECK(idempotents(left_zero(4)).size() == 4);
  CHECK(idempotents(cyclic_group(6)).size() == 1);
  CHECK(cyclic_group(1).order() == 1);
  auto M = adjoin_identity(brandt_b2());
  CHECK(local_monoid(M, *identity_element(M)).same_table(M));
  for (auto const& e : corpus(3)) {
    CHECK(dual(dual(e.semigroup)).same_table(e.semigroup));
    for (int f : idempotents(e.semigroup)) {
      auto L = local_monoid(e.semigroup, f);
      CHECK(is_monoid(L));
    }
  }
}

TEST_CASE("quotients and congruences") {
  auto B = brandt_b2();
  CHECK(quotient(B, Congruence::identity(5)).same_table(B));
  CHECK(congruences(FiniteSemigroup()).size() == 1);
  CHECK(congruences(u1()).size() == 2);
  CHECK(static_cast<int>(congruences(B).size()) == oracle::count_congruences(B));
  CHECK_THROWS_AS(quotient(B, Congruence({0, 1, 1, 2, 3})), IncompatiblePartition);
  for (auto const& e : corpus(4)) {
    auto const& S  = e.semigroup;
    auto        cs = congruences(S);
    CHECK(static_cast<int>(cs.size()) == oracle::count_congruences(S));
    std::set<Congruence> uniq(cs.begin(), cs.end());
    CHECK(uniq.size() == cs.size());
    for (auto const& c : cs) {
      auto Q = quotient(S, c);
      CHECK(Q.order() == c.num_classes());
      CHECK(is_homomorphism(S, Q, c.labels()));
    }
  }
}

TEST_CASE("division") {
  auto B = brandt_b2(), U = u1();
  CHECK(divides(U, B));
  CHECK_FALSE(divides(B, U));
  CHECK(divides(cyclic_group(2), cyclic_group(6)));
  CHECK_FALSE(divides(cyclic_group(4), cyclic_group(6)));
  auto const& c3 = corpus(3);
  for (auto const& a : c3) {
    CHECK(divides(a.semigroup, a.semigroup));
  }
  // transitivity on a slice of the corpus
  std::vector<FiniteSemigroup> s;
  for (size_t i = 0; i < c3.size(); i += 3) {
    s.push_back(c3[i].semigroup);
  }
  for (auto const& x : s) {
    for (auto const& y : s) {
      for (auto const& z : s) {
        if (divides(x, y) && divides(y, z)) {
          CHECK(divides(x, z));
        }
      }
    }
  }
}

TEST_CASE("wreath products") {
  auto T = FiniteSemigroup();
  CHECK(wreath_product(T, T).order() == 1);
  auto D1 = free_dk(1, 2);
  CHECK(D1.order() == 2);
  auto W = wreath_product(u1(), free_dk(1, 1));
  CHECK(W.order() == 4);  // |U1|^2 * 1
  auto W2 = wreath_product(u1(), D1);
  CHECK(W2.order() == 16);
  CHECK(divides(brandt_b2(), W2));
  CHECK_THROWS_AS(wreath_product(cyclic_group(4), free_dk(2, 3), 1000),
                  BudgetExceeded);
}

TEST_CASE("catalog names") {
  CHECK(catalog("cyclic(1)").order() == 1);
  CHECK(catalog("B2^1").order() == 6);
  CHECK(catalog("free_D(1,2)").order() == 2);
  CHECK(catalog("free_band(2)").order() == 6);
  CHECK(catalog("free_band(3)").order() == 159);
  CHECK(catalog("free_N(2,3)").order() == 4);
  CHECK(catalog("free_K(2,2)").order() == 6);
  CHECK(catalog("mono(2,3)").order() == 4);
  CHECK_THROWS_AS(catalog("nonsense"), UnknownName);
  for (auto const& n : catalog_examples()) {
    CHECK_NOTHROW(catalog(n));
  }
  auto D = catalog("free_D(1,2)");
  // last-letter semantics
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      CHECK(D.mul(x, y) == y);
    }
  }
}

TEST_CASE("canonical forms") {
  for (auto const& e : corpus(3)) {
    auto c = canonical_form(e.semigroup);
    CHECK(canonical_form(c).same_table(c));
    CHECK(find_isomorphism(e.semigroup, c).has_value());
  }
  CHECK(is_anti_isomorphic(left_zero(3), right_zero(3)));
  CHECK_FALSE(is_isomorphic(left_zero(3), right_zero(3)));
}
