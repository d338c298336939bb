#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <regex>

#include "malcev/catalog.hpp"
#include "malcev/languages.hpp"
#include "malcev/semilocal.hpp"

using namespace malcev;

namespace {

  struct Rx {
    std::string text;
    bool        nullable;
  };

  // quantifiers only over non-nullable parts, so std::regex stays polynomial
  Rx random_rx(std::mt19937_64& rng, int depth) {
    int c = std::uniform_int_distribution<int>(0, depth > 0 ? 5 : 1)(rng);
    if (c < 2) {
      return {c == 0 ? "a" : "b", false};
    }
    auto x = random_rx(rng, depth - 1);
    if (c >= 4) {
      if (x.nullable) {
        return {"(" + x.text + ")", true};
      }
      return {"(" + x.text + (c == 4 ? ")*" : ")+"), c == 4};
    }
    auto y = random_rx(rng, depth - 1);
    if (c == 2) {
      return {x.text + y.text, x.nullable && y.nullable};
    }
    return {"(" + x.text + "|" + y.text + ")", x.nullable || y.nullable};
  }

  std::string random_regex(std::mt19937_64& rng, int depth) {
    return random_rx(rng, depth).text;
  }

  std::vector<std::string> words_upto(std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() < n) {
        out.push_back(out[i] + "a");
        out.push_back(out[i] + "b");
      }
    }
    return out;
  }

  Word to_word(std::string const& s) {
    Word w;
    for (char c : s) {
      w.push_back(std::string(1, c));
    }
    return w;
  }

  std::vector<Symbol> const AB{"a", "b"};

}  // namespace

TEST_CASE("regex parsing") {
  auto d = parse_regex("(ab)+");
  CHECK(d.states == 4);
  CHECK(d.alphabet == AB);
  CHECK(d.accepts(parse_word("abab")));
  CHECK_FALSE(d.accepts(parse_word("aba")));
  CHECK_FALSE(d.accepts({}));
  CHECK_THROWS_AS(parse_regex(""), SyntaxError);
  CHECK_THROWS_AS(parse_regex("(a"), SyntaxError);
  CHECK_THROWS_AS(parse_regex("a|"), SyntaxError);
  CHECK_THROWS_AS(parse_regex("()"), SyntaxError);
  CHECK_THROWS_AS(parse_regex("*a"), SyntaxError);
  CHECK_THROWS_AS(parse_regex("ac", AB), WrongAlphabet);
  CHECK_THROWS_AS(d.accepts(parse_word("c")), UnboundLetter);
}

TEST_CASE("automata agree with std::regex") {
  std::mt19937_64 rng(21);
  auto            ws = words_upto(7);
  for (int i = 0; i < 200; ++i) {
    auto       r = random_regex(rng, 3);
    auto       d = parse_regex(r, AB);
    std::regex re(r);
    INFO(r);
    for (auto const& w : ws) {
      CHECK(d.accepts(to_word(w)) == std::regex_match(w, re));
    }
    CHECK(minimize(d) == d);
    CHECK(equivalent(d, parse_regex("(" + r + ")|(" + r + ")", AB)));
    CHECK(is_empty(d) == std::none_of(ws.begin(), ws.end(), [&](auto const& w) {
            return std::regex_match(w, re);
          }));
  }
}

TEST_CASE("syntactic semigroup") {
  auto s = syntactic_semigroup(parse_regex("(ab)+"));
  CHECK(canonical_form(s.semigroup).same_table(canonical_form(brandt_b2())));
  CHECK(s.accepting[s.eval(parse_word("abab"))]);
  CHECK_THROWS_AS(s.eval({}), PreconditionViolated);

  // same element iff same behaviour in every short context
  std::mt19937_64 rng(22);
  auto            ctx = words_upto(4);
  auto            ws  = words_upto(5);
  for (int i = 0; i < 60; ++i) {
    auto r = random_regex(rng, 2);
    auto d = parse_regex(r, AB);
    if (plus_part(d).states > 5) {
      continue;
    }
    auto       syn = syntactic_semigroup(d);
    std::regex re(r);
    std::map<std::vector<bool>, int> by_sig;
    INFO(r);
    for (auto const& w : ws) {
      if (w.empty()) {
        continue;
      }
      std::vector<bool> sig;
      for (auto const& x : ctx) {
        for (auto const& y : ctx) {
          sig.push_back(std::regex_match(x + w + y, re));
        }
      }
      int e = syn.eval(to_word(w));
      CHECK(syn.accepting[e] == std::regex_match(w, re));
      auto [it, fresh] = by_sig.emplace(sig, e);
      CHECK(it->second == e);
    }
  }
}

TEST_CASE("marked products and their kinds") {
  std::mt19937_64 rng(23);
  auto            ws = words_upto(7);
  int             seen[3] = {0, 0, 0};
  for (int i = 0; i < 150; ++i) {
    auto r1 = random_regex(rng, 2), r2 = random_regex(rng, 2);
    auto L1 = parse_regex(r1, AB), L2 = parse_regex(r2, AB);
    auto P  = marked_product(L1, "a", L2);
    std::regex re("(" + r1 + ")a(" + r2 + ")"), e1(r1), e2(r2);
    INFO(r1 << " a " << r2);
    for (auto const& w : ws) {
      CHECK(P.accepts(to_word(w)) == std::regex_match(w, re));
    }
    // bounded brute force
    std::vector<std::string> in1, in2;
    for (auto const& w : words_upto(6)) {
      if (std::regex_match(w, e1)) {
        in1.push_back(w);
      }
      if (std::regex_match(w, e2)) {
        in2.push_back(w);
      }
    }
    bool prefix_clash = false, suffix_clash = false, ambiguous = false;
    for (auto const& u : in1) {
      for (auto const& v : in1) {
        if (v.size() > u.size() && v.compare(0, u.size() + 1, u + "a") == 0) {
          prefix_clash = true;
        }
      }
    }
    for (auto const& u : in2) {
      for (auto const& v : in2) {
        std::string av = "a" + v, au = "a" + u;
        if (au.size() > av.size()
            && au.compare(au.size() - av.size(), av.size(), av) == 0) {
          suffix_clash = true;
        }
      }
    }
    for (auto const& w : ws) {
      int n = 0;
      for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] == 'a' && std::regex_match(w.substr(0, p), e1)
            && std::regex_match(w.substr(p + 1), e2)) {
          ++n;
        }
      }
      ambiguous |= n > 1;
    }
    bool ld = is_left_deterministic(L1, "a", L2);
    bool rd = is_right_deterministic(L1, "a", L2);
    bool un = is_unambiguous(L1, "a", L2);
    if (prefix_clash) {
      CHECK_FALSE(ld);
    }
    if (suffix_clash) {
      CHECK_FALSE(rd);
    }
    if (ambiguous) {
      CHECK_FALSE(un);
    }
    if (ld || rd) {
      CHECK(un);
    }
    seen[0] += ld;
    seen[1] += rd;
    seen[2] += un;
  }
  CHECK(seen[0] > 5);
  CHECK(seen[1] > 5);
  CHECK(seen[2] > 5);
  CHECK_FALSE(is_unambiguous(parse_regex("a*", AB), "a", parse_regex("a*", AB)));
  CHECK(is_unambiguous(parse_regex("b*", AB), "a", parse_regex("b*", AB)));
}

TEST_CASE("language varieties") {
  CHECK(language_variety_member(parse_regex("a(a|b)*"), pseudovariety("K")));
  CHECK_FALSE(language_variety_member(parse_regex("(a|b)*a"), pseudovariety("K")));
  CHECK(language_variety_member(parse_regex("(a|b)*a"), pseudovariety("D")));
  CHECK_FALSE(language_variety_member(parse_regex("(aa)+"), pseudovariety("A")));
  CHECK(language_variety_member(parse_regex("(aa)+"), pseudovariety("G")));
}
