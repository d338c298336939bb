#include "malcev/pseudovariety.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <regex>
#include <set>

#include "malcev/catalog.hpp"
#include "malcev/certifier.hpp"
#include "malcev/corpus.hpp"
#include "malcev/evaluate.hpp"
#include "malcev/factorization.hpp"

namespace malcev {

  namespace {

    PseudoIdentity id(std::string const& s) {
      return parse_identity(s);
    }

    std::vector<PseudoIdentity> chi(std::vector<PseudoIdentity> const& b) {
      std::vector<PseudoIdentity> out;
      for (auto const& p : b) {
        out.push_back(reverse_chi(p));
      }
      return out;
    }

    std::string word_of(int from, int to) {
      std::string s;
      for (int i = from; i <= to; ++i) {
        s += (i > from ? " x" : "x") + std::to_string(i);
      }
      return s;
    }

    PseudovarietyDef make(std::string                 name,
                          std::vector<PseudoIdentity> basis,
                          WordProblem                 wp,
                          bool                        monoidal,
                          bool                        has_monoid,
                          bool                        lf     = false,
                          int                         param  = 0,
                          std::optional<std::string>  dual   = std::nullopt) {
      PseudovarietyDef d;
      d.name                  = std::move(name);
      d.basis                 = std::move(basis);
      d.word_problem          = wp;
      d.wp_param              = param;
      d.monoidal              = monoidal;
      d.has_nontrivial_monoid = has_monoid;
      d.locally_finite        = lf;
      d.dual_of               = dual ? dual : std::optional(d.name);
      return d;
    }

    std::string canonical_name(std::string const& n) {
      static std::map<std::string, std::string> const alias = {
          {"K∨G", "KvG"}, {"D∨G", "DvG"}, {"N∨G", "NvG"}};
      auto it = alias.find(n);
      return it == alias.end() ? n : it->second;
    }

    std::optional<PseudovarietyDef> build(std::string const& name) {
      using W = WordProblem;
      PseudoIdentity k  = id("x1^w = x1^w x2");
      PseudoIdentity kg = id("x1^w = x1^w x2^w");
      PseudoIdentity r  = id("(x1 x2)^w x1 = (x1 x2)^w");
      if (name == "I") {
        return make(name, {id("x1 = x2")}, W::Trivial, true, false, true);
      }
      if (name == "Sl") {
        return make(name, {id("x1^2 = x1"), id("x1 x2 = x2 x1")},
                    W::SlContent, true, true, true);
      }
      if (name == "K") {
        return make(name, {k}, W::KPrefix, false, false, false, 0, "D");
      }
      if (name == "D") {
        return make(name, chi({k}), W::DSuffix, false, false, false, 0, "K");
      }
      if (name == "N") {
        return make(name, {k, reverse_chi(k)}, W::NFinite, false, false);
      }
      if (name == "KvG") {
        return make(name, {kg}, W::None, false, true, false, 0, "DvG");
      }
      if (name == "DvG") {
        return make(name, chi({kg}), W::None, false, true, false, 0, "KvG");
      }
      if (name == "NvG") {
        return make(name, {kg, reverse_chi(kg)}, W::None, false, true);
      }
      if (name == "LI") {
        return make(name, {id("x1^w = x1^w x2 x1^w")}, W::None, false, false);
      }
      if (name == "LG") {
        return make(name, {id("x1^w = (x1^w x2 x1^w)^w")}, W::None, false,
                    true);
      }
      if (name == "A") {
        return make(name, {id("x1^w = x1^(w+1)")}, W::None, true, true);
      }
      if (name == "G") {
        return make(name, {id("x1^w x2 = x2"), id("x2 x1^w = x2")},
                    W::GFreeGroup, true, true);
      }
      if (name == "R") {
        return make(name, {r}, W::RLbf, true, true, false, 0, "L");
      }
      if (name == "L") {
        return make(name, chi({r}), W::LLbf, true, true, false, 0, "R");
      }
      if (name == "J") {
        return make(name, {r, reverse_chi(r)}, W::None, true, true);
      }
      if (name == "DS") {
        return make(name,
                    {id("((x1 x2)^w (x2 x1)^w (x1 x2)^w)^w = (x1 x2)^w")},
                    W::None, true, true);
      }
      if (name == "DA") {
        return make(name, {id("(x1 x2)^w x1 (x1 x2)^w = (x1 x2)^w")},
                    W::None, true, true);
      }
      if (name == "DG") {
        return make(name, {id("(x1 x2)^w = (x2 x1)^w")}, W::None, true, true);
      }
      static std::regex const indexed(R"((LG|G|D|K|N)_([0-9]+))");
      std::smatch             m;
      if (!std::regex_match(name, m, indexed)) {
        return std::nullopt;
      }
      std::string fam = m[1];
      int         n   = std::stoi(m[2]);
      if (fam == "LG" || fam == "G") {
        if (!is_prime(n) || n > 97) {
          return std::nullopt;
        }
        std::string p = std::to_string(n);
        if (fam == "G") {
          return make(name,
                      {id("x1^w x2 = x2"), id("x2 x1^w = x2"),
                       id("x1^(" + p + "^w) = x1^w")},
                      W::None, true, true);
        }
        return make(name, {id("x1^w = (x1^w x2 x1^w)^(" + p + "^w)")},
                    W::None, false, true);
      }
      if (n < 1 || n > 4) {
        return std::nullopt;
      }
      std::string xs = word_of(1, n);
      auto d = id("y " + xs + " = " + xs);
      if (fam == "D") {
        return make(name, {d}, W::DmSuffix, false, false, true, n,
                    "K_" + std::to_string(n));
      }
      if (fam == "K") {
        return make(name, chi({d}), W::KmPrefix, false, false, true, n,
                    "D_" + std::to_string(n));
      }
      return make(name, {d, reverse_chi(d)}, W::NmZero, false, false, true, n);
    }

    std::mutex                              g_mu;
    std::map<std::string, PseudovarietyDef> g_cache;

    // V ⊨ u = v decided exactly from a normal key
    template <typename Key>
    ThreeValued by_key(Key const& a, Key const& b, char const* what) {
      return a == b ? ThreeValued::proved(what) : ThreeValued::refuted({}, what);
    }

    struct NKey {
      bool zero = false;
      Word w;
      bool operator==(NKey const&) const = default;
    };

    NKey n_key(Term const& t, std::size_t m) {
      auto len = finite_length(t);
      if (!len || *len >= m) {
        return {true, {}};
      }
      return {false, expand(t)};
    }

    // free group reduction; nullopt past the budget
    std::optional<std::vector<std::pair<Symbol, int>>> group_word(
        Term const& t,
        std::size_t budget) {
      std::vector<std::pair<Symbol, int>> out;
      auto push = [&](std::pair<Symbol, int> const& g) {
        if (!out.empty() && out.back().first == g.first
            && out.back().second == -g.second) {
          out.pop_back();
        } else {
          out.push_back(g);
        }
      };
      std::function<bool(Term const&, int)> go = [&](Term const& x,
                                                      int         sign) {
        if (out.size() > budget) {
          return false;
        }
        switch (x.kind()) {
          case Term::Kind::Letter:
            push({x.symbol(), sign});
            return true;
          case Term::Kind::Concat: {
            auto const& f = x.factors();
            if (sign > 0) {
              for (auto const& y : f) {
                if (!go(y, sign)) {
                  return false;
                }
              }
            } else {
              for (auto it = f.rbegin(); it != f.rend(); ++it) {
                if (!go(*it, sign)) {
                  return false;
                }
              }
            }
            return true;
          }
          default: {
            auto const&  e = x.exponent();
            std::int64_t n = e.q;
            if (static_cast<std::size_t>(n < 0 ? -n : n) > budget) {
              return false;
            }
            int s = n < 0 ? -sign : sign;
            for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) {
              if (!go(x.base(), s)) {
                return false;
              }
            }
            return true;
          }
        }
      };
      if (!go(t, 1)) {
        return std::nullopt;
      }
      return out;
    }

    bool has_prime_omega(Term const& t) {
      switch (t.kind()) {
        case Term::Kind::Letter:
          return false;
        case Term::Kind::Concat:
          return std::any_of(t.factors().begin(), t.factors().end(),
                             has_prime_omega);
        default:
          return t.exponent().kind == Exponent::Kind::PrimeOmega
                 || has_prime_omega(t.base());
      }
    }

    std::optional<Counterexample> search_in_V(PseudovarietyDef const& V,
                                              Term const&             u,
                                              Term const&             v) {
      std::set<Symbol> letters = content(u);
      for (auto const& s : content(v)) {
        letters.insert(s);
      }
      PseudoIdentity           pi(u, v, sorted_symbols(letters));
      std::vector<FiniteSemigroup> pool;
      for (auto const& e : corpus(4)) {
        pool.push_back(e.semigroup);
      }
      for (int k = 1; k <= 3; ++k) {
        pool.push_back(free_kk(k, 2));
        pool.push_back(free_dk(k, 2));
        pool.push_back(free_nk(k, 2));
      }
      for (auto const& S : pool) {
        if (!member(S, V)) {
          continue;
        }
        if (auto a = find_counterexample(S, pi)) {
          return Counterexample{S, *a, pi};
        }
      }
      return std::nullopt;
    }

    ThreeValued permanence(PseudoIdentity const& pi, bool left) {
      std::set<Symbol> allowed{"x1", "x2"};
      for (auto const& s : pi.alphabet) {
        if (!allowed.count(s)) {
          throw WrongAlphabet("permanence needs the alphabet {x1,x2}");
        }
      }
      for (auto const& t : {pi.lhs, pi.rhs}) {
        for (auto const& s : content(t)) {
          if (!allowed.count(s)) {
            throw WrongAlphabet("letter " + s + " outside {x1,x2}");
          }
        }
      }
      Term const&            u = pi.lhs;
      Term const&            v = pi.rhs;
      std::map<Symbol, Term> sub{{"x1", u}, {"x2", v}};
      Term                   uu = Term::concat({u, u});
      Term                   uv = left ? Term::concat({u, v})
                                       : Term::concat({v, u});
      auto c1 = proves_equal_over_S(uu, u);
      auto c2 = proves_equal_over_S(substitute(u, sub), u);
      auto c3 = proves_equal_over_S(substitute(v, sub), v);
      auto c4 = proves_equal_over_S(v, uv);
      char const* names[] = {"u^2 = u", "u(u,v) = u", "v(u,v) = v",
                             left ? "v = uv" : "v = vu"};
      ThreeValued parts[]  = {c1, c2, c3, c4};
      ThreeValued out      = conjunction({c1, c2, c3, c4});
      std::string note;
      for (int i = 0; i < 4; ++i) {
        note += std::string(i ? "; " : "") + names[i] + ": "
                + to_string(parts[i].verdict);
      }
      out.note = note;
      return out;
    }

  }  // namespace

  std::string to_string(WordProblem w) {
    switch (w) {
      case WordProblem::Trivial:
        return "TRIVIAL";
      case WordProblem::SlContent:
        return "SL_CONTENT";
      case WordProblem::KPrefix:
        return "K_PREFIX";
      case WordProblem::DSuffix:
        return "D_SUFFIX";
      case WordProblem::NFinite:
        return "N_FINITE";
      case WordProblem::GFreeGroup:
        return "G_FREEGROUP";
      case WordProblem::RLbf:
        return "R_LBF";
      case WordProblem::LLbf:
        return "L_LBF";
      case WordProblem::KmPrefix:
        return "KM_PREFIX";
      case WordProblem::DmSuffix:
        return "DM_SUFFIX";
      case WordProblem::NmZero:
        return "NM_ZERO";
      default:
        return "NONE";
    }
  }

  std::optional<WordProblem> word_problem_from_string(std::string const& s) {
    for (int i = 0; i <= static_cast<int>(WordProblem::NmZero); ++i) {
      auto w = static_cast<WordProblem>(i);
      if (to_string(w) == s) {
        return w;
      }
    }
    return std::nullopt;
  }

  PseudovarietyDef const& pseudovariety(std::string const& raw) {
    std::string                 name = canonical_name(raw);
    std::lock_guard<std::mutex> lock(g_mu);
    auto                        it = g_cache.find(name);
    if (it != g_cache.end()) {
      return it->second;
    }
    auto d = build(name);
    if (!d) {
      throw UnknownName("unknown pseudovariety " + raw);
    }
    return g_cache.emplace(name, std::move(*d)).first->second;
  }

  std::vector<std::string> pseudovariety_names() {
    std::vector<std::string> out = {"I",  "Sl", "K",  "D",  "N",  "KvG",
                                    "DvG", "NvG", "LI", "LG", "A", "G",
                                    "R",  "L",  "J",  "DS", "DA", "DG"};
    for (int p : {2, 3}) {
      out.push_back("LG_" + std::to_string(p));
      out.push_back("G_" + std::to_string(p));
    }
    for (int k = 1; k <= 4; ++k) {
      for (char const* f : {"D_", "K_", "N_"}) {
        out.push_back(f + std::to_string(k));
      }
    }
    return out;
  }

  std::optional<Counterexample> member_witness(FiniteSemigroup const&  S,
                                               PseudovarietyDef const& V) {
    for (auto const& pi : V.basis) {
      if (auto a = find_counterexample(S, pi)) {
        return Counterexample{S, *a, pi};
      }
    }
    return std::nullopt;
  }

  bool member(FiniteSemigroup const& S, PseudovarietyDef const& V) {
    return !member_witness(S, V);
  }

  ThreeValued word_problem_equal(PseudovarietyDef const&   V,
                                 Term const&               u,
                                 Term const&               v,
                                 WordProblemOptions const& opt) {
    ThreeValued out;
    switch (V.word_problem) {
      case WordProblem::Trivial:
        out = ThreeValued::proved("trivial");
        break;
      case WordProblem::SlContent:
        out = by_key(content(u), content(v), "content");
        break;
      case WordProblem::KPrefix: {
        out = by_key(left_contour(u), left_contour(v), "left contour");
        break;
      }
      case WordProblem::DSuffix: {
        out = by_key(left_contour(reverse_chi(u)),
                     left_contour(reverse_chi(v)), "right contour");
        break;
      }
      case WordProblem::NFinite: {
        bool fu = u.is_finite(), fv = v.is_finite();
        if (fu != fv) {
          out = ThreeValued::refuted({}, "finite against infinite");
        } else if (!fu) {
          out = ThreeValued::proved("both infinite");
        } else {
          out = by_key(expand(u), expand(v), "words");
        }
        break;
      }
      case WordProblem::GFreeGroup: {
        if (has_prime_omega(u) || has_prime_omega(v)) {
          out = ThreeValued::unknown("p^w exponent");
          break;
        }
        auto gu = group_word(u, 100000), gv = group_word(v, 100000);
        if (!gu || !gv) {
          out = ThreeValued::unknown("free group budget");
          break;
        }
        out = by_key(*gu, *gv, "free group");
        break;
      }
      case WordProblem::RLbf:
        out = r_equal(u, v, opt.cap);
        break;
      case WordProblem::LLbf:
        out = r_equal(reverse_chi(u), reverse_chi(v), opt.cap);
        break;
      case WordProblem::KmPrefix: {
        std::size_t m = static_cast<std::size_t>(V.wp_param);
        out           = by_key(beta_k(u, m), beta_k(v, m), "prefix");
        break;
      }
      case WordProblem::DmSuffix: {
        std::size_t m = static_cast<std::size_t>(V.wp_param);
        out           = by_key(tau_k(u, m), tau_k(v, m), "suffix");
        break;
      }
      case WordProblem::NmZero: {
        std::size_t m = static_cast<std::size_t>(V.wp_param);
        out           = by_key(n_key(u, m), n_key(v, m), "nilpotent key");
        break;
      }
      default:
        return ThreeValued::unknown("no word problem for " + V.name);
    }
    if (out.is_refuted() && opt.want_witness) {
      out.witness = search_in_V(V, u, v);
    }
    return out;
  }

  ThreeValued is_left_permanent(PseudoIdentity const& pi) {
    return permanence(pi, true);
  }

  ThreeValued is_right_permanent(PseudoIdentity const& pi) {
    return permanence(pi, false);
  }

  ThreeValued is_permanent(PseudoIdentity const& pi) {
    auto l = is_left_permanent(pi);
    if (l.is_proved()) {
      return l;
    }
    auto r = is_right_permanent(pi);
    if (r.is_proved()) {
      return r;
    }
    if (l.is_refuted() && r.is_refuted()) {
      return l;
    }
    return ThreeValued::unknown("left: " + l.note + " | right: " + r.note);
  }

  PseudoIdentity reverse_chi(PseudoIdentity const& pi) {
    return PseudoIdentity(reverse_chi(pi.lhs), reverse_chi(pi.rhs),
                          pi.alphabet);
  }

  PseudovarietyDef dual_pseudovariety(PseudovarietyDef const& V) {
    if (V.dual_of) {
      if (*V.dual_of == V.name) {
        return V;
      }
      try {
        return pseudovariety(*V.dual_of);
      } catch (UnknownName const&) {
      }
    }
    PseudovarietyDef d = V;
    d.name             = V.name + "^op";
    d.basis            = chi(V.basis);
    d.dual_of          = V.name;
    switch (V.word_problem) {
      case WordProblem::KPrefix:
        d.word_problem = WordProblem::DSuffix;
        break;
      case WordProblem::DSuffix:
        d.word_problem = WordProblem::KPrefix;
        break;
      case WordProblem::RLbf:
        d.word_problem = WordProblem::LLbf;
        break;
      case WordProblem::LLbf:
        d.word_problem = WordProblem::RLbf;
        break;
      case WordProblem::KmPrefix:
        d.word_problem = WordProblem::DmSuffix;
        break;
      case WordProblem::DmSuffix:
        d.word_problem = WordProblem::KmPrefix;
        break;
      default:
        break;
    }
    return d;
  }

}  // namespace malcev
