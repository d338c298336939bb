#include "malcev/semilocal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "malcev/error.hpp"

namespace malcev {

  namespace {

    struct ZInfo {
      ZClass      z;
      char const* name;
      char const* catalog;
    };

    ZInfo const kZ[] = {
        {ZClass::LI, "LI", "LI"},   {ZClass::K, "K", "K"},
        {ZClass::D, "D", "D"},      {ZClass::N, "N", "N"},
        {ZClass::LG, "LG", "LG"},   {ZClass::KvG, "KvG", "KvG"},
        {ZClass::DvG, "DvG", "DvG"}, {ZClass::NvG, "NvG", "NvG"},
    };

    Congruence from_signatures(std::vector<std::vector<int>> const& sig) {
      std::map<std::vector<int>, int> ids;
      std::vector<int>                labels;
      for (auto const& s : sig) {
        labels.push_back(
            ids.emplace(s, static_cast<int>(ids.size())).first->second);
      }
      return Congruence(labels);
    }

    std::pair<ZClass, ZClass> parts(ZClass z) {
      return z == ZClass::N ? std::pair{ZClass::K, ZClass::D}
                            : std::pair{ZClass::KvG, ZClass::DvG};
    }

    bool split(ZClass z) {
      return z == ZClass::N || z == ZClass::NvG;
    }

    // enumerated substitution targets over {x, y}
    std::vector<Term> pinweil_terms() {
      std::vector<Word> words;
      for (int len = 1; len <= 3; ++len) {
        for (int mask = 0; mask < (1 << len); ++mask) {
          Word w;
          for (int i = 0; i < len; ++i) {
            w.push_back((mask >> i) & 1 ? "y" : "x");
          }
          words.push_back(w);
        }
      }
      std::vector<Term> out;
      for (auto const& w : words) {
        out.push_back(Term::word(w));
      }
      std::vector<Term> idem;
      for (auto const& w : words) {
        idem.push_back(Term::power(Term::word(w), Exponent::omega()));
      }
      out.insert(out.end(), idem.begin(), idem.end());
      for (std::size_t i = 0; i < 6 && i < idem.size(); ++i) {
        for (auto const& l : {Term::letter("x"), Term::letter("y")}) {
          out.push_back(Term::concat({idem[i], l}));
          out.push_back(Term::concat({l, idem[i]}));
          out.push_back(Term::concat({idem[i], l, idem[i]}));
        }
      }
      return out;
    }

  }  // namespace

  std::string to_string(ZClass z) {
    for (auto const& i : kZ) {
      if (i.z == z) {
        return i.name;
      }
    }
    return "?";
  }

  std::optional<ZClass> zclass_from_string(std::string const& s) {
    std::string t = s;
    for (auto [from, to] : {std::pair<std::string, std::string>{"K∨G", "KvG"},
                            {"D∨G", "DvG"}, {"N∨G", "NvG"}}) {
      if (t == from) {
        t = to;
      }
    }
    for (auto const& i : kZ) {
      if (t == i.name) {
        return i.z;
      }
    }
    return std::nullopt;
  }

  std::vector<ZClass> all_zclasses() {
    std::vector<ZClass> out;
    for (auto const& i : kZ) {
      out.push_back(i.z);
    }
    return out;
  }

  PseudovarietyDef const& zclass_def(ZClass z) {
    return pseudovariety(to_string(z));
  }

  std::string to_string(MuKind m) {
    switch (m) {
      case MuKind::RM:
        return "RM";
      case MuKind::RLM:
        return "RLM";
      case MuKind::GGM:
        return "GGM";
      case MuKind::AGGM:
        return "AGGM";
      case MuKind::LM:
        return "LM";
      default:
        return "LLM";
    }
  }

  MuKind mu_kind(ZClass z) {
    switch (z) {
      case ZClass::K:
        return MuKind::RM;
      case ZClass::KvG:
        return MuKind::RLM;
      case ZClass::LI:
        return MuKind::GGM;
      case ZClass::LG:
        return MuKind::AGGM;
      case ZClass::D:
        return MuKind::LM;
      case ZClass::DvG:
        return MuKind::LLM;
      default:
        throw UnsupportedZ(to_string(z) + " is handled by intersection");
    }
  }

  std::vector<RegularJClassView> regular_j_classes(FiniteSemigroup const& S) {
    std::vector<RegularJClassView> out;
    for (int j : S.green().regular_j) {
      out.push_back(regular_j_class(S, j));
    }
    return out;
  }

  RegularJClassView regular_j_class(FiniteSemigroup const& S, int j) {
    auto const& g = S.green();
    if (j < 0 || j >= static_cast<int>(g.j_classes.size())) {
      throw OutOfRangeEntry("no J-class " + std::to_string(j));
    }
    if (!g.j_regular[j]) {
      throw NotRegular("J-class " + std::to_string(j) + " is not regular");
    }
    RegularJClassView v;
    v.j        = j;
    v.elements = g.j_classes[j];
    std::set<int> r, l;
    for (int x : v.elements) {
      r.insert(g.r_of[x]);
      l.insert(g.l_of[x]);
    }
    v.r_classes.assign(r.begin(), r.end());
    v.l_classes.assign(l.begin(), l.end());
    return v;
  }

  Congruence mu_zj(FiniteSemigroup const&   S,
                   RegularJClassView const& J,
                   ZClass                   Z) {
    MuKind      kind = mu_kind(Z);
    auto const& g    = S.green();
    int         n    = S.order();
    auto in_j = [&](int x) { return g.j_of[x] == J.j; };
    std::vector<std::vector<int>> sig(n);
    for (int s = 0; s < n; ++s) {
      auto& v = sig[s];
      for (int x : J.elements) {
        switch (kind) {
          case MuKind::RM: {
            int p = S.mul(x, s);
            v.push_back(in_j(p) ? p : -1);
            break;
          }
          case MuKind::RLM: {
            int p = S.mul(x, s);
            v.push_back(in_j(p) ? g.l_of[p] : -1);
            break;
          }
          case MuKind::LM: {
            int p = S.mul(s, x);
            v.push_back(in_j(p) ? p : -1);
            break;
          }
          case MuKind::LLM: {
            int p = S.mul(s, x);
            v.push_back(in_j(p) ? g.r_of[p] : -1);
            break;
          }
          default:
            for (int y : J.elements) {
              int p = S.mul(S.mul(x, s), y);
              if (kind == MuKind::GGM) {
                v.push_back(in_j(p) ? p : -1);
              } else {
                v.push_back(in_j(p) ? 1 : 0);
              }
            }
        }
      }
    }
    Congruence c = from_signatures(sig);
    if (!c.is_compatible(S)) {
      throw Error("mu kernel " + to_string(kind) + " is not a congruence");
    }
    return c;
  }

  Congruence mu_z(FiniteSemigroup const& S, ZClass Z) {
    mu_kind(Z);
    Congruence c = Congruence::universal(S.order());
    for (auto const& J : regular_j_classes(S)) {
      c = meet(c, mu_zj(S, J, Z));
    }
    return c;
  }

  FiniteSemigroup mu_quotient(FiniteSemigroup const& S, ZClass Z) {
    return quotient(S, mu_z(S, Z));
  }

  Membership membership(PseudovarietyDef const& V) {
    return [V](FiniteSemigroup const& S) { return member(S, V); };
  }

  bool malcev_member(FiniteSemigroup const& S, ZClass Z, Membership const& V) {
    if (split(Z)) {
      auto [a, b] = parts(Z);
      return malcev_member(S, a, V) && malcev_member(S, b, V);
    }
    return V(mu_quotient(S, Z));
  }

  bool malcev_member(FiniteSemigroup const&  S,
                     ZClass                  Z,
                     PseudovarietyDef const& V) {
    return malcev_member(S, Z, membership(V));
  }

  bool lv_member(FiniteSemigroup const& S, Membership const& V) {
    for (int e : idempotents(S)) {
      if (!V(local_monoid(S, e))) {
        return false;
      }
    }
    return true;
  }

  bool lv_member(FiniteSemigroup const& S, PseudovarietyDef const& V) {
    return lv_member(S, membership(V));
  }

  std::pair<bool, bool> locality_sides(FiniteSemigroup const&  S,
                                       ZClass                  Z,
                                       PseudovarietyDef const& V) {
    Membership inV = membership(V);
    bool       lhs = true;
    for (int e : idempotents(S)) {
      if (!malcev_member(local_monoid(S, e), Z, inV)) {
        lhs = false;
        break;
      }
    }
    bool rhs = malcev_member(
        S, Z, [&](FiniteSemigroup const& Q) { return lv_member(Q, inV); });
    return {lhs, rhs};
  }

  bool locality_commutation_check(FiniteSemigroup const&  S,
                                  ZClass                  Z,
                                  PseudovarietyDef const& V) {
    auto [l, r] = locality_sides(S, Z, V);
    return l == r;
  }

  std::pair<bool, bool> idempotency_sides(FiniteSemigroup const&  S,
                                          ZClass                  Z,
                                          PseudovarietyDef const& V) {
    Membership inV  = membership(V);
    bool       once = malcev_member(S, Z, inV);
    bool       twice;
    if (split(Z)) {
      auto [a, b] = parts(Z);
      twice       = inV(mu_quotient(mu_quotient(S, a), a))
              && inV(mu_quotient(mu_quotient(S, b), b));
    } else {
      twice = inV(mu_quotient(mu_quotient(S, Z), Z));
    }
    return {once, twice};
  }

  std::optional<PinWeilWitness> pinweil_refute(
      FiniteSemigroup const&             S,
      std::vector<PseudoIdentity> const& z_basis,
      PseudovarietyDef const&            V,
      std::size_t                        budget) {
    if (V.word_problem == WordProblem::None) {
      return std::nullopt;
    }
    static std::vector<Term> const terms = pinweil_terms();
    std::size_t                    spent = 0;
    std::vector<char>              idem(terms.size(), 0);  // 0 unknown
    for (std::size_t j = 0; j < terms.size(); ++j) {
      auto const& t2 = terms[j];
      auto sq = word_problem_equal(V, t2, Term::concat({t2, t2}));
      if (!sq.is_proved()) {
        continue;
      }
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (++spent > budget) {
          return std::nullopt;
        }
        auto const& t1 = terms[i];
        if (!word_problem_equal(V, t1, t2).is_proved()) {
          continue;
        }
        std::map<Symbol, Term> sub{{"x1", t1}, {"x2", t2}};
        for (auto const& pi : z_basis) {
          PseudoIdentity inst(substitute(pi.lhs, sub), substitute(pi.rhs, sub),
                              {"x", "y"});
          if (auto a = find_counterexample(S, inst)) {
            return PinWeilWitness{inst, t1, t2, *a};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<HomWitness> witness_homomorphism(FiniteSemigroup const& S,
                                                 ZClass                 Z,
                                                 Membership const&      V,
                                                 std::uint64_t max_congruences) {
    PseudovarietyDef const&   Zd = zclass_def(Z);
    std::optional<HomWitness> found;
    for_each_congruence(
        S,
        [&](Congruence const& c) {
          FiniteSemigroup Q = quotient(S, c);
          if (!V(Q)) {
            return true;
          }
          for (int f : idempotents(Q)) {
            std::vector<int> pre;
            for (int x = 0; x < S.order(); ++x) {
              if (c.class_of(x) == f) {
                pre.push_back(x);
              }
            }
            if (!member(subsemigroup(S, pre), Zd)) {
              return true;
            }
          }
          found = HomWitness{c, Q};
          return false;
        },
        max_congruences);
    return found;
  }

  bool ladder_member(FiniteSemigroup const& S, char family, int m) {
    if (m < 1 || (family != 'R' && family != 'L')) {
      throw PreconditionViolated("ladder needs family R or L and m >= 1");
    }
    if (m == 1) {
      return member(S, pseudovariety("Sl"));
    }
    char   other = family == 'R' ? 'L' : 'R';
    ZClass z     = family == 'R' ? ZClass::K : ZClass::D;
    return malcev_member(S, z, [&](FiniteSemigroup const& Q) {
      return ladder_member(Q, other, m - 1);
    });
  }

}  // namespace malcev
