#include "malcev/certifier.hpp"

#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "malcev/corpus.hpp"
#include "malcev/evaluate.hpp"

namespace malcev {

  namespace {

    using K = Exponent::Kind;

    constexpr std::size_t kExpandCap = 48;

    bool is_power(Term const& t) {
      return t.kind() == Term::Kind::Power;
    }

    bool infinite_power(Term const& t) {
      return is_power(t) && t.exponent().infinite();
    }

    // x^a x^b
    std::optional<Exponent> add(Exponent const& a, Exponent const& b) {
      if (!a.infinite() && !b.infinite()) {
        return std::nullopt;
      }
      if (!a.infinite()) {
        return b.plus(a.q);
      }
      if (!b.infinite()) {
        return a.plus(b.q);
      }
      if (a.kind == K::Omega && b.kind == K::Omega) {
        return Exponent::omega(a.q + b.q);
      }
      if (a.kind == K::PrimeOmega && b.kind == K::Omega) {
        return a.plus(b.q);
      }
      if (a.kind == K::Omega && b.kind == K::PrimeOmega) {
        return b.plus(a.q);
      }
      return std::nullopt;
    }

    Term nf_concat(std::vector<Term> in);
    Term nf(Term const& t);

    // smallest d < |s| with s = (s[0..d))^(|s|/d)
    std::size_t root_length(std::vector<Term> const& s) {
      std::size_t n = s.size();
      for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) {
          ok = s[i] == s[i - d];
        }
        if (ok) {
          return d;
        }
      }
      return n;
    }

    // b is in normal form
    Term simplify_power(Term const& b, Exponent const& e) {
      if (!e.infinite() && e.q == 1) {
        return b;
      }
      if (certified_idempotent(b)) {
        return b;
      }
      if (is_power(b)) {
        Term const&     c = b.base();
        Exponent const& f = b.exponent();
        if (f.infinite()) {
          if (e.kind == K::Omega && e.q == 0) {
            return simplify_power(c, Exponent::omega());
          }
          if (f.kind == K::Omega) {
            std::int64_t k = e.infinite() ? (e.kind == K::Omega ? e.q : 0)
                                          : e.q;
            if (e.kind != K::PrimeOmega) {
              return Term::power(c, Exponent::omega(f.q * k));
            }
          }
          if (f.kind == K::PrimeOmega && f.q == 0 && e.kind == K::PrimeOmega
              && e.p == f.p && e.q == 0) {
            return b;
          }
        } else {
          if (!e.infinite() && f.q < (std::int64_t(1) << 30)
              && e.q < (std::int64_t(1) << 30)) {
            return simplify_power(c, Exponent::finite(f.q * e.q));
          }
          if (e.kind == K::Omega) {
            return Term::power(c, Exponent::omega(f.q * e.q));
          }
        }
      }
      if (e.kind == K::Omega) {
        auto        s = items(b);
        std::size_t d = root_length(s);
        if (d < s.size()) {
          std::int64_t m = static_cast<std::int64_t>(s.size() / d);
          Term         root =
              nf_concat(std::vector<Term>(s.begin(), s.begin() + d));
          return simplify_power(root, Exponent::omega(m * e.q));
        }
      }
      if (!e.infinite()
          && static_cast<std::size_t>(e.q) * b.node_count() <= kExpandCap) {
        std::vector<Term> rep;
        for (std::int64_t i = 0; i < e.q; ++i) {
          rep.push_back(b);
        }
        return nf_concat(std::move(rep));
      }
      return Term::power(b, e);
    }

    // merge two adjacent normal-form items into one, if a rule applies
    std::optional<Term> merge(Term const& a, Term const& b) {
      std::vector<std::pair<Term, Exponent>> va{{a, Exponent::finite(1)}};
      std::vector<std::pair<Term, Exponent>> vb{{b, Exponent::finite(1)}};
      if (is_power(a)) {
        va.push_back({a.base(), a.exponent()});
      }
      if (is_power(b)) {
        vb.push_back({b.base(), b.exponent()});
      }
      for (auto const& [ba, ea] : va) {
        for (auto const& [bb, eb] : vb) {
          if (ba != bb) {
            continue;
          }
          if (auto s = add(ea, eb)) {
            return simplify_power(ba, *s);
          }
          if (certified_idempotent(ba) && ea == Exponent::finite(1)
              && eb == Exponent::finite(1)) {
            return ba;
          }
        }
      }
      return std::nullopt;
    }

    bool equal_range(std::vector<Term> const& v,
                     std::size_t              at,
                     std::vector<Term> const& s) {
      if (at + s.size() > v.size()) {
        return false;
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (v[at + i] != s[i]) {
          return false;
        }
      }
      return true;
    }

    void splice(std::vector<Term>& v,
                std::size_t        from,
                std::size_t        to,
                Term const&        t) {
      auto it = items(t);
      v.erase(v.begin() + from, v.begin() + to);
      v.insert(v.begin() + from, it.begin(), it.end());
    }

    bool step(std::vector<Term>& v) {
      std::size_t n = v.size();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (auto m = merge(v[i], v[i + 1])) {
          splice(v, i, i + 2, *m);
          return true;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!infinite_power(v[i])) {
          continue;
        }
        auto s = items(v[i].base());
        if (s.size() < 2) {
          continue;
        }
        Exponent e1 = v[i].exponent().plus(1);
        if (equal_range(v, i + 1, s)) {
          splice(v, i, i + 1 + s.size(), simplify_power(v[i].base(), e1));
          return true;
        }
        if (i >= s.size() && equal_range(v, i - s.size(), s)) {
          splice(v, i - s.size(), i + 1, simplify_power(v[i].base(), e1));
          return true;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!certified_idempotent(v[i])) {
          continue;
        }
        if (i + 1 < n && is_power(v[i + 1])
            && items(v[i + 1].base()).front() == v[i]) {
          v.erase(v.begin() + i);
          return true;
        }
        if (i > 0 && is_power(v[i - 1])
            && items(v[i - 1].base()).back() == v[i]) {
          v.erase(v.begin() + i);
          return true;
        }
      }
      for (std::size_t i = 1; i < n; ++i) {
        if (!infinite_power(v[i])) {
          continue;
        }
        auto s = items(v[i].base());
        if (s.size() < 2 || v[i - 1] != s.back()) {
          continue;
        }
        std::vector<Term> rot{s.back()};
        rot.insert(rot.end(), s.begin(), s.end() - 1);
        Term p = simplify_power(nf_concat(rot), v[i].exponent());
        Term last = s.back();
        v.erase(v.begin() + i - 1, v.begin() + i + 1);
        auto pi = items(p);
        pi.push_back(last);
        v.insert(v.begin() + i - 1, pi.begin(), pi.end());
        return true;
      }
      return false;
    }

    Term nf_concat(std::vector<Term> in) {
      std::vector<Term> v;
      for (auto const& t : in) {
        auto it = items(t);
        v.insert(v.end(), it.begin(), it.end());
      }
      for (int guard = 0; guard < 10000 && step(v); ++guard) {
      }
      return Term::concat(v);
    }

    Term nf(Term const& t) {
      switch (t.kind()) {
        case Term::Kind::Letter:
          return t;
        case Term::Kind::Concat: {
          std::vector<Term> f;
          for (auto const& x : t.factors()) {
            f.push_back(nf(x));
          }
          return nf_concat(std::move(f));
        }
        default:
          return simplify_power(nf(t.base()), t.exponent());
      }
    }

    // single raw steps, both directions, used by the search
    void variants(Term const& t, std::vector<Term>& out) {
      switch (t.kind()) {
        case Term::Kind::Letter:
          return;
        case Term::Kind::Power: {
          Term const&     b = t.base();
          Exponent const& e = t.exponent();
          std::vector<Term> vb;
          variants(b, vb);
          for (auto const& x : vb) {
            out.push_back(Term::power(x, e));
          }
          if (e.infinite()) {
            Term rest = Term::power(b, e.plus(-1));
            out.push_back(Term::concat({b, rest}));
            out.push_back(Term::concat({rest, b}));
            auto s = items(b);
            if (s.size() >= 2) {
              std::vector<Term> rot(s.begin() + 1, s.end());
              rot.push_back(s.front());
              out.push_back(
                  Term::concat({s.front(), Term::power(Term::concat(rot), e)}));
            }
          }
          if (certified_idempotent(t)) {
            out.push_back(Term::concat({t, t}));
          }
          return;
        }
        default: {
          auto const& f = t.factors();
          for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<Term> vi;
            variants(f[i], vi);
            for (auto const& x : vi) {
              auto g = f;
              g[i]   = x;
              out.push_back(Term::concat(g));
            }
          }
          for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            if (auto m = merge(nf(f[i]), nf(f[i + 1]))) {
              auto g = f;
              g.erase(g.begin() + i, g.begin() + i + 2);
              g.insert(g.begin() + i, *m);
              out.push_back(Term::concat(g));
            }
          }
          return;
        }
      }
    }

    struct Side {
      std::deque<Term>                 queue;
      std::unordered_set<std::string>  seen;
      std::unordered_set<std::string>  normal;
    };

  }  // namespace

  bool certified_idempotent(Term const& t) {
    return is_power(t) && t.exponent().kind == K::Omega
           && t.exponent().q == 0;
  }

  Term normal_form(Term const& t) {
    return nf(t);
  }

  std::optional<Counterexample> model_check(Term const& u,
                                            Term const& v,
                                            int         max_order) {
    std::set<Symbol> letters = content(u);
    for (auto const& s : content(v)) {
      letters.insert(s);
    }
    PseudoIdentity pi(u, v, sorted_symbols(letters));
    for (auto const& e : corpus(std::min(max_order, 4))) {
      if (auto a = find_counterexample(e.semigroup, pi)) {
        return Counterexample{e.semigroup, *a, pi};
      }
    }
    return std::nullopt;
  }

  ThreeValued certify_equal(Term const&             u,
                            Term const&             v,
                            CertifierOptions const& opt) {
    Term nu = nf(u), nv = nf(v);
    if (nu == nv) {
      return ThreeValued::proved("normal form");
    }
    Side sides[2];
    sides[0].queue.push_back(u);
    sides[0].seen.insert(u.str());
    sides[0].normal.insert(nu.str());
    sides[1].queue.push_back(v);
    sides[1].seen.insert(v.str());
    sides[1].normal.insert(nv.str());
    std::size_t expanded[2] = {0, 0};
    while (true) {
      int k = -1;
      for (int s = 0; s < 2; ++s) {
        if (!sides[s].queue.empty() && expanded[s] < opt.max_nodes
            && (k < 0 || expanded[s] < expanded[k])) {
          k = s;
        }
      }
      if (k < 0) {
        break;
      }
      Side& me    = sides[k];
      Side& other = sides[1 - k];
      Term  t     = me.queue.front();
      me.queue.pop_front();
      ++expanded[k];
      std::vector<Term> out;
      variants(t, out);
      for (auto const& x : out) {
        if (x.node_count() > opt.max_term_size
            || !me.seen.insert(x.str()).second) {
          continue;
        }
        Term nx = nf(x);
        if (other.normal.count(nx.str()) || other.seen.count(x.str())) {
          return ThreeValued::proved("rewrite search");
        }
        me.normal.insert(nx.str());
        me.queue.push_back(x);
      }
    }
    return ThreeValued::unknown("rewrite search exhausted");
  }

  ThreeValued proves_equal_over_S(Term const&             u,
                                  Term const&             v,
                                  CertifierOptions const& opt) {
    if (nf(u) == nf(v)) {
      return ThreeValued::proved("normal form");
    }
    if (opt.model_check) {
      if (auto ce = model_check(u, v, opt.max_order)) {
        return ThreeValued::refuted(std::move(ce), "model check");
      }
    }
    return certify_equal(u, v, opt);
  }

}  // namespace malcev
