#include "malcev/factorization.hpp"

#include <set>

#include "malcev/certifier.hpp"
#include "malcev/error.hpp"
#include "malcev/window.hpp"

namespace malcev {

  namespace {

    std::optional<Term> cat(std::optional<Term> const& a,
                            std::optional<Term> const& b) {
      if (!a) {
        return b;
      }
      if (!b) {
        return a;
      }
      return Term::concat({*a, *b});
    }

    std::optional<Term> cat_range(std::vector<Term> const& f,
                                  std::size_t              from,
                                  std::size_t              to) {
      if (from >= to) {
        return std::nullopt;
      }
      return Term::concat(
          std::vector<Term>(f.begin() + from, f.begin() + to));
    }

    // first letter completing C, scanning the left unfolding of t
    std::optional<LbfTerm> split(Term const&             t,
                                 std::set<Symbol>&       seen,
                                 std::set<Symbol> const& C) {
      switch (t.kind()) {
        case Term::Kind::Letter:
          if (seen.insert(t.symbol()).second && seen.size() == C.size()) {
            return LbfTerm{std::nullopt, t.symbol(), std::nullopt};
          }
          return std::nullopt;
        case Term::Kind::Concat: {
          auto const& f = t.factors();
          for (std::size_t i = 0; i < f.size(); ++i) {
            if (auto r = split(f[i], seen, C)) {
              return LbfTerm{cat(cat_range(f, 0, i), r->x), r->a,
                             cat(r->y, cat_range(f, i + 1, f.size()))};
            }
          }
          return std::nullopt;
        }
        default: {
          auto r = split(t.base(), seen, C);
          if (!r) {
            return std::nullopt;  // later copies add no letter
          }
          Exponent const&     e = t.exponent();
          std::optional<Term> rest;
          if (e.infinite()) {
            rest = Term::power(t.base(), e.plus(-1));
          } else if (e.q > 1) {
            rest = Term::power(t.base(), Exponent::finite(e.q - 1));
          }
          return LbfTerm{r->x, r->a, cat(r->y, rest)};
        }
      }
    }

    Term tail_blocks(Term const& t) {
      switch (t.kind()) {
        case Term::Kind::Letter:
          return Term::letter(block_letters(t.symbol()).back());
        case Term::Kind::Concat: {
          std::vector<Term> f;
          for (auto const& x : t.factors()) {
            f.push_back(tail_blocks(x));
          }
          return Term::concat(f);
        }
        default:
          return Term::power(tail_blocks(t.base()), t.exponent());
      }
    }

    Term r_norm(Term const& t) {
      return to_aperiodic(normal_form(to_aperiodic(t)));
    }

    struct REq {
      std::size_t                                 cap;
      std::size_t                                 steps = 0;
      std::set<std::pair<std::string, std::string>> assumed;

      Verdict run(std::optional<Term> const& a, std::optional<Term> const& b) {
        if (!a || !b) {
          return (!a && !b) ? Verdict::Proved : Verdict::Refuted;
        }
        Term na = r_norm(*a), nb = r_norm(*b);
        if (na == nb) {
          return Verdict::Proved;
        }
        if (content(na) != content(nb)) {
          return Verdict::Refuted;
        }
        if (na.is_finite() != nb.is_finite()) {
          return Verdict::Refuted;
        }
        if (na.is_finite()) {
          return expand(na) == expand(nb) ? Verdict::Proved
                                          : Verdict::Refuted;
        }
        if (!assumed.insert({na.str(), nb.str()}).second) {
          return Verdict::Proved;
        }
        if (++steps > cap) {
          return Verdict::Unknown;
        }
        auto la = lbf_term(na), lb = lbf_term(nb);
        if (la.a != lb.a) {
          return Verdict::Refuted;
        }
        Verdict vx = run(la.x, lb.x);
        if (vx == Verdict::Refuted) {
          return vx;
        }
        Verdict vy = run(la.y, lb.y);
        if (vy == Verdict::Refuted) {
          return vy;
        }
        return (vx == Verdict::Unknown || vy == Verdict::Unknown)
                   ? Verdict::Unknown
                   : Verdict::Proved;
      }
    };

  }  // namespace

  std::string to_string(IlbfOutcome o) {
    switch (o) {
      case IlbfOutcome::Finite:
        return "Finite";
      case IlbfOutcome::Infinite:
        return "Infinite";
      default:
        return "Unknown";
    }
  }

  LbfWord lbf(Word const& u) {
    if (u.empty()) {
      throw PreconditionViolated("lbf of the empty word");
    }
    auto             C = content(u);
    std::set<Symbol> seen;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (seen.insert(u[i]).second && seen.size() == C.size()) {
        return {Word(u.begin(), u.begin() + i), u[i],
                Word(u.begin() + i + 1, u.end())};
      }
    }
    throw Error("lbf: content never completed");
  }

  LbfTerm lbf_term(Term const& t) {
    auto             C = content(t);
    std::set<Symbol> seen;
    auto             r = split(t, seen, C);
    if (!r) {
      throw UnsupportedShape("lbf_term: no completing letter in " + t.str());
    }
    return *r;
  }

  IlbfWord ilbf(Word const& u) {
    IlbfWord out;
    auto     C = content(u);
    Word     r = u;
    while (true) {
      auto f = lbf(r);
      out.factors.push_back({f.x, f.a});
      r = f.y;
      if (r.empty() || content(r) != C) {
        break;
      }
    }
    out.outcome   = IlbfOutcome::Finite;
    out.remainder = r;
    return out;
  }

  IlbfTerm ilbf_term(Term const& t, std::size_t cap) {
    IlbfTerm              out;
    auto                  C = content(t);
    Term                  r = normal_form(t);
    std::set<std::string> sigs{normal_form(to_aperiodic(r)).str()};
    for (std::size_t step = 0; step < cap; ++step) {
      auto f = lbf_term(r);
      out.factors.push_back({f.x, f.a});
      if (!f.y || content(*f.y) != C) {
        out.outcome   = IlbfOutcome::Finite;
        out.remainder = f.y;
        return out;
      }
      r        = normal_form(*f.y);
      auto sig = normal_form(to_aperiodic(r)).str();
      if (!sigs.insert(sig).second) {
        out.outcome = IlbfOutcome::Infinite;
        out.cycle   = sig;
        return out;
      }
    }
    out.outcome = IlbfOutcome::Unknown;
    return out;
  }

  Word unphi_1(Word const& blocks) {
    Word out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto l = block_letters(blocks[i]);
      if (i == 0) {
        out.push_back(l.front());
      }
      out.push_back(l.back());
    }
    return out;
  }

  Term unphi_1(Term const& blocks) {
    Symbol first = beta_k(blocks, 1).front();
    return Term::concat(
        {Term::letter(block_letters(first).front()), tail_blocks(blocks)});
  }

  Ilbf2Word ilbf2(Word const& u) {
    if (u.size() < 2) {
      throw PreconditionViolated("ilbf2 needs length at least 2");
    }
    auto        f = ilbf(phi_k(u, 1).blocks);
    Ilbf2Word   out;
    std::size_t s = 0;
    for (auto const& [w, z] : f.factors) {
      std::size_t p = s + w.size();
      out.factors.emplace_back(u.begin() + s, u.begin() + p + 1);
      s = p + 1;
    }
    out.q = Word(u.begin() + s, u.end());
    return out;
  }

  Ilbf2Term ilbf2(Term const& t, std::size_t cap) {
    auto len = finite_length(t);
    if (len && *len < 2) {
      throw PreconditionViolated("ilbf2 needs length at least 2");
    }
    auto      phi = phi_k_term(t, 1);
    auto      f   = ilbf_term(*phi, cap);
    Ilbf2Term out;
    out.outcome = f.outcome;
    for (auto const& [w, z] : f.factors) {
      out.factors.push_back(w ? unphi_1(*w)
                              : Term::letter(block_letters(z).front()));
    }
    if (f.outcome == IlbfOutcome::Finite) {
      out.q = f.remainder ? unphi_1(*f.remainder)
                          : Term::letter(tau_k(t, 1).front());
    }
    return out;
  }

  ThreeValued ds_dk_regular(Term const& t, int k, std::size_t cap) {
    auto phi = phi_k_term(t, k);
    if (!phi) {
      throw PreconditionViolated("ds_dk_regular needs length above k");
    }
    auto f = ilbf_term(*phi, cap);
    switch (f.outcome) {
      case IlbfOutcome::Infinite:
        return ThreeValued::proved("infinite ilbf of Phi_k");
      case IlbfOutcome::Finite:
        return ThreeValued::refuted(
            {}, "ilbf of Phi_k has length " + std::to_string(f.length()));
      default:
        return ThreeValued::unknown("ilbf cap reached");
    }
  }

  ThreeValued r_equal(Term const& u, Term const& v, std::size_t cap) {
    REq     st{cap, 0, {}};
    Verdict r = st.run(u, v);
    switch (r) {
      case Verdict::Proved:
        return ThreeValued::proved("lbf recursion");
      case Verdict::Refuted:
        return ThreeValued::refuted({}, "lbf recursion");
      default:
        return ThreeValued::unknown("lbf recursion cap");
    }
  }

}  // namespace malcev
