#include "malcev/window.hpp"

#include <algorithm>
#include <deque>

#include "malcev/error.hpp"

namespace malcev {

  namespace {

    using OT = std::optional<Term>;

    OT cat(OT const& a, OT const& b) {
      if (!a) {
        return b;
      }
      if (!b) {
        return a;
      }
      return Term::concat({*a, *b});
    }

    Word join(Word a, Word const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }

    // floor division for possibly negative numerators
    std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
    }

    struct Phi {
      int k;

      OT word(Word const& w) const {
        auto b = phi_k(w, k).blocks;
        if (b.empty()) {
          return std::nullopt;
        }
        return Term::word(b);
      }

      // Phi(t w) = Phi(t) Phi(tau_k(t) w)
      OT with_suffix(Term const& t, Word const& w) const {
        if (w.empty()) {
          return of(t);
        }
        return cat(of(t), word(join(tau_k(t, k), w)));
      }

      OT of(Term const& t) const {
        if (t.is_finite()) {
          return word(expand(t, 1'000'000));
        }
        if (t.kind() == Term::Kind::Concat) {
          auto const& f = t.factors();
          Term        rest =
              Term::concat(std::vector<Term>(f.begin() + 1, f.end()));
          // Phi(uv) = Phi(u beta_k(v)) Phi(v)
          return cat(with_suffix(f[0], beta_k(rest, k)), of(rest));
        }
        Term const&     b   = t.base();
        Exponent const& e   = t.exponent();
        auto            len = finite_length(b);
        if (e.infinite() && len && *len < static_cast<std::uint64_t>(k)) {
          if (e.kind == Exponent::Kind::PrimeOmega) {
            throw UnsupportedShape("p^w power of a base shorter than k");
          }
          // b^(w+q) = (b^j)^(w+s) b^r with q = js + r, 1 <= r <= j
          std::int64_t j =
              (k + static_cast<std::int64_t>(*len) - 1)
              / static_cast<std::int64_t>(*len);
          std::int64_t s = floor_div(e.q - 1, j);
          std::int64_t r = e.q - j * s;
          Term         bj = Term::power(b, Exponent::finite(j));
          return of(Term::concat({Term::power(bj, Exponent::omega(s)),
                                  Term::power(b, Exponent::finite(r))}));
        }
        // Phi(u^E) = Phi(u beta_k(u))^(E-1) Phi(u)
        OT step = with_suffix(b, beta_k(b, k));
        if (!e.infinite() && e.q == 1) {
          return of(b);
        }
        Exponent e1 = e.infinite() ? e.plus(-1) : Exponent::finite(e.q - 1);
        return cat(Term::power(*step, e1), of(b));
      }
    };

    enum class KeyKind { Trivial, Sl, K, D, N };

    struct KeyOps {
      KeyKind     kind;
      std::size_t m = 0;

      explicit KeyOps(PseudovarietyDef const& V) : m(V.wp_param) {
        switch (V.word_problem) {
          case WordProblem::Trivial:
            kind = KeyKind::Trivial;
            break;
          case WordProblem::SlContent:
            kind = KeyKind::Sl;
            break;
          case WordProblem::KmPrefix:
            kind = KeyKind::K;
            break;
          case WordProblem::DmSuffix:
            kind = KeyKind::D;
            break;
          case WordProblem::NmZero:
            kind = KeyKind::N;
            break;
          default:
            throw UnsupportedShape(V.name + " has no finite free object here");
        }
      }

      VKey norm(Word w) const {
        switch (kind) {
          case KeyKind::Trivial:
            return {};
          case KeyKind::Sl:
            std::sort(w.begin(), w.end());
            w.erase(std::unique(w.begin(), w.end()), w.end());
            return {false, w};
          case KeyKind::K:
            return {false, beta_k(w, m)};
          case KeyKind::D:
            return {false, tau_k(w, m)};
          default:
            if (w.size() >= m) {
              return {true, {}};
            }
            return {false, w};
        }
      }

      VKey mul(VKey const& a, VKey const& b) const {
        if (a.zero || b.zero) {
          return {true, {}};
        }
        return norm(join(a.w, b.w));
      }
    };

    DkElement image_of(KeyOps const& ops, int k, Word const& u) {
      if (u.size() <= static_cast<std::size_t>(k)) {
        return {true, u, {}, {}};
      }
      return {false, beta_k(u, k), tau_k(u, k), ops.norm(phi_k(u, k).blocks)};
    }

    DkElement mul(KeyOps const& ops, int k, DkElement const& a,
                  DkElement const& b) {
      if (a.is_short && b.is_short) {
        return image_of(ops, k, join(a.prefix, b.prefix));
      }
      if (a.is_short) {
        Word wp = join(a.prefix, b.prefix);
        return {false, beta_k(wp, k), b.suffix,
                ops.mul(ops.norm(phi_k(wp, k).blocks), b.value)};
      }
      if (b.is_short) {
        Word sw = join(a.suffix, b.prefix);
        return {false, a.prefix, tau_k(sw, k),
                ops.mul(a.value, ops.norm(phi_k(sw, k).blocks))};
      }
      Word mid = join(a.suffix, b.prefix);
      return {false, a.prefix, b.suffix,
              ops.mul(ops.mul(a.value, ops.norm(phi_k(mid, k).blocks)),
                      b.value)};
    }

  }  // namespace

  bool WindowWord::well_formed() const {
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      auto a = block_letters(blocks[i]), b = block_letters(blocks[i + 1]);
      if (a.size() != static_cast<std::size_t>(k + 1)
          || !std::equal(a.begin() + 1, a.end(), b.begin(), b.end() - 1)) {
        return false;
      }
    }
    return true;
  }

  WindowWord phi_k(Word const& u, int k) {
    WindowWord out{k, {}};
    if (u.size() <= static_cast<std::size_t>(k)) {
      return out;
    }
    for (std::size_t i = 0; i + k < u.size(); ++i) {
      out.blocks.push_back(
          make_block(Word(u.begin() + i, u.begin() + i + k + 1)));
    }
    return out;
  }

  std::optional<Term> phi_k_term(Term const& t, int k) {
    if (k < 1) {
      throw PreconditionViolated("k must be positive");
    }
    return Phi{k}.of(t);
  }

  std::set<Symbol> c_k1(Word const& u, int k) {
    auto b = phi_k(u, k).blocks;
    return {b.begin(), b.end()};
  }

  std::set<Symbol> c_k1(Term const& t, int k) {
    auto p = phi_k_term(t, k);
    return p ? content(*p) : std::set<Symbol>{};
  }

  ThreeValued vdk_satisfies(PseudovarietyDef const&   V,
                            int                       k,
                            Term const&               u,
                            Term const&               v,
                            VdkPolicy                 policy,
                            WordProblemOptions const& opt) {
    bool exact = V.has_nontrivial_monoid;
    if (!exact && policy == VdkPolicy::Strict) {
      throw PreconditionViolated(V.name + " has no nontrivial monoid");
    }
    std::size_t kk = static_cast<std::size_t>(k);
    if (tau_k(u, kk) != tau_k(v, kk)) {
      return ThreeValued::refuted({}, "tau_k differ");
    }
    if (beta_k(u, kk) != beta_k(v, kk)) {
      return exact ? ThreeValued::refuted({}, "beta_k differ")
                   : ThreeValued::unknown("beta_k differ");
    }
    auto pu = phi_k_term(u, k), pv = phi_k_term(v, k);
    if (!pu || !pv) {
      if (!pu && !pv) {
        return ThreeValued::proved("both Phi_k images are the unit");
      }
      return exact ? ThreeValued::refuted({}, "unit against non-unit")
                   : ThreeValued::unknown("unit against non-unit");
    }
    auto w = word_problem_equal(V, *pu, *pv, opt);
    if (!exact && !w.is_proved()) {
      return ThreeValued::unknown("sufficient condition only");
    }
    w.witness.reset();
    w.note = "Phi_" + std::to_string(k) + " over " + V.name + ": " + w.note;
    return w;
  }

  ThreeValued vdk_satisfies(PseudovarietyDef const& V,
                            int                     k,
                            Word const&             u,
                            Word const&             v,
                            VdkPolicy               policy) {
    return vdk_satisfies(V, k, Term::word(u), Term::word(v), policy);
  }

  DkElement dk_image(PseudovarietyDef const& V, int k, Word const& u) {
    return image_of(KeyOps(V), k, u);
  }

  int FreeDkObject::image(Word const& u) const {
    if (u.empty()) {
      throw PreconditionViolated("empty word has no image");
    }
    auto letter = [&](Symbol const& s) {
      auto it = std::find(alphabet.begin(), alphabet.end(), s);
      if (it == alphabet.end()) {
        throw UnboundLetter(s);
      }
      return static_cast<int>(it - alphabet.begin());
    };
    int x = letter(u[0]);
    for (std::size_t i = 1; i < u.size(); ++i) {
      x = semigroup.mul(x, letter(u[i]));
    }
    return x;
  }

  std::string FreeDkObject::describe(int e) const {
    auto const& x = elements.at(e);
    if (x.is_short) {
      return to_string(x.prefix);
    }
    std::string v = x.value.zero ? "0" : "{" + to_string(x.value.w) + "}";
    return "(" + to_string(x.prefix) + "," + to_string(x.suffix) + "," + v
           + ")";
  }

  FreeDkObject free_object_vdk(PseudovarietyDef const& V,
                               Word const&             alphabet,
                               int                     k,
                               std::size_t             max_elements) {
    if (alphabet.empty() || alphabet.size() > 3 || k < 1 || k > 2) {
      throw PreconditionViolated("free_object_vdk needs |A| <= 3, k <= 2");
    }
    KeyOps       ops(V);
    FreeDkObject F;
    F.k        = k;
    F.V        = V.name;
    F.alphabet = alphabet;
    auto add   = [&](DkElement const& e) {
      auto [it, fresh] =
          F.index.emplace(e, static_cast<int>(F.elements.size()));
      if (fresh) {
        F.elements.push_back(e);
        if (F.elements.size() > max_elements) {
          throw BudgetExceeded("free object exceeds "
                               + std::to_string(max_elements) + " elements");
        }
      }
      return it->second;
    };
    for (auto const& a : alphabet) {
      add(image_of(ops, k, {a}));
    }
    int g = static_cast<int>(alphabet.size());
    for (std::size_t i = 0; i < F.elements.size(); ++i) {
      for (int j = 0; j < g; ++j) {
        add(mul(ops, k, F.elements[i], F.elements[j]));
      }
    }
    int              n = static_cast<int>(F.elements.size());
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        flat[static_cast<std::size_t>(x) * n + y] =
            F.index.at(mul(ops, k, F.elements[x], F.elements[y]));
      }
    }
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
      labels.push_back(F.describe(x));
    }
    std::vector<int> gens(g);
    for (int j = 0; j < g; ++j) {
      gens[j] = j;
    }
    F.semigroup = FiniteSemigroup::trusted(n, std::move(flat),
                                           std::move(labels), gens);
    return F;
  }

  bool member_vdk(FiniteSemigroup const&  S,
                  PseudovarietyDef const& V,
                  int                     k,
                  SearchBudget            budget) {
    auto gens = minimal_generating_set(S);
    int  r    = static_cast<int>(gens.size());
    Word alphabet;
    for (int i = 0; i < r; ++i) {
      alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    auto               F = free_object_vdk(V, alphabet, k);
    int                n = F.semigroup.order();
    int                m = S.order();
    std::vector<int>   assign(r, 0);
    std::uint64_t      steps = 0;
    while (true) {
      std::vector<int> phi(n, -1);
      for (int i = 0; i < r; ++i) {
        phi[i] = assign[i];
      }
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        for (int i = 0; i < r && ok; ++i) {
          if (++steps > budget.max_steps) {
            throw BudgetExceeded("member_vdk search");
          }
          int y = F.semigroup.mul(x, i);
          int s = S.mul(phi[x], assign[i]);
          if (phi[y] < 0) {
            phi[y] = s;
          } else {
            ok = phi[y] == s;
          }
        }
      }
      if (ok) {
        std::vector<bool> hit(m, false);
        int               cnt = 0;
        for (int x : phi) {
          if (!hit[x]) {
            hit[x] = true;
            ++cnt;
          }
        }
        if (cnt == m) {
          return true;
        }
      }
      int i = 0;
      while (i < r && ++assign[i] == m) {
        assign[i++] = 0;
      }
      if (i == r) {
        return false;
      }
    }
  }

}  // namespace malcev
