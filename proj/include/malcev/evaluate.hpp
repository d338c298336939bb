#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "malcev/error.hpp"
#include "malcev/semigroup.hpp"
#include "malcev/term.hpp"

namespace malcev {

  // residue mod r of the limit exponent, p^{n!} stabilised as n grows
  std::int64_t prime_omega_residue(std::int64_t p, std::int64_t r);

  // the exponent N >= max(index,1) that e denotes on a cyclic
  // subsemigroup with the given index and period
  std::int64_t concrete_exponent(Exponent const& e,
                                 std::int64_t    index,
                                 std::int64_t    period);

  // Evaluation over any semigroup given by a multiplication on values.
  template <typename Elem, typename Mul>
  class Evaluator {
   public:
    using Assignment = std::function<Elem(Symbol const&)>;

    explicit Evaluator(Mul mul) : mul_(std::move(mul)) {}

    Elem pow(Elem const& x, Exponent const& e) const {
      if (!e.infinite() && e.q == 1) {
        return x;
      }
      std::vector<Elem>    seq{x};
      std::map<Elem, int>  pos{{x, 0}};
      std::int64_t         m, r;
      while (true) {
        Elem nx = mul_(seq.back(), x);
        auto it = pos.find(nx);
        if (it != pos.end()) {
          m = it->second + 1;
          r = static_cast<std::int64_t>(seq.size()) + 1 - m;
          break;
        }
        pos.emplace(nx, static_cast<int>(seq.size()));
        seq.push_back(nx);
        if (!e.infinite() && static_cast<std::int64_t>(seq.size()) >= e.q) {
          return seq[e.q - 1];
        }
      }
      std::int64_t n = e.infinite() ? concrete_exponent(e, m, r) : e.q;
      if (n > m) {
        n = m + (n - m) % r;
      }
      return seq[n - 1];
    }

    Elem operator()(Term const& t, Assignment const& a) const {
      switch (t.kind()) {
        case Term::Kind::Letter:
          return a(t.symbol());
        case Term::Kind::Concat: {
          auto const& f = t.factors();
          Elem        v = (*this)(f[0], a);
          for (size_t i = 1; i < f.size(); ++i) {
            v = mul_(v, (*this)(f[i], a));
          }
          return v;
        }
        default:
          return pow((*this)(t.base(), a), t.exponent());
      }
    }

   private:
    Mul mul_;
  };

  using Assignment = std::map<Symbol, int>;

  int evaluate(Term const& t, FiniteSemigroup const& S, Assignment const& a);

  // a term compiled against a fixed letter order, for repeated evaluation
  class CompiledTerm {
   public:
    CompiledTerm(Term const& t, std::vector<Symbol> const& letters);
    int evaluate(FiniteSemigroup const& S, std::vector<int> const& a) const;

   private:
    struct Op {
      int      kind;  // 0 letter, 1 concat, 2 power
      int      arg;   // letter index or child count
      Exponent exp;
    };
    std::vector<Op> ops_;  // postfix
  };

  // first assignment refuting pi (over pi.alphabet), if any
  std::optional<Assignment> find_counterexample(FiniteSemigroup const& S,
                                                PseudoIdentity const&  pi);
  bool satisfies(FiniteSemigroup const& S, PseudoIdentity const& pi);

}  // namespace malcev
