#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "malcev/term.hpp"
#include "malcev/verdict.hpp"

namespace malcev {

  // u = x a y, a not in c(x), c(xa) = c(u)
  struct LbfWord {
    Word   x;
    Symbol a;
    Word   y;
  };

  struct LbfTerm {
    std::optional<Term> x;  // nullopt is the empty word
    Symbol              a;
    std::optional<Term> y;
  };

  LbfWord lbf(Word const& u);
  LbfTerm lbf_term(Term const& t);

  enum class IlbfOutcome { Finite, Infinite, Unknown };
  std::string to_string(IlbfOutcome o);

  template <typename T>
  struct IlbfResult {
    IlbfOutcome                            outcome = IlbfOutcome::Unknown;
    std::vector<std::pair<T, Symbol>>      factors;  // (u_i, a_i); T empty allowed
    T                                      remainder{};
    std::string                            cycle;  // recurring signature
    std::size_t length() const {
      return factors.size();
    }
  };

  using IlbfWord = IlbfResult<Word>;
  using IlbfTerm = IlbfResult<std::optional<Term>>;

  IlbfWord ilbf(Word const& u);
  // factors found before the cycle or cap are kept
  IlbfTerm ilbf_term(Term const& t, std::size_t cap = 1000);

  // ilbf of Phi_1(u) pulled back to factors of u
  struct Ilbf2Word {
    std::vector<Word> factors;
    Word              q;
  };
  struct Ilbf2Term {
    IlbfOutcome       outcome = IlbfOutcome::Unknown;
    std::vector<Term> factors;
    std::optional<Term> q;  // nullopt when infinite
  };

  Ilbf2Word ilbf2(Word const& u);
  Ilbf2Term ilbf2(Term const& t, std::size_t cap = 1000);

  // first letter, then the last letter of each block
  Word unphi_1(Word const& blocks);
  Term unphi_1(Term const& blocks);

  // Proved iff ilbf(Phi_k(t)) is infinite
  ThreeValued ds_dk_regular(Term const& t, int k, std::size_t cap = 1000);

  // equality over R through recursive lbf comparison
  ThreeValued r_equal(Term const& u, Term const& v, std::size_t cap = 2000);

}  // namespace malcev
