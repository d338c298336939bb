#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "malcev/pseudovariety.hpp"
#include "malcev/semigroup.hpp"
#include "malcev/term.hpp"
#include "malcev/verdict.hpp"

namespace malcev {

  // Phi_k(u): the consecutive (k+1)-factors of u as block symbols
  struct WindowWord {
    int  k = 1;
    Word blocks;  // empty is the unit

    // suffix_k of each block is prefix_k of the next
    bool well_formed() const;
  };

  WindowWord phi_k(Word const& u, int k);
  // nullopt is the unit; UnsupportedShape for p^w over a short base
  std::optional<Term> phi_k_term(Term const& t, int k);

  std::set<Symbol> c_k1(Word const& u, int k);
  std::set<Symbol> c_k1(Term const& t, int k);

  enum class VdkPolicy {
    Strict,          // PreconditionViolated without a nontrivial monoid
    SufficientOnly,  // then Proved on equal triples, otherwise Unknown
  };

  ThreeValued vdk_satisfies(PseudovarietyDef const&   V,
                            int                       k,
                            Term const&               u,
                            Term const&               v,
                            VdkPolicy                 policy = VdkPolicy::Strict,
                            WordProblemOptions const& opt    = {});
  ThreeValued vdk_satisfies(PseudovarietyDef const& V,
                            int                     k,
                            Word const&             u,
                            Word const&             v,
                            VdkPolicy               policy = VdkPolicy::Strict);

  // element of the finite V-free object over blocks
  struct VKey {
    bool zero = false;
    Word w;
    auto operator<=>(VKey const&) const = default;
  };

  struct DkElement {
    bool is_short = false;
    Word prefix;  // the word itself when short
    Word suffix;
    VKey value;
    auto operator<=>(DkElement const&) const = default;
  };

  struct FreeDkObject {
    int                    k = 1;
    std::string            V;
    Word                   alphabet;
    std::vector<DkElement> elements;
    std::map<DkElement, int> index;
    FiniteSemigroup        semigroup;

    int         image(Word const& u) const;
    std::string describe(int e) const;
  };

  // V in {I, Sl, K_m, D_m, N_m}; |A| <= 3, k <= 2
  FreeDkObject free_object_vdk(PseudovarietyDef const& V,
                               Word const&             alphabet,
                               int                     k,
                               std::size_t             max_elements = 20000);

  // direct triple image of a word
  DkElement dk_image(PseudovarietyDef const& V, int k, Word const& u);

  // S is a quotient of the free object on rank(S) generators
  bool member_vdk(FiniteSemigroup const&  S,
                  PseudovarietyDef const& V,
                  int                     k,
                  SearchBudget            budget = {});

}  // namespace malcev
