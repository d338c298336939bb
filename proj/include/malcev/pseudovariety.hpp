#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malcev/semigroup.hpp"
#include "malcev/term.hpp"
#include "malcev/verdict.hpp"

namespace malcev {

  enum class WordProblem {
    None,
    Trivial,
    SlContent,
    KPrefix,
    DSuffix,
    NFinite,
    GFreeGroup,
    RLbf,
    LLbf,     // R on reversed terms
    KmPrefix,  // K_m: beta_m
    DmSuffix,  // D_m: tau_m
    NmZero,    // N_m: words shorter than m, else zero
  };

  std::string                to_string(WordProblem w);
  std::optional<WordProblem> word_problem_from_string(std::string const& s);

  struct PseudovarietyDef {
    std::string                 name;
    std::vector<PseudoIdentity> basis;
    WordProblem                 word_problem = WordProblem::None;
    int                         wp_param     = 0;  // m for the _m variants
    std::optional<std::string>  dual_of;
    bool                        monoidal              = false;
    bool                        has_nontrivial_monoid = true;
    bool                        locally_finite        = false;
  };

  // I, Sl, K, D, N, KvG, DvG, NvG, LI, LG, LG_p, A, G, G_p, R, L, J, DS,
  // DA, DG, D_k, K_k, N_k (k <= 4); the forms K∨G etc. are accepted too
  PseudovarietyDef const&  pseudovariety(std::string const& name);
  std::vector<std::string> pseudovariety_names();

  bool member(FiniteSemigroup const& S, PseudovarietyDef const& V);
  // first basis identity S fails, with the assignment
  std::optional<Counterexample> member_witness(FiniteSemigroup const&  S,
                                               PseudovarietyDef const& V);

  struct WordProblemOptions {
    bool        want_witness = false;  // search corpus members of V
    std::size_t cap          = 2000;   // R_LBF recursion budget
  };

  // V ⊨ u = v; Unknown when V has no word problem or it is incomplete
  ThreeValued word_problem_equal(PseudovarietyDef const& V,
                                 Term const&             u,
                                 Term const&             v,
                                 WordProblemOptions const& opt = {});

  // x1, x2 only; WrongAlphabet otherwise
  ThreeValued is_left_permanent(PseudoIdentity const& pi);
  ThreeValued is_right_permanent(PseudoIdentity const& pi);
  ThreeValued is_permanent(PseudoIdentity const& pi);

  PseudovarietyDef dual_pseudovariety(PseudovarietyDef const& V);

  PseudoIdentity reverse_chi(PseudoIdentity const& pi);

}  // namespace malcev
