#pragma once

#include <cstddef>
#include <optional>

#include "malcev/term.hpp"
#include "malcev/verdict.hpp"

namespace malcev {

  struct CertifierOptions {
    std::size_t max_nodes     = 400;  // search nodes per side
    std::size_t max_term_size = 120;  // node_count cap during search
    bool        model_check   = true;
    int         max_order     = 4;  // corpus orders used for refutation
  };

  // Rewrites with rules valid in every finite semigroup: exponent merges,
  // idempotent absorption, conjugation to the left, power of a power,
  // small finite powers expanded.
  Term normal_form(Term const& t);

  // t is e^w for some e, after normal_form
  bool certified_idempotent(Term const& t);

  // first corpus semigroup (orders <= max_order) and assignment refuting u=v
  std::optional<Counterexample> model_check(Term const& u,
                                            Term const& v,
                                            int         max_order = 4);

  // Proved only through the rewriting rules; never Refuted
  ThreeValued certify_equal(Term const&             u,
                            Term const&             v,
                            CertifierOptions const& opt = {});

  ThreeValued proves_equal_over_S(Term const&             u,
                                  Term const&             v,
                                  CertifierOptions const& opt = {});

}  // namespace malcev
