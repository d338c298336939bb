#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "malcev/pseudovariety.hpp"
#include "malcev/semigroup.hpp"
#include "malcev/term.hpp"

namespace malcev {

  // complete deterministic automaton; letters are symbols
  struct Dfa {
    int                           states = 0;
    std::vector<Symbol>           alphabet;
    std::vector<std::vector<int>> delta;  // delta[state][letter index]
    int                           initial = 0;
    std::vector<bool>             finals;

    // PreconditionViolated on a malformed table
    void validate() const;
    int  letter(Symbol const& a) const;  // UnboundLetter if absent
    int  run(int from, Word const& w) const;
    bool accepts(Word const& w) const;
    bool operator==(Dfa const&) const = default;
  };

  // concatenation, |, *, +, parentheses, letters and digits
  Dfa parse_regex(std::string_view text, std::vector<Symbol> alphabet = {});

  // reachable part, Moore refinement, states renumbered in BFS order
  Dfa  minimize(Dfa const& d);
  bool is_empty(Dfa const& d);
  bool equivalent(Dfa const& a, Dfa const& b);
  // same language without the empty word
  Dfa  plus_part(Dfa const& d);

  struct SyntacticSemigroup {
    FiniteSemigroup               semigroup;
    std::vector<std::vector<int>> maps;  // state maps, one per element
    std::vector<int>              letter_element;
    std::vector<bool>             accepting;  // elements mapping initial into F
    int                           initial_state = 0;
    std::vector<Symbol>           alphabet;

    int eval(Word const& w) const;
  };

  // transition semigroup of the minimal automaton of L minus the empty word
  SyntacticSemigroup syntactic_semigroup(Dfa const& d);

  // L1 a L2
  Dfa marked_product(Dfa const& L1, Symbol const& a, Dfa const& L2);

  // L1 a is a prefix code
  bool is_left_deterministic(Dfa const& L1, Symbol const& a, Dfa const& L2);
  // a L2 is a suffix code
  bool is_right_deterministic(Dfa const& L1, Symbol const& a, Dfa const& L2);
  // each word of L1 a L2 factors in one way only
  bool is_unambiguous(Dfa const& L1, Symbol const& a, Dfa const& L2);

  bool language_variety_member(Dfa const& L, PseudovarietyDef const& V);

}  // namespace malcev
