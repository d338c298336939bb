#pragma once

#include <optional>
#include <string>

#include "malcev/evaluate.hpp"
#include "malcev/semigroup.hpp"
#include "malcev/term.hpp"

namespace malcev {

  enum class Verdict { Proved, Refuted, Unknown };

  std::string to_string(Verdict v);

  // replayable: S does not satisfy identity under assignment
  struct Counterexample {
    FiniteSemigroup semigroup;
    Assignment      assignment;
    PseudoIdentity  identity;

    bool verify() const;
  };

  struct ThreeValued {
    Verdict                       verdict = Verdict::Unknown;
    std::optional<Counterexample> witness;
    std::string                   note;

    static ThreeValued proved(std::string note = {});
    static ThreeValued refuted(std::optional<Counterexample> w = std::nullopt,
                               std::string                   note = {});
    static ThreeValued unknown(std::string note = {});

    bool is_proved() const noexcept {
      return verdict == Verdict::Proved;
    }
    bool is_refuted() const noexcept {
      return verdict == Verdict::Refuted;
    }
    bool is_unknown() const noexcept {
      return verdict == Verdict::Unknown;
    }
  };

  // Proved if all are, Refuted if any is, otherwise Unknown
  ThreeValued conjunction(std::initializer_list<ThreeValued> parts);

}  // namespace malcev
