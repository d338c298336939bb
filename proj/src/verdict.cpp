#include "malcev/verdict.hpp"

namespace malcev {

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::Proved:
        return "Proved";
      case Verdict::Refuted:
        return "Refuted";
      default:
        return "Unknown";
    }
  }

  bool Counterexample::verify() const {
    return evaluate(identity.lhs, semigroup, assignment)
           != evaluate(identity.rhs, semigroup, assignment);
  }

  ThreeValued ThreeValued::proved(std::string note) {
    return {Verdict::Proved, std::nullopt, std::move(note)};
  }

  ThreeValued ThreeValued::refuted(std::optional<Counterexample> w,
                                   std::string                   note) {
    return {Verdict::Refuted, std::move(w), std::move(note)};
  }

  ThreeValued ThreeValued::unknown(std::string note) {
    return {Verdict::Unknown, std::nullopt, std::move(note)};
  }

  ThreeValued conjunction(std::initializer_list<ThreeValued> parts) {
    ThreeValued out = ThreeValued::proved();
    for (auto const& p : parts) {
      if (p.is_refuted()) {
        return p;
      }
      if (p.is_unknown()) {
        out = p;
      }
    }
    return out;
  }

}  // namespace malcev
