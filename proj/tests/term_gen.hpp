// Random terms and words for property tests.
#pragma once

#include <random>
#include <vector>

#include "malcev/term.hpp"

namespace testgen {
  using namespace malcev;

  inline Word random_word(std::mt19937_64&           rng,
                          std::vector<Symbol> const& letters,
                          int                        lo,
                          int                        hi) {
    std::uniform_int_distribution<int> len(lo, hi);
    std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
    Word                                  w(len(rng));
    for (auto& s : w) {
      s = letters[pick(rng)];
    }
    return w;
  }

  inline Exponent random_exponent(std::mt19937_64& rng, bool primes = true) {
    switch (std::uniform_int_distribution<int>(0, primes ? 6 : 4)(rng)) {
      case 0:
        return Exponent::finite(2);
      case 1:
        return Exponent::finite(3);
      case 2:
      case 3:
        return Exponent::omega();
      case 4:
        return Exponent::omega(std::uniform_int_distribution<int>(-1, 1)(rng));
      case 5:
        return Exponent::prime_omega(2);
      default:
        return Exponent::prime_omega(3, 1);
    }
  }

  inline Term random_term(std::mt19937_64&           rng,
                          std::vector<Symbol> const& letters,
                          int                        depth,
                          bool                       primes = true) {
    std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Term> f;
    for (int i = 0; i < n; ++i) {
      if (depth <= 0 || std::uniform_int_distribution<int>(0, 2)(rng) != 0) {
        f.push_back(Term::letter(letters[pick(rng)]));
      } else {
        f.push_back(Term::power(random_term(rng, letters, depth - 1, primes),
                                random_exponent(rng, primes)));
      }
    }
    return Term::concat(f);
  }
}  // namespace testgen
