#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace malcev {

  using Symbol = std::string;
  using Word   = std::vector<Symbol>;

  struct Exponent {
    enum class Kind { Finite, Omega, PrimeOmega };
    Kind         kind = Kind::Finite;
    std::int64_t p    = 0;  // the prime, for PrimeOmega
    std::int64_t q    = 1;  // the value if Finite, else the offset

    static Exponent finite(std::int64_t n);
    static Exponent omega(std::int64_t q = 0);
    static Exponent prime_omega(std::int64_t p, std::int64_t q = 0);

    bool infinite() const noexcept {
      return kind != Kind::Finite;
    }
    // throws UnsupportedShape if a finite value drops below 1
    Exponent    plus(std::int64_t d) const;
    std::string to_string() const;

    auto operator<=>(Exponent const&) const = default;
  };

  bool is_prime(std::int64_t p);

  class Term {
   public:
    enum class Kind { Letter, Concat, Power };

    static Term letter(Symbol s);
    // flattens nested concatenations; a single factor is returned as is
    static Term concat(std::vector<Term> const& factors);
    // a finite exponent 1 returns the base
    static Term power(Term const& base, Exponent e);
    static Term word(Word const& w);

    Kind kind() const noexcept;
    // Letter
    Symbol const& symbol() const;
    // Concat
    std::vector<Term> const& factors() const;
    // Power
    Term const&     base() const;
    Exponent const& exponent() const;

    std::string const& str() const noexcept;
    // no infinite exponent anywhere
    bool   is_finite() const noexcept;
    size_t node_count() const noexcept;

    bool operator==(Term const& o) const noexcept {
      return str() == o.str();
    }
    bool operator!=(Term const& o) const noexcept {
      return !(*this == o);
    }
    bool operator<(Term const& o) const noexcept {
      return str() < o.str();
    }

    struct Node;

   private:
    explicit Term(std::shared_ptr<Node const> n) : n_(std::move(n)) {}
    std::shared_ptr<Node const> n_;
  };

  std::string to_string(Term const& t);

  // flattened top-level factors (a single-element list for non-Concat)
  std::vector<Term> items(Term const& t);

  Term parse_term(std::string_view text);
  // whitespace-free letters, e.g. "abab" or "x1x2"; empty text gives {}
  Word        parse_word(std::string_view text);
  std::string to_string(Word const& w);

  // symbol "[ab]" (or "[x1.x2]" when letters have several characters)
  Symbol make_block(Word const& letters);
  bool   is_block(Symbol const& s);
  Word   block_letters(Symbol const& s);

  struct PseudoIdentity {
    Term                lhs;
    Term                rhs;
    std::vector<Symbol> alphabet;

    PseudoIdentity(Term l, Term r);
    // throws WrongAlphabet if a letter is outside alphabet
    PseudoIdentity(Term l, Term r, std::vector<Symbol> alpha);
    std::string to_string() const;
  };

  // "u = v"
  PseudoIdentity parse_identity(std::string_view text);

  // orders x2 before x10
  bool                symbol_less(Symbol const& a, Symbol const& b);
  std::vector<Symbol> sorted_symbols(std::set<Symbol> const& s);

  Term substitute(Term const& t, std::map<Symbol, Term> const& m);
  Term reverse_chi(Term const& t);
  Word reverse(Word w);

  std::set<Symbol> content(Term const& t);
  std::set<Symbol> content(Word const& w);

  // nullopt if infinite; saturates at 2^62
  std::optional<std::uint64_t> finite_length(Term const& t);
  // the word a finite term denotes; BudgetExceeded past max_len letters
  Word expand(Term const& t, std::size_t max_len = 1'000'000);

  Word beta_k(Term const& t, std::size_t k);
  Word tau_k(Term const& t, std::size_t k);
  Word beta_k(Word const& w, std::size_t k);
  Word tau_k(Word const& w, std::size_t k);

  struct Contour {
    bool infinite = false;
    Word prefix;  // the whole word when finite
    Word period;  // primitive, empty when finite
    bool operator==(Contour const&) const = default;
  };
  Contour     left_contour(Term const& t);
  std::string to_string(Contour const& c);

  // all infinite exponents replaced by omega (offsets dropped)
  Term to_aperiodic(Term const& t);
  // infinite exponents replaced by m + offset (at least 1)
  Term unfold(Term const& t, std::int64_t m);

}  // namespace malcev
