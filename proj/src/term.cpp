#include "malcev/term.hpp"

#include <algorithm>
#include <cctype>

#include "malcev/error.hpp"

namespace malcev {

  // ---------------------------------------------------------------------
  // Exponent
  // ---------------------------------------------------------------------

  bool is_prime(std::int64_t p) {
    if (p < 2) {
      return false;
    }
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  Exponent Exponent::finite(std::int64_t n) {
    if (n < 1) {
      throw UnsupportedShape("finite exponent must be positive");
    }
    return {Kind::Finite, 0, n};
  }

  Exponent Exponent::omega(std::int64_t q) {
    return {Kind::Omega, 0, q};
  }

  Exponent Exponent::prime_omega(std::int64_t p, std::int64_t q) {
    if (!is_prime(p)) {
      throw UnsupportedShape("p^w needs a prime p");
    }
    return {Kind::PrimeOmega, p, q};
  }

  Exponent Exponent::plus(std::int64_t d) const {
    Exponent e = *this;
    e.q += d;
    if (kind == Kind::Finite && e.q < 1) {
      throw UnsupportedShape("finite exponent dropped below 1");
    }
    return e;
  }

  std::string Exponent::to_string() const {
    auto off = [&] {
      if (q == 0) {
        return std::string();
      }
      return (q > 0 ? "+" : "-") + std::to_string(q > 0 ? q : -q);
    };
    switch (kind) {
      case Kind::Finite:
        return std::to_string(q);
      case Kind::Omega:
        return q == 0 ? "w" : "(w" + off() + ")";
      default:
        return "(" + std::to_string(p) + "^w" + off() + ")";
    }
  }

  // ---------------------------------------------------------------------
  // Term
  // ---------------------------------------------------------------------

  struct Term::Node {
    Kind              kind;
    Symbol            sym;
    std::vector<Term> kids;  // factors, or {base}
    Exponent          exp;
    std::string       str;
    bool              finite = true;
    size_t            count  = 1;
  };

  namespace {
    bool plain_letter(Term const& t) {
      return t.kind() == Term::Kind::Letter;
    }
  }  // namespace

  Term Term::letter(Symbol s) {
    if (s.empty()) {
      throw SyntaxError("empty letter", 0);
    }
    auto n  = std::make_shared<Node>();
    n->kind = Kind::Letter;
    n->sym  = std::move(s);
    n->str  = n->sym;
    return Term(std::move(n));
  }

  Term Term::concat(std::vector<Term> const& factors) {
    std::vector<Term> flat;
    for (auto const& f : factors) {
      if (f.kind() == Kind::Concat) {
        flat.insert(flat.end(), f.factors().begin(), f.factors().end());
      } else {
        flat.push_back(f);
      }
    }
    if (flat.empty()) {
      throw UnsupportedShape("empty concatenation");
    }
    if (flat.size() == 1) {
      return flat[0];
    }
    auto n  = std::make_shared<Node>();
    n->kind = Kind::Concat;
    for (size_t i = 0; i < flat.size(); ++i) {
      if (i > 0 && !(plain_letter(flat[i - 1]) && plain_letter(flat[i]))) {
        n->str += ' ';
      }
      n->str += flat[i].str();
      n->finite = n->finite && flat[i].is_finite();
      n->count += flat[i].node_count();
    }
    n->kids = std::move(flat);
    return Term(std::move(n));
  }

  Term Term::power(Term const& base, Exponent e) {
    if (e.kind == Exponent::Kind::Finite) {
      if (e.q < 1) {
        throw UnsupportedShape("finite exponent must be positive");
      }
      if (e.q == 1) {
        return base;
      }
    }
    auto n    = std::make_shared<Node>();
    n->kind   = Kind::Power;
    n->kids   = {base};
    n->exp    = e;
    n->finite = base.is_finite() && !e.infinite();
    n->count  = base.node_count() + 1;
    n->str    = (plain_letter(base) ? base.str() : "(" + base.str() + ")") + "^"
             + e.to_string();
    return Term(std::move(n));
  }

  Term Term::word(Word const& w) {
    if (w.empty()) {
      throw UnsupportedShape("empty word");
    }
    std::vector<Term> f;
    for (auto const& s : w) {
      f.push_back(letter(s));
    }
    return concat(f);
  }

  Term::Kind Term::kind() const noexcept {
    return n_->kind;
  }
  Symbol const& Term::symbol() const {
    return n_->sym;
  }
  std::vector<Term> const& Term::factors() const {
    return n_->kids;
  }
  Term const& Term::base() const {
    return n_->kids[0];
  }
  Exponent const& Term::exponent() const {
    return n_->exp;
  }
  std::string const& Term::str() const noexcept {
    return n_->str;
  }
  bool Term::is_finite() const noexcept {
    return n_->finite;
  }
  size_t Term::node_count() const noexcept {
    return n_->count;
  }

  std::string to_string(Term const& t) {
    return t.str();
  }

  std::vector<Term> items(Term const& t) {
    if (t.kind() == Term::Kind::Concat) {
      return t.factors();
    }
    return {t};
  }

  // ---------------------------------------------------------------------
  // Parsing
  // ---------------------------------------------------------------------

  namespace {
    struct Parser {
      std::string_view s;
      size_t           i = 0;

      void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
      }
      bool at(char c) {
        skip();
        return i < s.size() && s[i] == c;
      }
      void expect(char c) {
        if (!at(c)) {
          throw SyntaxError(std::string("expected '") + c + "'", i);
        }
        ++i;
      }
      std::int64_t integer() {
        skip();
        size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        if (b == i) {
          throw SyntaxError("expected integer", i);
        }
        if (i - b > 15) {
          throw SyntaxError("integer too large", b);
        }
        return std::stoll(std::string(s.substr(b, i - b)));
      }
      bool letter_start() {
        skip();
        return i < s.size()
               && ((s[i] >= 'a' && s[i] <= 'z') || s[i] == '[');
      }
      Symbol letter() {
        skip();
        size_t b = i;
        if (s[i] == '[') {
          size_t e = s.find(']', i);
          if (e == std::string_view::npos || e == i + 1) {
            throw SyntaxError("malformed block letter", i);
          }
          i = e + 1;
          return Symbol(s.substr(b, i - b));
        }
        if (s[i] == 'x' && i + 1 < s.size()
            && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
          ++i;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
          }
          return Symbol(s.substr(b, i - b));
        }
        ++i;
        return Symbol(1, s[b]);
      }
      std::int64_t signed_offset() {
        if (at('+')) {
          ++i;
          return integer();
        }
        if (at('-')) {
          ++i;
          return -integer();
        }
        return 0;
      }
      Exponent exponent() {
        skip();
        size_t b = i;
        if (at('w')) {
          ++i;
          return Exponent::omega();
        }
        if (at('(')) {
          ++i;
          if (at('w')) {
            ++i;
            auto q = signed_offset();
            expect(')');
            return Exponent::omega(q);
          }
          auto p = integer();
          expect('^');
          expect('w');
          auto q = signed_offset();
          expect(')');
          if (!is_prime(p)) {
            throw SyntaxError("p^w needs a prime p", b);
          }
          return Exponent::prime_omega(p, q);
        }
        auto n = integer();
        if (n < 2) {
          throw SyntaxError("integer exponent must be at least 2", b);
        }
        return Exponent::finite(n);
      }
      Term factor() {
        Term a = [&] {
          if (at('(')) {
            ++i;
            Term t = term();
            expect(')');
            return t;
          }
          if (!letter_start()) {
            throw SyntaxError("expected letter or '('", i);
          }
          return Term::letter(letter());
        }();
        if (at('^')) {
          ++i;
          a = Term::power(a, exponent());
        }
        return a;
      }
      Term term() {
        std::vector<Term> f;
        while (letter_start() || at('(')) {
          f.push_back(factor());
        }
        if (f.empty()) {
          throw SyntaxError("expected a term", i);
        }
        return Term::concat(f);
      }
    };
  }  // namespace

  Term parse_term(std::string_view text) {
    Parser p{text};
    Term   t = p.term();
    p.skip();
    if (p.i != text.size()) {
      throw SyntaxError("unexpected character", p.i);
    }
    return t;
  }

  Word parse_word(std::string_view text) {
    Parser p{text};
    Word   w;
    while (p.letter_start()) {
      w.push_back(p.letter());
    }
    p.skip();
    if (p.i != text.size()) {
      throw SyntaxError("unexpected character in word", p.i);
    }
    return w;
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (auto const& s : w) {
      out += s;
    }
    return out;
  }

  Symbol make_block(Word const& letters) {
    bool        single = std::all_of(letters.begin(), letters.end(),
                              [](Symbol const& s) { return s.size() == 1; });
    std::string out    = "[";
    for (size_t i = 0; i < letters.size(); ++i) {
      if (i > 0 && !single) {
        out += '.';
      }
      out += letters[i];
    }
    return out + "]";
  }

  bool is_block(Symbol const& s) {
    return s.size() >= 2 && s.front() == '[' && s.back() == ']';
  }

  Word block_letters(Symbol const& s) {
    if (!is_block(s)) {
      throw SyntaxError("not a block letter", 0);
    }
    std::string inner = s.substr(1, s.size() - 2);
    Word        out;
    if (inner.find('.') != std::string::npos) {
      size_t b = 0;
      while (true) {
        size_t e = inner.find('.', b);
        out.push_back(inner.substr(b, e == std::string::npos ? e : e - b));
        if (e == std::string::npos) {
          break;
        }
        b = e + 1;
      }
      return out;
    }
    return parse_word(inner);
  }

  bool symbol_less(Symbol const& a, Symbol const& b) {
    auto num = [](Symbol const& s) -> std::int64_t {
      if (s.size() > 1 && s[0] == 'x'
          && std::all_of(s.begin() + 1, s.end(),
                         [](char c) { return std::isdigit(c); })) {
        return std::stoll(s.substr(1));
      }
      return -1;
    };
    auto na = num(a), nb = num(b);
    if (na >= 0 && nb >= 0) {
      return na < nb;
    }
    if ((na >= 0) != (nb >= 0)) {
      return na < 0;
    }
    return a < b;
  }

  std::vector<Symbol> sorted_symbols(std::set<Symbol> const& s) {
    std::vector<Symbol> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), symbol_less);
    return v;
  }

  PseudoIdentity::PseudoIdentity(Term l, Term r)
      : lhs(std::move(l)), rhs(std::move(r)) {
    auto c = content(lhs);
    auto d = content(rhs);
    c.insert(d.begin(), d.end());
    alphabet = sorted_symbols(c);
  }

  PseudoIdentity::PseudoIdentity(Term l, Term r, std::vector<Symbol> alpha)
      : lhs(std::move(l)), rhs(std::move(r)), alphabet(std::move(alpha)) {
    std::set<Symbol> a(alphabet.begin(), alphabet.end());
    for (auto const* t : {&lhs, &rhs}) {
      for (auto const& s : content(*t)) {
        if (a.count(s) == 0) {
          throw WrongAlphabet("letter " + s + " outside the alphabet");
        }
      }
    }
  }

  std::string PseudoIdentity::to_string() const {
    return lhs.str() + " = " + rhs.str();
  }

  PseudoIdentity parse_identity(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw SyntaxError("expected '='", text.size());
    }
    if (text.find('=', eq + 1) != std::string_view::npos) {
      throw SyntaxError("more than one '='", text.find('=', eq + 1));
    }
    Term l = parse_term(text.substr(0, eq));
    Term r = [&] {
      try {
        return parse_term(text.substr(eq + 1));
      } catch (SyntaxError const& e) {
        throw SyntaxError("in right-hand side", eq + 1 + e.pos);
      }
    }();
    return PseudoIdentity(l, r);
  }

  // ---------------------------------------------------------------------
  // Structural operations
  // ---------------------------------------------------------------------

  Term substitute(Term const& t, std::map<Symbol, Term> const& m) {
    switch (t.kind()) {
      case Term::Kind::Letter: {
        auto it = m.find(t.symbol());
        if (it == m.end()) {
          throw UnboundLetter("no substitution for " + t.symbol());
        }
        return it->second;
      }
      case Term::Kind::Concat: {
        std::vector<Term> f;
        for (auto const& k : t.factors()) {
          f.push_back(substitute(k, m));
        }
        return Term::concat(f);
      }
      default:
        return Term::power(substitute(t.base(), m), t.exponent());
    }
  }

  Term reverse_chi(Term const& t) {
    switch (t.kind()) {
      case Term::Kind::Letter:
        return t;
      case Term::Kind::Concat: {
        std::vector<Term> f;
        for (auto it = t.factors().rbegin(); it != t.factors().rend(); ++it) {
          f.push_back(reverse_chi(*it));
        }
        return Term::concat(f);
      }
      default:
        return Term::power(reverse_chi(t.base()), t.exponent());
    }
  }

  Word reverse(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  namespace {
    void collect(Term const& t, std::set<Symbol>& out) {
      switch (t.kind()) {
        case Term::Kind::Letter:
          out.insert(t.symbol());
          break;
        case Term::Kind::Concat:
          for (auto const& k : t.factors()) {
            collect(k, out);
          }
          break;
        default:
          collect(t.base(), out);
      }
    }

    constexpr std::uint64_t kSat = std::uint64_t(1) << 62;

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
      if (a != 0 && b > kSat / a) {
        return kSat;
      }
      return std::min(a * b, kSat);
    }

    // appends letters of t to out until out has `limit` letters
    void prefix_into(Term const& t, std::size_t limit, Word& out) {
      if (out.size() >= limit) {
        return;
      }
      switch (t.kind()) {
        case Term::Kind::Letter:
          out.push_back(t.symbol());
          break;
        case Term::Kind::Concat:
          for (auto const& k : t.factors()) {
            if (out.size() >= limit) {
              break;
            }
            prefix_into(k, limit, out);
          }
          break;
        default: {
          auto const& e = t.exponent();
          for (std::int64_t c = 0;
               out.size() < limit && (e.infinite() || c < e.q);
               ++c) {
            prefix_into(t.base(), limit, out);
          }
        }
      }
    }
  }  // namespace

  std::set<Symbol> content(Term const& t) {
    std::set<Symbol> out;
    collect(t, out);
    return out;
  }

  std::set<Symbol> content(Word const& w) {
    return std::set<Symbol>(w.begin(), w.end());
  }

  std::optional<std::uint64_t> finite_length(Term const& t) {
    if (!t.is_finite()) {
      return std::nullopt;
    }
    switch (t.kind()) {
      case Term::Kind::Letter:
        return 1;
      case Term::Kind::Concat: {
        std::uint64_t s = 0;
        for (auto const& k : t.factors()) {
          s = std::min(kSat, s + *finite_length(k));
        }
        return s;
      }
      default:
        return sat_mul(*finite_length(t.base()),
                       static_cast<std::uint64_t>(t.exponent().q));
    }
  }

  Word expand(Term const& t, std::size_t max_len) {
    auto len = finite_length(t);
    if (!len) {
      throw UnsupportedShape("cannot expand an infinite term");
    }
    if (*len > max_len) {
      throw BudgetExceeded("term expands beyond length limit");
    }
    Word out;
    prefix_into(t, *len, out);
    return out;
  }

  Word beta_k(Term const& t, std::size_t k) {
    Word out;
    prefix_into(t, k, out);
    return out;
  }

  Word tau_k(Term const& t, std::size_t k) {
    return reverse(beta_k(reverse_chi(t), k));
  }

  Word beta_k(Word const& w, std::size_t k) {
    return Word(w.begin(), w.begin() + std::min(k, w.size()));
  }

  Word tau_k(Word const& w, std::size_t k) {
    return Word(w.end() - std::min(k, w.size()), w.end());
  }

  namespace {
    // appends the finite part; returns the period once an infinite
    // power is reached
    std::optional<Word> contour_walk(Term const& t, Word& prefix) {
      switch (t.kind()) {
        case Term::Kind::Letter:
          prefix.push_back(t.symbol());
          return std::nullopt;
        case Term::Kind::Concat:
          for (auto const& k : t.factors()) {
            if (auto r = contour_walk(k, prefix)) {
              return r;
            }
          }
          return std::nullopt;
        default:
          if (!t.base().is_finite()) {
            return contour_walk(t.base(), prefix);
          }
          if (!t.exponent().infinite()) {
            auto w = expand(t);
            prefix.insert(prefix.end(), w.begin(), w.end());
            return std::nullopt;
          }
          return expand(t.base());
      }
    }

    Word primitive_root(Word const& w) {
      size_t n = w.size();
      for (size_t d = 1; d <= n; ++d) {
        if (n % d != 0) {
          continue;
        }
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) {
          ok = w[i] == w[i - d];
        }
        if (ok) {
          return Word(w.begin(), w.begin() + d);
        }
      }
      return w;
    }
  }  // namespace

  Contour left_contour(Term const& t) {
    Contour c;
    if (t.is_finite()) {
      c.prefix = expand(t);
      return c;
    }
    auto period = contour_walk(t, c.prefix);
    c.infinite  = true;
    c.period    = primitive_root(*period);
    while (!c.prefix.empty() && c.prefix.back() == c.period.back()) {
      std::rotate(c.period.rbegin(), c.period.rbegin() + 1, c.period.rend());
      c.prefix.pop_back();
    }
    return c;
  }

  std::string to_string(Contour const& c) {
    if (!c.infinite) {
      return to_string(c.prefix);
    }
    return to_string(c.prefix) + "(" + to_string(c.period) + ")^inf";
  }

  Term to_aperiodic(Term const& t) {
    switch (t.kind()) {
      case Term::Kind::Letter:
        return t;
      case Term::Kind::Concat: {
        std::vector<Term> f;
        for (auto const& k : t.factors()) {
          f.push_back(to_aperiodic(k));
        }
        return Term::concat(f);
      }
      default: {
        auto e = t.exponent();
        if (e.infinite()) {
          e = Exponent::omega();
        }
        return Term::power(to_aperiodic(t.base()), e);
      }
    }
  }

  Term unfold(Term const& t, std::int64_t m) {
    switch (t.kind()) {
      case Term::Kind::Letter:
        return t;
      case Term::Kind::Concat: {
        std::vector<Term> f;
        for (auto const& k : t.factors()) {
          f.push_back(unfold(k, m));
        }
        return Term::concat(f);
      }
      default: {
        auto e = t.exponent();
        if (e.infinite()) {
          e = Exponent::finite(std::max<std::int64_t>(1, m + e.q));
        }
        return Term::power(unfold(t.base(), m), e);
      }
    }
  }

}  // namespace malcev
