#include "malcev/languages.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "malcev/error.hpp"

namespace malcev {

  namespace {

    struct Nfa {
      int                                        n = 0;
      int                                        letters = 0;
      std::vector<std::vector<std::vector<int>>> next;  // [state][letter]
      std::vector<std::vector<int>>              eps;
      std::vector<int>                           init;
      std::vector<bool>                          fin;

      int add() {
        next.emplace_back(letters);
        eps.emplace_back();
        fin.push_back(false);
        return n++;
      }
    };

    struct Frag {
      int start, accept;
    };

    class RegexParser {
     public:
      RegexParser(std::string_view s, Nfa& nfa, std::vector<Symbol> const& al)
          : s_(s), nfa_(nfa), al_(al) {}

      Frag parse() {
        skip();
        if (pos_ >= s_.size()) {
          throw SyntaxError("empty regular expression", pos_);
        }
        Frag f = alt();
        skip();
        if (pos_ != s_.size()) {
          throw SyntaxError("unexpected character", pos_);
        }
        return f;
      }

     private:
      void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      bool at_atom() {
        skip();
        return pos_ < s_.size()
               && (s_[pos_] == '('
                   || std::isalnum(static_cast<unsigned char>(s_[pos_])));
      }

      Frag alt() {
        Frag f = concat();
        skip();
        while (pos_ < s_.size() && s_[pos_] == '|') {
          ++pos_;
          Frag g = concat();
          int  s = nfa_.add(), a = nfa_.add();
          nfa_.eps[s] = {f.start, g.start};
          nfa_.eps[f.accept].push_back(a);
          nfa_.eps[g.accept].push_back(a);
          f = {s, a};
          skip();
        }
        return f;
      }

      Frag concat() {
        if (!at_atom()) {
          throw SyntaxError("expected a letter or '('", pos_);
        }
        Frag f = repeat();
        while (at_atom()) {
          Frag g = repeat();
          nfa_.eps[f.accept].push_back(g.start);
          f.accept = g.accept;
        }
        return f;
      }

      Frag repeat() {
        Frag f = atom();
        skip();
        while (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '+')) {
          bool star = s_[pos_++] == '*';
          int  s = nfa_.add(), a = nfa_.add();
          nfa_.eps[s].push_back(f.start);
          if (star) {
            nfa_.eps[s].push_back(a);
          }
          nfa_.eps[f.accept].push_back(f.start);
          nfa_.eps[f.accept].push_back(a);
          f = {s, a};
          skip();
        }
        return f;
      }

      Frag atom() {
        skip();
        if (s_[pos_] == '(') {
          ++pos_;
          skip();
          if (pos_ < s_.size() && s_[pos_] == ')') {
            throw SyntaxError("empty group", pos_);
          }
          Frag f = alt();
          skip();
          if (pos_ >= s_.size() || s_[pos_] != ')') {
            throw SyntaxError("missing ')'", pos_);
          }
          ++pos_;
          return f;
        }
        Symbol c(1, s_[pos_]);
        auto   it = std::find(al_.begin(), al_.end(), c);
        if (it == al_.end()) {
          throw WrongAlphabet("letter " + c + " outside the alphabet");
        }
        ++pos_;
        int s = nfa_.add(), a = nfa_.add();
        nfa_.next[s][it - al_.begin()].push_back(a);
        return {s, a};
      }

      std::string_view          s_;
      std::size_t               pos_ = 0;
      Nfa&                      nfa_;
      std::vector<Symbol> const& al_;
    };

    std::vector<int> eps_closure(Nfa const& nfa, std::vector<int> set) {
      std::vector<bool> in(nfa.n, false);
      std::vector<int>  stack;
      for (int x : set) {
        if (!in[x]) {
          in[x] = true;
          stack.push_back(x);
        }
      }
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : nfa.eps[x]) {
          if (!in[y]) {
            in[y] = true;
            stack.push_back(y);
          }
        }
      }
      std::vector<int> out;
      for (int x = 0; x < nfa.n; ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    Dfa determinize(Nfa const& nfa, std::vector<Symbol> const& alphabet) {
      Dfa d;
      d.alphabet = alphabet;
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>>   sets;
      auto get = [&](std::vector<int> const& s) {
        auto [it, fresh] = ids.emplace(s, static_cast<int>(sets.size()));
        if (fresh) {
          sets.push_back(s);
        }
        return it->second;
      };
      d.initial = get(eps_closure(nfa, nfa.init));
      for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<int> row;
        for (int c = 0; c < nfa.letters; ++c) {
          std::vector<int> nx;
          for (int x : sets[i]) {
            auto const& t = nfa.next[x][c];
            nx.insert(nx.end(), t.begin(), t.end());
          }
          row.push_back(get(eps_closure(nfa, nx)));
        }
        d.delta.push_back(row);
      }
      d.states = static_cast<int>(sets.size());
      for (auto const& s : sets) {
        d.finals.push_back(
            std::any_of(s.begin(), s.end(), [&](int x) { return nfa.fin[x]; }));
      }
      return d;
    }

    std::vector<bool> reachable_from(Dfa const& d, std::vector<int> start) {
      std::vector<bool> seen(d.states, false);
      for (int s : start) {
        seen[s] = true;
      }
      while (!start.empty()) {
        int x = start.back();
        start.pop_back();
        for (int y : d.delta[x]) {
          if (!seen[y]) {
            seen[y] = true;
            start.push_back(y);
          }
        }
      }
      return seen;
    }

    bool reaches_final(Dfa const& d, int from) {
      auto r = reachable_from(d, {from});
      for (int x = 0; x < d.states; ++x) {
        if (r[x] && d.finals[x]) {
          return true;
        }
      }
      return false;
    }

    void same_alphabet(Dfa const& a, Dfa const& b) {
      if (a.alphabet != b.alphabet) {
        throw WrongAlphabet("automata over different alphabets");
      }
    }

  }  // namespace

  void Dfa::validate() const {
    if (states < 1 || initial < 0 || initial >= states
        || static_cast<int>(delta.size()) != states
        || static_cast<int>(finals.size()) != states) {
      throw PreconditionViolated("malformed automaton");
    }
    for (auto const& row : delta) {
      if (row.size() != alphabet.size()) {
        throw PreconditionViolated("transition row of wrong width");
      }
      for (int y : row) {
        if (y < 0 || y >= states) {
          throw PreconditionViolated("transition target out of range");
        }
      }
    }
  }

  int Dfa::letter(Symbol const& a) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), a);
    if (it == alphabet.end()) {
      throw UnboundLetter(a);
    }
    return static_cast<int>(it - alphabet.begin());
  }

  int Dfa::run(int from, Word const& w) const {
    int q = from;
    for (auto const& a : w) {
      q = delta[q][letter(a)];
    }
    return q;
  }

  bool Dfa::accepts(Word const& w) const {
    return finals[run(initial, w)];
  }

  Dfa parse_regex(std::string_view text, std::vector<Symbol> alphabet) {
    if (alphabet.empty()) {
      std::set<Symbol> s;
      for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
          s.insert(std::string(1, c));
        }
      }
      alphabet.assign(s.begin(), s.end());
    }
    Nfa nfa;
    nfa.letters = static_cast<int>(alphabet.size());
    RegexParser p(text, nfa, alphabet);
    Frag        f = p.parse();
    nfa.init      = {f.start};
    nfa.fin[f.accept] = true;
    return minimize(determinize(nfa, alphabet));
  }

  Dfa minimize(Dfa const& d) {
    d.validate();
    int k = static_cast<int>(d.alphabet.size());
    // reachable states in BFS order
    std::vector<int> order{d.initial}, pos(d.states, -1);
    pos[d.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int y : d.delta[order[i]]) {
        if (pos[y] < 0) {
          pos[y] = static_cast<int>(order.size());
          order.push_back(y);
        }
      }
    }
    int              n = static_cast<int>(order.size());
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) {
      cls[i] = d.finals[order[i]] ? 1 : 0;
    }
    int count = 0;
    while (true) {
      std::map<std::vector<int>, int> ids;
      std::vector<int>                nc(n);
      for (int i = 0; i < n; ++i) {
        std::vector<int> sig{cls[i]};
        for (int c = 0; c < k; ++c) {
          sig.push_back(cls[pos[d.delta[order[i]][c]]]);
        }
        nc[i] = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
      }
      int nk = static_cast<int>(ids.size());
      cls    = nc;
      if (nk == count) {
        break;
      }
      count = nk;
    }
    // renumber classes in BFS order from the initial class
    std::vector<int> rep(count, -1);
    for (int i = 0; i < n; ++i) {
      if (rep[cls[i]] < 0) {
        rep[cls[i]] = i;
      }
    }
    std::vector<int> name(count, -1), queue{cls[0]};
    name[cls[0]] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int r = order[rep[queue[i]]];
      for (int c = 0; c < k; ++c) {
        int t = cls[pos[d.delta[r][c]]];
        if (name[t] < 0) {
          name[t] = static_cast<int>(queue.size());
          queue.push_back(t);
        }
      }
    }
    Dfa m;
    m.states   = count;
    m.alphabet = d.alphabet;
    m.initial  = 0;
    m.delta.assign(count, std::vector<int>(k));
    m.finals.assign(count, false);
    for (int c0 = 0; c0 < count; ++c0) {
      int r = order[rep[c0]];
      for (int c = 0; c < k; ++c) {
        m.delta[name[c0]][c] = name[cls[pos[d.delta[r][c]]]];
      }
      m.finals[name[c0]] = d.finals[r];
    }
    return m;
  }

  bool is_empty(Dfa const& d) {
    return !reaches_final(d, d.initial);
  }

  bool equivalent(Dfa const& a, Dfa const& b) {
    same_alphabet(a, b);
    return minimize(a) == minimize(b);
  }

  Dfa plus_part(Dfa const& d) {
    d.validate();
    Dfa e = d;
    e.delta.push_back(d.delta[d.initial]);
    e.finals.push_back(false);
    e.initial = e.states++;
    return minimize(e);
  }

  int SyntacticSemigroup::eval(Word const& w) const {
    if (w.empty()) {
      throw PreconditionViolated("the empty word has no image");
    }
    auto letter = [&](Symbol const& a) {
      auto it = std::find(alphabet.begin(), alphabet.end(), a);
      if (it == alphabet.end()) {
        throw UnboundLetter(a);
      }
      return letter_element[it - alphabet.begin()];
    };
    int x = letter(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      x = semigroup.mul(x, letter(w[i]));
    }
    return x;
  }

  SyntacticSemigroup syntactic_semigroup(Dfa const& d) {
    Dfa m = plus_part(d);
    int k = static_cast<int>(m.alphabet.size());
    if (k == 0) {
      throw PreconditionViolated("empty alphabet");
    }
    SyntacticSemigroup out;
    out.alphabet      = m.alphabet;
    out.initial_state = m.initial;
    std::map<std::vector<int>, int> ids;
    std::vector<std::string>        words;
    auto add = [&](std::vector<int> const& f, std::string const& w) {
      auto [it, fresh] = ids.emplace(f, static_cast<int>(out.maps.size()));
      if (fresh) {
        out.maps.push_back(f);
        words.push_back(w);
      }
      return it->second;
    };
    for (int c = 0; c < k; ++c) {
      std::vector<int> f(m.states);
      for (int q = 0; q < m.states; ++q) {
        f[q] = m.delta[q][c];
      }
      out.letter_element.push_back(add(f, m.alphabet[c]));
    }
    for (std::size_t i = 0; i < out.maps.size(); ++i) {
      for (int c = 0; c < k; ++c) {
        std::vector<int> f(m.states);
        for (int q = 0; q < m.states; ++q) {
          f[q] = m.delta[out.maps[i][q]][c];
        }
        add(f, words[i] + m.alphabet[c]);
      }
    }
    int              n = static_cast<int>(out.maps.size());
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        std::vector<int> f(m.states);
        for (int q = 0; q < m.states; ++q) {
          f[q] = out.maps[y][out.maps[x][q]];
        }
        flat[static_cast<std::size_t>(x) * n + y] = ids.at(f);
      }
    }
    for (auto const& f : out.maps) {
      out.accepting.push_back(m.finals[f[m.initial]]);
    }
    std::vector<int> gens = out.letter_element;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    out.semigroup = FiniteSemigroup::trusted(n, std::move(flat), words, gens);
    return out;
  }

  Dfa marked_product(Dfa const& L1, Symbol const& a, Dfa const& L2) {
    same_alphabet(L1, L2);
    L1.validate();
    L2.validate();
    int ai = L1.letter(a);
    int k  = static_cast<int>(L1.alphabet.size());
    Nfa nfa;
    nfa.letters = k;
    for (int i = 0; i < L1.states + L2.states; ++i) {
      nfa.add();
    }
    for (int q = 0; q < L1.states; ++q) {
      for (int c = 0; c < k; ++c) {
        nfa.next[q][c].push_back(L1.delta[q][c]);
      }
      if (L1.finals[q]) {
        nfa.next[q][ai].push_back(L1.states + L2.initial);
      }
    }
    for (int q = 0; q < L2.states; ++q) {
      for (int c = 0; c < k; ++c) {
        nfa.next[L1.states + q][c].push_back(L1.states + L2.delta[q][c]);
      }
      nfa.fin[L1.states + q] = L2.finals[q];
    }
    nfa.init = {L1.initial};
    return minimize(determinize(nfa, L1.alphabet));
  }

  bool is_left_deterministic(Dfa const& L1, Symbol const& a, Dfa const& L2) {
    same_alphabet(L1, L2);
    int  ai = L1.letter(a);
    auto r  = reachable_from(L1, {L1.initial});
    for (int p = 0; p < L1.states; ++p) {
      if (r[p] && L1.finals[p] && reaches_final(L1, L1.delta[p][ai])) {
        return false;
      }
    }
    return true;
  }

  bool is_right_deterministic(Dfa const& L1, Symbol const& a, Dfa const& L2) {
    same_alphabet(L1, L2);
    int  ai = L2.letter(a);
    int  n  = L2.states;
    auto r  = reachable_from(L2, {L2.initial});
    std::vector<bool>                seen(static_cast<std::size_t>(n) * n);
    std::deque<std::pair<int, int>> queue;
    for (int p = 0; p < n; ++p) {
      if (r[p]) {
        int x = L2.delta[p][ai];
        if (!seen[x * n + L2.initial]) {
          seen[x * n + L2.initial] = true;
          queue.push_back({x, L2.initial});
        }
      }
    }
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      if (L2.finals[x] && L2.finals[y]) {
        return false;
      }
      for (std::size_t c = 0; c < L2.alphabet.size(); ++c) {
        int nx = L2.delta[x][c], ny = L2.delta[y][c];
        if (!seen[nx * n + ny]) {
          seen[nx * n + ny] = true;
          queue.push_back({nx, ny});
        }
      }
    }
    return true;
  }

  bool is_unambiguous(Dfa const& L1, Symbol const& a, Dfa const& L2) {
    same_alphabet(L1, L2);
    int n1 = L1.states, n = L1.states + L2.states;
    int ai = L1.letter(a);
    int k  = static_cast<int>(L1.alphabet.size());
    auto moves = [&](int r, int c) {
      std::vector<int> m;
      if (r < n1) {
        m.push_back(L1.delta[r][c]);
        if (c == ai && L1.finals[r]) {
          m.push_back(n1 + L2.initial);
        }
      } else {
        m.push_back(n1 + L2.delta[r - n1][c]);
      }
      return m;
    };
    auto key = [&](int x, int y, bool d) {
      return (static_cast<std::size_t>(x) * n + y) * 2 + (d ? 1 : 0);
    };
    std::vector<bool> seen(static_cast<std::size_t>(n) * n * 2, false);
    std::deque<std::tuple<int, int, bool>> queue{{L1.initial, L1.initial, false}};
    seen[key(L1.initial, L1.initial, false)] = true;
    while (!queue.empty()) {
      auto [x, y, d] = queue.front();
      queue.pop_front();
      if (d && x >= n1 && y >= n1 && L2.finals[x - n1] && L2.finals[y - n1]) {
        return false;
      }
      for (int c = 0; c < k; ++c) {
        for (int mx : moves(x, c)) {
          for (int my : moves(y, c)) {
            bool nd = d || mx != my;
            if (!seen[key(mx, my, nd)]) {
              seen[key(mx, my, nd)] = true;
              queue.push_back({mx, my, nd});
            }
          }
        }
      }
    }
    return true;
  }

  bool language_variety_member(Dfa const& L, PseudovarietyDef const& V) {
    return member(syntactic_semigroup(L).semigroup, V);
  }

}  // namespace malcev
