#include "malcev/evaluate.hpp"

#include <algorithm>

namespace malcev {

  std::int64_t prime_omega_residue(std::int64_t p, std::int64_t r) {
    if (r == 1) {
      return 0;
    }
    auto powmod = [r](std::int64_t b, std::int64_t e) {
      std::int64_t out = 1 % r;
      b %= r;
      while (e > 0) {
        if (e & 1) {
          out = out * b % r;
        }
        b = b * b % r;
        e >>= 1;
      }
      return out;
    };
    // v_n = p^{n!} mod r; v_n = v_{n-1}^n. Stable once n >= r: then
    // n! is a multiple of the order of p modulo the p'-part of r and
    // exceeds the p-adic valuation of r.
    std::int64_t v = p % r, n = 1;
    while (true) {
      ++n;
      std::int64_t nv = powmod(v, n);
      if (n >= r && nv == v) {
        return nv;
      }
      v = nv;
    }
  }

  std::int64_t concrete_exponent(Exponent const& e,
                                 std::int64_t    index,
                                 std::int64_t    period) {
    if (!e.infinite()) {
      return e.q;
    }
    std::int64_t base = e.kind == Exponent::Kind::Omega
                            ? 0
                            : prime_omega_residue(e.p, period);
    std::int64_t res = ((base + e.q) % period + period) % period;
    std::int64_t lo  = std::max<std::int64_t>(index, 1);
    std::int64_t n   = lo + ((res - lo) % period + period) % period;
    return n;
  }

  namespace {
    int table_pow(FiniteSemigroup const& S, int x, Exponent const& e) {
      if (!e.infinite()) {
        return power(S, x, e.q);
      }
      auto [m, r] = index_period(S, x);
      return power(S, x, concrete_exponent(e, m, r));
    }
  }  // namespace

  int evaluate(Term const& t, FiniteSemigroup const& S, Assignment const& a) {
    switch (t.kind()) {
      case Term::Kind::Letter: {
        auto it = a.find(t.symbol());
        if (it == a.end()) {
          throw UnboundLetter("letter " + t.symbol() + " is unassigned");
        }
        if (it->second < 0 || it->second >= S.order()) {
          throw OutOfRangeEntry("assigned element out of range");
        }
        return it->second;
      }
      case Term::Kind::Concat: {
        auto const& f = t.factors();
        int         v = evaluate(f[0], S, a);
        for (size_t i = 1; i < f.size(); ++i) {
          v = S.mul(v, evaluate(f[i], S, a));
        }
        return v;
      }
      default:
        return table_pow(S, evaluate(t.base(), S, a), t.exponent());
    }
  }

  CompiledTerm::CompiledTerm(Term const& t, std::vector<Symbol> const& letters) {
    std::function<void(Term const&)> go = [&](Term const& u) {
      switch (u.kind()) {
        case Term::Kind::Letter: {
          auto it = std::find(letters.begin(), letters.end(), u.symbol());
          if (it == letters.end()) {
            throw UnboundLetter("letter " + u.symbol() + " is unassigned");
          }
          ops_.push_back({0, static_cast<int>(it - letters.begin()), {}});
          break;
        }
        case Term::Kind::Concat:
          for (auto const& k : u.factors()) {
            go(k);
          }
          ops_.push_back({1, static_cast<int>(u.factors().size()), {}});
          break;
        default:
          go(u.base());
          ops_.push_back({2, 0, u.exponent()});
      }
    };
    go(t);
  }

  int CompiledTerm::evaluate(FiniteSemigroup const& S,
                             std::vector<int> const& a) const {
    std::vector<int> st;
    st.reserve(ops_.size());
    for (auto const& op : ops_) {
      switch (op.kind) {
        case 0:
          st.push_back(a[op.arg]);
          break;
        case 1: {
          size_t b = st.size() - op.arg;
          int    v = st[b];
          for (size_t i = b + 1; i < st.size(); ++i) {
            v = S.mul(v, st[i]);
          }
          st.resize(b);
          st.push_back(v);
          break;
        }
        default:
          st.back() = table_pow(S, st.back(), op.exp);
      }
    }
    return st.back();
  }

  std::optional<Assignment> find_counterexample(FiniteSemigroup const& S,
                                                PseudoIdentity const&  pi) {
    auto const&  vars = pi.alphabet;
    CompiledTerm l(pi.lhs, vars), r(pi.rhs, vars);
    int          k = static_cast<int>(vars.size()), n = S.order();
    std::vector<int> a(k, 0);
    while (true) {
      if (l.evaluate(S, a) != r.evaluate(S, a)) {
        Assignment out;
        for (int i = 0; i < k; ++i) {
          out[vars[i]] = a[i];
        }
        return out;
      }
      int i = 0;
      while (i < k && ++a[i] == n) {
        a[i++] = 0;
      }
      if (i == k) {
        return std::nullopt;
      }
    }
  }

  bool satisfies(FiniteSemigroup const& S, PseudoIdentity const& pi) {
    return !find_counterexample(S, pi).has_value();
  }

}  // namespace malcev
