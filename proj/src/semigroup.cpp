#include "malcev/semigroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "malcev/error.hpp"

namespace malcev {

  struct FiniteSemigroup::Cache {
    std::once_flag             once;
    std::unique_ptr<GreenData> green;
  };

  FiniteSemigroup::FiniteSemigroup()
      : n_(1), t_{0}, cache_(std::make_shared<Cache>()) {}

  FiniteSemigroup FiniteSemigroup::trusted(int                      n,
                                           std::vector<int>         flat,
                                           std::vector<std::string> labels,
                                           std::vector<int>         gens) {
    FiniteSemigroup S;
    S.n_      = n;
    S.t_      = std::move(flat);
    S.labels_ = std::move(labels);
    S.gens_   = std::move(gens);
    S.cache_  = std::make_shared<Cache>();
    if (!S.labels_.empty() && static_cast<int>(S.labels_.size()) != n) {
      throw PreconditionViolated("label count does not match order");
    }
    return S;
  }

  std::optional<std::array<int, 3>>
  associativity_witness(int n, std::vector<int> const& t) {
    auto m = [&](int x, int y) { return t[static_cast<size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int xy = m(x, y);
        for (int z = 0; z < n; ++z) {
          if (m(xy, z) != m(x, m(y, z))) {
            return std::array<int, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup FiniteSemigroup::from_flat(int                             n,
                                             std::vector<int>                flat,
                                             std::vector<std::string> const& labels,
                                             std::vector<int> const& gens) {
    if (n <= 0 || flat.size() != static_cast<size_t>(n) * n) {
      throw OutOfRangeEntry("table must be a non-empty square matrix");
    }
    for (int v : flat) {
      if (v < 0 || v >= n) {
        throw OutOfRangeEntry("table entry " + std::to_string(v)
                              + " out of range");
      }
    }
    for (int g : gens) {
      if (g < 0 || g >= n) {
        throw OutOfRangeEntry("generator out of range");
      }
    }
    if (auto w = associativity_witness(n, flat)) {
      throw NonAssociative((*w)[0], (*w)[1], (*w)[2]);
    }
    return trusted(n, std::move(flat), labels, gens);
  }

  FiniteSemigroup FiniteSemigroup::from_table(Table const&                    table,
                                              std::vector<std::string> const& labels,
                                              std::vector<int> const& gens) {
    int              n = static_cast<int>(table.size());
    std::vector<int> flat;
    for (auto const& row : table) {
      if (static_cast<int>(row.size()) != n) {
        throw OutOfRangeEntry("table is not square");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat(n, std::move(flat), labels, gens);
  }

  Table FiniteSemigroup::table() const {
    Table out(n_, std::vector<int>(n_));
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        out[x][y] = mul(x, y);
      }
    }
    return out;
  }

  std::string FiniteSemigroup::label(int x) const {
    if (labels_.empty()) {
      return std::to_string(x);
    }
    return labels_[x];
  }

  int FiniteSemigroup::find_label(std::string const& name) const {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
      if (labels_[i] == name) {
        return i;
      }
    }
    return -1;
  }

  namespace {
    // Tarjan's algorithm, iterative; comp ids come out in reverse
    // topological order of the condensation
    template <typename Nbrs>
    std::vector<int> scc(int n, Nbrs&& nbrs, int& ncomp) {
      std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
      std::vector<char> on(n, 0);
      int               counter = 0;
      ncomp                     = 0;
      struct Frame {
        int              v;
        std::vector<int> out;
        size_t           i;
      };
      for (int s = 0; s < n; ++s) {
        if (index[s] != -1) {
          continue;
        }
        std::vector<Frame> call;
        auto               push = [&](int v) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on[v] = 1;
          call.push_back({v, nbrs(v), 0});
        };
        push(s);
        while (!call.empty()) {
          Frame& f = call.back();
          if (f.i < f.out.size()) {
            int w = f.out[f.i++];
            if (index[w] == -1) {
              push(w);
            } else if (on[w]) {
              low[f.v] = std::min(low[f.v], index[w]);
            }
            continue;
          }
          int v = f.v;
          if (low[v] == index[v]) {
            int w;
            do {
              w = stack.back();
              stack.pop_back();
              on[w]   = 0;
              comp[w] = ncomp;
            } while (w != v);
            ++ncomp;
          }
          call.pop_back();
          if (!call.empty()) {
            low[call.back().v] = std::min(low[call.back().v], low[v]);
          }
        }
      }
      return comp;
    }

    // relabel so ids appear in order of first element
    int normalize_ids(std::vector<int>& ids) {
      std::map<int, int> m;
      for (int& c : ids) {
        auto it = m.find(c);
        if (it == m.end()) {
          it = m.emplace(c, static_cast<int>(m.size())).first;
        }
        c = it->second;
      }
      return static_cast<int>(m.size());
    }

    std::vector<std::vector<int>> classes_of(std::vector<int> const& ids,
                                             int                     k) {
      std::vector<std::vector<int>> out(k);
      for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
        out[ids[i]].push_back(i);
      }
      return out;
    }

    std::unique_ptr<GreenData> compute_green(FiniteSemigroup const& S) {
      int  n = S.order();
      auto g = std::make_unique<GreenData>();
      int  nr, nl, nj;
      auto right = [&](int x) {
        std::vector<int> out(n);
        for (int s = 0; s < n; ++s) {
          out[s] = S.mul(x, s);
        }
        return out;
      };
      auto left = [&](int x) {
        std::vector<int> out(n);
        for (int s = 0; s < n; ++s) {
          out[s] = S.mul(s, x);
        }
        return out;
      };
      auto both = [&](int x) {
        std::vector<int> out(2 * n);
        for (int s = 0; s < n; ++s) {
          out[s]     = S.mul(x, s);
          out[n + s] = S.mul(s, x);
        }
        return out;
      };
      g->r_of      = scc(n, right, nr);
      g->l_of      = scc(n, left, nl);
      auto j_raw   = scc(n, both, nj);
      g->j_of      = j_raw;
      std::vector<int> h(n);
      std::map<std::pair<int, int>, int> hm;
      for (int x = 0; x < n; ++x) {
        auto key = std::make_pair(g->r_of[x], g->l_of[x]);
        auto it  = hm.find(key);
        if (it == hm.end()) {
          it = hm.emplace(key, static_cast<int>(hm.size())).first;
        }
        h[x] = it->second;
      }
      g->h_of = h;
      nr      = normalize_ids(g->r_of);
      nl      = normalize_ids(g->l_of);
      int nh  = normalize_ids(g->h_of);
      // reachability over the J condensation; raw ids are reverse
      // topological so successors have smaller ids
      std::vector<std::vector<bool>> reach(nj, std::vector<bool>(nj, false));
      std::vector<std::set<int>>     succ(nj);
      for (int x = 0; x < n; ++x) {
        for (int y : both(x)) {
          if (j_raw[y] != j_raw[x]) {
            succ[j_raw[x]].insert(j_raw[y]);
          }
        }
      }
      for (int c = 0; c < nj; ++c) {
        reach[c][c] = true;
        for (int d : succ[c]) {
          for (int e = 0; e < nj; ++e) {
            if (reach[d][e]) {
              reach[c][e] = true;
            }
          }
        }
      }
      std::vector<int> raw_to_new(nj, -1);
      {
        int next = 0;
        for (int x = 0; x < n; ++x) {
          if (raw_to_new[j_raw[x]] == -1) {
            raw_to_new[j_raw[x]] = next++;
          }
        }
      }
      for (int& c : g->j_of) {
        c = raw_to_new[c];
      }
      g->j_leq.assign(nj, std::vector<bool>(nj, false));
      for (int a = 0; a < nj; ++a) {
        for (int b = 0; b < nj; ++b) {
          // J_a <= J_b iff b reaches a
          g->j_leq[raw_to_new[a]][raw_to_new[b]] = reach[b][a];
        }
      }
      g->r_classes = classes_of(g->r_of, nr);
      g->l_classes = classes_of(g->l_of, nl);
      g->j_classes = classes_of(g->j_of, nj);
      g->h_classes = classes_of(g->h_of, nh);
      g->j_regular.assign(nj, false);
      for (int x = 0; x < n; ++x) {
        if (S.mul(x, x) == x) {
          g->j_regular[g->j_of[x]] = true;
        }
      }
      for (int c = 0; c < nj; ++c) {
        if (g->j_regular[c]) {
          g->regular_j.push_back(c);
        }
      }
      return g;
    }
  }  // namespace

  GreenData const& FiniteSemigroup::green() const {
    std::call_once(cache_->once,
                   [this] { cache_->green = compute_green(*this); });
    return *cache_->green;
  }

  GreenData const& green(FiniteSemigroup const& S) {
    return S.green();
  }

  std::vector<int> idempotents(FiniteSemigroup const& S) {
    std::vector<int> out;
    for (int x = 0; x < S.order(); ++x) {
      if (S.mul(x, x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_idempotent(FiniteSemigroup const& S, int e) {
    return e >= 0 && e < S.order() && S.mul(e, e) == e;
  }

  std::optional<int> identity_element(FiniteSemigroup const& S) {
    for (int e = 0; e < S.order(); ++e) {
      bool ok = true;
      for (int x = 0; x < S.order() && ok; ++x) {
        ok = S.mul(e, x) == x && S.mul(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool is_monoid(FiniteSemigroup const& S) {
    return identity_element(S).has_value();
  }

  bool is_commutative(FiniteSemigroup const& S) {
    for (int x = 0; x < S.order(); ++x) {
      for (int y = x + 1; y < S.order(); ++y) {
        if (S.mul(x, y) != S.mul(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_group(FiniteSemigroup const& S) {
    return idempotents(S).size() == 1 && green(S).j_classes.size() == 1;
  }

  std::pair<int, int> index_period(FiniteSemigroup const& S, int x) {
    std::vector<int> seen(S.order(), 0);
    int              p = x;
    for (int i = 1;; ++i) {
      if (seen[p] != 0) {
        return {seen[p], i - seen[p]};
      }
      seen[p] = i;
      p       = S.mul(p, x);
    }
  }

  int power(FiniteSemigroup const& S, int x, std::int64_t n) {
    if (n < 1) {
      throw PreconditionViolated("power exponent must be positive");
    }
    auto [m, r] = index_period(S, x);
    if (n > m) {
      n = m + (n - m) % r;
    }
    int p = x;
    for (std::int64_t i = 1; i < n; ++i) {
      p = S.mul(p, x);
    }
    return p;
  }

  int omega_power(FiniteSemigroup const& S, int x) {
    auto [m, r] = index_period(S, x);
    int n       = ((m + r - 1) / r) * r;
    return power(S, x, n);
  }

  FiniteSemigroup subsemigroup(FiniteSemigroup const& S,
                               std::vector<int> const& closed) {
    std::vector<int> pos(S.order(), -1);
    for (int i = 0; i < static_cast<int>(closed.size()); ++i) {
      pos[closed[i]] = i;
    }
    int              k = static_cast<int>(closed.size());
    std::vector<int> flat(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        int p = pos[S.mul(closed[i], closed[j])];
        if (p < 0) {
          throw PreconditionViolated("subset is not closed");
        }
        flat[static_cast<size_t>(i) * k + j] = p;
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      for (int x : closed) {
        labels.push_back(S.label(x));
      }
    }
    return FiniteSemigroup::trusted(k, std::move(flat), std::move(labels));
  }

  FiniteSemigroup local_monoid(FiniteSemigroup const& S, int e) {
    if (!is_idempotent(S, e)) {
      throw NotIdempotent("element " + std::to_string(e)
                          + " is not idempotent");
    }
    std::set<int> eSe;
    for (int s = 0; s < S.order(); ++s) {
      eSe.insert(S.mul(S.mul(e, s), e));
    }
    std::vector<int> elems(eSe.begin(), eSe.end());
    return subsemigroup(S, elems);
  }

  FiniteSemigroup dual(FiniteSemigroup const& S) {
    int              n = S.order();
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        flat[static_cast<size_t>(x) * n + y] = S.mul(y, x);
      }
    }
    return FiniteSemigroup::trusted(n, std::move(flat), S.labels(),
                                    S.generators());
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T) {
    int n = S.order(), m = T.order(), k = n * m;
    std::vector<int>         flat(static_cast<size_t>(k) * k);
    std::vector<std::string> labels;
    for (int a = 0; a < k; ++a) {
      labels.push_back("(" + S.label(a / m) + "," + T.label(a % m) + ")");
      for (int b = 0; b < k; ++b) {
        flat[static_cast<size_t>(a) * k + b]
            = S.mul(a / m, b / m) * m + T.mul(a % m, b % m);
      }
    }
    return FiniteSemigroup::trusted(k, std::move(flat), std::move(labels));
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    int              n = S.order(), k = n + 1;
    std::vector<int> flat(static_cast<size_t>(k) * k);
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) {
        int v;
        if (x == n) {
          v = y;
        } else if (y == n) {
          v = x;
        } else {
          v = S.mul(x, y);
        }
        flat[static_cast<size_t>(x) * k + y] = v;
      }
    }
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
      labels.push_back(S.label(x));
    }
    labels.push_back("I");
    return FiniteSemigroup::trusted(k, std::move(flat), std::move(labels));
  }

  FiniteSemigroup adjoin_one(FiniteSemigroup const& S) {
    if (is_monoid(S)) {
      return S;
    }
    return adjoin_identity(S);
  }

  FiniteSemigroup adjoin_zero(FiniteSemigroup const& S) {
    int              n = S.order(), k = n + 1;
    std::vector<int> flat(static_cast<size_t>(k) * k, n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        flat[static_cast<size_t>(x) * k + y] = S.mul(x, y);
      }
    }
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
      labels.push_back(S.label(x));
    }
    labels.push_back("0");
    return FiniteSemigroup::trusted(k, std::move(flat), std::move(labels));
  }

  std::vector<int> closure(FiniteSemigroup const& S,
                           std::vector<int> const& subset) {
    if (subset.empty()) {
      throw PreconditionViolated("cannot generate from the empty set");
    }
    std::vector<char> in(S.order(), 0);
    std::vector<int>  elems;
    for (int x : subset) {
      if (x < 0 || x >= S.order()) {
        throw OutOfRangeEntry("generator out of range");
      }
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
    for (size_t i = 0; i < elems.size(); ++i) {
      for (int g : subset) {
        int p = S.mul(elems[i], g);
        if (!in[p]) {
          in[p] = 1;
          elems.push_back(p);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  FiniteSemigroup generate(FiniteSemigroup const& S,
                           std::vector<int> const& subset) {
    auto elems = closure(S, subset);
    auto U     = subsemigroup(S, elems);
    std::vector<int> gens;
    for (int g : subset) {
      gens.push_back(static_cast<int>(
          std::lower_bound(elems.begin(), elems.end(), g) - elems.begin()));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return FiniteSemigroup::trusted(U.order(), U.flat(), U.labels(), gens);
  }

  std::vector<int> minimal_generating_set(FiniteSemigroup const& S) {
    int n = S.order();
    // elements outside S^2 are in every generating set
    std::vector<char> square(n, 0);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        square[S.mul(x, y)] = 1;
      }
    }
    std::vector<int> forced, rest;
    for (int x = 0; x < n; ++x) {
      (square[x] ? rest : forced).push_back(x);
    }
    auto generates = [&](std::vector<int> const& g) {
      return !g.empty() && static_cast<int>(closure(S, g).size()) == n;
    };
    if (generates(forced)) {
      return forced;
    }
    int r = static_cast<int>(rest.size());
    for (int k = 1; k <= r; ++k) {
      std::vector<int> pick(k);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::vector<int> g = forced;
        for (int i : pick) {
          g.push_back(rest[i]);
        }
        if (generates(g)) {
          std::sort(g.begin(), g.end());
          return g;
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == r - k + i) {
          --i;
        }
        if (i < 0) {
          break;
        }
        ++pick[i];
        for (int j = i + 1; j < k; ++j) {
          pick[j] = pick[j - 1] + 1;
        }
      }
    }
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  bool is_homomorphism(FiniteSemigroup const&  S,
                       FiniteSemigroup const&  T,
                       std::vector<int> const& f) {
    for (int x = 0; x < S.order(); ++x) {
      for (int y = 0; y < S.order(); ++y) {
        if (f[S.mul(x, y)] != T.mul(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool divides(FiniteSemigroup const& S,
               FiniteSemigroup const& T,
               SearchBudget           budget) {
    // S divides T iff for some choice of images of a generating set of S
    // the subsemigroup of T x S they generate is the graph of a function
    // on its first coordinate
    auto             gens = minimal_generating_set(S);
    int              k    = static_cast<int>(gens.size());
    int              m    = T.order();
    int              n    = S.order();
    std::uint64_t    steps = 0;
    std::vector<int> img(k, 0);
    while (true) {
      std::vector<int>  f(m, -1);
      std::vector<char> hit(n, 0);
      std::vector<std::pair<int, int>> elems;
      bool                             ok = true;
      for (int i = 0; i < k && ok; ++i) {
        int t = img[i], s = gens[i];
        if (f[t] == -1) {
          f[t] = s;
          elems.emplace_back(t, s);
        } else if (f[t] != s) {
          ok = false;
        }
      }
      for (size_t i = 0; i < elems.size() && ok; ++i) {
        for (int j = 0; j < k && ok; ++j) {
          if (++steps > budget.max_steps) {
            throw BudgetExceeded("divides search exceeded budget");
          }
          int t = T.mul(elems[i].first, img[j]);
          int s = S.mul(elems[i].second, gens[j]);
          if (f[t] == -1) {
            f[t] = s;
            elems.emplace_back(t, s);
          } else if (f[t] != s) {
            ok = false;
          }
        }
      }
      if (ok) {
        return true;
      }
      int i = 0;
      while (i < k && ++img[i] == m) {
        img[i++] = 0;
      }
      if (i == k) {
        return false;
      }
    }
  }

  FiniteSemigroup wreath_product(FiniteSemigroup const& T,
                                 FiniteSemigroup const& D,
                                 std::uint64_t          max_order) {
    int    t = T.order(), d = D.order(), pts = d + 1;
    double est = 1;
    for (int i = 0; i < pts; ++i) {
      est *= t;
    }
    est *= d;
    if (est > static_cast<double>(max_order)) {
      throw BudgetExceeded("wreath product too large");
    }
    std::int64_t nf = 1;
    for (int i = 0; i < pts; ++i) {
      nf *= t;
    }
    int k = static_cast<int>(nf * d);
    // point pts-1 is the adjoined identity of D^1
    auto act = [&](int x, int e) { return x == d ? e : D.mul(x, e); };
    std::vector<std::vector<int>> funcs(nf, std::vector<int>(pts));
    for (std::int64_t c = 0; c < nf; ++c) {
      std::int64_t v = c;
      for (int i = 0; i < pts; ++i) {
        funcs[c][i] = static_cast<int>(v % t);
        v /= t;
      }
    }
    std::vector<int> flat(static_cast<size_t>(k) * k);
    std::vector<std::int64_t> pw(pts, 1);
    for (int i = 1; i < pts; ++i) {
      pw[i] = pw[i - 1] * t;
    }
    for (int a = 0; a < k; ++a) {
      auto const& f  = funcs[a / d];
      int         da = a % d;
      for (int b = 0; b < k; ++b) {
        auto const&  g  = funcs[b / d];
        int          db = b % d;
        std::int64_t code = 0;
        for (int x = 0; x < pts; ++x) {
          code += pw[x] * T.mul(f[x], g[act(x, da)]);
        }
        flat[static_cast<size_t>(a) * k + b]
            = static_cast<int>(code * d + D.mul(da, db));
      }
    }
    return FiniteSemigroup::trusted(k, std::move(flat));
  }

  // ---------------------------------------------------------------------
  // Congruences
  // ---------------------------------------------------------------------

  Congruence::Congruence(std::vector<int> const& labels) : cls_(labels) {
    k_ = normalize_ids(cls_);
  }

  Congruence Congruence::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Congruence(v);
  }

  Congruence Congruence::universal(int n) {
    return Congruence(std::vector<int>(n, 0));
  }

  std::vector<std::vector<int>> Congruence::classes() const {
    return classes_of(cls_, k_);
  }

  bool Congruence::refines(Congruence const& o) const {
    std::vector<int> img(k_, -1);
    for (int x = 0; x < order(); ++x) {
      if (img[cls_[x]] == -1) {
        img[cls_[x]] = o.cls_[x];
      } else if (img[cls_[x]] != o.cls_[x]) {
        return false;
      }
    }
    return true;
  }

  bool Congruence::is_compatible(FiniteSemigroup const& S) const {
    if (order() != S.order()) {
      return false;
    }
    auto cl = classes();
    // enough to test against class representatives on each side
    for (auto const& c : cl) {
      for (size_t i = 1; i < c.size(); ++i) {
        for (int s = 0; s < S.order(); ++s) {
          if (cls_[S.mul(c[0], s)] != cls_[S.mul(c[i], s)]
              || cls_[S.mul(s, c[0])] != cls_[S.mul(s, c[i])]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Congruence meet(Congruence const& a, Congruence const& b) {
    std::vector<int> v(a.order());
    for (int x = 0; x < a.order(); ++x) {
      v[x] = a.class_of(x) * b.num_classes() + b.class_of(x);
    }
    return Congruence(v);
  }

  namespace {
    struct UnionFind {
      std::vector<int> p;
      explicit UnionFind(int n) : p(n) {
        std::iota(p.begin(), p.end(), 0);
      }
      int find(int x) {
        while (p[x] != x) {
          p[x] = p[p[x]];
          x    = p[x];
        }
        return x;
      }
      bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        p[std::max(a, b)] = std::min(a, b);
        return true;
      }
      std::vector<int> labels() {
        std::vector<int> v(p.size());
        for (int i = 0; i < static_cast<int>(p.size()); ++i) {
          v[i] = find(i);
        }
        return v;
      }
    };
  }  // namespace

  Congruence join(Congruence const& a, Congruence const& b) {
    UnionFind uf(a.order());
    std::vector<int> fa(a.num_classes(), -1), fb(b.num_classes(), -1);
    for (int x = 0; x < a.order(); ++x) {
      int& ra = fa[a.class_of(x)];
      int& rb = fb[b.class_of(x)];
      if (ra == -1) {
        ra = x;
      } else {
        uf.unite(ra, x);
      }
      if (rb == -1) {
        rb = x;
      } else {
        uf.unite(rb, x);
      }
    }
    return Congruence(uf.labels());
  }

  Congruence congruence_closure(FiniteSemigroup const& S,
                                std::vector<int> const& labels) {
    int                              n = S.order();
    UnionFind                        uf(n);
    std::vector<std::pair<int, int>> queue;
    std::map<int, int>               first;
    for (int x = 0; x < n; ++x) {
      auto [it, fresh] = first.emplace(labels[x], x);
      if (!fresh && uf.unite(it->second, x)) {
        queue.emplace_back(it->second, x);
      }
    }
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (int s = 0; s < n; ++s) {
        int p = S.mul(a, s), q = S.mul(b, s);
        if (uf.unite(p, q)) {
          queue.emplace_back(p, q);
        }
        p = S.mul(s, a);
        q = S.mul(s, b);
        if (uf.unite(p, q)) {
          queue.emplace_back(p, q);
        }
      }
    }
    return Congruence(uf.labels());
  }

  Congruence principal_congruence(FiniteSemigroup const& S, int a, int b) {
    std::vector<int> v(S.order());
    std::iota(v.begin(), v.end(), 0);
    v[b] = v[a];
    return congruence_closure(S, v);
  }

  FiniteSemigroup quotient(FiniteSemigroup const& S, Congruence const& c) {
    if (!c.is_compatible(S)) {
      throw IncompatiblePartition("partition is not a congruence");
    }
    int              k = c.num_classes();
    auto             cl = c.classes();
    std::vector<int> flat(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        flat[static_cast<size_t>(i) * k + j]
            = c.class_of(S.mul(cl[i][0], cl[j][0]));
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      for (auto const& cls : cl) {
        std::string l;
        for (size_t i = 0; i < cls.size(); ++i) {
          l += (i ? "|" : "") + S.label(cls[i]);
        }
        labels.push_back(cls.size() == 1 ? l : "[" + l + "]");
      }
    }
    return FiniteSemigroup::trusted(k, std::move(flat), std::move(labels));
  }

  void for_each_congruence(FiniteSemigroup const&                  S,
                           std::function<bool(Congruence const&)> f,
                           std::uint64_t                          max_count) {
    int                     n = S.order();
    std::vector<Congruence> principal;
    std::set<Congruence>    pset;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        auto c = principal_congruence(S, a, b);
        if (pset.insert(c).second) {
          principal.push_back(c);
        }
      }
    }
    std::set<Congruence>    seen;
    std::vector<Congruence> queue{Congruence::identity(n)};
    seen.insert(queue[0]);
    for (size_t i = 0; i < queue.size(); ++i) {
      if (!f(queue[i])) {
        return;
      }
      for (auto const& p : principal) {
        if (p.refines(queue[i])) {
          continue;
        }
        auto j = join(queue[i], p);
        if (seen.insert(j).second) {
          if (seen.size() > max_count) {
            throw BudgetExceeded("too many congruences");
          }
          queue.push_back(std::move(j));
        }
      }
    }
  }

  std::vector<Congruence> congruences(FiniteSemigroup const& S,
                                      std::uint64_t          max_count) {
    std::vector<Congruence> out;
    for_each_congruence(
        S,
        [&](Congruence const& c) {
          out.push_back(c);
          return true;
        },
        max_count);
    return out;
  }

}  // namespace malcev
